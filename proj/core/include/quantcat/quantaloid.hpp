#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quantcat/lattice.hpp"
#include "quantcat/rational.hpp"
#include "quantcat/report.hpp"

namespace quantcat {

using ObjectId = std::uint32_t;

/// Handle for an element of some hom lattice Q(p, q).
///
/// For enumerable quantaloids the id is the element id in the hom lattice.
/// For the Lawvere quantale it indexes an interning pool, so equal values
/// have equal ids; the id order is not the lattice order.
struct Value {
  std::uint32_t id = 0;
  friend bool operator==(Value, Value) = default;
  friend auto operator<=>(Value, Value) = default;
};

struct ValueHash {
  std::size_t operator()(Value v) const noexcept { return std::hash<std::uint32_t>{}(v.id); }
};

/// An element together with its typing p -> q.
struct HomElement {
  ObjectId src = 0;
  ObjectId tgt = 0;
  Value value;
};

struct DistributivityFailure {
  ObjectId src = 0;
  ObjectId tgt = 0;
  std::array<Value, 3> triple{};
};

/// A small quantaloid: objects, complete-lattice homs, join-preserving
/// composition and both residuals.
///
/// Operations take the object types explicitly; composition of
/// `alpha: p -> q` with `beta: q -> r` is written `compose(p, q, r, beta, alpha)`.
class Quantaloid {
 public:
  virtual ~Quantaloid() = default;

  virtual const std::string& name() const = 0;
  virtual std::size_t object_count() const = 0;
  virtual const std::string& object_name(ObjectId p) const = 0;
  std::optional<ObjectId> find_object(std::string_view name) const;
  /// Throws UnknownElement.
  ObjectId object(std::string_view name) const;
  /// True when every hom lattice is finite and listed.
  virtual bool enumerable() const = 0;

  virtual Value bottom(ObjectId p, ObjectId q) const = 0;
  virtual Value top(ObjectId p, ObjectId q) const = 0;
  virtual bool leq(ObjectId p, ObjectId q, Value a, Value b) const = 0;
  virtual Value join(ObjectId p, ObjectId q, Value a, Value b) const = 0;
  virtual Value meet(ObjectId p, ObjectId q, Value a, Value b) const = 0;
  virtual Value unit(ObjectId p) const = 0;
  /// beta . alpha for alpha: p -> q and beta: q -> r.
  virtual Value compose(ObjectId p, ObjectId q, ObjectId r, Value beta, Value alpha) const = 0;
  /// gamma / alpha : q -> r, the largest beta with beta . alpha <= gamma.
  virtual Value left_residual(ObjectId p, ObjectId q, ObjectId r, Value gamma, Value alpha) const = 0;
  /// beta \ gamma : p -> q, the largest alpha with beta . alpha <= gamma.
  virtual Value right_residual(ObjectId p, ObjectId q, ObjectId r, Value beta, Value gamma) const = 0;

  virtual bool contains(ObjectId p, ObjectId q, Value v) const = 0;
  /// Total order on Q(p, q) used to sort enumerations canonically.
  virtual bool canonical_less(ObjectId p, ObjectId q, Value a, Value b) const = 0;
  virtual std::string format(ObjectId p, ObjectId q, Value v) const = 0;
  /// Throws UnknownElement.
  virtual Value parse(ObjectId p, ObjectId q, std::string_view text) const = 0;

  /// All elements of Q(p, q). Throws EnumerationUnsupported when not enumerable.
  virtual const std::vector<Value>& elements(ObjectId p, ObjectId q) const;
  virtual const FiniteLattice* hom_lattice(ObjectId, ObjectId) const { return nullptr; }
  /// Deterministic sample of Q(p, q); the full list when enumerable.
  virtual std::vector<Value> sample(ObjectId p, ObjectId q, std::mt19937_64& rng, std::size_t count) const;

  /// First hom lattice failing distributivity, if any.
  virtual std::optional<DistributivityFailure> distributivity_failure() const;
  bool is_completely_distributive() const { return !distributivity_failure().has_value(); }

  Value join_all(ObjectId p, ObjectId q, std::span<const Value> values) const;
  Value meet_all(ObjectId p, ObjectId q, std::span<const Value> values) const;

  /// Typed forms: check that the typings line up, throwing TypeMismatch.
  HomElement compose(const HomElement& beta, const HomElement& alpha) const;
  HomElement left_residual(const HomElement& gamma, const HomElement& alpha) const;
  HomElement right_residual(const HomElement& beta, const HomElement& gamma) const;

  void check_object(ObjectId p) const;
};

using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

/// Quantaloid given by tables: hom lattices, composition and units.
/// Residuals are tabulated at construction by scanning.
class TableQuantaloid final : public Quantaloid {
 public:
  struct Definition {
    std::string name;
    std::vector<std::string> objects;
    /// Index p * n + q.
    std::vector<FiniteLattice> homs;
    /// Index (p * n + q) * n + r; entry beta * |Q(p,q)| + alpha holds beta . alpha.
    std::vector<std::vector<ElementId>> compose;
    std::vector<ElementId> units;
  };

  explicit TableQuantaloid(Definition definition);

  const std::string& name() const override { return definition_.name; }
  std::size_t object_count() const override { return definition_.objects.size(); }
  const std::string& object_name(ObjectId p) const override;
  bool enumerable() const override { return true; }

  Value bottom(ObjectId p, ObjectId q) const override { return {hom(p, q).bottom()}; }
  Value top(ObjectId p, ObjectId q) const override { return {hom(p, q).top()}; }
  bool leq(ObjectId p, ObjectId q, Value a, Value b) const override { return hom(p, q).leq(a.id, b.id); }
  Value join(ObjectId p, ObjectId q, Value a, Value b) const override { return {hom(p, q).join(a.id, b.id)}; }
  Value meet(ObjectId p, ObjectId q, Value a, Value b) const override { return {hom(p, q).meet(a.id, b.id)}; }
  Value unit(ObjectId p) const override { return {definition_.units[p]}; }
  Value compose(ObjectId p, ObjectId q, ObjectId r, Value beta, Value alpha) const override;
  Value left_residual(ObjectId p, ObjectId q, ObjectId r, Value gamma, Value alpha) const override;
  Value right_residual(ObjectId p, ObjectId q, ObjectId r, Value beta, Value gamma) const override;

  bool contains(ObjectId p, ObjectId q, Value v) const override { return v.id < hom(p, q).size(); }
  bool canonical_less(ObjectId, ObjectId, Value a, Value b) const override { return a.id < b.id; }
  std::string format(ObjectId p, ObjectId q, Value v) const override { return hom(p, q).name(v.id); }
  Value parse(ObjectId p, ObjectId q, std::string_view text) const override;

  const std::vector<Value>& elements(ObjectId p, ObjectId q) const override;
  const FiniteLattice* hom_lattice(ObjectId p, ObjectId q) const override { return &hom(p, q); }
  std::optional<DistributivityFailure> distributivity_failure() const override;

  const Definition& definition() const noexcept { return definition_; }

 private:
  const FiniteLattice& hom(ObjectId p, ObjectId q) const { return definition_.homs[p * object_count() + q]; }
  std::size_t triple(ObjectId p, ObjectId q, ObjectId r) const {
    const std::size_t n = object_count();
    return (p * n + q) * n + r;
  }

  Definition definition_;
  std::vector<std::vector<Value>> elements_;
  std::vector<std::vector<ElementId>> left_residuals_;   // gamma * |Q(p,q)| + alpha
  std::vector<std::vector<ElementId>> right_residuals_;  // beta * |Q(p,r)| + gamma
};

/// The Lawvere quantale ([0, inf], >=, +, 0) as a one-object quantaloid.
/// Values are interned exact extended rationals.
class LawvereQuantale final : public Quantaloid {
 public:
  LawvereQuantale();

  const std::string& name() const override { return name_; }
  std::size_t object_count() const override { return 1; }
  const std::string& object_name(ObjectId p) const override;
  bool enumerable() const override { return false; }

  Value bottom(ObjectId, ObjectId) const override { return infinity_; }
  Value top(ObjectId, ObjectId) const override { return zero_; }
  bool leq(ObjectId, ObjectId, Value a, Value b) const override;
  Value join(ObjectId, ObjectId, Value a, Value b) const override;
  Value meet(ObjectId, ObjectId, Value a, Value b) const override;
  Value unit(ObjectId) const override { return zero_; }
  Value compose(ObjectId, ObjectId, ObjectId, Value beta, Value alpha) const override;
  Value left_residual(ObjectId, ObjectId, ObjectId, Value gamma, Value alpha) const override;
  Value right_residual(ObjectId, ObjectId, ObjectId, Value beta, Value gamma) const override;

  bool contains(ObjectId, ObjectId, Value v) const override;
  bool canonical_less(ObjectId, ObjectId, Value a, Value b) const override;
  std::string format(ObjectId, ObjectId, Value v) const override { return number(v).to_string(); }
  Value parse(ObjectId, ObjectId, std::string_view text) const override;

  std::vector<Value> sample(ObjectId p, ObjectId q, std::mt19937_64& rng, std::size_t count) const override;
  std::optional<DistributivityFailure> distributivity_failure() const override { return std::nullopt; }

  Value value(const ExtRational& x) const;
  const ExtRational& number(Value v) const;

 private:
  std::string name_ = "lawvere";
  std::string object_ = "*";
  mutable std::shared_mutex mutex_;
  mutable std::deque<ExtRational> pool_;
  mutable std::unordered_map<ExtRational, std::uint32_t, ExtRationalHash> ids_;
  Value zero_;
  Value infinity_;
};

/// A unital quantale on a finite lattice; `tensor[beta * n + alpha]` is beta . alpha.
struct UnitalQuantale {
  std::string name;
  FiniteLattice lattice;
  std::vector<ElementId> tensor;
  ElementId unit = 0;
};

/// One-object quantaloid of a quantale. Throws InvalidQuantaloid naming the
/// first failing axiom.
QuantaloidPtr one_object_wrap(const UnitalQuantale& v);

/// Shared instance of the Lawvere quantale.
std::shared_ptr<const LawvereQuantale> lawvere_quantale();

/// Built-ins: "2", "chain3", "lukasiewicz3", "lawvere", "m3arrow", "2obj";
/// an optional "builtin:" prefix is accepted. Throws InvalidInput.
QuantaloidPtr builtin_quantaloid(std::string_view name);
std::vector<std::string> builtin_quantaloid_names();

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 20240601;
};

/// Checks associativity, unitality, join preservation in each variable and
/// the residual adjunctions; exhaustive when enumerable, sampled otherwise.
Report verify_quantaloid(const Quantaloid& q, const VerifyOptions& options = {});

}  // namespace quantcat
