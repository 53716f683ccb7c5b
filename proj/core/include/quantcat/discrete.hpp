#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quantcat/qrel.hpp"
#include "quantcat/report.hpp"

namespace quantcat {

/// Canonical name of an element of TX as a nested set over the atoms of X.
/// Used to match carriers of two monads that should agree.
struct Label {
  std::int64_t atom = -1;
  std::vector<Label> members;

  static Label of_atom(std::size_t i);
  /// Sorts and deduplicates the members.
  static Label set_of(std::vector<Label> members);
  bool is_atom() const noexcept { return atom >= 0; }
  /// Replaces every atom i by `substitution[i]`.
  Label substitute(const std::vector<Label>& substitution) const;
  std::string to_string() const;

  friend bool operator==(const Label& lhs, const Label& rhs);
  friend bool operator<(const Label& lhs, const Label& rhs);
};

/// A monad on typed sets over a fixed quantaloid, given operationally.
class DiscreteMonad {
 public:
  virtual ~DiscreteMonad() = default;
  virtual std::string name() const = 0;
  virtual TypedSet apply(const TypedSet& x) const = 0;
  virtual TypedMap apply(const TypedMap& f) const = 0;
  virtual TypedMap unit(const TypedSet& x) const = 0;
  virtual TypedMap mult(const TypedSet& x) const = 0;
  virtual std::optional<Label> label(const TypedSet& x, std::size_t element) const = 0;
};

using DiscreteMonadPtr = std::shared_ptr<const DiscreteMonad>;

/// A map on Q-relations over a discrete monad, agreeing with it on objects.
class DiscreteLaxExtension {
 public:
  virtual ~DiscreteLaxExtension() = default;
  virtual std::string name() const = 0;
  virtual const DiscreteMonadPtr& monad() const = 0;
  virtual const QuantaloidPtr& quantaloid() const = 0;
  virtual Relation extend(const Relation& r) const = 0;
};

using DiscreteLaxExtensionPtr = std::shared_ptr<const DiscreteLaxExtension>;

struct DiscreteLimits {
  /// Largest |X| accepted by the powerset monad.
  std::size_t max_powerset_base = 16;
  /// Largest |X| accepted by the up-set monad.
  std::size_t max_upset_base = 4;
};

DiscreteMonadPtr discrete_identity_monad();
/// Powerset monad over a one-object quantaloid; subsets are bitmasks.
DiscreteMonadPtr powerset_monad(const DiscreteLimits& limits = {});
/// Up-sets of (PX, subset order); up-sets are bitmasks over subset bitmasks.
DiscreteMonadPtr upset_monad(const DiscreteLimits& limits = {});

/// r itself.
DiscreteLaxExtensionPtr identity_extension(const QuantaloidPtr& q);
/// Bottom stays bottom, everything else becomes top.
DiscreteLaxExtensionPtr collapse_extension(const QuantaloidPtr& q);
/// (A, B) |-> meet over x in A of join over y in B of r(x, y).
DiscreteLaxExtensionPtr powerset_kleisli_extension(const QuantaloidPtr& q, const DiscreteLimits& limits = {});
/// (A, B) |-> meet over y in B of join over x in A of r(x, y).
DiscreteLaxExtensionPtr powerset_hat_extension(const QuantaloidPtr& q, const DiscreteLimits& limits = {});
/// (a, b) |-> meet over A in a, join over B in b, meet over y in B, join over x in A of r(x, y).
DiscreteLaxExtensionPtr upset_all_sources_extension(const QuantaloidPtr& q, const DiscreteLimits& limits = {});
/// (a, b) |-> meet over B in b, join over A in a, meet over x in A, join over y in B of r(x, y).
DiscreteLaxExtensionPtr upset_all_targets_extension(const QuantaloidPtr& q, const DiscreteLimits& limits = {});

/// Extension given by a function; used for fixtures and discretization.
DiscreteLaxExtensionPtr function_extension(std::string name, DiscreteMonadPtr monad, QuantaloidPtr q,
                                           std::function<Relation(const Relation&)> extend);

/// Typed sets, maps and relations on which discrete laws are checked.
struct DiscreteCorpus {
  QuantaloidPtr q;
  std::vector<TypedSet> sets;
  /// Keyed by (source set index, target set index).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Relation>> relations;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<TypedMap>> maps;
  bool sampled = false;
  std::vector<std::string> notices;
};

struct DiscreteCorpusOptions {
  /// Sets of size 0..max_size with uniform type 0 (plus mixed types for multi-object Q).
  std::size_t max_size = 2;
  /// Relations per endpoint pair; exhaustive when the full space fits.
  std::size_t max_relations_per_pair = 512;
  /// Values drawn for intensional quantaloids.
  std::vector<std::string> value_pool = {"0", "1/2", "1", "2", "3", "inf"};
  std::uint64_t seed = 7;
};

/// Throws CorpusTooLarge when max_size exceeds 8.
DiscreteCorpus make_discrete_corpus(const QuantaloidPtr& q, const DiscreteCorpusOptions& options = {});

struct DiscreteCheckOptions {
  /// Associativity needs TTTX; it is skipped above this |TTX|.
  std::size_t max_associativity_carrier = 256;
  /// Oplax multiplication extends relations on TX; skipped above this |TTX|.
  std::size_t max_oplax_mult_carrier = 16;
  /// Composable pairs checked for lax functoriality per triple of sets.
  std::size_t max_pairs = 4096;
  /// Record flatness (T^ 1_X = 1_TX) as a law; otherwise it is reported as a notice.
  bool require_flat = false;
};

Report check_discrete_monad(const DiscreteMonad& t, const DiscreteCorpus& corpus,
                            const DiscreteCheckOptions& options = {});
/// Monotonicity, lax functoriality, graph inequalities, whiskering equalities,
/// oplax unit and multiplication, and flatness.
Report check_discrete_lax_extension(const DiscreteLaxExtension& e, const DiscreteCorpus& corpus,
                                    const DiscreteCheckOptions& options = {});

/// First corpus relation on which two extensions of the same monad differ.
std::optional<Json> extension_difference(const DiscreteLaxExtension& a, const DiscreteLaxExtension& b,
                                         const DiscreteCorpus& corpus);

}  // namespace quantcat
