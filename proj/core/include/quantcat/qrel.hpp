#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quantcat/quantaloid.hpp"
#include "quantcat/report.hpp"

namespace quantcat {

/// A finite set with a type map into the objects of a quantaloid.
/// Elements are the integers 0..size()-1; names are labels only.
class TypedSet {
 public:
  TypedSet() = default;
  explicit TypedSet(std::vector<ObjectId> types, std::vector<std::string> names = {});
  static TypedSet uniform(std::size_t size, ObjectId type = 0);

  std::size_t size() const noexcept { return types_.size(); }
  bool empty() const noexcept { return types_.empty(); }
  ObjectId type(std::size_t i) const { return types_[i]; }
  const std::vector<ObjectId>& types() const noexcept { return types_; }
  std::string name(std::size_t i) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownElement.
  std::size_t index(std::string_view name) const;
  /// Elements of type `s`.
  std::vector<std::size_t> fiber(ObjectId s) const;

  /// Typed sets are equal when their type maps agree; names are ignored.
  friend bool operator==(const TypedSet& lhs, const TypedSet& rhs) { return lhs.types_ == rhs.types_; }

 private:
  std::vector<ObjectId> types_;
  std::vector<std::string> names_;
};

/// A Q-relation r: X -|-> Y, stored row-major; r(x, y) lies in Q(|x|, |y|).
class Relation {
 public:
  /// All entries bottom.
  Relation(QuantaloidPtr q, TypedSet src, TypedSet tgt);
  Relation(QuantaloidPtr q, TypedSet src, TypedSet tgt, std::vector<Value> entries);

  const Quantaloid& quantaloid() const noexcept { return *q_; }
  const QuantaloidPtr& quantaloid_ptr() const noexcept { return q_; }
  const TypedSet& src() const noexcept { return src_; }
  const TypedSet& tgt() const noexcept { return tgt_; }
  std::size_t rows() const noexcept { return src_.size(); }
  std::size_t cols() const noexcept { return tgt_.size(); }

  Value operator()(std::size_t x, std::size_t y) const { return entries_[x * tgt_.size() + y]; }
  /// Throws UnknownElement when `v` is not in Q(|x|, |y|).
  void set(std::size_t x, std::size_t y, Value v);
  void set_unchecked(std::size_t x, std::size_t y, Value v) { entries_[x * tgt_.size() + y] = v; }
  const std::vector<Value>& entries() const noexcept { return entries_; }

  friend bool operator==(const Relation& lhs, const Relation& rhs);
  std::size_t hash() const;

 private:
  QuantaloidPtr q_;
  TypedSet src_;
  TypedSet tgt_;
  std::vector<Value> entries_;
};

/// Diagonal units, bottom elsewhere.
Relation identity_relation(const QuantaloidPtr& q, const TypedSet& x);
/// Every entry top.
Relation top_relation(const QuantaloidPtr& q, const TypedSet& x, const TypedSet& y);
/// s . r for r: X -|-> Y and s: Y -|-> Z. Throws TypeMismatch.
Relation compose(const Relation& s, const Relation& r);
/// t / r : Y -|-> Z for t: X -|-> Z and r: X -|-> Y, the largest u with u . r <= t.
Relation left_hom(const Relation& t, const Relation& r);
/// s \ t : X -|-> Y for s: Y -|-> Z and t: X -|-> Z, the largest u with s . u <= t.
Relation right_hom(const Relation& s, const Relation& t);
Relation join(const Relation& lhs, const Relation& rhs);
Relation meet(const Relation& lhs, const Relation& rhs);
/// Pointwise order. Throws TypeMismatch for different endpoints.
bool leq(const Relation& lhs, const Relation& rhs);
/// First entry where lhs <= rhs fails.
std::optional<std::pair<std::size_t, std::size_t>> first_violation(const Relation& lhs, const Relation& rhs);
/// First entry where the relations differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Relation& lhs, const Relation& rhs);

/// A type-preserving map between typed sets.
struct TypedMap {
  TypedSet dom;
  TypedSet cod;
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
  friend bool operator==(const TypedMap& lhs, const TypedMap& rhs) = default;
};

/// Throws TypeViolation if some |f x| != |x|, InvalidInput for bad indices.
TypedMap make_typed_map(TypedSet dom, TypedSet cod, std::vector<std::size_t> image);
TypedMap identity_map(const TypedSet& x);
/// g . f. Throws TypeMismatch.
TypedMap compose(const TypedMap& g, const TypedMap& f);
/// All type-preserving maps X -> Y in lexicographic order of images.
std::vector<TypedMap> all_typed_maps(const TypedSet& x, const TypedSet& y);

/// f_o(x, y) = 1(fx, y).
Relation graph(const QuantaloidPtr& q, const TypedMap& f);
/// f^o(y, x) = 1(y, fx).
Relation cograph(const QuantaloidPtr& q, const TypedMap& f);

/// Typed set as a name array, or {"elements", "types"} when types vary.
Json typed_set_json(const Quantaloid& q, const TypedSet& x);
/// {"src", "tgt", "entries"} listing the non-bottom entries.
Json relation_json(const Relation& r);
Json typed_map_json(const TypedMap& f);

}  // namespace quantcat
