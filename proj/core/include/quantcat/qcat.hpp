#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quantcat/qrel.hpp"

namespace quantcat {

struct SpaceInfo;

enum class Variance { presheaf, copresheaf };

/// A Q-category (X, a): a typed set with a reflexive, transitive hom matrix.
/// Immutable once built; shared through CategoryPtr.
class Category {
 public:
  /// Unchecked; use check_category or make_category to validate.
  Category(TypedSet carrier, Relation hom, std::shared_ptr<const SpaceInfo> space = nullptr);

  const TypedSet& carrier() const noexcept { return carrier_; }
  const Relation& hom() const noexcept { return hom_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  ObjectId type(std::size_t x) const { return carrier_.type(x); }
  Value operator()(std::size_t x, std::size_t y) const { return hom_(x, y); }
  const Quantaloid& quantaloid() const noexcept { return hom_.quantaloid(); }
  const QuantaloidPtr& quantaloid_ptr() const noexcept { return hom_.quantaloid_ptr(); }
  /// Set when the category was built as a (co)presheaf space over a base.
  const SpaceInfo* space() const noexcept { return space_.get(); }
  std::size_t hash() const noexcept { return hash_; }

 private:
  TypedSet carrier_;
  Relation hom_;
  std::shared_ptr<const SpaceInfo> space_;
  std::size_t hash_ = 0;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Data of a category whose elements are (co)presheaves on a base category.
struct SpaceInfo {
  CategoryPtr base;
  Variance variance = Variance::presheaf;
  bool conical = false;
  /// Value table of each element over the base carrier.
  std::vector<std::vector<Value>> tables;
  /// Canonical maximal generating set of each element; conical spaces only.
  std::vector<std::vector<std::size_t>> generators;

  void build_index(const std::vector<ObjectId>& types);
  std::optional<std::size_t> find(ObjectId type, const std::vector<Value>& table) const;

 private:
  std::vector<ObjectId> types_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

std::size_t table_hash(ObjectId type, const std::vector<Value>& table);

/// Structural equality: same types, same hom, same space data.
bool same_category(const Category& lhs, const Category& rhs);
bool same_category(const CategoryPtr& lhs, const CategoryPtr& rhs);

struct CategoryViolation {
  enum class Kind { reflexivity, transitivity };
  Kind kind = Kind::reflexivity;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

struct CategoryCheck {
  CategoryPtr category;
  std::optional<CategoryViolation> violation;
};

/// Validated category or the first failing element/triple.
CategoryCheck check_category(const Relation& a);
/// Throws InvalidCategory with the violation.
CategoryPtr make_category(const Relation& a);
/// (X, identity relation).
CategoryPtr discrete_category(const QuantaloidPtr& q, const TypedSet& x);
Json violation_json(const Category& candidate, const CategoryViolation& v);

/// x <= y iff |x| = |y| and 1 <= a(x, y).
struct Preorder {
  std::size_t size = 0;
  std::vector<char> table;
  bool operator()(std::size_t x, std::size_t y) const { return table[x * size + y] != 0; }
};
Preorder underlying_order(const Category& x);

struct Functor {
  CategoryPtr dom;
  CategoryPtr cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  TypedMap as_map() const { return TypedMap{dom->carrier(), cod->carrier(), map}; }
};

/// Validates type preservation and a(x, x') <= b(fx, fx'). Throws InvalidFunctor / TypeViolation.
Functor make_functor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> map);
Functor identity_functor(const CategoryPtr& x);
/// g . f. Throws TypeMismatch.
Functor compose(const Functor& g, const Functor& f);
bool same_functor(const Functor& lhs, const Functor& rhs);
/// Pointwise order in the codomain: f x <= g x for all x.
bool functor_leq(const Functor& f, const Functor& g);

/// The four functoriality conditions evaluated independently.
struct FunctorConditions {
  bool graph_lax = false;     // f_o . a <= b . f_o
  bool cograph_lax = false;   // a . f^o <= f^o . b
  bool sandwich = false;      // a <= f^o . b . f_o
  bool pointwise = false;     // a(x, x') <= b(fx, fx')
  bool agree() const { return graph_lax == cograph_lax && cograph_lax == sandwich && sandwich == pointwise; }
  bool all() const { return graph_lax && cograph_lax && sandwich && pointwise; }
};
/// Works for any type-preserving map, functorial or not.
FunctorConditions check_functor_all_conditions(const Functor& f);
bool is_functor(const Functor& f);
/// f^* . f_* = a, and a(x, y) = b(fx, fy); throws std::logic_error if the two disagree.
bool is_fully_faithful(const Functor& f);

/// A Q-distributor phi: (X, a) -|-> (Y, b), a relation with b . phi . a <= phi.
class Distributor {
 public:
  Distributor(CategoryPtr dom, CategoryPtr cod, Relation rel);

  const CategoryPtr& dom() const noexcept { return dom_; }
  const CategoryPtr& cod() const noexcept { return cod_; }
  const Relation& rel() const noexcept { return rel_; }
  Value operator()(std::size_t x, std::size_t y) const { return rel_(x, y); }
  /// b . phi . a <= phi, evaluated once and cached.
  bool valid() const;

 private:
  CategoryPtr dom_;
  CategoryPtr cod_;
  Relation rel_;
  std::shared_ptr<std::atomic<int>> validity_;
};

bool same_distributor(const Distributor& lhs, const Distributor& rhs);
/// Throws InvalidDistributor.
Distributor make_distributor(CategoryPtr dom, CategoryPtr cod, Relation rel);
/// The hom a as the identity distributor on (X, a).
Distributor identity_distributor(const CategoryPtr& x);
/// f_* = b . f_o : X -|-> Y.
Distributor lower_star(const Functor& f);
/// f^* = f^o . b : Y -|-> X.
Distributor upper_star(const Functor& f);
/// psi . phi.
Distributor compose(const Distributor& psi, const Distributor& phi);
/// t / r and s \ t on distributors.
Distributor left_hom(const Distributor& t, const Distributor& r);
Distributor right_hom(const Distributor& s, const Distributor& t);
/// b . r . a; a distributor for every relation r since a and b are idempotent.
Distributor distributor_closure(const CategoryPtr& dom, const CategoryPtr& cod, const Relation& r);
bool leq(const Distributor& lhs, const Distributor& rhs);

}  // namespace quantcat
