#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quantcat/qcat.hpp"

namespace quantcat {

/// Values of a (co)presheaf indexed by the base carrier.
using Table = std::vector<Value>;

struct Limits {
  /// Cap on the product of per-element candidate counts in presheaf enumeration.
  std::uint64_t max_enum = 1'000'000;
  /// Cap on the carrier size of any constructed (co)presheaf space.
  std::size_t max_space = 4096;

  /// Defaults, with max_enum taken from QUANTCAT_MAX_ENUM when set.
  static Limits defaults();
};

/// sigma(y) . a(x, y) <= sigma(x) for all x, y; sigma(x) in Q(|x|, s).
bool is_presheaf(const Category& x, ObjectId s, const Table& sigma);
/// a(y, x) . tau(y) <= tau(x) for all x, y; tau(x) in Q(s, |x|).
bool is_copresheaf(const Category& x, ObjectId s, const Table& tau);

/// All presheaves of type s, canonically ordered. Closure under joins of the
/// generators v . a(-, y). Throws EnumerationUnsupported / EnumerationTooLarge.
std::vector<Table> enumerate_presheaves(const Category& x, ObjectId s, const Limits& limits = Limits::defaults());
std::vector<Table> enumerate_copresheaves(const Category& x, ObjectId s, const Limits& limits = Limits::defaults());

/// tau / sigma as the meet over x of tau(x) / sigma(x); in Q(s, t).
Value presheaf_hom(const Category& x, ObjectId s, const Table& sigma, ObjectId t, const Table& tau);
/// Meet over x of tau(x) \ sigma(x); in Q(s, t).
Value copresheaf_hom(const Category& x, ObjectId s, const Table& sigma, ObjectId t, const Table& tau);

/// Join of representables a(-, x) (presheaf) or a(x, -) (copresheaf) over `generators`.
Table representable_join(const Category& x, Variance v, ObjectId s, std::span<const std::size_t> generators);
/// {x : |x| = s, 1 <= table(x)}: every representable below the table.
std::vector<std::size_t> maximal_generators(const Category& x, Variance v, ObjectId s, const Table& table);
/// Generators whose join is the table, if it is conical.
std::optional<std::vector<std::size_t>> conicality_certificate(const Category& x, Variance v, ObjectId s,
                                                                const Table& table);

/// The (co)presheaf space over `base`; conical spaces hold only joins of
/// representables. Cached by base structure. Throws EnumerationTooLarge.
CategoryPtr space_category(const CategoryPtr& base, Variance v, bool conical, const Limits& limits = Limits::defaults());
CategoryPtr presheaf_category(const CategoryPtr& x, const Limits& limits = Limits::defaults());
CategoryPtr copresheaf_category(const CategoryPtr& x, const Limits& limits = Limits::defaults());
const SpaceInfo& space_info(const Category& space);

/// Builds a functor whose value at x is the element of `space` with the given table.
/// Throws ConicalityViolation (conical space) or InvalidFunctor when missing.
Functor functor_into_space(const CategoryPtr& dom, const CategoryPtr& space,
                           const std::function<Table(std::size_t)>& table_of);

/// x |-> a(-, x) into a presheaf space over x.
Functor yoneda(const CategoryPtr& x, const CategoryPtr& space);
Functor yoneda(const CategoryPtr& x);
/// x |-> a(x, -) into a copresheaf space over x.
Functor co_yoneda(const CategoryPtr& x, const CategoryPtr& space);
Functor co_yoneda(const CategoryPtr& x);

/// (tau . phi)(x) = join over y of tau(y) . phi(x, y), for tau of type t on Y.
Table presheaf_compose(const Table& tau, ObjectId t, const Distributor& phi);
/// (phi . sigma)(y) = join over x of phi(x, y) . sigma(x), for sigma of type s on X.
Table copresheaf_compose(const Distributor& phi, const Table& sigma, ObjectId s);

/// tau |-> tau . phi, from a presheaf space over Y to one over X.
Functor presheaf_action(const Distributor& phi, const CategoryPtr& space_y, const CategoryPtr& space_x);
/// sigma |-> phi . sigma, from a copresheaf space over X to one over Y.
Functor copresheaf_action(const Distributor& phi, const CategoryPtr& space_x, const CategoryPtr& space_y);
/// y |-> phi(-, y), from Y into a presheaf space over X.
Functor presheaf_transpose(const Distributor& phi, const CategoryPtr& space_x);
/// x |-> phi(x, -), from X into a copresheaf space over Y.
Functor copresheaf_transpose(const Distributor& phi, const CategoryPtr& space_y);

std::string table_name(const Quantaloid& q, const Category& base, Variance v, ObjectId s, const Table& table);

}  // namespace quantcat
