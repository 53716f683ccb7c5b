#pragma once

#include <span>
#include <vector>

#include "quantcat/monad.hpp"

namespace quantcat {

/// Monads of conical (co)presheaves: joins of representables only.
EnrichedMonadPtr hausdorff_monad(const Limits& limits = Limits::defaults());
EnrichedMonadPtr co_hausdorff_monad(const Limits& limits = Limits::defaults());
/// Two conical layers; both throw NotCompletelyDistributive on use over a
/// quantaloid with a non-distributive hom.
EnrichedMonadPtr double_hausdorff_monad(const Limits& limits = Limits::defaults());
EnrichedMonadPtr double_co_hausdorff_monad(const Limits& limits = Limits::defaults());

CategoryPtr hausdorff_category(const CategoryPtr& x, const Limits& limits = Limits::defaults());
CategoryPtr co_hausdorff_category(const CategoryPtr& x, const Limits& limits = Limits::defaults());

/// Join of a(-, x) over x in A, of type s.
Table conical_presheaf(const Category& x, ObjectId s, std::span<const std::size_t> a);
/// Join of a(y, -) over y in B, of type s.
Table conical_copresheaf(const Category& x, ObjectId s, std::span<const std::size_t> b);
bool is_conical(const Category& x, Variance v, ObjectId s, const Table& table);

/// Meet over x in A of join over y in B of a(x, y), in Q(s, t).
Value hausdorff_hom(const Category& x, ObjectId s, std::span<const std::size_t> a, ObjectId t,
                    std::span<const std::size_t> b);
/// Meet over y in B of join over x in A of a(x, y), in Q(s, t).
Value co_hausdorff_hom(const Category& x, ObjectId s, std::span<const std::size_t> a, ObjectId t,
                       std::span<const std::size_t> b);

/// (alpha, beta) |-> meet over x in A of join over y in B of phi(x, y), on HX -|-> HY.
Distributor hausdorff_extension(const Distributor& phi, const Limits& limits = Limits::defaults());
/// (alpha, beta) |-> meet over y in B of join over x in A of phi(x, y), on H'X -|-> H'Y.
Distributor co_hausdorff_extension(const Distributor& phi, const Limits& limits = Limits::defaults());
/// Outer H over inner H-dagger, and the reverse.
Distributor double_hausdorff_extension(const Distributor& phi, const Limits& limits = Limits::defaults());
Distributor double_co_hausdorff_extension(const Distributor& phi, const Limits& limits = Limits::defaults());

struct HausdorffDistance {
  ExtRational forward;    // sup over a in A of inf over b in B of d(a, b)
  ExtRational backward;   // sup over b in B of inf over a in A of d(b, a)
  ExtRational symmetric;  // max of the two
};

/// Directed and symmetric Hausdorff distances between subsets of a Lawvere category.
HausdorffDistance hausdorff_distance(const Category& x, std::span<const std::size_t> a,
                                     std::span<const std::size_t> b);
/// The forward distance read as the inherited presheaf hom between conical presheaves.
ExtRational hausdorff_distance_via_presheaves(const Category& x, std::span<const std::size_t> a,
                                              std::span<const std::size_t> b);

}  // namespace quantcat
