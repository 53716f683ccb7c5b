#include "quantcat/hausdorff.hpp"

#include "quantcat/error.hpp"

namespace quantcat {

EnrichedMonadPtr hausdorff_monad(const Limits& limits) { return monad_by_name("H", limits); }
EnrichedMonadPtr co_hausdorff_monad(const Limits& limits) { return monad_by_name("Hdagger", limits); }
EnrichedMonadPtr double_hausdorff_monad(const Limits& limits) { return monad_by_name("HHdagger", limits); }
EnrichedMonadPtr double_co_hausdorff_monad(const Limits& limits) { return monad_by_name("HdaggerH", limits); }

CategoryPtr hausdorff_category(const CategoryPtr& x, const Limits& limits) {
  return space_category(x, Variance::presheaf, true, limits);
}

CategoryPtr co_hausdorff_category(const CategoryPtr& x, const Limits& limits) {
  return space_category(x, Variance::copresheaf, true, limits);
}

Table conical_presheaf(const Category& x, ObjectId s, std::span<const std::size_t> a) {
  return representable_join(x, Variance::presheaf, s, a);
}

Table conical_copresheaf(const Category& x, ObjectId s, std::span<const std::size_t> b) {
  return representable_join(x, Variance::copresheaf, s, b);
}

bool is_conical(const Category& x, Variance v, ObjectId s, const Table& table) {
  return conicality_certificate(x, v, s, table).has_value();
}

Value hausdorff_hom(const Category& x, ObjectId s, std::span<const std::size_t> a, ObjectId t,
                    std::span<const std::size_t> b) {
  const Quantaloid& q = x.quantaloid();
  Value acc = q.top(s, t);
  for (std::size_t i : a) {
    Value inner = q.bottom(s, t);
    for (std::size_t j : b) inner = q.join(s, t, inner, x(i, j));
    acc = q.meet(s, t, acc, inner);
  }
  return acc;
}

Value co_hausdorff_hom(const Category& x, ObjectId s, std::span<const std::size_t> a, ObjectId t,
                       std::span<const std::size_t> b) {
  const Quantaloid& q = x.quantaloid();
  Value acc = q.top(s, t);
  for (std::size_t j : b) {
    Value inner = q.bottom(s, t);
    for (std::size_t i : a) inner = q.join(s, t, inner, x(i, j));
    acc = q.meet(s, t, acc, inner);
  }
  return acc;
}

namespace {

// Entry (alpha, beta) from the generator sets of alpha and beta.
template <class F>
Distributor generator_extension(const Distributor& phi, const CategoryPtr& hx, const CategoryPtr& hy, F&& entry) {
  const SpaceInfo& ix = space_info(*hx);
  const SpaceInfo& iy = space_info(*hy);
  Relation r(phi.dom()->quantaloid_ptr(), hx->carrier(), hy->carrier());
  for (std::size_t a = 0; a < hx->size(); ++a) {
    for (std::size_t b = 0; b < hy->size(); ++b) {
      r.set_unchecked(a, b, entry(hx->type(a), ix.generators[a], hy->type(b), iy.generators[b]));
    }
  }
  return Distributor(hx, hy, std::move(r));
}

}  // namespace

Distributor hausdorff_extension(const Distributor& phi, const Limits& limits) {
  const Quantaloid& q = phi.dom()->quantaloid();
  return generator_extension(phi, hausdorff_category(phi.dom(), limits), hausdorff_category(phi.cod(), limits),
                             [&](ObjectId s, const auto& as, ObjectId t, const auto& bs) {
                               Value acc = q.top(s, t);
                               for (std::size_t x : as) {
                                 Value inner = q.bottom(s, t);
                                 for (std::size_t y : bs) inner = q.join(s, t, inner, phi(x, y));
                                 acc = q.meet(s, t, acc, inner);
                               }
                               return acc;
                             });
}

Distributor co_hausdorff_extension(const Distributor& phi, const Limits& limits) {
  const Quantaloid& q = phi.dom()->quantaloid();
  return generator_extension(phi, co_hausdorff_category(phi.dom(), limits),
                             co_hausdorff_category(phi.cod(), limits),
                             [&](ObjectId s, const auto& as, ObjectId t, const auto& bs) {
                               Value acc = q.top(s, t);
                               for (std::size_t y : bs) {
                                 Value inner = q.bottom(s, t);
                                 for (std::size_t x : as) inner = q.join(s, t, inner, phi(x, y));
                                 acc = q.meet(s, t, acc, inner);
                               }
                               return acc;
                             });
}

Distributor double_hausdorff_extension(const Distributor& phi, const Limits& limits) {
  return hausdorff_extension(co_hausdorff_extension(phi, limits), limits);
}

Distributor double_co_hausdorff_extension(const Distributor& phi, const Limits& limits) {
  return co_hausdorff_extension(hausdorff_extension(phi, limits), limits);
}

namespace {

const LawvereQuantale& require_lawvere(const Category& x) {
  const auto* q = dynamic_cast<const LawvereQuantale*>(&x.quantaloid());
  if (q == nullptr) throw Error(ErrorCode::type_mismatch, "Hausdorff distance needs a Lawvere category");
  return *q;
}

ExtRational directed(const Category& x, std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const LawvereQuantale& q = require_lawvere(x);
  ExtRational sup(0);
  for (std::size_t i : a) {
    ExtRational inf = ExtRational::infinity();
    for (std::size_t j : b) {
      const ExtRational& d = q.number(x(i, j));
      if (d < inf) inf = d;
    }
    if (sup < inf) sup = inf;
  }
  return sup;
}

}  // namespace

HausdorffDistance hausdorff_distance(const Category& x, std::span<const std::size_t> a,
                                     std::span<const std::size_t> b) {
  HausdorffDistance d;
  d.forward = directed(x, a, b);
  d.backward = directed(x, b, a);
  d.symmetric = d.forward < d.backward ? d.backward : d.forward;
  return d;
}

ExtRational hausdorff_distance_via_presheaves(const Category& x, std::span<const std::size_t> a,
                                              std::span<const std::size_t> b) {
  const LawvereQuantale& q = require_lawvere(x);
  const Table alpha = conical_presheaf(x, 0, a);
  const Table beta = conical_presheaf(x, 0, b);
  return q.number(presheaf_hom(x, 0, alpha, 0, beta));
}

}  // namespace quantcat
