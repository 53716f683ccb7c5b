#include "quantcat/qcat.hpp"

#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"

namespace quantcat {

// ---------------------------------------------------------------------------
// SpaceInfo

std::size_t table_hash(ObjectId type, const std::vector<Value>& table) {
  std::size_t seed = type;
  for (Value v : table) boost::hash_combine(seed, v.id);
  return seed;
}

void SpaceInfo::build_index(const std::vector<ObjectId>& types) {
  types_ = types;
  index_.clear();
  index_.reserve(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) index_.emplace(table_hash(types_[i], tables[i]), i);
}

std::optional<std::size_t> SpaceInfo::find(ObjectId type, const std::vector<Value>& table) const {
  auto [lo, hi] = index_.equal_range(table_hash(type, table));
  for (auto it = lo; it != hi; ++it) {
    if (types_[it->second] == type && tables[it->second] == table) return it->second;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Category

Category::Category(TypedSet carrier, Relation hom, std::shared_ptr<const SpaceInfo> space)
    : carrier_(std::move(carrier)), hom_(std::move(hom)), space_(std::move(space)) {
  if (!(hom_.src() == carrier_) || !(hom_.tgt() == carrier_)) {
    throw Error(ErrorCode::type_mismatch, "category hom must be an endo-relation on its carrier");
  }
  hash_ = hom_.hash();
  if (space_) {
    boost::hash_combine(hash_, static_cast<int>(space_->variance));
    boost::hash_combine(hash_, space_->conical);
  }
}

bool same_category(const Category& lhs, const Category& rhs) {
  if (&lhs == &rhs) return true;
  if (lhs.hash() != rhs.hash()) return false;
  if (!(lhs.hom() == rhs.hom())) return false;
  const SpaceInfo* a = lhs.space();
  const SpaceInfo* b = rhs.space();
  if ((a == nullptr) != (b == nullptr)) return false;
  if (a == nullptr) return true;
  return a->variance == b->variance && a->conical == b->conical && a->tables == b->tables &&
         same_category(a->base, b->base);
}

bool same_category(const CategoryPtr& lhs, const CategoryPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return same_category(*lhs, *rhs);
}

CategoryCheck check_category(const Relation& a) {
  if (!(a.src() == a.tgt())) throw Error(ErrorCode::type_mismatch, "category hom must be an endo-relation");
  const Quantaloid& q = a.quantaloid();
  const TypedSet& xs = a.src();
  const std::size_t n = xs.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!q.leq(xs.type(x), xs.type(x), q.unit(xs.type(x)), a(x, x))) {
      return {nullptr, CategoryViolation{CategoryViolation::Kind::reflexivity, x, x, x}};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Value c = q.compose(xs.type(x), xs.type(y), xs.type(z), a(y, z), a(x, y));
        if (!q.leq(xs.type(x), xs.type(z), c, a(x, z))) {
          return {nullptr, CategoryViolation{CategoryViolation::Kind::transitivity, x, y, z}};
        }
      }
    }
  }
  return {std::make_shared<const Category>(xs, a), std::nullopt};
}

Json violation_json(const Category& candidate, const CategoryViolation& v) {
  const TypedSet& xs = candidate.carrier();
  if (v.kind == CategoryViolation::Kind::reflexivity) {
    return Json{{"law", "reflexivity"}, {"x", xs.name(v.x)}};
  }
  return Json{{"law", "transitivity"}, {"x", xs.name(v.x)}, {"y", xs.name(v.y)}, {"z", xs.name(v.z)}};
}

CategoryPtr make_category(const Relation& a) {
  CategoryCheck check = check_category(a);
  if (check.violation) {
    const Category candidate(a.src(), a);
    throw Error(ErrorCode::invalid_category, violation_json(candidate, *check.violation).dump());
  }
  return check.category;
}

CategoryPtr discrete_category(const QuantaloidPtr& q, const TypedSet& x) {
  return std::make_shared<const Category>(x, identity_relation(q, x));
}

Preorder underlying_order(const Category& x) {
  const Quantaloid& q = x.quantaloid();
  Preorder order;
  order.size = x.size();
  order.table.assign(x.size() * x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const ObjectId t = x.type(i);
      order.table[i * x.size() + j] = x.type(j) == t && q.leq(t, t, q.unit(t), x(i, j)) ? 1 : 0;
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Functors

namespace {

void require_type_preserving(const Category& dom, const Category& cod, const std::vector<std::size_t>& map) {
  if (map.size() != dom.size()) throw Error(ErrorCode::invalid_functor, "functor map has the wrong length");
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (map[x] >= cod.size()) throw Error(ErrorCode::invalid_functor, "functor image out of range");
    if (cod.type(map[x]) != dom.type(x)) {
      throw Error(ErrorCode::type_violation, "functor sends " + dom.carrier().name(x) + " to a different type");
    }
  }
}

}  // namespace

Functor make_functor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> map) {
  require_type_preserving(*dom, *cod, map);
  Functor f{std::move(dom), std::move(cod), std::move(map)};
  if (!is_functor(f)) throw Error(ErrorCode::invalid_functor, "map does not satisfy a(x, x') <= b(fx, fx')");
  return f;
}

Functor identity_functor(const CategoryPtr& x) {
  std::vector<std::size_t> map(x->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return Functor{x, x, std::move(map)};
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.cod, g.dom)) throw Error(ErrorCode::type_mismatch, "composite of non-composable functors");
  std::vector<std::size_t> map(f.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.map[f.map[x]];
  return Functor{f.dom, g.cod, std::move(map)};
}

bool same_functor(const Functor& lhs, const Functor& rhs) {
  return lhs.map == rhs.map && same_category(lhs.dom, rhs.dom) && same_category(lhs.cod, rhs.cod);
}

bool functor_leq(const Functor& f, const Functor& g) {
  const Category& cod = *f.cod;
  const Quantaloid& q = cod.quantaloid();
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    const ObjectId t = f.dom->type(x);
    if (!q.leq(t, t, q.unit(t), cod(f.map[x], g.map[x]))) return false;
  }
  return true;
}

FunctorConditions check_functor_all_conditions(const Functor& f) {
  require_type_preserving(*f.dom, *f.cod, f.map);
  const QuantaloidPtr& q = f.dom->quantaloid_ptr();
  const TypedMap m = f.as_map();
  const Relation& a = f.dom->hom();
  const Relation& b = f.cod->hom();
  const Relation g = graph(q, m);
  const Relation c = cograph(q, m);
  FunctorConditions out;
  out.graph_lax = leq(compose(g, a), compose(b, g));
  out.cograph_lax = leq(compose(a, c), compose(c, b));
  out.sandwich = leq(a, compose(c, compose(b, g)));
  out.pointwise = is_functor(f);
  return out;
}

bool is_functor(const Functor& f) {
  const Category& a = *f.dom;
  const Category& b = *f.cod;
  const Quantaloid& q = a.quantaloid();
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (!q.leq(a.type(x), a.type(y), a(x, y), b(f.map[x], f.map[y]))) return false;
    }
  }
  return true;
}

bool is_fully_faithful(const Functor& f) {
  const Category& a = *f.dom;
  const Category& b = *f.cod;
  bool pointwise = true;
  for (std::size_t x = 0; x < a.size() && pointwise; ++x) {
    for (std::size_t y = 0; y < a.size() && pointwise; ++y) pointwise = a(x, y) == b(f.map[x], f.map[y]);
  }
  const bool composite = compose(upper_star(f), lower_star(f)).rel() == a.hom();
  if (pointwise != composite) throw std::logic_error("full fidelity characterizations disagree");
  return pointwise;
}

// ---------------------------------------------------------------------------
// Distributors

Distributor::Distributor(CategoryPtr dom, CategoryPtr cod, Relation rel)
    : dom_(std::move(dom)), cod_(std::move(cod)), rel_(std::move(rel)),
      validity_(std::make_shared<std::atomic<int>>(-1)) {
  if (!(rel_.src() == dom_->carrier()) || !(rel_.tgt() == cod_->carrier())) {
    throw Error(ErrorCode::type_mismatch, "distributor relation does not match its endpoint carriers");
  }
}

bool Distributor::valid() const {
  int state = validity_->load(std::memory_order_acquire);
  if (state < 0) {
    const Relation closed = compose(cod_->hom(), compose(rel_, dom_->hom()));
    state = leq(closed, rel_) ? 1 : 0;
    validity_->store(state, std::memory_order_release);
  }
  return state == 1;
}

bool same_distributor(const Distributor& lhs, const Distributor& rhs) {
  return lhs.rel() == rhs.rel() && same_category(lhs.dom(), rhs.dom()) && same_category(lhs.cod(), rhs.cod());
}

Distributor make_distributor(CategoryPtr dom, CategoryPtr cod, Relation rel) {
  Distributor d(std::move(dom), std::move(cod), std::move(rel));
  if (!d.valid()) throw Error(ErrorCode::invalid_distributor, "relation is not compatible with its endpoint homs");
  return d;
}

Distributor identity_distributor(const CategoryPtr& x) { return Distributor(x, x, x->hom()); }

Distributor lower_star(const Functor& f) {
  const Category& b = *f.cod;
  Relation r(f.dom->quantaloid_ptr(), f.dom->carrier(), b.carrier());
  for (std::size_t x = 0; x < f.dom->size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) r.set_unchecked(x, y, b(f.map[x], y));
  }
  return Distributor(f.dom, f.cod, std::move(r));
}

Distributor upper_star(const Functor& f) {
  const Category& b = *f.cod;
  Relation r(f.dom->quantaloid_ptr(), b.carrier(), f.dom->carrier());
  for (std::size_t y = 0; y < b.size(); ++y) {
    for (std::size_t x = 0; x < f.dom->size(); ++x) r.set_unchecked(y, x, b(y, f.map[x]));
  }
  return Distributor(f.cod, f.dom, std::move(r));
}

Distributor compose(const Distributor& psi, const Distributor& phi) {
  if (!same_category(phi.cod(), psi.dom())) throw Error(ErrorCode::type_mismatch, "composite of non-composable distributors");
  return Distributor(phi.dom(), psi.cod(), compose(psi.rel(), phi.rel()));
}

Distributor left_hom(const Distributor& t, const Distributor& r) {
  if (!same_category(t.dom(), r.dom())) throw Error(ErrorCode::type_mismatch, "left hom needs a shared domain");
  return Distributor(r.cod(), t.cod(), left_hom(t.rel(), r.rel()));
}

Distributor right_hom(const Distributor& s, const Distributor& t) {
  if (!same_category(s.cod(), t.cod())) throw Error(ErrorCode::type_mismatch, "right hom needs a shared codomain");
  return Distributor(t.dom(), s.dom(), right_hom(s.rel(), t.rel()));
}

Distributor distributor_closure(const CategoryPtr& dom, const CategoryPtr& cod, const Relation& r) {
  return Distributor(dom, cod, compose(cod->hom(), compose(r, dom->hom())));
}

bool leq(const Distributor& lhs, const Distributor& rhs) { return leq(lhs.rel(), rhs.rel()); }

}  // namespace quantcat
