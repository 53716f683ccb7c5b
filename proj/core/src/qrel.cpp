#include "quantcat/qrel.hpp"

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"

namespace quantcat {

// ---------------------------------------------------------------------------
// TypedSet

TypedSet::TypedSet(std::vector<ObjectId> types, std::vector<std::string> names)
    : types_(std::move(types)), names_(std::move(names)) {
  if (!names_.empty() && names_.size() != types_.size()) {
    throw Error(ErrorCode::invalid_input, "typed set has " + std::to_string(types_.size()) + " types but " +
                                              std::to_string(names_.size()) + " names");
  }
}

TypedSet TypedSet::uniform(std::size_t size, ObjectId type) { return TypedSet(std::vector<ObjectId>(size, type)); }

std::string TypedSet::name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return std::to_string(i);
}

std::optional<std::size_t> TypedSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (this->name(i) == name) return i;
  }
  return std::nullopt;
}

std::size_t TypedSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::unknown_element, "'" + std::string(name) + "' is not an element of the typed set");
}

std::vector<std::size_t> TypedSet::fiber(ObjectId s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (types_[i] == s) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relation

namespace {

void require_same_quantaloid(const Relation& a, const Relation& b) {
  if (a.quantaloid_ptr() != b.quantaloid_ptr()) {
    throw Error(ErrorCode::type_mismatch, "relations over different quantaloids");
  }
}

void require_same_endpoints(const Relation& a, const Relation& b) {
  require_same_quantaloid(a, b);
  if (!(a.src() == b.src()) || !(a.tgt() == b.tgt())) {
    throw Error(ErrorCode::type_mismatch, "relations with different endpoints");
  }
}

}  // namespace

Relation::Relation(QuantaloidPtr q, TypedSet src, TypedSet tgt)
    : q_(std::move(q)), src_(std::move(src)), tgt_(std::move(tgt)) {
  for (ObjectId t : src_.types()) q_->check_object(t);
  for (ObjectId t : tgt_.types()) q_->check_object(t);
  entries_.resize(src_.size() * tgt_.size());
  for (std::size_t x = 0; x < src_.size(); ++x) {
    for (std::size_t y = 0; y < tgt_.size(); ++y) entries_[x * tgt_.size() + y] = q_->bottom(src_.type(x), tgt_.type(y));
  }
}

Relation::Relation(QuantaloidPtr q, TypedSet src, TypedSet tgt, std::vector<Value> entries)
    : q_(std::move(q)), src_(std::move(src)), tgt_(std::move(tgt)), entries_(std::move(entries)) {
  if (entries_.size() != src_.size() * tgt_.size()) {
    throw Error(ErrorCode::invalid_input, "relation entry count does not match its endpoints");
  }
}

void Relation::set(std::size_t x, std::size_t y, Value v) {
  if (x >= rows() || y >= cols()) throw Error(ErrorCode::unknown_element, "relation index out of range");
  if (!q_->contains(src_.type(x), tgt_.type(y), v)) {
    throw Error(ErrorCode::type_mismatch, "entry (" + src_.name(x) + ", " + tgt_.name(y) + ") lies outside Q(" +
                                              q_->object_name(src_.type(x)) + ", " + q_->object_name(tgt_.type(y)) +
                                              ")");
  }
  entries_[x * tgt_.size() + y] = v;
}

bool operator==(const Relation& lhs, const Relation& rhs) {
  return lhs.q_ == rhs.q_ && lhs.src_ == rhs.src_ && lhs.tgt_ == rhs.tgt_ && lhs.entries_ == rhs.entries_;
}

std::size_t Relation::hash() const {
  std::size_t seed = boost::hash_range(src_.types().begin(), src_.types().end());
  boost::hash_combine(seed, boost::hash_range(tgt_.types().begin(), tgt_.types().end()));
  for (Value v : entries_) boost::hash_combine(seed, v.id);
  return seed;
}

Relation identity_relation(const QuantaloidPtr& q, const TypedSet& x) {
  Relation r(q, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) r.set_unchecked(i, i, q->unit(x.type(i)));
  return r;
}

Relation top_relation(const QuantaloidPtr& q, const TypedSet& x, const TypedSet& y) {
  Relation r(q, x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) r.set_unchecked(i, j, q->top(x.type(i), y.type(j)));
  }
  return r;
}

Relation compose(const Relation& s, const Relation& r) {
  require_same_quantaloid(s, r);
  if (!(r.tgt() == s.src())) throw Error(ErrorCode::type_mismatch, "composite of relations without a shared middle");
  const Quantaloid& q = r.quantaloid();
  const TypedSet& xs = r.src();
  const TypedSet& ys = r.tgt();
  const TypedSet& zs = s.tgt();
  Relation out(r.quantaloid_ptr(), xs, zs);
  for (std::size_t x = 0; x < xs.size(); ++x) {
    const ObjectId px = xs.type(x);
    for (std::size_t z = 0; z < zs.size(); ++z) {
      const ObjectId pz = zs.type(z);
      Value acc = q.bottom(px, pz);
      for (std::size_t y = 0; y < ys.size(); ++y) {
        acc = q.join(px, pz, acc, q.compose(px, ys.type(y), pz, s(y, z), r(x, y)));
      }
      out.set_unchecked(x, z, acc);
    }
  }
  return out;
}

Relation left_hom(const Relation& t, const Relation& r) {
  require_same_quantaloid(t, r);
  if (!(t.src() == r.src())) throw Error(ErrorCode::type_mismatch, "left hom of relations without a shared source");
  const Quantaloid& q = r.quantaloid();
  const TypedSet& xs = r.src();
  const TypedSet& ys = r.tgt();
  const TypedSet& zs = t.tgt();
  Relation out(r.quantaloid_ptr(), ys, zs);
  for (std::size_t y = 0; y < ys.size(); ++y) {
    for (std::size_t z = 0; z < zs.size(); ++z) {
      Value acc = q.top(ys.type(y), zs.type(z));
      for (std::size_t x = 0; x < xs.size(); ++x) {
        acc = q.meet(ys.type(y), zs.type(z), acc,
                     q.left_residual(xs.type(x), ys.type(y), zs.type(z), t(x, z), r(x, y)));
      }
      out.set_unchecked(y, z, acc);
    }
  }
  return out;
}

Relation right_hom(const Relation& s, const Relation& t) {
  require_same_quantaloid(s, t);
  if (!(s.tgt() == t.tgt())) throw Error(ErrorCode::type_mismatch, "right hom of relations without a shared target");
  const Quantaloid& q = s.quantaloid();
  const TypedSet& xs = t.src();
  const TypedSet& ys = s.src();
  const TypedSet& zs = t.tgt();
  Relation out(s.quantaloid_ptr(), xs, ys);
  for (std::size_t x = 0; x < xs.size(); ++x) {
    for (std::size_t y = 0; y < ys.size(); ++y) {
      Value acc = q.top(xs.type(x), ys.type(y));
      for (std::size_t z = 0; z < zs.size(); ++z) {
        acc = q.meet(xs.type(x), ys.type(y), acc,
                     q.right_residual(xs.type(x), ys.type(y), zs.type(z), s(y, z), t(x, z)));
      }
      out.set_unchecked(x, y, acc);
    }
  }
  return out;
}

Relation join(const Relation& lhs, const Relation& rhs) {
  require_same_endpoints(lhs, rhs);
  Relation out = lhs;
  const Quantaloid& q = lhs.quantaloid();
  for (std::size_t x = 0; x < lhs.rows(); ++x) {
    for (std::size_t y = 0; y < lhs.cols(); ++y) {
      out.set_unchecked(x, y, q.join(lhs.src().type(x), lhs.tgt().type(y), lhs(x, y), rhs(x, y)));
    }
  }
  return out;
}

Relation meet(const Relation& lhs, const Relation& rhs) {
  require_same_endpoints(lhs, rhs);
  Relation out = lhs;
  const Quantaloid& q = lhs.quantaloid();
  for (std::size_t x = 0; x < lhs.rows(); ++x) {
    for (std::size_t y = 0; y < lhs.cols(); ++y) {
      out.set_unchecked(x, y, q.meet(lhs.src().type(x), lhs.tgt().type(y), lhs(x, y), rhs(x, y)));
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_violation(const Relation& lhs, const Relation& rhs) {
  require_same_endpoints(lhs, rhs);
  const Quantaloid& q = lhs.quantaloid();
  for (std::size_t x = 0; x < lhs.rows(); ++x) {
    for (std::size_t y = 0; y < lhs.cols(); ++y) {
      if (!q.leq(lhs.src().type(x), lhs.tgt().type(y), lhs(x, y), rhs(x, y))) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Relation& lhs, const Relation& rhs) {
  require_same_endpoints(lhs, rhs);
  for (std::size_t x = 0; x < lhs.rows(); ++x) {
    for (std::size_t y = 0; y < lhs.cols(); ++y) {
      if (lhs(x, y) != rhs(x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

bool leq(const Relation& lhs, const Relation& rhs) { return !first_violation(lhs, rhs).has_value(); }

// ---------------------------------------------------------------------------
// Typed maps

TypedMap make_typed_map(TypedSet dom, TypedSet cod, std::vector<std::size_t> image) {
  if (image.size() != dom.size()) throw Error(ErrorCode::invalid_input, "map image has the wrong length");
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (image[x] >= cod.size()) throw Error(ErrorCode::invalid_input, "map image out of range");
    if (cod.type(image[x]) != dom.type(x)) {
      throw Error(ErrorCode::type_violation, "map sends " + dom.name(x) + " to an element of a different type");
    }
  }
  return TypedMap{std::move(dom), std::move(cod), std::move(image)};
}

TypedMap identity_map(const TypedSet& x) {
  std::vector<std::size_t> image(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) image[i] = i;
  return TypedMap{x, x, std::move(image)};
}

TypedMap compose(const TypedMap& g, const TypedMap& f) {
  if (!(f.cod == g.dom)) throw Error(ErrorCode::type_mismatch, "composite of non-composable maps");
  std::vector<std::size_t> image(f.dom.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.image[f.image[i]];
  return TypedMap{f.dom, g.cod, std::move(image)};
}

std::vector<TypedMap> all_typed_maps(const TypedSet& x, const TypedSet& y) {
  std::vector<std::vector<std::size_t>> options(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    options[i] = y.fiber(x.type(i));
    if (options[i].empty()) return {};
  }
  std::vector<TypedMap> out;
  std::vector<std::size_t> pos(x.size(), 0);
  while (true) {
    std::vector<std::size_t> image(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) image[i] = options[i][pos[i]];
    out.push_back(TypedMap{x, y, std::move(image)});
    std::size_t k = x.size();
    while (k > 0) {
      --k;
      if (++pos[k] < options[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (x.size() == 0) return out;
  }
}

Relation graph(const QuantaloidPtr& q, const TypedMap& f) {
  Relation r(q, f.dom, f.cod);
  for (std::size_t x = 0; x < f.dom.size(); ++x) r.set_unchecked(x, f.image[x], q->unit(f.dom.type(x)));
  return r;
}

Relation cograph(const QuantaloidPtr& q, const TypedMap& f) {
  Relation r(q, f.cod, f.dom);
  for (std::size_t x = 0; x < f.dom.size(); ++x) r.set_unchecked(f.image[x], x, q->unit(f.dom.type(x)));
  return r;
}

}  // namespace quantcat

namespace quantcat {

Json typed_set_json(const Quantaloid& q, const TypedSet& x) {
  Json names = Json::array();
  bool uniform = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    names.push_back(x.name(i));
    uniform = uniform && x.type(i) == 0;
  }
  if (uniform && q.object_count() == 1) return names;
  Json types = Json::array();
  for (ObjectId t : x.types()) types.push_back(q.object_name(t));
  return Json{{"elements", std::move(names)}, {"types", std::move(types)}};
}

Json relation_json(const Relation& r) {
  const Quantaloid& q = r.quantaloid();
  Json entries = Json::array();
  for (std::size_t x = 0; x < r.rows(); ++x) {
    for (std::size_t y = 0; y < r.cols(); ++y) {
      const ObjectId p = r.src().type(x);
      const ObjectId t = r.tgt().type(y);
      if (r(x, y) == q.bottom(p, t)) continue;
      entries.push_back(Json::array({r.src().name(x), r.tgt().name(y), q.format(p, t, r(x, y))}));
    }
  }
  return Json{{"src", typed_set_json(q, r.src())}, {"tgt", typed_set_json(q, r.tgt())}, {"entries", std::move(entries)}};
}

Json typed_map_json(const TypedMap& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.dom.size(); ++x) out[f.dom.name(x)] = f.cod.name(f.image[x]);
  return out;
}

}  // namespace quantcat
