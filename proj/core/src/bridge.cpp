#include "quantcat/bridge.hpp"

#include <map>
#include <variant>

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"

namespace quantcat {

// ---------------------------------------------------------------------------
// Delta

LiftedMonad::LiftedMonad(DiscreteLaxExtensionPtr source) : source_(std::move(source)) {}

std::string LiftedMonad::name() const { return "lift of " + source_->name(); }

CategoryPtr LiftedMonad::apply(const CategoryPtr& x) const {
  const std::size_t key = x->hash();
  {
    std::lock_guard lock(mutex_);
    auto [lo, hi] = cache_.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (same_category(it->second.first, x)) return it->second.second;
    }
  }
  const TypedSet tx = source_->monad()->apply(x->carrier());
  Relation ta = source_->extend(x->hom());
  CategoryCheck check = check_category(Relation(x->quantaloid_ptr(), tx, tx, ta.entries()));
  if (!check.category) {
    throw Error(ErrorCode::invalid_input,
                source_->name() + " does not send the hom of a category to a category: " +
                    violation_json(Category(tx, ta), *check.violation).dump());
  }
  std::lock_guard lock(mutex_);
  cache_.emplace(key, std::pair{x, check.category});
  return check.category;
}

Functor LiftedMonad::apply(const Functor& f) const {
  return Functor{apply(f.dom), apply(f.cod), source_->monad()->apply(f.as_map()).image};
}

Functor LiftedMonad::unit(const CategoryPtr& x) const {
  return Functor{x, apply(x), source_->monad()->unit(x->carrier()).image};
}

Functor LiftedMonad::mult(const CategoryPtr& x) const {
  CategoryPtr tx = apply(x);
  return Functor{apply(tx), tx, source_->monad()->mult(x->carrier()).image};
}

std::optional<Label> LiftedMonad::label(const CategoryPtr& x, std::size_t element) const {
  return source_->monad()->label(x->carrier(), element);
}

namespace {

class LiftedExtension final : public LaxExtension {
 public:
  explicit LiftedExtension(std::shared_ptr<const LiftedMonad> monad)
      : LaxExtension("lift of " + monad->source()->name(), monad), lifted_(std::move(monad)) {}

 protected:
  Distributor compute(const Distributor& phi) const override {
    CategoryPtr tx = lifted_->apply(phi.dom());
    CategoryPtr ty = lifted_->apply(phi.cod());
    Relation r = lifted_->source()->extend(phi.rel());
    return Distributor(tx, ty, Relation(phi.dom()->quantaloid_ptr(), tx->carrier(), ty->carrier(), r.entries()));
  }

 private:
  std::shared_ptr<const LiftedMonad> lifted_;
};

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks) {
    if (c.verdict == Verdict::fail) return r.title + ": " + c.name;
  }
  return r.title;
}

}  // namespace

Lift delta(DiscreteLaxExtensionPtr source, const DiscreteCorpus* validate) {
  if (validate != nullptr) {
    Report m = check_discrete_monad(*source->monad(), *validate);
    if (!m.passed()) throw Error(ErrorCode::invalid_input, "discrete monad law fails: " + first_failure(m));
    Report e = check_discrete_lax_extension(*source, *validate);
    if (!e.passed()) throw Error(ErrorCode::invalid_input, "discrete extension law fails: " + first_failure(e));
  }
  auto monad = std::make_shared<const LiftedMonad>(std::move(source));
  return Lift{monad, std::make_shared<LiftedExtension>(monad)};
}

// ---------------------------------------------------------------------------
// Gamma

DiscretizedMonad::DiscretizedMonad(EnrichedMonadPtr monad, QuantaloidPtr q)
    : monad_(std::move(monad)), q_(std::move(q)) {}

std::string DiscretizedMonad::name() const { return "discretization of " + monad_->name(); }

TypedSet DiscretizedMonad::apply(const TypedSet& x) const { return monad_->apply(discrete(x))->carrier(); }

TypedMap DiscretizedMonad::apply(const TypedMap& f) const {
  const Functor df{discrete(f.dom), discrete(f.cod), f.image};
  const Functor tf = monad_->apply(df);
  return TypedMap{tf.dom->carrier(), tf.cod->carrier(), tf.map};
}

TypedMap DiscretizedMonad::unit(const TypedSet& x) const {
  const Functor e = monad_->unit(discrete(x));
  return TypedMap{x, e.cod->carrier(), e.map};
}

TypedMap DiscretizedMonad::mult(const TypedSet& x) const {
  const CategoryPtr tdx = monad_->apply(discrete(x));
  // eps: d o T dX -> T dX is the identity on elements.
  std::vector<std::size_t> ids(tdx->size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  const Functor eps{discrete(tdx->carrier()), tdx, std::move(ids)};
  const Functor composite = compose(monad_->mult(discrete(x)), monad_->apply(eps));
  return TypedMap{composite.dom->carrier(), composite.cod->carrier(), composite.map};
}

std::optional<Label> DiscretizedMonad::label(const TypedSet& x, std::size_t element) const {
  return monad_->label(discrete(x), element);
}

DiscreteLaxExtensionPtr gamma(LaxExtensionPtr extension, QuantaloidPtr q) {
  auto monad = std::make_shared<const DiscretizedMonad>(extension->monad(), q);
  std::string name = "discretization of " + extension->name();
  return function_extension(std::move(name), monad, q, [extension, q](const Relation& r) {
    const Distributor phi(discrete_category(q, r.src()), discrete_category(q, r.tgt()), r);
    return extension->extend(phi).rel();
  });
}

// ---------------------------------------------------------------------------
// Comparison of discrete monads

namespace {

struct Bijection {
  std::vector<std::size_t> forward;  // a-index -> b-index
  std::vector<Label> labels;         // labels of the a side
};

// Matches elements of two carriers by label; the failure text on mismatch.
std::variant<Bijection, Json> match_labels(const std::vector<std::optional<Label>>& la, const TypedSet& sa,
                                           const std::vector<std::optional<Label>>& lb, const TypedSet& sb) {
  if (la.size() != lb.size()) return Json{{"reason", "carrier sizes differ"}, {"lhs", la.size()}, {"rhs", lb.size()}};
  std::map<Label, std::size_t> index;
  for (std::size_t j = 0; j < lb.size(); ++j) {
    if (!lb[j]) return Json{{"reason", "unlabelled element"}, {"side", "rhs"}, {"element", sb.name(j)}};
    if (!index.emplace(*lb[j], j).second) {
      return Json{{"reason", "repeated label"}, {"side", "rhs"}, {"label", lb[j]->to_string()}};
    }
  }
  Bijection out;
  std::vector<char> used(lb.size(), 0);
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (!la[i]) return Json{{"reason", "unlabelled element"}, {"side", "lhs"}, {"element", sa.name(i)}};
    auto it = index.find(*la[i]);
    if (it == index.end()) return Json{{"reason", "label missing on rhs"}, {"label", la[i]->to_string()}};
    if (used[it->second]++) return Json{{"reason", "repeated label"}, {"side", "lhs"}, {"label", la[i]->to_string()}};
    if (sa.type(i) != sb.type(it->second)) return Json{{"reason", "types differ"}, {"label", la[i]->to_string()}};
    out.forward.push_back(it->second);
    out.labels.push_back(*la[i]);
  }
  return out;
}

std::vector<std::optional<Label>> labels_of(const DiscreteMonad& t, const TypedSet& x, const TypedSet& tx,
                                            const std::vector<Label>* substitution) {
  std::vector<std::optional<Label>> out(tx.size());
  for (std::size_t i = 0; i < tx.size(); ++i) {
    out[i] = t.label(x, i);
    if (out[i] && substitution) out[i] = out[i]->substitute(*substitution);
  }
  return out;
}

}  // namespace

Report compare_discrete(const DiscreteLaxExtension& a, const DiscreteLaxExtension& b, const DiscreteCorpus& corpus,
                        const DiscreteComparisonOptions& options) {
  Report report;
  report.title = "comparison of " + a.name() + " with " + b.name();
  const DiscreteMonad& ta = *a.monad();
  const DiscreteMonad& tb = *b.monad();
  Check carrier("carrier bijection", corpus.sampled);
  Check unit("unit agrees", corpus.sampled);
  Check mult("multiplication agrees", corpus.sampled);
  Check maps("action on maps agrees", corpus.sampled);
  Check ext("extension agrees", corpus.sampled);

  std::vector<std::optional<Bijection>> bij(corpus.sets.size());
  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    const TypedSet& x = corpus.sets[i];
    try {
      const TypedSet txa = ta.apply(x);
      const TypedSet txb = tb.apply(x);
      auto matched = match_labels(labels_of(ta, x, txa, nullptr), txa, labels_of(tb, x, txb, nullptr), txb);
      if (auto* w = std::get_if<Json>(&matched)) {
        carrier.record(false, [&] {
          Json out = *w;
          out["set"] = typed_set_json(*corpus.q, x);
          return out;
        });
        continue;
      }
      carrier.record(true, {});
      bij[i] = std::get<Bijection>(std::move(matched));
      const Bijection& s = *bij[i];

      const TypedMap ea = ta.unit(x);
      const TypedMap eb = tb.unit(x);
      for (std::size_t e = 0; e < x.size(); ++e) {
        unit.record(s.forward[ea(e)] == eb(e), [&] { return Json{{"element", x.name(e)}}; });
      }

      const TypedSet ttxa = ta.apply(txa);
      const TypedSet ttxb = tb.apply(txb);
      if (ttxa.size() > options.max_mult_carrier || ttxb.size() > options.max_mult_carrier) {
        report.notice("multiplication comparison skipped for |X| = " + std::to_string(x.size()) + ": |TTX| exceeds cap");
      } else {
        std::vector<Label> lb_sub(txb.size());
        for (std::size_t e = 0; e < txa.size(); ++e) lb_sub[s.forward[e]] = s.labels[e];
        auto inner = match_labels(labels_of(ta, txa, ttxa, &s.labels), ttxa, labels_of(tb, txb, ttxb, &lb_sub), ttxb);
        if (auto* w = std::get_if<Json>(&inner)) {
          mult.record(false, [&] {
            Json out = *w;
            out["reason"] = "TTX carriers differ: " + out["reason"].get<std::string>();
            return out;
          });
        } else {
          const Bijection& tt = std::get<Bijection>(inner);
          const TypedMap ma = ta.mult(x);
          const TypedMap mb = tb.mult(x);
          for (std::size_t e = 0; e < ttxa.size(); ++e) {
            mult.record(s.forward[ma(e)] == mb(tt.forward[e]), [&] { return Json{{"element", tt.labels[e].to_string()}}; });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("comparison skipped for |X| = " + std::to_string(x.size()) + ": " + err.what());
    }
  }

  for (const auto& [key, fs] : corpus.maps) {
    if (!bij[key.first] || !bij[key.second]) continue;
    const Bijection& sx = *bij[key.first];
    const Bijection& sy = *bij[key.second];
    try {
      for (const TypedMap& f : fs) {
        const TypedMap fa = ta.apply(f);
        const TypedMap fb = tb.apply(f);
        for (std::size_t e = 0; e < fa.dom.size(); ++e) {
          maps.record(sy.forward[fa(e)] == fb(sx.forward[e]), [&] {
            return Json{{"map", typed_map_json(f)}, {"element", sx.labels[e].to_string()}};
          });
        }
      }
    } catch (const Error& err) {
      report.notice(std::string("map comparison skipped: ") + err.what());
    }
  }

  for (const auto& [key, rs] : corpus.relations) {
    if (!bij[key.first] || !bij[key.second]) continue;
    const Bijection& sx = *bij[key.first];
    const Bijection& sy = *bij[key.second];
    try {
      for (const Relation& r : rs) {
        const Relation ra = a.extend(r);
        const Relation rb = b.extend(r);
        for (std::size_t u = 0; u < ra.rows(); ++u) {
          for (std::size_t v = 0; v < ra.cols(); ++v) {
            ext.record(ra(u, v) == rb(sx.forward[u], sy.forward[v]), [&] {
              const Quantaloid& q = *corpus.q;
              const ObjectId s = ra.src().type(u);
              const ObjectId t = ra.tgt().type(v);
              return Json{{"relation", relation_json(r)},
                          {"row", sx.labels[u].to_string()},
                          {"col", sy.labels[v].to_string()},
                          {"lhs", q.format(s, t, ra(u, v))},
                          {"rhs", q.format(s, t, rb(sx.forward[u], sy.forward[v]))}};
            });
          }
        }
      }
    } catch (const Error& err) {
      report.notice(std::string("extension comparison skipped: ") + err.what());
    }
  }

  for (Check* c : {&carrier, &unit, &mult, &maps, &ext}) report.add(c->finish());
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

Report gamma_delta_identity_check(const DiscreteLaxExtensionPtr& source, const DiscreteCorpus& corpus) {
  Lift lift = delta(source);
  DiscreteLaxExtensionPtr back = gamma(lift.extension, corpus.q);
  Report report = compare_discrete(*back, *source, corpus);
  report.title = "Gamma Delta identity for " + source->name();
  return report;
}

// ---------------------------------------------------------------------------
// The counit iota

namespace {

std::vector<std::size_t> identity_map_of(std::size_t n) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

bool is_identity(const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != i) return false;
  }
  return true;
}

bool is_bijective(const Functor& f) {
  if (f.dom->size() != f.cod->size()) return false;
  std::vector<char> hit(f.cod->size(), 0);
  for (std::size_t v : f.map) {
    if (hit[v]++) return false;
  }
  return true;
}

bool is_surjective(const Functor& f) {
  std::vector<char> hit(f.cod->size(), 0);
  for (std::size_t v : f.map) hit[v] = 1;
  for (char h : hit) {
    if (!h) return false;
  }
  return true;
}

// (T dX, T^a) and the map o T eps_(X, a).
struct IotaComponent {
  CategoryPtr lifted;
  Functor iota;
};

IotaComponent iota_component(const LaxExtension& ext, const CategoryPtr& x) {
  const EnrichedMonad& t = *ext.monad();
  const CategoryPtr dx = discrete_category(x->quantaloid_ptr(), x->carrier());
  const Distributor da(dx, dx, x->hom());
  const Distributor ta = ext.extend(da);
  auto lifted = std::make_shared<const Category>(ta.dom()->carrier(), ta.rel());
  const Functor eps{dx, x, identity_map_of(x->size())};
  const Functor teps = t.apply(eps);
  return IotaComponent{lifted, Functor{lifted, teps.cod, teps.map}};
}

Json category_json(std::size_t i, const Category& x) {
  return Json{{"category", i}, {"size", x.size()}, {"hom", relation_json(x.hom())}};
}

}  // namespace

Report counit_iota(const LaxExtensionPtr& extension, const Corpus& corpus) {
  Report report;
  report.title = "counit iota for " + extension->name();
  const EnrichedMonad& t = *extension->monad();
  Check functor("iota is a functor", corpus.sampled);
  Check bijective("iota is bijective", corpus.sampled);
  Check faithful("iota is fully faithful", corpus.sampled);
  Check iso("iota is an isomorphism", corpus.sampled);
  Check equivalence("iota is an equivalence", corpus.sampled);
  Check natural("iota is natural", corpus.sampled);
  Check tri_gamma("iota at discrete categories is the identity", corpus.sampled);
  Check tri_delta("iota of a lift is the identity", corpus.sampled);

  DiscreteLaxExtensionPtr discrete = gamma(extension, corpus.q);
  Lift lift = delta(discrete);

  std::vector<std::optional<IotaComponent>> comps(corpus.categories.size());
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      comps[i] = iota_component(*extension, x);
      const Functor& f = comps[i]->iota;
      const bool is_cat = check_category(comps[i]->lifted->hom()).category != nullptr;
      const bool fun = is_cat && is_functor(f);
      functor.record(fun, [&] { return category_json(i, *x); });
      const bool bij = is_bijective(f);
      const bool ff = is_fully_faithful(f);
      bijective.record(bij, [&] {
        Json w = category_json(i, *x);
        w["lifted_size"] = f.dom->size();
        w["target_size"] = f.cod->size();
        return w;
      });
      faithful.record(ff, [&] { return category_json(i, *x); });
      iso.record(fun && bij && ff, [&] { return category_json(i, *x); });
      equivalence.record(fun && ff && is_surjective(f), [&] { return category_json(i, *x); });

      const CategoryPtr dx = discrete_category(x->quantaloid_ptr(), x->carrier());
      const Functor id{dx, dx, identity_map_of(x->size())};
      tri_gamma.record(is_identity(t.apply(id).map), [&] { return category_json(i, *x); });
      const Functor eps{dx, x, identity_map_of(x->size())};
      tri_delta.record(is_identity(lift.monad->apply(eps).map), [&] { return category_json(i, *x); });
    } catch (const Error& err) {
      report.notice("iota skipped for category " + std::to_string(i) + ": " + err.what());
    }
  }

  for (const auto& [key, fs] : corpus.functors) {
    if (!comps[key.first] || !comps[key.second]) continue;
    const Functor& ix = comps[key.first]->iota;
    const Functor& iy = comps[key.second]->iota;
    const QuantaloidPtr& q = corpus.q;
    try {
      for (const Functor& f : fs) {
        const Functor df{discrete_category(q, f.dom->carrier()), discrete_category(q, f.cod->carrier()), f.map};
        const std::vector<std::size_t> tdf = t.apply(df).map;
        const std::vector<std::size_t> tf = t.apply(f).map;
        bool ok = true;
        for (std::size_t u = 0; u < tdf.size() && ok; ++u) ok = iy.map[tdf[u]] == tf[ix.map[u]];
        natural.record(ok, [&] { return Json{{"functor", typed_map_json(f.as_map())}}; });
      }
    } catch (const Error& err) {
      report.notice(std::string("naturality skipped: ") + err.what());
    }
  }

  for (Check* c : {&functor, &bijective, &faithful, &iso, &equivalence, &natural, &tri_gamma, &tri_delta}) {
    report.add(c->finish());
  }
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

Report coreflective_image_check(const LaxExtensionPtr& extension, const Corpus& corpus) {
  Report report;
  report.title = "coreflective image check for " + extension->name();
  Check carrier("carrier agrees with the discrete case", corpus.sampled);
  Check hom("hom recovered from discrete data", corpus.sampled);
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      IotaComponent c = iota_component(*extension, x);
      carrier.record(is_bijective(c.iota), [&] {
        Json w = category_json(i, *x);
        w["discrete_size"] = c.iota.dom->size();
        w["size"] = c.iota.cod->size();
        return w;
      });
      const Category& tx = *c.iota.cod;
      const Category& lifted = *c.lifted;
      bool ok = true;
      Json witness;
      for (std::size_t u = 0; u < lifted.size() && ok; ++u) {
        for (std::size_t v = 0; v < lifted.size() && ok; ++v) {
          if (lifted(u, v) != tx(c.iota.map[u], c.iota.map[v])) {
            ok = false;
            const Quantaloid& q = tx.quantaloid();
            const ObjectId s = lifted.type(u);
            const ObjectId t = lifted.type(v);
            witness = Json{{"category", i},
                           {"row", lifted.carrier().name(u)},
                           {"col", lifted.carrier().name(v)},
                           {"recovered", q.format(s, t, lifted(u, v))},
                           {"hom", q.format(s, t, tx(c.iota.map[u], c.iota.map[v]))}};
          }
        }
      }
      hom.record(ok, [&] { return witness; });
    } catch (const Error& err) {
      report.notice("coreflection skipped for category " + std::to_string(i) + ": " + err.what());
    }
  }
  report.add(carrier.finish());
  report.add(hom.finish());
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

Report compare_lift_with_doctrine(const LiftedMonad& lifted, const EnrichedMonad& doctrine, const Corpus& corpus) {
  Report report;
  report.title = "comparison of " + lifted.name() + " with " + doctrine.name();
  Check functor("component is a functor", corpus.sampled);
  Check equivalence("component is an equivalence", corpus.sampled);
  Check iso("component is an isomorphism", corpus.sampled);
  Check unit("component respects units", corpus.sampled);
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      const CategoryPtr l = lifted.apply(x);
      const CategoryPtr d = doctrine.apply(x);
      const SpaceInfo& info = space_info(*d);
      const Functor comp = functor_into_space(l, d, [&](std::size_t e) {
        auto label = lifted.label(x, e);
        if (!label) throw Error(ErrorCode::invalid_input, "unlabelled element of the lifted monad");
        std::vector<std::size_t> gens;
        for (const Label& m : label->members) {
          if (!m.is_atom()) throw Error(ErrorCode::invalid_input, "lifted monad is not one layer deep");
          gens.push_back(static_cast<std::size_t>(m.atom));
        }
        return representable_join(*x, info.variance, l->type(e), gens);
      });
      const bool fun = is_functor(comp);
      const bool ff = is_fully_faithful(comp);
      functor.record(fun, [&] { return category_json(i, *x); });
      equivalence.record(fun && ff && is_surjective(comp), [&] { return category_json(i, *x); });
      iso.record(fun && ff && is_bijective(comp), [&] { return category_json(i, *x); });
      const Functor a = compose(comp, lifted.unit(x));
      const Functor b = doctrine.unit(x);
      unit.record(same_functor(a, b), [&] { return functor_witness(a, b); });
    } catch (const Error& err) {
      report.notice("comparison skipped for category " + std::to_string(i) + ": " + err.what());
    }
  }
  for (Check* c : {&functor, &equivalence, &iso, &unit}) report.add(c->finish());
  return report;
}

}  // namespace quantcat
