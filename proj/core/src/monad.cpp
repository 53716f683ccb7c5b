#include "quantcat/monad.hpp"

#include <functional>

#include "quantcat/error.hpp"

namespace quantcat {

std::optional<Label> space_label(const Category& c, std::size_t element) {
  const SpaceInfo* info = c.space();
  if (info == nullptr) return Label::of_atom(element);
  auto gens = conicality_certificate(*info->base, info->variance, c.type(element), info->tables[element]);
  if (!gens) return std::nullopt;
  std::vector<Label> members;
  for (std::size_t g : *gens) {
    auto l = space_label(*info->base, g);
    if (!l) return std::nullopt;
    members.push_back(std::move(*l));
  }
  return Label::set_of(std::move(members));
}

std::optional<Label> EnrichedMonad::label(const CategoryPtr& x, std::size_t element) const {
  return space_label(*apply(x), element);
}

namespace {

class IdentityMonad final : public EnrichedMonad {
 public:
  std::string name() const override { return "identity"; }
  CategoryPtr apply(const CategoryPtr& x) const override { return x; }
  Functor apply(const Functor& f) const override { return f; }
  Functor unit(const CategoryPtr& x) const override { return identity_functor(x); }
  Functor mult(const CategoryPtr& x) const override { return identity_functor(x); }
};

}  // namespace

EnrichedMonadPtr enriched_identity_monad() {
  static const EnrichedMonadPtr instance = std::make_shared<IdentityMonad>();
  return instance;
}

DoctrineMonad::DoctrineMonad(std::string name, std::vector<Layer> layers, bool requires_distributive, Limits limits)
    : name_(std::move(name)),
      layers_(std::move(layers)),
      requires_distributive_(requires_distributive),
      limits_(limits) {
  if (layers_.empty() || layers_.size() > 2) throw Error(ErrorCode::invalid_input, "doctrine needs one or two layers");
}

void DoctrineMonad::require_distributive(const Category& x) const {
  if (!requires_distributive_) return;
  const Quantaloid& q = x.quantaloid();
  if (auto failure = q.distributivity_failure()) {
    std::string triple;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) triple += ", ";
      triple += q.format(failure->src, failure->tgt, failure->triple[i]);
    }
    throw Error(ErrorCode::not_completely_distributive,
                name_ + " needs a completely distributive quantaloid; " + q.name() + " hom (" +
                    q.object_name(failure->src) + ", " + q.object_name(failure->tgt) + ") fails at (" + triple +
                    ")");
  }
}

CategoryPtr DoctrineMonad::layer_space(const Layer& l, const CategoryPtr& x) const {
  return space_category(x, l.variance, l.conical, limits_);
}

Functor DoctrineMonad::layer_map(const Layer& l, const Functor& f) const {
  CategoryPtr tx = layer_space(l, f.dom);
  CategoryPtr ty = layer_space(l, f.cod);
  if (l.variance == Variance::presheaf) return presheaf_action(upper_star(f), tx, ty);
  return copresheaf_action(lower_star(f), tx, ty);
}

Functor DoctrineMonad::layer_unit(const Layer& l, const CategoryPtr& x) const {
  CategoryPtr tx = layer_space(l, x);
  return l.variance == Variance::presheaf ? yoneda(x, tx) : co_yoneda(x, tx);
}

CategoryPtr DoctrineMonad::inner_apply(const CategoryPtr& x) const {
  return layers_.size() == 1 ? x : layer_space(layers_[1], x);
}

CategoryPtr DoctrineMonad::apply(const CategoryPtr& x) const {
  require_distributive(*x);
  return layer_space(layers_[0], inner_apply(x));
}

Functor DoctrineMonad::apply(const Functor& f) const {
  require_distributive(*f.dom);
  if (layers_.size() == 1) return layer_map(layers_[0], f);
  return layer_map(layers_[0], layer_map(layers_[1], f));
}

Functor DoctrineMonad::unit(const CategoryPtr& x) const {
  require_distributive(*x);
  if (layers_.size() == 1) return layer_unit(layers_[0], x);
  return compose(layer_unit(layers_[0], layer_space(layers_[1], x)), layer_unit(layers_[1], x));
}

Functor DoctrineMonad::mult_generator(const CategoryPtr& x) const {
  require_distributive(*x);
  if (layers_.size() == 1) return layer_unit(layers_[0], x);
  CategoryPtr inner_x = layer_space(layers_[1], x);
  CategoryPtr tx = layer_space(layers_[0], inner_x);
  return compose(layer_unit(layers_[1], tx), layer_unit(layers_[0], inner_x));
}

Functor DoctrineMonad::mult(const CategoryPtr& x) const {
  const Layer& outer = layers_[0];
  Functor g = mult_generator(x);
  CategoryPtr source = layer_space(outer, g.cod);
  CategoryPtr target = layer_space(outer, g.dom);
  if (outer.variance == Variance::presheaf) return presheaf_action(lower_star(g), source, target);
  return copresheaf_action(upper_star(g), source, target);
}

Table DoctrineMonad::mult_table(const CategoryPtr& x, std::size_t element) const {
  const Layer& outer = layers_[0];
  Functor g = mult_generator(x);
  CategoryPtr source = layer_space(outer, g.cod);
  const SpaceInfo& info = space_info(*source);
  const ObjectId s = source->type(element);
  if (outer.variance == Variance::presheaf) return presheaf_compose(info.tables.at(element), s, lower_star(g));
  return copresheaf_compose(upper_star(g), info.tables.at(element), s);
}

EnrichedMonadPtr presheaf_monad(const Limits& limits) {
  return std::make_shared<DoctrineMonad>("P", std::vector<Layer>{{Variance::presheaf, false}}, false, limits);
}

EnrichedMonadPtr copresheaf_monad(const Limits& limits) {
  return std::make_shared<DoctrineMonad>("Pdagger", std::vector<Layer>{{Variance::copresheaf, false}}, false,
                                         limits);
}

EnrichedMonadPtr double_presheaf_monad(const Limits& limits) {
  return std::make_shared<DoctrineMonad>(
      "PPdagger", std::vector<Layer>{{Variance::presheaf, false}, {Variance::copresheaf, false}}, false, limits);
}

EnrichedMonadPtr double_copresheaf_monad(const Limits& limits) {
  return std::make_shared<DoctrineMonad>(
      "PdaggerP", std::vector<Layer>{{Variance::copresheaf, false}, {Variance::presheaf, false}}, false, limits);
}

std::vector<std::string> monad_names() {
  return {"identity", "P", "Pdagger", "PPdagger", "PdaggerP", "H", "Hdagger", "HHdagger", "HdaggerH"};
}

EnrichedMonadPtr monad_by_name(std::string_view name, const Limits& limits) {
  const Layer p{Variance::presheaf, false};
  const Layer pd{Variance::copresheaf, false};
  const Layer h{Variance::presheaf, true};
  const Layer hd{Variance::copresheaf, true};
  auto make = [&](std::vector<Layer> layers, bool cd) {
    return std::make_shared<DoctrineMonad>(std::string(name), std::move(layers), cd, limits);
  };
  if (name == "identity") return enriched_identity_monad();
  if (name == "P") return make({p}, false);
  if (name == "Pdagger") return make({pd}, false);
  if (name == "PPdagger") return make({p, pd}, false);
  if (name == "PdaggerP") return make({pd, p}, false);
  if (name == "H") return make({h}, false);
  if (name == "Hdagger") return make({hd}, false);
  if (name == "HHdagger") return make({h, hd}, true);
  if (name == "HdaggerH") return make({hd, h}, true);
  throw Error(ErrorCode::invalid_input, "unknown monad '" + std::string(name) + "'");
}

Json functor_witness(const Functor& lhs, const Functor& rhs) {
  if (!same_category(lhs.dom, rhs.dom) || !same_category(lhs.cod, rhs.cod)) {
    return Json{{"reason", "endpoints differ"}};
  }
  for (std::size_t i = 0; i < lhs.map.size(); ++i) {
    if (lhs.map[i] != rhs.map[i]) {
      return Json{{"element", lhs.dom->carrier().name(i)},
                  {"lhs", lhs.cod->carrier().name(lhs.map[i])},
                  {"rhs", rhs.cod->carrier().name(rhs.map[i])}};
    }
  }
  return Json{{"reason", "functors agree"}};
}

namespace {

std::string describe(const Category& x) { return "|X| = " + std::to_string(x.size()); }

Json category_witness(std::size_t index, const Category& x) {
  return Json{{"category", index}, {"size", x.size()}};
}

}  // namespace

Report check_enriched_monad(const EnrichedMonad& t, const Corpus& corpus, const MonadCheckOptions& options) {
  Report report;
  report.title = "enriched monad " + t.name();
  const bool sampled = corpus.sampled;
  Check unit_functor("unit is a functor", sampled);
  Check mult_functor("multiplication is a functor", sampled);
  Check left_unit("left unit", sampled);
  Check right_unit("right unit", sampled);
  Check assoc("associativity", sampled);
  Check unit_nat("unit naturality", sampled);
  Check mult_nat("multiplication naturality", sampled);
  Check identities("preserves identities", sampled);
  Check composition("preserves composition", sampled);
  Check two_functor("2-functoriality", sampled);
  const auto* doctrine = dynamic_cast<const DoctrineMonad*>(&t);
  const bool conical_outer = doctrine != nullptr && doctrine->layers().front().conical;
  Check conical("multiplication conicality", sampled);

  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      const CategoryPtr tx = t.apply(x);
      const Functor id_tx = identity_functor(tx);
      identities.record(same_functor(t.apply(identity_functor(x)), id_tx), [&] { return category_witness(i, *x); });
      const Functor e_x = t.unit(x);
      unit_functor.record(is_functor(e_x), [&] { return category_witness(i, *x); });
      const Functor m_x = t.mult(x);
      mult_functor.record(is_functor(m_x), [&] { return category_witness(i, *x); });
      const Functor lhs_left = compose(m_x, t.unit(tx));
      left_unit.record(same_functor(lhs_left, id_tx), [&] { return functor_witness(lhs_left, id_tx); });
      const Functor lhs_right = compose(m_x, t.apply(e_x));
      right_unit.record(same_functor(lhs_right, id_tx), [&] { return functor_witness(lhs_right, id_tx); });
      if (conical_outer) {
        const CategoryPtr ttx = t.apply(tx);
        for (std::size_t e = 0; e < ttx->size(); ++e) {
          const Table table = doctrine->mult_table(x, e);
          const auto& target = space_info(*tx);
          const bool ok = conicality_certificate(*target.base, target.variance, ttx->type(e), table).has_value();
          conical.record(ok, [&] {
            return Json{{"category", i}, {"element", ttx->carrier().name(e)}};
          });
        }
      }
      try {
        const Functor a = compose(m_x, t.apply(m_x));
        const Functor b = compose(m_x, t.mult(tx));
        assoc.record(same_functor(a, b), [&] { return functor_witness(a, b); });
      } catch (const Error& err) {
        if (err.code() != ErrorCode::enumeration_too_large && err.code() != ErrorCode::carrier_too_large) throw;
        report.notice("associativity skipped for " + describe(*x) + ": " + err.what());
      }
    } catch (const Error& err) {
      report.notice("monad laws skipped for " + describe(*x) + ": " + err.what());
    }
  }

  for (const auto& [key, functors] : corpus.functors) {
    const CategoryPtr& x = corpus.categories[key.first];
    const CategoryPtr& y = corpus.categories[key.second];
    try {
      const Functor e_x = t.unit(x);
      const Functor e_y = t.unit(y);
      std::optional<Functor> m_x;
      std::optional<Functor> m_y;
      try {
        m_x = t.mult(x);
        m_y = t.mult(y);
      } catch (const Error& err) {
        report.notice("multiplication naturality skipped for " + describe(*x) + ", " + describe(*y) + ": " +
                      err.what());
      }
      std::vector<Functor> images;
      for (const Functor& f : functors) {
        const Functor tf = t.apply(f);
        images.push_back(tf);
        const Functor a = compose(tf, e_x);
        const Functor b = compose(e_y, f);
        unit_nat.record(same_functor(a, b), [&] { return functor_witness(a, b); });
        if (m_x && m_y) {
          const Functor c = compose(tf, *m_x);
          const Functor d = compose(*m_y, t.apply(tf));
          mult_nat.record(same_functor(c, d), [&] { return functor_witness(c, d); });
        }
      }
      for (std::size_t a = 0; a < functors.size(); ++a) {
        for (std::size_t b = 0; b < functors.size(); ++b) {
          if (a == b || !functor_leq(functors[a], functors[b])) continue;
          two_functor.record(functor_leq(images[a], images[b]), [&] { return functor_witness(images[a], images[b]); });
        }
      }
      std::size_t budget = options.max_pairs;
      for (std::size_t k = 0; k < corpus.categories.size() && budget > 0; ++k) {
        auto it = corpus.functors.find({key.second, k});
        if (it == corpus.functors.end()) continue;
        for (std::size_t a = 0; a < functors.size() && budget > 0; ++a) {
          for (const Functor& g : it->second) {
            if (budget == 0) break;
            --budget;
            const Functor lhs = t.apply(compose(g, functors[a]));
            const Functor rhs = compose(t.apply(g), images[a]);
            composition.record(same_functor(lhs, rhs), [&] { return functor_witness(lhs, rhs); });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("naturality skipped for " + describe(*x) + ", " + describe(*y) + ": " + err.what());
    }
  }
  for (Check* c : {&unit_functor, &mult_functor, &left_unit, &right_unit, &assoc, &unit_nat, &mult_nat, &identities,
                   &composition, &two_functor}) {
    report.add(c->finish());
  }
  if (conical_outer) report.add(conical.finish());
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

}  // namespace quantcat
