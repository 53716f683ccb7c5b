#include "quantcat/laxext.hpp"

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"

namespace quantcat {

LaxExtension::LaxExtension(std::string name, EnrichedMonadPtr monad)
    : name_(std::move(name)), monad_(std::move(monad)) {}

Distributor LaxExtension::extend(const Distributor& phi) const {
  std::size_t key = phi.rel().hash();
  boost::hash_combine(key, phi.dom()->hash());
  boost::hash_combine(key, phi.cod()->hash());
  {
    std::lock_guard lock(mutex_);
    auto [lo, hi] = memo_.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (same_distributor(it->second.first, phi)) return it->second.second;
    }
  }
  Distributor out = compute(phi);
  std::lock_guard lock(mutex_);
  memo_.emplace(key, std::pair{phi, out});
  return out;
}

namespace {

class FunctionExtension final : public LaxExtension {
 public:
  FunctionExtension(std::string name, EnrichedMonadPtr monad, std::function<Distributor(const Distributor&)> f)
      : LaxExtension(std::move(name), std::move(monad)), f_(std::move(f)) {}

 protected:
  Distributor compute(const Distributor& phi) const override { return f_(phi); }

 private:
  std::function<Distributor(const Distributor&)> f_;
};

LaxExtensionPtr make_extension(std::string name, EnrichedMonadPtr monad,
                               std::function<Distributor(const Distributor&)> f) {
  return std::make_shared<FunctionExtension>(std::move(name), std::move(monad), std::move(f));
}

}  // namespace

Distributor minimal_extension(const EnrichedMonad& t, const Distributor& phi) {
  CategoryPtr px = presheaf_category(phi.dom());
  const Functor back = presheaf_transpose(phi, px);
  const Functor y = yoneda(phi.dom(), px);
  return compose(upper_star(t.apply(back)), lower_star(t.apply(y)));
}

LaxExtensionPtr minimal_extension(EnrichedMonadPtr t) {
  const EnrichedMonad* raw = t.get();
  return make_extension("minimal extension of " + t->name(), t,
                        [raw](const Distributor& phi) { return minimal_extension(*raw, phi); });
}

Distributor presheaf_closed_form(const Distributor& phi, const Limits& limits) {
  CategoryPtr px = presheaf_category(phi.dom(), limits);
  CategoryPtr py = presheaf_category(phi.cod(), limits);
  return upper_star(presheaf_action(phi, py, px));
}

Distributor copresheaf_closed_form(const Distributor& phi, const Limits& limits) {
  CategoryPtr px = copresheaf_category(phi.dom(), limits);
  CategoryPtr py = copresheaf_category(phi.cod(), limits);
  return lower_star(copresheaf_action(phi, px, py));
}

LaxExtensionPtr closed_form_extension(std::string_view monad_name, const Limits& limits) {
  EnrichedMonadPtr t = monad_by_name(monad_name, limits);
  const std::string label = "closed form for " + std::string(monad_name);
  if (monad_name == "identity") return make_extension(label, t, [](const Distributor& phi) { return phi; });
  if (monad_name == "P") {
    return make_extension(label, t, [limits](const Distributor& phi) { return presheaf_closed_form(phi, limits); });
  }
  if (monad_name == "Pdagger") {
    return make_extension(label, t, [limits](const Distributor& phi) { return copresheaf_closed_form(phi, limits); });
  }
  if (monad_name == "H") {
    return make_extension(label, t, [limits](const Distributor& phi) { return hausdorff_extension(phi, limits); });
  }
  if (monad_name == "Hdagger") {
    return make_extension(label, t, [limits](const Distributor& phi) { return co_hausdorff_extension(phi, limits); });
  }
  if (monad_name == "HHdagger") {
    return make_extension(label, t, [t, limits](const Distributor& phi) {
      t->apply(phi.dom());  // refuses non-distributive quantaloids
      return double_hausdorff_extension(phi, limits);
    });
  }
  if (monad_name == "HdaggerH") {
    return make_extension(label, t, [t, limits](const Distributor& phi) {
      t->apply(phi.dom());
      return double_co_hausdorff_extension(phi, limits);
    });
  }
  throw Error(ErrorCode::invalid_input, "no closed-form extension for '" + std::string(monad_name) + "'");
}

LaxExtensionPtr largest_extension(EnrichedMonadPtr t) {
  const EnrichedMonad* raw = t.get();
  return make_extension("largest extension of " + t->name(), t, [raw](const Distributor& phi) {
    CategoryPtr tx = raw->apply(phi.dom());
    CategoryPtr ty = raw->apply(phi.cod());
    return distributor_closure(tx, ty, top_relation(tx->quantaloid_ptr(), tx->carrier(), ty->carrier()));
  });
}

MonadMorphism identity_morphism(EnrichedMonadPtr t) {
  const EnrichedMonad* raw = t.get();
  return MonadMorphism{"identity on " + t->name(), t, t,
                       [raw](const CategoryPtr& x) { return identity_functor(raw->apply(x)); }};
}

MonadMorphism hausdorff_inclusion(const Limits& limits) {
  return MonadMorphism{"inclusion of H into P", hausdorff_monad(limits), presheaf_monad(limits),
                       [limits](const CategoryPtr& x) {
                         CategoryPtr hx = hausdorff_category(x, limits);
                         const SpaceInfo& info = space_info(*hx);
                         return functor_into_space(hx, presheaf_category(x, limits),
                                                   [&](std::size_t e) { return info.tables[e]; });
                       }};
}

Report check_monad_morphism(const MonadMorphism& lambda, const Corpus& corpus) {
  Report report;
  report.title = "monad morphism " + lambda.name;
  const EnrichedMonad& s = *lambda.src;
  const EnrichedMonad& t = *lambda.tgt;
  Check functor("components are functors", corpus.sampled);
  Check naturality("naturality", corpus.sampled);
  Check unit("unit compatibility", corpus.sampled);
  Check mult("multiplication compatibility", corpus.sampled);
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      const Functor l = lambda.component(x);
      functor.record(is_functor(l), [&] { return Json{{"category", i}}; });
      const Functor a = compose(l, s.unit(x));
      const Functor b = t.unit(x);
      unit.record(same_functor(a, b), [&] { return functor_witness(a, b); });
      // lambda_X . m^S_X = m^T_X . T lambda_X . lambda_SX
      const Functor c = compose(l, s.mult(x));
      const Functor d = compose(t.mult(x), compose(t.apply(l), lambda.component(s.apply(x))));
      mult.record(same_functor(c, d), [&] { return functor_witness(c, d); });
    } catch (const Error& err) {
      report.notice("morphism laws skipped for |X| = " + std::to_string(x->size()) + ": " + err.what());
    }
  }
  for (const auto& [key, functors] : corpus.functors) {
    try {
      const Functor lx = lambda.component(corpus.categories[key.first]);
      const Functor ly = lambda.component(corpus.categories[key.second]);
      for (const Functor& f : functors) {
        const Functor a = compose(ly, s.apply(f));
        const Functor b = compose(t.apply(f), lx);
        naturality.record(same_functor(a, b), [&] { return functor_witness(a, b); });
      }
    } catch (const Error& err) {
      report.notice(std::string("naturality skipped: ") + err.what());
    }
  }
  for (Check* c : {&functor, &naturality, &unit, &mult}) report.add(c->finish());
  return report;
}

LaxExtensionPtr initial_extension(MonadMorphism lambda, LaxExtensionPtr target) {
  if (target->monad().get() != lambda.tgt.get() && target->monad()->name() != lambda.tgt->name()) {
    throw Error(ErrorCode::invalid_morphism, "extension is not over the target of " + lambda.name);
  }
  std::string name = "initial extension along " + lambda.name;
  EnrichedMonadPtr src = lambda.src;
  return make_extension(std::move(name), src, [lambda = std::move(lambda), target](const Distributor& phi) {
    const Functor lx = lambda.component(phi.dom());
    const Functor ly = lambda.component(phi.cod());
    return compose(upper_star(ly), compose(target->extend(phi), lower_star(lx)));
  });
}

LaxExtensionPtr meet_extension(LaxExtensionPtr a, LaxExtensionPtr b) {
  std::string name = "meet of " + a->name() + " and " + b->name();
  EnrichedMonadPtr monad = a->monad();
  return make_extension(std::move(name), monad, [a, b](const Distributor& phi) {
    const Distributor x = a->extend(phi);
    const Distributor y = b->extend(phi);
    return Distributor(x.dom(), x.cod(), meet(x.rel(), y.rel()));
  });
}

Json distributor_witness(const Distributor& lhs, const Distributor& rhs) {
  if (!same_category(lhs.dom(), rhs.dom()) || !same_category(lhs.cod(), rhs.cod())) {
    return Json{{"reason", "endpoints differ"}};
  }
  auto at = first_violation(lhs.rel(), rhs.rel());
  if (!at) at = first_difference(lhs.rel(), rhs.rel());
  if (!at) return Json{{"reason", "distributors agree"}};
  const auto [x, y] = *at;
  const Quantaloid& q = lhs.dom()->quantaloid();
  const ObjectId s = lhs.dom()->type(x);
  const ObjectId t = lhs.cod()->type(y);
  return Json{{"row", lhs.dom()->carrier().name(x)},
              {"col", lhs.cod()->carrier().name(y)},
              {"lhs", q.format(s, t, lhs(x, y))},
              {"rhs", q.format(s, t, rhs(x, y))}};
}

namespace {

Json distributor_json(const Distributor& phi) { return relation_json(phi.rel()); }

}  // namespace

Report check_enriched_lax_extension(const LaxExtension& e, const Corpus& corpus, const LaxCheckOptions& options) {
  Report report;
  report.title = "lax extension " + e.name();
  const EnrichedMonad& t = *e.monad();
  const bool sampled = corpus.sampled;
  Check objects("agrees with the monad on objects", sampled);
  Check monotone("monotonicity", sampled);
  Check lax_comp("lax functoriality", sampled);
  Check lax_id("lax identity", sampled);
  Check graph_ineq("graph inequality", sampled);
  Check cograph_ineq("cograph inequality", sampled);
  Check left_whisker("cograph whiskering equality", sampled);
  Check right_whisker("graph whiskering equality", sampled);
  Check oplax_unit("oplax unit", sampled);
  Check oplax_mult("oplax multiplication", sampled);
  Check flat("flatness", sampled);

  // Flatness and lax identity per category.
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    try {
      const Distributor ex = e.extend(identity_distributor(x));
      const Distributor id_tx = identity_distributor(t.apply(x));
      lax_id.record(leq(id_tx, ex), [&] { return distributor_witness(id_tx, ex); });
      flat.record(ex.rel() == id_tx.rel(), [&] {
        Json w = distributor_witness(ex, id_tx);
        w["category"] = i;
        return w;
      });
    } catch (const Error& err) {
      report.notice("flatness skipped for |X| = " + std::to_string(x->size()) + ": " + err.what());
    }
  }

  for (const auto& [key, phis] : corpus.distributors) {
    const CategoryPtr& x = corpus.categories[key.first];
    const CategoryPtr& y = corpus.categories[key.second];
    try {
      const CategoryPtr tx = t.apply(x);
      const CategoryPtr ty = t.apply(y);
      std::vector<Distributor> images;
      images.reserve(phis.size());
      for (const Distributor& phi : phis) {
        images.push_back(e.extend(phi));
        const Distributor& ephi = images.back();
        objects.record(same_category(ephi.dom(), tx) && same_category(ephi.cod(), ty),
                       [&] { return Json{{"phi", distributor_json(phi)}}; });
      }
      for (std::size_t a = 0; a < phis.size(); ++a) {
        for (std::size_t b = 0; b < phis.size(); ++b) {
          if (a == b || !leq(phis[a], phis[b])) continue;
          monotone.record(leq(images[a], images[b]), [&] {
            return Json{{"phi", distributor_json(phis[a])}, {"psi", distributor_json(phis[b])},
                        {"at", distributor_witness(images[a], images[b])}};
          });
        }
      }

      // Oplax unit: (e_Y)_* . phi <= T^phi . (e_X)_*.
      const Distributor ex = lower_star(t.unit(x));
      const Distributor ey = lower_star(t.unit(y));
      for (std::size_t a = 0; a < phis.size(); ++a) {
        const Distributor lhs = compose(ey, phis[a]);
        const Distributor rhs = compose(images[a], ex);
        oplax_unit.record(leq(lhs, rhs), [&] {
          return Json{{"phi", distributor_json(phis[a])}, {"at", distributor_witness(lhs, rhs)}};
        });
      }

      // Oplax multiplication: (m_Y)_* . T^T^phi <= T^phi . (m_X)_*.
      try {
        const CategoryPtr ttx = t.apply(tx);
        const CategoryPtr tty = t.apply(ty);
        if (ttx->size() <= options.max_oplax_mult_carrier && tty->size() <= options.max_oplax_mult_carrier) {
          const Distributor mx = lower_star(t.mult(x));
          const Distributor my = lower_star(t.mult(y));
          for (std::size_t a = 0; a < phis.size(); ++a) {
            const Distributor lhs = compose(my, e.extend(images[a]));
            const Distributor rhs = compose(images[a], mx);
            oplax_mult.record(leq(lhs, rhs), [&] {
              return Json{{"phi", distributor_json(phis[a])}, {"at", distributor_witness(lhs, rhs)}};
            });
          }
        } else {
          report.notice("oplax multiplication skipped for |X| = " + std::to_string(x->size()) +
                        ", |Y| = " + std::to_string(y->size()) + ": |TTX| or |TTY| exceeds cap");
        }
      } catch (const Error& err) {
        report.notice("oplax multiplication skipped for |X| = " + std::to_string(x->size()) + ", |Y| = " +
                      std::to_string(y->size()) + ": " + err.what());
      }

      // Lax functoriality: T^psi . T^phi <= T^(psi . phi).
      std::size_t budget = options.max_pairs;
      for (std::size_t k = 0; k < corpus.categories.size() && budget > 0; ++k) {
        auto it = corpus.distributors.find({key.second, k});
        if (it == corpus.distributors.end()) continue;
        for (std::size_t a = 0; a < phis.size() && budget > 0; ++a) {
          for (const Distributor& psi : it->second) {
            if (budget == 0) break;
            --budget;
            const Distributor lhs = compose(e.extend(psi), images[a]);
            const Distributor rhs = e.extend(compose(psi, phis[a]));
            lax_comp.record(leq(lhs, rhs), [&] {
              return Json{{"phi", distributor_json(phis[a])}, {"psi", distributor_json(psi)},
                          {"at", distributor_witness(lhs, rhs)}};
            });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("distributor laws skipped for |X| = " + std::to_string(x->size()) + ", |Y| = " +
                    std::to_string(y->size()) + ": " + err.what());
    }
  }

  // Star inequalities and whiskering, for f: X -> Y.
  for (const auto& [key, functors] : corpus.functors) {
    const std::size_t xi = key.first;
    const std::size_t yi = key.second;
    try {
      for (const Functor& f : functors) {
        const Functor tf = t.apply(f);
        const Distributor low = lower_star(tf);
        const Distributor up = upper_star(tf);
        const Distributor e_low = e.extend(lower_star(f));
        const Distributor e_up = e.extend(upper_star(f));
        graph_ineq.record(leq(low, e_low), [&] { return distributor_witness(low, e_low); });
        cograph_ineq.record(leq(up, e_up), [&] { return distributor_witness(up, e_up); });
        // T^(f^* . phi) = (Tf)^* . T^phi for phi: Z -|-> Y.
        for (std::size_t z = 0; z < corpus.categories.size(); ++z) {
          auto it = corpus.distributors.find({z, yi});
          if (it == corpus.distributors.end()) continue;
          for (const Distributor& phi : it->second) {
            const Distributor lhs = e.extend(compose(upper_star(f), phi));
            const Distributor rhs = compose(up, e.extend(phi));
            left_whisker.record(lhs.rel() == rhs.rel(), [&] {
              return Json{{"phi", distributor_json(phi)}, {"at", distributor_witness(lhs, rhs)}};
            });
          }
        }
        // T^(psi . f_*) = T^psi . (Tf)_* for psi: Y -|-> Z.
        for (std::size_t z = 0; z < corpus.categories.size(); ++z) {
          auto it = corpus.distributors.find({yi, z});
          if (it == corpus.distributors.end()) continue;
          for (const Distributor& psi : it->second) {
            const Distributor lhs = e.extend(compose(psi, lower_star(f)));
            const Distributor rhs = compose(e.extend(psi), low);
            right_whisker.record(lhs.rel() == rhs.rel(), [&] {
              return Json{{"psi", distributor_json(psi)}, {"at", distributor_witness(lhs, rhs)}};
            });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("functor laws skipped for categories " + std::to_string(xi) + ", " + std::to_string(yi) + ": " +
                    err.what());
    }
  }

  for (Check* c : {&objects, &monotone, &lax_comp, &lax_id, &graph_ineq, &cograph_ineq, &left_whisker,
                   &right_whisker, &oplax_unit, &oplax_mult, &flat}) {
    report.add(c->finish());
  }
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

bool yoneda_preserved(const EnrichedMonad& t, const CategoryPtr& x) {
  const bool intensional = !x->quantaloid().enumerable();
  const Functor y = intensional ? functor_into_space(x, hausdorff_category(x),
                                                     [&](std::size_t e) {
                                                       std::size_t one[] = {e};
                                                       return conical_presheaf(*x, x->type(e), one);
                                                     })
                                : yoneda(x);
  return is_fully_faithful(t.apply(y));
}

Report check_yoneda_full_fidelity(const EnrichedMonad& t, const Corpus& corpus) {
  Report report;
  report.title = "Yoneda full fidelity under " + t.name();
  Check check("T preserves full fidelity of Yoneda", corpus.sampled);
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    try {
      check.record(yoneda_preserved(t, corpus.categories[i]), [&] { return Json{{"category", i}}; });
    } catch (const Error& err) {
      report.notice("Yoneda check skipped for category " + std::to_string(i) + ": " + err.what());
    }
  }
  report.add(check.finish());
  return report;
}

Report flat_uniqueness_probe(const LaxExtension& candidate, const Corpus& corpus) {
  Report report;
  report.title = "flat uniqueness probe for " + candidate.name();
  const EnrichedMonad& t = *candidate.monad();
  Check flat("candidate is flat", corpus.sampled);
  for (std::size_t i = 0; i < corpus.categories.size(); ++i) {
    const CategoryPtr& x = corpus.categories[i];
    const Distributor ex = candidate.extend(identity_distributor(x));
    const Distributor id_tx = identity_distributor(t.apply(x));
    flat.record(ex.rel() == id_tx.rel(), [&] {
      Json w = distributor_witness(ex, id_tx);
      w["category"] = i;
      return w;
    });
  }
  CheckResult pre = flat.finish();
  report.add(pre);
  Check agree("agrees with the minimal extension", corpus.sampled);
  if (pre.verdict != Verdict::pass) {
    agree.skip("refused: candidate is not flat");
    report.add(agree.finish());
    return report;
  }
  for (const auto& [key, phis] : corpus.distributors) {
    for (const Distributor& phi : phis) {
      const Distributor a = candidate.extend(phi);
      const Distributor b = minimal_extension(t, phi);
      agree.record(a.rel() == b.rel(), [&] {
        return Json{{"phi", distributor_json(phi)}, {"at", distributor_witness(a, b)}};
      });
    }
  }
  report.add(agree.finish());
  return report;
}

Report least_extension_check(const LaxExtension& minimal, const std::vector<LaxExtensionPtr>& registry,
                             const Corpus& corpus) {
  Report report;
  report.title = "least extension check for " + minimal.name();
  for (const LaxExtensionPtr& other : registry) {
    Check check("below " + other->name(), corpus.sampled);
    for (const auto& [key, phis] : corpus.distributors) {
      for (const Distributor& phi : phis) {
        try {
          const Distributor a = minimal.extend(phi);
          const Distributor b = other->extend(phi);
          check.record(leq(a, b), [&] {
            return Json{{"phi", distributor_json(phi)}, {"at", distributor_witness(a, b)}};
          });
        } catch (const Error& err) {
          report.notice(other->name() + " skipped: " + err.what());
        }
      }
    }
    report.add(check.finish());
  }
  return report;
}

}  // namespace quantcat
