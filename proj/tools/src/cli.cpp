#include "quantcat/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "quantcat/bridge.hpp"
#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"
#include "quantcat/io.hpp"

namespace quantcat {

namespace {

struct Common {
  std::string quantaloid = "builtin:2";
  std::string format = "table";
  std::string report_path;
  std::size_t max_carrier = 2;
  std::uint64_t max_enum = 0;
  std::string fixtures;
};

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--report", c.report_path, "Also write the JSON report to this path");
}

void add_quantaloid_option(CLI::App* cmd, Common& c) {
  cmd->add_option("--quantaloid", c.quantaloid, "Built-in name (builtin:2, builtin:lawvere, ...) or JSON file");
}

void add_cap_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-carrier", c.max_carrier, "Largest corpus carrier")->check(CLI::Range(0, 6));
  cmd->add_option("--max-enum", c.max_enum, "Cap on presheaf candidate tables (overrides QUANTCAT_MAX_ENUM)")
      ->check(CLI::PositiveNumber);
}

Limits limits_of(const Common& c) {
  Limits limits = Limits::defaults();
  if (c.max_enum > 0) limits.max_enum = c.max_enum;
  return limits;
}

// Enumerated categories for enumerable Q; Lawvere fixtures otherwise.
Corpus build_corpus(const QuantaloidPtr& q, const Common& c, bool with_distributors) {
  CorpusOptions options;
  options.with_distributors = with_distributors;
  std::vector<CategoryPtr> categories;
  if (!c.fixtures.empty()) {
    if (q->name() != "lawvere") throw Error(ErrorCode::invalid_input, c.fixtures + ": fixtures are Lawvere spaces");
    categories = parse_spaces(read_json_file(c.fixtures));
  } else if (q->enumerable()) {
    categories = all_categories(q, c.max_carrier);
  } else if (q->name() == "lawvere") {
    categories = lawvere_fixtures();
  } else {
    throw Error(ErrorCode::enumeration_unsupported, "no corpus for " + q->name() + "; pass --fixtures");
  }
  return make_corpus(q, std::move(categories), options);
}

int emit(const Report& report, const Common& c, std::ostream& out) {
  if (!c.report_path.empty()) {
    std::ofstream file(c.report_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::invalid_input, c.report_path + ": cannot write report");
    file << to_json(report);
  }
  out << (c.format == "json" ? to_json(report) : to_table(report));
  return report.passed() ? 0 : 1;
}

int emit_json(const Json& j, const Common& c, std::ostream& out, bool ok) {
  const std::string text = j.dump(2) + "\n";
  if (!c.report_path.empty()) {
    std::ofstream file(c.report_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::invalid_input, c.report_path + ": cannot write report");
    file << text;
  }
  out << text;
  return ok ? 0 : 1;
}

template <class F>
Report timed(const std::string& section, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Report r = f();
  const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
  r.timings.emplace_back(section, spent.count());
  return r;
}

DiscreteLaxExtensionPtr discrete_extension(const std::string& monad, const std::string& ext, const QuantaloidPtr& q) {
  if (monad == "identity") {
    if (ext == "identity") return identity_extension(q);
    if (ext == "collapse") return collapse_extension(q);
  } else if (monad == "powerset") {
    if (ext == "kleisli") return powerset_kleisli_extension(q);
    if (ext == "hat") return powerset_hat_extension(q);
  } else if (monad == "upset") {
    if (ext == "all-sources") return upset_all_sources_extension(q);
    if (ext == "all-targets") return upset_all_targets_extension(q);
  } else {
    throw Error(ErrorCode::invalid_input, "unknown discrete monad '" + monad + "'");
  }
  throw Error(ErrorCode::invalid_input, "unknown extension '" + ext + "' of " + monad);
}

LaxExtensionPtr enriched_extension(const std::string& monad, const std::string& ext, const Limits& limits) {
  if (ext == "closed") return closed_form_extension(monad, limits);
  if (ext == "minimal") return minimal_extension(monad_by_name(monad, limits));
  if (ext == "largest") return largest_extension(monad_by_name(monad, limits));
  throw Error(ErrorCode::invalid_input, "unknown extension '" + ext + "'; use closed, minimal or largest");
}

std::vector<std::size_t> parse_members(const Category& x, const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(' ') - b + 1);
    out.push_back(x.carrier().index(item));
  }
  return out;
}

// Discrete candidates that a discretized doctrine is compared against.
std::vector<std::pair<std::string, std::string>> discrete_candidates(const std::string& monad) {
  if (monad == "identity") return {{"identity", "identity"}};
  if (monad == "P" || monad == "H") return {{"powerset", "kleisli"}};
  if (monad == "Pdagger" || monad == "Hdagger") return {{"powerset", "hat"}};
  if (monad == "HHdagger" || monad == "HdaggerH" || monad == "PPdagger" || monad == "PdaggerP") {
    return {{"upset", "all-sources"}, {"upset", "all-targets"}};
  }
  return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Law checks for quantaloid-enriched categories, presheaf doctrines and lax extensions", "quantcat"};
  app.require_subcommand(1);
  Common c;
  std::string file;
  std::string monad = "P";
  std::string ext;
  std::string discrete = "powerset";
  std::string compare;
  std::string type = "";
  std::string from;
  std::string to;
  bool list = false;
  bool copresheaf = false;
  bool conical = false;
  bool require_flat = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 20240601;
  std::size_t max_size = 2;

  auto* check_q = app.add_subcommand("check-quantaloid", "Verify the quantaloid axioms and residuals");
  add_quantaloid_option(check_q, c);
  add_output_options(check_q, c);
  check_q->add_option("--samples", samples, "Samples for intensional quantaloids")->check(CLI::PositiveNumber);
  check_q->add_option("--seed", seed, "Sampling seed");

  auto* check_cat = app.add_subcommand("check-category", "Validate a category JSON file");
  check_cat->add_option("file", file, "Category JSON")->required();
  add_quantaloid_option(check_cat, c);
  add_output_options(check_cat, c);

  auto* presheaf = app.add_subcommand("presheaf", "Enumerate (co)presheaves on a category");
  presheaf->add_option("--category", file, "Category JSON")->required();
  presheaf->add_option("--type", type, "Object of the quantaloid");
  presheaf->add_flag("--list", list, "List every element");
  presheaf->add_flag("--copresheaf", copresheaf, "Copresheaves instead of presheaves");
  presheaf->add_flag("--conical", conical, "Only joins of representables");
  add_quantaloid_option(presheaf, c);
  add_output_options(presheaf, c);
  presheaf->add_option("--max-enum", c.max_enum, "Cap on candidate tables")->check(CLI::PositiveNumber);

  auto* verify_monad = app.add_subcommand("verify-monad", "Check the monad laws of an enriched monad");
  verify_monad->add_option("--monad", monad, "identity, P, Pdagger, PPdagger, PdaggerP, H, Hdagger, HHdagger, HdaggerH");
  verify_monad->add_option("--fixtures", c.fixtures, "Lawvere spaces JSON");
  add_quantaloid_option(verify_monad, c);
  add_cap_options(verify_monad, c);
  add_output_options(verify_monad, c);

  auto* verify_ext = app.add_subcommand("verify-laxext", "Check the laws of a lax extension of an enriched monad");
  verify_ext->add_option("--monad", monad, "Monad name");
  verify_ext->add_option("--ext", ext, "closed, minimal or largest (default closed)");
  verify_ext->add_option("--fixtures", c.fixtures, "Lawvere spaces JSON");
  add_quantaloid_option(verify_ext, c);
  add_cap_options(verify_ext, c);
  add_output_options(verify_ext, c);

  auto* check_discrete = app.add_subcommand("check-discrete", "Check a discrete monad and lax extension");
  check_discrete->add_option("--monad", discrete, "identity, powerset or upset");
  check_discrete->add_option("--ext", ext, "identity, collapse, kleisli, hat, all-sources, all-targets");
  check_discrete->add_option("--max-size", max_size, "Largest corpus set")->check(CLI::Range(0, 8));
  check_discrete->add_flag("--flat", require_flat, "Check flatness as a law");
  add_quantaloid_option(check_discrete, c);
  add_output_options(check_discrete, c);

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distances between subsets of a Lawvere space");
  hausdorff->add_option("--space", file, "Points or distance matrix JSON")->required();
  hausdorff->add_option("--from", from, "Comma-separated element names")->required();
  hausdorff->add_option("--to", to, "Comma-separated element names")->required();
  add_output_options(hausdorff, c);

  auto* discretize = app.add_subcommand("discretize", "Discretize an enriched monad and its extension");
  discretize->add_option("--monad", monad, "Monad name");
  discretize->add_option("--ext", ext, "closed or minimal (default closed)");
  discretize->add_option("--max-size", max_size, "Largest corpus set")->check(CLI::Range(0, 4));
  add_quantaloid_option(discretize, c);
  add_output_options(discretize, c);

  auto* lift = app.add_subcommand("lift", "Lift a discrete lax extension to an enriched monad");
  lift->add_option("--discrete", discrete, "identity, powerset or upset");
  lift->add_option("--ext", ext, "Discrete extension name");
  lift->add_option("--compare", compare, "Enriched monad to compare the lift with, e.g. H");
  lift->add_option("--fixtures", c.fixtures, "Lawvere spaces JSON");
  lift->add_option("--max-size", max_size, "Largest discrete corpus set")->check(CLI::Range(0, 4));
  add_quantaloid_option(lift, c);
  add_cap_options(lift, c);
  add_output_options(lift, c);

  auto* coreflection = app.add_subcommand("coreflection", "Check the counit of the lifting coreflection");
  coreflection->add_option("--monad", monad, "Monad name");
  coreflection->add_option("--ext", ext, "closed or minimal (default closed)");
  coreflection->add_option("--fixtures", c.fixtures, "Lawvere spaces JSON");
  add_quantaloid_option(coreflection, c);
  add_cap_options(coreflection, c);
  add_output_options(coreflection, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_q->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      VerifyOptions options;
      options.samples = samples;
      options.seed = seed;
      return emit(timed("quantaloid axioms", [&] { return verify_quantaloid(*q, options); }), c, out);
    }

    if (check_cat->parsed()) {
      const Json j = read_json_file(file);
      QuantaloidPtr q = j.contains("quantaloid") ? parse_quantaloid(j["quantaloid"]) : load_quantaloid(c.quantaloid);
      Report report;
      report.title = "category " + file;
      Check axioms("category axioms");
      Json hom = j.contains("hom") ? j["hom"] : Json();
      if (!hom.is_object()) throw Error(ErrorCode::invalid_input, "category: missing field 'hom'");
      if (!hom.contains("src")) {
        hom["src"] = j["carrier"];
        hom["tgt"] = j["carrier"];
      }
      const Relation a = parse_relation(q, hom, "category.hom");
      const CategoryCheck result = check_category(a);
      axioms.record(result.category != nullptr, [&] {
        return violation_json(Category(a.src(), a), *result.violation);
      });
      report.add(axioms.finish());
      return emit(report, c, out);
    }

    if (presheaf->parsed()) {
      const Json j = read_json_file(file);
      QuantaloidPtr q = j.contains("quantaloid") ? parse_quantaloid(j["quantaloid"]) : load_quantaloid(c.quantaloid);
      CategoryPtr x = parse_category(q, j);
      const ObjectId s = type.empty() ? 0 : q->object(type);
      Limits limits = Limits::defaults();
      if (c.max_enum > 0) limits.max_enum = c.max_enum;
      const Variance v = copresheaf ? Variance::copresheaf : Variance::presheaf;
      CategoryPtr space = space_category(x, v, conical, limits);
      const SpaceInfo& info = space_info(*space);
      Json elements = Json::array();
      std::size_t count = 0;
      for (std::size_t e = 0; e < space->size(); ++e) {
        if (space->type(e) != s) continue;
        ++count;
        if (!list) continue;
        Json table = Json::object();
        for (std::size_t i = 0; i < x->size(); ++i) {
          const ObjectId p = v == Variance::presheaf ? x->type(i) : s;
          const ObjectId r = v == Variance::presheaf ? s : x->type(i);
          table[x->carrier().name(i)] = q->format(p, r, info.tables[e][i]);
        }
        elements.push_back(Json{{"name", space->carrier().name(e)}, {"table", table}});
      }
      Json result{{"variance", copresheaf ? "copresheaf" : "presheaf"},
                  {"conical", conical},
                  {"type", q->object_name(s)},
                  {"size", count}};
      if (list) result["elements"] = elements;
      if (c.format == "json" || !c.report_path.empty()) {
        if (c.format == "json") return emit_json(result, c, out, true);
        std::ofstream f(c.report_path, std::ios::binary);
        f << result.dump(2) << "\n";
      }
      out << result["variance"].get<std::string>() << "s of type " << q->object_name(s) << ": " << count << "\n";
      for (const auto& e : elements) {
        out << "  " << e["name"].get<std::string>();
        for (const auto& [k, val] : e["table"].items()) out << "  " << k << "=" << val.get<std::string>();
        out << "\n";
      }
      return 0;
    }

    if (verify_monad->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      const Limits limits = limits_of(c);
      EnrichedMonadPtr t = monad_by_name(monad, limits);
      const Corpus corpus = build_corpus(q, c, false);
      t->apply(corpus.categories.front());  // surfaces refusals such as NotCompletelyDistributive
      return emit(timed("monad laws", [&] { return check_enriched_monad(*t, corpus); }), c, out);
    }

    if (verify_ext->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      const Limits limits = limits_of(c);
      LaxExtensionPtr e = enriched_extension(monad, ext.empty() ? "closed" : ext, limits);
      const Corpus corpus = build_corpus(q, c, true);
      e->monad()->apply(corpus.categories.front());
      Report report = timed("lax extension laws", [&] { return check_enriched_lax_extension(*e, corpus); });
      Report yoneda = timed("Yoneda full fidelity", [&] { return check_yoneda_full_fidelity(*e->monad(), corpus); });
      report.append(yoneda);
      return emit(report, c, out);
    }

    if (check_discrete->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      DiscreteCorpusOptions options;
      options.max_size = max_size;
      const DiscreteCorpus corpus = make_discrete_corpus(q, options);
      DiscreteLaxExtensionPtr e = discrete_extension(discrete, ext.empty() ? (discrete == "identity" ? "identity" : discrete == "upset" ? "all-sources" : "kleisli") : ext, q);
      Report report = timed("discrete monad laws", [&] { return check_discrete_monad(*e->monad(), corpus); });
      report.title = "discrete " + e->name();
      DiscreteCheckOptions check_options;
      check_options.require_flat = require_flat;
      Report laws =
          timed("discrete extension laws", [&] { return check_discrete_lax_extension(*e, corpus, check_options); });
      report.append(laws);
      return emit(report, c, out);
    }

    if (hausdorff->parsed()) {
      CategoryPtr x = parse_space(read_json_file(file));
      const auto as = parse_members(*x, from);
      const auto b = parse_members(*x, to);
      const HausdorffDistance d = hausdorff_distance(*x, as, b);
      const ExtRational via = hausdorff_distance_via_presheaves(*x, as, b);
      const bool ok = via == d.forward;
      Json result{{"forward", d.forward.to_string()},
                  {"backward", d.backward.to_string()},
                  {"symmetric", d.symmetric.to_string()},
                  {"presheaf_hom", via.to_string()}};
      if (c.format == "json") return emit_json(result, c, out, ok);
      if (!c.report_path.empty()) {
        std::ofstream f(c.report_path, std::ios::binary);
        f << result.dump(2) << "\n";
      }
      out << "forward   " << d.forward.to_string() << "\n"
          << "backward  " << d.backward.to_string() << "\n"
          << "symmetric " << d.symmetric.to_string() << "\n";
      if (!ok) err << "presheaf hom " << via.to_string() << " disagrees with the direct computation\n";
      return ok ? 0 : 1;
    }

    if (discretize->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      LaxExtensionPtr e = enriched_extension(monad, ext.empty() ? "closed" : ext, Limits::defaults());
      e->monad()->apply(discrete_category(q, TypedSet::uniform(0)));
      DiscreteCorpusOptions options;
      options.max_size = max_size;
      const DiscreteCorpus corpus = make_discrete_corpus(q, options);
      DiscreteLaxExtensionPtr g = gamma(e, q);
      Report report = timed("discrete monad laws", [&] { return check_discrete_monad(*g->monad(), corpus); });
      report.title = g->name();
      Report laws = timed("discrete extension laws", [&] { return check_discrete_lax_extension(*g, corpus); });
      report.append(laws, "extension: ");
      const auto candidates = discrete_candidates(monad);
      std::vector<std::string> matches;
      for (const auto& [dm, de] : candidates) {
        if (dm != "identity" && q->object_count() != 1) continue;
        DiscreteLaxExtensionPtr cand = discrete_extension(dm, de, q);
        Report cmp = compare_discrete(*g, *cand, corpus);
        const std::string tag = dm + ":" + de;
        if (candidates.size() == 1) {
          report.append(cmp, tag + ": ");
        } else {
          report.notice(tag + (cmp.passed() ? " matches " : " does not match ") + g->name());
        }
        if (cmp.passed()) matches.push_back(tag);
      }
      if (candidates.size() > 1) {
        Check pairing("pairs with exactly one printed formula");
        pairing.record(matches.size() == 1, [&] { return Json{{"matches", matches}}; });
        if (matches.size() == 1) pairing.note(matches.front());
        report.add(pairing.finish());
      }
      return emit(report, c, out);
    }

    if (lift->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      DiscreteLaxExtensionPtr source = discrete_extension(
          discrete, ext.empty() ? (discrete == "identity" ? "identity" : discrete == "upset" ? "all-sources" : "kleisli") : ext, q);
      DiscreteCorpusOptions options;
      options.max_size = max_size;
      const DiscreteCorpus dcorpus = make_discrete_corpus(q, options);
      Lift l = delta(source, &dcorpus);
      const Corpus corpus = build_corpus(q, c, true);
      Report report = timed("lifted monad laws", [&] { return check_enriched_monad(*l.monad, corpus); });
      report.title = l.monad->name();
      Report laws = timed("lifted extension laws", [&] { return check_enriched_lax_extension(*l.extension, corpus); });
      report.append(laws, "extension: ");
      Report identity = timed("Gamma Delta identity", [&] { return gamma_delta_identity_check(source, dcorpus); });
      report.append(identity, "Gamma Delta: ");
      if (!compare.empty()) {
        EnrichedMonadPtr other = monad_by_name(compare, limits_of(c));
        report.append(compare_lift_with_doctrine(*l.monad, *other, corpus), compare + ": ");
      }
      return emit(report, c, out);
    }

    if (coreflection->parsed()) {
      QuantaloidPtr q = load_quantaloid(c.quantaloid);
      LaxExtensionPtr e = enriched_extension(monad, ext.empty() ? "closed" : ext, limits_of(c));
      const Corpus corpus = build_corpus(q, c, false);
      Report report = timed("counit", [&] { return counit_iota(e, corpus); });
      Report image = timed("coreflective image", [&] { return coreflective_image_check(e, corpus); });
      report.append(image);
      return emit(report, c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace quantcat
