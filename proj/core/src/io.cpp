#include "quantcat/io.hpp"

#include <fstream>
#include <sstream>

#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"

namespace quantcat {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw Error(ErrorCode::invalid_input, context + ": " + message);
}

const Json& field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object()) fail(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(context, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  fail(context, "expected a string");
}

template <class F>
auto with_context(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& err) {
    if (err.code() == ErrorCode::invalid_input) throw;
    throw Error(err.code(), context + ": " + err.what());
  }
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::invalid_input,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_input, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

FiniteLattice parse_lattice(const Json& j, const std::string& context) {
  const Json& elements = field(j, "elements", context);
  const Json& leq = field(j, "leq", context);
  if (!elements.is_array()) fail(context + ".elements", "expected an array");
  if (!leq.is_array()) fail(context + ".leq", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(as_string(elements[i], context + ".elements[" + std::to_string(i) + "]"));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string where = context + ".leq[" + std::to_string(i) + "]";
    if (!leq[i].is_array() || leq[i].size() != 2) fail(where, "expected a pair");
    pairs.emplace_back(as_string(leq[i][0], where), as_string(leq[i][1], where));
  }
  try {
    return FiniteLattice::from_names(std::move(names), pairs);
  } catch (const Error& err) {
    throw Error(ErrorCode::invalid_input, context + ": " + err.what());
  }
}

QuantaloidPtr parse_quantaloid(const Json& j) {
  if (j.is_string()) return builtin_quantaloid(j.get<std::string>());
  const std::string context = "quantaloid";
  const Json& objects = field(j, "objects", context);
  if (!objects.is_array() || objects.empty()) fail(context + ".objects", "expected a non-empty array");
  TableQuantaloid::Definition definition;
  definition.name = j.contains("name") ? as_string(j["name"], context + ".name") : "custom";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    definition.objects.push_back(as_string(objects[i], context + ".objects[" + std::to_string(i) + "]"));
  }
  const std::size_t n = definition.objects.size();
  const Json& homs = field(j, "homs", context);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::string key = definition.objects[p] + "," + definition.objects[q];
      definition.homs.push_back(parse_lattice(field(homs, key.c_str(), context + ".homs"), context + ".homs." + key));
    }
  }
  const Json& compose = field(j, "compose", context);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        const std::string key = definition.objects[p] + "," + definition.objects[q] + "," + definition.objects[r];
        const std::string where = context + ".compose." + key;
        const Json& table = field(compose, key.c_str(), context + ".compose");
        const FiniteLattice& pq = definition.homs[p * n + q];
        const FiniteLattice& qr = definition.homs[q * n + r];
        const FiniteLattice& pr = definition.homs[p * n + r];
        if (!table.is_array() || table.size() != qr.size()) {
          fail(where, "expected " + std::to_string(qr.size()) + " rows indexed by Q(" + definition.objects[q] + ", " +
                          definition.objects[r] + ")");
        }
        std::vector<ElementId> flat(qr.size() * pq.size());
        for (std::size_t b = 0; b < qr.size(); ++b) {
          const std::string row = where + "[" + std::to_string(b) + "]";
          if (!table[b].is_array() || table[b].size() != pq.size()) {
            fail(row, "expected " + std::to_string(pq.size()) + " entries");
          }
          for (std::size_t a = 0; a < pq.size(); ++a) {
            const std::string cell = row + "[" + std::to_string(a) + "]";
            const std::string name = as_string(table[b][a], cell);
            auto id = pr.find(name);
            if (!id) fail(cell, "unknown element '" + name + "'");
            flat[b * pq.size() + a] = *id;
          }
        }
        definition.compose.push_back(std::move(flat));
      }
    }
  }
  const Json& units = field(j, "units", context);
  for (std::size_t p = 0; p < n; ++p) {
    const std::string where = context + ".units." + definition.objects[p];
    const std::string name = as_string(field(units, definition.objects[p].c_str(), context + ".units"), where);
    auto id = definition.homs[p * n + p].find(name);
    if (!id) fail(where, "unknown element '" + name + "'");
    definition.units.push_back(*id);
  }
  try {
    return std::make_shared<const TableQuantaloid>(std::move(definition));
  } catch (const Error& err) {
    throw Error(ErrorCode::invalid_input, context + ": " + err.what());
  }
}

QuantaloidPtr load_quantaloid(std::string_view selector) {
  const std::string s(selector);
  if (s.rfind("builtin:", 0) == 0) return builtin_quantaloid(s);
  for (const auto& name : builtin_quantaloid_names()) {
    if (s == name) return builtin_quantaloid(s);
  }
  return parse_quantaloid(read_json_file(s));
}

TypedSet parse_typed_set(const Quantaloid& q, const Json& j, const std::string& context) {
  std::vector<std::string> names;
  std::vector<ObjectId> types;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) names.push_back(as_string(j[i], context + "[" + std::to_string(i) + "]"));
    types.assign(names.size(), 0);
  } else {
    const Json& elements = field(j, "elements", context);
    const Json& ts = field(j, "types", context);
    if (!elements.is_array() || !ts.is_array() || elements.size() != ts.size()) {
      fail(context, "'elements' and 'types' must be arrays of equal length");
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const std::string where = context + ".types[" + std::to_string(i) + "]";
      names.push_back(as_string(elements[i], context + ".elements[" + std::to_string(i) + "]"));
      const std::string t = as_string(ts[i], where);
      auto id = q.find_object(t);
      if (!id) fail(where, "unknown object '" + t + "'");
      types.push_back(*id);
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (names[i] == names[k]) fail(context, "duplicate element '" + names[i] + "'");
    }
  }
  return TypedSet(std::move(types), std::move(names));
}

namespace {

Relation parse_entries(const QuantaloidPtr& q, TypedSet src, TypedSet tgt, const Json& j, const std::string& context) {
  Relation r(q, std::move(src), std::move(tgt));
  const Json& entries = field(j, "entries", context);
  if (!entries.is_array()) fail(context + ".entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = context + ".entries[" + std::to_string(i) + "]";
    const Json& e = entries[i];
    if (!e.is_array() || e.size() != 3) fail(where, "expected [x, y, value]");
    const std::string xs = as_string(e[0], where);
    const std::string ys = as_string(e[1], where);
    auto x = r.src().find(xs);
    if (!x) fail(where, "unknown source element '" + xs + "'");
    auto y = r.tgt().find(ys);
    if (!y) fail(where, "unknown target element '" + ys + "'");
    const std::string v = as_string(e[2], where);
    with_context(where, [&] {
      r.set(*x, *y, q->parse(r.src().type(*x), r.tgt().type(*y), v));
      return 0;
    });
  }
  return r;
}

}  // namespace

Relation parse_relation(const QuantaloidPtr& q, const Json& j, const std::string& context) {
  TypedSet src = parse_typed_set(*q, field(j, "src", context), context + ".src");
  TypedSet tgt = parse_typed_set(*q, field(j, "tgt", context), context + ".tgt");
  return parse_entries(q, std::move(src), std::move(tgt), j, context);
}

CategoryPtr parse_category(const QuantaloidPtr& q, const Json& j) {
  TypedSet carrier = parse_typed_set(*q, field(j, "carrier", "category"), "category.carrier");
  const Json& hom = field(j, "hom", "category");
  Relation a = hom.contains("src") ? parse_relation(q, hom, "category.hom")
                                   : parse_entries(q, carrier, carrier, hom, "category.hom");
  if (!(a.src() == carrier) || !(a.tgt() == carrier)) fail("category.hom", "endpoints differ from the carrier");
  return make_category(a);
}

CategoryPtr parse_space(const Json& j) {
  if (j.contains("points")) {
    const Json& pts = j["points"];
    if (!pts.is_array()) fail("space.points", "expected an array");
    std::vector<Rational> points;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string where = "space.points[" + std::to_string(i) + "]";
      const std::string text = as_string(pts[i], where);
      const ExtRational x = with_context(where, [&] { return ExtRational::parse(text); });
      if (x == ExtRational::infinity()) fail(where, "points must be finite");
      points.push_back(x.finite_value());
      names.push_back(text);
    }
    if (j.contains("names")) {
      const Json& ns = j["names"];
      if (!ns.is_array() || ns.size() != points.size()) fail("space.names", "expected one name per point");
      for (std::size_t i = 0; i < ns.size(); ++i) names[i] = as_string(ns[i], "space.names");
    }
    return line_category(points, std::move(names));
  }
  const Json& d = field(j, "distances", "space");
  if (!d.is_array()) fail("space.distances", "expected an array");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string where = "space.distances[" + std::to_string(i) + "]";
    if (!d[i].is_array()) fail(where, "expected an array");
    std::vector<std::string> row;
    for (std::size_t k = 0; k < d[i].size(); ++k) row.push_back(as_string(d[i][k], where));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (std::size_t i = 0; i < j["names"].size(); ++i) names.push_back(as_string(j["names"][i], "space.names"));
  }
  return with_context("space", [&] { return metric_category(rows, std::move(names)); });
}

std::vector<CategoryPtr> parse_spaces(const Json& j) {
  if (!j.contains("spaces")) return {parse_space(j)};
  std::vector<CategoryPtr> out;
  for (const Json& s : j["spaces"]) out.push_back(parse_space(s));
  return out;
}

Json category_json(const Category& x) {
  Json hom = relation_json(x.hom());
  hom.erase("src");
  hom.erase("tgt");
  return Json{{"carrier", typed_set_json(x.quantaloid(), x.carrier())}, {"hom", hom}};
}

}  // namespace quantcat
