#include "quantcat/presheaf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"

namespace quantcat {

Limits Limits::defaults() {
  Limits limits;
  if (const char* env = std::getenv("QUANTCAT_MAX_ENUM")) {
    std::uint64_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) limits.max_enum = value;
  }
  return limits;
}

bool is_presheaf(const Category& x, ObjectId s, const Table& sigma) {
  const Quantaloid& q = x.quantaloid();
  if (sigma.size() != x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!q.contains(x.type(i), s, sigma[i])) return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      Value lhs = q.compose(x.type(i), x.type(j), s, sigma[j], x(i, j));
      if (!q.leq(x.type(i), s, lhs, sigma[i])) return false;
    }
  }
  return true;
}

bool is_copresheaf(const Category& x, ObjectId s, const Table& tau) {
  const Quantaloid& q = x.quantaloid();
  if (tau.size() != x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!q.contains(s, x.type(i), tau[i])) return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      Value lhs = q.compose(s, x.type(j), x.type(i), x(j, i), tau[j]);
      if (!q.leq(s, x.type(i), lhs, tau[i])) return false;
    }
  }
  return true;
}

namespace {

struct TableHash {
  std::size_t operator()(const Table& t) const noexcept { return table_hash(0, t); }
};

// Hom lattice of a table entry at base element i.
std::pair<ObjectId, ObjectId> entry_type(const Category& x, Variance v, ObjectId s, std::size_t i) {
  return v == Variance::presheaf ? std::pair{x.type(i), s} : std::pair{s, x.type(i)};
}

Table bottom_table(const Category& x, Variance v, ObjectId s) {
  const Quantaloid& q = x.quantaloid();
  Table t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [p, r] = entry_type(x, v, s, i);
    t[i] = q.bottom(p, r);
  }
  return t;
}

Table join_tables(const Category& x, Variance v, ObjectId s, const Table& a, const Table& b) {
  const Quantaloid& q = x.quantaloid();
  Table t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [p, r] = entry_type(x, v, s, i);
    t[i] = q.join(p, r, a[i], b[i]);
  }
  return t;
}

void sort_canonical(const Category& x, Variance v, ObjectId s, std::vector<Table>& tables) {
  const Quantaloid& q = x.quantaloid();
  std::sort(tables.begin(), tables.end(), [&](const Table& a, const Table& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      auto [p, r] = entry_type(x, v, s, i);
      return q.canonical_less(p, r, a[i], b[i]);
    }
    return false;
  });
}

// Closure of {bottom} under joins with the generators, refusing past `cap` tables.
std::vector<Table> join_closure(const Category& x, Variance v, ObjectId s, const std::vector<Table>& generators,
                                std::size_t cap) {
  std::unordered_set<Table, TableHash> seen;
  std::deque<Table> queue;
  std::vector<Table> out;
  Table start = bottom_table(x, v, s);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Table cur = std::move(queue.front());
    queue.pop_front();
    for (const Table& g : generators) {
      Table next = join_tables(x, v, s, cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::enumeration_too_large,
                      "(co)presheaf space exceeds " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(cur));
  }
  sort_canonical(x, v, s, out);
  return out;
}

std::vector<Table> enumerate_tables(const Category& x, Variance v, ObjectId s, const Limits& limits) {
  const Quantaloid& q = x.quantaloid();
  if (!q.enumerable()) {
    throw Error(ErrorCode::enumeration_unsupported,
                "presheaves over " + q.name() + " cannot be enumerated; use the conical spaces");
  }
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [p, r] = entry_type(x, v, s, i);
    const std::uint64_t k = q.elements(p, r).size();
    if (k != 0 && product > limits.max_enum / k) {
      throw Error(ErrorCode::enumeration_too_large,
                  "candidate tables exceed " + std::to_string(limits.max_enum));
    }
    product *= k;
  }
  if (product > limits.max_enum) {
    throw Error(ErrorCode::enumeration_too_large, "candidate tables exceed " + std::to_string(limits.max_enum));
  }
  // Every (co)presheaf is the join of scaled representables.
  std::vector<Table> generators;
  for (std::size_t y = 0; y < x.size(); ++y) {
    const ObjectId ty = x.type(y);
    const auto& scalars = v == Variance::presheaf ? q.elements(ty, s) : q.elements(s, ty);
    for (Value c : scalars) {
      Table g(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        g[i] = v == Variance::presheaf ? q.compose(x.type(i), ty, s, c, x(i, y))
                                       : q.compose(s, ty, x.type(i), x(y, i), c);
      }
      generators.push_back(std::move(g));
    }
  }
  return join_closure(x, v, s, generators, limits.max_space);
}

std::vector<Table> conical_tables(const Category& x, Variance v, ObjectId s, const Limits& limits) {
  std::vector<Table> generators;
  for (std::size_t y : x.carrier().fiber(s)) {
    std::size_t one[] = {y};
    generators.push_back(representable_join(x, v, s, one));
  }
  return join_closure(x, v, s, generators, limits.max_space);
}

}  // namespace

std::vector<Table> enumerate_presheaves(const Category& x, ObjectId s, const Limits& limits) {
  return enumerate_tables(x, Variance::presheaf, s, limits);
}

std::vector<Table> enumerate_copresheaves(const Category& x, ObjectId s, const Limits& limits) {
  return enumerate_tables(x, Variance::copresheaf, s, limits);
}

Value presheaf_hom(const Category& x, ObjectId s, const Table& sigma, ObjectId t, const Table& tau) {
  const Quantaloid& q = x.quantaloid();
  Value acc = q.top(s, t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = q.meet(s, t, acc, q.left_residual(x.type(i), s, t, tau[i], sigma[i]));
  }
  return acc;
}

Value copresheaf_hom(const Category& x, ObjectId s, const Table& sigma, ObjectId t, const Table& tau) {
  const Quantaloid& q = x.quantaloid();
  Value acc = q.top(s, t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = q.meet(s, t, acc, q.right_residual(s, t, x.type(i), tau[i], sigma[i]));
  }
  return acc;
}

Table representable_join(const Category& x, Variance v, ObjectId s, std::span<const std::size_t> generators) {
  const Quantaloid& q = x.quantaloid();
  Table t = bottom_table(x, v, s);
  for (std::size_t g : generators) {
    if (x.type(g) != s) throw Error(ErrorCode::type_mismatch, "generator of the wrong type");
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto [p, r] = entry_type(x, v, s, i);
      t[i] = q.join(p, r, t[i], v == Variance::presheaf ? x(i, g) : x(g, i));
    }
  }
  return t;
}

std::vector<std::size_t> maximal_generators(const Category& x, Variance, ObjectId s, const Table& table) {
  const Quantaloid& q = x.quantaloid();
  std::vector<std::size_t> out;
  for (std::size_t i : x.carrier().fiber(s)) {
    if (q.leq(s, s, q.unit(s), table[i])) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> conicality_certificate(const Category& x, Variance v, ObjectId s,
                                                                const Table& table) {
  auto gens = maximal_generators(x, v, s, table);
  if (representable_join(x, v, s, gens) != table) return std::nullopt;
  return gens;
}

std::string table_name(const Quantaloid& q, const Category& base, Variance v, ObjectId s, const Table& table) {
  std::string out = "(";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ",";
    auto [p, r] = entry_type(base, v, s, i);
    out += q.format(p, r, table[i]);
  }
  return out + ")";
}

namespace {

std::string generator_name(const Category& base, const std::vector<std::size_t>& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += base.carrier().name(gens[i]);
  }
  return out + "}";
}

struct SpaceKey {
  CategoryPtr base;
  Variance variance;
  bool conical;
};

std::mutex cache_mutex;
std::unordered_multimap<std::size_t, std::pair<SpaceKey, CategoryPtr>> space_cache;

CategoryPtr build_space(const CategoryPtr& base, Variance v, bool conical, const Limits& limits) {
  const Category& x = *base;
  const Quantaloid& q = x.quantaloid();
  auto info = std::make_shared<SpaceInfo>();
  info->base = base;
  info->variance = v;
  info->conical = conical;
  std::vector<ObjectId> types;
  for (ObjectId s = 0; s < q.object_count(); ++s) {
    auto tables = conical ? conical_tables(x, v, s, limits) : enumerate_tables(x, v, s, limits);
    if (info->tables.size() + tables.size() > limits.max_space) {
      throw Error(ErrorCode::enumeration_too_large,
                  "(co)presheaf space exceeds " + std::to_string(limits.max_space) + " elements");
    }
    for (auto& t : tables) {
      if (conical) info->generators.push_back(maximal_generators(x, v, s, t));
      info->tables.push_back(std::move(t));
      types.push_back(s);
    }
  }
  info->build_index(types);

  const std::size_t n = types.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = conical ? generator_name(x, info->generators[i]) : table_name(q, x, v, types[i], info->tables[i]);
  }
  TypedSet carrier(types, names);
  Relation hom(base->quantaloid_ptr(), carrier, carrier);
  const bool generator_route = conical && !q.enumerable();
  for (std::size_t i = 0; i < n; ++i) {
    const ObjectId s = types[i];
    for (std::size_t j = 0; j < n; ++j) {
      const ObjectId t = types[j];
      Value h;
      if (generator_route) {
        // Presheaves: hom(join over A, tau) = meet of tau over A.
        // Copresheaves: hom(sigma, join over B) = meet of sigma over B.
        h = q.top(s, t);
        if (v == Variance::presheaf) {
          for (std::size_t g : info->generators[i]) h = q.meet(s, t, h, info->tables[j][g]);
        } else {
          for (std::size_t g : info->generators[j]) h = q.meet(s, t, h, info->tables[i][g]);
        }
      } else if (v == Variance::presheaf) {
        h = presheaf_hom(x, s, info->tables[i], t, info->tables[j]);
      } else {
        h = copresheaf_hom(x, s, info->tables[i], t, info->tables[j]);
      }
      hom.set_unchecked(i, j, h);
    }
  }
  return std::make_shared<const Category>(std::move(carrier), std::move(hom), std::move(info));
}

}  // namespace

CategoryPtr space_category(const CategoryPtr& base, Variance v, bool conical, const Limits& limits) {
  std::size_t key = base->hash();
  boost::hash_combine(key, static_cast<int>(v));
  boost::hash_combine(key, conical);
  {
    std::lock_guard lock(cache_mutex);
    auto [lo, hi] = space_cache.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      const SpaceKey& k = it->second.first;
      if (k.variance == v && k.conical == conical && same_category(k.base, base)) return it->second.second;
    }
  }
  CategoryPtr space = build_space(base, v, conical, limits);
  std::lock_guard lock(cache_mutex);
  space_cache.emplace(key, std::pair{SpaceKey{base, v, conical}, space});
  return space;
}

CategoryPtr presheaf_category(const CategoryPtr& x, const Limits& limits) {
  return space_category(x, Variance::presheaf, false, limits);
}

CategoryPtr copresheaf_category(const CategoryPtr& x, const Limits& limits) {
  return space_category(x, Variance::copresheaf, false, limits);
}

const SpaceInfo& space_info(const Category& space) {
  if (space.space() == nullptr) throw Error(ErrorCode::invalid_input, "category is not a (co)presheaf space");
  return *space.space();
}

Functor functor_into_space(const CategoryPtr& dom, const CategoryPtr& space,
                           const std::function<Table(std::size_t)>& table_of) {
  const SpaceInfo& info = space_info(*space);
  std::vector<std::size_t> map(dom->size());
  for (std::size_t x = 0; x < dom->size(); ++x) {
    Table t = table_of(x);
    auto found = info.find(dom->type(x), t);
    if (!found) {
      const ObjectId s = dom->type(x);
      std::string shown = table_name(dom->quantaloid(), *info.base, info.variance, s, t);
      if (info.conical) {
        throw Error(ErrorCode::conicality_violation, "table " + shown + " is not a join of representables");
      }
      throw Error(ErrorCode::invalid_functor, "table " + shown + " is not in the target space");
    }
    map[x] = *found;
  }
  return Functor{dom, space, std::move(map)};
}

Functor yoneda(const CategoryPtr& x, const CategoryPtr& space) {
  if (space_info(*space).variance != Variance::presheaf || !same_category(space_info(*space).base, x)) {
    throw Error(ErrorCode::type_mismatch, "Yoneda embedding needs a presheaf space over the same category");
  }
  return functor_into_space(x, space, [&](std::size_t e) {
    Table t(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) t[i] = (*x)(i, e);
    return t;
  });
}

Functor yoneda(const CategoryPtr& x) { return yoneda(x, presheaf_category(x)); }

Functor co_yoneda(const CategoryPtr& x, const CategoryPtr& space) {
  if (space_info(*space).variance != Variance::copresheaf || !same_category(space_info(*space).base, x)) {
    throw Error(ErrorCode::type_mismatch, "co-Yoneda embedding needs a copresheaf space over the same category");
  }
  return functor_into_space(x, space, [&](std::size_t e) {
    Table t(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) t[i] = (*x)(e, i);
    return t;
  });
}

Functor co_yoneda(const CategoryPtr& x) { return co_yoneda(x, copresheaf_category(x)); }

Table presheaf_compose(const Table& tau, ObjectId t, const Distributor& phi) {
  const Category& x = *phi.dom();
  const Category& y = *phi.cod();
  const Quantaloid& q = x.quantaloid();
  Table out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Value acc = q.bottom(x.type(i), t);
    for (std::size_t j = 0; j < y.size(); ++j) {
      acc = q.join(x.type(i), t, acc, q.compose(x.type(i), y.type(j), t, tau[j], phi(i, j)));
    }
    out[i] = acc;
  }
  return out;
}

Table copresheaf_compose(const Distributor& phi, const Table& sigma, ObjectId s) {
  const Category& x = *phi.dom();
  const Category& y = *phi.cod();
  const Quantaloid& q = x.quantaloid();
  Table out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    Value acc = q.bottom(s, y.type(j));
    for (std::size_t i = 0; i < x.size(); ++i) {
      acc = q.join(s, y.type(j), acc, q.compose(s, x.type(i), y.type(j), phi(i, j), sigma[i]));
    }
    out[j] = acc;
  }
  return out;
}

namespace {

void require_space_over(const CategoryPtr& space, const CategoryPtr& base, Variance v, const char* what) {
  const SpaceInfo& info = space_info(*space);
  if (info.variance != v || !same_category(info.base, base)) {
    throw Error(ErrorCode::type_mismatch, std::string(what) + ": space is over a different category");
  }
}

}  // namespace

Functor presheaf_action(const Distributor& phi, const CategoryPtr& space_y, const CategoryPtr& space_x) {
  require_space_over(space_y, phi.cod(), Variance::presheaf, "presheaf action");
  require_space_over(space_x, phi.dom(), Variance::presheaf, "presheaf action");
  const SpaceInfo& info = space_info(*space_y);
  return functor_into_space(space_y, space_x, [&](std::size_t e) {
    return presheaf_compose(info.tables[e], space_y->type(e), phi);
  });
}

Functor copresheaf_action(const Distributor& phi, const CategoryPtr& space_x, const CategoryPtr& space_y) {
  require_space_over(space_x, phi.dom(), Variance::copresheaf, "copresheaf action");
  require_space_over(space_y, phi.cod(), Variance::copresheaf, "copresheaf action");
  const SpaceInfo& info = space_info(*space_x);
  return functor_into_space(space_x, space_y, [&](std::size_t e) {
    return copresheaf_compose(phi, info.tables[e], space_x->type(e));
  });
}

Functor presheaf_transpose(const Distributor& phi, const CategoryPtr& space_x) {
  require_space_over(space_x, phi.dom(), Variance::presheaf, "presheaf transpose");
  const std::size_t n = phi.dom()->size();
  return functor_into_space(phi.cod(), space_x, [&](std::size_t y) {
    Table t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = phi(i, y);
    return t;
  });
}

Functor copresheaf_transpose(const Distributor& phi, const CategoryPtr& space_y) {
  require_space_over(space_y, phi.cod(), Variance::copresheaf, "copresheaf transpose");
  const std::size_t n = phi.cod()->size();
  return functor_into_space(phi.dom(), space_y, [&](std::size_t x) {
    Table t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = phi(x, j);
    return t;
  });
}

}  // namespace quantcat
