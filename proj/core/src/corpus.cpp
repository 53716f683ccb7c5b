#include "quantcat/corpus.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "quantcat/error.hpp"

namespace quantcat {

namespace {

// Nondecreasing type vectors of length n over `objects` objects.
void type_vectors(std::size_t n, std::size_t objects, std::vector<ObjectId>& cur,
                  std::vector<std::vector<ObjectId>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const ObjectId from = cur.empty() ? 0 : cur.back();
  for (ObjectId s = from; s < objects; ++s) {
    cur.push_back(s);
    type_vectors(n, objects, cur, out);
    cur.pop_back();
  }
}

std::string element_name(std::size_t i) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0 && out.size() < 4);
  return out;
}

TypedSet named_set(const std::vector<ObjectId>& types) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < types.size(); ++i) names.push_back(element_name(i));
  return TypedSet(types, names);
}

// Candidate values per entry; `diagonal` restricts to values above the unit.
std::vector<std::vector<Value>> candidates(const Quantaloid& q, const TypedSet& x, const TypedSet& y,
                                           bool diagonal) {
  std::vector<std::vector<Value>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const ObjectId p = x.type(i);
      const ObjectId r = y.type(j);
      std::vector<Value> vals;
      for (Value v : q.elements(p, r)) {
        if (diagonal && i == j && !q.leq(p, p, q.unit(p), v)) continue;
        vals.push_back(v);
      }
      out.push_back(std::move(vals));
    }
  }
  return out;
}

std::uint64_t product_size(const std::vector<std::vector<Value>>& cands, std::uint64_t cap) {
  std::uint64_t product = 1;
  for (const auto& c : cands) {
    if (c.empty()) return 0;
    if (product > cap / c.size()) return cap + 1;
    product *= c.size();
  }
  return product;
}

template <class F>
void odometer(const std::vector<std::vector<Value>>& cands, F&& visit) {
  const std::size_t k = cands.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Value> entries(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (cands[i].empty()) return;
    entries[i] = cands[i][0];
  }
  while (true) {
    visit(entries);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < cands[pos].size()) {
        entries[pos] = cands[pos][idx[pos]];
        break;
      }
      idx[pos] = 0;
      entries[pos] = cands[pos][0];
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

std::vector<CategoryPtr> all_categories(const QuantaloidPtr& q, std::size_t max_carrier,
                                        std::uint64_t max_candidates) {
  if (!q->enumerable()) {
    throw Error(ErrorCode::enumeration_unsupported, "categories over " + q->name() + " cannot be enumerated");
  }
  std::vector<CategoryPtr> out;
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    std::vector<std::vector<ObjectId>> types;
    std::vector<ObjectId> cur;
    type_vectors(n, q->object_count(), cur, types);
    for (const auto& ty : types) {
      TypedSet x = named_set(ty);
      auto cands = candidates(*q, x, x, true);
      if (product_size(cands, max_candidates) > max_candidates) {
        throw Error(ErrorCode::enumeration_too_large,
                    "hom matrices on " + std::to_string(n) + " elements exceed " + std::to_string(max_candidates));
      }
      odometer(cands, [&](const std::vector<Value>& entries) {
        Relation a(q, x, x, entries);
        auto check = check_category(a);
        if (check.category) out.push_back(check.category);
      });
    }
  }
  return out;
}

std::vector<Functor> all_functors(const CategoryPtr& x, const CategoryPtr& y) {
  std::vector<Functor> out;
  for (const TypedMap& m : all_typed_maps(x->carrier(), y->carrier())) {
    Functor f{x, y, m.image};
    if (is_functor(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Distributor> distributors_between(const CategoryPtr& x, const CategoryPtr& y, std::size_t cap,
                                              std::uint64_t seed, bool& sampled,
                                              const std::vector<std::string>& value_pool) {
  const QuantaloidPtr& q = x->quantaloid_ptr();
  std::vector<Distributor> out;
  sampled = false;
  if (q->enumerable()) {
    auto cands = candidates(*q, x->carrier(), y->carrier(), false);
    if (product_size(cands, cap) <= cap) {
      odometer(cands, [&](const std::vector<Value>& entries) {
        Distributor d(x, y, Relation(q, x->carrier(), y->carrier(), entries));
        if (d.valid()) out.push_back(std::move(d));
      });
      return out;
    }
  }
  sampled = true;
  std::mt19937_64 rng(seed);
  auto add = [&](const Relation& r) {
    Distributor d = distributor_closure(x, y, r);
    for (const Distributor& e : out) {
      if (e.rel() == d.rel()) return;
    }
    out.push_back(std::move(d));
  };
  add(Relation(q, x->carrier(), y->carrier()));
  add(top_relation(q, x->carrier(), y->carrier()));
  const std::size_t attempts = cap * 4;
  for (std::size_t a = 0; a < attempts && out.size() < cap; ++a) {
    Relation r(q, x->carrier(), y->carrier());
    for (std::size_t i = 0; i < x->size(); ++i) {
      for (std::size_t j = 0; j < y->size(); ++j) {
        const ObjectId p = x->type(i);
        const ObjectId t = y->type(j);
        Value v;
        if (!value_pool.empty() && !q->enumerable()) {
          v = q->parse(p, t, value_pool[rng() % value_pool.size()]);
        } else {
          auto pool = q->sample(p, t, rng, 8);
          v = pool[rng() % pool.size()];
        }
        r.set_unchecked(i, j, v);
      }
    }
    add(r);
  }
  return out;
}

Corpus make_corpus(const QuantaloidPtr& q, std::vector<CategoryPtr> categories, const CorpusOptions& options) {
  Corpus c;
  c.q = q;
  c.categories = std::move(categories);
  for (std::size_t i = 0; i < c.categories.size(); ++i) {
    for (std::size_t j = 0; j < c.categories.size(); ++j) {
      const auto& x = c.categories[i];
      const auto& y = c.categories[j];
      if (options.with_functors) {
        auto fs = all_functors(x, y);
        if (fs.size() > options.max_functors_per_pair) {
          fs.resize(options.max_functors_per_pair);
          c.sampled = true;
        }
        c.functors[{i, j}] = std::move(fs);
      }
      if (options.with_distributors) {
        bool sampled = false;
        c.distributors[{i, j}] = distributors_between(x, y, options.max_distributors_per_pair,
                                                      options.seed + i * 1000 + j, sampled, options.value_pool);
        c.sampled = c.sampled || sampled;
      }
    }
  }
  if (c.sampled) c.notices.push_back("corpus sampled: some functor or distributor spaces exceed the caps");
  return c;
}

Corpus category_corpus(const QuantaloidPtr& q, std::size_t max_carrier, const CorpusOptions& options) {
  return make_corpus(q, all_categories(q, max_carrier), options);
}

CategoryPtr line_category(const std::vector<Rational>& points, std::vector<std::string> names) {
  auto q = lawvere_quantale();
  const std::size_t n = points.size();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(element_name(i));
  }
  TypedSet x(std::vector<ObjectId>(n, 0), std::move(names));
  Relation a(q, x, x);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational d = points[i] - points[j];
      if (d < 0) d = -d;
      a.set_unchecked(i, j, q->value(ExtRational(d)));
    }
  }
  return make_category(a);
}

CategoryPtr metric_category(const std::vector<std::vector<std::string>>& distances, std::vector<std::string> names) {
  auto q = lawvere_quantale();
  const std::size_t n = distances.size();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(element_name(i));
  }
  TypedSet x(std::vector<ObjectId>(n, 0), std::move(names));
  Relation a(q, x, x);
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) throw Error(ErrorCode::invalid_input, "distance matrix must be square");
    for (std::size_t j = 0; j < n; ++j) a.set_unchecked(i, j, q->parse(0, 0, distances[i][j]));
  }
  return make_category(a);
}

std::vector<CategoryPtr> lawvere_fixtures() {
  return {
      line_category({Rational(0), Rational(1), Rational(3)}),
      metric_category({{"0", "3", "4"}, {"3", "0", "5"}, {"4", "5", "0"}}),
      metric_category({{"0", "1", "inf"}, {"1", "0", "inf"}, {"inf", "inf", "0"}}),
      // a(x, y) = max(y - x, 0) on the points 0, 1, 2
      metric_category({{"0", "1", "2"}, {"0", "0", "1"}, {"0", "0", "0"}}),
  };
}

}  // namespace quantcat
