#include "quantcat/quantaloid.hpp"

#include <algorithm>
#include <mutex>

#include "quantcat/error.hpp"

namespace quantcat {

// ---------------------------------------------------------------------------
// Quantaloid

std::optional<ObjectId> Quantaloid::find_object(std::string_view name) const {
  for (ObjectId p = 0; p < object_count(); ++p) {
    if (object_name(p) == name) return p;
  }
  return std::nullopt;
}

ObjectId Quantaloid::object(std::string_view name) const {
  if (auto p = find_object(name)) return *p;
  throw Error(ErrorCode::unknown_element, "'" + std::string(name) + "' is not an object of " + this->name());
}

void Quantaloid::check_object(ObjectId p) const {
  if (p >= object_count()) {
    throw Error(ErrorCode::unknown_element, "object id " + std::to_string(p) + " out of range for " + name());
  }
}

const std::vector<Value>& Quantaloid::elements(ObjectId, ObjectId) const {
  throw Error(ErrorCode::enumeration_unsupported, "hom lattices of " + name() + " are not enumerable");
}

std::vector<Value> Quantaloid::sample(ObjectId p, ObjectId q, std::mt19937_64&, std::size_t) const {
  return elements(p, q);
}

std::optional<DistributivityFailure> Quantaloid::distributivity_failure() const { return std::nullopt; }

Value Quantaloid::join_all(ObjectId p, ObjectId q, std::span<const Value> values) const {
  Value acc = bottom(p, q);
  for (Value v : values) acc = join(p, q, acc, v);
  return acc;
}

Value Quantaloid::meet_all(ObjectId p, ObjectId q, std::span<const Value> values) const {
  Value acc = top(p, q);
  for (Value v : values) acc = meet(p, q, acc, v);
  return acc;
}

namespace {

void require_in(const Quantaloid& q, const HomElement& e) {
  q.check_object(e.src);
  q.check_object(e.tgt);
  if (!q.contains(e.src, e.tgt, e.value)) {
    throw Error(ErrorCode::unknown_element, "value is not an element of the hom " + q.object_name(e.src) + " -> " +
                                                q.object_name(e.tgt));
  }
}

}  // namespace

HomElement Quantaloid::compose(const HomElement& beta, const HomElement& alpha) const {
  require_in(*this, beta);
  require_in(*this, alpha);
  if (alpha.tgt != beta.src) throw Error(ErrorCode::type_mismatch, "composite of non-composable hom elements");
  return {alpha.src, beta.tgt, compose(alpha.src, alpha.tgt, beta.tgt, beta.value, alpha.value)};
}

HomElement Quantaloid::left_residual(const HomElement& gamma, const HomElement& alpha) const {
  require_in(*this, gamma);
  require_in(*this, alpha);
  if (gamma.src != alpha.src) throw Error(ErrorCode::type_mismatch, "left residual needs a common domain");
  return {alpha.tgt, gamma.tgt, left_residual(alpha.src, alpha.tgt, gamma.tgt, gamma.value, alpha.value)};
}

HomElement Quantaloid::right_residual(const HomElement& beta, const HomElement& gamma) const {
  require_in(*this, beta);
  require_in(*this, gamma);
  if (beta.tgt != gamma.tgt) throw Error(ErrorCode::type_mismatch, "right residual needs a common codomain");
  return {gamma.src, beta.src, right_residual(gamma.src, beta.src, beta.tgt, beta.value, gamma.value)};
}

// ---------------------------------------------------------------------------
// TableQuantaloid

TableQuantaloid::TableQuantaloid(Definition definition) : definition_(std::move(definition)) {
  const std::size_t n = definition_.objects.size();
  if (n == 0) throw Error(ErrorCode::invalid_quantaloid, "a quantaloid needs at least one object");
  if (definition_.homs.size() != n * n) throw Error(ErrorCode::invalid_quantaloid, "expected one hom lattice per object pair");
  if (definition_.compose.size() != n * n * n) {
    throw Error(ErrorCode::invalid_quantaloid, "expected one composition table per object triple");
  }
  if (definition_.units.size() != n) throw Error(ErrorCode::invalid_quantaloid, "expected one unit per object");
  for (ObjectId p = 0; p < n; ++p) {
    if (definition_.units[p] >= hom(p, p).size()) throw Error(ErrorCode::unknown_element, "unit outside its hom lattice");
  }
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId q = 0; q < n; ++q) {
      for (ObjectId r = 0; r < n; ++r) {
        const auto& table = definition_.compose[triple(p, q, r)];
        if (table.size() != hom(q, r).size() * hom(p, q).size()) {
          throw Error(ErrorCode::invalid_quantaloid, "composition table " + definition_.objects[p] + "," + definition_.objects[q] +
                                                         "," + definition_.objects[r] + " has the wrong size");
        }
        for (ElementId v : table) {
          if (v >= hom(p, r).size()) throw Error(ErrorCode::unknown_element, "composite outside its hom lattice");
        }
      }
    }
  }

  elements_.resize(n * n);
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId q = 0; q < n; ++q) {
      auto& list = elements_[p * n + q];
      for (ElementId i = 0; i < hom(p, q).size(); ++i) list.push_back(Value{i});
    }
  }

  left_residuals_.resize(n * n * n);
  right_residuals_.resize(n * n * n);
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId q = 0; q < n; ++q) {
      for (ObjectId r = 0; r < n; ++r) {
        const FiniteLattice& pq = hom(p, q);
        const FiniteLattice& qr = hom(q, r);
        const FiniteLattice& pr = hom(p, r);
        const auto& table = definition_.compose[triple(p, q, r)];
        auto& left = left_residuals_[triple(p, q, r)];
        auto& right = right_residuals_[triple(p, q, r)];
        left.assign(pr.size() * pq.size(), qr.bottom());
        right.assign(qr.size() * pr.size(), pq.bottom());
        for (ElementId gamma = 0; gamma < pr.size(); ++gamma) {
          for (ElementId alpha = 0; alpha < pq.size(); ++alpha) {
            ElementId acc = qr.bottom();
            for (ElementId beta = 0; beta < qr.size(); ++beta) {
              if (pr.leq(table[beta * pq.size() + alpha], gamma)) acc = qr.join(acc, beta);
            }
            left[gamma * pq.size() + alpha] = acc;
          }
          for (ElementId beta = 0; beta < qr.size(); ++beta) {
            ElementId acc = pq.bottom();
            for (ElementId alpha = 0; alpha < pq.size(); ++alpha) {
              if (pr.leq(table[beta * pq.size() + alpha], gamma)) acc = pq.join(acc, alpha);
            }
            right[beta * pr.size() + gamma] = acc;
          }
        }
      }
    }
  }
}

const std::string& TableQuantaloid::object_name(ObjectId p) const {
  check_object(p);
  return definition_.objects[p];
}

Value TableQuantaloid::compose(ObjectId p, ObjectId q, ObjectId r, Value beta, Value alpha) const {
  return {definition_.compose[triple(p, q, r)][beta.id * hom(p, q).size() + alpha.id]};
}

Value TableQuantaloid::left_residual(ObjectId p, ObjectId q, ObjectId r, Value gamma, Value alpha) const {
  return {left_residuals_[triple(p, q, r)][gamma.id * hom(p, q).size() + alpha.id]};
}

Value TableQuantaloid::right_residual(ObjectId p, ObjectId q, ObjectId r, Value beta, Value gamma) const {
  return {right_residuals_[triple(p, q, r)][beta.id * hom(p, r).size() + gamma.id]};
}

Value TableQuantaloid::parse(ObjectId p, ObjectId q, std::string_view text) const {
  check_object(p);
  check_object(q);
  return {hom(p, q).id(text)};
}

const std::vector<Value>& TableQuantaloid::elements(ObjectId p, ObjectId q) const {
  check_object(p);
  check_object(q);
  return elements_[p * object_count() + q];
}

std::optional<DistributivityFailure> TableQuantaloid::distributivity_failure() const {
  for (ObjectId p = 0; p < object_count(); ++p) {
    for (ObjectId q = 0; q < object_count(); ++q) {
      if (auto w = hom(p, q).distributivity_witness()) {
        return DistributivityFailure{p, q, {Value{(*w)[0]}, Value{(*w)[1]}, Value{(*w)[2]}}};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LawvereQuantale

LawvereQuantale::LawvereQuantale() {
  zero_ = value(ExtRational());
  infinity_ = value(ExtRational::infinity());
}

const std::string& LawvereQuantale::object_name(ObjectId p) const {
  check_object(p);
  return object_;
}

Value LawvereQuantale::value(const ExtRational& x) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(x); it != ids_.end()) return Value{it->second};
  }
  std::unique_lock lock(mutex_);
  if (auto it = ids_.find(x); it != ids_.end()) return Value{it->second};
  const auto id = static_cast<std::uint32_t>(pool_.size());
  pool_.push_back(x);
  ids_.emplace(x, id);
  return Value{id};
}

const ExtRational& LawvereQuantale::number(Value v) const {
  std::shared_lock lock(mutex_);
  if (v.id >= pool_.size()) throw Error(ErrorCode::unknown_element, "unknown Lawvere value handle");
  return pool_[v.id];
}

bool LawvereQuantale::contains(ObjectId, ObjectId, Value v) const {
  std::shared_lock lock(mutex_);
  return v.id < pool_.size();
}

bool LawvereQuantale::leq(ObjectId, ObjectId, Value a, Value b) const {
  return a == b || number(a) >= number(b);
}

Value LawvereQuantale::join(ObjectId, ObjectId, Value a, Value b) const {
  return number(a) <= number(b) ? a : b;
}

Value LawvereQuantale::meet(ObjectId, ObjectId, Value a, Value b) const {
  return number(a) >= number(b) ? a : b;
}

Value LawvereQuantale::compose(ObjectId, ObjectId, ObjectId, Value beta, Value alpha) const {
  if (alpha == zero_) return beta;
  if (beta == zero_) return alpha;
  if (alpha == infinity_ || beta == infinity_) return infinity_;
  return value(number(beta) + number(alpha));
}

Value LawvereQuantale::left_residual(ObjectId, ObjectId, ObjectId, Value gamma, Value alpha) const {
  return value(number(gamma).truncated_minus(number(alpha)));
}

Value LawvereQuantale::right_residual(ObjectId, ObjectId, ObjectId, Value beta, Value gamma) const {
  return value(number(gamma).truncated_minus(number(beta)));
}

bool LawvereQuantale::canonical_less(ObjectId, ObjectId, Value a, Value b) const { return number(a) < number(b); }

Value LawvereQuantale::parse(ObjectId, ObjectId, std::string_view text) const {
  return value(ExtRational::parse(text));
}

std::vector<Value> LawvereQuantale::sample(ObjectId, ObjectId, std::mt19937_64& rng, std::size_t count) const {
  std::vector<Value> out;
  out.reserve(count);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<long long> num(0, 40);
  std::uniform_int_distribution<long long> den(1, 6);
  for (std::size_t i = 0; i < count; ++i) {
    switch (kind(rng)) {
      case 0: out.push_back(zero_); break;
      case 1: out.push_back(infinity_); break;
      default: {
        const long long n = num(rng);
        const long long d = den(rng);
        out.push_back(value(ExtRational(Rational(n, d))));
      }
    }
  }
  return out;
}

std::shared_ptr<const LawvereQuantale> lawvere_quantale() {
  static const auto instance = std::make_shared<const LawvereQuantale>();
  return instance;
}

// ---------------------------------------------------------------------------
// Built-ins

namespace {

using HomFn = std::function<FiniteLattice(ObjectId, ObjectId)>;
using ComposeFn = std::function<ElementId(ObjectId, ObjectId, ObjectId, ElementId, ElementId)>;

TableQuantaloid::Definition tabulate(std::string name, std::vector<std::string> objects, const HomFn& hom,
                               const ComposeFn& compose, std::vector<ElementId> units) {
  TableQuantaloid::Definition definition;
  definition.name = std::move(name);
  const auto n = static_cast<ObjectId>(objects.size());
  definition.objects = std::move(objects);
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId q = 0; q < n; ++q) definition.homs.push_back(hom(p, q));
  }
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId q = 0; q < n; ++q) {
      for (ObjectId r = 0; r < n; ++r) {
        const auto pq = static_cast<ElementId>(definition.homs[p * n + q].size());
        const auto qr = static_cast<ElementId>(definition.homs[q * n + r].size());
        std::vector<ElementId> table(static_cast<std::size_t>(pq) * qr);
        for (ElementId beta = 0; beta < qr; ++beta) {
          for (ElementId alpha = 0; alpha < pq; ++alpha) table[beta * pq + alpha] = compose(p, q, r, beta, alpha);
        }
        definition.compose.push_back(std::move(table));
      }
    }
  }
  definition.units = std::move(units);
  return definition;
}

UnitalQuantale chain_quantale(std::string name, std::vector<std::string> names,
                              const std::function<ElementId(ElementId, ElementId)>& tensor) {
  FiniteLattice lattice = FiniteLattice::chain(std::move(names));
  const auto n = static_cast<ElementId>(lattice.size());
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (ElementId b = 0; b < n; ++b) {
    for (ElementId a = 0; a < n; ++a) table[b * n + a] = tensor(b, a);
  }
  return UnitalQuantale{std::move(name), std::move(lattice), std::move(table), n - 1};
}

QuantaloidPtr make_m3arrow() {
  const FiniteLattice two = FiniteLattice::chain({"0", "1"});
  const FiniteLattice m3 = FiniteLattice::diamond_m3();
  const FiniteLattice zero = FiniteLattice::chain({"0"});
  // Objects p = 0, q = 1. Q(p,q) = M3, Q(q,p) = {0}, endo-homs are 2.
  auto hom = [&](ObjectId p, ObjectId q) -> FiniteLattice {
    if (p == q) return two;
    return p == 0 ? m3 : zero;
  };
  auto compose = [&](ObjectId p, ObjectId q, ObjectId r, ElementId beta, ElementId alpha) -> ElementId {
    if (p == 1 && r == 0) return 0;
    if (p == q && q == r) return std::min(beta, alpha);
    if (q == p) return alpha == 1 ? beta : m3.bottom();  // endo then p -> q
    if (q == r) return beta == 1 ? alpha : m3.bottom();  // p -> q then endo
    return 0;                                            // passes through Q(q,p)
  };
  return std::make_shared<TableQuantaloid>(tabulate("m3arrow", {"p", "q"}, hom, compose, {1, 1}));
}

QuantaloidPtr make_two_object() {
  const FiniteLattice two = FiniteLattice::chain({"0", "1"});
  auto hom = [&](ObjectId, ObjectId) { return two; };
  auto compose = [](ObjectId, ObjectId, ObjectId, ElementId beta, ElementId alpha) { return std::min(beta, alpha); };
  return std::make_shared<TableQuantaloid>(tabulate("2obj", {"p", "q"}, hom, compose, {1, 1}));
}

}  // namespace

QuantaloidPtr one_object_wrap(const UnitalQuantale& v) {
  const auto n = static_cast<ElementId>(v.lattice.size());
  if (v.tensor.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::invalid_quantaloid, "tensor table of " + v.name + " has the wrong size");
  }
  TableQuantaloid::Definition definition;
  definition.name = v.name;
  definition.objects = {"*"};
  definition.homs = {v.lattice};
  definition.compose = {v.tensor};
  definition.units = {v.unit};
  auto q = std::make_shared<TableQuantaloid>(std::move(definition));
  const Report report = verify_quantaloid(*q);
  for (const auto& check : report.checks) {
    if (check.verdict == Verdict::fail) {
      throw Error(ErrorCode::invalid_quantaloid, v.name + " fails " + check.name + ": " + check.witness.dump());
    }
  }
  return q;
}

QuantaloidPtr builtin_quantaloid(std::string_view name) {
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  static std::mutex mutex;
  static std::unordered_map<std::string, QuantaloidPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(std::string(name)); it != cache.end()) return it->second;
  QuantaloidPtr q;
  if (name == "2") {
    q = one_object_wrap(chain_quantale("2", {"0", "1"}, [](ElementId b, ElementId a) { return std::min(b, a); }));
  } else if (name == "chain3") {
    q = one_object_wrap(
        chain_quantale("chain3", {"0", "1/2", "1"}, [](ElementId b, ElementId a) { return std::min(b, a); }));
  } else if (name == "lukasiewicz3") {
    q = one_object_wrap(chain_quantale("lukasiewicz3", {"0", "1/2", "1"}, [](ElementId b, ElementId a) {
      return b + a >= 2 ? b + a - 2 : ElementId{0};
    }));
  } else if (name == "lawvere") {
    q = lawvere_quantale();
  } else if (name == "m3arrow") {
    q = make_m3arrow();
  } else if (name == "2obj") {
    q = make_two_object();
  } else {
    throw Error(ErrorCode::invalid_input, "unknown built-in quantaloid '" + std::string(name) + "'");
  }
  cache.emplace(std::string(name), q);
  return q;
}

std::vector<std::string> builtin_quantaloid_names() {
  return {"2", "chain3", "lukasiewicz3", "lawvere", "m3arrow", "2obj"};
}

// ---------------------------------------------------------------------------
// Axiom verification

namespace {

struct Pools {
  const Quantaloid& q;
  bool exhaustive;
  std::mt19937_64 rng;
  std::size_t per_hom;

  std::vector<Value> values(ObjectId p, ObjectId r) {
    if (exhaustive) return q.elements(p, r);
    return q.sample(p, r, rng, per_hom);
  }
};

Json value_json(const Quantaloid& q, ObjectId p, ObjectId r, Value v) { return q.format(p, r, v); }

}  // namespace

Report verify_quantaloid(const Quantaloid& q, const VerifyOptions& options) {
  Report report;
  report.title = "quantaloid " + q.name();
  const bool exhaustive = q.enumerable();
  const std::size_t n = q.object_count();
  // For sampled runs, per-hom pools of size k give k^3 triples per object triple.
  std::size_t k = 2;
  while (k * k * k < options.samples) ++k;
  Pools pools{q, exhaustive, std::mt19937_64(options.seed), k};

  Check assoc("associativity", !exhaustive);
  Check unital("unital", !exhaustive);
  Check join_left("composition preserves joins in the right factor", !exhaustive);
  Check join_right("composition preserves joins in the left factor", !exhaustive);
  Check empty_join("composition preserves the empty join", !exhaustive);
  Check left_adj("left residual adjunction", !exhaustive);
  Check right_adj("right residual adjunction", !exhaustive);

  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId r = 0; r < n; ++r) {
      for (Value alpha : pools.values(p, r)) {
        unital.record(q.compose(p, r, r, q.unit(r), alpha) == alpha && q.compose(p, p, r, alpha, q.unit(p)) == alpha,
                      [&] {
                        return Json{{"objects", {q.object_name(p), q.object_name(r)}},
                                    {"alpha", value_json(q, p, r, alpha)},
                                    {"unit_after", value_json(q, p, r, q.compose(p, r, r, q.unit(r), alpha))},
                                    {"unit_before", value_json(q, p, r, q.compose(p, p, r, alpha, q.unit(p)))}};
                      });
      }
    }
  }

  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId m = 0; m < n; ++m) {
      for (ObjectId r = 0; r < n; ++r) {
        const auto alphas = pools.values(p, m);
        const auto betas = pools.values(m, r);
        const auto gammas = pools.values(p, r);
        empty_join.record(
            [&] {
              for (Value beta : betas) {
                if (q.compose(p, m, r, beta, q.bottom(p, m)) != q.bottom(p, r)) return false;
              }
              for (Value alpha : alphas) {
                if (q.compose(p, m, r, q.bottom(m, r), alpha) != q.bottom(p, r)) return false;
              }
              return true;
            }(),
            [&] { return Json{{"objects", {q.object_name(p), q.object_name(m), q.object_name(r)}}}; });
        for (Value beta : betas) {
          for (std::size_t i = 0; i < alphas.size(); ++i) {
            for (std::size_t j = i; j < alphas.size(); ++j) {
              const Value a1 = alphas[i];
              const Value a2 = alphas[j];
              const Value lhs = q.compose(p, m, r, beta, q.join(p, m, a1, a2));
              const Value rhs = q.join(p, r, q.compose(p, m, r, beta, a1), q.compose(p, m, r, beta, a2));
              join_left.record(lhs == rhs, [&] {
                return Json{{"objects", {q.object_name(p), q.object_name(m), q.object_name(r)}},
                            {"beta", value_json(q, m, r, beta)},
                            {"alpha1", value_json(q, p, m, a1)},
                            {"alpha2", value_json(q, p, m, a2)},
                            {"lhs", value_json(q, p, r, lhs)},
                            {"rhs", value_json(q, p, r, rhs)}};
              });
            }
          }
        }
        for (Value alpha : alphas) {
          for (std::size_t i = 0; i < betas.size(); ++i) {
            for (std::size_t j = i; j < betas.size(); ++j) {
              const Value b1 = betas[i];
              const Value b2 = betas[j];
              const Value lhs = q.compose(p, m, r, q.join(m, r, b1, b2), alpha);
              const Value rhs = q.join(p, r, q.compose(p, m, r, b1, alpha), q.compose(p, m, r, b2, alpha));
              join_right.record(lhs == rhs, [&] {
                return Json{{"objects", {q.object_name(p), q.object_name(m), q.object_name(r)}},
                            {"alpha", value_json(q, p, m, alpha)},
                            {"beta1", value_json(q, m, r, b1)},
                            {"beta2", value_json(q, m, r, b2)},
                            {"lhs", value_json(q, p, r, lhs)},
                            {"rhs", value_json(q, p, r, rhs)}};
              });
            }
          }
        }
        for (Value alpha : alphas) {
          for (Value beta : betas) {
            const Value comp = q.compose(p, m, r, beta, alpha);
            for (Value gamma : gammas) {
              const bool below = q.leq(p, r, comp, gamma);
              const Value lres = q.left_residual(p, m, r, gamma, alpha);
              const Value rres = q.right_residual(p, m, r, beta, gamma);
              auto witness = [&] {
                return Json{{"objects", {q.object_name(p), q.object_name(m), q.object_name(r)}},
                            {"alpha", value_json(q, p, m, alpha)},
                            {"beta", value_json(q, m, r, beta)},
                            {"gamma", value_json(q, p, r, gamma)},
                            {"composite", value_json(q, p, r, comp)},
                            {"left_residual", value_json(q, m, r, lres)},
                            {"right_residual", value_json(q, p, m, rres)}};
              };
              left_adj.record(below == q.leq(m, r, beta, lres), witness);
              right_adj.record(below == q.leq(p, m, alpha, rres), witness);
            }
          }
        }
      }
    }
  }

  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        for (ObjectId r = 0; r < n; ++r) {
          const auto alphas = pools.values(p, a);
          const auto betas = pools.values(a, b);
          const auto gammas = pools.values(b, r);
          for (Value alpha : alphas) {
            for (Value beta : betas) {
              for (Value gamma : gammas) {
                const Value lhs = q.compose(p, b, r, gamma, q.compose(p, a, b, beta, alpha));
                const Value rhs = q.compose(p, a, r, q.compose(a, b, r, gamma, beta), alpha);
                assoc.record(lhs == rhs, [&] {
                  return Json{{"objects", {q.object_name(p), q.object_name(a), q.object_name(b), q.object_name(r)}},
                              {"alpha", value_json(q, p, a, alpha)},
                              {"beta", value_json(q, a, b, beta)},
                              {"gamma", value_json(q, b, r, gamma)},
                              {"lhs", value_json(q, p, r, lhs)},
                              {"rhs", value_json(q, p, r, rhs)}};
                });
              }
            }
          }
        }
      }
    }
  }

  for (Check* c : {&assoc, &unital, &join_left, &join_right, &empty_join, &left_adj, &right_adj}) {
    report.add(c->finish());
  }
  if (auto failure = q.distributivity_failure()) {
    report.notice("hom " + q.object_name(failure->src) + " -> " + q.object_name(failure->tgt) +
                  " is not distributive");
  }
  return report;
}

}  // namespace quantcat
