#include "quantcat/discrete.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <unordered_map>

#include "quantcat/error.hpp"

namespace quantcat {

// ---------------------------------------------------------------------------
// Labels

Label Label::of_atom(std::size_t i) {
  Label l;
  l.atom = static_cast<std::int64_t>(i);
  return l;
}

Label Label::set_of(std::vector<Label> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Label l;
  l.members = std::move(members);
  return l;
}

Label Label::substitute(const std::vector<Label>& substitution) const {
  if (is_atom()) return substitution.at(static_cast<std::size_t>(atom));
  std::vector<Label> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.substitute(substitution));
  return set_of(std::move(out));
}

std::string Label::to_string() const {
  if (is_atom()) return std::to_string(atom);
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) s += ",";
    s += members[i].to_string();
  }
  return s + "}";
}

bool operator==(const Label& lhs, const Label& rhs) { return lhs.atom == rhs.atom && lhs.members == rhs.members; }

bool operator<(const Label& lhs, const Label& rhs) {
  if (lhs.atom != rhs.atom) return lhs.atom < rhs.atom;
  return std::lexicographical_compare(lhs.members.begin(), lhs.members.end(), rhs.members.begin(),
                                      rhs.members.end());
}

namespace {

Label subset_label(std::uint64_t mask) {
  std::vector<Label> atoms;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) atoms.push_back(Label::of_atom(std::countr_zero(m)));
  return Label::set_of(std::move(atoms));
}

std::string subset_name(const TypedSet& x, std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (!first) s += ",";
    s += x.name(static_cast<std::size_t>(std::countr_zero(m)));
    first = false;
  }
  return s + "}";
}

constexpr std::size_t kMaxNamedCarrier = 4096;

void require_one_type(const TypedSet& x, const std::string& monad) {
  for (ObjectId t : x.types()) {
    if (t != 0) throw Error(ErrorCode::type_mismatch, monad + " needs a typed set over a one-object quantaloid");
  }
}

void require_one_object(const QuantaloidPtr& q, const std::string& what) {
  if (q->object_count() != 1) {
    throw Error(ErrorCode::type_mismatch, what + " needs a one-object quantaloid, got " + q->name());
  }
}

// ---------------------------------------------------------------------------
// Identity

class IdentityMonad final : public DiscreteMonad {
 public:
  std::string name() const override { return "identity"; }
  TypedSet apply(const TypedSet& x) const override { return x; }
  TypedMap apply(const TypedMap& f) const override { return f; }
  TypedMap unit(const TypedSet& x) const override { return identity_map(x); }
  TypedMap mult(const TypedSet& x) const override { return identity_map(x); }
  std::optional<Label> label(const TypedSet&, std::size_t element) const override { return Label::of_atom(element); }
};

// ---------------------------------------------------------------------------
// Powerset

class PowersetMonad final : public DiscreteMonad {
 public:
  explicit PowersetMonad(DiscreteLimits limits) : limits_(limits) {}

  std::string name() const override { return "powerset"; }

  TypedSet apply(const TypedSet& x) const override {
    require_one_type(x, "powerset");
    check_base(x.size());
    const std::uint64_t size = std::uint64_t{1} << x.size();
    std::vector<std::string> names;
    if (size <= kMaxNamedCarrier) {
      for (std::uint64_t m = 0; m < size; ++m) names.push_back(subset_name(x, m));
    }
    return TypedSet(std::vector<ObjectId>(size, 0), std::move(names));
  }

  TypedMap apply(const TypedMap& f) const override {
    TypedSet dom = apply(f.dom);
    TypedSet cod = apply(f.cod);
    std::vector<std::size_t> image(dom.size());
    for (std::size_t m = 0; m < dom.size(); ++m) {
      std::uint64_t out = 0;
      for (std::uint64_t b = m; b != 0; b &= b - 1) out |= std::uint64_t{1} << f.image[std::countr_zero(b)];
      image[m] = out;
    }
    return TypedMap{std::move(dom), std::move(cod), std::move(image)};
  }

  TypedMap unit(const TypedSet& x) const override {
    TypedSet px = apply(x);
    std::vector<std::size_t> image(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) image[i] = std::size_t{1} << i;
    return TypedMap{x, std::move(px), std::move(image)};
  }

  TypedMap mult(const TypedSet& x) const override {
    TypedSet px = apply(x);
    TypedSet ppx = apply(px);
    std::vector<std::size_t> image(ppx.size());
    for (std::size_t big = 0; big < ppx.size(); ++big) {
      // Element i of PX is the subset with mask i; the union of a family is the OR of its members.
      std::uint64_t out = 0;
      for (std::uint64_t b = big; b != 0; b &= b - 1) out |= static_cast<std::uint64_t>(std::countr_zero(b));
      image[big] = static_cast<std::size_t>(out);
    }
    return TypedMap{std::move(ppx), std::move(px), std::move(image)};
  }

  std::optional<Label> label(const TypedSet&, std::size_t element) const override { return subset_label(element); }

 private:
  void check_base(std::size_t n) const {
    if (n > limits_.max_powerset_base || n >= 63) {
      throw Error(ErrorCode::carrier_too_large, "powerset of a " + std::to_string(n) + "-element set exceeds the cap of " +
                                                    std::to_string(limits_.max_powerset_base));
    }
  }

  DiscreteLimits limits_;
};

// ---------------------------------------------------------------------------
// Up-sets

constexpr std::size_t kUpsetHardCap = 4;

/// Up-sets of the subset lattice of an n-element set, as masks over subset masks.
struct UpsetCarrier {
  std::size_t n = 0;
  std::vector<std::uint64_t> upsets;

  std::size_t index(std::uint64_t mask) const {
    auto it = std::lower_bound(upsets.begin(), upsets.end(), mask);
    if (it == upsets.end() || *it != mask) throw Error(ErrorCode::invalid_input, "mask is not an up-set");
    return static_cast<std::size_t>(it - upsets.begin());
  }
};

const UpsetCarrier& upset_carrier(std::size_t n) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, UpsetCarrier> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint64_t> supersets(subsets, 0);
  for (std::uint64_t a = 0; a < subsets; ++a) {
    for (std::uint64_t b = 0; b < subsets; ++b) {
      if ((a & b) == a) supersets[a] |= std::uint64_t{1} << b;
    }
  }
  UpsetCarrier carrier;
  carrier.n = n;
  const std::uint64_t masks = std::uint64_t{1} << subsets;
  for (std::uint64_t m = 0; m < masks; ++m) {
    bool closed = true;
    for (std::uint64_t b = m; b != 0 && closed; b &= b - 1) {
      closed = (supersets[std::countr_zero(b)] & ~m) == 0;
    }
    if (closed) carrier.upsets.push_back(m);
  }
  return cache.emplace(n, std::move(carrier)).first->second;
}

class UpsetMonad final : public DiscreteMonad {
 public:
  explicit UpsetMonad(DiscreteLimits limits) : limits_(limits) {}

  std::string name() const override { return "upset"; }

  TypedSet apply(const TypedSet& x) const override {
    const UpsetCarrier& c = carrier(x);
    std::vector<std::string> names;
    if (c.upsets.size() <= kMaxNamedCarrier) {
      for (std::uint64_t u : c.upsets) names.push_back(upset_name(x, u));
    }
    return TypedSet(std::vector<ObjectId>(c.upsets.size(), 0), std::move(names));
  }

  TypedMap apply(const TypedMap& f) const override {
    const UpsetCarrier& cx = carrier(f.dom);
    const UpsetCarrier& cy = carrier(f.cod);
    const std::uint64_t ysubsets = std::uint64_t{1} << f.cod.size();
    std::vector<std::uint64_t> preimage(ysubsets, 0);
    for (std::uint64_t b = 0; b < ysubsets; ++b) {
      for (std::size_t x = 0; x < f.dom.size(); ++x) {
        if (b >> f.image[x] & 1U) preimage[b] |= std::uint64_t{1} << x;
      }
    }
    std::vector<std::size_t> image(cx.upsets.size());
    for (std::size_t i = 0; i < cx.upsets.size(); ++i) {
      std::uint64_t out = 0;
      for (std::uint64_t b = 0; b < ysubsets; ++b) {
        if (cx.upsets[i] >> preimage[b] & 1U) out |= std::uint64_t{1} << b;
      }
      image[i] = cy.index(out);
    }
    return TypedMap{apply(f.dom), apply(f.cod), std::move(image)};
  }

  TypedMap unit(const TypedSet& x) const override {
    const UpsetCarrier& c = carrier(x);
    const std::uint64_t subsets = std::uint64_t{1} << x.size();
    std::vector<std::size_t> image(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::uint64_t out = 0;
      for (std::uint64_t a = 0; a < subsets; ++a) {
        if (a >> i & 1U) out |= std::uint64_t{1} << a;
      }
      image[i] = c.index(out);
    }
    return TypedMap{x, apply(x), std::move(image)};
  }

  TypedMap mult(const TypedSet& x) const override {
    const UpsetCarrier& cx = carrier(x);
    TypedSet ux = apply(x);
    const UpsetCarrier& cux = carrier(ux);
    const std::uint64_t subsets = std::uint64_t{1} << x.size();
    // sharp[A] = { i in UX : A in upset i } as a mask over UX.
    std::vector<std::uint64_t> sharp(subsets, 0);
    for (std::uint64_t a = 0; a < subsets; ++a) {
      for (std::size_t i = 0; i < cx.upsets.size(); ++i) {
        if (cx.upsets[i] >> a & 1U) sharp[a] |= std::uint64_t{1} << i;
      }
    }
    std::vector<std::size_t> image(cux.upsets.size());
    for (std::size_t k = 0; k < cux.upsets.size(); ++k) {
      std::uint64_t out = 0;
      for (std::uint64_t a = 0; a < subsets; ++a) {
        if (cux.upsets[k] >> sharp[a] & 1U) out |= std::uint64_t{1} << a;
      }
      image[k] = cx.index(out);
    }
    return TypedMap{apply(ux), std::move(ux), std::move(image)};
  }

  std::optional<Label> label(const TypedSet& x, std::size_t element) const override {
    const UpsetCarrier& c = carrier(x);
    std::vector<Label> members;
    for (std::uint64_t b = c.upsets.at(element); b != 0; b &= b - 1) members.push_back(subset_label(std::countr_zero(b)));
    return Label::set_of(std::move(members));
  }

  const UpsetCarrier& carrier(const TypedSet& x) const {
    require_one_type(x, "upset");
    const std::size_t cap = std::min(limits_.max_upset_base, kUpsetHardCap);
    if (x.size() > cap) {
      throw Error(ErrorCode::carrier_too_large, "up-sets of the powerset of a " + std::to_string(x.size()) +
                                                    "-element set exceed the cap of " + std::to_string(cap));
    }
    return upset_carrier(x.size());
  }

 private:
  static std::string upset_name(const TypedSet& x, std::uint64_t upset) {
    // List the minimal members.
    std::string s = "[";
    bool first = true;
    for (std::uint64_t b = upset; b != 0; b &= b - 1) {
      const auto a = static_cast<std::uint64_t>(std::countr_zero(b));
      bool minimal = true;
      for (std::uint64_t c = upset; c != 0 && minimal; c &= c - 1) {
        const auto d = static_cast<std::uint64_t>(std::countr_zero(c));
        if (d != a && (d & a) == d) minimal = false;
      }
      if (!minimal) continue;
      if (!first) s += ",";
      s += subset_name(x, a);
      first = false;
    }
    return s + "]";
  }

  DiscreteLimits limits_;
};

// ---------------------------------------------------------------------------
// Tables shared by the powerset and up-set extensions

constexpr std::size_t kMaxTableBits = 22;

/// check[A * 2^m + B] = meet over x in A of join over y in B of r(x, y).
std::vector<Value> kleisli_table(const Relation& r) {
  const Quantaloid& q = r.quantaloid();
  const std::size_t n = r.rows();
  const std::size_t m = r.cols();
  if (n + m > kMaxTableBits) {
    throw Error(ErrorCode::carrier_too_large, "extension table of size 2^" + std::to_string(n) + " x 2^" +
                                                  std::to_string(m) + " exceeds the cap of 2^" +
                                                  std::to_string(kMaxTableBits) + " entries");
  }
  const std::size_t rows = std::size_t{1} << n;
  const std::size_t cols = std::size_t{1} << m;
  std::vector<Value> joins(n * cols);
  for (std::size_t x = 0; x < n; ++x) {
    joins[x * cols] = q.bottom(0, 0);
    for (std::size_t b = 1; b < cols; ++b) {
      joins[x * cols + b] = q.join(0, 0, joins[x * cols + (b & (b - 1))], r(x, std::countr_zero(b)));
    }
  }
  std::vector<Value> out(rows * cols);
  for (std::size_t b = 0; b < cols; ++b) out[b] = q.top(0, 0);
  for (std::size_t a = 1; a < rows; ++a) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(a));
    for (std::size_t b = 0; b < cols; ++b) {
      out[a * cols + b] = q.meet(0, 0, out[(a & (a - 1)) * cols + b], joins[low * cols + b]);
    }
  }
  return out;
}

/// hat[A * 2^m + B] = meet over y in B of join over x in A of r(x, y).
std::vector<Value> hat_table(const Relation& r) {
  const Quantaloid& q = r.quantaloid();
  const std::size_t n = r.rows();
  const std::size_t m = r.cols();
  if (n + m > kMaxTableBits) {
    throw Error(ErrorCode::carrier_too_large, "extension table of size 2^" + std::to_string(n) + " x 2^" +
                                                  std::to_string(m) + " exceeds the cap of 2^" +
                                                  std::to_string(kMaxTableBits) + " entries");
  }
  const std::size_t rows = std::size_t{1} << n;
  const std::size_t cols = std::size_t{1} << m;
  std::vector<Value> joins(m * rows);
  for (std::size_t y = 0; y < m; ++y) {
    joins[y * rows] = q.bottom(0, 0);
    for (std::size_t a = 1; a < rows; ++a) {
      joins[y * rows + a] = q.join(0, 0, joins[y * rows + (a & (a - 1))], r(std::countr_zero(a), y));
    }
  }
  std::vector<Value> out(rows * cols);
  for (std::size_t a = 0; a < rows; ++a) out[a * cols] = q.top(0, 0);
  for (std::size_t b = 1; b < cols; ++b) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(b));
    for (std::size_t a = 0; a < rows; ++a) {
      out[a * cols + b] = q.meet(0, 0, out[a * cols + (b & (b - 1))], joins[low * rows + a]);
    }
  }
  return out;
}

class BaseExtension : public DiscreteLaxExtension {
 public:
  BaseExtension(std::string name, DiscreteMonadPtr monad, QuantaloidPtr q)
      : name_(std::move(name)), monad_(std::move(monad)), q_(std::move(q)) {}
  std::string name() const override { return name_; }
  const DiscreteMonadPtr& monad() const override { return monad_; }
  const QuantaloidPtr& quantaloid() const override { return q_; }

 protected:
  void require_q(const Relation& r) const {
    if (r.quantaloid_ptr() != q_) throw Error(ErrorCode::type_mismatch, name_ + " applied to a relation over another quantaloid");
  }

 private:
  std::string name_;
  DiscreteMonadPtr monad_;
  QuantaloidPtr q_;
};

class IdentityExtension final : public BaseExtension {
 public:
  explicit IdentityExtension(QuantaloidPtr q) : BaseExtension("identity", discrete_identity_monad(), std::move(q)) {}
  Relation extend(const Relation& r) const override {
    require_q(r);
    return r;
  }
};

class CollapseExtension final : public BaseExtension {
 public:
  explicit CollapseExtension(QuantaloidPtr q) : BaseExtension("collapse", discrete_identity_monad(), std::move(q)) {}
  Relation extend(const Relation& r) const override {
    require_q(r);
    const Quantaloid& q = r.quantaloid();
    Relation out = r;
    for (std::size_t x = 0; x < r.rows(); ++x) {
      for (std::size_t y = 0; y < r.cols(); ++y) {
        const ObjectId p = r.src().type(x);
        const ObjectId t = r.tgt().type(y);
        out.set_unchecked(x, y, r(x, y) == q.bottom(p, t) ? q.bottom(p, t) : q.top(p, t));
      }
    }
    return out;
  }
};

class PowersetExtension final : public BaseExtension {
 public:
  PowersetExtension(QuantaloidPtr q, const DiscreteLimits& limits, bool hat)
      : BaseExtension(hat ? "powerset-hat" : "powerset-kleisli", powerset_monad(limits), std::move(q)), hat_(hat) {
    require_one_object(quantaloid(), name());
  }
  Relation extend(const Relation& r) const override {
    require_q(r);
    TypedSet src = monad()->apply(r.src());
    TypedSet tgt = monad()->apply(r.tgt());
    return Relation(quantaloid(), std::move(src), std::move(tgt), hat_ ? hat_table(r) : kleisli_table(r));
  }

 private:
  bool hat_;
};

class UpsetExtension final : public BaseExtension {
 public:
  UpsetExtension(QuantaloidPtr q, const DiscreteLimits& limits, bool all_sources)
      : BaseExtension(all_sources ? "upset-all-sources" : "upset-all-targets", upset_monad(limits), std::move(q)),
        all_sources_(all_sources) {
    require_one_object(quantaloid(), name());
  }

  Relation extend(const Relation& r) const override {
    require_q(r);
    const auto& monad = static_cast<const UpsetMonad&>(*this->monad());
    const UpsetCarrier& cx = monad.carrier(r.src());
    const UpsetCarrier& cy = monad.carrier(r.tgt());
    const Quantaloid& q = r.quantaloid();
    const std::size_t cols = std::size_t{1} << r.cols();
    const std::vector<Value> inner = all_sources_ ? hat_table(r) : kleisli_table(r);
    std::vector<Value> entries(cx.upsets.size() * cy.upsets.size());
    for (std::size_t i = 0; i < cx.upsets.size(); ++i) {
      for (std::size_t j = 0; j < cy.upsets.size(); ++j) {
        const std::uint64_t ua = cx.upsets[i];
        const std::uint64_t ub = cy.upsets[j];
        Value outer = q.top(0, 0);
        if (all_sources_) {
          // meet over A in a, join over B in b
          for (std::uint64_t s = ua; s != 0; s &= s - 1) {
            const auto a = static_cast<std::size_t>(std::countr_zero(s));
            Value acc = q.bottom(0, 0);
            for (std::uint64_t t = ub; t != 0; t &= t - 1) acc = q.join(0, 0, acc, inner[a * cols + std::countr_zero(t)]);
            outer = q.meet(0, 0, outer, acc);
          }
        } else {
          // meet over B in b, join over A in a
          for (std::uint64_t t = ub; t != 0; t &= t - 1) {
            const auto b = static_cast<std::size_t>(std::countr_zero(t));
            Value acc = q.bottom(0, 0);
            for (std::uint64_t s = ua; s != 0; s &= s - 1) acc = q.join(0, 0, acc, inner[std::countr_zero(s) * cols + b]);
            outer = q.meet(0, 0, outer, acc);
          }
        }
        entries[i * cy.upsets.size() + j] = outer;
      }
    }
    return Relation(quantaloid(), monad.apply(r.src()), monad.apply(r.tgt()), std::move(entries));
  }

 private:
  bool all_sources_;
};

class FunctionExtension final : public BaseExtension {
 public:
  FunctionExtension(std::string name, DiscreteMonadPtr monad, QuantaloidPtr q,
                    std::function<Relation(const Relation&)> extend)
      : BaseExtension(std::move(name), std::move(monad), std::move(q)), extend_(std::move(extend)) {}
  Relation extend(const Relation& r) const override {
    require_q(r);
    return extend_(r);
  }

 private:
  std::function<Relation(const Relation&)> extend_;
};

}  // namespace

DiscreteMonadPtr discrete_identity_monad() {
  static const auto instance = std::make_shared<const IdentityMonad>();
  return instance;
}

DiscreteMonadPtr powerset_monad(const DiscreteLimits& limits) { return std::make_shared<PowersetMonad>(limits); }

DiscreteMonadPtr upset_monad(const DiscreteLimits& limits) { return std::make_shared<UpsetMonad>(limits); }

DiscreteLaxExtensionPtr identity_extension(const QuantaloidPtr& q) { return std::make_shared<IdentityExtension>(q); }

DiscreteLaxExtensionPtr collapse_extension(const QuantaloidPtr& q) { return std::make_shared<CollapseExtension>(q); }

DiscreteLaxExtensionPtr powerset_kleisli_extension(const QuantaloidPtr& q, const DiscreteLimits& limits) {
  return std::make_shared<PowersetExtension>(q, limits, false);
}

DiscreteLaxExtensionPtr powerset_hat_extension(const QuantaloidPtr& q, const DiscreteLimits& limits) {
  return std::make_shared<PowersetExtension>(q, limits, true);
}

DiscreteLaxExtensionPtr upset_all_sources_extension(const QuantaloidPtr& q, const DiscreteLimits& limits) {
  return std::make_shared<UpsetExtension>(q, limits, true);
}

DiscreteLaxExtensionPtr upset_all_targets_extension(const QuantaloidPtr& q, const DiscreteLimits& limits) {
  return std::make_shared<UpsetExtension>(q, limits, false);
}

DiscreteLaxExtensionPtr function_extension(std::string name, DiscreteMonadPtr monad, QuantaloidPtr q,
                                           std::function<Relation(const Relation&)> extend) {
  return std::make_shared<FunctionExtension>(std::move(name), std::move(monad), std::move(q), std::move(extend));
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

std::vector<std::string> element_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

std::vector<std::vector<ObjectId>> nondecreasing_types(std::size_t size, std::size_t objects) {
  std::vector<std::vector<ObjectId>> out;
  std::vector<ObjectId> cur;
  std::function<void(ObjectId)> rec = [&](ObjectId from) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (ObjectId t = from; t < objects; ++t) {
      cur.push_back(t);
      rec(t);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

DiscreteCorpus make_discrete_corpus(const QuantaloidPtr& q, const DiscreteCorpusOptions& options) {
  if (options.max_size > 8) {
    throw Error(ErrorCode::corpus_too_large, "discrete corpus size " + std::to_string(options.max_size) +
                                                 " exceeds the limit of 8");
  }
  DiscreteCorpus corpus;
  corpus.q = q;
  for (std::size_t n = 0; n <= options.max_size; ++n) {
    for (auto& types : nondecreasing_types(n, q->object_count())) {
      corpus.sets.emplace_back(std::move(types), element_names(n));
    }
  }

  std::vector<Value> pool;
  if (!q->enumerable()) {
    for (const auto& text : options.value_pool) pool.push_back(q->parse(0, 0, text));
  }
  std::mt19937_64 rng(options.seed);

  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    for (std::size_t j = 0; j < corpus.sets.size(); ++j) {
      const TypedSet& x = corpus.sets[i];
      const TypedSet& y = corpus.sets[j];
      std::vector<std::vector<Value>> candidates;
      double total = 1;
      for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = 0; b < y.size(); ++b) {
          candidates.push_back(q->enumerable() ? q->elements(x.type(a), y.type(b)) : pool);
          total *= static_cast<double>(candidates.back().size());
        }
      }
      auto& bucket = corpus.relations[{i, j}];
      if (total <= static_cast<double>(options.max_relations_per_pair)) {
        std::vector<std::size_t> pos(candidates.size(), 0);
        while (true) {
          std::vector<Value> entries(candidates.size());
          for (std::size_t k = 0; k < candidates.size(); ++k) entries[k] = candidates[k][pos[k]];
          bucket.emplace_back(q, x, y, std::move(entries));
          std::size_t k = candidates.size();
          bool done = true;
          while (k > 0) {
            --k;
            if (++pos[k] < candidates[k].size()) {
              done = false;
              break;
            }
            pos[k] = 0;
          }
          if (done) break;
        }
      } else {
        corpus.sampled = true;
        bucket.push_back(Relation(q, x, y));
        bucket.push_back(top_relation(q, x, y));
        while (bucket.size() < options.max_relations_per_pair) {
          std::vector<Value> entries(candidates.size());
          for (std::size_t k = 0; k < candidates.size(); ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, candidates[k].size() - 1);
            entries[k] = candidates[k][pick(rng)];
          }
          bucket.emplace_back(q, x, y, std::move(entries));
        }
      }
      corpus.maps[{i, j}] = all_typed_maps(x, y);
    }
  }
  if (corpus.sampled) {
    corpus.notices.push_back("relations sampled: " + std::to_string(options.max_relations_per_pair) +
                             " per endpoint pair where the full space is larger");
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Law suites

namespace {

Json entry_witness(const Relation& lhs, const Relation& rhs, std::pair<std::size_t, std::size_t> at) {
  const Quantaloid& q = lhs.quantaloid();
  const ObjectId p = lhs.src().type(at.first);
  const ObjectId t = lhs.tgt().type(at.second);
  return Json{{"at", Json::array({lhs.src().name(at.first), lhs.tgt().name(at.second)})},
              {"lhs", q.format(p, t, lhs(at.first, at.second))},
              {"rhs", q.format(p, t, rhs(at.first, at.second))}};
}

bool maps_equal(const TypedMap& a, const TypedMap& b) { return a.dom == b.dom && a.cod == b.cod && a.image == b.image; }

Json map_witness(const TypedMap& a, const TypedMap& b) {
  for (std::size_t i = 0; i < std::min(a.image.size(), b.image.size()); ++i) {
    if (a.image[i] != b.image[i]) {
      return Json{{"element", a.dom.name(i)}, {"lhs", a.cod.name(a.image[i])}, {"rhs", b.cod.name(b.image[i])}};
    }
  }
  return Json{{"reason", "endpoints differ"}};
}

}  // namespace

Report check_discrete_monad(const DiscreteMonad& t, const DiscreteCorpus& corpus, const DiscreteCheckOptions& options) {
  Report report;
  report.title = "discrete monad " + t.name();
  Check left_unit("left unit");
  Check right_unit("right unit");
  Check assoc("associativity");
  Check unit_nat("unit naturality");
  Check mult_nat("multiplication naturality");
  Check identities("preserves identities");
  Check composition("preserves composition");

  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    const TypedSet& x = corpus.sets[i];
    try {
      const TypedSet tx = t.apply(x);
      const TypedMap id_tx = identity_map(tx);
      identities.record(maps_equal(t.apply(identity_map(x)), id_tx), [&] { return Json{{"set", x.size()}}; });
      const TypedMap e_x = t.unit(x);
      const TypedMap m_x = t.mult(x);
      const TypedMap e_tx = t.unit(tx);
      const TypedMap lhs_left = compose(m_x, e_tx);
      left_unit.record(maps_equal(lhs_left, id_tx), [&] { return map_witness(lhs_left, id_tx); });
      const TypedMap lhs_right = compose(m_x, t.apply(e_x));
      right_unit.record(maps_equal(lhs_right, id_tx), [&] { return map_witness(lhs_right, id_tx); });
      const TypedSet ttx = t.apply(tx);
      if (ttx.size() <= options.max_associativity_carrier) {
        try {
          const TypedMap a = compose(m_x, t.apply(m_x));
          const TypedMap b = compose(m_x, t.mult(tx));
          assoc.record(maps_equal(a, b), [&] { return map_witness(a, b); });
        } catch (const Error& err) {
          report.notice("associativity skipped for |X| = " + std::to_string(x.size()) + ": " + err.what());
        }
      } else {
        report.notice("associativity skipped for |X| = " + std::to_string(x.size()) + ": |TTX| = " +
                      std::to_string(ttx.size()) + " exceeds cap");
      }
    } catch (const Error& err) {
      report.notice("monad laws skipped for |X| = " + std::to_string(x.size()) + ": " + err.what());
    }
  }

  for (const auto& [key, maps] : corpus.maps) {
    const TypedSet& x = corpus.sets[key.first];
    const TypedSet& y = corpus.sets[key.second];
    try {
      const TypedMap e_x = t.unit(x);
      const TypedMap e_y = t.unit(y);
      std::optional<TypedMap> m_x;
      std::optional<TypedMap> m_y;
      try {
        m_x = t.mult(x);
        m_y = t.mult(y);
      } catch (const Error& err) {
        report.notice("multiplication naturality skipped for |X| = " + std::to_string(x.size()) + ", |Y| = " +
                      std::to_string(y.size()) + ": " + err.what());
      }
      for (const TypedMap& f : maps) {
        const TypedMap tf = t.apply(f);
        const TypedMap a = compose(tf, e_x);
        const TypedMap b = compose(e_y, f);
        unit_nat.record(maps_equal(a, b), [&] { return map_witness(a, b); });
        if (m_x && m_y) {
          const TypedMap c = compose(tf, *m_x);
          const TypedMap d = compose(*m_y, t.apply(tf));
          mult_nat.record(maps_equal(c, d), [&] { return map_witness(c, d); });
        }
        for (std::size_t k = 0; k < corpus.sets.size(); ++k) {
          auto it = corpus.maps.find({key.second, k});
          if (it == corpus.maps.end()) continue;
          std::size_t budget = 16;
          for (const TypedMap& g : it->second) {
            if (budget-- == 0) break;
            const TypedMap lhs = t.apply(compose(g, f));
            const TypedMap rhs = compose(t.apply(g), tf);
            composition.record(maps_equal(lhs, rhs), [&] { return map_witness(lhs, rhs); });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("naturality skipped for |X| = " + std::to_string(x.size()) + ", |Y| = " +
                    std::to_string(y.size()) + ": " + err.what());
    }
  }
  for (Check* c : {&left_unit, &right_unit, &assoc, &unit_nat, &mult_nat, &identities, &composition}) {
    report.add(c->finish());
  }
  return report;
}

Report check_discrete_lax_extension(const DiscreteLaxExtension& e, const DiscreteCorpus& corpus,
                                    const DiscreteCheckOptions& options) {
  Report report;
  report.title = "discrete lax extension " + e.name() + " of " + e.monad()->name();
  const DiscreteMonad& t = *e.monad();
  const QuantaloidPtr& q = corpus.q;
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
  bool not_flat = false;

  // Extension values per relation bucket; a bucket is absent when T is not defined there.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Relation>> extended;
  for (const auto& [key, rels] : corpus.relations) {
    const TypedSet& x = corpus.sets[key.first];
    const TypedSet& y = corpus.sets[key.second];
    try {
      const TypedSet tx = t.apply(x);
      const TypedSet ty = t.apply(y);
      std::vector<Relation> values;
      values.reserve(rels.size());
      for (const Relation& r : rels) {
        Relation er = e.extend(r);
        objects.record(er.src() == tx && er.tgt() == ty, [&] { return Json{{"relation", relation_json(r)}}; });
        values.push_back(std::move(er));
      }
      extended.emplace(key, std::move(values));
    } catch (const Error& err) {
      report.notice("relations " + std::to_string(x.size()) + "x" + std::to_string(y.size()) +
                    " skipped: " + err.what());
    }
  }

  std::size_t pair_cap_hits = 0;
  for (const auto& [key, values] : extended) {
    const auto& rels = corpus.relations.at(key);
    std::size_t budget = options.max_pairs * 64;
    for (std::size_t a = 0; a < rels.size(); ++a) {
      for (std::size_t b = 0; b < rels.size(); ++b) {
        if (a == b || !leq(rels[a], rels[b])) continue;
        if (budget == 0) {
          ++pair_cap_hits;
          break;
        }
        --budget;
        auto v = first_violation(values[a], values[b]);
        monotone.record(!v, [&] {
          return Json{{"smaller", relation_json(rels[a])}, {"larger", relation_json(rels[b])},
                      {"entry", entry_witness(values[a], values[b], *v)}};
        });
      }
    }
  }

  for (const auto& [rkey, rvalues] : extended) {
    for (const auto& [skey, svalues] : extended) {
      if (rkey.second != skey.first) continue;
      const auto& rs = corpus.relations.at(rkey);
      const auto& ss = corpus.relations.at(skey);
      const std::size_t total = rs.size() * ss.size();
      const std::size_t stride = total > options.max_pairs ? total / options.max_pairs + 1 : 1;
      if (stride > 1) ++pair_cap_hits;
      for (std::size_t k = 0; k < total; k += stride) {
        const std::size_t a = k / ss.size();
        const std::size_t b = k % ss.size();
        try {
          const Relation lhs = compose(svalues[b], rvalues[a]);
          const Relation rhs = e.extend(compose(ss[b], rs[a]));
          auto v = first_violation(lhs, rhs);
          lax_comp.record(!v, [&] {
            return Json{{"r", relation_json(rs[a])}, {"s", relation_json(ss[b])}, {"entry", entry_witness(lhs, rhs, *v)}};
          });
        } catch (const Error& err) {
          report.notice(std::string("lax functoriality case skipped: ") + err.what());
        }
      }
    }
  }
  if (pair_cap_hits > 0) {
    lax_comp.set_sampled();
    monotone.set_sampled();
    report.notice("pair enumeration capped in " + std::to_string(pair_cap_hits) + " buckets");
  }

  for (std::size_t i = 0; i < corpus.sets.size(); ++i) {
    const TypedSet& x = corpus.sets[i];
    try {
      const TypedSet tx = t.apply(x);
      const Relation ext_id = e.extend(identity_relation(q, x));
      const Relation id_tx = identity_relation(q, tx);
      auto v = first_violation(id_tx, ext_id);
      lax_id.record(!v, [&] { return Json{{"set", x.size()}, {"entry", entry_witness(id_tx, ext_id, *v)}}; });
      auto d = first_difference(ext_id, id_tx);
      if (options.require_flat) {
        flat.record(!d, [&] { return Json{{"set", x.size()}, {"entry", entry_witness(ext_id, id_tx, *d)}}; });
      } else if (d && !not_flat) {
        not_flat = true;
        report.notice("not flat: " + Json{{"set", x.size()}, {"entry", entry_witness(ext_id, id_tx, *d)}}.dump());
      }
    } catch (const Error& err) {
      report.notice("identity checks skipped for |X| = " + std::to_string(x.size()) + ": " + err.what());
    }
  }

  for (const auto& [key, maps] : corpus.maps) {
    const TypedSet& x = corpus.sets[key.first];
    const TypedSet& y = corpus.sets[key.second];
    try {
      for (const TypedMap& f : maps) {
        const TypedMap tf = t.apply(f);
        const Relation g = e.extend(graph(q, f));
        const Relation tg = graph(q, tf);
        auto v = first_violation(tg, g);
        graph_ineq.record(!v, [&] { return Json{{"map", typed_map_json(f)}, {"entry", entry_witness(tg, g, *v)}}; });
        const Relation c = e.extend(cograph(q, f));
        const Relation tc = cograph(q, tf);
        auto w = first_violation(tc, c);
        cograph_ineq.record(!w, [&] { return Json{{"map", typed_map_json(f)}, {"entry", entry_witness(tc, c, *w)}}; });

        // Cograph whiskering: r: Z -|-> Y gives f^o . r : Z -|-> X.
        for (const auto& [rkey, rvalues] : extended) {
          if (rkey.second != key.second) continue;
          if (!extended.count({rkey.first, key.first})) continue;
          const auto& rs = corpus.relations.at(rkey);
          for (std::size_t a = 0; a < rs.size(); a += std::max<std::size_t>(1, rs.size() / 64)) {
            const Relation lhs = e.extend(compose(cograph(q, f), rs[a]));
            const Relation rhs = compose(tc, rvalues[a]);
            auto d = first_difference(lhs, rhs);
            left_whisker.record(!d, [&] {
              return Json{{"map", typed_map_json(f)}, {"r", relation_json(rs[a])}, {"entry", entry_witness(lhs, rhs, *d)}};
            });
          }
        }
        // Graph whiskering: s: Y -|-> Z gives s . f_o : X -|-> Z.
        for (const auto& [skey, svalues] : extended) {
          if (skey.first != key.second) continue;
          if (!extended.count({key.first, skey.second})) continue;
          const auto& ss = corpus.relations.at(skey);
          for (std::size_t b = 0; b < ss.size(); b += std::max<std::size_t>(1, ss.size() / 64)) {
            const Relation lhs = e.extend(compose(ss[b], graph(q, f)));
            const Relation rhs = compose(svalues[b], tg);
            auto d = first_difference(lhs, rhs);
            right_whisker.record(!d, [&] {
              return Json{{"map", typed_map_json(f)}, {"s", relation_json(ss[b])}, {"entry", entry_witness(lhs, rhs, *d)}};
            });
          }
        }
      }
    } catch (const Error& err) {
      report.notice("map checks skipped for |X| = " + std::to_string(x.size()) + ", |Y| = " +
                    std::to_string(y.size()) + ": " + err.what());
    }
  }
  if (!extended.empty()) {
    left_whisker.set_sampled();
    right_whisker.set_sampled();
  }

  for (const auto& [key, values] : extended) {
    const TypedSet& x = corpus.sets[key.first];
    const TypedSet& y = corpus.sets[key.second];
    const auto& rels = corpus.relations.at(key);
    try {
      const Relation ex = graph(q, t.unit(x));
      const Relation ey = graph(q, t.unit(y));
      for (std::size_t a = 0; a < rels.size(); ++a) {
        const Relation lhs = compose(ey, rels[a]);
        const Relation rhs = compose(values[a], ex);
        auto v = first_violation(lhs, rhs);
        oplax_unit.record(!v, [&] { return Json{{"r", relation_json(rels[a])}, {"entry", entry_witness(lhs, rhs, *v)}}; });
      }
    } catch (const Error& err) {
      report.notice(std::string("oplax unit skipped: ") + err.what());
    }
    try {
      const TypedSet tx = t.apply(x);
      const TypedSet ty = t.apply(y);
      if (t.apply(tx).size() > options.max_oplax_mult_carrier || t.apply(ty).size() > options.max_oplax_mult_carrier) {
        report.notice("oplax multiplication skipped for " + std::to_string(x.size()) + "x" + std::to_string(y.size()) +
                      ": |TTX| exceeds cap");
        continue;
      }
      const Relation mx = graph(q, t.mult(x));
      const Relation my = graph(q, t.mult(y));
      const std::size_t stride = std::max<std::size_t>(1, rels.size() / 64);
      for (std::size_t a = 0; a < rels.size(); a += stride) {
        const Relation lhs = compose(my, e.extend(values[a]));
        const Relation rhs = compose(values[a], mx);
        auto v = first_violation(lhs, rhs);
        oplax_mult.record(!v, [&] { return Json{{"r", relation_json(rels[a])}, {"entry", entry_witness(lhs, rhs, *v)}}; });
      }
      if (stride > 1) oplax_mult.set_sampled();
    } catch (const Error& err) {
      report.notice(std::string("oplax multiplication skipped: ") + err.what());
    }
  }

  for (Check* c : {&objects, &monotone, &lax_comp, &lax_id, &graph_ineq, &cograph_ineq, &left_whisker, &right_whisker,
                   &oplax_unit, &oplax_mult}) {
    report.add(c->finish());
  }
  if (options.require_flat) report.add(flat.finish());
  for (const auto& n : corpus.notices) report.notice(n);
  return report;
}

std::optional<Json> extension_difference(const DiscreteLaxExtension& a, const DiscreteLaxExtension& b,
                                         const DiscreteCorpus& corpus) {
  for (const auto& [key, rels] : corpus.relations) {
    for (const Relation& r : rels) {
      Relation ra(corpus.q, {}, {});
      Relation rb(corpus.q, {}, {});
      try {
        ra = a.extend(r);
        rb = b.extend(r);
      } catch (const Error&) {
        break;
      }
      if (!(ra.src() == rb.src()) || !(ra.tgt() == rb.tgt())) continue;
      if (auto d = first_difference(ra, rb)) {
        return Json{{"relation", relation_json(r)}, {"entry", entry_witness(ra, rb, *d)},
                    {"lhs_extension", a.name()}, {"rhs_extension", b.name()}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace quantcat
