#pragma once

// Brute-force reference computations the library is checked against.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "quantcat/qcat.hpp"
#include "quantcat/qrel.hpp"
#include "quantcat/quantaloid.hpp"
#include "quantcat/rational.hpp"

namespace oracle {

using quantcat::ObjectId;
using quantcat::Quantaloid;
using quantcat::Value;

/// Join of every beta in Q(q, r) with beta . alpha <= gamma.
inline Value left_residual(const Quantaloid& q, ObjectId p, ObjectId m, ObjectId r, Value gamma, Value alpha) {
  Value acc = q.bottom(m, r);
  for (Value beta : q.elements(m, r)) {
    if (q.leq(p, r, q.compose(p, m, r, beta, alpha), gamma)) acc = q.join(m, r, acc, beta);
  }
  return acc;
}

/// Join of every alpha in Q(p, q) with beta . alpha <= gamma.
inline Value right_residual(const Quantaloid& q, ObjectId p, ObjectId m, ObjectId r, Value beta, Value gamma) {
  Value acc = q.bottom(p, m);
  for (Value alpha : q.elements(p, m)) {
    if (q.leq(p, r, q.compose(p, m, r, beta, alpha), gamma)) acc = q.join(p, m, acc, alpha);
  }
  return acc;
}

/// Boolean matrix product (s . r)(x, z) = exists y: r(x, y) and s(y, z).
inline std::vector<bool> bool_product(const std::vector<bool>& r, const std::vector<bool>& s, std::size_t n,
                                      std::size_t m, std::size_t k) {
  std::vector<bool> out(n * k, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < k; ++z) {
      for (std::size_t y = 0; y < m; ++y) {
        if (r[x * m + y] && s[y * k + z]) {
          out[x * k + z] = true;
          break;
        }
      }
    }
  }
  return out;
}

/// Min-plus product over extended rationals.
inline std::vector<quantcat::ExtRational> min_plus(const std::vector<quantcat::ExtRational>& r,
                                                   const std::vector<quantcat::ExtRational>& s, std::size_t n,
                                                   std::size_t m, std::size_t k) {
  std::vector<quantcat::ExtRational> out(n * k, quantcat::ExtRational::infinity());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < k; ++z) {
      for (std::size_t y = 0; y < m; ++y) out[x * k + z] = std::min(out[x * k + z], r[x * m + y] + s[y * k + z]);
    }
  }
  return out;
}

/// Every table sigma over X of type s with sigma(y) . a(x, y) <= sigma(x), by exhaustive filter.
inline std::vector<std::vector<Value>> naive_presheaves(const quantcat::Category& x, ObjectId s) {
  const Quantaloid& q = x.quantaloid();
  std::vector<std::vector<Value>> out;
  std::vector<std::size_t> digits(x.size(), 0);
  while (true) {
    std::vector<Value> table(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) table[i] = q.elements(x.type(i), s)[digits[i]];
    bool ok = true;
    for (std::size_t a = 0; a < x.size() && ok; ++a) {
      for (std::size_t b = 0; b < x.size() && ok; ++b) {
        ok = q.leq(x.type(a), s, q.compose(x.type(a), x.type(b), s, table[b], x(a, b)), table[a]);
      }
    }
    if (ok) out.push_back(table);
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++digits[i] < q.elements(x.type(i), s).size()) break;
      digits[i] = 0;
    }
    if (i == x.size()) break;
  }
  return out;
}

/// Directed Hausdorff distance sup over a in A of inf over b in B of |a - b| on the line.
inline quantcat::ExtRational directed_hausdorff(const std::vector<quantcat::Rational>& a,
                                                const std::vector<quantcat::Rational>& b) {
  quantcat::ExtRational worst(0);
  for (const auto& p : a) {
    quantcat::ExtRational best = quantcat::ExtRational::infinity();
    for (const auto& r : b) {
      const quantcat::Rational d = p > r ? quantcat::Rational(p - r) : quantcat::Rational(r - p);
      best = std::min(best, quantcat::ExtRational(d));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace oracle
