#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quantcat/qcat.hpp"

namespace quantcat {

/// Every Q-category on carriers of size 0..max_carrier with nondecreasing
/// type assignments. Requires an enumerable quantaloid; throws
/// EnumerationTooLarge when a hom space exceeds `max_candidates`.
std::vector<CategoryPtr> all_categories(const QuantaloidPtr& q, std::size_t max_carrier,
                                        std::uint64_t max_candidates = 1'000'000);

/// Every Q-functor X -> Y.
std::vector<Functor> all_functors(const CategoryPtr& x, const CategoryPtr& y);

/// Every distributor X -|-> Y when the relation space has at most `cap`
/// elements; otherwise a deterministic sample of closures b . r . a.
/// `sampled` is set when sampling was used.
std::vector<Distributor> distributors_between(const CategoryPtr& x, const CategoryPtr& y, std::size_t cap,
                                              std::uint64_t seed, bool& sampled,
                                              const std::vector<std::string>& value_pool = {});

struct CorpusOptions {
  std::size_t max_distributors_per_pair = 256;
  std::size_t max_functors_per_pair = 256;
  /// Values drawn for intensional quantaloids.
  std::vector<std::string> value_pool = {"0", "1", "2", "3", "inf"};
  bool with_distributors = true;
  bool with_functors = true;
  std::uint64_t seed = 11;
};

/// Categories with the functors and distributors between them.
struct Corpus {
  QuantaloidPtr q;
  std::vector<CategoryPtr> categories;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Functor>> functors;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Distributor>> distributors;
  bool sampled = false;
  std::vector<std::string> notices;
};

Corpus make_corpus(const QuantaloidPtr& q, std::vector<CategoryPtr> categories, const CorpusOptions& options = {});
/// all_categories up to `max_carrier`, then make_corpus.
Corpus category_corpus(const QuantaloidPtr& q, std::size_t max_carrier, const CorpusOptions& options = {});

/// Lawvere category of points on the line, a(x, y) = |x - y|.
CategoryPtr line_category(const std::vector<Rational>& points, std::vector<std::string> names = {});
/// Lawvere category from a distance matrix; "inf" allowed. Throws InvalidCategory.
CategoryPtr metric_category(const std::vector<std::vector<std::string>>& distances,
                            std::vector<std::string> names = {});
/// Small Lawvere categories: a 3-point line, a triangle, an extended metric
/// with an infinite distance and a non-symmetric quasi-metric.
std::vector<CategoryPtr> lawvere_fixtures();

}  // namespace quantcat
