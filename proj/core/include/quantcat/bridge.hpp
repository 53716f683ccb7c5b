#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quantcat/laxext.hpp"

namespace quantcat {

/// The enriched monad (X, a) |-> (TX, T^a) induced by a discrete lax extension.
class LiftedMonad final : public EnrichedMonad {
 public:
  explicit LiftedMonad(DiscreteLaxExtensionPtr source);

  std::string name() const override;
  /// Throws InvalidInput when T^a is not a category.
  CategoryPtr apply(const CategoryPtr& x) const override;
  Functor apply(const Functor& f) const override;
  Functor unit(const CategoryPtr& x) const override;
  Functor mult(const CategoryPtr& x) const override;
  std::optional<Label> label(const CategoryPtr& x, std::size_t element) const override;

  const DiscreteLaxExtensionPtr& source() const noexcept { return source_; }

 private:
  DiscreteLaxExtensionPtr source_;
  mutable std::mutex mutex_;
  mutable std::unordered_multimap<std::size_t, std::pair<CategoryPtr, CategoryPtr>> cache_;
};

struct Lift {
  std::shared_ptr<const LiftedMonad> monad;
  /// phi |-> T^phi read as a distributor (TX, T^a) -|-> (TY, T^b).
  LaxExtensionPtr extension;
};

/// Lifts a discrete lax extension. With a corpus, the discrete monad and
/// extension suites run first and failures raise InvalidInput.
Lift delta(DiscreteLaxExtensionPtr source, const DiscreteCorpus* validate = nullptr);

/// T = o T d on typed sets, m = o m_dX . o T eps, e = o e_dX.
class DiscretizedMonad final : public DiscreteMonad {
 public:
  DiscretizedMonad(EnrichedMonadPtr monad, QuantaloidPtr q);

  std::string name() const override;
  TypedSet apply(const TypedSet& x) const override;
  TypedMap apply(const TypedMap& f) const override;
  TypedMap unit(const TypedSet& x) const override;
  TypedMap mult(const TypedSet& x) const override;
  std::optional<Label> label(const TypedSet& x, std::size_t element) const override;

  const EnrichedMonadPtr& enriched() const noexcept { return monad_; }
  CategoryPtr discrete(const TypedSet& x) const { return discrete_category(q_, x); }

 private:
  EnrichedMonadPtr monad_;
  QuantaloidPtr q_;
};

/// Discretizes an enriched monad and extension: T^r = o T^ d r.
DiscreteLaxExtensionPtr gamma(LaxExtensionPtr extension, QuantaloidPtr q);

struct DiscreteComparisonOptions {
  /// Multiplications are compared only up to this |TTX|.
  std::size_t max_mult_carrier = 4096;
};

/// Compares two laxly extended discrete monads through label bijections:
/// carriers, units, multiplications, action on maps and extension tables.
Report compare_discrete(const DiscreteLaxExtension& a, const DiscreteLaxExtension& b, const DiscreteCorpus& corpus,
                        const DiscreteComparisonOptions& options = {});
/// Gamma(Delta(T)) against T on the corpus.
Report gamma_delta_identity_check(const DiscreteLaxExtensionPtr& source, const DiscreteCorpus& corpus);

/// The counit iota: Delta Gamma T -> T with components o T eps_(X, a);
/// checks functoriality, bijectivity, full fidelity, the iso verdict,
/// naturality and the two triangle identities.
Report counit_iota(const LaxExtensionPtr& extension, const Corpus& corpus);
/// Carrier of T(X, a) against T(X, 1) and the hom of T(X, a) against the
/// extension of a on discrete categories.
Report coreflective_image_check(const LaxExtensionPtr& extension, const Corpus& corpus);

/// Componentwise comparison of a lifted monad with a one-layer doctrine
/// monad: a subset label is sent to the join of its representables.
Report compare_lift_with_doctrine(const LiftedMonad& lifted, const EnrichedMonad& doctrine, const Corpus& corpus);

}  // namespace quantcat
