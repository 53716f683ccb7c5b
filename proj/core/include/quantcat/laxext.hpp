#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quantcat/monad.hpp"

namespace quantcat {

/// A map on Q-distributors over an enriched monad: phi: X -|-> Y goes to
/// TX -|-> TY. Values are memoized by distributor.
class LaxExtension {
 public:
  LaxExtension(std::string name, EnrichedMonadPtr monad);
  virtual ~LaxExtension() = default;

  const std::string& name() const noexcept { return name_; }
  const EnrichedMonadPtr& monad() const noexcept { return monad_; }
  Distributor extend(const Distributor& phi) const;

 protected:
  virtual Distributor compute(const Distributor& phi) const = 0;

 private:
  std::string name_;
  EnrichedMonadPtr monad_;
  mutable std::mutex mutex_;
  mutable std::unordered_multimap<std::size_t, std::pair<Distributor, Distributor>> memo_;
};

using LaxExtensionPtr = std::shared_ptr<const LaxExtension>;

/// (T <-phi)^* . (T y_X)_*. Needs the presheaf space over X; throws
/// EnumerationUnsupported for intensional quantaloids.
Distributor minimal_extension(const EnrichedMonad& t, const Distributor& phi);
LaxExtensionPtr minimal_extension(EnrichedMonadPtr t);

/// (phi^odot)^* over P.
Distributor presheaf_closed_form(const Distributor& phi, const Limits& limits = Limits::defaults());
/// (phi^oplus)_* over P-dagger.
Distributor copresheaf_closed_form(const Distributor& phi, const Limits& limits = Limits::defaults());

/// Closed-form extension for identity, P, Pdagger, H, Hdagger, HHdagger or HdaggerH.
/// Throws InvalidInput for other names.
LaxExtensionPtr closed_form_extension(std::string_view monad_name, const Limits& limits = Limits::defaults());
/// b . top . a on TX -|-> TY.
LaxExtensionPtr largest_extension(EnrichedMonadPtr t);

/// Components lambda_X: SX -> TX of a monad morphism S -> T.
struct MonadMorphism {
  std::string name;
  EnrichedMonadPtr src;
  EnrichedMonadPtr tgt;
  std::function<Functor(const CategoryPtr&)> component;
};

MonadMorphism identity_morphism(EnrichedMonadPtr t);
/// HX -> PX sending a conical presheaf to itself; enumerable Q only.
MonadMorphism hausdorff_inclusion(const Limits& limits = Limits::defaults());
/// Naturality and compatibility with units and multiplications.
Report check_monad_morphism(const MonadMorphism& lambda, const Corpus& corpus);

/// (lambda_Y)^* . T^phi . (lambda_X)_*, an extension of the source monad.
LaxExtensionPtr initial_extension(MonadMorphism lambda, LaxExtensionPtr target);
/// Pointwise meet of two extensions of the same monad.
LaxExtensionPtr meet_extension(LaxExtensionPtr a, LaxExtensionPtr b);

struct LaxCheckOptions {
  /// Composable distributor pairs checked per triple of categories.
  std::size_t max_pairs = 256;
  /// Oplax multiplication extends distributors on TX; skipped above this |TTX|.
  std::size_t max_oplax_mult_carrier = 64;
};

/// Agreement on objects, monotonicity, lax functoriality and identity, the
/// two star inequalities, both whiskering equalities, oplax unit and
/// multiplication, and flatness.
Report check_enriched_lax_extension(const LaxExtension& e, const Corpus& corpus, const LaxCheckOptions& options = {});

/// Whether T y_X is fully faithful. For intensional quantaloids the Yoneda
/// functor is corestricted to the conical presheaves HX.
bool yoneda_preserved(const EnrichedMonad& t, const CategoryPtr& x);
/// One case per corpus category.
Report check_yoneda_full_fidelity(const EnrichedMonad& t, const Corpus& corpus);

/// Refuses unless the candidate is flat on the corpus; then compares it with
/// the minimal extension on every corpus distributor.
Report flat_uniqueness_probe(const LaxExtension& candidate, const Corpus& corpus);
/// minimal <= e for every listed extension and corpus distributor.
Report least_extension_check(const LaxExtension& minimal, const std::vector<LaxExtensionPtr>& registry,
                             const Corpus& corpus);

Json distributor_witness(const Distributor& lhs, const Distributor& rhs);

}  // namespace quantcat
