#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quantcat/corpus.hpp"
#include "quantcat/discrete.hpp"
#include "quantcat/presheaf.hpp"

namespace quantcat {

/// A monad on Q-categories, given by its action on objects and functors,
/// its unit and its multiplication.
class EnrichedMonad {
 public:
  virtual ~EnrichedMonad() = default;
  virtual std::string name() const = 0;
  virtual CategoryPtr apply(const CategoryPtr& x) const = 0;
  virtual Functor apply(const Functor& f) const = 0;
  virtual Functor unit(const CategoryPtr& x) const = 0;
  virtual Functor mult(const CategoryPtr& x) const = 0;
  /// Nested-set label of an element of TX for a discrete X, read off the
  /// maximal generators of each (co)presheaf layer.
  virtual std::optional<Label> label(const CategoryPtr& x, std::size_t element) const;
};

using EnrichedMonadPtr = std::shared_ptr<const EnrichedMonad>;

/// Label of an element of a category built by nesting (co)presheaf spaces
/// over a discrete base; atoms are base elements.
std::optional<Label> space_label(const Category& c, std::size_t element);

EnrichedMonadPtr enriched_identity_monad();

/// One (co)presheaf construction; conical layers keep joins of representables only.
struct Layer {
  Variance variance = Variance::presheaf;
  bool conical = false;
};

/// Monads built from one or two (co)presheaf layers. For two layers,
/// TX = outer(inner(X)); the unit is outer_unit . inner_unit and the
/// multiplication is the presheaf action of g_* (outer presheaf) or the
/// copresheaf action of g^* (outer copresheaf), g = inner_unit_TX . outer_unit_innerX.
class DoctrineMonad final : public EnrichedMonad {
 public:
  DoctrineMonad(std::string name, std::vector<Layer> layers, bool requires_distributive, Limits limits);

  std::string name() const override { return name_; }
  CategoryPtr apply(const CategoryPtr& x) const override;
  Functor apply(const Functor& f) const override;
  Functor unit(const CategoryPtr& x) const override;
  Functor mult(const CategoryPtr& x) const override;

  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const Limits& limits() const noexcept { return limits_; }
  /// The functor g through which the multiplication acts.
  Functor mult_generator(const CategoryPtr& x) const;
  /// Raw table of mult_X at an element of TTX, before lookup in TX.
  Table mult_table(const CategoryPtr& x, std::size_t element) const;

 private:
  void require_distributive(const Category& x) const;
  CategoryPtr layer_space(const Layer& l, const CategoryPtr& x) const;
  Functor layer_map(const Layer& l, const Functor& f) const;
  Functor layer_unit(const Layer& l, const CategoryPtr& x) const;
  CategoryPtr inner_apply(const CategoryPtr& x) const;

  std::string name_;
  std::vector<Layer> layers_;
  bool requires_distributive_ = false;
  Limits limits_;
};

EnrichedMonadPtr presheaf_monad(const Limits& limits = Limits::defaults());
EnrichedMonadPtr copresheaf_monad(const Limits& limits = Limits::defaults());
/// P P-dagger.
EnrichedMonadPtr double_presheaf_monad(const Limits& limits = Limits::defaults());
/// P-dagger P.
EnrichedMonadPtr double_copresheaf_monad(const Limits& limits = Limits::defaults());

/// Names: identity, P, Pdagger, PPdagger, PdaggerP, H, Hdagger, HHdagger, HdaggerH.
/// Throws InvalidInput for unknown names.
EnrichedMonadPtr monad_by_name(std::string_view name, const Limits& limits = Limits::defaults());
std::vector<std::string> monad_names();

struct MonadCheckOptions {
  /// Composable functor pairs checked per triple of categories.
  std::size_t max_pairs = 64;
};

/// Unit and associativity laws, functoriality of unit and multiplication,
/// naturality, preservation of identities and composites, 2-functoriality,
/// and conicality of multiplication outputs for conical outer layers.
Report check_enriched_monad(const EnrichedMonad& t, const Corpus& corpus, const MonadCheckOptions& options = {});

Json functor_witness(const Functor& lhs, const Functor& rhs);

}  // namespace quantcat
