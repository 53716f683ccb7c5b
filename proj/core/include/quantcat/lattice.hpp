#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quantcat {

using ElementId = std::uint32_t;

/// A finite complete lattice given by its elements and its order relation.
///
/// The order must be listed in full: reflexive pairs included. Construction
/// validates the partial order axioms and the existence of binary joins and
/// meets, then tabulates both operations.
class FiniteLattice {
 public:
  FiniteLattice(std::vector<std::string> names, const std::vector<std::pair<ElementId, ElementId>>& leq_pairs);

  static FiniteLattice from_names(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& leq_pairs);
  /// Chain with `names` listed from bottom to top.
  static FiniteLattice chain(std::vector<std::string> names);
  /// Powerset of an n-element set; element i is the subset with bitmask i.
  static FiniteLattice boolean(unsigned atoms);
  /// The diamond 0 < a, b, c < 1.
  static FiniteLattice diamond_m3();

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId a) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws UnknownElement.
  ElementId id(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const { return leq_[index(a, b)] != 0; }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }
  ElementId join(ElementId a, ElementId b) const { return join_[index(a, b)]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[index(a, b)]; }
  /// Join of a subset; the empty join is the bottom. Throws UnknownElement.
  ElementId join(std::span<const ElementId> subset) const;
  /// Meet of a subset; the empty meet is the top. Throws UnknownElement.
  ElementId meet(std::span<const ElementId> subset) const;

  /// For finite lattices complete distributivity reduces to distributivity.
  bool is_completely_distributive() const { return !distributivity_witness().has_value(); }
  /// First (x, y, z) with x meet (y join z) != (x meet y) join (x meet z).
  std::optional<std::array<ElementId, 3>> distributivity_witness() const;

  friend bool operator==(const FiniteLattice& lhs, const FiniteLattice& rhs) {
    return lhs.names_ == rhs.names_ && lhs.leq_ == rhs.leq_;
  }

 private:
  std::size_t index(ElementId a, ElementId b) const { return static_cast<std::size_t>(a) * names_.size() + b; }
  void check_id(ElementId a) const;

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

}  // namespace quantcat
