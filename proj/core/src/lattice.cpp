#include "quantcat/lattice.hpp"

#include <unordered_map>

#include "quantcat/error.hpp"

namespace quantcat {

namespace {

std::string pair_text(const std::vector<std::string>& names, ElementId a, ElementId b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> names,
                             const std::vector<std::pair<ElementId, ElementId>>& leq_pairs)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::invalid_lattice, "a lattice needs at least one element");
  std::unordered_map<std::string, ElementId> seen;
  for (ElementId i = 0; i < n; ++i) {
    if (!seen.emplace(names_[i], i).second) {
      throw Error(ErrorCode::invalid_lattice, "duplicate element '" + names_[i] + "'");
    }
  }
  leq_.assign(n * n, 0);
  for (const auto& [a, b] : leq_pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::unknown_element, "order pair refers to an unknown element");
    leq_[index(a, b)] = 1;
  }
  for (ElementId a = 0; a < n; ++a) {
    if (!leq(a, a)) throw Error(ErrorCode::invalid_lattice, "missing reflexive pair " + pair_text(names_, a, a));
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) {
        throw Error(ErrorCode::invalid_lattice, "antisymmetry fails for " + pair_text(names_, a, b));
      }
      if (!leq(a, b)) continue;
      for (ElementId c = 0; c < n; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          throw Error(ErrorCode::invalid_lattice, "transitivity fails: missing pair " + pair_text(names_, a, c));
        }
      }
    }
  }

  auto least_upper = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    for (ElementId u = 0; u < n; ++u) {
      if (!leq(a, u) || !leq(b, u)) continue;
      bool least = true;
      for (ElementId v = 0; v < n && least; ++v) {
        if (leq(a, v) && leq(b, v) && !leq(u, v)) least = false;
      }
      if (least) return u;
    }
    return std::nullopt;
  };
  auto greatest_lower = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    for (ElementId l = 0; l < n; ++l) {
      if (!leq(l, a) || !leq(l, b)) continue;
      bool greatest = true;
      for (ElementId v = 0; v < n && greatest; ++v) {
        if (leq(v, a) && leq(v, b) && !leq(v, l)) greatest = false;
      }
      if (greatest) return l;
    }
    return std::nullopt;
  };

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      auto j = least_upper(a, b);
      if (!j) throw Error(ErrorCode::invalid_lattice, "no join for " + pair_text(names_, a, b));
      auto m = greatest_lower(a, b);
      if (!m) throw Error(ErrorCode::invalid_lattice, "no meet for " + pair_text(names_, a, b));
      join_[index(a, b)] = *j;
      meet_[index(a, b)] = *m;
    }
  }

  bool found_bottom = false;
  bool found_top = false;
  for (ElementId a = 0; a < n; ++a) {
    bool below_all = true;
    bool above_all = true;
    for (ElementId b = 0; b < n; ++b) {
      below_all = below_all && leq(a, b);
      above_all = above_all && leq(b, a);
    }
    if (below_all) {
      bottom_ = a;
      found_bottom = true;
    }
    if (above_all) {
      top_ = a;
      found_top = true;
    }
  }
  if (!found_bottom) throw Error(ErrorCode::invalid_lattice, "no bottom element");
  if (!found_top) throw Error(ErrorCode::invalid_lattice, "no top element");
}

FiniteLattice FiniteLattice::from_names(std::vector<std::string> names,
                                        const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  std::unordered_map<std::string, ElementId> ids;
  for (ElementId i = 0; i < names.size(); ++i) ids.emplace(names[i], i);
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(leq_pairs.size());
  for (const auto& [a, b] : leq_pairs) {
    auto ia = ids.find(a);
    if (ia == ids.end()) throw Error(ErrorCode::unknown_element, "order pair names unknown element '" + a + "'");
    auto ib = ids.find(b);
    if (ib == ids.end()) throw Error(ErrorCode::unknown_element, "order pair names unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return FiniteLattice(std::move(names), pairs);
}

FiniteLattice FiniteLattice::chain(std::vector<std::string> names) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < names.size(); ++a) {
    for (ElementId b = a; b < names.size(); ++b) pairs.emplace_back(a, b);
  }
  return FiniteLattice(std::move(names), pairs);
}

FiniteLattice FiniteLattice::boolean(unsigned atoms) {
  const ElementId n = ElementId{1} << atoms;
  std::vector<std::string> names;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId m = 0; m < n; ++m) {
    std::string s = "{";
    for (unsigned i = 0; i < atoms; ++i) {
      if (m >> i & 1U) {
        if (s.size() > 1) s += ",";
        s += std::to_string(i);
      }
    }
    names.push_back(s + "}");
    for (ElementId k = 0; k < n; ++k) {
      if ((m & k) == m) pairs.emplace_back(m, k);
    }
  }
  return FiniteLattice(std::move(names), pairs);
}

FiniteLattice FiniteLattice::diamond_m3() {
  return from_names({"0", "a", "b", "c", "1"},
                    {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"c", "c"}, {"1", "1"}, {"0", "a"}, {"0", "b"},
                     {"0", "c"}, {"0", "1"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

const std::string& FiniteLattice::name(ElementId a) const {
  check_id(a);
  return names_[a];
}

std::optional<ElementId> FiniteLattice::find(std::string_view name) const {
  for (ElementId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

ElementId FiniteLattice::id(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::unknown_element, "'" + std::string(name) + "' is not an element of the lattice");
}

void FiniteLattice::check_id(ElementId a) const {
  if (a >= names_.size()) {
    throw Error(ErrorCode::unknown_element, "element id " + std::to_string(a) + " out of range");
  }
}

ElementId FiniteLattice::join(std::span<const ElementId> subset) const {
  ElementId acc = bottom_;
  for (ElementId a : subset) {
    check_id(a);
    acc = join(acc, a);
  }
  return acc;
}

ElementId FiniteLattice::meet(std::span<const ElementId> subset) const {
  ElementId acc = top_;
  for (ElementId a : subset) {
    check_id(a);
    acc = meet(acc, a);
  }
  return acc;
}

std::optional<std::array<ElementId, 3>> FiniteLattice::distributivity_witness() const {
  const auto n = static_cast<ElementId>(size());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return std::array<ElementId, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace quantcat
