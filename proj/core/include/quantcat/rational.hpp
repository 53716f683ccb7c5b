#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quantcat {

using Rational = boost::multiprecision::cpp_rational;

/// A value in [0, inf] with exact rational arithmetic.
class ExtRational {
 public:
  ExtRational() = default;
  /// Throws InvalidInput for negative values.
  explicit ExtRational(const Rational& value);
  explicit ExtRational(long long value);

  static ExtRational infinity();
  /// Accepts "inf", integers, "p/q" and finite decimals such as "1.25".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Precondition: finite.
  const Rational& finite_value() const;
  /// "inf", "3" or "7/4".
  std::string to_string() const;

  ExtRational operator+(const ExtRational& rhs) const;
  /// max(this - rhs, 0) with inf - x = inf for finite x and x - inf = 0.
  ExtRational truncated_minus(const ExtRational& rhs) const;

  friend bool operator==(const ExtRational& lhs, const ExtRational& rhs);
  friend std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs);

  std::size_t hash() const;

 private:
  bool infinite_ = false;
  Rational value_{0};
};

struct ExtRationalHash {
  std::size_t operator()(const ExtRational& v) const { return v.hash(); }
};

}  // namespace quantcat
