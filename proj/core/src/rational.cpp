#include "quantcat/rational.hpp"

#include <algorithm>
#include <cctype>

#include <boost/container_hash/hash.hpp>

#include "quantcat/error.hpp"

namespace quantcat {

namespace {

using boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

cpp_int parse_natural(std::string_view digits, std::string_view original) {
  if (!all_digits(digits)) {
    throw Error(ErrorCode::invalid_input, "not a non-negative rational: '" + std::string(original) + "'");
  }
  return cpp_int(std::string(digits));
}

}  // namespace

ExtRational::ExtRational(const Rational& value) : value_(value) {
  if (value < 0) throw Error(ErrorCode::invalid_input, "negative value " + value.str());
}

ExtRational::ExtRational(long long value) : ExtRational(Rational(value)) {}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.infinite_ = true;
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s == "inf" || s == "infinity" || s == "Infinity" || s == "\xE2\x88\x9E") return infinity();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_natural(trim(s.substr(0, slash)), text);
    cpp_int den = parse_natural(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::invalid_input, "zero denominator in '" + std::string(text) + "'");
    return ExtRational(Rational(num, den));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw Error(ErrorCode::invalid_input, "not a non-negative rational: '" + std::string(text) + "'");
    }
    cpp_int w = whole.empty() ? cpp_int(0) : parse_natural(whole, text);
    cpp_int f = frac.empty() ? cpp_int(0) : parse_natural(frac, text);
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(frac.size()));
    return ExtRational(Rational(w * scale + f, scale));
  }
  return ExtRational(Rational(parse_natural(s, text)));
}

const Rational& ExtRational::finite_value() const {
  if (infinite_) throw Error(ErrorCode::invalid_input, "infinite value has no finite representation");
  return value_;
}

std::string ExtRational::to_string() const {
  if (infinite_) return "inf";
  return value_.str();
}

ExtRational ExtRational::operator+(const ExtRational& rhs) const {
  if (infinite_ || rhs.infinite_) return infinity();
  return ExtRational(value_ + rhs.value_);
}

ExtRational ExtRational::truncated_minus(const ExtRational& rhs) const {
  if (rhs.infinite_) return ExtRational();
  if (infinite_) return infinity();
  if (value_ <= rhs.value_) return ExtRational();
  return ExtRational(value_ - rhs.value_);
}

bool operator==(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (rhs.value_ < lhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t ExtRational::hash() const {
  if (infinite_) return 0x9e3779b97f4a7c15ULL;
  std::size_t seed = 0;
  boost::hash_combine(seed, boost::hash<cpp_int>{}(boost::multiprecision::numerator(value_)));
  boost::hash_combine(seed, boost::hash<cpp_int>{}(boost::multiprecision::denominator(value_)));
  return seed;
}

}  // namespace quantcat
