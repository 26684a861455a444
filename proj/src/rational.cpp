#include "ccent/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ccent {

Rational make_rational(int64_t num, int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  };
  if (text.empty()) fail();
  std::string s(text);
  if (auto dot = s.find('.'); dot != std::string::npos) {
    // decimal literal: shift the point into a power-of-ten denominator
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-") fail();
    for (size_t i = digits[0] == '-' ? 1 : 0; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) fail();
    BigInt num, den = 1;
    if (num.set_str(digits, 10) != 0) fail();
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) fail();
  if (r.get_den() == 0) fail();
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace ccent
