#include "tropgw/rational.hpp"

#include <stdexcept>

namespace tropgw {

std::string format_rational(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  std::string out = num.str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

namespace {

bool is_plain_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_plain_integer(den) || den.front() == '-')
      throw std::invalid_argument("parse_rational: bad denominator in '" + std::string(text) + "'");
    if (den == "0") throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
  }
  if (!is_plain_integer(num))
    throw std::invalid_argument("parse_rational: bad numerator in '" + std::string(text) + "'");
  Rational r(Integer(std::string(num)), den.empty() ? Integer(1) : Integer(std::string(den)));
  if (format_rational(r) != text)
    throw std::invalid_argument("parse_rational: '" + std::string(text) + "' is not in canonical form");
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer factorial(std::int64_t n) {
  Integer result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace tropgw
