#include "delzant/rational.hpp"

#include <cctype>
#include <cmath>

namespace delzant {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  const Integer& n = numerator(value);
  const Integer& d = denominator(value);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite floating-point value");
  return Rational(x);
}

Rational approximate(double x, const Integer& max_denominator) {
  if (!std::isfinite(x)) throw DomainError("non-finite floating-point value");
  if (max_denominator < 1) throw DomainError("max_denominator must be positive");
  const Rational target = exact_from_double(x);

  // Convergents of the continued fraction of the exact binary value:
  // (h, k) = (h_{n-1}, k_{n-1}), (h_prev, k_prev) = (h_{n-2}, k_{n-2}).
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Rational rest = target;
  while (true) {
    Integer a = numerator(rest) / denominator(rest);
    if (numerator(rest) < 0 && a * denominator(rest) != numerator(rest)) a -= 1;
    const Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // Best semiconvergent with denominator within the bound.
      const Integer t = (max_denominator - k_prev) / k;
      const Rational semi(t * h + h_prev, t * k + k_prev);
      const Rational conv(h, k);
      using boost::multiprecision::abs;
      return abs(semi - target) < abs(conv - target) ? semi : conv;
    }
    const Integer h_next = a * h + h_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    const Rational frac = rest - Rational(a);
    if (frac == 0) return Rational(h, k);
    rest = 1 / frac;
  }
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  using boost::multiprecision::abs;
  return abs(a / gcd(a, b) * b);
}

}  // namespace delzant
