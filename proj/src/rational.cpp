#include "subfan/rational.hpp"

#include <stdexcept>

namespace subfan {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

// Decimal digits only; leading zeros removed so the base is never guessed.
Integer decimal(const std::string& digits, const std::string& whole) {
  if (digits.empty()) throw std::invalid_argument("bad rational: " + whole);
  for (char ch : digits)
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad rational: " + whole);
  auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? Integer(0) : Integer(digits.substr(first));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto b = text.find_first_not_of(" \t\r\n");
  auto e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw std::invalid_argument("empty rational");
  const std::string s(text.substr(b, e - b + 1));
  std::string body = s;
  const bool neg = body[0] == '-';
  if (neg || body[0] == '+') body = body.substr(1);
  Rational r;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    Integer den = decimal(body.substr(slash + 1), s);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    r = Rational(decimal(body.substr(0, slash), s), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bad rational: " + s);
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    r = Rational(decimal((whole.empty() ? "0" : whole) + frac, s), den);
  } else {
    r = Rational(decimal(body, s));
  }
  return neg ? Rational(-r) : r;
}

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

int sgn(const Rational& q) { return q.sign(); }

}  // namespace subfan
