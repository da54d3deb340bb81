#include "splitjac/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace splitjac {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
          ch == '-' || ch == '+')) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("0 raised to a negative power");
    return 1 / rational_pow(r, -e);
  }
  Rational acc = 1;
  Rational base = r;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace splitjac
