#include "ricci/rational.hpp"

#include <regex>
#include <stdexcept>

namespace ricci {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  mpz_class num(m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ricci
