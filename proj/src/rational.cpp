#include "linarr/rational.hpp"

namespace linarr {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
  if (v.get_den() == 0)
    throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace linarr
