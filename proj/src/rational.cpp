#include "gdp/rational.hpp"

#include <sstream>

namespace gdp {

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty integer");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("Rational: sign without digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("Rational: invalid digit in '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

std::string Rational::pretty() const {
  std::ostringstream os;
  if (den_ == 1)
    os << num_;
  else
    os << num_ << '/' << den_;
  return os.str();
}

}  // namespace gdp
