#include "fuzzytop/rational.hpp"

#include <cctype>

namespace fuzzytop {

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

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw DomainError("malformed rational: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r.q_ = mpq_class(parse_integer(text));
    return r;
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  r.q_ = mpq_class(num, den);
  r.q_.canonicalize();
  return r;
}

std::string Rational::str() const {
  // mpq prints "p" for integers and "p/q" otherwise, matching the wire format.
  return q_.get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(str());
}

}  // namespace fuzzytop
