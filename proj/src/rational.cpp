#include "gamedec/rational.hpp"

#include <cctype>
#include <ostream>

#include "gamedec/errors.hpp"

namespace gamedec {

Rational::Rational(long num, long den) {
  if (den == 0) throw contract_error("rational denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(mpq_class(v_.get_den())) == 0)
    throw contract_error("rational denominator must be nonzero");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw contract_error("rational denominator must be nonzero");
  v_ = mpq_class(std::move(num));
  v_ /= mpq_class(std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw contract_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  size_t pos = 0;
  const auto digits = [&](std::string& out) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    return pos > start;
  };

  std::string num, den;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (!digits(num)) return std::nullopt;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  mpz_class n(num, 10);
  if (negative) n = -n;
  if (den.empty()) return Rational(mpq_class(n));
  mpz_class d(den, 10);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gamedec
