#include "wakimoto/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "wakimoto/errors.hpp"

namespace wakimoto {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t n) {
  // mpq_class has no portable int64 constructor; go through the string form
  // only when the value does not fit a long.
  if (n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max()) {
    value_ = mpq_class(static_cast<long>(n));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(n), 10));
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("zero denominator");
  value_ = mpq_class(Rational(num).value_ / Rational(den).value_);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view s = text.substr(b, e - b);

  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw ParseError("invalid rational '" + std::string(text) + "'");
    return Rational(mpq_class(to_mpz(s)));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || den[0] == '+' || den[0] == '-' ||
      !is_integer_literal(den)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) throw ParseError("zero denominator");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::to_int() const {
  if (!is_integer()) throw DomainError("rational " + to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw DomainError("integer " + to_string() + " out of range");
  return n.get_si();
}

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!q.fits_slong_p()) throw DomainError("floor of " + to_string() + " out of range");
  return q.get_si();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

}  // namespace wakimoto
