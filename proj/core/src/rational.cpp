#include "rotno/rational.hpp"

#include <cctype>
#include <ostream>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  mpq_class q(n);
  q /= mpq_class(d);
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw ValidationError("not a rational: '" + std::string(text) +
                          "' (expected \"p/q\" or \"p\")");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  return from_mpz(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.v_ == 0) throw ValidationError("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::frac() const {
  return *this - Rational(mpq_class(floor()));
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace rotno
