#include "rotno/farey.hpp"

#include <algorithm>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

void require_ordered(const Rational& lo, const Rational& hi, const char* who) {
  if (!(lo < hi)) {
    throw ValidationError(std::string(who) + ": need nu_minus < nu_plus, got " + lo.str() +
                          " >= " + hi.str());
  }
}

}  // namespace

FractionSet::FractionSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

void FractionSet::insert(const Rational& r) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
  if (it == elements_.end() || *it != r) elements_.insert(it, r);
}

bool FractionSet::contains(const Rational& r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

bool FractionSet::subset_of(const FractionSet& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Rational& r) { return other.contains(r); });
}

bool check_pair(const Rational& nu0, const Rational& nu1) {
  require_ordered(nu0, nu1, "check_pair");
  const Rational lower = Rational::from_mpz(nu1.num() - 1, nu1.den());
  const Rational upper = Rational::from_mpz(nu0.num() + 1, nu0.den());
  return lower <= nu0 && nu1 <= upper;
}

std::pair<mpz_class, mpz_class> q_range(const Rational& nu_minus, const Rational& nu_plus) {
  require_ordered(nu_minus, nu_plus, "q_range");
  const mpz_class qm = nu_minus.den(), qp = nu_plus.den();
  const mpz_class delta = nu_plus.num() * qm - nu_minus.num() * qp;
  mpz_class q_min, q_max;
  mpz_cdiv_q(q_min.get_mpz_t(), mpz_class(qm + qp).get_mpz_t(), delta.get_mpz_t());
  mpz_fdiv_q(q_max.get_mpz_t(), mpz_class(2 * qm * qp).get_mpz_t(), delta.get_mpz_t());
  return {q_min, q_max};
}

FractionSet sset(const Rational& nu_minus, const Rational& nu_plus) {
  require_ordered(nu_minus, nu_plus, "sset");
  auto [q_min, q_max] = q_range(nu_minus, nu_plus);
  FractionSet out;
  for (mpz_class q = q_min; q <= q_max; ++q) {
    mpz_class fl, ce;
    mpz_fdiv_q(fl.get_mpz_t(), mpz_class(q * nu_minus.num()).get_mpz_t(),
               nu_minus.den().get_mpz_t());
    mpz_cdiv_q(ce.get_mpz_t(), mpz_class(q * nu_plus.num()).get_mpz_t(),
               nu_plus.den().get_mpz_t());
    if (ce == fl + 2) out.insert(Rational::from_mpz(fl + 1, q));
  }
  return out;
}

std::optional<Rational> excluded_center(const Rational& nu_minus, const Rational& nu_plus) {
  require_ordered(nu_minus, nu_plus, "excluded_center");
  // (p-1)/q = nu- and (p+1)/q = nu+ force q = 2/(nu+ - nu-) and p = q nu- + 1.
  const Rational qr = Rational(2) / (nu_plus - nu_minus);
  if (!qr.is_integer()) return std::nullopt;
  const mpz_class q = qr.num();
  const Rational pr = qr * nu_minus + Rational(1);
  if (!pr.is_integer()) return std::nullopt;
  const mpz_class p = pr.num();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (mpz_odd_p(q.get_mpz_t()) == 0) return std::nullopt;
  return Rational::from_mpz(p, q);
}

}  // namespace rotno
