#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "rotno/rational.hpp"

namespace rotno {

// Ordered set of irreducible fractions (used for S and V).
class FractionSet {
public:
  FractionSet() = default;
  explicit FractionSet(std::vector<Rational> elements);

  void insert(const Rational& r);
  bool contains(const Rational& r) const;
  const std::vector<Rational>& elements() const& { return elements_; }
  std::vector<Rational> elements() && { return std::move(elements_); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool subset_of(const FractionSet& other) const;

  friend bool operator==(const FractionSet&, const FractionSet&) = default;

private:
  std::vector<Rational> elements_;  // strictly increasing
};

// With nu0 = p0/q0 and nu1 = p1/q1 irreducible, decides
// (p1-1)/q1 <= p0/q0 < p1/q1 <= (p0+1)/q0 exactly.  Requires nu0 < nu1.
bool check_pair(const Rational& nu0, const Rational& nu1);

// The window [ceil((q- + q+)/D), floor(2 q- q+ / D)] with D = p+ q- - p- q+;
// every denominator admissible in sset lies inside it.
std::pair<mpz_class, mpz_class> q_range(const Rational& nu_minus, const Rational& nu_plus);

// { (floor(q nu-) + 1)/q : ceil(q nu+) = floor(q nu-) + 2 }, reduced,
// deduplicated, sorted; all elements lie strictly between nu- and nu+.
FractionSet sset(const Rational& nu_minus, const Rational& nu_plus);

// The fraction p/q with (p-1)/q = nu-, (p+1)/q = nu+, gcd(p,q) = 1 and q odd,
// when it exists: the one member of S that no map with these one-sided
// rotation numbers can realize.
std::optional<Rational> excluded_center(const Rational& nu_minus, const Rational& nu_plus);

}  // namespace rotno
