#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotno/lift.hpp"
#include "rotno/rational.hpp"

namespace rotno {

// Per-call resource bounds.  Slope != 1 pieces can grow denominators without
// bound, so the guard turns silent blowup into a typed error.
struct RotationBudget {
  long max_iter = 100000;
  std::size_t max_den_bits = 4096;
};

// A periodic orbit: f^q(x) = x + p exactly for every listed point, gcd(p,q)=1.
// `points` is the orbit mod 1, strictly increasing.
struct PeriodicOrbit {
  std::vector<Rational> points;
  mpz_class p;
  mpz_class q;
};

// Either an exact rotation number with its witness orbit, or the sound
// enclosure [(m_n - 1)/n, (m_n + 1)/n] with m_n = f^n(x0) - x0 when no cycle
// appeared within the budget.
struct RotationResult {
  enum class Kind { exact, interval };
  Kind kind = Kind::exact;
  Rational value;
  std::pair<Rational, Rational> bounds;
  std::optional<PeriodicOrbit> witness;
  long iterations = 0;  // the n of the interval form, or steps to the cycle

  bool exact() const { return kind == Kind::exact; }
};

// [x0, f(x0), ..., f^n(x0)], exactly.
std::vector<Rational> orbit(const Lift& f, const Rational& x0, long n,
                            const RotationBudget& budget = {});

RotationResult rotation_number(const Lift& f, const Rational& x0 = Rational(0),
                               const RotationBudget& budget = {});

// The eventually-reached cycle through x0, transient discarded.  Throws
// BudgetError when no cycle shows up within the budget (the rotation number
// may be irrational).
PeriodicOrbit periodic_orbit(const Lift& f, const Rational& x0 = Rational(0),
                             const RotationBudget& budget = {});

// Exact three-way comparison of nu(g) against p/q for a continuous strictly
// increasing lift, via the sign of g^q - id - p over one period: -1, 0, +1
// for nu(g) <, ==, > p/q.  Unlike orbit iteration this decides equality even
// when no orbit of g lands on the attracting cycle.
int compare_rotation(const Lift& g, const Rational& pq);

// A point of an exact period-q orbit when compare_rotation(g, pq) == 0.
std::optional<Rational> periodic_point_at(const Lift& g, const Rational& pq);

struct TuneResult {
  Lift lift;
  bool success = false;  // exact rational equality with the target
  RotationResult achieved;
  Rational lambda;
  std::pair<Rational, Rational> lambda_bracket;
  std::string diagnostic;  // set when !success
};

// Builds sandwich homeomorphisms around f and bisects the interpolation
// g_lambda = (1-lambda) h_minus + lambda h_plus until nu(g_lambda) equals
// `target` exactly, or the bracket shrinks below `tol` / `max_bisect` runs
// out (reported as a non-success with the final bracket).  Requires
// nu(f^-) < target < nu(f^+) exactly.
TuneResult tune_lambda(const Lift& f, const Rational& target, const Rational& delta,
                       const Rational& tol = Rational(1, 1000000), long max_bisect = 128,
                       const RotationBudget& budget = {});

}  // namespace rotno
