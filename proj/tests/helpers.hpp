#pragma once

// Shared test utilities: a deterministic RNG, random monotone step maps, and
// independent closed-form evaluators for the built-in fixtures.  The
// evaluators deliberately bypass the Lift machinery so fixture tests do not
// check the implementation against itself.

#include <random>
#include <vector>

#include "rotno/lift.hpp"
#include "rotno/rational.hpp"

namespace testutil {

using rotno::Lift;
using rotno::Rational;
using rotno::Segment;

inline Rational from_z(const mpz_class& z) { return Rational::from_mpz(z, 1); }

inline Rational rceil(const Rational& x) { return from_z(x.ceil()); }
inline Rational rfloor(const Rational& x) { return from_z(x.floor()); }

// --- closed forms from the worked examples ---

inline Rational ex1_f_formula(const Rational& x) { return rceil(Rational(2) * x) / Rational(2); }

inline Rational ex1_g1_formula(const Rational& x) {
  return (Rational(1) + rceil(Rational(2) * x) + rfloor(Rational(2) * x)) / Rational(4);
}

inline Rational ex1_g2_formula(const Rational& x) {
  return (Rational(1) + rceil(x) + rfloor(Rational(2) * x) + rfloor(x + Rational(1, 2))) /
         Rational(4);
}

inline Rational ex1_fplus_formula(const Rational& x) {
  return (Rational(1) + rfloor(Rational(2) * x)) / Rational(2);
}

inline Rational ex2_f_formula(const Rational& x) {
  return rotno::min(x + Rational(1, 2), rceil(x));
}

inline Rational ex3_f_formula(const Rational& x) {
  return (Rational(2) + Rational(2) * rceil(x) + rceil(x - Rational(1, 10)) +
          rceil(x - Rational(1, 5)) + Rational(2) * rceil(x - Rational(2, 5)) +
          rceil(x - Rational(1, 2)) + rceil(x - Rational(3, 5)) +
          Rational(2) * rceil(x - Rational(4, 5))) /
         Rational(10);
}

inline Rational ex5_f_formula(const Rational& x) {
  return (Rational(1) + rceil(Rational(5) * x) - rceil(x) + rceil(x - Rational(1, 10))) /
         Rational(5);
}

inline Rational ex5_variant_formula(const Rational& x) {
  return ex5_f_formula(x) +
         (rfloor(Rational(1) + x - Rational(1, 5)) - rceil(x - Rational(1, 5))) / Rational(10);
}

inline Rational ex4_formula(const Rational& alpha, const Rational& beta, const Rational& x) {
  const Rational t = x.frac();
  const Rational whole = x - t;
  Rational v;
  if (t == Rational(0)) {
    v = (Rational(1) + Rational(2) * alpha) / Rational(6);
  } else if (t < Rational(1, 3)) {
    v = Rational(1, 2);
  } else if (t == Rational(1, 3)) {
    v = (Rational(1) + beta) / Rational(2);
  } else if (t <= Rational(5, 6)) {
    v = Rational(1);
  } else {
    v = t + Rational(1, 6);
  }
  return v + whole;
}

// --- random data ---

class Rng {
public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long uniform(long lo, long hi) {  // inclusive
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  // Random rational in [0, 1] with denominator <= max_den.
  Rational unit_rational(long max_den) {
    const long d = uniform(1, max_den);
    const long n = uniform(0, d);
    return Rational(n, d);
  }

  // Random rational in [lo, hi] sampled on a fine uniform grid.
  Rational in_interval(const Rational& lo, const Rational& hi, long grid = 1009) {
    return lo + (hi - lo) * Rational(uniform(0, grid), grid);
  }

private:
  std::mt19937 gen_;
};

// Random monotone degree-one step map: <= max_breaks breakpoints with
// denominators <= max_den, flat pieces, explicit breakpoint values inside
// their jumps.
inline Lift random_step_map(Rng& rng, int max_breaks = 6, long max_den = 24) {
  const int k = static_cast<int>(rng.uniform(1, max_breaks));
  std::vector<Rational> starts{Rational(0)};
  while (static_cast<int>(starts.size()) < k) {
    const Rational s = rng.unit_rational(max_den);
    if (s < Rational(1)) {
      bool dup = false;
      for (const auto& t : starts) dup = dup || (t == s);
      if (!dup) starts.push_back(s);
    }
  }
  std::sort(starts.begin(), starts.end());

  // Nondecreasing levels with total rise <= 1 across the period.
  const Rational base = rng.unit_rational(max_den);
  std::vector<Rational> levels{base};
  for (int i = 1; i < k; ++i) {
    const Rational prev = levels.back();
    levels.push_back(prev + (base + Rational(1) - prev) * Rational(rng.uniform(0, 8), 8));
  }

  std::vector<Segment> segs;
  for (int i = 0; i < k; ++i) {
    const Rational lo = (i == 0) ? levels.back() - Rational(1) : levels[i - 1];
    const Rational hi = levels[i];
    const Rational value = lo + (hi - lo) * Rational(rng.uniform(0, 4), 4);
    segs.push_back({starts[i], value, Rational(0), levels[i]});
  }
  return Lift::make(std::move(segs));
}

}  // namespace testutil
