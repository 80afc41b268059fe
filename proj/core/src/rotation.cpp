#include "rotno/rotation.hpp"

#include <algorithm>
#include <map>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

void check_denominator(const Rational& x, const RotationBudget& budget, long step) {
  if (x.den_bits() > budget.max_den_bits) {
    throw BudgetError(BudgetError::Kind::denominator,
                      "iterate denominator exceeded " + std::to_string(budget.max_den_bits) +
                          " bits after " + std::to_string(step) + " steps");
  }
}

}  // namespace

std::vector<Rational> orbit(const Lift& f, const Rational& x0, long n,
                            const RotationBudget& budget) {
  if (n < 0) throw ValidationError("orbit length must be >= 0");
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(n) + 1);
  xs.push_back(x0);
  for (long k = 1; k <= n; ++k) {
    xs.push_back(f(xs.back()));
    check_denominator(xs.back(), budget, k);
  }
  return xs;
}

RotationResult rotation_number(const Lift& f, const Rational& x0,
                               const RotationBudget& budget) {
  if (budget.max_iter < 1) throw ValidationError("max_iter must be >= 1");

  std::vector<Rational> xs;
  xs.push_back(x0);
  std::map<Rational, long> first_seen;
  first_seen.emplace(x0.frac(), 0);

  for (long k = 1; k <= budget.max_iter; ++k) {
    xs.push_back(f(xs.back()));
    check_denominator(xs.back(), budget, k);
    const Rational fr = xs.back().frac();
    auto [it, inserted] = first_seen.emplace(fr, k);
    if (!inserted) {
      const long j0 = it->second;
      const long q = k - j0;
      const Rational rise = xs[static_cast<std::size_t>(k)] - xs[static_cast<std::size_t>(j0)];
      // Equal fractional parts force an integer rise.
      mpz_class p = rise.num();
      mpz_class qz(q);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qz.get_mpz_t());
      p /= g;
      qz /= g;

      PeriodicOrbit w;
      w.p = p;
      w.q = qz;
      for (long j = j0; j < k; ++j) w.points.push_back(xs[static_cast<std::size_t>(j)].frac());
      std::sort(w.points.begin(), w.points.end());
      w.points.erase(std::unique(w.points.begin(), w.points.end()), w.points.end());

      RotationResult r;
      r.kind = RotationResult::Kind::exact;
      r.value = Rational::from_mpz(p, qz);
      r.witness = std::move(w);
      r.iterations = k;
      return r;
    }
  }

  const long n = budget.max_iter;
  const Rational m_n = xs.back() - x0;
  RotationResult r;
  r.kind = RotationResult::Kind::interval;
  r.bounds = {(m_n - Rational(1)) / Rational(n), (m_n + Rational(1)) / Rational(n)};
  r.iterations = n;
  return r;
}

PeriodicOrbit periodic_orbit(const Lift& f, const Rational& x0, const RotationBudget& budget) {
  RotationResult r = rotation_number(f, x0, budget);
  if (!r.exact()) {
    throw BudgetError(BudgetError::Kind::iterations,
                      "no cycle within " + std::to_string(budget.max_iter) +
                          " iterations (rotation number may be irrational)");
  }
  return *std::move(r.witness);
}

namespace {

// g^q - p as a lift-like piecewise function; g strictly increasing.
Lift iterate_composed(const Lift& g, const mpz_class& q) {
  Lift G = g;
  for (mpz_class i = 1; i < q; ++i) G = Lift::compose(g, G);
  return G;
}

}  // namespace

int compare_rotation(const Lift& g, const Rational& pq) {
  if (!g.is_strictly_increasing()) {
    throw ValidationError("compare_rotation needs a continuous strictly increasing lift");
  }
  const Lift G = iterate_composed(g, pq.den());
  const Rational p = Rational::from_mpz(pq.num(), 1);
  // d(x) = G(x) - x - p is continuous piecewise affine with period 1, so its
  // extrema sit on the breakpoints.
  bool any_leq = false, any_geq = false;
  for (const auto& s : G.segments()) {
    const Rational d = s.value - s.start - p;
    if (d <= Rational(0)) any_leq = true;
    if (d >= Rational(0)) any_geq = true;
  }
  if (any_leq && any_geq) return 0;
  return any_geq ? 1 : -1;
}

std::optional<Rational> periodic_point_at(const Lift& g, const Rational& pq) {
  if (compare_rotation(g, pq) != 0) return std::nullopt;
  const Lift G = iterate_composed(g, pq.den());
  const Rational p = Rational::from_mpz(pq.num(), 1);
  const auto& segs = G.segments();
  auto d_at = [&](std::size_t i) { return segs[i].value - segs[i].start - p; };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (d_at(i) == Rational(0)) return segs[i].start;
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::size_t j = (i + 1) % segs.size();
    const Rational a = segs[i].start;
    const Rational b = (j == 0) ? Rational(1) : segs[j].start;
    const Rational da = d_at(i);
    const Rational db = (j == 0) ? d_at(0) : d_at(j);  // periodicity at the wrap
    if ((da < Rational(0)) == (db < Rational(0))) continue;
    // d is affine on [a, b] with slope (db - da)/(b - a); root inside.
    const Rational x = a - da * (b - a) / (db - da);
    return x.frac();
  }
  return std::nullopt;
}

TuneResult tune_lambda(const Lift& f, const Rational& target, const Rational& delta,
                       const Rational& tol, long max_bisect, const RotationBudget& budget) {
  if (!(delta > Rational(0))) throw ValidationError("tune_lambda: delta must be positive");
  if (!(tol > Rational(0))) throw ValidationError("tune_lambda: tol must be positive");

  const RotationResult lo_rot = rotation_number(f.left_map(), Rational(0), budget);
  const RotationResult hi_rot = rotation_number(f.right_map(), Rational(0), budget);
  if (!lo_rot.exact() || !hi_rot.exact()) {
    throw BudgetError(BudgetError::Kind::iterations,
                      "one-sided rotation numbers not resolved within budget");
  }
  if (!(lo_rot.value < target && target < hi_rot.value)) {
    throw ValidationError("target " + target.str() + " not strictly inside (" +
                          lo_rot.value.str() + ", " + hi_rot.value.str() + ")");
  }

  const auto [h_minus, h_plus] = Lift::sandwich_homeos(f, delta);

  auto at = [&](const Rational& lambda) {
    return Lift::affine_combination(Rational(1) - lambda, h_minus, lambda, h_plus);
  };

  Rational lo(0), hi(1);
  TuneResult out{at(Rational(1, 2)), false, {}, Rational(1, 2), {lo, hi}, ""};
  for (long i = 0; i < max_bisect && hi - lo >= tol; ++i) {
    const Rational mid = (lo + hi) / Rational(2);
    Lift g = at(mid);
    const int cmp = compare_rotation(g, target);
    out.lift = std::move(g);
    out.lambda = mid;
    if (cmp == 0) {
      // Certify with a witness orbit: iteration from an exact periodic point
      // closes immediately.
      const auto x_star = periodic_point_at(out.lift, target);
      out.achieved = rotation_number(out.lift, *x_star, budget);
      out.success = out.achieved.exact() && out.achieved.value == target;
      out.lambda_bracket = {lo, hi};
      return out;
    }
    (cmp < 0 ? lo : hi) = mid;
  }
  out.lambda_bracket = {lo, hi};
  out.diagnostic = "no exact hit within budget; final bracket [" + lo.str() + ", " + hi.str() +
                   "] of width " + (hi - lo).str();
  return out;
}

}  // namespace rotno
