#include "rotno/family.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

std::vector<GapSpec> gaps_or_throw(const Lift& base) {
  auto gaps = base.discontinuities();
  if (gaps.empty()) throw ValidationError("lift has no discontinuity");
  return gaps;
}

// All x in [0,1) with base(x) congruent mod 1 to a member of `targets`
// (targets are fractional parts).  Zero-slope pieces whose level hits a
// target have a whole interval of preimages; both endpoints represent it.
std::set<Rational> preimage_points(const Lift& base, const std::set<Rational>& targets,
                                   bool* interval_flag) {
  std::set<Rational> out;
  const auto& segs = base.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    const Rational next = (i + 1 < segs.size()) ? segs[i + 1].start : Rational(1);
    if (targets.count(s.value.frac())) out.insert(s.start);
    if (s.slope == Rational(0)) {
      if (targets.count(s.intercept.frac())) {
        *interval_flag = true;
        out.insert(s.start);
        out.insert(next.frac());
      }
      continue;
    }
    const Rational lo = s.slope * s.start + s.intercept;
    const Rational hi = s.slope * next + s.intercept;
    for (const Rational& t : targets) {
      // law(x) = t + m solvable with x in the open cell iff t + m in (lo, hi).
      for (mpz_class m = (lo - t).floor() + 1; Rational::from_mpz(m, 1) + t < hi; ++m) {
        const Rational y = t + Rational::from_mpz(m, 1);
        if (!(lo < y)) continue;
        const Rational x = (y - s.intercept) / s.slope;
        if (s.start < x && x < next) out.insert(x);
      }
    }
  }
  return out;
}

void insert_midpoints(std::vector<Rational>& pts) {
  std::vector<Rational> out;
  out.reserve(pts.size() * 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i]);
    if (i + 1 < pts.size()) out.push_back((pts[i] + pts[i + 1]) / Rational(2));
  }
  pts = std::move(out);
}

}  // namespace

Lift assign(const Lift& base, const GapAssignment& a) {
  const auto gaps = gaps_or_throw(base);
  if (a.size() != gaps.size()) {
    throw ValidationError("assignment has " + std::to_string(a.size()) + " values for " +
                          std::to_string(gaps.size()) + " gaps");
  }
  std::vector<std::pair<std::size_t, Rational>> edits;
  edits.reserve(gaps.size());
  for (const auto& gap : gaps) {
    auto it = a.find(gap.point);
    if (it == a.end()) {
      throw ValidationError("assignment missing gap point " + gap.point.str());
    }
    const Rational& v = it->second;
    if (v < gap.lo || v > gap.hi) {
      throw ValidationError("value " + v.str() + " outside gap [" + gap.lo.str() + ", " +
                            gap.hi.str() + "] at " + gap.point.str());
    }
    edits.emplace_back(base.segment_index(gap.point), v);
  }
  return replace_values_unchecked(base, edits);
}

CriticalGrid critical_grid(const Lift& base, const GapSpec& gap, int depth) {
  if (depth < 0) throw ValidationError("critical_grid depth must be >= 0");
  CriticalGrid grid;
  std::set<Rational> pts{gap.lo, gap.hi};

  if (depth >= 1) {
    std::set<Rational> layer;
    for (const auto& s : base.segments()) layer.insert(s.start);
    for (int level = 0; level <= depth; ++level) {
      if (level > 0) layer = preimage_points(base, layer, &grid.interval_preimages);
      for (const Rational& t : layer) {
        // Collision values inside the gap: t + m in (lo, hi).
        for (mpz_class m = (gap.lo - t).floor(); Rational::from_mpz(m, 1) + t <= gap.hi; ++m) {
          const Rational y = t + Rational::from_mpz(m, 1);
          if (gap.lo < y && y < gap.hi) pts.insert(y);
        }
      }
      if (layer.empty()) break;
    }
  }

  grid.points.assign(pts.begin(), pts.end());
  insert_midpoints(grid.points);
  return grid;
}

FractionSet vset(const Lift& base, const VsetOptions& opt) {
  const auto gaps = gaps_or_throw(base);
  std::vector<CriticalGrid> grids;
  grids.reserve(gaps.size());
  mpz_class total = 1;
  for (const auto& gap : gaps) {
    grids.push_back(critical_grid(base, gap, opt.depth));
    total *= static_cast<long>(grids.back().points.size());
  }
  if (total > opt.max_assignments) {
    throw BudgetError(BudgetError::Kind::assignments,
                      "vset needs " + total.get_str() + " assignments, cap is " +
                          std::to_string(opt.max_assignments));
  }

  FractionSet values;
  std::vector<std::size_t> seg_of_gap;
  seg_of_gap.reserve(gaps.size());
  for (const auto& gap : gaps) seg_of_gap.push_back(base.segment_index(gap.point));
  std::vector<std::size_t> idx(gaps.size(), 0);
  std::vector<std::pair<std::size_t, Rational>> edits(gaps.size());
  while (true) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      edits[i] = {seg_of_gap[i], grids[i].points[idx[i]]};
    }
    const RotationResult r =
        rotation_number(replace_values_unchecked(base, edits), Rational(0), opt.budget);
    if (!r.exact()) {
      throw BudgetError(BudgetError::Kind::iterations,
                        "rotation number of an assigned map did not resolve within " +
                            std::to_string(opt.budget.max_iter) + " iterations");
    }
    values.insert(r.value);

    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < grids[i].points.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return values;
}

std::vector<ScanRow> scan_family(const Lift& base, std::vector<ScanAxis> axes,
                                 const RotationBudget& budget) {
  const auto gaps = gaps_or_throw(base);
  auto find_gap = [&](const Rational& point) -> const GapSpec* {
    for (const auto& g : gaps) {
      if (g.point == point) return &g;
    }
    return nullptr;
  };
  for (auto& axis : axes) {
    if (find_gap(axis.gap_point) == nullptr) {
      throw ValidationError("axis point " + axis.gap_point.str() + " is not a gap of the base");
    }
    std::sort(axis.samples.begin(), axis.samples.end());
    axis.samples.erase(std::unique(axis.samples.begin(), axis.samples.end()),
                       axis.samples.end());
    if (axis.samples.empty()) throw ValidationError("axis with no samples");
  }
  if (axes.empty()) throw ValidationError("scan needs at least one axis");

  std::vector<ScanRow> rows;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    ScanRow row;
    GapAssignment a;
    for (const auto& gap : gaps) a.emplace(gap.point, gap.current);
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const Rational& v = axes[i].samples[idx[i]];
      row.params.push_back(v);
      a[axes[i].gap_point] = v;
    }
    try {
      const RotationResult r = rotation_number(assign(base, a), Rational(0), budget);
      if (r.exact()) {
        row.nu = r.value;
      } else {
        row.error = "budget: not periodic within " + std::to_string(budget.max_iter) + " steps";
      }
    } catch (const ValidationError& e) {
      row.error = std::string("validation: ") + e.what();
    } catch (const BudgetError& e) {
      row.error = std::string("budget: ") + e.what();
    }
    rows.push_back(std::move(row));

    // Odometer with the last axis fastest so rows come out lexicographic.
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].samples.size()) break;
      idx[i] = 0;
      if (i == 0) return rows;
    }
  }
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, std::size_t n_params) {
  for (std::size_t i = 0; i < n_params; ++i) os << "param_" << (i + 1) << ",";
  os << "nu\n";
  for (const auto& row : rows) {
    for (const auto& p : row.params) os << p.str() << ",";
    if (row.nu) {
      os << row.nu->str();
    } else {
      os << "error:" << (row.error.substr(0, row.error.find(':')));
    }
    os << "\n";
  }
}

namespace {

// x_j for the increasing enumeration of a periodic orbit given its sorted
// points mod 1; x_{j+Q} = x_j + 1.
Rational enumerated_point(const std::vector<Rational>& pts, std::size_t i0, const mpz_class& j) {
  const mpz_class Q(static_cast<long>(pts.size()));
  const mpz_class idx = mpz_class(static_cast<long>(i0)) + j;
  mpz_class whole, rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), idx.get_mpz_t(), Q.get_mpz_t());
  return pts[rem.get_ui()] + Rational::from_mpz(whole, 1);
}

EmbeddingDirection run_direction(const Lift& iterate_map, const PeriodicOrbit& base_orbit,
                                 const Rational& x0, const mpz_class& step, long max_k,
                                 std::string relation, const RotationBudget& budget) {
  EmbeddingDirection dir;
  dir.relation = std::move(relation);
  const auto& pts = base_orbit.points;
  const std::size_t i0 =
      static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x0.frac()) - pts.begin());
  dir.passed = true;
  Rational y = x0;
  for (long k = 1; k <= max_k; ++k) {
    y = iterate_map(y);
    if (y.den_bits() > budget.max_den_bits) {
      throw BudgetError(BudgetError::Kind::denominator, "iterate denominator exceeded bound");
    }
    const Rational expected = enumerated_point(pts, i0, mpz_class(k) * step);
    const bool ok = (y == expected);
    dir.checks.push_back({k, y, expected, ok});
    dir.passed = dir.passed && ok;
  }
  return dir;
}

}  // namespace

EmbeddingReport verify_embedding(const Lift& low, const Lift& high, long max_k,
                                 const RotationBudget& budget) {
  if (!Lift::levy_zero_equiv(low, high)) {
    throw ValidationError("verify_embedding: maps are not at Levy distance zero");
  }
  const RotationResult r_low = rotation_number(low, Rational(0), budget);
  const RotationResult r_high = rotation_number(high, Rational(0), budget);
  if (!r_low.exact() || !r_high.exact()) {
    throw BudgetError(BudgetError::Kind::iterations,
                      "rotation numbers not resolved within budget");
  }
  EmbeddingReport rep;
  rep.nu_low = r_low.value;
  rep.nu_high = r_high.value;
  if (!(rep.nu_low < rep.nu_high)) {
    throw ValidationError("verify_embedding: need nu(low) < nu(high), got " + rep.nu_low.str() +
                          " and " + rep.nu_high.str());
  }

  // Hypotheses, as values of fractions: nu_high = (p+1)/q with p/q = nu_low
  // (check iterates of `high` against the enumeration of low's orbit), or
  // nu_low = (p-1)/q with p/q = nu_high (iterates of `low` against high's).
  const bool up_form =
      Rational::from_mpz(rep.nu_low.num() + 1, rep.nu_low.den()) == rep.nu_high;
  const bool down_form =
      Rational::from_mpz(rep.nu_high.num() - 1, rep.nu_high.den()) == rep.nu_low;
  if (!up_form && !down_form) {
    rep.reason = "hypothesis not applicable: " + rep.nu_high.str() + " != (p+1)/q for nu(low) = " +
                 rep.nu_low.str() + " and " + rep.nu_low.str() + " != (p-1)/q for nu(high) = " +
                 rep.nu_high.str();
    return rep;
  }
  rep.applicable = true;

  const PeriodicOrbit orb_low = periodic_orbit(low, Rational(0), budget);
  const PeriodicOrbit orb_high = periodic_orbit(high, Rational(0), budget);
  std::vector<Rational> common;
  std::set_intersection(orb_low.points.begin(), orb_low.points.end(), orb_high.points.begin(),
                        orb_high.points.end(), std::back_inserter(common));
  if (common.empty()) {
    throw BudgetError(BudgetError::Kind::iterations,
                      "no common periodic point found within budget (the theory guarantees one "
                      "exists; raise max_iter or report a bug)");
  }
  rep.x0 = common.front();

  if (up_form) {
    rep.directions.push_back(run_direction(
        high, orb_low, rep.x0, orb_low.p + 1, max_k,
        "high^k(x0) == x[k*(p+1)] on the low orbit, p/q = " + rep.nu_low.str(), budget));
  }
  if (down_form) {
    rep.directions.push_back(run_direction(
        low, orb_high, rep.x0, orb_high.p - 1, max_k,
        "low^k(x0) == x[k*(p-1)] on the high orbit, p/q = " + rep.nu_high.str(), budget));
  }
  rep.passed = std::all_of(rep.directions.begin(), rep.directions.end(),
                           [](const EmbeddingDirection& d) { return d.passed; });
  return rep;
}

HypothesisReport hypothesis_check(const Lift& L, const RotationBudget& budget) {
  const RotationResult rm = rotation_number(L.left_map(), Rational(0), budget);
  const RotationResult rc = rotation_number(L, Rational(0), budget);
  const RotationResult rp = rotation_number(L.right_map(), Rational(0), budget);
  if (!rm.exact() || !rc.exact() || !rp.exact()) {
    throw BudgetError(BudgetError::Kind::iterations,
                      "rotation numbers not resolved within budget");
  }
  HypothesisReport rep;
  rep.nu_minus = rm.value;
  rep.nu = rc.value;
  rep.nu_plus = rp.value;
  const mpz_class p = rep.nu.num();
  const mpz_class q = rep.nu.den();
  if (Rational::from_mpz(p - 1, q) == rep.nu_minus &&
      Rational::from_mpz(p + 1, q) == rep.nu_plus) {
    rep.satisfied = true;
    rep.p_odd = mpz_odd_p(p.get_mpz_t()) != 0;
    rep.q_even = mpz_even_p(q.get_mpz_t()) != 0;
    rep.pass = rep.p_odd && rep.q_even;
  }
  return rep;
}

}  // namespace rotno
