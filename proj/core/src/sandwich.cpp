#include <cstddef>
#include <utility>
#include <vector>

#include "rotno/errors.hpp"
#include "rotno/lift.hpp"

namespace rotno {

namespace {

struct Geometry {
  Rational min_spacing;  // min cyclic distance between breakpoints
  Rational max_jump;     // largest gap height, 0 if continuous
  Rational max_slope;
};

Geometry measure(const Lift& f) {
  const auto& segs = f.segments();
  Geometry g{Rational(1), Rational(0), Rational(0)};
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational next = (i + 1 < segs.size()) ? segs[i + 1].start : Rational(1);
    g.min_spacing = min(g.min_spacing, next - segs[i].start);
    g.max_slope = max(g.max_slope, segs[i].slope);
    const Rational jump = f.right_limit_at(i) - f.left_limit_at(i);
    g.max_jump = max(g.max_jump, jump);
  }
  return g;
}

// Continuous nondecreasing envelope above f: each jump is replaced by a steep
// ramp of slope M ending exactly at the right limit, placed just before the
// jump point.  Coincides with f elsewhere (up to breakpoint values, which are
// lifted to their right limits).
Lift upper_envelope(const Lift& f, const Rational& M) {
  const auto& segs = f.segments();
  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::size_t nxt = (i + 1 < segs.size()) ? i + 1 : 0;
    const Rational b = (i + 1 < segs.size()) ? segs[nxt].start : Rational(1);
    const Rational jump = f.right_limit_at(nxt) - f.left_limit_at(nxt);
    out.push_back({segs[i].start, f.right_limit_at(i), segs[i].slope, segs[i].intercept});
    if (jump > Rational(0)) {
      const Rational width = jump / (M - segs[i].slope);
      const Rational p = b - width;
      const Rational vp = segs[i].slope * p + segs[i].intercept;
      out.push_back({p, vp, M, vp - M * p});
    }
  }
  return Lift::make(std::move(out));
}

// Mirror image: ramps of slope M start at the left limit of each jump point
// and climb to meet the following affine law just after it.
Lift lower_envelope(const Lift& f, const Rational& M) {
  const auto& segs = f.segments();
  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational ll = f.left_limit_at(i);
    const Rational jump = f.right_limit_at(i) - ll;
    if (jump > Rational(0)) {
      const Rational width = jump / (M - segs[i].slope);
      out.push_back({segs[i].start, ll, M, ll - M * segs[i].start});
      const Rational p = segs[i].start + width;
      out.push_back({p, segs[i].slope * p + segs[i].intercept, segs[i].slope, segs[i].intercept});
    } else {
      out.push_back({segs[i].start, ll, segs[i].slope, segs[i].intercept});
    }
  }
  return Lift::make(std::move(out));
}

// max over one period of (g - id) at the partition knots; g continuous
// piecewise affine, so knot values suffice.
Rational max_of_minus_id(const Lift& g) {
  const auto& segs = g.segments();
  Rational best = segs[0].value - segs[0].start;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational next = (i + 1 < segs.size()) ? segs[i + 1].start : Rational(1);
    best = max(best, g.right_limit_at(i) - segs[i].start);
    best = max(best, segs[i].slope * next + segs[i].intercept - next);
  }
  return best;
}

Rational min_of_minus_id(const Lift& g) {
  const auto& segs = g.segments();
  Rational best = segs[0].value - segs[0].start;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational next = (i + 1 < segs.size()) ? segs[i + 1].start : Rational(1);
    best = min(best, g.right_limit_at(i) - segs[i].start);
    best = min(best, segs[i].slope * next + segs[i].intercept - next);
  }
  return best;
}

Lift translation_lift(const Rational& c) {
  return Lift::make({{Rational(0), c, Rational(1), c}});
}

}  // namespace

std::pair<Lift, Lift> Lift::sandwich_homeos(const Lift& f, const Rational& delta) {
  if (!(delta > Rational(0))) {
    throw ValidationError("sandwich_homeos: delta must be positive, got " + delta.str());
  }
  if (f.is_strictly_increasing()) return {f, f};

  const Geometry geo = measure(f);
  const Rational w = min(delta, geo.min_spacing) / Rational(4);
  const Rational M = (geo.max_jump + geo.max_slope + Rational(1)) / w;

  // Upper side: steep-ramp envelope, then blend toward the translation
  // x + max(f+ - id) to remove flat pieces.  The blend weight keeps the
  // extra deviation below delta/2, so the whole construction stays inside
  // the delta tube.
  const Lift s_plus = upper_envelope(f, M);
  const Rational c_plus = max_of_minus_id(f.right_map());
  const Lift t_plus = translation_lift(c_plus);
  const Rational b_plus = max(Rational(0), max_of_minus_id(t_plus) - min_of_minus_id(s_plus));
  const Rational wt_up = min(delta / (Rational(2) * (b_plus + Rational(1))), Rational(1, 2));
  const Lift h_plus = affine_combination(Rational(1) - wt_up, s_plus, wt_up, t_plus);

  const Lift s_minus = lower_envelope(f, M);
  const Rational c_minus = min_of_minus_id(f.left_map());
  const Lift t_minus = translation_lift(c_minus);
  const Rational b_minus = max(Rational(0), max_of_minus_id(s_minus) - min_of_minus_id(t_minus));
  const Rational wt_dn = min(delta / (Rational(2) * (b_minus + Rational(1))), Rational(1, 2));
  const Lift h_minus = affine_combination(Rational(1) - wt_dn, s_minus, wt_dn, t_minus);

  return {h_minus, h_plus};
}

}  // namespace rotno
