#include "rotno/lift.hpp"

#include <algorithm>
#include <cstddef>

#include "rotno/errors.hpp"

namespace rotno {

namespace {

Rational law_at(const Segment& s, const Rational& x) {
  return s.slope * x + s.intercept;
}

std::vector<Rational> merged_breakpoints(const Lift& f, const Lift& g) {
  std::vector<Rational> pts;
  pts.reserve(f.segments().size() + g.segments().size());
  for (const auto& s : f.segments()) pts.push_back(s.start);
  for (const auto& s : g.segments()) pts.push_back(s.start);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

Lift Lift::make(std::vector<Segment> segments) {
  if (segments.empty()) throw ValidationError("lift needs at least one segment");
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.start < zero || s.start >= one) {
      throw ValidationError("segment start " + s.start.str() + " outside [0,1)");
    }
    if (i > 0 && !(segments[i - 1].start < s.start)) {
      throw ValidationError("segment starts not strictly increasing at " + s.start.str());
    }
    if (s.slope < zero) {
      throw ValidationError("negative slope " + s.slope.str() + " at breakpoint " + s.start.str());
    }
  }
  if (segments.front().start != zero) {
    throw ValidationError("segments must cover [0,1): first start is " +
                          segments.front().start.str() + ", expected 0/1");
  }
  Lift L;
  L.segments_ = std::move(segments);
  for (std::size_t i = 0; i < L.segments_.size(); ++i) {
    const Rational ll = L.left_limit_at(i);
    const Rational rl = L.right_limit_at(i);
    const Rational& v = L.segments_[i].value;
    if (!(ll <= v)) {
      throw ValidationError("breakpoint " + L.segments_[i].start.str() + ": value " + v.str() +
                            " below left limit " + ll.str());
    }
    if (!(v <= rl)) {
      throw ValidationError("breakpoint " + L.segments_[i].start.str() + ": value " + v.str() +
                            " above right limit " + rl.str());
    }
  }
  L.normalize();
  return L;
}

void Lift::normalize() {
  // Merge interior junctions where the same affine law continues through a
  // continuous point.  The breakpoint at 0 is always kept.
  std::vector<Segment> out;
  out.reserve(segments_.size());
  out.push_back(segments_[0]);
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    const Segment& prev = out.back();
    const Segment& cur = segments_[i];
    if (cur.slope == prev.slope && cur.intercept == prev.intercept &&
        cur.value == law_at(prev, cur.start)) {
      continue;
    }
    out.push_back(cur);
  }
  segments_ = std::move(out);
}

std::size_t Lift::segment_index(const Rational& t) const {
  // Last segment whose start is <= t; t must be in [0,1).
  std::size_t lo = 0, hi = segments_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (segments_[mid].start <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational Lift::left_limit_at(std::size_t i) const {
  if (i == 0) {
    // Wrap through f(x+1) = f(x)+1: the limit from below at 0 comes from the
    // last segment evaluated at 1, shifted down one period.
    return law_at(segments_.back(), Rational(1)) - Rational(1);
  }
  return law_at(segments_[i - 1], segments_[i].start);
}

Rational Lift::right_limit_at(std::size_t i) const {
  return law_at(segments_[i], segments_[i].start);
}

Rational Lift::eval(const Rational& x, Side side) const {
  const Rational whole = Rational::from_mpz(x.floor(), 1);
  const Rational t = x - whole;
  const std::size_t i = segment_index(t);
  if (t == segments_[i].start) {
    switch (side) {
      case Side::point: return segments_[i].value + whole;
      case Side::right: return right_limit_at(i) + whole;
      case Side::left: return left_limit_at(i) + whole;
    }
  }
  return law_at(segments_[i], t) + whole;
}

Lift Lift::left_map() const {
  std::vector<Segment> segs = segments_;
  for (std::size_t i = 0; i < segs.size(); ++i) segs[i].value = left_limit_at(i);
  return make(std::move(segs));
}

Lift Lift::right_map() const {
  std::vector<Segment> segs = segments_;
  for (std::size_t i = 0; i < segs.size(); ++i) segs[i].value = right_limit_at(i);
  return make(std::move(segs));
}

std::vector<GapSpec> Lift::discontinuities() const {
  std::vector<GapSpec> gaps;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Rational ll = left_limit_at(i);
    const Rational rl = right_limit_at(i);
    if (ll < rl) gaps.push_back({segments_[i].start, ll, rl, segments_[i].value});
  }
  return gaps;
}

bool Lift::is_strictly_increasing() const {
  if (!is_continuous()) return false;
  for (const auto& s : segments_) {
    if (s.slope == Rational(0)) return false;
  }
  return true;
}

bool Lift::pointwise_leq(const Lift& f, const Lift& g) {
  const auto pts = merged_breakpoints(f, g);
  const Rational one(1);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Rational& t = pts[j];
    if (!(f.eval(t) <= g.eval(t))) return false;
    // The open cell (t, u) carries one affine law from each lift; comparing
    // the one-sided limits at both cell ends decides the whole cell.
    const Rational u = (j + 1 < pts.size()) ? pts[j + 1] : one;
    const Segment& sf = f.segments_[f.segment_index(t)];
    const Segment& sg = g.segments_[g.segment_index(t)];
    if (!(law_at(sf, t) <= law_at(sg, t))) return false;
    if (!(law_at(sf, u) <= law_at(sg, u))) return false;
  }
  return true;
}

bool Lift::levy_zero_equiv(const Lift& f, const Lift& g) {
  return f.right_map() == g.right_map();
}

Lift Lift::affine_combination(const Rational& w_f, const Lift& f,
                              const Rational& w_g, const Lift& g) {
  if (w_f + w_g != Rational(1)) {
    throw ValidationError("affine combination weights must sum to 1, got " +
                          w_f.str() + " + " + w_g.str());
  }
  if (w_f < Rational(0) || w_g < Rational(0)) {
    throw ValidationError("affine combination weights must be nonnegative");
  }
  const auto pts = merged_breakpoints(f, g);
  std::vector<Segment> segs;
  segs.reserve(pts.size());
  for (const auto& t : pts) {
    const Segment& sf = f.segments_[f.segment_index(t)];
    const Segment& sg = g.segments_[g.segment_index(t)];
    segs.push_back({t,
                    w_f * f.eval(t) + w_g * g.eval(t),
                    w_f * sf.slope + w_g * sg.slope,
                    w_f * sf.intercept + w_g * sg.intercept});
  }
  return make(std::move(segs));
}

Lift Lift::add_constant(const Rational& c) const {
  std::vector<Segment> segs = segments_;
  for (auto& s : segs) {
    s.value += c;
    s.intercept += c;
  }
  return make(std::move(segs));
}

Lift Lift::from_samples(
    const std::vector<Rational>& breakpoints,
    const std::function<Rational(const Rational&)>& value_at,
    const std::function<std::pair<Rational, Rational>(const Rational&)>& law_at_midpoint) {
  std::vector<Segment> segs;
  segs.reserve(breakpoints.size());
  const Rational one(1);
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Rational& b = breakpoints[i];
    const Rational next = (i + 1 < breakpoints.size()) ? breakpoints[i + 1] : one;
    const Rational mid = (b + next) / Rational(2);
    auto [slope, intercept] = law_at_midpoint(mid);
    segs.push_back({b, value_at(b), slope, intercept});
  }
  return make(std::move(segs));
}

Lift Lift::translate_arg(const Rational& dx) const {
  std::vector<Rational> pts;
  pts.reserve(segments_.size());
  for (const auto& s : segments_) pts.push_back((s.start - dx).frac());
  pts.push_back(Rational(0));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto value = [&](const Rational& b) { return eval(b + dx); };
  auto law = [&](const Rational& m) -> std::pair<Rational, Rational> {
    const Rational mm = m + dx;
    const Rational whole = Rational::from_mpz(mm.floor(), 1);
    const Segment& s = segments_[segment_index(mm - whole)];
    return {s.slope, s.slope * (dx - whole) + s.intercept + whole};
  };
  return from_samples(pts, value, law);
}

Lift replace_values_unchecked(const Lift& base,
                              const std::vector<std::pair<std::size_t, Rational>>& edits) {
  Lift out = base;
  for (const auto& [i, v] : edits) out.segments_[i].value = v;
  return out;
}

Lift Lift::compose(const Lift& outer, const Lift& inner) {
  if (!inner.is_strictly_increasing()) {
    throw ValidationError("compose: inner lift must be continuous and strictly increasing");
  }
  // Breakpoints: inner's own, plus the unique inner-preimage of every outer
  // breakpoint (mod 1).
  std::vector<Rational> pts;
  for (const auto& s : inner.segments_) pts.push_back(s.start);
  for (std::size_t i = 0; i < inner.segments_.size(); ++i) {
    const Segment& s = inner.segments_[i];
    const Rational next = (i + 1 < inner.segments_.size()) ? inner.segments_[i + 1].start
                                                           : Rational(1);
    const Rational lo = s.slope * s.start + s.intercept;
    const Rational hi = s.slope * next + s.intercept;
    for (const auto& bo : outer.segments_) {
      for (mpz_class m = (lo - bo.start).floor(); Rational::from_mpz(m, 1) + bo.start < hi; ++m) {
        const Rational y = bo.start + Rational::from_mpz(m, 1);
        if (!(lo < y)) continue;
        const Rational x = (y - s.intercept) / s.slope;
        if (s.start < x && x < next) pts.push_back(x);
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto value = [&](const Rational& b) { return outer.eval(inner.eval(b)); };
  auto law = [&](const Rational& mid) -> std::pair<Rational, Rational> {
    const Segment& si = inner.segments_[inner.segment_index(mid)];
    const Rational y = si.slope * mid + si.intercept;
    const Rational whole = Rational::from_mpz(y.floor(), 1);
    const Segment& so = outer.segments_[outer.segment_index(y - whole)];
    // outer law applied to inner law, with the fundamental-domain shift.
    return {so.slope * si.slope,
            so.slope * (si.intercept - whole) + so.intercept + whole};
  };
  return from_samples(pts, value, law);
}

bool Lift::within_tube(const Lift& g, const Lift& f, const Rational& eps) {
  if (eps < Rational(0)) throw ValidationError("tube radius must be >= 0");
  const Lift upper = f.translate_arg(eps).add_constant(eps);
  const Lift lower = f.translate_arg(-eps).add_constant(-eps);
  return pointwise_leq(lower, g) && pointwise_leq(g, upper);
}

}  // namespace rotno
