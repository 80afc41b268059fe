#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rotno/rational.hpp"

namespace rotno {

// One affine piece of a lift on the fundamental domain.  `value` is the point
// value at `start`; the affine law slope*x + intercept applies on the open
// interval (start, next start).  A jump can therefore only happen at a start.
struct Segment {
  Rational start;      // in [0, 1)
  Rational value;      // f(start)
  Rational slope;      // >= 0
  Rational intercept;  // law on the open interval to the right

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Side { point, left, right };

// A jump discontinuity: the admissible values at `point` form [lo, hi].
struct GapSpec {
  Rational point;
  Rational lo;       // left limit
  Rational hi;       // right limit
  Rational current;  // the lift's own value there

  friend bool operator==(const GapSpec&, const GapSpec&) = default;
};

// Monotone degree-one lift of a circle map, represented by finitely many
// rational affine pieces on [0, 1) with explicit values at the breakpoints.
// Evaluation anywhere on the line reduces to the fundamental domain through
// f(x + 1) = f(x) + 1.  Instances are immutable and normalized: breakpoint 0
// is always present, and interior breakpoints where the same affine law
// continues through a continuous junction are merged away, so structural
// equality of segments decides equality of maps.
class Lift {
public:
  // Validates and normalizes.  Rejects an empty list, unsorted or duplicate
  // starts, starts outside [0, 1), a first start != 0, negative slopes, and
  // any breakpoint where left limit <= value <= right limit fails (the error
  // names the offending breakpoint).
  static Lift make(std::vector<Segment> segments);

  static Lift identity() { return make({{0, 0, 1, 0}}); }

  const std::vector<Segment>& segments() const { return segments_; }

  Rational eval(const Rational& x, Side side = Side::point) const;
  Rational operator()(const Rational& x) const { return eval(x, Side::point); }

  // The canonical representatives of the zero-Levy-distance class: every
  // breakpoint value replaced by its one-sided limit.  Both are idempotent.
  Lift left_map() const;
  Lift right_map() const;

  // All jump points with their value intervals, sorted by point.  Empty iff
  // the lift is continuous.
  std::vector<GapSpec> discontinuities() const;

  bool is_continuous() const { return discontinuities().empty(); }
  bool is_strictly_increasing() const;  // continuous and no zero-slope piece

  // Exact pointwise f <= g on all of R, decided on the merged partition.
  static bool pointwise_leq(const Lift& f, const Lift& g);

  // d_H(f, g) == 0, i.e. equal one-sided limit maps.
  static bool levy_zero_equiv(const Lift& f, const Lift& g);

  // w_f * f + w_g * g with w_f + w_g == 1 and both weights >= 0.
  static Lift affine_combination(const Rational& w_f, const Lift& f,
                                 const Rational& w_g, const Lift& g);

  // x -> f(x + dx) and f + c; both are again lifts.
  Lift translate_arg(const Rational& dx) const;
  Lift add_constant(const Rational& c) const;

  // outer(inner(x)).  `inner` must be continuous and strictly increasing so
  // its preimages of outer's breakpoints are single points.
  static Lift compose(const Lift& outer, const Lift& inner);

  // Exact check of f(x - eps) - eps <= g(x) <= f(x + eps) + eps for all x,
  // which certifies Levy distance <= eps.
  static bool within_tube(const Lift& g, const Lift& f, const Rational& eps);

  // Continuous strictly increasing lifts h_minus <= f <= h_plus within Levy
  // distance < delta.  Requires delta > 0.  A lift that is already a
  // homeomorphism is returned unchanged on both sides.
  static std::pair<Lift, Lift> sandwich_homeos(const Lift& f, const Rational& delta);

  friend bool operator==(const Lift& a, const Lift& b) { return a.segments_ == b.segments_; }

  // -- helpers shared by the other modules --

  // Left limit at segment index i's start (wraps through the extension at 0).
  Rational left_limit_at(std::size_t i) const;
  // Right limit at segment index i's start.
  Rational right_limit_at(std::size_t i) const;
  // Index of the segment owning the point t in [0,1).
  std::size_t segment_index(const Rational& t) const;

  // Builds a lift from breakpoints (sorted, unique, 0 included) using exact
  // callbacks for the value at each breakpoint and the affine law on each
  // open cell (queried at the cell midpoint).
  static Lift from_samples(const std::vector<Rational>& breakpoints,
                           const std::function<Rational(const Rational&)>& value_at,
                           const std::function<std::pair<Rational, Rational>(const Rational&)>& law_at_midpoint);

private:
  Lift() = default;
  void normalize();
  std::vector<Segment> segments_;

  // Gap-value replacement keeps validity and normal form (a jump junction
  // never merges, whatever in-gap value it carries), so assign() skips
  // revalidation once it has range-checked the values.
  friend Lift replace_values_unchecked(const Lift& base,
                                       const std::vector<std::pair<std::size_t, Rational>>& edits);
};

Lift replace_values_unchecked(const Lift& base,
                              const std::vector<std::pair<std::size_t, Rational>>& edits);

}  // namespace rotno
