#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotno/farey.hpp"
#include "rotno/lift.hpp"
#include "rotno/rational.hpp"
#include "rotno/rotation.hpp"

namespace rotno {

// One value per discontinuity point of the base lift, each inside its gap.
using GapAssignment = std::map<Rational, Rational>;

// The lift equal to `base` except for the assigned values at its gaps.
// The result is at Levy distance zero from the base.  Rejects a wrong key
// set and out-of-gap values.
Lift assign(const Lift& base, const GapAssignment& a);

// Finite test set inside [gap.lo, gap.hi]: both endpoints, every value whose
// forward orbit under the base meets a breakpoint within `depth` steps
// (found by backward iteration of the breakpoint set through the affine
// pieces), and the midpoints of consecutive pairs.  The rotation number of
// the assigned map is constant between consecutive points of this grid once
// `depth` covers the orbit combinatorics.  Zero-slope pieces have interval
// preimages; their endpoints stand in for them and `interval_preimages` is
// flagged.
struct CriticalGrid {
  std::vector<Rational> points;
  bool interval_preimages = false;
};
CriticalGrid critical_grid(const Lift& base, const GapSpec& gap, int depth);

struct VsetOptions {
  int depth = 8;
  long max_assignments = 200000;
  RotationBudget budget{};
};

// Rotation numbers over the product of per-gap critical grids.  Always
// contains nu(f^-) and nu(f^+); always a subset of {nu-, nu+} union
// sset(nu-, nu+).  Exact once `depth` resolves all orbit combinatorics,
// a lower bound for V(f) otherwise.
FractionSet vset(const Lift& base, const VsetOptions& opt = {});

struct ScanAxis {
  Rational gap_point;
  std::vector<Rational> samples;
};

struct ScanRow {
  std::vector<Rational> params;
  std::optional<Rational> nu;
  std::string error;  // per-cell failure, recorded instead of aborting
};

// Exact rotation number on the sample grid, one row per cell, rows sorted
// lexicographically by parameters.  Gaps not named by an axis keep the
// base's value.
std::vector<ScanRow> scan_family(const Lift& base, std::vector<ScanAxis> axes,
                                 const RotationBudget& budget = {});

// CSV: header param_1,...,param_n,nu; fractions as "p/q".
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, std::size_t n_params);

struct EmbeddingCheck {
  long k = 0;
  Rational iterate;      // k-th iterate of the other map at x0
  Rational enumerated;   // the expected orbit point
  bool ok = false;
};

struct EmbeddingDirection {
  std::string relation;  // which indexed relation was checked
  std::vector<EmbeddingCheck> checks;
  bool passed = false;
};

struct EmbeddingReport {
  bool applicable = false;
  std::string reason;  // set when not applicable
  Rational nu_low, nu_high;
  Rational x0;  // smallest common periodic point in [0,1)
  std::vector<EmbeddingDirection> directions;
  bool passed = false;
};

// For zero-distance maps with exact rotation numbers nu_low < nu_high whose
// fractions differ by exactly 1/q (in the (p+-1)/q sense), finds a common
// periodic point, builds the increasing enumeration x_j of the matching
// orbit, and checks the indexed relation iterate-by-iterate for k <= max_k.
EmbeddingReport verify_embedding(const Lift& low, const Lift& high, long max_k,
                                 const RotationBudget& budget = {});

struct HypothesisReport {
  bool satisfied = false;  // nu = p/q with (p-1)/q = nu- and (p+1)/q = nu+
  Rational nu_minus, nu, nu_plus;
  bool p_odd = false;
  bool q_even = false;
  bool pass = true;  // false only when satisfied but a parity fails
};

// Computes nu-, nu, nu+ exactly and, when the centered pattern holds,
// asserts p odd and q even.
HypothesisReport hypothesis_check(const Lift& L, const RotationBudget& budget = {});

}  // namespace rotno
