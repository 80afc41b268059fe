#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "rotno/errors.hpp"
#include "rotno/examples.hpp"
#include "rotno/family.hpp"
#include "rotno/farey.hpp"
#include "rotno/rotation.hpp"

using namespace rotno;
using testutil::Rng;

namespace {

GapAssignment current_values(const Lift& L) {
  GapAssignment a;
  for (const auto& g : L.discontinuities()) a.emplace(g.point, g.current);
  return a;
}

GapAssignment extreme(const Lift& L, bool high) {
  GapAssignment a;
  for (const auto& g : L.discontinuities()) a.emplace(g.point, high ? g.hi : g.lo);
  return a;
}

Rational exact_nu(const Lift& L) {
  const RotationResult r = rotation_number(L);
  REQUIRE(r.exact());
  return r.value;
}

}  // namespace

TEST_CASE("assign reproduces the parameterized family") {
  const Lift base = example_ex4(Rational(0), Rational(0));
  GapAssignment a;
  a.emplace(Rational(0), Rational(1, 3));    // (1+2a)/6 at a=1/2
  a.emplace(Rational(1, 3), Rational(11, 12));  // (1+b)/2 at b=5/6
  const Lift g = assign(base, a);
  CHECK(g == example_ex4(Rational(1, 2), Rational(5, 6)));
  CHECK(exact_nu(g) == Rational(2, 5));
  CHECK(Lift::levy_zero_equiv(base, g));
  CHECK(Lift::pointwise_leq(base.left_map(), g));
  CHECK(Lift::pointwise_leq(g, base.right_map()));
}

TEST_CASE("extreme assignments are the one-sided maps") {
  for (const char* id : {"ex1_f", "ex2_f", "ex3_f", "ex5_f"}) {
    const Lift L = example_lift(id);
    CHECK(assign(L, extreme(L, false)) == L.left_map());
    CHECK(assign(L, extreme(L, true)) == L.right_map());
  }
}

TEST_CASE("assign validates keys and ranges") {
  const Lift base = example_lift("ex1_f");
  GapAssignment wrong_keys;
  wrong_keys.emplace(Rational(1, 4), Rational(1, 4));
  wrong_keys.emplace(Rational(1, 2), Rational(3, 4));
  CHECK_THROWS_AS(assign(base, wrong_keys), ValidationError);

  GapAssignment missing;
  missing.emplace(Rational(0), Rational(1, 4));
  CHECK_THROWS_AS(assign(base, missing), ValidationError);

  GapAssignment out_of_gap = current_values(base);
  out_of_gap[Rational(0)] = Rational(3, 4);
  CHECK_THROWS_AS(assign(base, out_of_gap), ValidationError);

  CHECK_THROWS_AS(assign(Lift::identity(), GapAssignment{}), ValidationError);
}

TEST_CASE("critical_grid at depth 0 is endpoints plus midpoint") {
  const Lift base = example_lift("ex1_f");
  const auto gaps = base.discontinuities();
  const CriticalGrid g = critical_grid(base, gaps[0], 0);
  CHECK(g.points == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2)});
  CHECK_THROWS_AS(critical_grid(base, gaps[0], -1), ValidationError);
}

TEST_CASE("critical_grid finds the case boundary of the two-gap family") {
  const Lift base = example_ex4(Rational(0), Rational(0));
  const auto gaps = base.discontinuities();
  REQUIRE(gaps.size() == 2);
  // value 1/3 at the gap over 0 is where the family's behavior switches
  const CriticalGrid g = critical_grid(base, gaps[0], 3);
  CHECK(std::find(g.points.begin(), g.points.end(), Rational(1, 3)) != g.points.end());
  CHECK(g.points.front() == Rational(1, 6));
  CHECK(g.points.back() == Rational(1, 2));
  CHECK(g.interval_preimages);  // flat pieces contribute interval preimages
}

TEST_CASE("critical_grid on the slope-one example") {
  const Lift base = example_lift("ex2_f");
  const auto gaps = base.discontinuities();
  REQUIRE(gaps.size() == 1);
  const CriticalGrid g = critical_grid(base, gaps[0], 2);
  // 0 and 1/2 are the endpoints; the preimage structure adds nothing inside
  CHECK(g.points.front() == Rational(0));
  CHECK(g.points.back() == Rational(1, 2));
  for (std::size_t i = 0; i + 1 < g.points.size(); ++i) {
    CHECK(g.points[i] < g.points[i + 1]);
  }
}

TEST_CASE("vset reproduces the worked examples") {
  CHECK(vset(example_lift("ex1_f")) ==
        FractionSet({Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2)}));
  const FractionSet v2 = vset(example_lift("ex2_f"));
  CHECK(v2 == FractionSet({Rational(0), Rational(1, 3), Rational(1, 2)}));
  CHECK_FALSE(v2.contains(Rational(1, 4)));  // despite 1/4 living in sset(0, 1/2)
  CHECK(vset(example_ex4(Rational(0), Rational(0))) ==
        FractionSet({Rational(1, 3), Rational(2, 5), Rational(1, 2)}));
  CHECK(vset(example_lift("ex3_f")) ==
        FractionSet({Rational(1, 4), Rational(2, 7), Rational(3, 10), Rational(1, 3),
                     Rational(3, 8), Rational(2, 5)}));
}

TEST_CASE("vset on example 5 avoids the excluded values at every depth") {
  const Lift f = example_lift("ex5_f");
  const FractionSet s = sset(Rational(1, 5), Rational(1, 3));
  for (int depth = 0; depth <= 12; ++depth) {
    VsetOptions opt;
    opt.depth = depth;
    const FractionSet v = vset(f, opt);
    CHECK_FALSE(v.contains(Rational(4, 15)));
    CHECK_FALSE(v.contains(Rational(3, 11)));
    CHECK(v.contains(Rational(1, 5)));
    CHECK(v.contains(Rational(1, 3)));
    FractionSet allowed = s;
    allowed.insert(Rational(1, 5));
    allowed.insert(Rational(1, 3));
    CHECK(v.subset_of(allowed));
  }
}

TEST_CASE("vset refines monotonically in depth") {
  for (const char* id : {"ex1_f", "ex2_f", "ex3_f", "ex4_f", "ex5_f"}) {
    const Lift L = example_lift(id);
    FractionSet prev;
    for (int depth = 0; depth <= 6; ++depth) {
      VsetOptions opt;
      opt.depth = depth;
      const FractionSet v = vset(L, opt);
      CHECK(prev.subset_of(v));
      prev = v;
    }
  }
}

TEST_CASE("vset bounds: contains both one-sided values, sits inside the candidate set") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Lift L = testutil::random_step_map(rng);
    if (L.discontinuities().empty()) continue;
    const Rational lo = exact_nu(L.left_map());
    const Rational hi = exact_nu(L.right_map());
    VsetOptions opt;
    opt.depth = 3;
    const FractionSet v = vset(L, opt);
    CHECK(v.contains(lo));
    CHECK(v.contains(hi));
    FractionSet allowed;
    allowed.insert(lo);
    allowed.insert(hi);
    if (lo < hi) {
      for (const auto& s : sset(lo, hi).elements()) allowed.insert(s);
    }
    CHECK(v.subset_of(allowed));
    const auto center = (lo < hi) ? excluded_center(lo, hi) : std::nullopt;
    if (center) CHECK_FALSE(v.contains(*center));
  }
}

TEST_CASE("vset explosion raises a typed budget error naming the need") {
  VsetOptions opt;
  opt.max_assignments = 2;
  try {
    vset(example_lift("ex1_f"), opt);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.kind() == BudgetError::Kind::assignments);
    CHECK(std::string(e.what()).find("cap is 2") != std::string::npos);
  }
  CHECK_THROWS_AS(vset(Lift::identity(), VsetOptions{}), ValidationError);
}

TEST_CASE("random gap assignments never leave the grid-based value set") {
  Rng rng(32);
  for (const char* id : {"ex1_f", "ex2_f", "ex3_f", "ex4_f", "ex5_f"}) {
    const Lift L = example_lift(id);
    VsetOptions opt;
    opt.depth = 6;
    const FractionSet v = vset(L, opt);
    const auto gaps = L.discontinuities();
    for (int i = 0; i < 1000; ++i) {
      GapAssignment a;
      for (const auto& g : gaps) a.emplace(g.point, rng.in_interval(g.lo, g.hi));
      const Lift assigned = assign(L, a);
      CHECK(v.contains(exact_nu(assigned)));
      if (i < 10) {
        CHECK(Lift::levy_zero_equiv(L, assigned));
        CHECK(Lift::pointwise_leq(L.left_map(), assigned));
        CHECK(Lift::pointwise_leq(assigned, L.right_map()));
      }
    }
  }
}

TEST_CASE("scan_family reproduces the parameter table") {
  const Lift base = example_ex4(Rational(0), Rational(0));
  // axes carry assigned values: (1+2a)/6 over the gap at 0, (1+b)/2 at 1/3
  std::vector<ScanAxis> axes{
      {Rational(0), {Rational(1, 4), Rational(1, 3), Rational(5, 12)}},
      {Rational(1, 3), {Rational(11, 12)}}};
  const auto rows = scan_family(base, axes);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].nu == Rational(1, 3));
  CHECK(rows[1].nu == Rational(2, 5));
  CHECK(rows[2].nu == Rational(1, 2));

  // the two boundary cells of the case table
  std::vector<ScanAxis> corner{{Rational(0), {Rational(1, 3)}},
                               {Rational(1, 3), {Rational(5, 6), Rational(1)}}};
  const auto rows2 = scan_family(base, corner);
  REQUIRE(rows2.size() == 2);
  CHECK(rows2[0].nu == Rational(1, 3));  // beta = 2/3
  CHECK(rows2[1].nu == Rational(1, 2));  // beta = 1
}

TEST_CASE("scan rows are sorted and per-cell errors stay in-row") {
  const Lift base = example_lift("ex1_f");
  std::vector<ScanAxis> axes{
      {Rational(0), {Rational(1, 2), Rational(0), Rational(3, 4)}},  // 3/4 is out of gap
      {Rational(1, 2), {Rational(1)}}};
  const auto rows = scan_family(base, axes);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].params[0] == Rational(0));
  CHECK(rows[1].params[0] == Rational(1, 2));
  CHECK(rows[2].params[0] == Rational(3, 4));
  CHECK(rows[0].nu.has_value());
  CHECK(rows[1].nu.has_value());
  CHECK_FALSE(rows[2].nu.has_value());
  CHECK(rows[2].error.find("validation") == 0);

  std::ostringstream os;
  write_scan_csv(os, rows, 2);
  const std::string csv = os.str();
  CHECK(csv.find("param_1,param_2,nu\n") == 0);
  CHECK(csv.find("0/1,1/1,0/1") != std::string::npos);
  CHECK(csv.find("1/2,1/1,1/2") != std::string::npos);
  CHECK(csv.find("3/4,1/1,error:validation") != std::string::npos);

  CHECK_THROWS_AS(scan_family(base, {{Rational(1, 4), {Rational(1, 4)}}}, RotationBudget{}),
                  ValidationError);
  CHECK_THROWS_AS(scan_family(base, {}, RotationBudget{}), ValidationError);
}

TEST_CASE("verify_embedding on the staircase pairs") {
  for (const char* id : {"ex1_f", "ex2_f"}) {
    const Lift f = example_lift(id);
    const auto rep = verify_embedding(f, f.right_map(), 100);
    REQUIRE(rep.applicable);
    CHECK(rep.nu_low == Rational(0));
    CHECK(rep.nu_high == Rational(1, 2));
    CHECK(rep.x0 == Rational(0));
    REQUIRE(rep.directions.size() == 1);
    CHECK(rep.directions[0].checks.size() == 100);
    CHECK(rep.passed);
  }
}

TEST_CASE("verify_embedding applies the mirror form by fraction value") {
  // nu(f) = 0 = (1-1)/4 with nu(g1) = 1/4: the down-form hypothesis holds as
  // an equality of values, and the relation checks out (f fixes 0).
  const auto rep = verify_embedding(example_lift("ex1_f"), example_lift("ex1_g1"), 50);
  REQUIRE(rep.applicable);
  CHECK(rep.passed);
}

TEST_CASE("verify_embedding gates out non-matching fractions") {
  // 1/4 vs 1/3: neither (p+1)/q nor (p-1)/q matches
  const auto rep = verify_embedding(example_lift("ex1_g1"), example_lift("ex1_g2"), 10);
  CHECK_FALSE(rep.applicable);
  CHECK(rep.reason.find("hypothesis not applicable") == 0);

  CHECK_THROWS_AS(verify_embedding(example_lift("ex1_f"), example_lift("ex2_f"), 10),
                  ValidationError);
  CHECK_THROWS_AS(verify_embedding(example_lift("ex1_f"), example_lift("ex1_f"), 10),
                  ValidationError);
}

TEST_CASE("verify_embedding runs both directions when both apply") {
  // translations by 1/3 and 2/3: 1/3 = p/q -> (p+1)/q = 2/3 and mirror both hold
  const Lift a = Lift::make({{Rational(0), Rational(1, 3), Rational(1), Rational(1, 3)}});
  const Lift b = Lift::make({{Rational(0), Rational(2, 3), Rational(1), Rational(2, 3)}});
  CHECK(Lift::levy_zero_equiv(a, b) == false);
  // not zero-distance, so the call must reject them
  CHECK_THROWS_AS(verify_embedding(a, b, 5), ValidationError);
}

TEST_CASE("hypothesis_check: satisfied pattern passes the parity assertions") {
  // nu(g1) = 1/4 with one-sided values 0 and 1/2: (1-1)/4 = 0, (1+1)/4 = 1/2
  const HypothesisReport rep = hypothesis_check(example_lift("ex1_g1"));
  CHECK(rep.satisfied);
  CHECK(rep.nu_minus == Rational(0));
  CHECK(rep.nu == Rational(1, 4));
  CHECK(rep.nu_plus == Rational(1, 2));
  CHECK(rep.p_odd);
  CHECK(rep.q_even);
  CHECK(rep.pass);
}

TEST_CASE("hypothesis_check: not satisfied cases") {
  const HypothesisReport r5 = hypothesis_check(example_lift("ex5_f"));
  CHECK_FALSE(r5.satisfied);
  CHECK(r5.pass);
  CHECK(r5.nu == Rational(1, 5));

  const HypothesisReport rid = hypothesis_check(Lift::identity());
  CHECK_FALSE(rid.satisfied);
  CHECK(rid.pass);
}
