#pragma once

#include <string>
#include <vector>

#include "rotno/lift.hpp"
#include "rotno/rational.hpp"

namespace rotno {

// Built-in fixtures: every map the library ships as a worked example,
// compiled by hand from its closed floor/ceiling/min form into segments with
// explicit breakpoint values.
//
//   ex1_f        ceil(2x)/2
//   ex1_g1       (1 + ceil(2x) + floor(2x))/4
//   ex1_g2       (1 + ceil(x) + floor(2x) + floor(x + 1/2))/4
//   ex2_f        min(x + 1/2, ceil(x))
//   ex2_g        (ex2_f + ex2_f^+)/2
//   ex3_f        seven-step staircase with nu(f^-) = 1/4, nu(f^+) = 2/5
//   ex4_f        two-gap family member f_{alpha,beta} (defaults alpha=beta=0)
//   ex5_f        (1 + ceil(5x) - ceil(x) + ceil(x - 1/10))/5
//   ex5_variant  ex5_f raised by 1/10 at the point 1/5
Lift example_lift(const std::string& id);

// f_{alpha,beta}: value (1+2a)/6 at 0, 1/2 on (0,1/3), (1+b)/2 at 1/3,
// 1 on (1/3,5/6], x+1/6 on [5/6,1).  Requires alpha, beta in [0,1].
Lift example_ex4(const Rational& alpha, const Rational& beta);

const std::vector<std::string>& example_names();

}  // namespace rotno
