#include "rotno/examples.hpp"

#include "rotno/errors.hpp"

namespace rotno {

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

Lift ex1_f() {
  return Lift::make({{r(0), r(0), r(0), r(1, 2)},
                     {r(1, 2), r(1, 2), r(0), r(1)}});
}

Lift ex1_g1() {
  return Lift::make({{r(0), r(1, 4), r(0), r(1, 2)},
                     {r(1, 2), r(3, 4), r(0), r(1)}});
}

Lift ex1_g2() {
  return Lift::make({{r(0), r(1, 4), r(0), r(1, 2)},
                     {r(1, 2), r(1), r(0), r(1)}});
}

Lift ex2_f() {
  return Lift::make({{r(0), r(0), r(1), r(1, 2)},
                     {r(1, 2), r(1), r(0), r(1)}});
}

Lift ex2_g() {
  return Lift::make({{r(0), r(1, 4), r(1), r(1, 2)},
                     {r(1, 2), r(1), r(0), r(1)}});
}

Lift ex3_f() {
  // (2 + 2 ceil(x) + ceil(x-1/10) + ceil(x-1/5) + 2 ceil(x-2/5)
  //    + ceil(x-1/2) + ceil(x-3/5) + 2 ceil(x-4/5)) / 10
  return Lift::make({{r(0), r(1, 5), r(0), r(2, 5)},
                     {r(1, 10), r(2, 5), r(0), r(1, 2)},
                     {r(1, 5), r(1, 2), r(0), r(3, 5)},
                     {r(2, 5), r(3, 5), r(0), r(4, 5)},
                     {r(1, 2), r(4, 5), r(0), r(9, 10)},
                     {r(3, 5), r(9, 10), r(0), r(1)},
                     {r(4, 5), r(1), r(0), r(6, 5)}});
}

Lift ex5_f() {
  return Lift::make({{r(0), r(1, 5), r(0), r(1, 5)},
                     {r(1, 10), r(1, 5), r(0), r(2, 5)},
                     {r(1, 5), r(2, 5), r(0), r(3, 5)},
                     {r(2, 5), r(3, 5), r(0), r(4, 5)},
                     {r(3, 5), r(4, 5), r(0), r(1)},
                     {r(4, 5), r(1), r(0), r(6, 5)}});
}

Lift ex5_variant() {
  return Lift::make({{r(0), r(1, 5), r(0), r(1, 5)},
                     {r(1, 10), r(1, 5), r(0), r(2, 5)},
                     {r(1, 5), r(1, 2), r(0), r(3, 5)},
                     {r(2, 5), r(3, 5), r(0), r(4, 5)},
                     {r(3, 5), r(4, 5), r(0), r(1)},
                     {r(4, 5), r(1), r(0), r(6, 5)}});
}

}  // namespace

Lift example_ex4(const Rational& alpha, const Rational& beta) {
  if (alpha < r(0) || alpha > r(1) || beta < r(0) || beta > r(1)) {
    throw ValidationError("ex4_f needs alpha, beta in [0,1], got alpha=" + alpha.str() +
                          " beta=" + beta.str());
  }
  const Rational v0 = (r(1) + r(2) * alpha) / r(6);
  const Rational v13 = (r(1) + beta) / r(2);
  return Lift::make({{r(0), v0, r(0), r(1, 2)},
                     {r(1, 3), v13, r(0), r(1)},
                     {r(5, 6), r(1), r(1), r(1, 6)}});
}

Lift example_lift(const std::string& id) {
  if (id == "ex1_f") return ex1_f();
  if (id == "ex1_g1") return ex1_g1();
  if (id == "ex1_g2") return ex1_g2();
  if (id == "ex2_f") return ex2_f();
  if (id == "ex2_g") return ex2_g();
  if (id == "ex3_f") return ex3_f();
  if (id == "ex4_f") return example_ex4(Rational(0), Rational(0));
  if (id == "ex5_f") return ex5_f();
  if (id == "ex5_variant") return ex5_variant();
  throw ValidationError("unknown example '" + id + "'");
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"ex1_f", "ex1_g1", "ex1_g2", "ex2_f", "ex2_g",
                                              "ex3_f", "ex4_f", "ex5_f", "ex5_variant"};
  return names;
}

}  // namespace rotno
