#include <doctest.h>

#include <random>

#include "qhall/config.hpp"
#include "qhall/fquot.hpp"
#include "qhall/hall.hpp"

using namespace qhall;

TEST_CASE("serre elements reduce to zero in every rank-2 preset") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    CartanDatum cd = cartan_preset(name);
    FAlgebra F(cd, 12);
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      CHECK(F.normal_form(F.serre_element(i, j)).empty());
    }
  }
}

TEST_CASE("basis dimensions in the A2 quotient") {
  FAlgebra F(cartan_preset("A2"), 8);
  CHECK(F.dim_weight({2, 1}) == 2);  // three words minus one relation
  CHECK(F.dim_weight({1, 1}) == 2);  // no relations in this weight
  CHECK(F.dim_weight({1, 0}) == 1);
  CHECK(F.dim_weight({0, 0}) == 1);
}

TEST_CASE("words below the relation weights pass through") {
  FAlgebra F(cartan_preset("A2"), 8);
  FElem x = {{FWord{0, 1}, RatFun::one()}};
  CHECK(F.normal_form(x) == x);
}

TEST_CASE("reduction rewrites the largest word") {
  // theta_1 applied to theta_0^2 from the left: the straightened form
  FAlgebra F(cartan_preset("A2"), 8);
  FElem lhs = F.mul(F.theta(1), F.mul(F.theta(0), F.theta(0)));
  FElem expect;
  FAlgebra::add_to(expect, FWord{0, 1, 0}, RatFun(qint(2)));
  FAlgebra::add_to(expect, FWord{0, 0, 1}, -RatFun::one());
  CHECK(lhs == expect);
}

TEST_CASE("divided powers multiply with quantum binomial coefficients") {
  FAlgebra F(cartan_preset("B2"), 8);
  for (int i = 0; i < 2; ++i) {
    FElem lhs = F.mul(F.divided_power(i, 1), F.divided_power(i, 1));
    FElem rhs = F.scale(F.divided_power(i, 2), RatFun(qint(2, F.cartan().eps(i))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("normal form is linear and idempotent on random elements") {
  FAlgebra F(cartan_preset("A2"), 6);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 1), len(0, 5), coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    FElem x, y;
    for (int k = 0; k < 3; ++k) {
      FWord w;
      int l = len(rng);
      for (int p = 0; p < l; ++p) w.push_back(letter(rng));
      FAlgebra::add_to(x, w, RatFun(Rat(coef(rng))));
      w.clear();
      l = len(rng);
      for (int p = 0; p < l; ++p) w.push_back(letter(rng));
      FAlgebra::add_to(y, w, RatFun(Rat(coef(rng))));
    }
    FElem nx = F.normal_form(x), ny = F.normal_form(y);
    CHECK(F.normal_form(nx) == nx);
    CHECK(F.normal_form(F.add(x, y)) == F.add(nx, ny));
  }
}

TEST_CASE("weight components match iso-class counts for the A2 quiver") {
  FAlgebra F(cartan_preset("A2"), 6);
  for (int q : {2, 3}) {
    RepTable T(quiver_preset("A2"), q, 4);
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; a + b <= 4; ++b)
        CHECK(F.dim_weight({a, b}) == long(T.classes({int(a), int(b)}).size()));
  }
}

TEST_CASE("weight caps are enforced") {
  FAlgebra F(cartan_preset("A2"), 3);
  FElem big = {{FWord{0, 0, 1, 1}, RatFun::one()}};
  CHECK_THROWS_AS(F.normal_form(big), std::invalid_argument);
}
