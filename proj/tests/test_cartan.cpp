#include <doctest.h>

#include "qhall/cartan.hpp"

using namespace qhall;

TEST_CASE("preset validation and pairings") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2", "A3"}) {
    CartanDatum cd = cartan_preset(name);
    for (size_t i = 0; i < cd.rank(); ++i)
      for (size_t j = 0; j < cd.rank(); ++j)
        CHECK(cd.eps(i) * cd.a(i, j) == cd.eps(j) * cd.a(j, i));
  }
  CHECK_THROWS(CartanDatum({{2, -1}, {-2, 2}}, {1, 1}));  // not symmetrizable by these eps
  CHECK_THROWS(CartanDatum({{2, 1}, {1, 2}}, {1, 1}));    // positive off-diagonal
}

TEST_CASE("symmetric form on roots") {
  CartanDatum a2 = cartan_preset("A2");
  CHECK(a2.sym({1, 0}, {1, 0}) == 2);
  CHECK(a2.sym({1, 0}, {0, 1}) == -1);
  CartanDatum aa = cartan_preset("A1xA1");
  CHECK(aa.sym({1, 0}, {0, 1}) == 0);
  CartanDatum b2 = cartan_preset("B2");
  CHECK(b2.sym({1, 0}, {1, 0}) == 2);
  CHECK(b2.sym({0, 1}, {0, 1}) == 4);
  CHECK(b2.sym({1, 0}, {0, 1}) == -2);
}

TEST_CASE("simple reflections on weights") {
  CartanDatum a2 = cartan_preset("A2");
  Weight lam({1, 0});
  CHECK(a2.reflect(0, lam) == Weight({-1, 1}));
  Weight fix({0, 5});
  CHECK(a2.reflect(0, fix) == fix);
  // the first simple root as a weight reflects to its negative
  Weight a1 = a2.simple_root(0);
  CHECK(a2.reflect(0, a1) == a1.scaled(-1));
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    CartanDatum cd = cartan_preset(name);
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y) {
        Weight w({x, y});
        CHECK(cd.reflect(0, cd.reflect(0, w)) == w);
        CHECK(cd.reflect(1, cd.reflect(1, w)) == w);
        CHECK(cd.reflect(0, w).val[0] == -w.val[0]);
      }
  }
}

TEST_CASE("reflections preserve the symmetric form") {
  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    CartanDatum cd = cartan_preset(name);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
          for (long d = -3; d <= 3; ++d)
            for (size_t i = 0; i < 2; ++i) {
              IntVec x{a, b}, y{c, d};
              CHECK(cd.sym(cd.reflect_rootvec(i, x), cd.reflect_rootvec(i, y)) == cd.sym(x, y));
            }
  }
}

TEST_CASE("braid orders and the dihedral relation on weights") {
  CHECK(cartan_preset("A1xA1").braid_order(0, 1) == 2);
  CHECK(cartan_preset("A2").braid_order(0, 1) == 3);
  CHECK(cartan_preset("B2").braid_order(0, 1) == 4);
  CHECK(cartan_preset("G2").braid_order(0, 1) == 6);
  // rank-deficient matrix: the d_s coordinate keeps the roots independent
  CartanDatum wild({{2, -4}, {-1, 2}}, {1, 4}, {{0}, {1}});
  CHECK(wild.dim() == 3);
  CHECK(wild.braid_order(0, 1) == 0);  // infinite
  CHECK_THROWS(wild.braid_order(1, 1));

  for (const char* name : {"A1xA1", "A2", "B2", "G2"}) {
    CartanDatum cd = cartan_preset(name);
    long m = cd.braid_order(0, 1);
    // (s_0 s_1)^m fixes a basis of the weight lattice
    for (size_t k = 0; k < cd.dim(); ++k) {
      IntVec e(cd.dim(), 0);
      e[k] = 1;
      Weight w{e};
      Weight cur = w;
      for (long rep = 0; rep < m; ++rep) cur = cd.reflect(0, cd.reflect(1, cur));
      CHECK(cur == w);
    }
  }
}
