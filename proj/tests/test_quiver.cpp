#include <doctest.h>

#include "qhall/config.hpp"
#include "qhall/quiver.hpp"

using namespace qhall;

namespace {
ValuedQuiver a2() { return quiver_preset("A2"); }
ValuedQuiver a3() { return quiver_preset("A3"); }
}  // namespace

TEST_CASE("valued quiver validation") {
  CHECK_THROWS(ValuedQuiver(2, {1, 1}, {{0, 0, 1}}));          // loop
  CHECK_THROWS(ValuedQuiver(3, {1, 1, 1}, {{0, 1, 1}}));       // disconnected
  CHECK_THROWS(ValuedQuiver(2, {1, 1}, {{0, 1, 1}, {1, 0, 1}}));  // 2-cycle
  CHECK(quiver_preset("B2").cartan().a(0, 1) == -2);
  CHECK(quiver_preset("G2").cartan().a(0, 1) == -3);
  CHECK(a2().simply_laced());
  CHECK_FALSE(quiver_preset("B2").simply_laced());
}

TEST_CASE("euler form on the A2 quiver") {
  ValuedQuiver Q = a2();
  CHECK(Q.euler({1, 0}, {0, 1}) == -1);
  CHECK(Q.euler({1, 0}, {1, 0}) == 1);
  CHECK(Q.euler({0, 1}, {1, 0}) == 0);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          CHECK(Q.sym({a, b}, {c, d}) ==
                Q.cartan().sym({long(a), long(b)}, {long(c), long(d)}));
}

TEST_CASE("classification of A2 representations over F_2") {
  RepTable T(a2(), 2, 6);
  CHECK(T.classes({1, 1}).size() == 2);
  CHECK(T.classes({2, 0}).size() == 1);
  CHECK(T.classes({2, 2}).size() == 3);  // ranks 0,1,2
  CHECK(T.info(T.simple(0)).aut == 1);   // |GL(1,2)| = 1
  CHECK(T.info(ClassId{{2, 0}, 0}).aut == 6);  // |GL(2,2)|
  // orbit-stabilizer census: sum over classes of |orbit| = q^(entries)
  mpz_class total = 0;
  for (const auto& c : T.classes({1, 1})) {
    mpz_class orbit = 1;  // |G| / aut
    mpz_class G = 1;
    G = 1 * 1;            // |GL(1,2)|^2
    orbit = G / c.aut;
    total += orbit;
  }
  CHECK(total == 2);  // two 1x1 matrices over F_2
}

TEST_CASE("A2 class counts follow matrix rank") {
  RepTable T(a2(), 3, 6);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4 && b <= 3; ++b)
      CHECK(long(T.classes({a, b}).size()) == std::min(a, b) + 1);
}

TEST_CASE("A3 class counts match Krull-Schmidt multiplicities") {
  RepTable T(a3(), 2, 5);
  // number of multisets of indecomposables (6 of them) with given dimvec
  auto count = [](int a, int b, int c) {
    long n = 0;
    for (int m1 = 0; m1 <= a; ++m1)          // e1
      for (int m2 = 0; m2 <= b; ++m2)        // e2
        for (int m3 = 0; m3 <= c; ++m3)      // e3
          for (int m4 = 0; m4 <= a; ++m4)    // (1,1,0)
            for (int m5 = 0; m5 <= c; ++m5)  // (0,1,1)
              for (int m6 = 0; m6 <= a; ++m6)  // (1,1,1)
                if (m1 + m4 + m6 == a && m2 + m4 + m5 + m6 == b && m3 + m5 + m6 == c) ++n;
    return n;
  };
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; a + b + c <= 5 && c <= 2; ++c)
        CHECK(long(T.classes({a, b, c}).size()) == count(a, b, c));
}

TEST_CASE("hom and ext dimensions on A2") {
  RepTable T(a2(), 2, 6);
  Rep s1 = T.info(T.simple(0)).canon, s2 = T.info(T.simple(1)).canon;
  const Rep& p = T.info(ClassId{{1, 1}, 1}).canon;  // the indecomposable (nonzero map)
  CHECK(T.hom_dim(s1, s2) == 0);
  CHECK(T.ext_dim(s1, s2) == 1);
  CHECK(T.ext_dim(s2, s1) == 0);
  CHECK(T.hom_dim(p, s1) == 1);
  CHECK(T.hom_dim(p, p) == 1);
  CHECK(T.hom_dim(s1, p) == 0);
}

TEST_CASE("euler form equals hom minus ext, exhaustively at small dimension") {
  for (auto Q : {a2(), a3()}) {
    RepTable T(Q, 2, 3);
    auto all = T.all_classes_up_to(3);
    for (const auto& x : all)
      for (const auto& y : all) {
        const Rep& vx = T.info(x).canon;
        const Rep& vy = T.info(y).canon;
        CHECK(Q.euler(x.dv, y.dv) == T.hom_dim(vx, vy) - T.ext_dim(vx, vy));
      }
  }
}

TEST_CASE("submodule counts on A2 over F_2") {
  RepTable T(a2(), 2, 6);
  ClassId s1 = T.simple(0), s2 = T.simple(1);
  ClassId p{{1, 1}, 1}, split{{1, 1}, 0};
  CHECK(T.hall_number(p, s1, s2) == 1);
  CHECK(T.hall_number(p, s2, s1) == 0);
  ClassId twoS1{{2, 0}, 0};
  CHECK(T.hall_number(twoS1, s1, s1) == 3);  // q + 1 lines
  CHECK(T.hall_number(split, s1, s2) == 1);
  CHECK(T.hall_number(split, s2, s1) == 1);
  // dimension mismatch gives zero, not an error
  CHECK(T.hall_number(p, s1, s1) == 0);
  // the split submodule always exists
  CHECK(T.hall_number(split, s2, s1) >= 1);
}

TEST_CASE("class ids are stable and parseable") {
  RepTable T(a2(), 2, 6);
  for (const auto& c : T.classes({2, 1})) {
    CHECK(ClassId::parse(c.id.str()) == c.id);
    CHECK(T.class_of(c.canon) == c.id);
  }
}
