#include "oracles.hpp"

#include <doctest.h>

using namespace hecke;

TEST_CASE("freudenthal examples") {
  // SL2 lattice, mu = alpha^vee: adjoint of the dual, dim 3
  auto sl2 = RootDatum::preset("SL", 2);
  auto wm = freudenthal(*sl2, {1});
  CHECK(wm.mults == std::map<Vec, Int>{{{0}, 1}, {{1}, 1}});
  CHECK(weyl_dim(*sl2, {1}) == 3);

  // GL3 standard: minuscule
  auto gl3 = RootDatum::preset("GL", 3);
  CHECK(freudenthal(*gl3, {1, 0, 0}).mults == std::map<Vec, Int>{{{1, 0, 0}, 1}});
  CHECK(weyl_dim(*gl3, {1, 0, 0}) == 3);
  CHECK(is_minuscule(*gl3, {1, 0, 0}));

  // A2: adjoint of the dual group, highest coroot, dim 8, m(0) = 2
  auto sl3 = RootDatum::preset("SL", 3);
  Vec theta_check = {1, 1};
  auto wm8 = freudenthal(*sl3, theta_check);
  CHECK(wm8.mults == std::map<Vec, Int>{{{0, 0}, 2}, {{1, 1}, 1}});
  CHECK(weyl_dim(*sl3, theta_check) == 8);
  CHECK_FALSE(is_minuscule(*sl3, theta_check));

  CHECK_THROWS_AS(freudenthal(*gl3, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("freudenthal agrees with the Kostant oracle") {
  // semisimple rank <= 2, <2rho, mu> <= 6
  for (auto rd : {RootDatum::preset("SL", 2), RootDatum::preset("PGL", 2),
                  RootDatum::preset("SL", 3), RootDatum::preset("PGL", 3),
                  RootDatum::preset("GL", 2), RootDatum::preset("GL", 3),
                  RootDatum::preset("Sp", 4), RootDatum::preset("GSp", 4)}) {
    for (const auto& mu : rd->dominant_coweights_upto(6)) {
      auto wm = freudenthal(*rd, mu);
      for (const auto& [la, m] : wm.mults)
        CHECK(m == oracles::kostant_multiplicity(*rd, mu, la));
      // and zero outside the support, on a few dominants below mu
      for (const auto& la : rd->dominant_coweights_upto(6)) {
        if (wm.mults.count(la)) continue;
        if (rd->dominance_leq(la, mu)) continue; // would be a weight
        CHECK(oracles::kostant_multiplicity(*rd, mu, la) == 0);
      }
    }
  }
}

TEST_CASE("dimension identity") {
  for (auto rd : {RootDatum::preset("GL", 3), RootDatum::preset("Sp", 4),
                  RootDatum::preset("GL", 4)}) {
    for (const auto& mu : rd->dominant_coweights_upto(4)) {
      auto wm = freudenthal(*rd, mu);
      Int total = 0;
      for (const auto& [la, m] : wm.mults)
        total += m * Int(rd->weyl_orbit(la).size());
      CHECK(total == weyl_dim(*rd, mu));
    }
  }
}

TEST_CASE("full weight multiset is W-stable") {
  auto sp4 = RootDatum::preset("Sp", 4);
  auto full = full_weight_multiset(*sp4, freudenthal(*sp4, {1, 1}));
  for (const auto& [v, m] : full)
    for (int i = 0; i < sp4->num_simple(); ++i) {
      Vec w = sp4->reflect_simple(i, v);
      CHECK(full.at(w) == m);
    }
}

TEST_CASE("branching to Levis") {
  auto gl2 = RootDatum::preset("GL", 2);
  CHECK(branch_to_levi(*gl2, {1, 0}, {0}) == std::map<Vec, Int>{{{1, 0}, 1}});
  CHECK(branch_to_levi(*gl2, {1, 0}, {}) ==
        std::map<Vec, Int>{{{1, 0}, 1}, {{0, 1}, 1}});

  // wedge-square of the standard of GL3 restricted to GL2 x GL1
  auto gl3 = RootDatum::preset("GL", 3);
  auto br = branch_to_levi(*gl3, {1, 1, 0}, {0});
  CHECK(br == std::map<Vec, Int>{{{1, 1, 0}, 1}, {{1, 0, 1}, 1}});

  // dimension bookkeeping: sum of m_W * dim_M(W) = dim_G(V)
  auto mdat = gl3->levi_datum({0});
  Int total = 0;
  for (const auto& [w, m] : br) total += m * weyl_dim(*mdat, w);
  CHECK(total == weyl_dim(*gl3, {1, 1, 0}));

  for (const auto& mu : gl3->dominant_coweights_upto(4))
    for (StandardLevi levi : {StandardLevi{}, StandardLevi{0}, StandardLevi{1}}) {
      auto md = gl3->levi_datum(levi);
      Int tot = 0;
      for (const auto& [w, m] : branch_to_levi(*gl3, mu, levi))
        tot += m * weyl_dim(*md, w);
      CHECK(tot == weyl_dim(*gl3, mu));
    }
}

TEST_CASE("parity and omega") {
  for (int n = 2; n <= 5; ++n) {
    auto gln = RootDatum::preset("GL", n);
    Vec e1(n, 0);
    e1[0] = 1;
    CHECK(parity(*gln, e1) == (n - 1) % 2);
  }
  auto gl2 = RootDatum::preset("GL", 2);
  CHECK(parity(*gl2, {1, 1}) == 0);
  auto sl2 = RootDatum::preset("SL", 2);
  CHECK(parity(*sl2, {1}) == 0); // <2rho, alpha^vee> = 2

  CHECK(omega_of_rep(*gl2, {1, 0}).label() == 1);
  CHECK(omega_of_rep(*sl2, {1}).is_trivial());
  auto gl3 = RootDatum::preset("GL", 3);
  CHECK(omega_of_rep(*gl3, {1, 1, 0}).label() == 2);

  // all weights of V_mu share mu's omega class and parity
  auto sp4 = RootDatum::preset("Sp", 4);
  for (const auto& mu : sp4->dominant_coweights_upto(6)) {
    for (const auto& [la, m] : freudenthal(*sp4, mu).mults) {
      CHECK(omega_of_rep(*sp4, la) == omega_of_rep(*sp4, mu));
      CHECK(parity(*sp4, la) == parity(*sp4, mu));
    }
  }
}
