#include <doctest.h>

#include "commgroup/homology.hpp"
#include "commgroup/module.hpp"

using namespace commgroup;

namespace {

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return out;
}

HomologyResult h(std::size_t betti, std::vector<long> torsion = {}) {
  HomologyResult out;
  out.betti = betti;
  for (long t : torsion) out.torsion.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("small complexes") {
  const ChainComplex point({1}, {});
  CHECK(homology_at(point, 0) == h(1));
  const ChainComplex two({1, 1}, {IntegerMatrix::from_rows({{2}})});
  CHECK(homology_at(two, 0) == h(0, {2}));
  CHECK(homology_at(two, 1) == h(0));

  // Cellular chains of RP^3.
  const ChainComplex rp3({1, 1, 1, 1}, {IntegerMatrix::from_rows({{0}}), IntegerMatrix::from_rows({{2}}),
                                        IntegerMatrix::from_rows({{0}})});
  CHECK(homology_at(rp3, 0) == h(1));
  CHECK(homology_at(rp3, 1) == h(0, {2}));
  CHECK(homology_at(rp3, 2) == h(0));
  CHECK(homology_at(rp3, 3) == h(1));

  // Klein bottle: one vertex, edges a b, face a b a^-1 b.
  const ChainComplex klein({1, 2, 1}, {IntegerMatrix(1, 2), IntegerMatrix::from_rows({{0}, {2}})});
  CHECK(homology_at(klein, 1) == h(1, {2}));
  CHECK(homology_at(klein, 2) == h(0));

  // Torsion chain 2 | 6 in one degree.
  const ChainComplex chain({2, 2}, {IntegerMatrix::from_rows({{2, 0}, {0, 6}})});
  CHECK(homology_at(chain, 0) == h(0, {2, 6}));

  CHECK_THROWS_AS(homology_at(rp3, 4), Error);
  CHECK_THROWS_AS(homology_at(rp3, -1), Error);
  CHECK_THROWS_AS(ChainComplex({1, 2}, {IntegerMatrix(2, 1)}), Error);
  CHECK_THROWS_AS(ChainComplex({1, 1}, {}), Error);
  CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntegerMatrix::from_rows({{1}}), IntegerMatrix::from_rows({{1}})}),
                  std::logic_error);
}

TEST_CASE("Koszul differentials") {
  CHECK(wedge_basis(4, 2) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(wedge_basis(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(wedge_basis(3, 4).empty());
  for (int n = 2; n <= 5; ++n) {
    for (int p = 1; p <= n; ++p) {
      const LaurentMatrix d = koszul_differential(n, p);
      CHECK(d.rows == choose(n, p - 1));
      CHECK(d.cols == choose(n, p));
      CHECK(d.augment().is_zero());
      if (p >= 2) CHECK((koszul_differential(n, p - 1) * d).is_zero());
    }
  }
  const LaurentMatrix d = koszul_differential(3, 2);
  // e_{12} -> (t1 - 1) e_2 - (t2 - 1) e_1.
  CHECK(d.at(1, 0) == LaurentPoly::t_minus_one(3, 1));
  CHECK(d.at(0, 0) == -LaurentPoly::t_minus_one(3, 2));
}

TEST_CASE("free case table") {
  CHECK(homology_at(free_case_complex(2, 1), 0) == h(1));
  CHECK(homology_at(free_case_complex(2, 1), 1) == h(0));
  for (int k = 0; k <= 2; ++k) CHECK(homology_at(free_case_complex(3, 2), k) == h(choose(3, k + 2)));
  CHECK(homology_at(free_case_complex(4, 2), 0) == h(6));
  CHECK(homology_at(free_case_complex(4, 2), 1) == h(4));
  CHECK(homology_at(free_case_complex(4, 2), 2) == h(1));
  CHECK(homology_at(free_case_complex(5, 1), 1) == h(10));
  for (int n = 2; n <= 5; ++n) {
    const ChainComplex c = free_case_complex(n, 4);
    for (int k = 0; k <= 4; ++k) CHECK(homology_at(c, k) == h(choose(n, k + 2)));
  }
  CHECK_THROWS_AS(free_case_complex(1, 0), Error);
  CHECK_THROWS_AS(free_case_complex(3, -1), Error);
}

TEST_CASE("surface case table") {
  CHECK(symplectic_form(2) == std::vector<Integer>{1, 0, 0, 0, 0, 1});
  for (int k = 0; k <= 4; ++k) CHECK(homology_at(surface_case_complex(1, 4), k) == h(0));
  const std::vector<std::size_t> g2 = {5, 4, 1, 0, 0};
  const ChainComplex c2 = surface_case_complex(2, 4);
  for (int k = 0; k <= 4; ++k) CHECK(homology_at(c2, k) == h(g2[static_cast<std::size_t>(k)]));
  const ChainComplex c3 = surface_case_complex(3, 4);
  CHECK(homology_at(c3, 0) == h(14));
  CHECK(homology_at(c3, 1) == h(20));
  for (int k = 2; k <= 4; ++k) CHECK(homology_at(c3, k) == h(choose(6, k + 2)));
  CHECK(c3.dim(1) == choose(6, 3) + 1);
  CHECK_THROWS_AS(surface_case_complex(0, 1), Error);
}

TEST_CASE("boundary injectivity on boxes") {
  CHECK(injectivity_truncation_check(1, 0));
  CHECK(injectivity_truncation_check(1, 1));
  CHECK(injectivity_truncation_check(2, 0));
  CHECK(injectivity_truncation_check(2, 1));
  CHECK_THROWS_AS(injectivity_truncation_check(1, -1), Error);
}
