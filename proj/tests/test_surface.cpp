#include <doctest.h>

#include "commgroup/random.hpp"
#include "commgroup/surface.hpp"
#include "oracle.hpp"

using namespace commgroup;

TEST_CASE("surface relator") {
  CHECK(to_string(surface_relator(1)) == "x1^-1 x2^-1 x1 x2");
  CHECK(to_string(surface_relator(2)) == "x1^-1 x2^-1 x1 x2 x3^-1 x4^-1 x3 x4");
  for (int g = 1; g <= 4; ++g) {
    const AbelianVector ab = abelianize_vector(surface_relator(g));
    CHECK(std::all_of(ab.begin(), ab.end(), [](Exponent e) { return e == 0; }));
    CHECK(surface_relator(g).length() == static_cast<std::size_t>(4 * g));
  }
  CHECK_THROWS_AS(surface_relator(0), Error);
}

TEST_CASE("presentation tables") {
  const SurfacePresentation p(2);
  CHECK(p.rank() == 4);
  CHECK(to_string(p.rho()) == "x3^-1 x4^-1 x3 x4");
  CHECK(p.rotations().size() == 16);
  for (const auto& r : p.rotations()) {
    CHECK(r.size() == 8);
    CHECK(oracle::reduce(oracle::cat({r, r})).size() == 16);  // cyclically reduced
  }
  for (const auto& [lhs, rhs] : p.dehn_rules()) {
    CHECK(lhs.size() >= 5);
    CHECK(lhs.size() + rhs.size() == 8);
  }
}

TEST_CASE("cyclic reduction") {
  auto [core, conj] = cyclically_reduce(parse_word(2, "x1 x2 x1^-1"));
  CHECK(core == parse_word(2, "x2"));
  CHECK(conj == parse_word(2, "x1^-1"));
  std::tie(core, conj) = cyclically_reduce(Word(2));
  CHECK(core.empty());
  CHECK(conj.empty());
  std::tie(core, conj) = cyclically_reduce(parse_word(2, "x1 x2"));
  CHECK(core == parse_word(2, "x1 x2"));
  CHECK(conj.empty());

  Rng rng = make_stream(3, "cyclic");
  for (int c = 0; c < 200; ++c) {
    const Word w = random_word(rng, 3, 16);
    std::tie(core, conj) = cyclically_reduce(w);
    CHECK(conjugate(core, conj) == w);
    const auto l = core.letters();
    if (l.size() >= 2) CHECK(l.front() != -l.back());
  }
}

TEST_CASE("word problem examples") {
  const SurfacePresentation p(2);
  CHECK(is_trivial(p, p.relator()));
  CHECK_FALSE(is_trivial(p, parse_word(4, "x1")));
  CHECK(is_trivial(p, conjugate(p.relator(), parse_word(4, "x1 x3^-1"))));
  CHECK(surface_equal(p, parse_word(4, "x1 x2"), parse_word(4, "x1 x2")));
  CHECK(surface_equal(p, commutator(parse_word(4, "x2"), parse_word(4, "x1")), p.rho()));
  CHECK_FALSE(surface_equal(p, parse_word(4, "x1"), parse_word(4, "x2")));
  // Nontrivial elements of the commutator subgroup.
  CHECK_FALSE(is_trivial(p, commutator(parse_word(4, "x1"), parse_word(4, "x2"))));
  CHECK_FALSE(is_trivial(p, commutator(parse_word(4, "x1"), parse_word(4, "x3"))));
  CHECK_THROWS_AS(is_trivial(p, parse_word(3, "x1")), Error);

  const SurfacePresentation torus(1);
  CHECK(is_trivial(torus, commutator(parse_word(2, "x1 x2"), parse_word(2, "x2^3"))));
  CHECK_FALSE(is_trivial(torus, parse_word(2, "x1 x2 x1^-1")));
}

TEST_CASE("Dehn reduction against SL2 representations") {
  Rng rng = make_stream(5, "dehn-representations");
  for (int g = 2; g <= 3; ++g) {
    const SurfacePresentation p(g);
    for (int c = 0; c < 150; ++c) {
      // Relator products, conjugated and then perturbed by a random trivial
      // free-group insertion, must die; their images must be trivial too.
      Word w(p.rank());
      for (std::int64_t f = uniform(rng, 1, 5); f > 0; --f) {
        const Word u = random_word(rng, p.rank(), static_cast<std::size_t>(uniform(rng, 0, 6)));
        w.append(conjugate(uniform(rng, 0, 1) ? p.relator() : invert(p.relator()), u));
      }
      const auto rep = oracle::surface_representation(rng, g);
      REQUIRE(oracle::same(oracle::evaluate(w.letters(), rep), oracle::Mat2{}));
      CHECK(is_trivial(p, w));
      CHECK(dehn_reduce(p, w).empty());

      // Conjugation invariance.
      const Word v = random_word(rng, p.rank(), 14);
      const Word u = random_word(rng, p.rank(), 6);
      CHECK(is_trivial(p, v) == is_trivial(p, conjugate(v, u)));
      // A trivial verdict is never contradicted by a representation.
      if (is_trivial(p, v)) {
        CHECK(oracle::same(oracle::evaluate(v.letters(), rep), oracle::Mat2{}));
      }
      // Residues are equal to the input and shorter or equal.
      const Word residue = dehn_reduce(p, v);
      CHECK(residue.length() <= v.length());
      CHECK(oracle::same(oracle::evaluate(residue.letters(), rep), oracle::evaluate(v.letters(), rep)));
    }
  }
}

TEST_CASE("nonzero abelianization is never trivial") {
  Rng rng = make_stream(6, "dehn-nontrivial");
  for (int g = 1; g <= 3; ++g) {
    const SurfacePresentation p(g);
    for (int c = 0; c < 100; ++c) {
      Word v = random_word(rng, p.rank(), 20);
      const AbelianVector ab = abelianize_vector(v);
      if (std::all_of(ab.begin(), ab.end(), [](Exponent e) { return e == 0; })) v.append(1, 1);
      CHECK_FALSE(is_trivial(p, v));
    }
  }
}
