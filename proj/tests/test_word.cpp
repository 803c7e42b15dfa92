#include <doctest.h>

#include <algorithm>

#include "commgroup/random.hpp"
#include "commgroup/word.hpp"
#include "oracle.hpp"

using namespace commgroup;

namespace {

Word w(int n, const char* text) { return parse_word(n, text); }

}  // namespace

TEST_CASE("reduce cancels and merges") {
  CHECK(w(2, "x1 x1^-1").empty());
  CHECK(w(2, "x1 x2^2 x2^-2 x1") == Word::generator(2, 1, 2));
  CHECK(to_string(w(2, "x1^-1 x2^-1 x1 x2")) == "x1^-1 x2^-1 x1 x2");
  CHECK(reduce(2, std::vector<Letter>{1, 2, -2, -1}).empty());
  CHECK_THROWS_AS(reduce(2, std::vector<Letter>{3}), Error);
}

TEST_CASE("reduction is confluent under random strategies") {
  Rng rng = make_stream(11, "confluence");
  for (int c = 0; c < 1000; ++c) {
    std::vector<Letter> raw;
    const auto len = uniform(rng, 0, 30);
    for (std::int64_t t = 0; t < len; ++t) {
      const int i = static_cast<int>(uniform(rng, 1, 3));
      raw.push_back(uniform(rng, 0, 1) ? i : -i);
    }
    // Cancel random adjacent pairs until none is left.
    std::vector<Letter> cur = raw;
    while (true) {
      std::vector<std::size_t> spots;
      for (std::size_t t = 0; t + 1 < cur.size(); ++t) {
        if (cur[t] == -cur[t + 1]) spots.push_back(t);
      }
      if (spots.empty()) break;
      const std::size_t s = spots[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(spots.size()) - 1))];
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(s), cur.begin() + static_cast<std::ptrdiff_t>(s) + 2);
    }
    const Word r = reduce(3, raw);
    REQUIRE(r.letters() == cur);
    CHECK(reduce(3, r.letters()) == r);
  }
}

TEST_CASE("group operations") {
  CHECK(multiply(w(3, "x1"), w(3, "x1^-1")).empty());
  CHECK(to_string(invert(w(3, "x1 x2"))) == "x2^-1 x1^-1");
  CHECK(multiply(w(3, "x1 x2"), w(3, "x2^-1 x3")) == w(3, "x1 x3"));
  CHECK(conjugate(w(3, "x1"), Word(3)) == w(3, "x1"));
  CHECK(conjugate(w(3, "x1"), w(3, "x2")) == w(3, "x2^-1 x1 x2"));
  CHECK(commutator(w(2, "x1"), w(2, "x2")) == w(2, "x1^-1 x2^-1 x1 x2"));
  CHECK(commutator(w(2, "x1"), w(2, "x1")).empty());
  CHECK(invert(commutator(w(2, "x1"), w(2, "x2"))) == commutator(w(2, "x2"), w(2, "x1")));
  CHECK(power(w(2, "x1 x2"), -2) == w(2, "x2^-1 x1^-1 x2^-1 x1^-1"));
  CHECK(power(w(2, "x1 x2"), 0).empty());
  CHECK_THROWS_AS(multiply(w(2, "x1"), w(3, "x1")), Error);
}

TEST_CASE("group laws against the letter oracle") {
  Rng rng = make_stream(12, "group-laws");
  for (int c = 0; c < 300; ++c) {
    const Word x = random_word(rng, 4, 12);
    const Word y = random_word(rng, 4, 12);
    const Word z = random_word(rng, 4, 12);
    CHECK(multiply(x, y).letters() == oracle::cat({x.letters(), y.letters()}));
    CHECK(invert(multiply(x, y)) == multiply(invert(y), invert(x)));
    CHECK(conjugate(conjugate(x, y), z) == conjugate(x, multiply(y, z)));
    CHECK(commutator(x, y).letters() ==
          oracle::cat({oracle::inv(x.letters()), oracle::inv(y.letters()), x.letters(), y.letters()}));
    const AbelianVector a = abelianize_vector(multiply(x, y));
    const AbelianVector ax = abelianize_vector(x);
    const AbelianVector ay = abelianize_vector(y);
    const AbelianVector ai = abelianize_vector(invert(x));
    for (std::size_t t = 0; t < 4; ++t) {
      CHECK(a[t] == ax[t] + ay[t]);
      CHECK(ai[t] == -ax[t]);
    }
    CHECK(retract_delete(multiply(x, y), {2}) == multiply(retract_delete(x, {2}), retract_delete(y, {2})));
  }
}

TEST_CASE("abelianization and retraction examples") {
  CHECK(abelianize_vector(commutator(w(2, "x1"), w(2, "x2"))) == AbelianVector{0, 0});
  CHECK(abelianize_vector(w(2, "x1 x2^2 x1 x2^-2 x1^-2")) == AbelianVector{0, 0});
  CHECK(abelianize_vector(w(2, "x1^3 x2^-1")) == AbelianVector{3, -1});
  CHECK(retract_delete(w(3, "x1 x2 x1^-1"), {1}) == w(3, "x2"));
  CHECK(retract_delete(w(3, "x1^-1 x2^-1 x1 x2"), {1}).empty());
  CHECK(retract_delete(w(3, "x2 x3 x2^-1"), {1}) == w(3, "x2 x3 x2^-1"));
  const std::vector<Exponent> v{1, -2, 0, 3};
  CHECK(to_string(sorted_word(4, v)) == "x1 x2^-2 x4^3");
  CHECK(to_string(sorted_word(4, v, 2)) == "x2^-2 x4^3");
  CHECK(embed(w(2, "x1 x2^-1"), 4, 2) == w(4, "x3 x4^-1"));
}

TEST_CASE("word grammar") {
  CHECK(w(3, "").empty());
  CHECK(w(3, "   ").empty());
  CHECK(to_string(w(3, "x3^-2   x1")) == "x3^-2 x1");
  CHECK(to_string(w(3, "x1^+2")) == "x1^2");
  CHECK(parse_word(3, to_string(w(3, "x2 x3^5 x1^-1"))) == w(3, "x2 x3^5 x1^-1"));

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { parse_word(3, "x4"); }) == ErrorCode::Alphabet);
  CHECK(code_of([] { parse_word(3, "x0"); }) == ErrorCode::Alphabet);
  CHECK(code_of([] { parse_word(3, "x1^0"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_word(3, "y1"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_word(3, "x1^"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_word(3, "x1x2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_word(3, "x1^99999999999999999999"); }) == ErrorCode::Parse);
}

TEST_CASE("exponent overflow is reported") {
  const Word big = Word::generator(1, 1, INT64_MAX);
  CHECK_THROWS_AS(multiply(big, Word::generator(1, 1, 1)), Error);
  CHECK_THROWS_AS(power(Word::generator(1, 1, 1 << 30), Exponent(1) << 40), Error);
  CHECK(multiply(big, Word::generator(1, 1, -1)) == Word::generator(1, 1, INT64_MAX - 1));
}

TEST_CASE("box enumeration") {
  int count = 0;
  std::vector<Exponent> first;
  for_each_box_point(3, 1, [&](const std::vector<Exponent>& v) {
    if (count++ == 0) first = v;
  });
  CHECK(count == 27);
  CHECK(first == std::vector<Exponent>{-1, -1, -1});
  count = 0;
  for_each_box_point(2, 0, [&](const std::vector<Exponent>&) { ++count; });
  CHECK(count == 1);
}
