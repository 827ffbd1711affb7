#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cbl/braid.hpp"
#include "cbl/homfly.hpp"
#include "doctest.h"
#include "support/homfly_oracle.hpp"

using namespace cbl;
using cbl::testing::homfly_oracle;

static BraidWord rand_word(std::mt19937& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> nd(2, max_strands);
  int n = nd(rng);
  std::uniform_int_distribution<int> ld(0, max_len);
  int len = ld(rng);
  BraidWord w;
  w.strands = n;
  std::uniform_int_distribution<int> gd(1, n - 1);
  std::uniform_int_distribution<int> sd(0, 1);
  for (int i = 0; i < len; ++i) w.letters.push_back(gd(rng) * (sd(rng) ? 1 : -1));
  return w;
}

TEST_CASE("golden values") {
  CHECK(render_poly(homfly_poly(parse_word(""))) == "(0,0):1");
  // Hopf link: v z + (v - v^3) z^-1
  CHECK(render_poly(homfly_poly(parse_word("1 1"))) == "(1,-1):1 (1,1):1 (3,-1):-1");
  // right trefoil: 2v^2 - v^4 + v^2 z^2
  CHECK(render_poly(homfly_poly(parse_word("1 1 1"))) == "(2,0):2 (2,2):1 (4,0):-1");
  // unknot on more strands
  CHECK(render_poly(homfly_poly(parse_word("1", 2))) == "(0,0):1");
  CHECK(render_poly(homfly_poly(parse_word("1 2"))) == "(0,0):1");
  // two-component unlink: delta
  BraidWord unlink;
  unlink.strands = 2;
  CHECK(render_poly(homfly_poly(unlink)) == "(-1,-1):1 (1,-1):-1");
}

TEST_CASE("oracle matches golden values") {
  CHECK(homfly_oracle(parse_word("1 1")) == homfly_poly(parse_word("1 1")));
  CHECK(homfly_oracle(parse_word("1 1 1")) == homfly_poly(parse_word("1 1 1")));
}

TEST_CASE("crossing cap") {
  BraidWord w;
  w.strands = 2;
  w.letters.assign(17, 1);
  CHECK_THROWS_AS(homfly_poly(w), resource_error);
  CHECK_NOTHROW(homfly_poly(w, 20));
}

TEST_CASE("main algorithm vs oracle on random words") {
  std::mt19937 rng(101);
  for (int t = 0; t < 500; ++t) {
    BraidWord w = rand_word(rng, 4, 8);
    CHECK(homfly_poly(w) == homfly_oracle(w));
  }
}

TEST_CASE("skein relation at every position") {
  std::mt19937 rng(202);
  for (int t = 0; t < 500; ++t) {
    BraidWord w = rand_word(rng, 4, 8);
    for (size_t p = 0; p < w.letters.size(); ++p) {
      BraidWord plus = w, minus = w, smooth = w;
      plus.letters[p] = std::abs(w.letters[p]);
      minus.letters[p] = -std::abs(w.letters[p]);
      smooth.letters.erase(smooth.letters.begin() + p);
      // v^-1 P(L+) - v P(L-) = z P(L0)
      LaurentPoly2 lhs = homfly_poly(plus).shifted(-1, 0) - homfly_poly(minus).shifted(1, 0);
      CHECK(lhs == homfly_poly(smooth).shifted(0, 1));
      if (t >= 20) break;  // full positional sweep only on the first few words
    }
  }
}

TEST_CASE("Markov and relation invariance") {
  std::mt19937 rng(303);
  for (int t = 0; t < 200; ++t) {
    BraidWord w = rand_word(rng, 4, 7);
    LaurentPoly2 p = homfly_poly(w);
    std::uniform_int_distribution<int> kd(0, (int)w.letters.size());
    CHECK(homfly_poly(cyclic_shift(w, kd(rng))) == p);
    std::uniform_int_distribution<int> gd(1, w.strands - 1);
    std::uniform_int_distribution<int> sd(0, 1);
    CHECK(homfly_poly(conjugate(w, gd(rng) * (sd(rng) ? 1 : -1))) == p);
    CHECK(homfly_poly(stabilize(w, 1)) == p);
    // braid relation / far commutation rewrites
    for (size_t q = 0; q + 1 < w.letters.size(); ++q) {
      int a = w.letters[q], b = w.letters[q + 1];
      if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
        BraidWord r = w;
        std::swap(r.letters[q], r.letters[q + 1]);
        CHECK(homfly_poly(r) == p);
        break;
      }
    }
  }
}

TEST_CASE("mirror symmetry P_mirror(v,z) = P(v^-1,-z)") {
  std::mt19937 rng(404);
  CHECK(homfly_poly(mirror(parse_word("1 1"))) == homfly_poly(parse_word("1 1")).vz_flip());
  CHECK(homfly_poly(mirror(parse_word("1 1 1"))) ==
        homfly_poly(parse_word("1 1 1")).vz_flip());
  for (int t = 0; t < 100; ++t) {
    BraidWord w = rand_word(rng, 4, 7);
    CHECK(homfly_poly(mirror(w)) == homfly_poly(w).vz_flip());
  }
}

TEST_CASE("split multiplicativity") {
  std::mt19937 rng(505);
  LaurentPoly2 delta = LaurentPoly2::mono(-1, -1, 1) - LaurentPoly2::mono(1, -1, 1);
  for (int t = 0; t < 50; ++t) {
    BraidWord a = rand_word(rng, 3, 5);
    BraidWord b = rand_word(rng, 3, 5);
    BraidWord join;
    join.strands = a.strands + b.strands;
    join.letters = a.letters;
    for (int l : b.letters)
      join.letters.push_back(l > 0 ? l + a.strands : l - a.strands);
    CHECK(homfly_poly(join) == delta * homfly_poly(a) * homfly_poly(b));
  }
}

TEST_CASE("mfw bounds") {
  CHECK(mfw_bounds(parse_word("1", 2)) == DegreeSpan{0, 2});
  CHECK(mfw_bounds(parse_word("1 1")) == DegreeSpan{1, 3});
  LaurentPoly2 hopf = homfly_poly(parse_word("1 1"));
  CHECK(hopf.min_v() == 1);
  CHECK(hopf.max_v() == 3);
  CHECK(mfw_bounds(parse_word("1 1 2 -1 -3 2 -3")) == DegreeSpan{-2, 4});

  std::mt19937 rng(606);
  for (int t = 0; t < 200; ++t) {
    BraidWord w = rand_word(rng, 4, 8);
    LaurentPoly2 p = homfly_poly(w);
    DegreeSpan s = mfw_bounds(w);
    REQUIRE(!p.is_zero());
    CHECK(p.min_v() >= s.min_v);
    CHECK(p.max_v() <= s.max_v);
  }
}

TEST_CASE("qp obstruction examples") {
  CHECK(qp_obstruction(parse_word("1 1 1"), -1) == Obstruction::inconclusive);
  CHECK(qp_obstruction(parse_word(""), 1) == Obstruction::inconclusive);
  // mirror of the 6_2 word; chi_s(6_2*) = -1
  BraidWord m62 = mirror(parse_word("1 1 1 -2 1 -2"));
  CHECK(qp_obstruction(m62, -1) == Obstruction::obstructed);
  CHECK(homfly_oracle(m62) == homfly_poly(m62));
  CHECK(homfly_poly(m62).min_v() < 2);
}
