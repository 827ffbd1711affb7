#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cbl/braid.hpp"
#include "cbl/qp.hpp"
#include "doctest.h"

using namespace cbl;

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

// a braid-relation or far-commutation rewrite at a random position, if any applies
static BraidWord rand_relation_rewrite(std::mt19937& rng, const BraidWord& w) {
  std::vector<BraidWord> outs;
  for (size_t p = 0; p + 1 < w.letters.size(); ++p) {
    int a = w.letters[p], b = w.letters[p + 1];
    if (std::abs(std::abs(a) - std::abs(b)) >= 2) {
      BraidWord r = w;
      std::swap(r.letters[p], r.letters[p + 1]);
      outs.push_back(r);
    }
    if (p + 2 < w.letters.size()) {
      int c = w.letters[p + 2];
      if (a == c && std::abs(std::abs(a) - std::abs(b)) == 1 && (a > 0) == (b > 0)) {
        BraidWord r = w;
        r.letters[p] = b;
        r.letters[p + 1] = a;
        r.letters[p + 2] = b;
        outs.push_back(r);
      }
    }
  }
  if (outs.empty()) return w;
  std::uniform_int_distribution<size_t> d(0, outs.size() - 1);
  return outs[d(rng)];
}

TEST_CASE("parse and render") {
  BraidWord w = parse_word("1 1 2 -1 -3 2 -3");
  CHECK(w.strands == 4);
  CHECK(w.letters.size() == 7);
  CHECK(render_word(w) == "1 1 2 -1 -3 2 -3");

  BraidWord e = parse_word("");
  CHECK(e.strands == 1);
  CHECK(e.letters.empty());

  BraidWord p = parse_word("5 -5", 7);
  CHECK(p.strands == 7);
  CHECK(p.letters == std::vector<int>{5, -5});

  CHECK(parse_word("1,2,\t-1").letters == std::vector<int>{1, 2, -1});

  CHECK_THROWS_AS(parse_word("1 0 2"), error);
  CHECK_THROWS_AS(parse_word("1 x"), error);
  CHECK_THROWS_AS(parse_word("3", 3), error);
  CHECK_THROWS_AS(parse_word("1 2a"), error);
}

TEST_CASE("parse-render round trip on random words") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    BraidWord w = rand_word(rng, 5, 10);
    BraidWord w2 = parse_word(render_word(w), w.strands);
    CHECK(w2 == w);
  }
}

TEST_CASE("fingerprint basics") {
  LinkFingerprint hopf = link_fingerprint(parse_word("1 1"));
  CHECK(hopf.components == 2);
  CHECK(hopf.linking_matrix[0][1] == 1);
  CHECK(hopf.writhe == 2);

  LinkFingerprint k61 = link_fingerprint(parse_word("1 1 2 -1 -3 2 -3"));
  CHECK(k61.components == 1);
  CHECK(k61.writhe == 1);

  LinkFingerprint l6a5 = link_fingerprint(parse_word("1 -2 1 1 -2 1"));
  CHECK(l6a5.components == 3);
  std::vector<int> pat = pairwise_linking(l6a5);
  std::vector<int> sgn;
  for (int v : pat) sgn.push_back(v > 0 ? 1 : v < 0 ? -1 : 0);
  // our lowest-strand order reads (+,-,+); renumbering components by the
  // recorded permutation (1 0 2) gives the published (+,+,-) pattern
  CHECK(sgn == std::vector<int>{1, -1, 1});
  std::vector<std::vector<int>>& m = l6a5.linking_matrix;
  std::vector<int> reordered = {m[1][0] > 0 ? 1 : -1, m[1][2] > 0 ? 1 : -1,
                                m[0][2] > 0 ? 1 : -1};
  CHECK(reordered == std::vector<int>{1, 1, -1});
}

TEST_CASE("component parity invariant") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    BraidWord w = rand_word(rng, 5, 9);
    int mu = link_fingerprint(w).components;
    CHECK(((mu - w.strands + (int)w.letters.size()) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("transforms") {
  BraidWord w = parse_word("1 1 1");
  CHECK(render_word(mirror(w)) == "-1 -1 -1");
  CHECK(mirror(mirror(w)) == w);
  CHECK(render_word(reverse(parse_word("1 2"))) == "2 1");
  CHECK(render_word(cyclic_shift(parse_word("1 2"), 1)) == "2 1");

  BraidWord st = stabilize(parse_word("1 1"), 1);
  CHECK(st.strands == 3);
  CHECK(render_word(st) == "1 1 2");
  CHECK(link_fingerprint(st) == link_fingerprint(parse_word("1 1 2")));
  BraidWord ds = destabilize(st);
  CHECK(ds == parse_word("1 1"));
  CHECK_THROWS_AS(destabilize(parse_word("1 2 2")), error);
  CHECK_THROWS_AS(destabilize(parse_word("1 -2")), error);

  BraidWord cj = conjugate(parse_word("1 1"), -1);
  CHECK(render_word(cj) == "-1 1 1 1");
}

TEST_CASE("fingerprint invariance under moves and relations") {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    BraidWord w = rand_word(rng, 5, 8);
    LinkFingerprint fp = link_fingerprint(w);
    std::uniform_int_distribution<int> kd(0, (int)w.letters.size());
    CHECK(fingerprint_equivalent(link_fingerprint(cyclic_shift(w, kd(rng))), fp));
    std::uniform_int_distribution<int> gd(1, w.strands - 1);
    std::uniform_int_distribution<int> sd(0, 1);
    CHECK(fingerprint_equivalent(
        link_fingerprint(conjugate(w, gd(rng) * (sd(rng) ? 1 : -1))), fp));
    LinkFingerprint fps = link_fingerprint(stabilize(w, 1));
    CHECK(fps.components == fp.components);
    CHECK(fps.linking_matrix == fp.linking_matrix);
    CHECK(link_fingerprint(rand_relation_rewrite(rng, w)) == fp);

    LinkFingerprint fpm = link_fingerprint(mirror(w));
    CHECK(fpm.writhe == -fp.writhe);
    for (int a = 0; a < fp.components; ++a)
      for (int b = 0; b < fp.components; ++b)
        CHECK(fpm.linking_matrix[a][b] == -fp.linking_matrix[a][b]);
  }
}

static void check_qp(const std::string& word, int budget, bool expect) {
  BraidWord w = parse_word(word);
  auto f = find_qp_factorization(w, budget);
  CHECK(f.has_value() == expect);
  if (f) {
    CHECK((int)f->factors.size() == w.exponent_sum());
    for (const BandFactor& b : f->factors) {
      CHECK(b.sign == 1);
      CHECK((int)b.conjugator.size() <= budget);
    }
    CHECK(free_reduce(f->flatten()) == free_reduce(w.letters));
  }
}

TEST_CASE("qp factorization examples") {
  check_qp("1 2 1 2 1 2", 0, true);
  check_qp("-1 -1 2 1 1 2", 2, true);
  check_qp("1 -2", 2, false);
  check_qp("1 1 2 -1 2 1 1", 4, true);   // L6a1(1)
  check_qp("1 -2 1 2 2 1 1", 4, true);   // L6a2(0)*
  check_qp("2 -1 2 1 1 3 3", 4, true);   // L4a1(0)*#2_1
  check_qp("1 1 2 2 3 2 2 -3", 4, true); // Y_+++
}

TEST_CASE("qp factorization: hard catalog rows") {
  // L6a3(1): exhaustive search at conjugator budget 4 (and a meet-in-the-
  // middle search at budget 5) finds no factorization of this particular
  // word at the free-group level; the search is sound but not complete, so
  // this pins the documented behavior rather than a positive result.
  check_qp("2 -3 2 -1 2 -3 2 3 3 1", 4, false);
  check_qp("-1 -2 3 2 1 2 1 3 -2 3 2", 4, true);    // L6a5(0,0)*
}
