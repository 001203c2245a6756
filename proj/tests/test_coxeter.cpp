#include <doctest.h>

#include <coxbp/coxeter.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace coxbp;

namespace {

// Independent permutation oracle: inversion count.
int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

} // namespace

TEST_CASE("group orders") {
  CHECK(enumerate_group(CoxeterSystem::build("A", 2)).size() == 6);
  CHECK(enumerate_group(CoxeterSystem::build("A", 4)).size() == 120);
  CHECK(enumerate_group(CoxeterSystem::build("B", 3)).size() == 48);
  CHECK(enumerate_group(CoxeterSystem::build("C", 3)).size() == 48);
  CHECK(enumerate_group(CoxeterSystem::build("D", 4)).size() == 192);
  CHECK(enumerate_group(CoxeterSystem::build("G", 2)).size() == 12);
  CHECK(enumerate_group(CoxeterSystem::build("F", 4)).size() == 1152);
  CHECK(enumerate_group(CoxeterSystem::build("H", 3)).size() == 120);
  CHECK(enumerate_group(CoxeterSystem::build("I", 5)).size() == 10);
  CHECK(enumerate_group(CoxeterSystem::build("I", 9)).size() == 18);
  CHECK(enumerate_group(CoxeterSystem::build("E", 6)).size() == 51840);
}

TEST_CASE("H4 order") { CHECK(enumerate_group(CoxeterSystem::build("H", 4)).size() == 14400); }

TEST_CASE("longest element lengths") {
  CHECK(longest_element(CoxeterSystem::build("A", 3)).length() == 6);
  CHECK(longest_element(CoxeterSystem::build("B", 3)).length() == 9);
  CHECK(longest_element(CoxeterSystem::build("D", 4)).length() == 12);
  CHECK(longest_element(CoxeterSystem::build("H", 3)).length() == 15);
  CHECK(longest_element(CoxeterSystem::build("H", 4)).length() == 60);
  CHECK(longest_element(CoxeterSystem::build("E", 8)).length() == 120);
  CHECK(longest_element(CoxeterSystem::build("I", 11)).length() == 11);
  CHECK_THROWS_AS(longest_element(CoxeterSystem::build("affineC", 2)), UnsupportedError);
}

TEST_CASE("finiteness") {
  CHECK(CoxeterSystem::build("E", 8).is_finite());
  CHECK_FALSE(CoxeterSystem::build("affineC", 2).is_finite());
  auto c2 = CoxeterSystem::build("affineC", 2);
  CHECK(c2.parabolic_is_finite(GenSet{0, 1}));
  CHECK(c2.parabolic_is_finite(GenSet{0, 2}));
  CHECK_FALSE(c2.parabolic_is_finite(GenSet{0, 1, 2}));
}

TEST_CASE("type A one-line agrees with inversion count") {
  auto a = CoxeterSystem::build("A", 5);
  std::vector<int> p(6);
  std::iota(p.begin(), p.end(), 1);
  do {
    Element w = a.from_one_line(p);
    CHECK(w.length() == inversions(p));
    CHECK(a.to_one_line(w) == p);
    for (int i = 0; i < 5; ++i) CHECK(w.right_descents().contains(i) == (p[i] > p[i + 1]));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("signed one-line round trip") {
  for (const char* tag : {"B3", "C3", "D4"}) {
    auto sys = CoxeterSystem::parse(tag);
    for (const Element& w : enumerate_group(sys)) CHECK(sys.from_one_line(sys.to_one_line(w)) == w);
  }
}

TEST_CASE("normal form is the least reduced word") {
  auto a = CoxeterSystem::build("A", 2);
  CHECK(a.element({2, 1, 2}).word_one_based() == std::vector<int>{1, 2, 1});
  CHECK(a.element({1, 1}).is_identity());
  auto sys = CoxeterSystem::build("B", 3);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int k = 0; k < 12; ++k) w.push_back(static_cast<Gen>(rng() % 3));
    Element e = sys.element(w);
    // reducing the normal form is idempotent and descents match lengths
    CHECK(sys.element(e.word()).word() == e.word());
    for (int s = 0; s < 3; ++s) {
      CHECK(e.right_descents().contains(s) == (e.right_mul(s).length() < e.length()));
      CHECK(e.left_descents().contains(s) == (e.left_mul(s).length() < e.length()));
    }
  }
}

TEST_CASE("parabolic decomposition in type A") {
  auto a = CoxeterSystem::build("A", 7);
  Element w = a.parse_element("65178432");
  GenSet J = a.all().without(2);
  auto d = parabolic_decompose(w, J);
  CHECK(a.to_one_line(d.quotient) == std::vector<int>{1, 5, 6, 2, 3, 4, 7, 8});
  CHECK(d.quotient * d.parabolic == w);
  CHECK(d.quotient.length() + d.parabolic.length() == w.length());
  CHECK(in_right_quotient(d.quotient, J));
  CHECK(d.parabolic.support().subset_of(J));
  auto l = left_parabolic_decompose(w, J);
  CHECK(l.parabolic * l.quotient == w);
  CHECK(in_left_quotient(l.quotient, J));
}

TEST_CASE("affine C2 element") {
  auto c = CoxeterSystem::build("affineC", 2);
  Element w = c.parse_element("srstrsr");
  CHECK(w.length() == 7);
  CHECK(w.right_descents() == GenSet{0});
  CHECK(c.element({1, 3}) == c.element({3, 1}));
}

TEST_CASE("bruhat order against subword oracle") {
  auto sys = CoxeterSystem::build("A", 3);
  auto all = enumerate_group(sys);
  Element w = sys.parse_element("4231");
  // u <= w iff u is a subword product of a fixed reduced word of w
  std::vector<Element> below;
  const Word& rw = w.word();
  for (unsigned mask = 0; mask < (1u << rw.size()); ++mask) {
    Word sub;
    for (std::size_t i = 0; i < rw.size(); ++i)
      if (mask >> i & 1) sub.push_back(rw[i]);
    below.push_back(sys.element(sub));
  }
  for (const Element& u : all) {
    bool oracle = std::find(below.begin(), below.end(), u) != below.end();
    CHECK(bruhat_leq(u, w) == oracle);
  }
}

TEST_CASE("dihedral matches geometric") {
  auto geo = CoxeterSystem::build("I", 6);
  auto sym = CoxeterSystem::from_matrix({{1, 6}, {6, 1}}, "I2(6)");
  auto big = CoxeterSystem::build("I", 8);
  CHECK(enumerate_group(big).size() == 16);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Word w;
    for (int k = 0; k < 9; ++k) w.push_back(static_cast<Gen>(rng() % 2));
    CHECK(geo.element(w).word() == sym.element(w).word());
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(CoxeterSystem::build("Q", 3), UsageError);
  CHECK_THROWS_AS(CoxeterSystem::build("D", 2), UsageError);
  auto a = CoxeterSystem::build("A", 2);
  auto b = CoxeterSystem::build("B", 2);
  CHECK_THROWS_AS(a.identity() * b.identity(), UsageError);
  CHECK_THROWS_AS(a.parse_element("1134"), UsageError);
  CHECK_THROWS_AS(a.element({4}), UsageError);
}
