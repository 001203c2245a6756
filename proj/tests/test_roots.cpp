#include <doctest.h>

#include <coxbp/roots.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace coxbp;

TEST_CASE("positive root counts") {
  const std::map<std::string, int> expected = {{"A3", 6}, {"A4", 10}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"D5", 20},
                                               {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}, {"B9", 81}};
  for (auto [tag, n] : expected) {
    CAPTURE(tag);
    CHECK(RootSystem::of(CoxeterSystem::parse(tag)).size() == n);
  }
  CHECK_THROWS_AS(RootSystem::of(CoxeterSystem::parse("H3")), UnsupportedError);
}

TEST_CASE("B3 roots in ambient coordinates") {
  const auto& rs = RootSystem::of(CoxeterSystem::parse("B3"));
  std::set<std::vector<int>> got;
  for (int i = 0; i < rs.size(); ++i) got.insert(rs.root(i).ambient);
  std::set<std::vector<int>> want = {{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1},
                                     {0, 1, 1},  {1, 0, 0}, {0, 1, 0},  {0, 0, 1}};
  CHECK(got == want);
}

TEST_CASE("inversion set of 231") {
  auto a = CoxeterSystem::build("A", 2);
  const auto& rs = RootSystem::of(a);
  auto inv = rs.inversion_set(a.parse_element("231"));
  std::set<std::vector<int>> got;
  for (int i = 0; i < rs.size(); ++i)
    if (inv[i]) got.insert(rs.root(i).coords);
  CHECK(got == std::set<std::vector<int>>{{0, 1}, {1, 1}});
}

TEST_CASE("inversion sets have size l(w) and are exactly the biclosed sets") {
  for (const char* tag : {"A3", "B3", "G2"}) {
    CAPTURE(tag);
    auto sys = CoxeterSystem::parse(tag);
    const auto& rs = RootSystem::of(sys);
    auto all = enumerate_group(sys);
    std::set<std::vector<bool>> inv_sets;
    for (const Element& w : all) {
      auto inv = rs.inversion_set(w);
      CHECK(std::count(inv.begin(), inv.end(), true) == w.length());
      inv_sets.insert(inv);
    }
    CHECK(inv_sets.size() == all.size());
    std::size_t biclosed = 0;
    for (unsigned mask = 0; mask < (1u << rs.size()); ++mask) {
      std::vector<bool> s(rs.size());
      for (int i = 0; i < rs.size(); ++i) s[i] = mask >> i & 1;
      if (rs.is_biclosed(s)) {
        ++biclosed;
        CHECK(inv_sets.count(s) == 1);
      }
    }
    CHECK(biclosed == all.size());
  }
}

TEST_CASE("root poset and parabolic roots") {
  const auto& rs = RootSystem::of(CoxeterSystem::parse("A3"));
  CHECK(rs.phi_plus(GenSet{0, 1}).size() == 3);
  CHECK(rs.phi_plus(GenSet{0, 2}).size() == 2);
  int highest = rs.size() - 1;
  for (int i = 0; i < rs.size(); ++i) CHECK(rs.poset_leq(i, highest));
}

TEST_CASE("J-star coefficient multisets and arm bound") {
  const std::set<std::multiset<int>> allowed = {{1}, {2}, {3}, {1, 1}, {1, 2}, {1, 1, 1}};
  for (const char* tag : {"A4", "B4", "C4", "D5", "F4", "G2", "E6"}) {
    CAPTURE(tag);
    auto sys = CoxeterSystem::parse(tag);
    const auto& rs = RootSystem::of(sys);
    for (std::uint32_t b = 0; b < (1u << sys.rank()); ++b) {
      for (const JStar& st : rs.jstars(GenSet(b), 4, 4)) {
        std::multiset<int> cs;
        for (auto [c, g] : st.arms) cs.insert(c);
        CHECK(allowed.count(cs) == 1);
      }
    }
  }
}

TEST_CASE("type A J-stars are head plus one or two arms") {
  // In type A the heads e_i - e_j extend by e_j - e_k or e_h - e_i only.
  auto sys = CoxeterSystem::parse("A4");
  const auto& rs = RootSystem::of(sys);
  for (const JStar& st : rs.jstars(GenSet{1, 2})) {
    CHECK(st.arms.size() <= 2);
    for (auto [c, g] : st.arms) CHECK(c == 1);
  }
}

TEST_CASE("root lemmas on small systems") {
  for (const char* tag : {"A4", "B4", "C4", "D5", "F4", "G2", "E6"}) {
    CAPTURE(tag);
    const auto& rs = RootSystem::of(CoxeterSystem::parse(tag));
    auto r1 = verify_simple_head_lemma(rs);
    CHECK(r1.ok());
    CHECK(r1.checked > 0);
    auto r2 = verify_union_lemma(rs);
    CHECK(r2.ok());
    if (!r2.ok()) MESSAGE(r2.violations.front());
  }
}

TEST_CASE("serial and parallel lemma sweeps agree") {
  const auto& rs = RootSystem::of(CoxeterSystem::parse("D5"));
  auto a = verify_union_lemma(rs, Exec::serial);
  auto b = verify_union_lemma(rs, Exec::parallel);
  CHECK(a.checked == b.checked);
  CHECK(a.violations == b.violations);
}
