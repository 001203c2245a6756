#include <doctest.h>

#include <coxbp/bruhat.hpp>

#include <algorithm>
#include <numeric>

using namespace coxbp;

namespace {

Poly degrees_product(std::initializer_list<int> degs) {
  Poly p{1};
  for (int d : degs) p = poly_mul(p, q_integer(d));
  return p;
}

bool contains_pattern(const std::vector<int>& w, const std::vector<int>& pat) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(pat.size());
  std::vector<int> idx(k);
  // choose k positions increasingly
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + k, true);
  do {
    int c = 0;
    for (int i = 0; i < n; ++i)
      if (sel[i]) idx[c++] = i;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      for (int y = 0; y < k && ok; ++y)
        if ((pat[x] < pat[y]) != (w[idx[x]] < w[idx[y]])) ok = false;
    if (ok) return true;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return false;
}

} // namespace

TEST_CASE("Poincare polynomial of the longest element is the degree product") {
  struct Case {
    const char* tag;
    Poly expected;
  };
  const Case cases[] = {
      {"A1", degrees_product({2})},          {"A2", degrees_product({2, 3})},
      {"A3", degrees_product({2, 3, 4})},    {"A4", degrees_product({2, 3, 4, 5})},
      {"B2", degrees_product({2, 4})},       {"B3", degrees_product({2, 4, 6})},
      {"D4", degrees_product({2, 4, 4, 6})}, {"G2", degrees_product({2, 6})},
      {"H3", degrees_product({2, 6, 10})},   {"F4", degrees_product({2, 6, 8, 12})},
  };
  for (const auto& c : cases) {
    CAPTURE(c.tag);
    auto sys = CoxeterSystem::parse(c.tag);
    CHECK(poincare(longest_element(sys), 30) == c.expected);
  }
}

TEST_CASE("interval below 4231") {
  auto a = CoxeterSystem::build("A", 3);
  Interval iv = bruhat_interval(a.parse_element("4231"));
  CHECK(iv.size() == 20);
  CHECK(iv.poincare() == Poly{1, 3, 5, 6, 4, 1});
  CHECK_FALSE(is_rationally_smooth(a.parse_element("4231")));
  CHECK(is_rationally_smooth(a.parse_element("4321")));
}

TEST_CASE("covers of S3") {
  auto a = CoxeterSystem::build("A", 2);
  Interval iv = bruhat_interval(longest_element(a));
  CHECK(iv.covers.size() == 8);
  for (auto [u, v] : iv.covers) CHECK(bruhat_leq(iv.elements[u], iv.elements[v]));
}

TEST_CASE("covers agree with Bruhat order and length") {
  auto sys = CoxeterSystem::build("B", 3);
  Interval iv = bruhat_interval(longest_element(sys));
  std::size_t count = 0;
  for (int u = 0; u < iv.size(); ++u)
    for (int v = 0; v < iv.size(); ++v)
      if (iv.rank_of(v) == iv.rank_of(u) + 1 && bruhat_leq(iv.elements[u], iv.elements[v])) ++count;
  CHECK(count == iv.covers.size());
}

TEST_CASE("rational smoothness in type A matches 3412/4231 avoidance") {
  for (int n : {4, 5}) {
    auto a = CoxeterSystem::build("A", n - 1);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      bool smooth = !contains_pattern(p, {3, 4, 1, 2}) && !contains_pattern(p, {4, 2, 3, 1});
      CHECK(is_rationally_smooth(a.from_one_line(p)) == smooth);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("quotient interval in affine C2") {
  auto c = CoxeterSystem::build("affineC", 2);
  Element w = c.parse_element("srstrsr");
  auto d = parabolic_decompose(w, GenSet{0});
  CHECK(d.quotient.length() == 6);
  Interval iv = quotient_interval(d.quotient, GenSet{0});
  CHECK(iv.size() == 16);
  CHECK(iv.poincare() == Poly{1, 2, 3, 4, 3, 2, 1});
  CHECK(is_palindromic(poincare(w)));
  CHECK_THROWS_AS(quotient_interval(w, GenSet{0}), UsageError);
}

TEST_CASE("length cap") {
  auto sys = CoxeterSystem::build("A", 6);
  CHECK_THROWS_AS(bruhat_interval(longest_element(sys), {20, false}), ResourceError);
  CHECK(bruhat_interval(longest_element(sys), {21, false}).size() == 5040);
}

TEST_CASE("polynomial helpers") {
  CHECK(poly_to_string(Poly{1, 2, 0, 1}) == "1 + 2q + q^3");
  CHECK(is_palindromic(Poly{1, 2, 1}));
  CHECK_FALSE(is_palindromic(Poly{1, 2, 2}));
}
