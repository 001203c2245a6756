#include <doctest.h>

#include <coxbp/bruhat.hpp>
#include <coxbp/errors.hpp>
#include <coxbp/schubert.hpp>

#include <algorithm>
#include <random>

using namespace coxbp;

namespace {

Perm P(const char* s) {
  Perm out;
  for (; *s; ++s) out.push_back(*s - '0');
  return out;
}

MPoly mono(std::vector<int> e, long long c = 1) {
  MPoly p;
  p.add(make_monomial(e), c);
  return p;
}

// Monk: S_{s_r} S_u = sum of S_{u t_ab}, a <= r < b, over length-raising covers.
std::map<Perm, long long> monk(const Perm& u, int r) {
  Perm x = u;
  while (static_cast<int>(x.size()) < std::max<int>(u.size(), r) + 1) x.push_back(static_cast<int>(x.size()) + 1);
  std::map<Perm, long long> out;
  for (int a = 0; a < r; ++a)
    for (int b = r; b < static_cast<int>(x.size()); ++b) {
      if (x[a] > x[b]) continue;
      bool cover = true;
      for (int c = a + 1; c < b; ++c) cover &= !(x[a] < x[c] && x[c] < x[b]);
      if (!cover) continue;
      Perm y = x;
      std::swap(y[a], y[b]);
      out[trim(y)] += 1;
    }
  return out;
}

Perm simple(int r) {
  Perm s;
  for (int i = 1; i <= r + 1; ++i) s.push_back(i);
  std::swap(s[r - 1], s[r]);
  return s;
}

} // namespace

TEST_CASE("Schubert polynomials of small permutations") {
  CHECK(schubert_polynomial(P("213")) == mono({1}));
  CHECK(schubert_polynomial(P("132")) == mono({1}) + mono({0, 1}));
  CHECK(schubert_polynomial(P("321")) == mono({2, 1}));
  CHECK(schubert_polynomial(P("4321")) == mono({3, 2, 1}));
  CHECK(schubert_polynomial(P("123")) == mono({}));
  CHECK(schubert_polynomial(P("1243")).to_string() == "x3 + x2 + x1");
  CHECK_THROWS_AS(schubert_polynomial({1, 1}), UsageError);
  CHECK_THROWS_AS(schubert_polynomial(P("123456798")), ResourceError);
}

TEST_CASE("leading monomial is the code monomial") {
  Perm p{1, 2, 3, 4, 5};
  do {
    const auto s = schubert_polynomial(p);
    CHECK(s.homogeneous());
    CHECK(s.degree() == perm_length(p));
    std::vector<int> code;
    for (std::size_t i = 0; i < p.size(); ++i) {
      int c = 0;
      for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
      code.push_back(c);
    }
    CHECK(s.terms.rbegin()->first == make_monomial(code));
    for (const auto& [m, c] : s.terms) CHECK(c > 0);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("expansion reproduces Monk's rule") {
  Perm u{1, 2, 3, 4, 5};
  do {
    for (int r = 1; r <= 4; ++r) {
      const auto got = schubert_expand(schubert_polynomial(simple(r)) * schubert_polynomial(u));
      CHECK(got == monk(u, r));
    }
  } while (std::next_permutation(u.begin(), u.end()));
  // (x1 + x2)^2 leaves S_3.
  const auto sq = schubert_expand(schubert_polynomial(P("132")) * schubert_polynomial(P("132")));
  CHECK(sq.at(P("1423")) == 1);
}

TEST_CASE("structure constants") {
  CHECK(structure_constant(P("213"), P("132"), P("231")) == 1);
  CHECK(structure_constant(P("213"), P("213"), P("231")) == 0);
  CHECK(structure_constant(P("213"), P("213"), P("312")) == 1);
  CHECK(structure_constant(P("213"), P("213"), P("321")) == 0);

  // Duality below w0, symmetry, and agreement with the expansion on S_4.
  std::vector<Perm> s4;
  Perm p{1, 2, 3, 4};
  do s4.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Perm w0 = P("4321");
  for (const auto& u : s4)
    for (const auto& v : s4) {
      const long long c = structure_constant(u, v, w0);
      CHECK(c == (perm_mul(w0, u) == v ? 1 : 0));
      const auto exp = schubert_expand(schubert_polynomial(u) * schubert_polynomial(v));
      for (const auto& w : s4) {
        const long long cw = structure_constant(u, v, w);
        CHECK(cw == structure_constant(v, u, w));
        CHECK(cw >= 0);
        const auto it = exp.find(trim(w));
        CHECK(cw == (it == exp.end() ? 0 : it->second));
      }
    }
}

TEST_CASE("structure matrix for 231") {
  const auto sys = CoxeterSystem::build("A", 2);
  const auto w = sys.from_one_line({2, 3, 1});
  const auto m = structure_matrix(w, 1);
  REQUIRE(m.rows.size() == 2);
  CHECK(m.rows[0] == sys.element({2}));
  CHECK(m.rows[1] == sys.element({1}));
  CHECK(m.cols[0] == sys.element({1}));
  CHECK(m.cols[1] == sys.element({2}));
  CHECK(m.entries == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
  CHECK(m.upper_unitriangular());
  const auto phi = canonical_bijection(m);
  CHECK(phi == std::vector<int>{0, 1});
  CHECK(m.cols[phi[0]] == sys.element({1}));
  CHECK(m.cols[phi[1]] == sys.element({2}));
}

TEST_CASE("structure matrix for w0 is a permutation matrix") {
  const auto sys = CoxeterSystem::build("A", 3);
  const auto w0 = longest_element(sys);
  for (int k = 0; k <= w0.length(); ++k) {
    const auto m = structure_matrix(w0, k);
    CHECK(m.upper_unitriangular());
    const auto phi = canonical_bijection(m);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      CHECK(m.cols[phi[i]] == w0 * m.rows[i]);
      long long row_sum = 0;
      for (auto c : m.entries[i]) row_sum += c;
      CHECK(row_sum == 1);
    }
  }
  CHECK_THROWS_AS(structure_matrix(sys.from_one_line({3, 4, 1, 2}), 2), UsageError);
}

TEST_CASE("unitriangular for every smooth element of S5") {
  const auto sys = CoxeterSystem::build("A", 4);
  int matrices = 0;
  for (const auto& w : enumerate_group(sys)) {
    if (!is_rationally_smooth(w)) continue;
    for (int k = 0; k <= w.length(); ++k)
      for (unsigned seed : {0u, 1u, 7u}) {
        const auto m = structure_matrix(w, k, {seed, Exec::serial});
        REQUIRE_MESSAGE(m.upper_unitriangular(), (w.to_string() + " k=" + std::to_string(k)));
        CHECK(count_transversals(m.entries) == 1);
        ++matrices;
      }
  }
  CHECK(matrices > 0);
}

TEST_CASE("transversal counting") {
  CHECK(count_transversals({{1, 1}, {1, 1}}) == 2);
  CHECK(count_transversals({{1, 0}, {1, 0}}) == 0);
  CHECK(count_transversals({{2, 5, 1}, {0, 1, 3}, {0, 0, 1}}) == 1);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a[i][j] = j == i ? 1 : rng() % 3;
    CHECK(count_transversals(a) == 1);
  }
}
