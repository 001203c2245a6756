#include <doctest.h>

#include <coxbp/bp.hpp>
#include <coxbp/errors.hpp>
#include <coxbp/lehmer.hpp>

#include <algorithm>
#include <map>
#include <numeric>

using namespace coxbp;

namespace {

std::vector<int> digits_of(const char* s) {
  std::vector<int> out;
  for (; *s; ++s) out.push_back(*s - '0');
  return out;
}

GenSet tail(int n, int j) {
  GenSet J;
  for (int s = j; s <= n - 1; ++s) J = J.with(s - 1);
  return J;
}

} // namespace

TEST_CASE("classical code round trip") {
  CHECK(classical_code({3, 2, 1}) == std::vector<int>{2, 1, 0});
  CHECK(classical_code({1, 2, 3, 4}) == std::vector<int>{0, 0, 0, 0});
  std::vector<int> p{1, 2, 3, 4, 5, 6};
  do {
    CHECK(decode_classical(classical_code(p)) == p);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK_THROWS_AS(decode_classical({3, 0, 0}), UsageError);
}

TEST_CASE("classical code is order preserving up to S6") {
  for (int n = 2; n <= 6; ++n) {
    const auto sys = CoxeterSystem::build("A", n - 1);
    const auto code = classical_lehmer_code(sys);
    CHECK(code.chains.front() == n);
    CHECK(code.chains.back() == 2);
    const auto check = verify_code(code, bruhat_interval(longest_element(sys)));
    CHECK_MESSAGE(check.ok, check.reason);
  }
}

TEST_CASE("verify_code rejects a duplicated image") {
  const auto sys = CoxeterSystem::build("A", 3);
  auto code = classical_lehmer_code(sys);
  code.images[5] = code.images[4];
  CHECK_FALSE(verify_code(code, bruhat_interval(longest_element(sys))).ok);
}

TEST_CASE("quotient code for 52134 with J = {s4}") {
  const auto sys = CoxeterSystem::build("A", 4);
  const auto w = sys.from_one_line(digits_of("52134"));
  const GenSet J = GenSet::single(3);
  const auto code = construct_quotient_code(w, J);
  CHECK(code.chains == std::vector<int>{3, 2, 3});
  const std::map<std::string, std::string> figure{
      {"12345", "000"}, {"12435", "100"}, {"13245", "010"}, {"21345", "001"}, {"12534", "200"},
      {"14235", "110"}, {"21435", "101"}, {"23145", "002"}, {"31245", "011"}, {"15234", "210"},
      {"21534", "201"}, {"24135", "102"}, {"32145", "012"}, {"41235", "111"}, {"25134", "202"},
      {"42135", "112"}, {"51234", "211"}, {"52134", "212"}};
  REQUIRE(code.size() == figure.size());
  for (const auto& [oneline, tuple] : figure)
    CHECK_MESSAGE(code.at(digits_of(tuple.c_str())) == sys.from_one_line(digits_of(oneline.c_str())), oneline);
}

TEST_CASE("quotient codes for every admissible pair in S5") {
  const auto sys = CoxeterSystem::build("A", 4);
  const auto all = enumerate_group(sys);
  int built = 0, rejected = 0;
  for (int j = 1; j <= 5; ++j) {
    const GenSet J = tail(5, j);
    REQUIRE(tail_start(sys, J) == j);
    for (const auto& w : all) {
      if (!in_right_quotient(w, J)) continue;
      if (is_J_rationally_smooth(w, J)) {
        const auto code = construct_quotient_code(w, J);
        CHECK(verify_code(code, quotient_interval(w, J)).ok);
        ++built;
      } else {
        CHECK_THROWS_AS(construct_quotient_code(w, J), UsageError);
        ++rejected;
      }
    }
  }
  CHECK(built > 0);
  CHECK(rejected > 0);
  const auto w0 = longest_element(sys);
  CHECK(construct_quotient_code(w0, GenSet{}).chains == std::vector<int>{5, 4, 3, 2});
}

TEST_CASE("quotient code rejects bad input") {
  const auto sys = CoxeterSystem::build("A", 3);
  GenSet J = GenSet::single(0).with(2);
  CHECK_FALSE(tail_start(sys, J).has_value());
  CHECK_THROWS_AS(construct_quotient_code(sys.identity(), J), UsageError);
  CHECK_THROWS_AS(construct_quotient_code(longest_element(sys), GenSet::single(2)), UsageError);
  const auto b = CoxeterSystem::build("B", 2);
  CHECK_THROWS_AS(construct_quotient_code(b.identity(), GenSet{}), UsageError);
}

TEST_CASE("BP product map") {
  const auto a2 = CoxeterSystem::build("A", 2);
  const auto pm = bp_product_map(longest_element(a2), GenSet::single(0));
  CHECK(pm.quotient.size() == 3);
  CHECK(pm.parabolic.size() == 2);
  CHECK(pm.bijective);
  CHECK(pm.order_preserving);

  const auto a3 = CoxeterSystem::build("A", 3);
  const auto w = a3.from_one_line({4, 2, 3, 1});
  const auto whole = bp_product_map(w, GenSet::all(3));
  CHECK(whole.quotient.size() == 1);
  CHECK(whole.bijective);
  const auto singular = a3.from_one_line({3, 4, 1, 2});
  const GenSet not_bp = GenSet::single(0).with(1);
  REQUIRE_FALSE(is_bp(singular, not_bp));
  CHECK_THROWS_AS(bp_product_map(singular, not_bp), UsageError);

  for (const auto& x : enumerate_group(a3))
    for (GenSet J : bp_family(x).members) {
      const auto m = bp_product_map(x, J);
      CHECK(m.bijective);
      CHECK(m.order_preserving);
    }
}

TEST_CASE("composite codes through the product map") {
  const auto sys = CoxeterSystem::build("A", 3);
  int composed = 0;
  for (const auto& w : enumerate_group(sys)) {
    if (!is_rationally_smooth(w)) continue;
    for (GenSet J : bp_family(w).members) {
      const auto pm = bp_product_map(w, J);
      const auto q = search_code(pm.quotient, 5.0);
      const auto p = search_code(pm.parabolic, 5.0);
      if (!q.code || !p.code) continue;
      const auto check = verify_code(compose_codes(*q.code, *p.code), pm.full);
      CHECK_MESSAGE(check.ok, (w.to_string() + " " + J.to_string() + ": " + check.reason));
      ++composed;
    }
  }
  CHECK(composed > 50);
}

TEST_CASE("candidate chain multisets") {
  const auto b2 = CoxeterSystem::build("B", 2);
  const auto iv = bruhat_interval(longest_element(b2));
  CHECK(iv.rank_sizes() == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(candidate_chain_multisets(iv) == std::vector<std::vector<int>>{{2, 4}});
  const auto a3 = CoxeterSystem::build("A", 3);
  CHECK(candidate_chain_multisets(bruhat_interval(a3.from_one_line({3, 4, 1, 2}))).empty());
}

TEST_CASE("search finds codes for degrees of w0") {
  const auto b2 = CoxeterSystem::build("B", 2);
  const auto rb = search_code(bruhat_interval(longest_element(b2)), 5.0);
  REQUIRE(rb.status == SearchStatus::found);
  CHECK(rb.code->chains == std::vector<int>{2, 4});

  const auto h3 = CoxeterSystem::build("H", 3);
  const auto iv = bruhat_interval(longest_element(h3));
  const auto rh = search_code(iv, 30.0);
  REQUIRE(rh.status == SearchStatus::found);
  CHECK(rh.code->chains == std::vector<int>{2, 6, 10});
  CHECK(verify_code(*rh.code, iv).ok);
}

TEST_CASE("search on smooth S5 and B3") {
  for (const char* tag : {"A4", "B3"}) {
    const auto sys = CoxeterSystem::parse(tag);
    int smooth = 0;
    for (const auto& w : enumerate_group(sys)) {
      if (!is_rationally_smooth(w)) continue;
      ++smooth;
      const auto iv = bruhat_interval(w);
      const auto r = search_code(iv, 10.0, Exec::parallel);
      REQUIRE_MESSAGE(r.status == SearchStatus::found, (std::string(tag) + " " + w.to_string()));
      CHECK(verify_code(*r.code, iv).ok);
    }
    CHECK(smooth > 0);
  }
}

TEST_CASE("search certifies nonexistence for a singular interval") {
  const auto a3 = CoxeterSystem::build("A", 3);
  const auto r = search_code(bruhat_interval(a3.from_one_line({3, 4, 1, 2})), 5.0);
  CHECK(r.status == SearchStatus::none);
  CHECK_FALSE(r.code.has_value());
}
