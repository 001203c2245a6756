#include <coxbp/checks.hpp>

#include <coxbp/errors.hpp>
#include <coxbp/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace coxbp {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
  const CheckContext& ctx;
  std::vector<std::string> notes{};
  Json data = Json::object();
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (failures <= 20) notes.push_back("FAILED: " + what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Perm digits(const std::string& s) {
  Perm p;
  for (char c : s) p.push_back(c - '0');
  return p;
}

std::vector<Element> group(const char* tag) { return enumerate_group(CoxeterSystem::parse(tag)); }

// ---------------------------------------------------------------- criterion 1

void c2_counterexample(Run& r) {
  const auto t0 = Clock::now();
  const auto sys = CoxeterSystem::build("affineC", 2);
  const Element w = sys.parse_element("srstrsr");
  const GenSet R = GenSet::single(0), RS{0, 1}, RT{0, 2}, ST{1, 2};
  r.expect(w.length() == 7, "length of srstrsr is 7");
  r.expect(w.right_descents() == R, "right descent set is {r}");

  struct Case {
    GenSet J;
    const char* quotient;
    const char* parabolic;
  };
  for (const Case& c : {Case{RS, "srst", "rsr"}, Case{RT, "srstrs", "r"}, Case{ST, "srstrsr", "e"}}) {
    const auto d = parabolic_decompose(w, c.J);
    r.expect(d.quotient == sys.parse_element(c.quotient) && d.parabolic == sys.parse_element(c.parabolic),
             "decomposition at " + c.J.to_string() + " is " + c.quotient + " . " + c.parabolic);
    r.expect(!is_bp(w, c.J), c.J.to_string() + " is not BP");
    r.expect(!is_bp_poincare(w, c.J), c.J.to_string() + " fails the Poincare test");
  }
  const auto dr = parabolic_decompose(w, R);
  const Poly pq = poincare_quotient(dr.quotient, R);
  r.expect(pq == Poly{1, 2, 3, 4, 3, 2, 1}, "P^{r}(w^{r}) = 1+2q+3q^2+4q^3+3q^4+2q^5+q^6, got " + poly_to_string(pq));
  r.expect(is_bp(w, R) && is_bp_poincare(w, R), "{r} is BP");
  const Poly p = poincare(w);
  r.expect(is_palindromic(p), "P(w) is palindromic");
  r.expect(!grassmannian_bp_exists(w).has_value(), "no Grassmannian BP decomposition");
  r.expect(check_lattice(bp_family(w)), "BP(w) is a lattice");
  const double secs = since(t0);
  r.expect(secs < 5.0, "runtime under 5 s");
  r.data = {{"w", to_json(w)}, {"poincare", p}, {"poincare_quotient_r", pq}, {"bp_family", to_json(bp_family(w))}};
}

// ---------------------------------------------------------------- criterion 2, 3

const char* const kSmallGroups[] = {"A3", "A4", "B3", "C3", "D4", "G2"};

void jstar_equivalence(Run& r) {
  for (const char* tag : kSmallGroups) {
    const auto sys = CoxeterSystem::parse(tag);
    const auto all = enumerate_group(sys);
    const auto tally = compare_bp_tests(all, &RootSystem::of(sys), r.ctx.exec);
    r.expect(tally.disagreements == 0, std::string(tag) + ": " + std::to_string(tally.disagreements) + " disagreements");
    for (const auto& e : tally.examples) r.note(std::string(tag) + " example: " + e);
    r.data[tag] = {{"cases", tally.cases}, {"disagreements", tally.disagreements}};
  }
}

void lattice(Run& r) {
  for (const char* tag : kSmallGroups) {
    const auto all = group(tag);
    const auto fams = bp_families(all, r.ctx.exec);
    long long bad = 0;
    for (const auto& f : fams) bad += !check_lattice(f);
    r.expect(bad == 0, std::string(tag) + ": " + std::to_string(bad) + " families not closed under union/intersection");
    r.data[tag] = {{"elements", all.size()}, {"failures", bad}};
  }
}

void rank3_lattice(Run& r) {
  const std::vector<CoxeterSystem> systems{
      CoxeterSystem::build("affineC", 2),
      CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, "affineA2"),
      CoxeterSystem::from_matrix({{1, 6, 2}, {6, 1, 3}, {2, 3, 1}}, "affineG2")};
  for (const auto& sys : systems) {
    const auto ws = elements_up_to_length(sys, 12);
    const auto fams = bp_families(ws, r.ctx.exec);
    long long bad = 0;
    for (const auto& f : fams) bad += !check_lattice(f);
    r.expect(!sys.is_finite(), sys.name() + " is infinite");
    r.expect(bad == 0, sys.name() + ": " + std::to_string(bad) + " families not closed");
    r.data[sys.name()] = {{"elements", ws.size()}, {"failures", bad}};
  }
}

// ---------------------------------------------------------------- criterion 4

std::vector<GenSet> one_based(std::initializer_list<std::initializer_list<int>> xs) {
  std::vector<GenSet> out;
  for (auto x : xs) {
    GenSet s;
    for (int g : x) s = s.with(g - 1);
    out.push_back(s);
  }
  return out;
}

void bp_posets(Run& r) {
  const auto a3 = CoxeterSystem::build("A", 3);
  const auto p4231 = bp_poset(a3.parse_element("4231"));
  r.expect(p4231.blocks == one_based({{1}, {2}, {3}}), "4231: blocks {1},{2},{3}");
  r.expect(p4231.covers == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}}, "4231: 1 < 2 > 3");
  const auto p3412 = bp_poset(a3.parse_element("3412"));
  r.expect(p3412.blocks == one_based({{1, 3}, {2}}), "3412: blocks {1,3},{2}");
  r.expect(p3412.covers == std::vector<std::pair<int, int>>{{1, 0}}, "3412: {2} < {1,3}");
  r.expect(typeA_bp_poset(digits("4231")) == p4231 && typeA_bp_poset(digits("3412")) == p3412,
           "fast path matches on 4231 and 3412");

  const auto a7 = CoxeterSystem::build("A", 7);
  const Element w = a7.parse_element("65178432");
  const auto p = bp_poset(w);
  r.expect(p.singleton_blocks() && p.blocks.size() == 7, "65178432: seven singleton blocks");
  auto covers = p.covers;
  std::sort(covers.begin(), covers.end());
  r.expect(covers == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {3, 2}, {4, 3}, {5, 3}, {6, 3}},
           "65178432: 1,2,4 below 3 and 5,6,7 below 4");
  const auto factors = linear_extension_factorization(w, {2, 0, 3, 5, 1, 6, 4});
  const char* expect[] = {"15623478", "31245678", "12374568", "12347856", "13245678", "12345687", "12346578"};
  r.expect(factors.size() == 7, "seven factors");
  Json fj = Json::array();
  for (std::size_t i = 0; i < factors.size() && i < 7; ++i) {
    r.expect(a7.to_one_line(factors[i]) == digits(expect[i]), "factor " + std::to_string(i + 1) + " is " + expect[i]);
    fj.push_back(to_json(factors[i]));
  }
  r.data = {{"4231", to_json(p4231)}, {"3412", to_json(p3412)}, {"65178432", to_json(p)}, {"factors", fj}};
}

// ---------------------------------------------------------------- criterion 5

void typeA_fast_path(Run& r) {
  const auto a5 = CoxeterSystem::build("A", 5);
  const auto s6 = enumerate_group(a5);
  std::atomic<long long> bad{0};
  for_each_index(s6.size(), r.ctx.exec, [&](std::size_t i) {
    if (!(typeA_bp_poset(s6[i]) == bp_poset(s6[i]))) ++bad;
  });
  r.expect(bad == 0, "S6: " + std::to_string(bad.load()) + " mismatches");

  const auto a7 = CoxeterSystem::build("A", 7);
  std::mt19937 rng(r.ctx.seed);
  std::vector<Perm> samples(1000, Perm(8));
  for (auto& p : samples) {
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
  }
  std::atomic<long long> bad8{0};
  for_each_index(samples.size(), r.ctx.exec, [&](std::size_t i) {
    if (!(typeA_bp_poset(samples[i]) == bp_poset(a7.from_one_line(samples[i])))) ++bad8;
  });
  r.expect(bad8 == 0, "random S8: " + std::to_string(bad8.load()) + " mismatches");
  r.data = {{"S6", s6.size()}, {"random_S8", samples.size()}, {"seed", r.ctx.seed}};
}

void typeA_speedup(Run& r) {
  const int n = 12, samples = 20;
  const auto sys = CoxeterSystem::build("A", n - 1);
  std::mt19937 rng(r.ctx.seed);
  double naive = 0, fast = 0, worst_fast = 0;
  Perm p(n);
  for (int i = 0; i < samples; ++i) {
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const Element w = sys.from_one_line(p);
    auto t0 = Clock::now();
    const auto slow = bp_poset(w);
    naive += since(t0);
    t0 = Clock::now();
    const auto quick = typeA_bp_poset(p);
    const double f = since(t0);
    fast += f;
    worst_fast = std::max(worst_fast, f);
    r.expect(slow == quick, "sample " + std::to_string(i) + " agrees");
  }
  const double speedup = naive / std::max(fast, 1e-9);
  r.expect(speedup >= 10, "fast path at least 10x faster");
  r.expect(worst_fast < 1.0, "fast path under 1 s per element");
  r.note("n=12, " + std::to_string(samples) + " samples: naive " + std::to_string(naive / samples) + " s, fast " +
         std::to_string(fast / samples) + " s per element, speedup " + std::to_string(speedup));
  r.data = {{"n", n}, {"samples", samples}, {"naive_mean_s", naive / samples}, {"fast_mean_s", fast / samples},
            {"speedup", speedup}};
}

// ---------------------------------------------------------------- criterion 6

void degrees(Run& r) {
  const std::vector<std::pair<const char*, std::vector<int>>> table{
      {"A1", {2}},       {"A2", {2, 3}},    {"A3", {2, 3, 4}}, {"A4", {2, 3, 4, 5}},
      {"B2", {2, 4}},    {"B3", {2, 4, 6}}, {"D4", {2, 4, 4, 6}}, {"G2", {2, 6}}};
  for (const auto& [tag, ds] : table) {
    const auto sys = CoxeterSystem::parse(tag);
    Poly want{1};
    for (int d : ds) want = poly_mul(want, q_integer(d));
    const Poly got = poincare(longest_element(sys));
    r.expect(got == want, std::string(tag) + ": " + poly_to_string(got));
    r.data[tag] = got;
  }
}

// ---------------------------------------------------------------- criterion 7

void lemmas_for(Run& r, const std::vector<const char*>& tags) {
  for (const char* tag : tags) {
    const auto& rs = RootSystem::of(CoxeterSystem::parse(tag));
    for (const auto& rep : {verify_simple_head_lemma(rs, r.ctx.exec), verify_union_lemma(rs, r.ctx.exec)}) {
      r.expect(rep.ok(), std::string(tag) + " " + rep.lemma + ": " + std::to_string(rep.violations.size()) + " violations");
      r.data[std::string(tag) + " " + rep.lemma] = to_json(rep);
    }
  }
}

void root_lemmas(Run& r) { lemmas_for(r, {"A4", "B4", "C4", "D5", "F4", "G2"}); }
void e6_lemmas(Run& r) { lemmas_for(r, {"E6"}); }

// ---------------------------------------------------------------- criterion 8

void lehmer(Run& r) {
  const auto a4 = CoxeterSystem::build("A", 4);
  const auto fig = construct_quotient_code(a4.from_one_line(digits("52134")), GenSet::single(3));
  const std::map<std::string, std::string> table{
      {"12345", "000"}, {"12435", "100"}, {"13245", "010"}, {"21345", "001"}, {"12534", "200"},
      {"14235", "110"}, {"21435", "101"}, {"23145", "002"}, {"31245", "011"}, {"15234", "210"},
      {"21534", "201"}, {"24135", "102"}, {"32145", "012"}, {"41235", "111"}, {"25134", "202"},
      {"42135", "112"}, {"51234", "211"}, {"52134", "212"}};
  r.expect(fig.size() == table.size(), "18 entries");
  for (const auto& [oneline, tuple] : table)
    r.expect(fig.size() == table.size() && fig.at(digits(tuple)) == a4.from_one_line(digits(oneline)),
             tuple + " -> " + oneline);
  r.data["figure"] = to_json(fig);

  const auto s5 = enumerate_group(a4);
  long long built = 0;
  for (int j = 1; j <= 5; ++j) {
    GenSet J;
    for (int s = j; s <= 4; ++s) J = J.with(s - 1);
    for (const auto& w : s5) {
      if (!in_right_quotient(w, J) || !is_J_rationally_smooth(w, J)) continue;
      try {
        const auto code = construct_quotient_code(w, J);
        r.expect(verify_code(code, quotient_interval(w, J)).ok, "quotient code " + w.to_string() + " " + J.to_string());
        ++built;
      } catch (const Error& e) {
        r.expect(false, "quotient code " + w.to_string() + " " + J.to_string() + ": " + e.what());
      }
    }
  }
  r.data["quotient_codes_built"] = built;

  for (const char* tag : {"A4", "B3"}) {
    const auto all = group(tag);
    std::vector<Element> smooth;
    for (const auto& w : all)
      if (is_rationally_smooth(w)) smooth.push_back(w);
    std::atomic<long long> missing{0};
    for_each_index(smooth.size(), r.ctx.exec, [&](std::size_t i) {
      const auto iv = bruhat_interval(smooth[i]);
      const auto res = search_code(iv, 30.0);
      if (res.status != SearchStatus::found || !verify_code(*res.code, iv).ok) ++missing;
    });
    r.expect(missing == 0, std::string(tag) + ": " + std::to_string(missing.load()) + " smooth elements without a code");
    r.data[tag] = {{"rationally_smooth", smooth.size()}, {"without_code", missing.load()}};
  }

  const auto h3 = CoxeterSystem::build("H", 3);
  const auto iv = bruhat_interval(longest_element(h3));
  const auto res = search_code(iv, 60.0, r.ctx.exec);
  r.expect(res.status == SearchStatus::found && res.code->chains == std::vector<int>{2, 6, 10} &&
               verify_code(*res.code, iv).ok,
           "[e,w0(H3)] has a code with chains (2,6,10)");
  r.data["H3"] = {{"status", to_string(res.status)}, {"chains", res.code ? Json(res.code->chains) : Json(nullptr)}};
}

void w0_no_code(Run& r, const char* tag, double budget) {
  const auto sys = CoxeterSystem::parse(tag);
  const auto w0 = longest_element(sys);
  const auto iv = bruhat_interval(w0, {w0.length(), true});
  const auto res = search_code(iv, budget, r.ctx.exec);
  r.expect(res.status == SearchStatus::none, std::string("[e,w0(") + tag + ")] certified without a code, got " +
                                                 to_string(res.status));
  r.note(std::string(tag) + ": " + std::to_string(res.nodes) + " nodes in " + std::to_string(res.seconds) + " s");
  r.data = to_json(res);
}

void f4_lehmer(Run& r) { w0_no_code(r, "F4", 600); }
void h4_lehmer(Run& r) { w0_no_code(r, "H4", 600); }

// ---------------------------------------------------------------- criterion 9

std::map<Perm, long long> monk(const Perm& u, int rpos) {
  Perm x = u;
  while (static_cast<int>(x.size()) < std::max<int>(u.size(), rpos) + 1) x.push_back(static_cast<int>(x.size()) + 1);
  std::map<Perm, long long> out;
  for (int a = 0; a < rpos; ++a)
    for (int b = rpos; b < static_cast<int>(x.size()); ++b) {
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

void schubert_triangularity(Run& r) {
  // Hand examples against Monk's rule: S_{s1} S_{s2} and S_{s1} S_{s1}.
  const auto m12 = monk(digits("132"), 1);
  const auto m11 = monk(digits("213"), 1);
  auto at = [](const std::map<Perm, long long>& m, const Perm& p) {
    auto it = m.find(trim(p));
    return it == m.end() ? 0LL : it->second;
  };
  r.expect(structure_constant(digits("213"), digits("132"), digits("231")) == 1 && at(m12, digits("231")) == 1,
           "c_{s1,s2}^{231} = 1");
  r.expect(structure_constant(digits("213"), digits("213"), digits("231")) == 0 && at(m11, digits("231")) == 0,
           "c_{s1,s1}^{231} = 0");
  for (const Perm& u : {digits("213"), digits("132")})
    for (const Perm& v : {digits("123"), digits("213"), digits("132"), digits("231"), digits("312")}) {
      const auto prod = schubert_expand(schubert_polynomial(u) * schubert_polynomial(v));
      const int rpos = u == digits("213") ? 1 : 2;
      r.expect(prod == monk(v, rpos), "Monk's rule for the product with a simple reflection");
    }

  const auto a2 = CoxeterSystem::build("A", 2);
  const auto w231 = structure_matrix(a2.from_one_line({2, 3, 1}), 1);
  r.expect(w231.rows == std::vector<Element>{a2.element({2}), a2.element({1})} &&
               w231.cols == std::vector<Element>{a2.element({1}), a2.element({2})} &&
               w231.entries == std::vector<std::vector<long long>>{{1, 1}, {0, 1}},
           "w=231, k=1: rows (s2,s1), cols (s1,s2), [[1,1],[0,1]]");
  const auto w0 = longest_element(a2);
  for (int k = 0; k <= 3; ++k) {
    const auto m = structure_matrix(w0, k);
    const auto phi = canonical_bijection(m);
    bool perm_matrix = true;
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols.size(); ++j)
        perm_matrix &= m.entries[i][j] == (m.cols[j] == w0 * m.rows[i] ? 1 : 0);
    r.expect(perm_matrix, "w0(S3), k=" + std::to_string(k) + " gives the duality permutation matrix");
  }

  const auto a4 = CoxeterSystem::build("A", 4);
  std::vector<std::pair<Element, int>> jobs;
  for (const auto& w : enumerate_group(a4))
    if (is_rationally_smooth(w))
      for (int k = 0; k <= w.length(); ++k) jobs.emplace_back(w, k);
  std::atomic<long long> bad{0};
  std::mutex mu;
  std::vector<std::string> examples;
  for_each_index(jobs.size(), r.ctx.exec, [&](std::size_t i) {
    const auto& [w, k] = jobs[i];
    for (unsigned seed : {0u, r.ctx.seed}) {
      const auto m = structure_matrix(w, k, {seed, Exec::serial});
      if (!m.upper_unitriangular() || count_transversals(m.entries) != 1) {
        ++bad;
        std::lock_guard lock(mu);
        if (examples.size() < 5) examples.push_back(w.to_string() + " k=" + std::to_string(k));
      }
    }
  });
  r.expect(bad == 0, std::to_string(bad.load()) + " matrices not unitriangular or without a unique transversal");
  for (const auto& e : examples) r.note("example: " + e);
  r.data = {{"matrices", jobs.size() * 2}, {"w231", to_json(w231)}};
}

// ---------------------------------------------------------------- criterion 10

const char* const kPropertyGroups[] = {"A3", "A4", "B3", "D4"};

bool totally_disconnected(const CoxeterSystem& sys, GenSet J, GenSet K) {
  if (!(J & K).empty()) return false;
  for (int s : J.members())
    for (int t : K.members())
      if (!sys.commute(s, t)) return false;
  return true;
}

void property_suites(Run& r) {
  for (const char* tag : kPropertyGroups) {
    const auto sys = CoxeterSystem::parse(tag);
    const auto all = enumerate_group(sys);
    const int rank = sys.rank();
    const auto fams = bp_families(all, r.ctx.exec);
    std::atomic<long long> singleton{0}, disconnected{0}, ideal{0}, smooth{0}, product{0}, lemma23{0};
    for_each_index(all.size(), r.ctx.exec, [&](std::size_t i) {
      const Element& w = all[i];
      const auto& fam = fams[i];
      for (int s = 0; s < rank; ++s) {
        const bool want = w.right_descents().contains(s) || !w.support().contains(s);
        if (fam.contains(GenSet::single(s)) != want) ++singleton;
      }
      const bool rs = is_rationally_smooth(w);
      for (std::uint32_t jb = 0; jb < (1u << rank); ++jb) {
        GenSet J;
        for (int g = 0; g < rank; ++g)
          if (jb >> g & 1) J = J.with(g);
        for (std::uint32_t kb = 0; kb < (1u << rank); ++kb) {
          if (jb & kb) continue;
          GenSet K;
          for (int g = 0; g < rank; ++g)
            if (kb >> g & 1) K = K.with(g);
          if (!totally_disconnected(sys, J, K)) continue;
          if (fam.contains(J | K) != (fam.contains(J) && fam.contains(K))) ++disconnected;
          if (!(parabolic_decompose(w, J | K).parabolic ==
                parabolic_decompose(w, J).parabolic * parabolic_decompose(w, K).parabolic))
            ++lemma23;
        }
        const auto d = parabolic_decompose(w, J);
        if (rs) {
          if (!is_rationally_smooth(d.parabolic)) ++smooth;
          if (fam.contains(J) && !is_J_rationally_smooth(d.quotient, J)) ++smooth;
        }
        if (!fam.contains(J)) continue;
        // BP_J(w_J) = { J ∩ K : K ∈ BP(w) }
        std::vector<GenSet> lhs, rhs;
        for (GenSet K : bp_family(d.parabolic).members)
          if (K.subset_of(J)) lhs.push_back(K);
        for (GenSet K : fam.members) rhs.push_back(K & J);
        std::sort(rhs.begin(), rhs.end());
        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
        if (lhs != rhs) ++ideal;
        const auto pm = bp_product_map(w, J);
        if (!pm.bijective || !pm.order_preserving) ++product;
      }
    });
    r.expect(singleton == 0, std::string(tag) + " singleton law: " + std::to_string(singleton.load()) + " failures");
    r.expect(disconnected == 0, std::string(tag) + " totally disconnected law: " + std::to_string(disconnected.load()) + " failures");
    r.expect(lemma23 == 0, std::string(tag) + " w_{J∪K} = w_J w_K: " + std::to_string(lemma23.load()) + " failures");
    r.expect(ideal == 0, std::string(tag) + " order-ideal restriction: " + std::to_string(ideal.load()) + " failures");
    r.expect(smooth == 0, std::string(tag) + " factor smoothness: " + std::to_string(smooth.load()) + " failures");
    r.expect(product == 0, std::string(tag) + " product map: " + std::to_string(product.load()) + " failures");
    r.data[tag] = {{"elements", all.size()}};
  }
}

struct Entry {
  CheckInfo info;
  std::function<void(Run&)> fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"c2-counterexample", 1, false, "affine C2 element srstrsr has no Grassmannian BP decomposition"}, c2_counterexample},
      {{"jstar-equivalence", 2, false, "J-star, definition and Poincare BP tests agree"}, jstar_equivalence},
      {{"lattice", 3, false, "BP(w) closed under union and intersection in finite groups"}, lattice},
      {{"rank3-lattice", 3, false, "lattice property on rank-3 infinite groups up to length 12"}, rank3_lattice},
      {{"bp-posets", 4, false, "BP posets of 4231, 3412, 65178432 and the seven-factor factorization"}, bp_posets},
      {{"typeA-fast-path", 5, false, "pattern-based BP poset equals the exhaustive one on S6 and random S8"}, typeA_fast_path},
      {{"typeA-speedup", 5, false, "pattern-based BP poset at least 10x faster at n = 12"}, typeA_speedup},
      {{"degrees", 6, false, "P(w0) is the product of q-integers of the degrees"}, degrees},
      {{"root-lemmas", 7, false, "simple-head and union lemmas on A4, B4, C4, D5, F4, G2"}, root_lemmas},
      {{"e6-simple-jstar", 7, true, "simple-head and union lemmas on E6"}, e6_lemmas},
      {{"lehmer", 8, false, "quotient codes, the 52134 figure, and code search on S5, B3 and H3"}, lehmer},
      {{"f4-lehmer", 8, true, "[e,w0(F4)] has no Lehmer code"}, f4_lehmer},
      {{"h4-lehmer", 8, true, "[e,w0(H4)] has no Lehmer code"}, h4_lehmer},
      {{"schubert-triangularity", 9, false, "structure-constant matrices are upper unitriangular on smooth S5"}, schubert_triangularity},
      {{"property-suites", 10, false, "singleton, disconnected, order-ideal, factor smoothness, product map"}, property_suites},
  };
  return entries;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : check_catalog())
    if (c.name == name) return &c;
  return nullptr;
}

CheckResult run_check(const std::string& name, const CheckContext& ctx) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    CheckResult res;
    res.info = e.info;
    Run run{ctx, {}, Json::object(), 0};
    const auto t0 = Clock::now();
    try {
      e.fn(run);
      res.status = run.failures == 0 ? CheckStatus::pass : CheckStatus::fail;
    } catch (const ResourceError& ex) {
      res.status = CheckStatus::skipped;
      run.note(std::string("skipped: ") + ex.what());
    } catch (const std::exception& ex) {
      res.status = CheckStatus::fail;
      run.note(std::string("error: ") + ex.what());
    }
    res.seconds = since(t0);
    res.notes = std::move(run.notes);
    res.data = std::move(run.data);
    return res;
  }
  throw UsageError("unknown check: " + name);
}

std::vector<std::string> select_checks(const std::vector<std::string>& include_long) {
  const bool every = std::find(include_long.begin(), include_long.end(), "all") != include_long.end();
  for (const auto& n : include_long) {
    if (n == "all") continue;
    const auto* c = find_check(n);
    if (!c || !c->long_run) throw UsageError("not a long-run check: " + n);
  }
  std::vector<std::string> out;
  for (const auto& c : check_catalog())
    if (!c.long_run || every || std::find(include_long.begin(), include_long.end(), c.name) != include_long.end())
      out.push_back(c.name);
  return out;
}

Json to_json(const CheckResult& r) {
  return {{"name", r.info.name},  {"criterion", r.info.criterion}, {"long_run", r.info.long_run},
          {"status", to_string(r.status)}, {"seconds", r.seconds}, {"notes", r.notes}, {"data", r.data}};
}

} // namespace coxbp
