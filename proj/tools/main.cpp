#include <coxbp/checks.hpp>
#include <coxbp/errors.hpp>
#include <coxbp/exec.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

using namespace coxbp;

namespace {

struct Globals {
  bool json = false;
  std::string dot;
  int cap_length = 22;
  int threads = 0;
  unsigned seed = 20240601;
  std::string format = "auto";
  std::vector<std::string> include_long;
  bool include_long_given = false;
};

struct Target {
  std::string type;
  int rank = 0;
  std::string w;
  std::string J;
};

void add_target(CLI::App* sub, Target& t, bool needs_w) {
  sub->add_option("--type", t.type, "A B C D E F G H I affineC, or a full tag such as affineC2")->required();
  sub->add_option("--rank", t.rank, "rank (omit when the type already carries it)");
  auto* w = sub->add_option("--w", t.w, "element: one-line, reduced word, generator letters or w0");
  if (needs_w) w->required();
}

CoxeterSystem system_of(const Target& t) {
  if (t.rank > 0) return CoxeterSystem::build(t.type, t.rank);
  return CoxeterSystem::parse(t.type);
}

// "1,3", "13", "{1,3}" or generator labels such as "rs".
GenSet parse_genset(const CoxeterSystem& sys, const std::string& text) {
  GenSet J;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    const int g = std::stoi(num);
    if (g < 1 || g > sys.rank()) throw UsageError("generator out of range: " + num);
    J = J.with(g - 1);
    num.clear();
  };
  const bool separated = text.find_first_of(", ") != std::string::npos;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      num += c;
      if (!separated) flush();
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      flush();
    } else {
      bool found = false;
      for (int s = 0; s < sys.rank(); ++s)
        if (sys.label(s) == std::string(1, c)) {
          J = J.with(s);
          found = true;
        }
      if (!found) throw UsageError(std::string("unknown generator '") + c + "'");
    }
  }
  flush();
  return J;
}

Element element_of(const CoxeterSystem& sys, const std::string& text, const Globals& g) {
  if (text == "w0") return longest_element(sys);
  return sys.parse_element(text, g.format);
}

using Clock = std::chrono::steady_clock;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::string text;
  double seconds = 0;
  bool ok = true;
};

int emit(const Globals& g, const Report& r) {
  if (g.json) {
    Json out{{"command", r.command}, {"inputs", r.inputs}, {"seed", g.seed}, {"result", r.result},
             {"seconds", r.seconds}, {"ok", r.ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (r.text.empty() ? r.result.dump(2) + "\n" : r.text);
  }
  return r.ok ? 0 : 1;
}

void write_dot(const Globals& g, const std::string& dot) {
  if (g.dot.empty()) return;
  std::ofstream f(g.dot);
  if (!f) throw UsageError("cannot write " + g.dot);
  f << dot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter group BP decompositions, Lehmer codes and Schubert structure matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit a JSON run report");
  app.add_option("--dot", g.dot, "write a DOT graph to this file");
  app.add_option("--cap-length", g.cap_length, "largest element length explored");
  app.add_option("--threads", g.threads, "OpenMP threads (0 = default)");
  app.add_option("--seed", g.seed, "seed for all randomness");
  app.add_option("--format", g.format, "element format: auto, word, oneline, letters")
      ->check(CLI::IsMember({"auto", "word", "oneline", "letters"}));
  app.add_option("--include-long", g.include_long, "long-run checks to add (no value: all)")->expected(0, -1)->delimiter(',');

  Report rep;
  Target t;

  auto* info = app.add_subcommand("info", "describe a system or an element");
  add_target(info, t, false);

  auto* bp = app.add_subcommand("bp", "BP decomposition tests");
  add_target(bp, t, true);
  std::string method = "def";
  bool poset = false;
  bp->add_option("--J", t.J, "generator set, e.g. 1,3 or rs");
  bp->add_option("--method", method)->check(CLI::IsMember({"def", "poincare", "jstar"}));
  bp->add_flag("--poset", poset, "print the BP poset instead of the family");

  auto* jstars = app.add_subcommand("jstars", "enumerate J-stars");
  add_target(jstars, t, false);
  jstars->add_option("--J", t.J)->required();
  int max_arms = 3, max_coef = 3;
  jstars->add_option("--max-arms", max_arms);
  jstars->add_option("--max-coef", max_coef);

  auto* rs = app.add_subcommand("rs", "positive roots");
  add_target(rs, t, false);

  auto* interval = app.add_subcommand("interval", "Bruhat interval [e,w] or [e,w]^J");
  add_target(interval, t, true);
  interval->add_option("--J", t.J);

  auto* poinc = app.add_subcommand("poincare", "Poincare polynomial of [e,w] or [e,w]^J");
  add_target(poinc, t, true);
  poinc->add_option("--J", t.J);

  auto* lehmer = app.add_subcommand("lehmer", "Lehmer codes");
  add_target(lehmer, t, true);
  lehmer->add_option("--J", t.J, "tail set for the constructive quotient code");
  double budget = 60;
  lehmer->add_option("--budget", budget, "search time budget in seconds");

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomials and structure matrices");
  add_target(schubert, t, true);
  int k = -1;
  std::string u_text, v_text;
  schubert->add_option("--k", k, "print the structure matrix for this degree");
  schubert->add_option("--u", u_text);
  schubert->add_option("--v", v_text);

  auto* lemma = app.add_subcommand("lemma-check", "root-system lemma verifiers");
  add_target(lemma, t, false);
  std::string which = "both";
  lemma->add_option("--lemma", which)->check(CLI::IsMember({"simple-head", "union", "both"}));

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  std::vector<std::string> only;
  verify->add_option("--only", only, "run just these checks")->delimiter(',');
  bool list = false;
  verify->add_flag("--list", list, "list the checks");

  auto* bench = app.add_subcommand("bench", "naive vs pattern-based BP posets on random permutations");
  int n = 12, samples = 20;
  bench->add_option("--n", n)->check(CLI::Range(2, kMaxRank));
  bench->add_option("--samples", samples)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  g.include_long_given = app.count("--include-long") > 0;
  if (g.threads > 0) set_thread_count(g.threads);

  const auto t0 = Clock::now();
  try {
    if (info->parsed()) {
      const auto sys = system_of(t);
      rep.command = "info";
      rep.result = {{"system", to_json(sys)}, {"finite", sys.is_finite()}};
      if (!t.w.empty()) {
        const auto w = element_of(sys, t.w, g);
        Json e{{"word", to_json(w)}, {"length", w.length()}, {"right_descents", to_json(w.right_descents())},
               {"left_descents", to_json(w.left_descents())}, {"support", to_json(w.support())}};
        if (sys.has_one_line()) e["one_line"] = sys.to_one_line(w);
        e["rationally_smooth"] = is_rationally_smooth(w, g.cap_length);
        rep.result["element"] = e;
      }
    } else if (bp->parsed()) {
      const auto sys = system_of(t);
      const auto w = element_of(sys, t.w, g);
      rep.command = "bp";
      rep.inputs = {{"type", sys.name()}, {"w", to_json(w)}, {"method", method}};
      if (poset) {
        const auto p = sys.family() == 'A' ? typeA_bp_poset(w) : bp_poset(w);
        rep.result = to_json(p);
        write_dot(g, to_dot(p));
      } else if (!t.J.empty()) {
        const GenSet J = parse_genset(sys, t.J);
        rep.inputs["J"] = to_json(J);
        const bool v = method == "def" ? is_bp(w, J)
                       : method == "poincare" ? is_bp_poincare(w, J, g.cap_length)
                                              : jstar_bp_test(w, J);
        const auto d = parabolic_decompose(w, J);
        rep.result = v;
        rep.text = std::string(v ? "true" : "false") + "\n  w^J = " + d.quotient.to_string() + "\n  w_J = " +
                   d.parabolic.to_string() + "\n";
      } else {
        rep.result = to_json(bp_family(w));
      }
    } else if (jstars->parsed()) {
      const auto sys = system_of(t);
      const auto& root_sys = RootSystem::of(sys);
      const GenSet J = parse_genset(sys, t.J);
      rep.command = "jstars";
      rep.inputs = {{"type", sys.name()}, {"J", to_json(J)}};
      rep.result = Json::array();
      for (const auto& s : root_sys.jstars(J, max_arms, max_coef)) rep.result.push_back(to_json(s, root_sys));
    } else if (rs->parsed()) {
      const auto sys = system_of(t);
      const auto& root_sys = RootSystem::of(sys);
      rep.command = "rs";
      rep.inputs = {{"type", sys.name()}};
      Json roots = Json::array();
      for (int i = 0; i < root_sys.size(); ++i)
        roots.push_back({{"coords", root_sys.root(i).coords}, {"height", root_sys.root(i).height}});
      rep.result = {{"positive_roots", root_sys.size()}, {"roots", roots}};
    } else if (interval->parsed() || poinc->parsed()) {
      const auto sys = system_of(t);
      const auto w = element_of(sys, t.w, g);
      const GenSet J = t.J.empty() ? GenSet{} : parse_genset(sys, t.J);
      rep.command = interval->parsed() ? "interval" : "poincare";
      rep.inputs = {{"type", sys.name()}, {"w", to_json(w)}, {"J", to_json(J)}};
      if (interval->parsed()) {
        const auto iv = J.empty() ? bruhat_interval(w, {g.cap_length, true})
                                  : quotient_interval(w, J, {g.cap_length, true});
        rep.result = to_json(iv);
        write_dot(g, to_dot(iv));
      } else {
        const Poly p = J.empty() ? poincare(w, g.cap_length) : poincare_quotient(w, J, g.cap_length);
        rep.result = to_json(p);
        rep.text = poly_to_string(p) + "\n";
      }
    } else if (lehmer->parsed()) {
      const auto sys = system_of(t);
      const auto w = element_of(sys, t.w, g);
      rep.command = "lehmer";
      rep.inputs = {{"type", sys.name()}, {"w", to_json(w)}};
      if (!t.J.empty()) {
        const GenSet J = parse_genset(sys, t.J);
        rep.inputs["J"] = to_json(J);
        rep.result = to_json(construct_quotient_code(w, J));
      } else {
        const auto iv = bruhat_interval(w, {g.cap_length, true});
        const auto res = search_code(iv, budget, Exec::parallel);
        rep.result = to_json(res);
        rep.ok = res.status != SearchStatus::unknown;
      }
    } else if (schubert->parsed()) {
      const auto sys = system_of(t);
      const auto w = element_of(sys, t.w, g);
      rep.command = "schubert";
      rep.inputs = {{"type", sys.name()}, {"w", to_json(w)}};
      if (sys.family() != 'A') throw UsageError("Schubert calculus is implemented for type A only");
      if (k >= 0) {
        rep.inputs["k"] = k;
        const auto m = structure_matrix(w, k, {g.seed == 20240601 ? 0u : g.seed, Exec::parallel});
        rep.result = to_json(m);
        Json phi = Json::array();
        for (std::size_t i = 0; i < m.rows.size(); ++i)
          phi.push_back({to_json(m.rows[i]), to_json(m.cols[canonical_bijection(m)[i]])});
        rep.result["bijection"] = phi;
      } else if (!u_text.empty() && !v_text.empty()) {
        const auto u = sys.parse_element(u_text, g.format), v = sys.parse_element(v_text, g.format);
        rep.result = structure_constant(u, v, w);
      } else {
        const auto p = schubert_polynomial(sys.to_one_line(w));
        rep.result = p.to_string();
        rep.text = p.to_string() + "\n";
      }
    } else if (lemma->parsed()) {
      const auto sys = system_of(t);
      const auto& root_sys = RootSystem::of(sys);
      rep.command = "lemma-check";
      rep.inputs = {{"type", sys.name()}, {"lemma", which}};
      rep.result = Json::array();
      if (which != "union") rep.result.push_back(to_json(verify_simple_head_lemma(root_sys)));
      if (which != "simple-head") rep.result.push_back(to_json(verify_union_lemma(root_sys)));
      for (const auto& r : rep.result) rep.ok &= r["ok"].get<bool>();
    } else if (verify->parsed()) {
      rep.command = "verify-paper";
      if (list) {
        rep.result = Json::array();
        for (const auto& c : check_catalog()) {
          rep.result.push_back({{"name", c.name}, {"criterion", c.criterion}, {"long_run", c.long_run},
                                {"summary", c.summary}});
          rep.text += c.name + (c.long_run ? " (long)" : "") + ": " + c.summary + "\n";
        }
      } else {
        std::vector<std::string> long_runs;
        for (const auto& s : g.include_long)
          if (!s.empty()) long_runs.push_back(s);
        if (g.include_long_given && long_runs.empty()) long_runs.push_back("all");
        std::vector<std::string> names = only.empty() ? select_checks(long_runs) : only;
        for (const auto& name : names)
          if (!find_check(name)) throw UsageError("unknown check: " + name);
        rep.inputs = {{"checks", names}};
        rep.result = Json::array();
        CheckContext ctx;
        ctx.seed = g.seed;
        for (const auto& name : names) {
          const auto r = run_check(name, ctx);
          rep.result.push_back(to_json(r));
          rep.ok &= r.status != CheckStatus::fail;
          char line[160];
          std::snprintf(line, sizeof line, "%-4s %-24s criterion %-2d %8.2fs\n",
                        r.status == CheckStatus::pass ? "PASS" : r.status == CheckStatus::fail ? "FAIL" : "SKIP",
                        name.c_str(), r.info.criterion, r.seconds);
          rep.text += line;
          for (const auto& note : r.notes) rep.text += "     " + note + "\n";
          if (!g.json) std::cout << line << std::flush;
        }
        if (!g.json) rep.text = std::string(rep.ok ? "all requested checks passed\n" : "some checks failed\n");
      }
    } else if (bench->parsed()) {
      rep.command = "bench";
      rep.inputs = {{"n", n}, {"samples", samples}};
      const auto sys = CoxeterSystem::build("A", n - 1);
      const bool run_naive = n - 1 <= kDefaultFamilyRankBound;
      std::mt19937 rng(g.seed);
      std::vector<int> p(n);
      double naive = 0, fast = 0;
      long long agree = 0;
      for (int i = 0; i < samples; ++i) {
        std::iota(p.begin(), p.end(), 1);
        std::shuffle(p.begin(), p.end(), rng);
        auto s = Clock::now();
        const auto quick = typeA_bp_poset(p);
        fast += std::chrono::duration<double>(Clock::now() - s).count();
        if (!run_naive) continue;
        s = Clock::now();
        const auto slow = bp_poset(sys.from_one_line(p));
        naive += std::chrono::duration<double>(Clock::now() - s).count();
        agree += slow == quick;
      }
      rep.result = {{"fast_mean_s", fast / samples}};
      char buf[256];
      std::snprintf(buf, sizeof buf, "n=%d samples=%d seed=%u\n  pattern-based  %12.6f s/element\n", n, samples,
                    g.seed, fast / samples);
      rep.text = buf;
      if (run_naive) {
        rep.result["naive_mean_s"] = naive / samples;
        rep.result["speedup"] = naive / std::max(fast, 1e-12);
        rep.result["agree"] = agree;
        rep.ok = agree == samples;
        std::snprintf(buf, sizeof buf, "  exhaustive     %12.6f s/element\n  speedup        %12.1fx\n  agreement      %lld/%d\n",
                      naive / samples, naive / std::max(fast, 1e-12), agree, samples);
        rep.text += buf;
      } else {
        rep.result["naive_skipped"] = "rank above " + std::to_string(kDefaultFamilyRankBound);
        rep.text += "  exhaustive     skipped (rank above " + std::to_string(kDefaultFamilyRankBound) + ")\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return emit(g, rep);
}
