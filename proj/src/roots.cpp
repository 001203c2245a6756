#include <coxbp/detail/system_data.hpp>
#include <coxbp/parallel.hpp>
#include <coxbp/roots.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace coxbp {

struct RootSystem::Cache {
  std::mutex mu;
  std::map<std::uint32_t, std::unique_ptr<WitnessSet>> witnesses;
};

namespace {

// Expected positive roots of the classical types, in ambient coordinates.
std::set<std::vector<int>> classical_positive(char family, int n) {
  std::set<std::vector<int>> out;
  const int dim = family == 'A' ? n + 1 : n;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      std::vector<int> v(dim, 0);
      v[i] = 1;
      v[j] = -1;
      out.insert(v);
      if (family != 'A') {
        v[j] = 1;
        out.insert(v);
      }
    }
  if (family == 'B' || family == 'C')
    for (int i = 0; i < n; ++i) {
      std::vector<int> v(n, 0);
      v[i] = family == 'B' ? 1 : 2;
      out.insert(v);
    }
  return out;
}

// All 240 roots of E8 in doubled even coordinates.
std::set<std::vector<int>> e8_roots() {
  std::set<std::vector<int>> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int a : {-2, 2})
        for (int b : {-2, 2}) {
          std::vector<int> v(8, 0);
          v[i] = a;
          v[j] = b;
          out.insert(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::vector<int> v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
    out.insert(v);
  }
  return out;
}

} // namespace

RootSystem::~RootSystem() = default;

RootSystem::RootSystem(const CoxeterSystem& sys) : sys_(sys), cache_(std::make_unique<Cache>()) {
  const auto& d = *sys.data();
  if (d.ambient.empty() || !sys.is_finite())
    throw UnsupportedError("root systems are available for finite crystallographic types A-G only, not " + sys.name());
  const int r = sys.rank();
  auto cart = [&](int s, int t) { return static_cast<int>(d.nij(s, t).a); };

  std::vector<std::vector<int>> found;
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::deque<std::vector<int>> queue;
  for (int s = 0; s < r; ++s) {
    std::vector<int> e(r, 0);
    e[s] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    found.push_back(b);
    for (int s = 0; s < r; ++s) {
      int c = 0;
      for (int j = 0; j < r; ++j) c += cart(s, j) * b[j];
      if (c == 0) continue;
      std::vector<int> img = b;
      img[s] -= c;
      if (img[s] < 0) continue;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x > y;
  });
  const int dim = static_cast<int>(d.ambient[0].size());
  for (const auto& c : found) {
    Root root;
    root.coords = c;
    root.ambient.assign(dim, 0);
    for (int s = 0; s < r; ++s) {
      root.height += c[s];
      if (c[s]) root.support = root.support.with(s);
      for (int k = 0; k < dim; ++k) root.ambient[k] += c[s] * d.ambient[s][k];
    }
    index_.emplace(c, static_cast<int>(roots_.size()));
    roots_.push_back(std::move(root));
  }

  // Validate against the explicit coordinate descriptions.
  const char f = sys.family();
  if (f == 'A' || f == 'B' || f == 'C' || f == 'D') {
    std::set<std::vector<int>> got;
    for (const auto& rt : roots_) got.insert(rt.ambient);
    if (got != classical_positive(f, d.type_rank)) throw InvariantViolation("classical root set mismatch for " + sys.name());
  }
  if (f == 'E') {
    std::set<std::vector<int>> got;
    for (const auto& rt : roots_) {
      got.insert(rt.ambient);
      std::vector<int> neg = rt.ambient;
      for (int& x : neg) x = -x;
      got.insert(neg);
    }
    auto all = e8_roots();
    for (const auto& v : got)
      if (!all.count(v)) throw InvariantViolation("E-type root outside the E8 lattice description");
  }
  static const std::map<std::string, int> expected = {{"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  if (auto it = expected.find(sys.name()); it != expected.end() && it->second != size())
    throw InvariantViolation("wrong number of positive roots for " + sys.name());

  const int N = size();
  simple_.resize(r);
  for (int s = 0; s < r; ++s) {
    std::vector<int> e(r, 0);
    e[s] = 1;
    simple_[s] = index_.at(e);
  }
  add_.assign(N * N, -1);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<int> v = roots_[i].coords;
      for (int k = 0; k < r; ++k) v[k] += roots_[j].coords[k];
      if (auto idx = index_of(v)) add_[i * N + j] = *idx;
    }
  refl_.assign(r * N, 0);
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < N; ++i) {
      std::vector<int> v = roots_[i].coords;
      int c = 0;
      for (int j = 0; j < r; ++j) c += cart(s, j) * v[j];
      v[s] -= c;
      if (auto idx = index_of(v)) {
        refl_[s * N + i] = *idx + 1;
      } else {
        for (int& x : v) x = -x;
        refl_[s * N + i] = -(index_.at(v) + 1);
      }
    }
}

const RootSystem& RootSystem::of(const CoxeterSystem& sys) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[sys.name()];
  if (!slot) slot = std::make_unique<RootSystem>(sys);
  return *slot;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string RootSystem::to_string(int i) const {
  std::string s = "(";
  for (std::size_t k = 0; k < roots_[i].coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(roots_[i].coords[k]);
  }
  return s + ")";
}

SignedRoot RootSystem::apply(const Element& w, SignedRoot r) const {
  if (!(w.system().coxeter_matrix() == sys_.coxeter_matrix())) throw UsageError("element does not belong to the Weyl group of " + name());
  const Word& word = w.word();
  for (std::size_t k = word.size(); k-- > 0;) r = reflect(word[k], r);
  return r;
}

std::vector<bool> RootSystem::inversion_set(const Element& w) const {
  if (!(w.system().coxeter_matrix() == sys_.coxeter_matrix())) throw UsageError("element does not belong to the Weyl group of " + name());
  std::vector<bool> out(size(), false);
  const Word& word = w.word();
  for (int i = 0; i < size(); ++i) {
    SignedRoot r = i + 1;
    for (std::size_t k = word.size(); k-- > 0;) r = reflect(word[k], r);
    out[i] = r < 0;
  }
  return out;
}

bool RootSystem::poset_leq(int i, int j) const {
  for (int k = 0; k < rank(); ++k)
    if (roots_[j].coords[k] < roots_[i].coords[k]) return false;
  return true;
}

std::vector<int> RootSystem::phi_plus(GenSet J) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (in_phi_plus(i, J)) out.push_back(i);
  return out;
}

bool RootSystem::is_biclosed(const std::vector<bool>& set) const {
  auto closed = [&](bool want) {
    for (int i = 0; i < size(); ++i) {
      if (set[i] != want) continue;
      for (int j = 0; j < size(); ++j) {
        if (set[j] != want) continue;
        for (int p = 1; p <= 3; ++p)
          for (int q = 1; q <= 3; ++q) {
            std::vector<int> v(rank());
            for (int k = 0; k < rank(); ++k) v[k] = p * roots_[i].coords[k] + q * roots_[j].coords[k];
            auto idx = index_of(v);
            if (idx && set[*idx] != want) return false;
          }
      }
    }
    return true;
  };
  return closed(true) && closed(false);
}

std::vector<JStar> RootSystem::jstars(GenSet J, int max_arms, int max_coef, std::optional<int> head) const {
  require_subset(sys_, J);
  const int r = rank();
  std::vector<JStar> out;
  std::vector<int> heads = head ? std::vector<int>{*head} : phi_plus(J);
  for (int beta : heads) {
    if (!in_phi_plus(beta, J)) throw UsageError("J-star head must lie in Phi_J^+");
    // Candidate arms (c, gamma) with beta + c*gamma a root.
    std::vector<std::pair<int, int>> cand;
    for (int g = 0; g < size(); ++g) {
      if (in_phi_plus(g, J)) continue;
      for (int c = 1; c <= max_coef; ++c) {
        std::vector<int> v = roots_[beta].coords;
        for (int k = 0; k < r; ++k) v[k] += c * roots_[g].coords[k];
        if (index_of(v)) cand.emplace_back(c, g);
      }
    }
    std::vector<std::pair<int, int>> arms;
    std::vector<std::vector<int>> sums{roots_[beta].coords};  // all subset sums
    auto extend = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t ci = from; ci < cand.size(); ++ci) {
        auto [c, g] = cand[ci];
        if (!arms.empty() && g <= arms.back().second) continue;
        std::vector<std::vector<int>> added;
        bool ok = true;
        for (const auto& s : sums) {
          std::vector<int> v = s;
          for (int k = 0; k < r; ++k) v[k] += c * roots_[g].coords[k];
          if (!index_of(v)) {
            ok = false;
            break;
          }
          added.push_back(std::move(v));
        }
        if (!ok) continue;
        const std::size_t old = sums.size();
        sums.insert(sums.end(), added.begin(), added.end());
        arms.emplace_back(c, g);
        JStar star;
        star.head = beta;
        star.arms = arms;
        star.sum = *index_of(sums.back());
        out.push_back(std::move(star));
        if (static_cast<int>(arms.size()) < max_arms) self(self, ci + 1);
        arms.pop_back();
        sums.resize(old);
      }
    };
    extend(extend, 0);
  }
  return out;
}

const WitnessSet& RootSystem::witnesses(GenSet J) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->witnesses.find(J.bits());
    if (it != cache_->witnesses.end()) return *it->second;
  }
  auto ws = std::make_unique<WitnessSet>();
  for (const JStar& st : jstars(J)) ws->pairs.emplace_back(st.head, st.sum);
  std::sort(ws->pairs.begin(), ws->pairs.end());
  ws->pairs.erase(std::unique(ws->pairs.begin(), ws->pairs.end()), ws->pairs.end());
  for (auto [b, t] : ws->pairs) ws->lookup.insert((static_cast<std::uint64_t>(b) << 32) | static_cast<std::uint32_t>(t));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->witnesses[J.bits()];
  if (!slot) slot = std::move(ws);
  return *slot;
}

bool contains_jstar(const RootSystem& rs, const Element& w, const JStar& star) {
  std::vector<bool> inv = rs.inversion_set(w);
  return !inv[star.head] && inv[star.sum];
}

std::vector<GenSet> connected_subsets(const CoxeterSystem& sys) {
  std::vector<GenSet> out;
  const std::uint32_t full = sys.all().bits();
  for (std::uint32_t b = 1; b <= full && b != 0; ++b) {
    GenSet J(b);
    if (sys.connected(J)) out.push_back(J);
    if (b == full) break;
  }
  return out;
}

LemmaReport verify_simple_head_lemma(const RootSystem& rs, Exec exec) {
  LemmaReport rep;
  rep.system = rs.name();
  rep.lemma = "simple-head";
  const int r = rs.rank();
  const std::size_t subsets = std::size_t{1} << r;
  std::vector<long long> counts(subsets, 0);
  std::vector<std::vector<std::string>> bad(subsets);
  for_each_index(subsets, exec, [&](std::size_t jb) {
    GenSet J(static_cast<std::uint32_t>(jb));
    for (int a : J.members()) {
      std::vector<bool> star_sum(rs.size(), false);
      for (const JStar& st : rs.jstars(J, 3, 3, rs.simple(a))) star_sum[st.sum] = true;
      for (int tau = 0; tau < rs.size(); ++tau) {
        if (rs.in_phi_plus(tau, J) || !rs.supported_on(tau, a)) continue;
        ++counts[jb];
        bool ok = false;
        for (int j : J.members()) {
          std::vector<int> v = rs.root(tau).coords;
          v[j] -= 1;
          auto idx = rs.index_of(v);
          if (idx && rs.supported_on(*idx, a)) {
            ok = true;
            break;
          }
        }
        if (!ok) ok = star_sum[tau];
        if (!ok)
          bad[jb].push_back("J=" + J.to_string() + " alpha=" + std::to_string(a + 1) + " tau=" + rs.to_string(tau));
      }
    }
  });
  for (std::size_t i = 0; i < subsets; ++i) {
    rep.checked += counts[i];
    rep.violations.insert(rep.violations.end(), bad[i].begin(), bad[i].end());
  }
  return rep;
}

LemmaReport verify_union_lemma(const RootSystem& rs, Exec exec) {
  LemmaReport rep;
  rep.system = rs.name();
  rep.lemma = "union";
  const auto conn = connected_subsets(rs.system());
  std::vector<std::pair<GenSet, GenSet>> pairs;
  for (std::size_t i = 0; i < conn.size(); ++i)
    for (std::size_t j = i + 1; j < conn.size(); ++j)
      if (!conn[i].subset_of(conn[j]) && !conn[j].subset_of(conn[i])) pairs.emplace_back(conn[i], conn[j]);
  std::vector<long long> counts(pairs.size(), 0);
  std::vector<std::vector<std::string>> bad(pairs.size());
  const int N = rs.size();
  for_each_index(pairs.size(), exec, [&](std::size_t pi) {
    auto [J1, J2] = pairs[pi];
    GenSet J = J1 | J2;
    const WitnessSet& W = rs.witnesses(J);
    const WitnessSet& W1 = rs.witnesses(J1);
    const WitnessSet& W2 = rs.witnesses(J2);
    for (auto [beta, tau] : W.pairs) {
      if (rs.in_phi_plus(beta, J1) || rs.in_phi_plus(beta, J2)) continue;
      ++counts[pi];
      auto good = [&](int b) { return W.contains(b, tau) || W1.contains(b, tau) || W2.contains(b, tau); };
      bool found = false;
      for (int b1 = 0; b1 < N && !found; ++b1) {
        if (!rs.poset_leq(b1, beta) || b1 == beta || !good(b1)) continue;
        std::vector<int> rest = rs.root(beta).coords;
        for (int k = 0; k < rs.rank(); ++k) rest[k] -= rs.root(b1).coords[k];
        if (auto b2 = rs.index_of(rest); b2 && *b2 >= b1 && good(*b2)) {
          found = true;
          break;
        }
        for (int b2 = b1; b2 < N && !found; ++b2) {
          if (!good(b2)) continue;
          std::vector<int> r3 = rest;
          bool nonneg = true;
          for (int k = 0; k < rs.rank(); ++k) {
            r3[k] -= rs.root(b2).coords[k];
            nonneg = nonneg && r3[k] >= 0;
          }
          if (!nonneg) continue;
          if (auto b3 = rs.index_of(r3); b3 && *b3 >= b2 && good(*b3)) found = true;
        }
      }
      if (!found)
        bad[pi].push_back("J1=" + J1.to_string() + " J2=" + J2.to_string() + " beta=" + rs.to_string(beta) +
                          " tau=" + rs.to_string(tau));
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rep.checked += counts[i];
    rep.violations.insert(rep.violations.end(), bad[i].begin(), bad[i].end());
  }
  return rep;
}

} // namespace coxbp
