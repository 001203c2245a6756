#include <coxbp/lehmer.hpp>

#include <coxbp/bp.hpp>
#include <coxbp/errors.hpp>
#include <coxbp/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>

namespace coxbp {

std::size_t chain_product_size(const std::vector<int>& chains) {
  std::size_t n = 1;
  for (int a : chains) n *= static_cast<std::size_t>(a);
  return n;
}

std::vector<int> LehmerCode::tuple(std::size_t index) const {
  std::vector<int> t(chains.size());
  for (std::size_t i = chains.size(); i-- > 0;) {
    t[i] = static_cast<int>(index % chains[i]);
    index /= chains[i];
  }
  return t;
}

std::size_t LehmerCode::index(const std::vector<int>& t) const {
  if (t.size() != chains.size()) throw UsageError("tuple has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (t[i] < 0 || t[i] >= chains[i]) throw UsageError("tuple coordinate out of range");
    idx = idx * chains[i] + t[i];
  }
  return idx;
}

std::vector<int> classical_code(const std::vector<int>& w) {
  std::vector<int> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c[i];
  return c;
}

std::vector<int> decode_classical(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] >= n - i) throw UsageError("not a Lehmer code");
    w.push_back(unused[code[i]]);
    unused.erase(unused.begin() + code[i]);
  }
  return w;
}

namespace {

using Perm = std::vector<int>;  // one-line, values 1..n

struct PermCode {
  std::vector<int> chains;
  std::vector<std::pair<std::vector<int>, Perm>> entries;
};

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm compose(const Perm& x, const Perm& y) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[y[i] - 1];
  return r;
}

Perm inverse(const Perm& x) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[x[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

// Drop the fixed point 1.
Perm shrink(const Perm& x) {
  Perm r;
  for (std::size_t i = 1; i < x.size(); ++i) r.push_back(x[i] - 1);
  return r;
}

Perm lift(const Perm& x) {
  Perm r{1};
  for (int v : x) r.push_back(v + 1);
  return r;
}

// Positions j..n (1-based) sorted ascending.
Perm quotient_part(Perm x, int j) {
  std::sort(x.begin() + (j - 1), x.end());
  return x;
}

// Chain of the form [m, remaining ascending], m = 1..top.
Perm first_value_chain(int n, int m) {
  Perm p{m};
  for (int v = 1; v <= n; ++v)
    if (v != m) p.push_back(v);
  return p;
}

// s_1 s_2 ... s_{q-1}
Perm cycle_to_front(int n, int q) {
  Perm p = identity_perm(n);
  for (int i = 0; i < q - 1; ++i) p[i] = i + 2;
  p[q - 1] = 1;
  return p;
}

PermCode build(const Perm& w, int j) {
  const int n = static_cast<int>(w.size());
  PermCode out;
  if (j <= 1) {
    out.entries.push_back({{}, identity_perm(n)});
    return out;
  }
  if (j == 2) {
    if (w[0] >= 2) out.chains.push_back(w[0]);
    for (int m = 1; m <= w[0]; ++m) {
      std::vector<int> digits;
      if (w[0] >= 2) digits.push_back(m - 1);
      out.entries.push_back({digits, first_value_chain(n, m)});
    }
    return out;
  }

  Perm u = w;
  std::reverse(u.begin() + (j - 1), u.end());
  const int p = inverse(u)[0];  // 1-based position of 1
  bool b1 = false, b2 = false;
  for (int i = p + 1; i <= n; ++i) b1 |= u[i - 1] < u[0];
  for (int i = 1; i < p; ++i) b2 |= u[i - 1] > u[0];

  if (!b1) {
    Perm uK{u[0]};
    for (int v = 1; v <= n; ++v)
      if (v != u[0]) uK.push_back(v);
    const Perm u_K = compose(inverse(uK), u);
    const PermCode rec = build(shrink(quotient_part(u_K, j)), j - 1);
    const int top = u[0];
    if (top >= 2) out.chains.push_back(top);
    out.chains.insert(out.chains.end(), rec.chains.begin(), rec.chains.end());
    for (int m = 1; m <= top; ++m) {
      const Perm c = first_value_chain(n, m);
      for (const auto& [digits, y] : rec.entries) {
        std::vector<int> d;
        if (top >= 2) d.push_back(m - 1);
        d.insert(d.end(), digits.begin(), digits.end());
        out.entries.push_back({std::move(d), compose(c, lift(y))});
      }
    }
    return out;
  }
  if (b2) throw InvariantViolation("u contains 3412; w is not J-rationally smooth");

  if (j <= p) {
    for (int i = 1; i <= j - 1; ++i) out.chains.push_back(n - i + 1);
    std::vector<int> digits(j - 1, 0);
    while (true) {
      std::vector<int> code(n, 0);
      std::copy(digits.begin(), digits.end(), code.begin());
      out.entries.push_back({digits, decode_classical(code)});
      int i = j - 2;
      while (i >= 0 && digits[i] == n - i - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
    return out;
  }

  const Perm Ku = compose(u, inverse(cycle_to_front(n, p)));
  const PermCode rec = build(shrink(quotient_part(Ku, j)), j - 1);
  out.chains = rec.chains;
  if (p >= 2) out.chains.push_back(p);
  for (const auto& [digits, x] : rec.entries) {
    for (int q = 1; q <= p; ++q) {
      std::vector<int> d = digits;
      if (p >= 2) d.push_back(q - 1);
      out.entries.push_back({std::move(d), compose(lift(x), cycle_to_front(n, q))});
    }
  }
  return out;
}

LehmerCode to_code(const CoxeterSystem& sys, const PermCode& pc) {
  LehmerCode code;
  code.chains = pc.chains;
  code.images.assign(chain_product_size(code.chains), sys.identity());
  std::vector<bool> seen(code.images.size(), false);
  for (const auto& [digits, perm] : pc.entries) {
    const std::size_t idx = code.index(digits);
    if (seen[idx]) throw ConstructionError("tuple assigned twice");
    seen[idx] = true;
    code.images[idx] = sys.from_one_line(perm);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ConstructionError("tuple left unassigned");
  return code;
}

void require_type_a(const CoxeterSystem& sys) {
  if (sys.family() != 'A') throw UsageError("type A system required, got " + sys.name());
}

} // namespace

LehmerCode classical_lehmer_code(const CoxeterSystem& sys) {
  require_type_a(sys);
  const int n = sys.rank() + 1;
  LehmerCode code;
  for (int a = n; a >= 2; --a) code.chains.push_back(a);
  for (std::size_t t = 0; t < chain_product_size(code.chains); ++t) {
    auto digits = code.tuple(t);
    digits.push_back(0);
    code.images.push_back(sys.from_one_line(decode_classical(digits)));
  }
  return code;
}

CodeCheck verify_code(const LehmerCode& code, const Interval& iv) {
  auto fail = [](std::string why) { return CodeCheck{false, std::move(why)}; };
  for (int a : code.chains)
    if (a < 2) return fail("chain of size < 2");
  if (code.images.size() != chain_product_size(code.chains)) return fail("image count differs from chain product");
  if (code.size() != static_cast<std::size_t>(iv.size())) return fail("chain product size differs from interval size");
  std::vector<int> idx(code.size());
  std::vector<bool> hit(iv.size(), false);
  for (std::size_t t = 0; t < code.size(); ++t) {
    idx[t] = iv.find(code.images[t]);
    if (idx[t] < 0) return fail("image " + code.images[t].to_string() + " outside the interval");
    if (hit[idx[t]]) return fail("element " + code.images[t].to_string() + " hit twice");
    hit[idx[t]] = true;
    const auto tup = code.tuple(t);
    if (std::accumulate(tup.begin(), tup.end(), 0) != code.images[t].length())
      return fail("rank mismatch at " + code.images[t].to_string());
  }
  std::size_t stride = 1;
  for (std::size_t i = code.chains.size(); i-- > 0;) {
    for (std::size_t t = 0; t < code.size(); ++t) {
      if ((t / stride) % code.chains[i] == static_cast<std::size_t>(code.chains[i] - 1)) continue;
      const auto& lo = code.images[t];
      const auto& hi = code.images[t + stride];
      if (!bruhat_leq(lo, hi)) return fail(lo.to_string() + " not below " + hi.to_string());
    }
    stride *= code.chains[i];
  }
  return {};
}

std::optional<int> tail_start(const CoxeterSystem& sys, GenSet J) {
  const int n = sys.rank() + 1;
  for (int j = 1; j <= n; ++j) {
    GenSet tail;
    for (int s = j; s <= n - 1; ++s) tail = tail.with(static_cast<Gen>(s - 1));
    if (tail == J) return j;
  }
  return std::nullopt;
}

LehmerCode construct_quotient_code(const Element& w, GenSet J) {
  const CoxeterSystem& sys = w.system();
  require_type_a(sys);
  const auto j = tail_start(sys, J);
  if (!j) throw UsageError("J = " + J.to_string() + " is not of the form {s_j, ..., s_{n-1}}");
  if (!in_right_quotient(w, J)) throw UsageError(w.to_string() + " is not in W^J");
  if (!is_J_rationally_smooth(w, J)) throw UsageError(w.to_string() + " is not J-rationally smooth");
  LehmerCode code = to_code(sys, build(sys.to_one_line(w), *j));
  const auto check = verify_code(code, quotient_interval(w, J));
  if (!check.ok) throw ConstructionError("constructed code invalid: " + check.reason);
  return code;
}

ProductMap bp_product_map(const Element& w, GenSet J) {
  require_subset(w.system(), J);
  if (!is_bp(w, J)) throw UsageError(J.to_string() + " is not in BP(" + w.to_string() + ")");
  const auto d = parabolic_decompose(w, J);
  ProductMap pm;
  pm.quotient = quotient_interval(d.quotient, J);
  pm.parabolic = bruhat_interval(d.parabolic);
  pm.full = bruhat_interval(w);
  pm.image.assign(pm.quotient.size(), std::vector<int>(pm.parabolic.size(), -1));
  std::vector<bool> hit(pm.full.size(), false);
  pm.bijective = static_cast<long long>(pm.quotient.size()) * pm.parabolic.size() == pm.full.size();
  for (int a = 0; a < pm.quotient.size(); ++a)
    for (int b = 0; b < pm.parabolic.size(); ++b) {
      const int k = pm.full.find(pm.quotient.elements[a] * pm.parabolic.elements[b]);
      pm.image[a][b] = k;
      if (k < 0 || hit[k]) {
        pm.bijective = false;
        continue;
      }
      hit[k] = true;
    }
  pm.order_preserving = pm.bijective;
  auto below = [&](int x, int y) { return x >= 0 && y >= 0 && bruhat_leq(pm.full.elements[x], pm.full.elements[y]); };
  for (const auto& [lo, hi] : pm.quotient.covers)
    for (int b = 0; b < pm.parabolic.size() && pm.order_preserving; ++b)
      pm.order_preserving = below(pm.image[lo][b], pm.image[hi][b]);
  for (const auto& [lo, hi] : pm.parabolic.covers)
    for (int a = 0; a < pm.quotient.size() && pm.order_preserving; ++a)
      pm.order_preserving = below(pm.image[a][lo], pm.image[a][hi]);
  return pm;
}

LehmerCode compose_codes(const LehmerCode& outer, const LehmerCode& inner) {
  LehmerCode code;
  code.chains = outer.chains;
  code.chains.insert(code.chains.end(), inner.chains.begin(), inner.chains.end());
  code.images.reserve(outer.size() * inner.size());
  for (const auto& x : outer.images)
    for (const auto& y : inner.images) code.images.push_back(x * y);
  return code;
}

std::vector<std::vector<int>> candidate_chain_multisets(const Interval& iv) {
  const int n = iv.size();
  int top = 0;
  for (int i = 0; i < n; ++i) top = std::max(top, iv.rank_of(i));
  const Poly target = iv.poincare();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int rank_left, int min_part) -> void {
    if (remaining == 1) {
      if (rank_left != 0) return;
      Poly p{1};
      for (int a : cur) p = poly_mul(p, q_integer(a));
      if (p == target) out.push_back(cur);
      return;
    }
    for (int a = min_part; a <= remaining; ++a) {
      if (remaining % a != 0 || a - 1 > rank_left) continue;
      cur.push_back(a);
      self(self, remaining / a, rank_left - (a - 1), a);
      cur.pop_back();
    }
  };
  rec(rec, n, top, 2);
  return out;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::unknown: return "unknown";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void merge(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
};

enum class RunResult { found, exhausted, timeout };

class Backtracker {
 public:
  Backtracker(const Interval& iv, const std::vector<int>& chains, Clock::time_point deadline,
              const std::atomic<bool>& stop)
      : iv_(iv), chains_(chains), deadline_(deadline), stop_(stop) {
    const int n = iv.size();
    const int k = static_cast<int>(chains.size());
    total_ = chain_product_size(chains);
    stride_.assign(k, 1);
    for (int i = k - 1; i > 0; --i) stride_[i - 1] = stride_[i] * chains[i];

    std::vector<Bits> down(n, Bits(n)), up(n, Bits(n));
    cover_below_.assign(n, Bits(n));
    for (int v = 0; v < n; ++v) {
      down[v].set(v);
      for (int lo : iv.down[v]) {
        down[v].merge(down[lo]);
        cover_below_[v].set(lo);
      }
    }
    for (int v = n - 1; v >= 0; --v) {
      up[v].set(v);
      for (int hi : iv.up[v]) up[v].merge(up[hi]);
    }
    down_size_.resize(n);
    up_size_.resize(n);
    for (int v = 0; v < n; ++v) {
      down_size_[v] = down[v].count();
      up_size_[v] = up[v].count();
    }

    need_down_.resize(total_);
    need_up_.resize(total_);
    need_lower_.resize(total_);
    need_upper_.resize(total_);
    preds_.resize(total_);
    std::vector<int> rank(total_);
    for (std::size_t t = 0; t < total_; ++t) {
      std::size_t r = t;
      int dn = 1, upn = 1, lo = 0, hi = 0;
      for (int i = 0; i < k; ++i) {
        const int d = static_cast<int>(r / stride_[i]);
        r %= stride_[i];
        dn *= d + 1;
        upn *= chains[i] - d;
        lo += d > 0;
        hi += d < chains[i] - 1;
        rank[t] += d;
        if (d > 0) preds_[t].push_back(t - stride_[i]);
      }
      need_down_[t] = dn;
      need_up_[t] = upn;
      need_lower_[t] = lo;
      need_upper_[t] = hi;
    }
    // Tuples rank by rank; each rank is closed by a matching check.
    order_.resize(total_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) { return rank[x] < rank[y]; });
    rank_end_.resize(total_);
    for (std::size_t pos = total_; pos-- > 0;)
      rank_end_[pos] = (pos + 1 == total_ || rank[order_[pos + 1]] != rank[order_[pos]]) ? pos + 1 : rank_end_[pos + 1];

    // Equal adjacent chain sizes: require image(e_i) > image(e_{i+1}) by index.
    sym_partner_.assign(k, -1);
    for (int i = 0; i + 1 < k; ++i)
      if (chains[i] == chains[i + 1]) sym_partner_[i] = i + 1;
    unit_of_.assign(total_, -1);
    for (int i = 0; i < k; ++i) unit_of_[stride_[i]] = i;
  }

  RunResult run() {
    assign_.assign(total_, -1);
    used_.assign(iv_.size(), false);
    match_of_elem_.assign(iv_.size(), -1);
    if (iv_.size() == 0) return RunResult::exhausted;
    return dfs(0);
  }

  const std::vector<int>& assignment() const { return assign_; }
  long long nodes() const { return nodes_; }

 private:
  bool compatible(std::size_t t, int c) const {
    if (used_[c] || down_size_[c] < need_down_[t] || up_size_[c] < need_up_[t]) return false;
    if (static_cast<int>(iv_.down[c].size()) < need_lower_[t] || static_cast<int>(iv_.up[c].size()) < need_upper_[t])
      return false;
    for (std::size_t p : preds_[t])
      if (!cover_below_[c].test(assign_[p])) return false;
    return true;
  }

  std::vector<int> candidates(std::size_t t) const {
    std::vector<int> out;
    if (preds_[t].empty()) {
      if (compatible(t, 0)) out.push_back(0);
      return out;
    }
    for (int c : iv_.up[assign_[preds_[t][0]]])
      if (compatible(t, c)) out.push_back(c);
    return out;
  }

  // Can tuples order_[pos..end) of the current rank still be matched to distinct elements?
  bool matchable(std::size_t pos) {
    const std::size_t end = rank_end_[pos];
    const std::size_t m = end - pos;
    std::vector<std::vector<int>> adj(m);
    for (std::size_t i = 0; i < m; ++i) {
      adj[i] = candidates(order_[pos + i]);
      if (adj[i].empty()) return false;
    }
    for (int& x : touched_) match_of_elem_[x] = -1;
    touched_.clear();
    std::vector<char> seen(iv_.size());
    auto augment = [&](auto& self, int i) -> bool {
      for (int c : adj[i]) {
        if (seen[c]) continue;
        seen[c] = 1;
        if (match_of_elem_[c] < 0 || self(self, match_of_elem_[c])) {
          if (match_of_elem_[c] < 0) touched_.push_back(c);
          match_of_elem_[c] = i;
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < m; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      if (!augment(augment, static_cast<int>(i))) return false;
    }
    return true;
  }

  RunResult dfs(std::size_t pos) {
    if (pos == total_) return RunResult::found;
    if ((++nodes_ & 255) == 0 && (Clock::now() > deadline_ || stop_.load(std::memory_order_relaxed)))
      return RunResult::timeout;
    if (!matchable(pos)) return RunResult::exhausted;
    const std::size_t t = order_[pos];
    for (int c : candidates(t)) {
      if (const int u = unit_of_[t]; u >= 0 && sym_partner_[u] >= 0 && c <= assign_[stride_[sym_partner_[u]]])
        continue;
      assign_[t] = c;
      used_[c] = true;
      const RunResult r = dfs(pos + 1);
      if (r != RunResult::exhausted) return r;
      used_[c] = false;
      assign_[t] = -1;
    }
    return RunResult::exhausted;
  }

  const Interval& iv_;
  std::vector<int> chains_;
  Clock::time_point deadline_;
  const std::atomic<bool>& stop_;
  std::size_t total_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<Bits> cover_below_;
  std::vector<int> down_size_, up_size_, need_down_, need_up_, need_lower_, need_upper_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::size_t> order_, rank_end_;
  std::vector<int> sym_partner_, unit_of_;
  std::vector<int> assign_;
  std::vector<bool> used_;
  std::vector<int> match_of_elem_, touched_;
  long long nodes_ = 0;
};

} // namespace

SearchResult search_code(const Interval& iv, double budget, Exec exec) {
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget));
  SearchResult res;
  const auto multisets = candidate_chain_multisets(iv);
  std::vector<RunResult> outcome(multisets.size(), RunResult::timeout);
  std::vector<std::vector<int>> assignment(multisets.size());
  std::vector<long long> nodes(multisets.size(), 0);
  std::atomic<bool> stop{false};

  for_each_index(multisets.size(), exec, [&](std::size_t m) {
    const std::vector<int> order(multisets[m].rbegin(), multisets[m].rend());
    Backtracker bt(iv, order, deadline, stop);
    outcome[m] = bt.run();
    nodes[m] = bt.nodes();
    if (outcome[m] == RunResult::found) {
      assignment[m] = bt.assignment();
      stop = true;
    }
  });

  res.nodes = std::accumulate(nodes.begin(), nodes.end(), 0LL);
  bool all_exhausted = true;
  for (std::size_t m = 0; m < multisets.size(); ++m) {
    if (outcome[m] == RunResult::exhausted) res.exhausted.push_back(multisets[m]);
    else all_exhausted = false;
    if (outcome[m] == RunResult::found && !res.code) {
      LehmerCode code;
      // The search runs with chains in decreasing order; reverse tuples back.
      code.chains = multisets[m];
      LehmerCode searched;
      searched.chains.assign(code.chains.rbegin(), code.chains.rend());
      for (std::size_t t = 0; t < assignment[m].size(); ++t) {
        auto tup = code.tuple(t);
        std::reverse(tup.begin(), tup.end());
        code.images.push_back(iv.elements[assignment[m][searched.index(tup)]]);
      }
      res.code = std::move(code);
    }
  }
  res.status = res.code ? SearchStatus::found : all_exhausted ? SearchStatus::none : SearchStatus::unknown;
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

} // namespace coxbp
