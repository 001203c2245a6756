#include <coxbp/schubert.hpp>

#include <coxbp/bp.hpp>
#include <coxbp/bruhat.hpp>
#include <coxbp/errors.hpp>
#include <coxbp/lehmer.hpp>
#include <coxbp/parallel.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace coxbp {

int exponent(Monomial m, int var) { return static_cast<int>((m >> (8 * var)) & 0xff); }

namespace {

Monomial with_exponent(Monomial m, int var, int e) {
  const Monomial mask = Monomial{0xff} << (8 * var);
  return (m & ~mask) | (static_cast<Monomial>(e) << (8 * var));
}

} // namespace

Monomial make_monomial(const std::vector<int>& exps) {
  if (exps.size() > 8) throw ResourceError("at most 8 variables");
  Monomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw UsageError("exponent out of range");
    m = with_exponent(m, static_cast<int>(i), exps[i]);
  }
  return m;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    int s = 0;
    for (int v = 0; v < 8; ++v) s += exponent(m, v);
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms) {
    int s = 0;
    for (int v = 0; v < 8; ++v) s += exponent(m, v);
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

long long MPoly::constant() const {
  auto it = terms.find(0);
  return it == terms.end() ? 0 : it->second;
}

void MPoly::add(Monomial m, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(m, c);
  if (!fresh && (it->second += c) == 0) terms.erase(it);
}

std::string MPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    long long c = it->second;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    c = std::llabs(c);
    std::string mono;
    for (int v = 0; v < 8; ++v) {
      const int e = exponent(it->first, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) os << c;
    else if (c == 1) os << mono;
    else os << c << "*" << mono;
    first = false;
  }
  return os.str();
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add(ma + mb, ca * cb);  // bytes never carry at these degrees
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.terms) r.add(m, c);
  return r;
}

MPoly divided_difference(const MPoly& f, int i) {
  if (i < 0 || i >= 7) throw UsageError("divided difference index out of range");
  MPoly r;
  for (const auto& [m, c] : f.terms) {
    const int p = exponent(m, i), q = exponent(m, i + 1);
    if (p == q) continue;
    const int lo = std::min(p, q), d = std::abs(p - q);
    const long long sign = p > q ? 1 : -1;
    for (int t = 0; t < d; ++t)
      r.add(with_exponent(with_exponent(m, i, lo + d - 1 - t), i + 1, lo + t), sign * c);
  }
  return r;
}

Perm trim(Perm w) {
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

int perm_length(const Perm& w) {
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) l += w[i] > w[j];
  return l;
}

Perm perm_mul(const Perm& x, const Perm& y) {
  const std::size_t n = std::max(x.size(), y.size());
  auto at = [](const Perm& p, int i) { return i <= static_cast<int>(p.size()) ? p[i - 1] : i; };
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = at(x, at(y, static_cast<int>(i) + 1));
  return r;
}

std::vector<int> bubble_letters(const Perm& w) {
  Perm x = w;
  std::vector<int> letters;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] > x[i + 1]) {
        letters.push_back(static_cast<int>(i));
        std::swap(x[i], x[i + 1]);
        again = true;
        break;
      }
  }
  return letters;
}

namespace {

void require_perm(const Perm& w) {
  Perm s = w;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) throw UsageError("not a permutation");
}

std::mutex schubert_mutex;
std::map<Perm, MPoly> schubert_memo;

MPoly schubert_rec(const Perm& w) {
  {
    std::lock_guard lock(schubert_mutex);
    if (auto it = schubert_memo.find(w); it != schubert_memo.end()) return it->second;
  }
  MPoly r;
  std::size_t asc = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) {
      asc = i;
      break;
    }
  if (asc == w.size()) {
    // w0 of S_n: the staircase monomial
    std::vector<int> e;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) e.push_back(static_cast<int>(w.size()) - 1 - i);
    r.add(make_monomial(e), 1);
  } else {
    Perm up = w;
    std::swap(up[asc], up[asc + 1]);
    r = divided_difference(schubert_rec(trim(up)), static_cast<int>(asc));
  }
  std::lock_guard lock(schubert_mutex);
  schubert_memo.emplace(w, r);
  return r;
}

} // namespace

MPoly schubert_polynomial(const Perm& w) {
  require_perm(w);
  const Perm t = trim(w);
  if (t.size() > static_cast<std::size_t>(kMaxSchubertN))
    throw ResourceError("Schubert polynomials are capped at S_" + std::to_string(kMaxSchubertN));
  return schubert_rec(t);
}

std::map<Perm, long long> schubert_expand(const MPoly& f) {
  std::map<Perm, long long> out;
  MPoly rest = f;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms.rbegin();
    int len = 0;
    for (int v = 0; v < 8; ++v)
      if (exponent(m, v) > 0) len = std::max(len, v + 1 + exponent(m, v));
    if (len > kMaxSchubertN) throw ResourceError("expansion leaves S_" + std::to_string(kMaxSchubertN));
    std::vector<int> code(std::max(len, 1), 0);
    for (int v = 0; v < len; ++v) code[v] = exponent(m, v);
    const Perm p = trim(decode_classical(code));
    out[p] += c;
    for (const auto& [mm, cc] : schubert_polynomial(p).terms) rest.add(mm, -c * cc);
  }
  return out;
}

long long structure_constant(const Perm& u, const Perm& v, const Perm& w) {
  require_perm(u);
  require_perm(v);
  require_perm(w);
  if (perm_length(u) + perm_length(v) != perm_length(w)) return 0;
  MPoly f = schubert_polynomial(u) * schubert_polynomial(v);
  for (int i : bubble_letters(w)) f = divided_difference(f, i);
  if (f.degree() > 0) throw InvariantViolation("divided difference left a non-constant");
  return f.constant();
}

long long structure_constant(const Element& u, const Element& v, const Element& w) {
  require_same_system(u, v);
  require_same_system(u, w);
  const auto sys = u.system();
  if (sys.family() != 'A') throw UsageError("Schubert structure constants are type A only");
  return structure_constant(sys.to_one_line(u), sys.to_one_line(v), sys.to_one_line(w));
}

bool StructureMatrix::upper_unitriangular() const {
  if (rows.size() != cols.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (entries[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

struct Blocks {
  std::vector<Element> rows, cols;
};

std::vector<int> linear_extension(const Interval& q, std::mt19937* rng) {
  std::vector<int> order;
  if (!rng) {
    order.resize(q.size());
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<int> indeg(q.size());
  for (int v = 0; v < q.size(); ++v) indeg[v] = static_cast<int>(q.down[v].size());
  std::vector<int> ready;
  for (int v = 0; v < q.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t at = pick(*rng);
    const int v = ready[at];
    ready.erase(ready.begin() + at);
    order.push_back(v);
    for (int hi : q.up[v])
      if (--indeg[hi] == 0) ready.push_back(hi);
  }
  return order;
}

Blocks build_blocks(const Element& w, int k, std::mt19937* rng, std::vector<std::string>& prov) {
  Blocks out;
  if (k < 0 || k > w.length()) return out;
  const auto sys = w.system();
  if (w.is_identity()) {
    out.rows.push_back(w);
    out.cols.push_back(w);
    return out;
  }
  const GenSet S = sys.all();
  std::vector<int> maximal;
  for (int s : w.support().members())
    if (is_bp(w, S.without(s))) maximal.push_back(s);
  if (maximal.empty()) throw InvariantViolation("no Grassmannian BP decomposition for " + w.to_string());
  int s = maximal.back();
  if (rng) s = maximal[std::uniform_int_distribution<std::size_t>(0, maximal.size() - 1)(*rng)];
  const GenSet J = S.without(s);
  const auto d = parabolic_decompose(w, J);

  std::optional<GenSet> I;
  for (std::uint32_t bits = 0; bits < (1u << sys.rank()) && !I; ++bits) {
    GenSet cand;
    for (int g = 0; g < sys.rank(); ++g)
      if (bits >> g & 1) cand = cand.with(g);
    if (!cand.contains(s)) continue;
    if (longest_element(sys, cand) == d.quotient * longest_element(sys, cand & J)) I = cand;
  }
  if (!I) throw InvariantViolation("w^J is not of the form w0(I)^{I∩J} for " + w.to_string());
  const Element w0I = longest_element(sys, *I);
  const Element w0IJ = longest_element(sys, *I & J);
  std::ostringstream os;
  os << "w=" << w.to_string() << " k=" << k << " s=" << s + 1 << " I=" << I->to_string();
  prov.push_back(os.str());

  const Interval q = quotient_interval(d.quotient, J);
  const auto ext = linear_extension(q, rng);
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
    const Element& y = q.elements[*it];
    const Element dual = w0I * y * w0IJ;
    if (dual.length() + y.length() != d.quotient.length())
      throw InvariantViolation("dual element has the wrong length");
    const Blocks inner = build_blocks(d.parabolic, k - dual.length(), rng, prov);
    for (const auto& u : inner.rows) out.rows.push_back(dual * u);
    for (const auto& v : inner.cols) out.cols.push_back(y * v);
  }
  return out;
}

} // namespace

StructureMatrix structure_matrix(const Element& w, int k, const MatrixOptions& opt) {
  const auto sys = w.system();
  if (sys.family() != 'A') throw UsageError("structure matrices are type A only");
  if (sys.rank() + 1 > kMaxSchubertN) throw ResourceError("structure matrices are capped at S_8");
  if (k < 0 || k > w.length()) throw UsageError("k out of range");
  if (!is_rationally_smooth(w)) throw UsageError(w.to_string() + " is not smooth");
  StructureMatrix m;
  m.w = w;
  m.k = k;
  std::mt19937 rng(opt.seed);
  Blocks b = build_blocks(w, k, opt.seed ? &rng : nullptr, m.provenance);
  m.rows = std::move(b.rows);
  m.cols = std::move(b.cols);
  m.entries.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
  for_each_index(m.rows.size(), opt.exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < m.cols.size(); ++j) m.entries[i][j] = structure_constant(m.rows[i], m.cols[j], w);
  });
  return m;
}

namespace {

// Perfect matching of rows into columns along nonzero entries, or empty.
std::vector<int> perfect_matching(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<int> col_of(n, -1), row_of(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto& self, std::size_t r) -> bool {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r][c] == 0 || seen[c]) continue;
      seen[c] = 1;
      if (row_of[c] < 0 || self(self, row_of[c])) {
        row_of[c] = static_cast<int>(r);
        col_of[r] = static_cast<int>(c);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    seen.assign(n, 0);
    if (!augment(augment, r)) return {};
  }
  return col_of;
}

} // namespace

int count_transversals(const std::vector<std::vector<long long>>& a, int cap) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return 0;
  if (n == 0) return 1;
  const auto match = perfect_matching(a);
  if (match.empty()) return 0;
  if (cap <= 1) return 1;
  // A second matching exists iff r -> r' (r may take the column of r') has a cycle.
  std::vector<int> row_of(n);
  for (std::size_t r = 0; r < n; ++r) row_of[match[r]] = static_cast<int>(r);
  std::vector<int> state(n, 0);
  auto cyclic = [&](auto& self, std::size_t r) -> bool {
    state[r] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r][c] == 0 || static_cast<int>(c) == match[r]) continue;
      const int r2 = row_of[c];
      if (state[r2] == 1 || (state[r2] == 0 && self(self, r2))) return true;
    }
    state[r] = 2;
    return false;
  };
  for (std::size_t r = 0; r < n; ++r)
    if (state[r] == 0 && cyclic(cyclic, r)) return 2;
  return 1;
}

std::vector<int> canonical_bijection(const StructureMatrix& m) {
  if (m.rows.size() != m.cols.size()) throw InvariantViolation("rank levels differ in size");
  if (count_transversals(m.entries) != 1) throw InvariantViolation("nonzero transversal is not unique");
  return perfect_matching(m.entries);
}

} // namespace coxbp
