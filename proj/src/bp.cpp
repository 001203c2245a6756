#include <coxbp/bp.hpp>
#include <coxbp/parallel.hpp>

#include <algorithm>

namespace coxbp {

bool is_bp(const Element& w, GenSet J) {
  require_subset(w.system(), J);
  auto d = parabolic_decompose(w, J);
  return (d.quotient.support() & J).subset_of(d.parabolic.left_descents());
}

bool is_bp_poincare(const Element& w, GenSet J, int cap) {
  require_subset(w.system(), J);
  auto d = parabolic_decompose(w, J);
  return poincare(w, cap) == poly_mul(poincare_quotient(d.quotient, J, cap), poincare(d.parabolic, cap));
}

std::optional<std::pair<int, int>> contained_witness(const RootSystem& rs, const Element& w, GenSet J) {
  std::vector<bool> inv = rs.inversion_set(w);
  for (auto [beta, tau] : rs.witnesses(J).pairs)
    if (!inv[beta] && inv[tau]) return std::make_pair(beta, tau);
  return std::nullopt;
}

bool jstar_bp_test(const RootSystem& rs, const Element& w, GenSet J) { return !contained_witness(rs, w, J).has_value(); }

bool jstar_bp_test(const Element& w, GenSet J) { return jstar_bp_test(RootSystem::of(w.system()), w, J); }

bool BPFamily::contains(GenSet J) const { return std::binary_search(members.begin(), members.end(), J); }

BPFamily bp_family(const Element& w, int max_rank) {
  const int r = w.system().rank();
  if (r > max_rank)
    throw ResourceError("rank " + std::to_string(r) + " exceeds the exhaustive BP family bound " + std::to_string(max_rank) +
                        (w.system().family() == 'A' ? "; use the type-A fast path" : ""));
  BPFamily f;
  f.rank = r;
  for (std::uint32_t b = 0; b < (1u << r); ++b)
    if (is_bp(w, GenSet(b))) f.members.push_back(GenSet(b));
  return f;
}

bool check_lattice(const BPFamily& f) {
  for (GenSet a : f.members)
    for (GenSet b : f.members)
      if (!f.contains(a | b) || !f.contains(a & b)) return false;
  return true;
}

GenSet closure(const BPFamily& f, GenSet A) {
  GenSet out = GenSet::all(f.rank);
  for (GenSet m : f.members)
    if (A.subset_of(m)) out = out & m;
  return out;
}

GenSet closure(const Element& w, GenSet A) { return closure(bp_family(w), A); }

// ------------------------------------------------------------------ posets

int BPPoset::block_of(int s) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].contains(s)) return static_cast<int>(b);
  return -1;
}

bool BPPoset::singleton_blocks() const {
  return std::all_of(blocks.begin(), blocks.end(), [](GenSet b) { return b.size() == 1; });
}

std::vector<GenSet> BPPoset::ideals() const {
  const int nb = static_cast<int>(blocks.size());
  std::vector<GenSet> out;
  for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
    bool ideal = true;
    GenSet u;
    for (int b = 0; b < nb && ideal; ++b) {
      if (!(mask >> b & 1)) continue;
      u = u | blocks[b];
      for (int c = 0; c < nb; ++c)
        if (leq[c][b] && !(mask >> c & 1)) ideal = false;
    }
    if (ideal) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BPPoset poset_from_closures(std::vector<GenSet> closures) {
  BPPoset p;
  p.rank = static_cast<int>(closures.size());
  p.closures = std::move(closures);
  std::vector<bool> placed(p.rank, false);
  for (int i = 0; i < p.rank; ++i) {
    if (placed[i]) continue;
    GenSet blk;
    for (int j = i; j < p.rank; ++j)
      if (p.closures[i].contains(j) && p.closures[j].contains(i)) {
        blk = blk.with(j);
        placed[j] = true;
      }
    p.blocks.push_back(blk);
  }
  const int nb = static_cast<int>(p.blocks.size());
  p.leq.assign(nb, std::vector<bool>(nb, false));
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) p.leq[a][b] = p.closures[p.blocks[b].first()].contains(p.blocks[a].first());
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < nb && cover; ++c)
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

BPPoset bp_poset(const Element& w, int max_rank) {
  BPFamily f = bp_family(w, max_rank);
  std::vector<GenSet> cl;
  for (int i = 0; i < f.rank; ++i) cl.push_back(closure(f, GenSet::single(i)));
  return poset_from_closures(std::move(cl));
}

// ------------------------------------------------------------------ type A

std::optional<PatternHit> find_bad_pattern(const std::vector<int>& w, int a, int b) {
  const int n = static_cast<int>(w.size());
  auto v = [&](int i) { return w[i - 1]; };
  // 23 1 with the first two letters inside [a,b]
  for (int i1 = a; i1 <= b; ++i1)
    for (int i2 = i1 + 1; i2 <= b; ++i2) {
      if (v(i1) > v(i2)) continue;
      for (int i3 = b + 1; i3 <= n; ++i3)
        if (v(i3) < v(i1)) return PatternHit{BadPattern::p231, {i1, i2, i3}};
    }
  // 3 12 with the last two letters inside [a,b]
  for (int i1 = 1; i1 < a; ++i1)
    for (int i2 = a; i2 <= b; ++i2)
      for (int i3 = i2 + 1; i3 <= b; ++i3)
        if (v(i2) < v(i3) && v(i3) < v(i1)) return PatternHit{BadPattern::p312, {i1, i2, i3}};
  // 3 14 2 with the middle letters inside [a,b]
  for (int i1 = 1; i1 < a; ++i1)
    for (int i2 = a; i2 <= b; ++i2) {
      if (v(i2) > v(i1)) continue;
      for (int i3 = i2 + 1; i3 <= b; ++i3) {
        if (v(i3) < v(i1)) continue;
        for (int i4 = b + 1; i4 <= n; ++i4)
          if (v(i2) < v(i4) && v(i4) < v(i1)) return PatternHit{BadPattern::p3142, {i1, i2, i3, i4}};
      }
    }
  return std::nullopt;
}

bool typeA_is_bp(const std::vector<int>& perm, int a, int b) {
  const int n = static_cast<int>(perm.size());
  if (a < 1 || b > n || a >= b) throw UsageError("need 1 <= a < b <= n");
  return !find_bad_pattern(perm, a, b).has_value();
}

GenSet typeA_closure(const std::vector<int>& perm, GenSet A) {
  if (A.empty()) return A;
  const int n = static_cast<int>(perm.size());
  if (A.last() >= n - 1) throw UsageError("generator out of range");
  if (A.last() - A.first() + 1 != A.size()) throw UsageError("type-A closure needs a connected interval of generators");
  int a = A.first() + 1, b = A.last() + 2;
  while (auto hit = find_bad_pattern(perm, a, b)) {
    a = std::min(a, hit->indices.front());
    b = std::max(b, hit->indices.back());
  }
  GenSet out;
  for (int g = a - 1; g <= b - 2; ++g) out = out.with(g);
  return out;
}

BPPoset typeA_bp_poset(const std::vector<int>& perm) {
  const int r = static_cast<int>(perm.size()) - 1;
  std::vector<GenSet> cl;
  for (int i = 0; i < r; ++i) cl.push_back(typeA_closure(perm, GenSet::single(i)));
  return poset_from_closures(std::move(cl));
}

BPPoset typeA_bp_poset(const Element& w) {
  if (w.system().family() != 'A') throw UsageError("type-A fast path needs a type A element");
  return typeA_bp_poset(w.system().to_one_line(w));
}

std::optional<int> grassmannian_bp_exists(const Element& w) {
  const GenSet S = w.system().all();
  for (int s = 0; s < w.system().rank(); ++s)
    if (is_bp(w, S.without(s))) return s;
  return std::nullopt;
}

std::vector<Element> linear_extension_factorization(const Element& w, const std::vector<int>& ext) {
  const int r = w.system().rank();
  std::vector<int> sorted = ext;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < r; ++i)
    if (static_cast<int>(sorted.size()) != r || sorted[i] != i) throw UsageError("extension must list every generator once");
  BPPoset p = w.system().family() == 'A' ? typeA_bp_poset(w) : bp_poset(w);
  if (!p.singleton_blocks()) throw UsageError("BP poset has non-singleton blocks");
  GenSet remaining = w.system().all();
  Element cur = w;
  std::vector<Element> factors;
  for (int a : ext) {
    for (int j : remaining.members())
      if (j != a && p.preposet_leq(a, j)) throw UsageError("not a linear extension: generator " + std::to_string(a + 1) +
                                                           " lies below " + std::to_string(j + 1));
    GenSet next = remaining.without(a);
    if (!is_bp(cur, next)) throw ConstructionError("step is not a BP decomposition");
    auto d = parabolic_decompose(cur, next);
    factors.push_back(d.quotient);
    cur = d.parabolic;
    remaining = next;
  }
  Element prod = w.system().identity();
  int len = 0;
  for (const Element& f : factors) {
    prod = prod * f;
    len += f.length();
  }
  if (!(prod == w) || len != w.length()) throw ConstructionError("factorization is not length-additive");
  return factors;
}

std::vector<BPFamily> bp_families(std::span<const Element> ws, Exec exec) {
  std::vector<BPFamily> out(ws.size());
  for_each_index(ws.size(), exec, [&](std::size_t i) { out[i] = bp_family(ws[i]); });
  return out;
}

OracleTally compare_bp_tests(std::span<const Element> ws, const RootSystem* rs, Exec exec) {
  std::vector<OracleTally> per(ws.size());
  for_each_index(ws.size(), exec, [&](std::size_t i) {
    const Element& w = ws[i];
    const int r = w.system().rank();
    const Poly pw = poincare(w);
    for (std::uint32_t b = 0; b < (1u << r); ++b) {
      GenSet J(b);
      auto d = parabolic_decompose(w, J);
      bool def = (d.quotient.support() & J).subset_of(d.parabolic.left_descents());
      bool poin = pw == poly_mul(poincare_quotient(d.quotient, J), poincare(d.parabolic));
      bool star = rs ? jstar_bp_test(*rs, w, J) : def;
      ++per[i].cases;
      if (def != poin || def != star) {
        ++per[i].disagreements;
        if (per[i].examples.size() < 3)
          per[i].examples.push_back("w=" + w.to_string() + " J=" + J.to_string() + " def=" + std::to_string(def) +
                                    " poincare=" + std::to_string(poin) + " jstar=" + std::to_string(star));
      }
    }
  });
  OracleTally t;
  for (const auto& p : per) {
    t.cases += p.cases;
    t.disagreements += p.disagreements;
    for (const auto& e : p.examples)
      if (t.examples.size() < 5) t.examples.push_back(e);
  }
  return t;
}

} // namespace coxbp
