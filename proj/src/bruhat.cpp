#include <coxbp/bruhat.hpp>

#include <algorithm>
#include <unordered_set>

namespace coxbp {

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly q_integer(int d) { return Poly(std::max(d, 0), 1); }

bool is_palindromic(const Poly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != p[p.size() - 1 - i]) return false;
  return true;
}

std::string poly_to_string(const Poly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || p[i] != 1) s += std::to_string(p[i]);
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

namespace {

std::vector<Element> lower_elements(const Element& w, int cap) {
  if (w.length() > cap)
    throw ResourceError("interval below an element of length " + std::to_string(w.length()) + " exceeds cap " +
                        std::to_string(cap));
  // Subword products of the normal form, deduplicated after each prefix letter.
  std::vector<Element> cur{w.system().identity()};
  std::unordered_set<Element, ElementHash> seen(cur.begin(), cur.end());
  const Word& rw = w.word();
  for (std::size_t k = rw.size(); k-- > 0;) {
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i) {
      Element x = cur[i].left_mul(rw[k]);
      if (seen.insert(x).second) cur.push_back(std::move(x));
    }
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

void fill_covers(Interval& iv) {
  const int n = iv.size();
  iv.up.assign(n, {});
  iv.down.assign(n, {});
  for (int v = 0; v < n; ++v) {
    const Word& rw = iv.elements[v].word();
    std::vector<int> lows;
    for (std::size_t del = 0; del < rw.size(); ++del) {
      Word sub;
      sub.reserve(rw.size() - 1);
      for (std::size_t i = 0; i < rw.size(); ++i)
        if (i != del) sub.push_back(rw[i]);
      Element u = iv.top.system().element(sub);
      if (u.length() + 1 != iv.elements[v].length()) continue;
      int ui = iv.find(u);
      if (ui >= 0) lows.push_back(ui);
    }
    std::sort(lows.begin(), lows.end());
    lows.erase(std::unique(lows.begin(), lows.end()), lows.end());
    for (int u : lows) {
      iv.covers.emplace_back(u, v);
      iv.up[u].push_back(v);
      iv.down[v].push_back(u);
    }
  }
  std::sort(iv.covers.begin(), iv.covers.end());
}

Interval make_interval(const Element& w, GenSet J, std::vector<Element> elems, const IntervalOptions& opt) {
  Interval iv;
  iv.top = w;
  iv.J = J;
  iv.elements = std::move(elems);
  for (int i = 0; i < iv.size(); ++i) iv.index.emplace(iv.elements[i], i);
  if (opt.covers) fill_covers(iv);
  return iv;
}

} // namespace

std::vector<int> Interval::rank_sizes() const {
  std::vector<int> out(top.length() + 1, 0);
  for (const Element& e : elements) ++out[e.length()];
  return out;
}

Poly Interval::poincare() const {
  Poly p(top.length() + 1, 0);
  for (const Element& e : elements) ++p[e.length()];
  return p;
}

Interval bruhat_interval(const Element& w, const IntervalOptions& opt) {
  return make_interval(w, GenSet{}, lower_elements(w, opt.cap_length), opt);
}

Interval quotient_interval(const Element& w, GenSet J, const IntervalOptions& opt) {
  require_subset(w.system(), J);
  if (!in_right_quotient(w, J)) throw UsageError("element " + w.to_string() + " is not in W^J for J=" + J.to_string());
  std::vector<Element> all = lower_elements(w, opt.cap_length);
  std::vector<Element> kept;
  for (Element& e : all)
    if (in_right_quotient(e, J)) kept.push_back(std::move(e));
  return make_interval(w, J, std::move(kept), opt);
}

Poly poincare(const Element& w, int cap) { return bruhat_interval(w, {cap, false}).poincare(); }

Poly poincare_quotient(const Element& w, GenSet J, int cap) { return quotient_interval(w, J, {cap, false}).poincare(); }

bool is_rationally_smooth(const Element& w, int cap) { return is_palindromic(poincare(w, cap)); }

bool is_J_rationally_smooth(const Element& w, GenSet J, int cap) { return is_palindromic(poincare_quotient(w, J, cap)); }

} // namespace coxbp
