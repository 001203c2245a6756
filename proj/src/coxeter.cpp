#include <coxbp/coxeter.hpp>
#include <coxbp/detail/system_data.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

namespace coxbp {

using detail::SystemData;

namespace {

int inner(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<int> unit(int dim, int i, int c = 1) {
  std::vector<int> v(dim, 0);
  v[i] = c;
  return v;
}

// Simple roots in ambient coordinates. E and F4 coordinates are doubled.
std::vector<std::vector<int>> ambient_simple(char family, int n) {
  std::vector<std::vector<int>> out;
  auto diff = [](int dim, int i, int j) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
  };
  switch (family) {
  case 'A':
    for (int i = 0; i < n; ++i) out.push_back(diff(n + 1, i, i + 1));
    break;
  case 'B':
  case 'C':
  case 'D':
    for (int i = 0; i + 1 < n; ++i) out.push_back(diff(n, i, i + 1));
    if (family == 'B') out.push_back(unit(n, n - 1));
    if (family == 'C') out.push_back(unit(n, n - 1, 2));
    if (family == 'D') {
      std::vector<int> v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      out.push_back(v);
    }
    break;
  case 'E': {
    // Bourbaki E8 simple roots, doubled.
    std::vector<std::vector<int>> b(9);
    b[1] = {1, -1, -1, -1, -1, -1, -1, 1};
    b[2] = {2, 2, 0, 0, 0, 0, 0, 0};
    for (int k = 3; k <= 8; ++k) {
      std::vector<int> v(8, 0);
      v[k - 2] = 2;
      v[k - 3] = -2;
      b[k] = v;
    }
    std::vector<int> order;
    if (n == 6) order = {1, 3, 4, 5, 6, 2};
    else if (n == 7) order = {1, 3, 4, 5, 6, 7, 2};
    else order = {8, 7, 6, 5, 4, 3, 1, 2};
    for (int k : order) out.push_back(b[k]);
    break;
  }
  case 'F':
    out = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    break;
  case 'G':
    out = {{1, -1, 0}, {-2, 1, 1}};
    break;
  default:
    break;
  }
  return out;
}

int m_from_product(int p) {
  switch (p) {
  case 0: return 2;
  case 1: return 3;
  case 2: return 4;
  case 3: return 6;
  default: return 0;
  }
}

bool positive_definite(const std::vector<int>& m, int rank, GenSet J) {
  std::vector<int> idx = J.members();
  const int k = static_cast<int>(idx.size());
  std::vector<double> a(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int mm = m[idx[i] * rank + idx[j]];
      a[i * k + j] = (i == j) ? 1.0 : (mm == 0 ? -1.0 : -std::cos(std::numbers::pi / mm));
    }
  for (int j = 0; j < k; ++j) {
    double d = a[j * k + j];
    for (int p = 0; p < j; ++p) d -= a[j * k + p] * a[j * k + p];
    if (d <= 1e-9) return false;
    d = std::sqrt(d);
    a[j * k + j] = d;
    for (int i = j + 1; i < k; ++i) {
      double v = a[i * k + j];
      for (int p = 0; p < j; ++p) v -= a[i * k + p] * a[j * k + p];
      a[i * k + j] = v / d;
    }
  }
  return true;
}

void fill_labels(SystemData& d) {
  d.labels.clear();
  for (int i = 0; i < d.rank; ++i) d.labels.push_back(std::to_string(i + 1));
}

void finish(SystemData& d) {
  d.finite = positive_definite(d.m, d.rank, GenSet::all(d.rank));
  if (d.dihedral) {
    d.dihedral_nf.assign(2 * d.dm, Word{});
    std::vector<bool> seen(2 * d.dm, false);
    for (int k = 0; k <= d.dm; ++k) {
      for (int start = 0; start < 2; ++start) {
        Word w;
        for (int i = 0; i < k; ++i) w.push_back(static_cast<Gen>((start + i) % 2));
        int key = d.dihedral_key(w);
        if (!seen[key]) {
          seen[key] = true;
          d.dihedral_nf[key] = w;
        }
      }
    }
  }
}

std::shared_ptr<SystemData> crystallographic(char family, int n, std::string name) {
  auto d = std::make_shared<SystemData>();
  d->name = std::move(name);
  d->family = family;
  d->type_rank = n;
  d->rank = n;
  d->crystallographic = true;
  d->ambient = ambient_simple(family, n);
  d->m.assign(n * n, 1);
  d->n.assign(n * n, Golden(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int num = 2 * inner(d->ambient[s], d->ambient[t]);
      int den = inner(d->ambient[s], d->ambient[s]);
      if (num % den != 0) throw InvariantViolation("non-integral Cartan entry");
      d->n[s * n + t] = Golden(num / den);
    }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) d->m[s * n + t] = m_from_product(static_cast<int>(d->n[s * n + t].a * d->n[t * n + s].a));
  fill_labels(*d);
  finish(*d);
  return d;
}

// Realisation from a Coxeter matrix; entries in {2,3,4,5,6,inf}.
std::shared_ptr<SystemData> from_coxeter(const std::vector<int>& m, int rank, std::string name, char family, int type_rank) {
  auto d = std::make_shared<SystemData>();
  d->name = std::move(name);
  d->family = family;
  d->type_rank = type_rank;
  d->rank = rank;
  d->m = m;
  d->n.assign(rank * rank, Golden(0));
  bool cryst = true;
  for (int s = 0; s < rank; ++s) {
    d->n[s * rank + s] = Golden(2);
    for (int t = s + 1; t < rank; ++t) {
      int mm = m[s * rank + t];
      Golden a, b;
      switch (mm) {
      case 2: a = b = Golden(0); break;
      case 3: a = b = Golden(-1); break;
      case 4: a = Golden(-1); b = Golden(-2); break;
      case 5: a = b = -Golden::phi(); cryst = false; break;
      case 6: a = Golden(-1); b = Golden(-3); break;
      case 0: a = b = Golden(-2); break;
      default:
        throw UnsupportedError("Coxeter matrix entry " + std::to_string(mm) + " not supported in rank >= 3");
      }
      d->n[s * rank + t] = a;
      d->n[t * rank + s] = b;
    }
  }
  d->crystallographic = cryst;
  fill_labels(*d);
  finish(*d);
  return d;
}

void set_m(std::vector<int>& m, int rank, int i, int j, int v) {
  m[i * rank + j] = v;
  m[j * rank + i] = v;
}

} // namespace

int SystemData::dihedral_key(std::span<const Gen> word) const {
  int f = 0, c = 0;
  for (Gen g : word) {
    // each generator acts as the reflection x -> g - x on Z/m
    int nc = f ? c - g : c + g;
    f = 1 - f;
    c = ((nc % dm) + dm) % dm;
  }
  return f * dm + c;
}

Word SystemData::reduce(std::span<const Gen> word, GenSet* ld) const {
  for (Gen g : word)
    if (g >= rank) throw UsageError("generator index out of range");
  if (dihedral) {
    const Word& nf = dihedral_nf[dihedral_key(word)];
    if (ld) {
      GenSet out;
      for (int s = 0; s < 2; ++s) {
        Word sw{static_cast<Gen>(s)};
        sw.insert(sw.end(), nf.begin(), nf.end());
        if (dihedral_nf[dihedral_key(sw)].size() < nf.size()) out = out.with(s);
      }
      *ld = out;
    }
    return nf;
  }
  std::vector<Golden> x = tits(word);
  Word out;
  bool first = true;
  while (true) {
    int s = -1;
    GenSet neg;
    for (int t = 0; t < rank; ++t)
      if (x[t].sign() < 0) {
        if (s < 0) s = t;
        if (!first) break;
        neg = neg.with(t);
      }
    if (first && ld) *ld = neg;
    first = false;
    if (s < 0) break;
    out.push_back(static_cast<Gen>(s));
    apply_left(x, s);
  }
  return out;
}

GenSet SystemData::right_descents(const Word& nf) const {
  if (dihedral) {
    GenSet out;
    for (int s = 0; s < 2; ++s) {
      Word ws = nf;
      ws.push_back(static_cast<Gen>(s));
      if (dihedral_nf[dihedral_key(ws)].size() < nf.size()) out = out.with(s);
    }
    return out;
  }
  return negatives(tits_inverse(nf));
}

Word SystemData::right_strip(const Word& nf, GenSet J) const {
  Word collected;
  if (dihedral) {
    Word cur = nf;
    while (true) {
      GenSet d = right_descents(cur) & J;
      if (d.empty()) break;
      cur.push_back(static_cast<Gen>(d.first()));
      collected.push_back(static_cast<Gen>(d.first()));
      cur = reduce(cur);
    }
    return collected;
  }
  std::vector<Golden> x = tits_inverse(nf);
  while (true) {
    int s = -1;
    for (int t : J.members())
      if (x[t].sign() < 0) {
        s = t;
        break;
      }
    if (s < 0) break;
    collected.push_back(static_cast<Gen>(s));
    apply_left(x, s);
  }
  return collected;
}

bool SystemData::leq(const Word& u, const Word& w) const {
  if (u.size() > w.size()) return false;
  if (dihedral) return u.size() < w.size() || u == w;
  std::vector<Golden> x = tits(u);
  std::size_t lu = u.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (lu == 0) return true;
    if (lu > w.size() - i) return false;
    const int s = w[i];
    if (x[s].sign() < 0) {
      apply_left(x, s);
      --lu;
    }
  }
  return lu == 0;
}

// ---------------------------------------------------------------- system

CoxeterSystem CoxeterSystem::build(std::string_view type, int n) {
  std::string t(type);
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  auto bad = [&]() {
    return UsageError("invalid rank " + std::to_string(n) + " for type " + std::string(type));
  };
  if (t == "A") {
    if (n < 1 || n > 31) throw bad();
    return CoxeterSystem(crystallographic('A', n, "A" + std::to_string(n)));
  }
  if (t == "B" || t == "C") {
    if (n < 2 || n > 32) throw bad();
    return CoxeterSystem(crystallographic(t[0], n, t + std::to_string(n)));
  }
  if (t == "D") {
    if (n < 4 || n > 32) throw bad();
    return CoxeterSystem(crystallographic('D', n, "D" + std::to_string(n)));
  }
  if (t == "E") {
    if (n < 6 || n > 8) throw bad();
    return CoxeterSystem(crystallographic('E', n, "E" + std::to_string(n)));
  }
  if (t == "F") {
    if (n != 4) throw bad();
    return CoxeterSystem(crystallographic('F', 4, "F4"));
  }
  if (t == "G") {
    if (n != 2) throw bad();
    return CoxeterSystem(crystallographic('G', 2, "G2"));
  }
  if (t == "H") {
    if (n != 3 && n != 4) throw bad();
    std::vector<int> m(n * n, 2);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    for (int i = 0; i + 1 < n; ++i) set_m(m, n, i, i + 1, 3);
    if (n == 3) set_m(m, n, 0, 1, 5);
    else set_m(m, n, 2, 3, 5);
    return CoxeterSystem(from_coxeter(m, n, "H" + std::to_string(n), 'H', n));
  }
  if (t == "I") {
    if (n < 2) throw bad();
    std::vector<int> m{1, n, n, 1};
    std::string name = "I2(" + std::to_string(n) + ")";
    if (n <= 6) return CoxeterSystem(from_coxeter(m, 2, name, 'I', n));
    if (n > 1'000'000) throw ResourceError("dihedral order too large");
    auto d = std::make_shared<SystemData>();
    d->name = name;
    d->family = 'I';
    d->type_rank = n;
    d->rank = 2;
    d->m = m;
    d->dihedral = true;
    d->dm = n;
    fill_labels(*d);
    finish(*d);
    return CoxeterSystem(d);
  }
  if (t == "AFFINEC") {
    if (n != 2) throw bad();
    std::vector<int> m{1, 4, 2, 4, 1, 4, 2, 4, 1};
    auto d = from_coxeter(m, 3, "affineC2", 'X', 2);
    d->labels = {"r", "s", "t"};
    d->letter_labels = true;
    return CoxeterSystem(d);
  }
  throw UsageError("unknown Coxeter type '" + std::string(type) + "'");
}

CoxeterSystem CoxeterSystem::parse(std::string_view tag) {
  std::string t(tag);
  if (t.rfind("affineC", 0) == 0 || t.rfind("AffineC", 0) == 0) return build("affineC", std::stoi(t.substr(7)));
  if (t.size() >= 2 && (t[0] == 'I' || t[0] == 'i') && t[1] == '2' && t.size() > 2) {
    auto open = t.find('(');
    auto close = t.find(')');
    if (open == std::string::npos || close == std::string::npos) throw UsageError("expected I2(m)");
    return build("I", std::stoi(t.substr(open + 1, close - open - 1)));
  }
  if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0]))) throw UsageError("bad type tag '" + t + "'");
  try {
    return build(t.substr(0, 1), std::stoi(t.substr(1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("bad type tag '" + t + "'");
  }
}

CoxeterSystem CoxeterSystem::from_matrix(const std::vector<std::vector<int>>& mm, std::string name) {
  const int r = static_cast<int>(mm.size());
  if (r < 1 || r > kMaxRank) throw UsageError("bad Coxeter matrix size");
  std::vector<int> m(r * r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(mm[i].size()) != r) throw UsageError("Coxeter matrix not square");
    for (int j = 0; j < r; ++j) {
      int v = mm[i][j];
      if (i == j && v != 1) throw UsageError("Coxeter matrix diagonal must be 1");
      if (i != j && (v == 1 || v < 0 || mm[j][i] != v)) throw UsageError("invalid Coxeter matrix entry");
      m[i * r + j] = v;
    }
  }
  if (r == 2 && mm[0][1] > 6) {
    CoxeterSystem s = build("I", mm[0][1]);
    auto d = std::make_shared<SystemData>(*s.data_);
    d->name = std::move(name);
    d->family = 'M';
    return CoxeterSystem(d);
  }
  return CoxeterSystem(from_coxeter(m, r, std::move(name), 'M', r));
}

const std::string& CoxeterSystem::name() const { return data_->name; }
char CoxeterSystem::family() const { return data_->family; }
int CoxeterSystem::rank() const { return data_->rank; }
int CoxeterSystem::m(int s, int t) const { return data_->mij(s, t); }
const std::string& CoxeterSystem::label(int s) const { return data_->labels.at(s); }
bool CoxeterSystem::is_finite() const { return data_->finite; }
bool CoxeterSystem::is_crystallographic() const { return data_->crystallographic; }
const std::vector<Golden>& CoxeterSystem::cartan() const { return data_->n; }

std::vector<std::vector<int>> CoxeterSystem::coxeter_matrix() const {
  std::vector<std::vector<int>> out(rank(), std::vector<int>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[i][j] = m(i, j);
  return out;
}

bool CoxeterSystem::parabolic_is_finite(GenSet J) const {
  require_subset(*this, J);
  return positive_definite(data_->m, rank(), J);
}

std::vector<GenSet> CoxeterSystem::components(GenSet J) const {
  std::vector<GenSet> out;
  GenSet left = J;
  while (!left.empty()) {
    GenSet comp = GenSet::single(left.first());
    bool grew = true;
    while (grew) {
      grew = false;
      for (int s : comp.members())
        for (int t : left.members())
          if (!comp.contains(t) && m(s, t) != 2) {
            comp = comp.with(t);
            grew = true;
          }
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool CoxeterSystem::connected(GenSet J) const { return components(J).size() <= 1; }

bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->name == b.data_->name && a.data_->m == b.data_->m;
}

Element CoxeterSystem::identity() const { return make_element(data_, {}); }

Element CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank()) throw UsageError("generator index out of range");
  Gen g = static_cast<Gen>(s);
  return make_element(data_, std::span<const Gen>(&g, 1));
}

Element CoxeterSystem::element(std::span<const Gen> word) const { return make_element(data_, word); }

Element CoxeterSystem::element(std::initializer_list<int> word) const {
  Word w;
  for (int g : word) {
    if (g < 1 || g > rank()) throw UsageError("generator index out of range");
    w.push_back(static_cast<Gen>(g - 1));
  }
  return element(w);
}

// ---------------------------------------------------------------- one-line

bool CoxeterSystem::has_one_line() const {
  char f = family();
  return f == 'A' || f == 'B' || f == 'C' || f == 'D';
}

namespace {

int one_line_size(const SystemData& d) { return d.family == 'A' ? d.rank + 1 : d.rank; }

void one_line_right_mul(const SystemData& d, std::vector<int>& v, int s) {
  const int n = static_cast<int>(v.size());
  if (d.family == 'A' || s < d.rank - 1) {
    std::swap(v[s], v[s + 1]);
    return;
  }
  if (d.family == 'D') {
    int a = v[n - 2], b = v[n - 1];
    v[n - 2] = -b;
    v[n - 1] = -a;
  } else {
    v[n - 1] = -v[n - 1];
  }
}

// Sign of w(alpha_s), read off the first nonzero ambient coordinate.
bool one_line_descent(const SystemData& d, const std::vector<int>& v, int s) {
  const int n = static_cast<int>(v.size());
  std::map<int, int> coeff;
  auto add = [&](int signed_img, int c) {
    int idx = std::abs(signed_img);
    coeff[idx] += signed_img > 0 ? c : -c;
  };
  if (d.family == 'A' || s < d.rank - 1) {
    add(v[s], 1);
    add(v[s + 1], -1);
  } else if (d.family == 'D') {
    add(v[n - 2], 1);
    add(v[n - 1], 1);
  } else {
    add(v[n - 1], 1);
  }
  for (auto [idx, c] : coeff)
    if (c != 0) return c < 0;
  throw InvariantViolation("zero root image");
}

} // namespace

Element CoxeterSystem::from_one_line(const std::vector<int>& images) const {
  if (!has_one_line()) throw UnsupportedError("one-line notation only for types A, B, C, D");
  const SystemData& d = *data_;
  const int n = one_line_size(d);
  if (static_cast<int>(images.size()) != n)
    throw UsageError("one-line notation needs " + std::to_string(n) + " entries");
  std::vector<bool> seen(n + 1, false);
  int negs = 0;
  for (int x : images) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) throw UsageError("not a (signed) permutation");
    if (x < 0) {
      if (d.family == 'A') throw UsageError("negative entry in type A permutation");
      ++negs;
    }
    seen[a] = true;
  }
  if (d.family == 'D' && negs % 2) throw UsageError("type D needs an even number of sign changes");
  std::vector<int> v = images;
  Word rec;
  while (true) {
    int s = -1;
    for (int t = 0; t < d.rank; ++t)
      if (one_line_descent(d, v, t)) {
        s = t;
        break;
      }
    if (s < 0) break;
    one_line_right_mul(d, v, s);
    rec.push_back(static_cast<Gen>(s));
  }
  std::reverse(rec.begin(), rec.end());
  return element(rec);
}

std::vector<int> CoxeterSystem::to_one_line(const Element& w) const {
  if (!has_one_line()) throw UnsupportedError("one-line notation only for types A, B, C, D");
  if (w.sys_ptr() != data_.get() && !(w.system() == *this)) throw UsageError("element from another system");
  const int n = one_line_size(*data_);
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (Gen g : w.word()) one_line_right_mul(*data_, v, g);
  return v;
}

Element CoxeterSystem::parse_element(std::string_view text, std::string_view format) const {
  std::string t(text);
  std::string fmt(format);
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };
  t = trim(t);
  auto split_ints = [&](const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
        if (!cur.empty()) out.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
        cur += ch;
      } else {
        throw UsageError("unexpected character '" + std::string(1, ch) + "' in element");
      }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
  };
  if (fmt == "auto") {
    if (t.empty() || t == "e") fmt = "word";
    else if (std::isalpha(static_cast<unsigned char>(t[0]))) fmt = "letters";
    else if (has_one_line() && (t.find_first_of(", []-") != std::string::npos ||
                                static_cast<int>(t.size()) == one_line_size(*data_)))
      fmt = "oneline";
    else fmt = "word";
  }
  if (fmt == "letters") {
    Word w;
    if (t == "e") return identity();
    for (char ch : t) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') continue;
      int found = -1;
      for (int s = 0; s < rank(); ++s)
        if (label(s) == std::string(1, ch)) found = s;
      if (found < 0) throw UsageError("unknown generator label '" + std::string(1, ch) + "'");
      w.push_back(static_cast<Gen>(found));
    }
    return element(w);
  }
  if (fmt == "word") {
    if (t.empty() || t == "e") return identity();
    Word w;
    const bool compact = rank() <= 9 && t.find_first_of(", []") == std::string::npos;
    std::vector<int> gens;
    if (compact)
      for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw UsageError("bad reduced word");
        gens.push_back(ch - '0');
      }
    else gens = split_ints(t);
    for (int g : gens) {
      if (g < 1 || g > rank()) throw UsageError("generator " + std::to_string(g) + " out of range");
      w.push_back(static_cast<Gen>(g - 1));
    }
    return element(w);
  }
  if (fmt == "oneline") {
    std::vector<int> v;
    bool has_sep = t.find_first_of(", []") != std::string::npos || t.find('-') != std::string::npos;
    if (has_sep) v = split_ints(t);
    else
      for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw UsageError("bad one-line notation");
        v.push_back(ch - '0');
      }
    return from_one_line(v);
  }
  throw UsageError("unknown element format '" + fmt + "'");
}

// ---------------------------------------------------------------- elements

Element make_element(const std::shared_ptr<const SystemData>& sys, std::span<const Gen> word) {
  Element e;
  e.sys_ = sys;
  e.word_ = sys->reduce(word, &e.ld_);
  e.rd_ = sys->right_descents(e.word_);
  for (Gen g : e.word_) e.supp_ = e.supp_.with(g);
  return e;
}

Element Element::inverse() const {
  Word w(word_.rbegin(), word_.rend());
  return make_element(sys_, w);
}

Element Element::right_mul(int s) const {
  if (s < 0 || s >= sys_->rank) throw UsageError("generator index out of range");
  Word w = word_;
  w.push_back(static_cast<Gen>(s));
  return make_element(sys_, w);
}

Element Element::left_mul(int s) const {
  if (s < 0 || s >= sys_->rank) throw UsageError("generator index out of range");
  Word w;
  w.reserve(word_.size() + 1);
  w.push_back(static_cast<Gen>(s));
  w.insert(w.end(), word_.begin(), word_.end());
  return make_element(sys_, w);
}

Element Element::operator*(const Element& o) const {
  require_same_system(*this, o);
  Word w = word_;
  w.insert(w.end(), o.word_.begin(), o.word_.end());
  return make_element(sys_, w);
}

std::vector<int> Element::word_one_based() const {
  std::vector<int> out;
  for (Gen g : word_) out.push_back(g + 1);
  return out;
}

std::string Element::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  if (sys_->letter_labels) {
    for (Gen g : word_) s += sys_->labels[g];
    return s;
  }
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word_[i] + 1);
  }
  return s;
}

void require_same_system(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) throw UsageError("uninitialised element");
  if (a.sys_ptr() == b.sys_ptr()) return;
  if (!(a.system() == b.system())) throw UsageError("elements belong to different Coxeter systems");
}

void require_subset(const CoxeterSystem& sys, GenSet J) {
  if (!J.subset_of(sys.all())) throw UsageError("generator set " + J.to_string() + " not contained in S");
}

ParabolicDecomposition parabolic_decompose(const Element& w, GenSet J) {
  CoxeterSystem sys = w.system();
  require_subset(sys, J);
  Word c = w.sys_ptr()->right_strip(w.word(), J);
  Word q = w.word();
  q.insert(q.end(), c.begin(), c.end());
  Word p(c.rbegin(), c.rend());
  return {sys.element(q), sys.element(p)};
}

LeftParabolicDecomposition left_parabolic_decompose(const Element& w, GenSet J) {
  ParabolicDecomposition r = parabolic_decompose(w.inverse(), J);
  return {r.parabolic.inverse(), r.quotient.inverse()};
}

bool in_right_quotient(const Element& w, GenSet J) { return (w.right_descents() & J).empty(); }
bool in_left_quotient(const Element& w, GenSet J) { return (w.left_descents() & J).empty(); }

Element longest_element(const CoxeterSystem& sys, GenSet J) {
  if (!sys.parabolic_is_finite(J)) throw UnsupportedError("parabolic subgroup " + J.to_string() + " is infinite");
  Word w;
  const auto& d = *sys.data();
  while (true) {
    Word nf = d.reduce(w);
    GenSet rd = d.right_descents(nf);
    GenSet asc = J - rd;
    if (asc.empty()) return sys.element(nf);
    nf.push_back(static_cast<Gen>(asc.first()));
    w = std::move(nf);
  }
}

Element longest_element(const CoxeterSystem& sys) { return longest_element(sys, sys.all()); }

std::vector<Element> enumerate_group(const CoxeterSystem& sys, std::size_t max_size) {
  if (!sys.is_finite()) throw UnsupportedError(sys.name() + " is infinite");
  std::vector<Element> out{sys.identity()};
  std::unordered_set<Element, ElementHash> seen{out[0]};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s = 0; s < sys.rank(); ++s) {
      if (out[i].right_descents().contains(s)) continue;
      Element ws = out[i].right_mul(s);
      if (seen.insert(ws).second) {
        out.push_back(ws);
        if (out.size() > max_size) throw ResourceError("group larger than " + std::to_string(max_size));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> elements_up_to_length(const CoxeterSystem& sys, int max_length) {
  std::vector<Element> out{sys.identity()};
  std::unordered_set<Element, ElementHash> seen{out[0]};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() >= max_length) continue;
    for (int s = 0; s < sys.rank(); ++s) {
      if (out[i].right_descents().contains(s)) continue;
      Element ws = out[i].right_mul(s);
      if (seen.insert(ws).second) out.push_back(ws);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Element& u, const Element& w) {
  require_same_system(u, w);
  return u.sys_ptr()->leq(u.word(), w.word());
}

} // namespace coxbp
