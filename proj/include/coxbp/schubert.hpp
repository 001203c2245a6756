#pragma once

#include <coxbp/coxeter.hpp>
#include <coxbp/exec.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coxbp {

inline constexpr int kMaxSchubertN = 8;

using Perm = std::vector<int>;  // one-line, values 1..n

// Exponent of x_{i+1} in byte i. Numeric order on keys compares the last variable
// first, under which the leading monomial of S_w is x^code(w).
using Monomial = std::uint64_t;

struct MPoly {
  std::map<Monomial, long long> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for zero
  bool homogeneous() const;
  long long constant() const;
  void add(Monomial m, long long c);
  std::string to_string() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;
};

int exponent(Monomial m, int var);  // var 0-based
Monomial make_monomial(const std::vector<int>& exps);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator+(const MPoly& a, const MPoly& b);
MPoly divided_difference(const MPoly& f, int i);  // i 0-based: (f - s_i f) / (x_i - x_{i+1})

Perm trim(Perm w);  // drop trailing fixed points
int perm_length(const Perm& w);
Perm perm_mul(const Perm& x, const Perm& y);  // (xy)(i) = x(y(i)), padded
// Letters i (0-based) with w = s_{a_1} ... s_{a_k}, listed a_k first.
std::vector<int> bubble_letters(const Perm& w);

MPoly schubert_polynomial(const Perm& w);

// Expansion by repeatedly removing the leading Schubert term; works in S_infinity
// and throws ResourceError if a term leaves S_8.
std::map<Perm, long long> schubert_expand(const MPoly& f);

// c^w_{uv} = d_w(S_u S_v); 0 when l(u) + l(v) != l(w).
long long structure_constant(const Perm& u, const Perm& v, const Perm& w);
long long structure_constant(const Element& u, const Element& v, const Element& w);

struct MatrixOptions {
  unsigned seed = 0;  // 0: fixed choices; otherwise random linear extensions
  Exec exec = Exec::serial;
};

struct StructureMatrix {
  Element w;
  int k = 0;
  std::vector<Element> rows;  // [e,w]_k
  std::vector<Element> cols;  // [e,w]_{l(w)-k}
  std::vector<std::vector<long long>> entries;
  std::vector<std::string> provenance;  // one line per recursion step

  bool upper_unitriangular() const;
};

StructureMatrix structure_matrix(const Element& w, int k, const MatrixOptions& opt = {});

// The unique bijection u -> v with c^w_{uv} != 0, as column index per row.
std::vector<int> canonical_bijection(const StructureMatrix& m);
// Number of nonzero transversals, counting stops at cap.
int count_transversals(const std::vector<std::vector<long long>>& a, int cap = 2);

} // namespace coxbp
