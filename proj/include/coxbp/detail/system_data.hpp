#pragma once

#include <coxbp/gen_set.hpp>
#include <coxbp/golden.hpp>

#include <span>
#include <string>
#include <vector>

namespace coxbp::detail {

struct SystemData {
  std::string name;
  char family = 'M';
  int type_rank = 0;  // n for A_n etc, m for I2(m)
  int rank = 0;
  std::vector<int> m;  // rank*rank, 0 = infinity
  std::vector<std::string> labels;
  bool letter_labels = false;
  bool crystallographic = false;
  bool finite = false;

  // Geometric engine: Tits cone action on the dual of the root space.
  std::vector<Golden> n;  // n[s*rank+t]
  // Integer simple roots in ambient coordinates (types A-G only).
  std::vector<std::vector<int>> ambient;

  // Dihedral engine for I2(m) with m outside the geometric range.
  bool dihedral = false;
  int dm = 0;
  std::vector<Word> dihedral_nf;  // key = flip*dm + c

  int mij(int s, int t) const { return m[s * rank + t]; }
  Golden nij(int s, int t) const { return n[s * rank + t]; }

  void apply_left(std::vector<Golden>& x, int s) const {
    const Golden xs = x[s];
    const Golden* row = &n[s * rank];
    for (int t = 0; t < rank; ++t) {
      if (row[t].is_zero()) continue;
      if (row[t].b == 0 && xs.b == 0) x[t].a -= row[t].a * xs.a;
      else x[t] -= row[t] * xs;
    }
  }

  // Tits vector of w = s_{a1} ... s_{ak} applied to (1,...,1).
  std::vector<Golden> tits(std::span<const Gen> word) const {
    std::vector<Golden> x(rank, Golden(1));
    for (std::size_t i = word.size(); i-- > 0;) apply_left(x, word[i]);
    return x;
  }
  std::vector<Golden> tits_inverse(std::span<const Gen> word) const {
    std::vector<Golden> x(rank, Golden(1));
    for (Gen g : word) apply_left(x, g);
    return x;
  }
  static GenSet negatives(const std::vector<Golden>& x) {
    GenSet out;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].sign() < 0) out = out.with(static_cast<int>(t));
    return out;
  }

  int dihedral_key(std::span<const Gen> word) const;

  // Lexicographically least reduced word; `ld` receives the left descents.
  Word reduce(std::span<const Gen> word, GenSet* ld = nullptr) const;
  GenSet right_descents(const Word& nf) const;
  // Letters c1, c2, ... with w c1 c2 ... in W^J.
  Word right_strip(const Word& nf, GenSet J) const;
  bool leq(const Word& u, const Word& w) const;
};

} // namespace coxbp::detail
