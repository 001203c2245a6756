#pragma once

#include <coxbp/bruhat.hpp>
#include <coxbp/coxeter.hpp>
#include <coxbp/exec.hpp>
#include <coxbp/roots.hpp>

#include <optional>
#include <span>
#include <vector>

namespace coxbp {

// Definition test: Supp(w^J) meets J only inside D_L(w_J).
bool is_bp(const Element& w, GenSet J);
// Poincare test: P(w) = P^J(w^J) P(w_J).
bool is_bp_poincare(const Element& w, GenSet J, int cap_length = 22);
// Root test: w contains no J-star. Uses the root system of w's own type unless one is given.
bool jstar_bp_test(const Element& w, GenSet J);
bool jstar_bp_test(const RootSystem& rs, const Element& w, GenSet J);
// A witness (beta, tau) with beta outside I(w) and tau inside, if any.
std::optional<std::pair<int, int>> contained_witness(const RootSystem& rs, const Element& w, GenSet J);

struct BPFamily {
  int rank = 0;
  std::vector<GenSet> members;  // increasing order of bits
  bool contains(GenSet J) const;
};

inline constexpr int kDefaultFamilyRankBound = 16;

BPFamily bp_family(const Element& w, int max_rank = kDefaultFamilyRankBound);
bool check_lattice(const BPFamily& family);
GenSet closure(const BPFamily& family, GenSet A);
GenSet closure(const Element& w, GenSet A);

struct BPPoset {
  int rank = 0;
  std::vector<GenSet> closures;            // cl_w(i) per generator
  std::vector<GenSet> blocks;              // sorted by least element
  std::vector<std::vector<bool>> leq;      // block order
  std::vector<std::pair<int, int>> covers; // (lower, upper) block indices

  int block_of(int s) const;
  bool preposet_leq(int i, int j) const { return closures[j].contains(i); }
  // Unions of order ideals, sorted by bits.
  std::vector<GenSet> ideals() const;
  bool singleton_blocks() const;
  friend bool operator==(const BPPoset& a, const BPPoset& b) {
    return a.closures == b.closures;
  }
};

BPPoset poset_from_closures(std::vector<GenSet> closures);
BPPoset bp_poset(const Element& w, int max_rank = kDefaultFamilyRankBound);

// Marked patterns on one-line permutations; positions and values 1-based.
enum class BadPattern { p231, p312, p3142 };
struct PatternHit {
  BadPattern pattern;
  std::vector<int> indices;
};
std::optional<PatternHit> find_bad_pattern(const std::vector<int>& perm, int a, int b);
bool typeA_is_bp(const std::vector<int>& perm, int a, int b);
GenSet typeA_closure(const std::vector<int>& perm, GenSet A);
BPPoset typeA_bp_poset(const std::vector<int>& perm);
BPPoset typeA_bp_poset(const Element& w);

std::optional<int> grassmannian_bp_exists(const Element& w);

// `extension` lists generators in removal order: each must be maximal among those left.
std::vector<Element> linear_extension_factorization(const Element& w, const std::vector<int>& extension);

// Sweep kernels over many elements.
std::vector<BPFamily> bp_families(std::span<const Element> ws, Exec exec = Exec::parallel);

struct OracleTally {
  long long cases = 0;
  long long disagreements = 0;
  std::vector<std::string> examples;  // first few disagreements
};
// is_bp vs is_bp_poincare vs jstar_bp_test (when rs is given) over all (w, J).
OracleTally compare_bp_tests(std::span<const Element> ws, const RootSystem* rs, Exec exec = Exec::parallel);

} // namespace coxbp
