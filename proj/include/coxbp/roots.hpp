#pragma once

#include <coxbp/coxeter.hpp>
#include <coxbp/exec.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace coxbp {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
    return h;
  }
};

struct Root {
  std::vector<int> coords;   // in the basis of simple roots
  std::vector<int> ambient;  // integer ambient coordinates (doubled for E and F4)
  int height = 0;
  GenSet support;
};

// Signed root index: +(i+1) is the i-th positive root, -(i+1) its negative.
using SignedRoot = int;

struct JStar {
  int head = 0;                               // root index, in Phi_J^+
  std::vector<std::pair<int, int>> arms;      // (coefficient, root index)
  int sum = 0;                                // root index of the full sum
};

// Non-BP witnesses (beta, tau): head and full sum of some J-star.
struct WitnessSet {
  std::vector<std::pair<int, int>> pairs;  // sorted
  std::unordered_set<std::uint64_t> lookup;
  bool contains(int beta, int tau) const {
    return lookup.count((static_cast<std::uint64_t>(beta) << 32) | static_cast<std::uint32_t>(tau)) > 0;
  }
};

class RootSystem {
public:
  // Finite crystallographic types only.
  static const RootSystem& of(const CoxeterSystem& sys);
  explicit RootSystem(const CoxeterSystem& sys);
  ~RootSystem();
  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  const CoxeterSystem& system() const { return sys_; }
  const std::string& name() const { return sys_.name(); }
  int rank() const { return sys_.rank(); }
  int size() const { return static_cast<int>(roots_.size()); }
  const Root& root(int i) const { return roots_[i]; }
  int simple(int s) const { return simple_[s]; }
  std::optional<int> index_of(const std::vector<int>& coords) const;
  int sum_index(int i, int j) const { return add_[i * size() + j]; }  // -1 if not a root
  std::string to_string(int i) const;

  SignedRoot reflect(int s, SignedRoot r) const {
    SignedRoot img = refl_[s * size() + (std::abs(r) - 1)];
    return r > 0 ? img : -img;
  }
  SignedRoot apply(const Element& w, SignedRoot r) const;
  // I(w) = {beta > 0 : w(beta) < 0} as a membership vector.
  std::vector<bool> inversion_set(const Element& w) const;

  bool poset_leq(int i, int j) const;  // root poset
  bool supported_on(int i, int s) const { return roots_[i].coords[s] > 0; }
  std::vector<int> phi_plus(GenSet J) const;
  bool in_phi_plus(int i, GenSet J) const { return roots_[i].support.subset_of(J); }
  bool is_biclosed(const std::vector<bool>& set) const;

  std::vector<JStar> jstars(GenSet J, int max_arms = 3, int max_coef = 3, std::optional<int> head = std::nullopt) const;
  const WitnessSet& witnesses(GenSet J) const;  // memoised per J, thread-safe

private:
  struct Cache;
  CoxeterSystem sys_;
  std::vector<Root> roots_;
  std::vector<int> simple_;
  std::unordered_map<std::vector<int>, int, VecHash> index_;
  std::vector<int> add_;
  std::vector<SignedRoot> refl_;
  std::unique_ptr<Cache> cache_;
};

bool contains_jstar(const RootSystem& rs, const Element& w, const JStar& star);

struct LemmaReport {
  std::string system;
  std::string lemma;
  long long checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For alpha in Delta_J and tau outside Phi_J^+ supported on alpha: tau reduces by a
// simple root of J staying supported on alpha, or tau is the sum of a J-star headed by alpha.
LemmaReport verify_simple_head_lemma(const RootSystem& rs, Exec exec = Exec::parallel);
// For connected J1, J2 and every witness (beta, tau) for J1 u J2 with beta outside both
// parabolic root sets, beta splits into 2 or 3 positive roots each giving a witness for J, J1 or J2.
LemmaReport verify_union_lemma(const RootSystem& rs, Exec exec = Exec::parallel);

// Connected nonempty subsets of S.
std::vector<GenSet> connected_subsets(const CoxeterSystem& sys);

} // namespace coxbp
