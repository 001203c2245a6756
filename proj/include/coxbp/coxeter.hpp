#pragma once

#include <coxbp/errors.hpp>
#include <coxbp/gen_set.hpp>
#include <coxbp/golden.hpp>

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxbp {

namespace detail {
struct SystemData;
}

class Element;

// A Coxeter system (W, S). Value-semantic handle to immutable shared data.
class CoxeterSystem {
public:
  // type: A B C D E F G H I affineC. For I, `rank` is the dihedral m.
  static CoxeterSystem build(std::string_view type, int rank);
  // Tags such as "A3", "E8", "I2(7)", "affineC2".
  static CoxeterSystem parse(std::string_view tag);
  // Coxeter matrix with 0 meaning infinity. Off-diagonal entries in {2..6, inf}
  // for rank >= 3; any m for rank 2.
  static CoxeterSystem from_matrix(const std::vector<std::vector<int>>& m, std::string name);

  const std::string& name() const;
  char family() const;  // 'A'..'I', 'X' for affine C2, 'M' for matrix-built
  int rank() const;
  int m(int s, int t) const;  // 0 means infinity
  std::vector<std::vector<int>> coxeter_matrix() const;
  const std::string& label(int s) const;

  bool is_finite() const;
  bool is_crystallographic() const;
  bool parabolic_is_finite(GenSet J) const;
  bool commute(int s, int t) const { return m(s, t) == 2; }
  bool connected(GenSet J) const;
  std::vector<GenSet> components(GenSet J) const;
  GenSet all() const { return GenSet::all(rank()); }

  // Scalars n[s][t] with s(alpha_t) = alpha_t - n[s][t] alpha_s; empty for dihedral engines.
  const std::vector<Golden>& cartan() const;

  Element identity() const;
  Element generator(int s) const;
  Element element(std::span<const Gen> word) const;
  Element element(std::initializer_list<int> word_one_based) const;

  bool has_one_line() const;  // types A, B, C, D
  Element from_one_line(const std::vector<int>& images) const;
  std::vector<int> to_one_line(const Element& w) const;

  // Formats: "word", "oneline", "letters", "auto".
  Element parse_element(std::string_view text, std::string_view format = "auto") const;

  const std::shared_ptr<const detail::SystemData>& data() const { return data_; }
  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b);

private:
  explicit CoxeterSystem(std::shared_ptr<const detail::SystemData> d) : data_(std::move(d)) {}
  friend class Element;
  std::shared_ptr<const detail::SystemData> data_;
};

// An element stored by its lexicographically least reduced word.
class Element {
public:
  Element() = default;

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  GenSet left_descents() const { return ld_; }
  GenSet right_descents() const { return rd_; }
  GenSet support() const { return supp_; }
  CoxeterSystem system() const { return CoxeterSystem(sys_); }
  bool valid() const { return sys_ != nullptr; }

  Element inverse() const;
  Element right_mul(int s) const;
  Element left_mul(int s) const;
  Element operator*(const Element& o) const;

  // "1 2 1" style, or labels when the system has letter labels.
  std::string to_string() const;
  std::vector<int> word_one_based() const;

  friend bool operator==(const Element& a, const Element& b) { return a.word_ == b.word_; }
  // Shortlex order.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

  const detail::SystemData* sys_ptr() const { return sys_.get(); }

private:
  friend class CoxeterSystem;
  friend Element make_element(const std::shared_ptr<const detail::SystemData>&, std::span<const Gen>);
  std::shared_ptr<const detail::SystemData> sys_;
  Word word_;
  GenSet ld_, rd_, supp_;
};

Element make_element(const std::shared_ptr<const detail::SystemData>& sys, std::span<const Gen> word);

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : e.word()) h = (h ^ (g + 1)) * 1099511628211ull;
    return h ^ e.word().size();
  }
};

void require_same_system(const Element& a, const Element& b);
void require_subset(const CoxeterSystem& sys, GenSet J);

// w = quotient * parabolic with quotient in W^J and parabolic in W_J.
struct ParabolicDecomposition {
  Element quotient;
  Element parabolic;
};
ParabolicDecomposition parabolic_decompose(const Element& w, GenSet J);

// w = parabolic * quotient with parabolic in W_J and quotient in ^J W.
struct LeftParabolicDecomposition {
  Element parabolic;
  Element quotient;
};
LeftParabolicDecomposition left_parabolic_decompose(const Element& w, GenSet J);

bool in_right_quotient(const Element& w, GenSet J);
bool in_left_quotient(const Element& w, GenSet J);

Element longest_element(const CoxeterSystem& sys, GenSet J);
Element longest_element(const CoxeterSystem& sys);

// Whole group for finite systems; throws ResourceError above max_size.
std::vector<Element> enumerate_group(const CoxeterSystem& sys, std::size_t max_size = 2'000'000);
std::vector<Element> elements_up_to_length(const CoxeterSystem& sys, int max_length);

// Bruhat order via the left-descent recursion.
bool bruhat_leq(const Element& u, const Element& w);

} // namespace coxbp
