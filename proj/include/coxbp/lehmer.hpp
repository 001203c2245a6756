#pragma once

#include <coxbp/bruhat.hpp>
#include <coxbp/coxeter.hpp>
#include <coxbp/exec.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxbp {

// Order-preserving bijection C_{a_1} x ... x C_{a_k} -> P. Tuples are indexed in
// mixed radix with the last coordinate fastest.
struct LehmerCode {
  std::vector<int> chains;  // every size >= 2
  std::vector<Element> images;

  std::size_t size() const { return images.size(); }
  std::vector<int> tuple(std::size_t index) const;
  std::size_t index(const std::vector<int>& tuple) const;
  const Element& at(const std::vector<int>& tuple) const { return images.at(index(tuple)); }
};

std::size_t chain_product_size(const std::vector<int>& chains);

// c_i = #{j > i : w(i) > w(j)}, values 1-based.
std::vector<int> classical_code(const std::vector<int>& perm);
std::vector<int> decode_classical(const std::vector<int>& code);
// The classical code of S_{rank+1}: chains (n, n-1, ..., 2).
LehmerCode classical_lehmer_code(const CoxeterSystem& type_a);

struct CodeCheck {
  bool ok = true;
  std::string reason;
};
CodeCheck verify_code(const LehmerCode& code, const Interval& interval);

// J = {s_j, ..., s_{n-1}} in S_n (j = n gives the empty set). Returns j or nullopt.
std::optional<int> tail_start(const CoxeterSystem& type_a, GenSet J);
// Recursive quotient code for J-rationally smooth w in W^J, J a tail as above.
LehmerCode construct_quotient_code(const Element& w, GenSet J);

// x * y on [e,w^J]^J x [e,w_J]; J must be in BP(w).
struct ProductMap {
  Interval quotient;
  Interval parabolic;
  Interval full;
  std::vector<std::vector<int>> image;  // image[i][j] = index in full, or -1
  bool bijective = false;
  bool order_preserving = false;
};
ProductMap bp_product_map(const Element& w, GenSet J);

// Code for [e,w] from codes of [e,w^J]^J (outer digits first) and [e,w_J].
LehmerCode compose_codes(const LehmerCode& quotient_code, const LehmerCode& parabolic_code);

// Chain multisets whose product of q-integers equals the rank generating function.
std::vector<std::vector<int>> candidate_chain_multisets(const Interval& interval);

enum class SearchStatus { found, none, unknown };
struct SearchResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<LehmerCode> code;
  std::vector<std::vector<int>> exhausted;  // multisets proven impossible
  long long nodes = 0;
  double seconds = 0;
};
std::string to_string(SearchStatus s);

SearchResult search_code(const Interval& interval, double time_budget_seconds, Exec exec = Exec::serial);

} // namespace coxbp
