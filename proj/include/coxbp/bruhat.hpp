#pragma once

#include <coxbp/coxeter.hpp>

#include <string>
#include <unordered_map>
#include <vector>

namespace coxbp {

// Coefficient list, index = degree.
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly q_integer(int d);  // 1 + q + ... + q^{d-1}
bool is_palindromic(const Poly& p);
std::string poly_to_string(const Poly& p);

struct IntervalOptions {
  int cap_length = 22;
  bool covers = true;
};

// [e, w] or, with J nonempty, [e, w]^J = [e, w] intersected with W^J.
struct Interval {
  Element top;
  GenSet J;
  std::vector<Element> elements;               // shortlex order, so ranks are contiguous
  std::vector<std::pair<int, int>> covers;     // (lower, upper) indices
  std::vector<std::vector<int>> up, down;
  std::unordered_map<Element, int, ElementHash> index;

  int size() const { return static_cast<int>(elements.size()); }
  int rank_of(int i) const { return elements[i].length(); }
  int find(const Element& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
  bool contains(const Element& e) const { return find(e) >= 0; }
  std::vector<int> rank_sizes() const;
  Poly poincare() const;
};

Interval bruhat_interval(const Element& w, const IntervalOptions& opt = {});
Interval quotient_interval(const Element& w, GenSet J, const IntervalOptions& opt = {});

Poly poincare(const Element& w, int cap_length = 22);
Poly poincare_quotient(const Element& w, GenSet J, int cap_length = 22);

bool is_rationally_smooth(const Element& w, int cap_length = 22);
bool is_J_rationally_smooth(const Element& w, GenSet J, int cap_length = 22);

} // namespace coxbp
