#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxbp {

// Generators are 0-based internally and 1-based at every I/O boundary.
using Gen = std::uint8_t;
using Word = std::vector<Gen>;

inline constexpr int kMaxRank = 32;

class GenSet {
public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}
  GenSet(std::initializer_list<int> gens) {
    for (int g : gens) bits_ |= 1u << g;
  }

  static constexpr GenSet all(int rank) {
    return GenSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  static constexpr GenSet single(int g) { return GenSet(1u << g); }

  constexpr bool contains(int g) const { return (bits_ >> g) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr int last() const { return 31 - std::countl_zero(bits_); }

  constexpr GenSet with(int g) const { return GenSet(bits_ | (1u << g)); }
  constexpr GenSet without(int g) const { return GenSet(bits_ & ~(1u << g)); }
  constexpr bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Rendered 1-based, e.g. "{1,3}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int g : members()) {
      if (!first) s += ',';
      s += std::to_string(g + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet a, GenSet b) = default;
  friend constexpr auto operator<=>(GenSet a, GenSet b) = default;

private:
  std::uint32_t bits_ = 0;
};

} // namespace coxbp
