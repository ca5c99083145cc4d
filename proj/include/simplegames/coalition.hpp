#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace simplegames {

/// Largest supported player count; a coalition is one 64-bit word.
inline constexpr int kMaxPlayers = 63;

/// Player-count limit for operations that scan all 2^n coalitions.
inline constexpr int kExhaustiveLimit = 24;

/// A set of players stored as a bitmask (bit i = player i).
class Coalition {
public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  /// The grand coalition {0, ..., n-1}.
  static constexpr Coalition all(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int player) const { return (bits_ >> player) & 1U; }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  /// Highest player index + 1, or 0 for the empty coalition.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr Coalition with(int player) const { return Coalition(bits_ | (std::uint64_t{1} << player)); }
  constexpr Coalition without(int player) const { return Coalition(bits_ & ~(std::uint64_t{1} << player)); }
  constexpr Coalition complement(int n) const { return Coalition(all(n).bits_ & ~bits_); }

  std::vector<int> members() const;
  /// "{0,3,4}" style rendering.
  std::string to_string() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  friend constexpr Coalition operator^(Coalition a, Coalition b) { return Coalition(a.bits_ ^ b.bits_); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition, Coalition) = default;

  /// Canonical order: population count first, then numeric value.
  friend constexpr std::strong_ordering operator<=>(Coalition a, Coalition b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

private:
  std::uint64_t bits_ = 0;
};

struct CoalitionHash {
  std::size_t operator()(Coalition c) const noexcept { return std::hash<std::uint64_t>{}(c.bits()); }
};

}  // namespace simplegames
