#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitgames {

/// Set of indices in [0, 64), stored as a bit mask.
///
/// Every carrier in this library (points, group elements, arrows, objects)
/// is indexed densely from zero, so a single word is enough for the
/// exactly-computable instances the library targets. Constructors reject
/// larger carriers up front (see check_capacity).
class SmallSet {
public:
  static constexpr int capacity = 64;

  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}
  SmallSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }

  static SmallSet from_indices(const std::vector<int>& items) {
    SmallSet s;
    for (int i : items) s.insert(i);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr SmallSet full(int n) {
    return SmallSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static constexpr SmallSet singleton(int i) { return SmallSet(std::uint64_t{1} << i); }

  constexpr bool contains(int i) const {
    return i >= 0 && i < capacity && ((bits_ >> i) & 1U) != 0;
  }
  void insert(int i) {
    if (i < 0 || i >= capacity)
      throw std::out_of_range("SmallSet: index " + std::to_string(i) + " out of range");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(int i) {
    if (i >= 0 && i < capacity) bits_ &= ~(std::uint64_t{1} << i);
  }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Lowest member, or -1 when empty.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr bool subset_of(SmallSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(SmallSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  constexpr SmallSet operator|(SmallSet o) const { return SmallSet(bits_ | o.bits_); }
  constexpr SmallSet operator&(SmallSet o) const { return SmallSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr SmallSet operator-(SmallSet o) const { return SmallSet(bits_ & ~o.bits_); }
  SmallSet& operator|=(SmallSet o) { bits_ |= o.bits_; return *this; }
  SmallSet& operator&=(SmallSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const SmallSet&) const = default;

  /// "{0,2,3}"
  std::string str() const;

private:
  std::uint64_t bits_ = 0;
};

/// Throws std::invalid_argument when a carrier of size n does not fit a SmallSet.
void check_capacity(int n, const char* what);

}  // namespace orbitgames
