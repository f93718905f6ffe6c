#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oscm/error.hpp"

namespace oscm {

using Vertex = std::uint32_t;
using Crossings = std::uint64_t;

inline constexpr std::size_t kMaxSubsetVertices = 64;

// A set of V-vertices packed into one machine word; bit v stands for vertex v.
class VertexSubset {
 public:
  constexpr VertexSubset() noexcept = default;
  constexpr explicit VertexSubset(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr VertexSubset full(std::size_t n) noexcept {
    return VertexSubset(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSubset singleton(Vertex v) noexcept {
    return VertexSubset(std::uint64_t{1} << v);
  }
  template <typename Range>
  static VertexSubset of(const Range& vertices) {
    VertexSubset s;
    for (auto v : vertices) s = s.with(static_cast<Vertex>(v));
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(Vertex v) const noexcept {
    return v < 64 && ((bits_ >> v) & 1U) != 0;
  }
  constexpr bool intersects(VertexSubset o) const noexcept {
    return (bits_ & o.bits_) != 0;
  }
  constexpr bool is_subset_of(VertexSubset o) const noexcept {
    return (bits_ & ~o.bits_) == 0;
  }
  // Lowest member; undefined on the empty set.
  constexpr Vertex first() const noexcept {
    return static_cast<Vertex>(std::countr_zero(bits_));
  }

  constexpr VertexSubset with(Vertex v) const noexcept {
    return VertexSubset(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSubset without(Vertex v) const noexcept {
    return VertexSubset(bits_ & ~(std::uint64_t{1} << v));
  }
  constexpr VertexSubset operator|(VertexSubset o) const noexcept {
    return VertexSubset(bits_ | o.bits_);
  }
  constexpr VertexSubset operator&(VertexSubset o) const noexcept {
    return VertexSubset(bits_ & o.bits_);
  }
  constexpr VertexSubset operator-(VertexSubset o) const noexcept {
    return VertexSubset(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const VertexSubset&) const noexcept = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr Vertex operator*() const noexcept {
      return static_cast<Vertex>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

// Members of a subset in increasing order, without heap allocation.
struct MemberList {
  std::array<Vertex, kMaxSubsetVertices> items{};
  std::size_t count = 0;

  explicit MemberList(VertexSubset s) noexcept {
    for (Vertex v : s) items[count++] = v;
  }
  const Vertex* begin() const noexcept { return items.data(); }
  const Vertex* end() const noexcept { return items.data() + count; }
  Vertex operator[](std::size_t i) const noexcept { return items[i]; }
};

namespace detail {

constexpr std::array<std::array<std::uint64_t, 65>, 65> make_binomials() {
  std::array<std::array<std::uint64_t, 65>, 65> t{};
  for (std::size_t n = 0; n <= 64; ++n) {
    t[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

inline constexpr auto kBinomials = make_binomials();

}  // namespace detail

// C(n, k) for n <= 64; every such value fits in 64 bits.
constexpr std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n || n > 64) return 0;
  return detail::kBinomials[n][k];
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::size_limit, "cost counter overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::size_limit, "cost counter overflow");
  return r;
}

// Smallest r with r*r >= n.
constexpr std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  std::uint64_t lo = 1, hi = std::uint64_t{1} << 32;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid >= (std::uint64_t{1} << 32) || mid * mid >= n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// Next word with the same popcount (Gosper's hack). Returns 0 after the last
// k-subset of an s-bit universe.
constexpr std::uint64_t next_combination(std::uint64_t x, std::size_t s) noexcept {
  if (x == 0) return 0;
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;  // wrapped past bit 63
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (s < 64 && (next >> s) != 0) return 0;
  return next;
}

constexpr std::uint64_t low_bits(std::size_t k) noexcept {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// The index-th k-subset of {0..s-1} in colexicographic order, which is the
// order next_combination() walks. Index 0 is {0..k-1}.
constexpr std::uint64_t unrank_combination(std::uint64_t index, std::size_t s,
                                           std::size_t k) noexcept {
  std::uint64_t mask = 0;
  std::size_t c = s;
  for (std::size_t i = k; i >= 1; --i) {
    // largest c' < c with C(c', i) <= index
    do {
      --c;
    } while (binomial(c, i) > index);
    mask |= std::uint64_t{1} << c;
    index -= binomial(c, i);
  }
  return mask;
}

// Scatter the low bits of `local` onto the members of `universe`:
// bit i of `local` selects the i-th smallest member.
inline VertexSubset deposit(std::uint64_t local, const MemberList& universe) noexcept {
  std::uint64_t out = 0;
  while (local != 0) {
    const int i = std::countr_zero(local);
    out |= std::uint64_t{1} << universe[static_cast<std::size_t>(i)];
    local &= local - 1;
  }
  return VertexSubset(out);
}

// Size of the "first" side of a balanced split: ceil(s/2).
constexpr std::size_t ceil_half(std::size_t s) noexcept { return (s + 1) / 2; }

}  // namespace oscm
