#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "twistgrp/int_matrix.hpp"

namespace twistgrp {

/// Element ((m,k),s) of the discrete Heisenberg group Z² ⋊ Z with
///
///   ((m,k),s)·((m',k'),s') = ((m+m', k+k'+s·m'), s+s').
///
/// The triple is its own normal form: ((m,k),s) = a^m b^k c^s.
struct HeisenbergElement {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;

  static constexpr HeisenbergElement identity() { return {}; }

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

  /// `((m,k),s)`.
  std::string to_string() const;
};

struct HeisenbergHash {
  std::size_t operator()(const HeisenbergElement& h) const noexcept {
    std::uint64_t x = static_cast<std::uint64_t>(h.m) * 0x9E3779B97F4A7C15ULL;
    x ^= static_cast<std::uint64_t>(h.k) + 0x632BE59BD9B4E019ULL + (x << 6) + (x >> 2);
    x ^= static_cast<std::uint64_t>(h.s) * 0xC2B2AE3D27D4EB4FULL + (x << 6) + (x >> 2);
    return static_cast<std::size_t>(x);
  }
};

namespace heis {

inline constexpr HeisenbergElement a{1, 0, 0};
inline constexpr HeisenbergElement b{0, 1, 0};
inline constexpr HeisenbergElement c{0, 0, 1};

HeisenbergElement mul(const HeisenbergElement& h1, const HeisenbergElement& h2);
HeisenbergElement inv(const HeisenbergElement& h);
HeisenbergElement pow(const HeisenbergElement& h, std::int64_t n);
/// h1 h2 h1⁻¹ h2⁻¹.
HeisenbergElement commutator(const HeisenbergElement& h1, const HeisenbergElement& h2);

/// Upper unitriangular [[1, s, k], [0, 1, m], [0, 0, 1]].
IntMatrix to_matrix(const HeisenbergElement& h);
/// Inverse of to_matrix; throws std::invalid_argument if `mat` is not of that shape.
HeisenbergElement from_matrix(const IntMatrix& mat);

/// Every element with |m|, |k|, |s| ≤ radius, ordered by (m, k, s).
std::vector<HeisenbergElement> box(std::int64_t radius);

}  // namespace heis

/// Word in the generators a, b, c: a sequence of (letter, exponent).
struct GroupWord {
  struct Letter {
    char generator;  // 'a', 'b' or 'c'
    std::int64_t exponent;
  };
  std::vector<Letter> letters;

  /// Whitespace-separated generator powers such as `c a c^-1 a^-1` or `a^2 b^3`.
  /// The empty string is the empty word.
  static GroupWord parse(std::string_view text);
};

HeisenbergElement eval_word(const GroupWord& w);

/// Accepts either the triple form `((m,k),s)` or a word.
HeisenbergElement parse_heisenberg(std::string_view text);

}  // namespace twistgrp
