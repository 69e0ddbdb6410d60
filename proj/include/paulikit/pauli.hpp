#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paulikit/error.hpp"

namespace paulikit {

// Single-qubit Pauli operators, encoded 0-3.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// 1 for the anti-diagonal operators {X, Y}, 0 for the diagonal ones {I, Z}.
constexpr unsigned y_bit(Pauli p) noexcept {
  return (p == Pauli::X || p == Pauli::Y) ? 1u : 0u;
}

// Per-stage sign factor: false (+1) for {I, X}, true (-1) for {Y, Z}.
constexpr bool sign_flip(Pauli p) noexcept {
  return p == Pauli::Y || p == Pauli::Z;
}

constexpr char pauli_char(Pauli p) noexcept {
  return "IXYZ"[static_cast<unsigned>(p)];
}

/// A word of n Pauli operators, the tensor product reading left to right:
/// label "ZXI" means Z acts on the leftmost (most significant) factor.
///
/// Tensor-factor indices count from the right end: factor(0) is the
/// rightmost character, factor(n-1) the leftmost. Labels parse either as
/// letters ("ZXI", case-insensitive) or digits ("310"); the two alphabets
/// cannot be mixed in one string.
class PauliString {
 public:
  static PauliString parse(std::string_view text);

  // Axes in label order: axes[0] is the leftmost factor.
  explicit PauliString(std::vector<Pauli> axes);

  std::size_t size() const noexcept { return axes_.size(); }

  // Label position, 0 = leftmost character.
  Pauli axis(std::size_t pos) const { return axes_[pos]; }

  // Tensor-factor index, 0 = rightmost character.
  Pauli factor(std::size_t l) const { return axes_[axes_.size() - 1 - l]; }

  std::size_t y_count() const noexcept { return n_y_; }

  // True when every factor is I or Z.
  bool diagonal() const noexcept;

  // Bit l set iff factor(l) is anti-diagonal; this is also the column index
  // of the first row of the composed matrix, and columns obey k(j) = j XOR mask.
  std::uint64_t y_mask() const noexcept;

  // Bit l set iff factor(l) flips the sign of its block.
  std::uint64_t sign_mask() const noexcept;

  std::string label() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

  // Composition memory bound: 2^30 stored entries is already ~16 GiB complex.
  static constexpr std::size_t kMaxLength = 30;

 private:
  std::vector<Pauli> axes_;
  std::size_t n_y_ = 0;
};

}  // namespace paulikit
