#include "paulikit/pauli.hpp"

#include <algorithm>
#include <cctype>

namespace paulikit {

namespace {

bool letter_axis(char c, Pauli& out) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I': out = Pauli::I; return true;
    case 'X': out = Pauli::X; return true;
    case 'Y': out = Pauli::Y; return true;
    case 'Z': out = Pauli::Z; return true;
    default: return false;
  }
}

bool digit_axis(char c, Pauli& out) {
  if (c < '0' || c > '3') return false;
  out = static_cast<Pauli>(c - '0');
  return true;
}

}  // namespace

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw Error(Errc::EmptyString, "empty Pauli string");
  }
  if (text.size() > kMaxLength) {
    throw Error(Errc::NTooLarge,
                "Pauli string of length " + std::to_string(text.size()) +
                    " exceeds the composition bound of " +
                    std::to_string(kMaxLength));
  }

  std::vector<Pauli> axes(text.size(), Pauli::I);
  bool seen_letter = false;
  bool seen_digit = false;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    Pauli axis;
    if (letter_axis(text[pos], axis)) {
      seen_letter = true;
    } else if (digit_axis(text[pos], axis)) {
      seen_digit = true;
    } else {
      throw Error(Errc::InvalidCharacter,
                  std::string("invalid character '") + text[pos] +
                      "' at position " + std::to_string(pos));
    }
    if (seen_letter && seen_digit) {
      throw Error(Errc::MixedAlphabet,
                  "letter and digit alphabets mixed in \"" +
                      std::string(text) + "\"");
    }
    axes[pos] = axis;
  }
  return PauliString(std::move(axes));
}

PauliString::PauliString(std::vector<Pauli> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) {
    throw Error(Errc::EmptyString, "empty Pauli string");
  }
  if (axes_.size() > kMaxLength) {
    throw Error(Errc::NTooLarge,
                "Pauli string of length " + std::to_string(axes_.size()) +
                    " exceeds the composition bound of " +
                    std::to_string(kMaxLength));
  }
  n_y_ = static_cast<std::size_t>(
      std::count(axes_.begin(), axes_.end(), Pauli::Y));
}

bool PauliString::diagonal() const noexcept {
  return std::all_of(axes_.begin(), axes_.end(),
                     [](Pauli p) { return y_bit(p) == 0; });
}

std::uint64_t PauliString::y_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t l = 0; l < axes_.size(); ++l) {
    mask |= std::uint64_t{y_bit(factor(l))} << l;
  }
  return mask;
}

std::uint64_t PauliString::sign_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t l = 0; l < axes_.size(); ++l) {
    if (sign_flip(factor(l))) mask |= std::uint64_t{1} << l;
  }
  return mask;
}

std::string PauliString::label() const {
  std::string out(axes_.size(), 'I');
  for (std::size_t pos = 0; pos < axes_.size(); ++pos) {
    out[pos] = pauli_char(axes_[pos]);
  }
  return out;
}

}  // namespace paulikit
