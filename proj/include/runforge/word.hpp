#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace runforge {

using Symbol = std::uint8_t;

/// Letters are the integers 0..size-1, rendered as 'a', 'b', ...
class Alphabet {
 public:
  static constexpr int kMaxSize = 26;

  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool contains(Symbol s) const noexcept { return s < size_; }
  static char letter(Symbol s) noexcept { return static_cast<char>('a' + s); }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int size_;
};

/// A finite word over an Alphabet. Indexing is 0-based internally; every
/// position that leaves the library (run starts, reports) is 1-based.
class Word {
 public:
  Word() : alphabet_(1) {}
  Word(std::vector<Symbol> symbols, Alphabet alphabet);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Alphabet alphabet() const noexcept { return alphabet_; }

  /// Factor of `length` letters starting at 0-based `offset`.
  Word factor(std::size_t offset, std::size_t length) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

/// Parses lowercase ASCII. With `alphabet_size` 0 the alphabet is inferred
/// as one past the largest letter present.
Word parse_word(std::string_view text, int alphabet_size = 0);

bool has_period(std::span<const Symbol> w, std::size_t p);
inline bool has_period(const Word& w, std::size_t p) {
  return has_period(w.symbols(), p);
}

std::size_t minimal_period(std::span<const Symbol> w);
inline std::size_t minimal_period(const Word& w) {
  return minimal_period(w.symbols());
}

/// Exponent |w| / minimal_period(w) as an unreduced pair.
struct Exponent {
  std::size_t length;
  std::size_t period;
};
Exponent exponent(const Word& w);

bool is_primitive(std::span<const Symbol> w);
inline bool is_primitive(const Word& w) { return is_primitive(w.symbols()); }

Word reverse(const Word& w);
Word complement(const Word& w);
bool is_palindrome(const Word& w);

/// Least image under reversal, plus complementation when the alphabet is
/// binary.
Word canonical_form(const Word& w);

/// Binary word packed into a machine integer. Position 1 is the most
/// significant of the `length` low bits, so integer order on equal-length
/// words is lexicographic order.
struct PackedBinary {
  static constexpr int kMaxLength = 64;

  std::uint64_t bits = 0;
  int length = 0;

  std::uint64_t mask() const noexcept {
    return length == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << length) - 1;
  }
  /// Letter at 0-based position i.
  Symbol at(int i) const noexcept {
    return static_cast<Symbol>((bits >> (length - 1 - i)) & 1U);
  }

  friend bool operator==(PackedBinary, PackedBinary) = default;
};

PackedBinary pack_binary(const Word& w);
Word unpack_binary(PackedBinary w);
PackedBinary reverse(PackedBinary w);
PackedBinary complement(PackedBinary w);
PackedBinary canonical_form(PackedBinary w);

}  // namespace runforge
