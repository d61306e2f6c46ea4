#include "runforge/word.hpp"

#include <algorithm>
#include <string>

#include "runforge/errors.hpp"

namespace runforge {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxSize) {
    throw ArgumentError("alphabet size must be in 1.." +
                        std::to_string(kMaxSize) + ", got " +
                        std::to_string(size));
  }
}

Word::Word(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!alphabet_.contains(symbols_[i])) {
      throw ArgumentError("symbol at position " + std::to_string(i + 1) +
                          " outside alphabet of size " +
                          std::to_string(alphabet_.size()));
    }
  }
}

Word Word::factor(std::size_t offset, std::size_t length) const {
  if (offset > size() || length > size() - offset) {
    throw ArgumentError("factor out of range");
  }
  return Word({symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
               symbols_.begin() + static_cast<std::ptrdiff_t>(offset + length)},
              alphabet_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(Alphabet::letter(s));
  return out;
}

Word parse_word(std::string_view text, int alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  int largest = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError("invalid character '" + std::string(1, c) +
                           "' at position " + std::to_string(i + 1) +
                           " (expected a lowercase letter a-z)",
                       i + 1);
    }
    const int s = c - 'a';
    largest = std::max(largest, s);
    symbols.push_back(static_cast<Symbol>(s));
  }
  const int inferred = std::max(1, largest + 1);
  if (alphabet_size == 0) alphabet_size = inferred;
  if (alphabet_size < inferred) {
    throw ArgumentError("word uses " + std::to_string(inferred) +
                        " letters but alphabet size is " +
                        std::to_string(alphabet_size));
  }
  return Word(std::move(symbols), Alphabet(alphabet_size));
}

bool has_period(std::span<const Symbol> w, std::size_t p) {
  if (p < 1) throw ArgumentError("period must be at least 1");
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

std::size_t minimal_period(std::span<const Symbol> w) {
  if (w.empty()) throw ArgumentError("minimal period of the empty word");
  // Border array: the longest proper border of w has length n - period.
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return n - border[n];
}

Exponent exponent(const Word& w) { return {w.size(), minimal_period(w)}; }

bool is_primitive(std::span<const Symbol> w) {
  const std::size_t p = minimal_period(w);
  // Every period dividing |w| is a multiple of the minimal one.
  return p == w.size() || w.size() % p != 0;
}

Word reverse(const Word& w) {
  std::vector<Symbol> out(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(out), w.alphabet());
}

Word complement(const Word& w) {
  if (w.alphabet().size() != 2) {
    throw UnsupportedAlphabetError(
        "complement is defined for binary words only, alphabet size is " +
        std::to_string(w.alphabet().size()));
  }
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (Symbol& s : out) s ^= 1U;
  return Word(std::move(out), w.alphabet());
}

bool is_palindrome(const Word& w) { return std::ranges::equal(w.symbols(), reverse(w).symbols()); }

Word canonical_form(const Word& w) {
  Word best = w;
  Word r = reverse(w);
  if (r < best) best = r;
  if (w.alphabet().size() == 2) {
    Word c = complement(w);
    Word rc = reverse(c);
    if (c < best) best = c;
    if (rc < best) best = rc;
  }
  return best;
}

PackedBinary pack_binary(const Word& w) {
  if (w.alphabet().size() > 2) {
    throw UnsupportedAlphabetError("packing requires a binary word");
  }
  if (w.size() > static_cast<std::size_t>(PackedBinary::kMaxLength)) {
    throw CapacityError("packed binary words hold at most 64 letters");
  }
  PackedBinary out{0, static_cast<int>(w.size())};
  for (Symbol s : w.symbols()) out.bits = (out.bits << 1) | s;
  return out;
}

Word unpack_binary(PackedBinary w) {
  std::vector<Symbol> out(static_cast<std::size_t>(w.length));
  for (int i = 0; i < w.length; ++i) out[static_cast<std::size_t>(i)] = w.at(i);
  return Word(std::move(out), Alphabet(2));
}

namespace {

std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

}  // namespace

PackedBinary reverse(PackedBinary w) {
  if (w.length == 0) return w;
  return {reverse_bits(w.bits) >> (64 - w.length), w.length};
}

PackedBinary complement(PackedBinary w) { return {w.bits ^ w.mask(), w.length}; }

PackedBinary canonical_form(PackedBinary w) {
  const PackedBinary r = reverse(w);
  const std::uint64_t m = w.mask();
  return {std::min({w.bits, r.bits, w.bits ^ m, r.bits ^ m}), w.length};
}

}  // namespace runforge
