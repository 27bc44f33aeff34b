#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diskcx {

/// Signed generator index: +i stands for g_i, -i for its inverse.
using Letter = int;

/// Position of a letter in the fixed order g1 < g1^-1 < g2 < g2^-1 < ...
constexpr int letter_rank(Letter l) { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0); }

/// A cyclically reduced word in the free group on g_1, ..., g_n.
///
/// Values are only produced through `cyclic_reduce` and `canonical`, so the
/// letters never contain an adjacent cancelling pair, including across the
/// wrap-around. The empty word is the trivial class.
class CyclicWord {
 public:
  CyclicWord() = default;

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool trivial() const noexcept { return letters_.empty(); }

  /// Formal inverse (reverse order, negate every letter).
  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

 private:
  friend CyclicWord cyclic_reduce(std::span<const Letter> raw);
  friend CyclicWord canonical(const CyclicWord& w);
  explicit CyclicWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// Cancels adjacent x x^-1 pairs.
std::vector<Letter> free_reduce(std::span<const Letter> raw);

/// Free reduction followed by stripping cancelling first/last letters.
/// May return the trivial word.
CyclicWord cyclic_reduce(std::span<const Letter> raw);

/// Lexicographically least rotation of w or of its inverse, under
/// `letter_rank`. Idempotent. The trivial word maps to itself.
CyclicWord canonical(const CyclicWord& w);

/// Reduces and canonicalizes a raw letter sequence.
/// Throws DomainError("nontrivial word") when reduction empties it.
CyclicWord canonical(std::span<const Letter> raw);

bool is_canonical(const CyclicWord& w);

/// Writes `g1 g2 -g1 -g2`; the trivial word renders as the empty string.
std::string render(std::span<const Letter> letters);
inline std::string render(const CyclicWord& w) { return render(w.letters()); }

/// Parses whitespace-separated tokens `g<i>` / `-g<i>` (also `g<i>^-1`).
/// Throws DomainError on malformed tokens.
std::vector<Letter> parse_letters(std::string_view text);

/// Largest |i| appearing in the word (0 for the trivial word).
int max_generator(std::span<const Letter> letters);

/// Primitive root: w = root^exponent with root not a proper power.
struct PrimitiveRoot {
  CyclicWord root;
  int exponent = 1;
};
PrimitiveRoot primitive_root(const CyclicWord& w);

}  // namespace diskcx
