#include "diskcx/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "diskcx/error.hpp"

namespace diskcx {

namespace {

bool rank_less(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return letter_rank(x) < letter_rank(y); });
}

// Least rotation by brute force; words here are short.
std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w;
  std::vector<Letter> rot(w.size());
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::rotate_copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s), w.end(), rot.begin());
    if (rank_less(rot, best)) best = rot;
  }
  return best;
}

}  // namespace

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l = -l;
  return CyclicWord(std::move(inv));
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (rank_less(a.letters_, b.letters_)) return std::strong_ordering::less;
  if (rank_less(b.letters_, a.letters_)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Letter> free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw DomainError("letters are nonzero generator indices", "letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

CyclicWord cyclic_reduce(std::span<const Letter> raw) {
  auto w = free_reduce(raw);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return CyclicWord(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                        w.begin() + static_cast<std::ptrdiff_t>(hi)));
}

CyclicWord canonical(const CyclicWord& w) {
  if (w.trivial()) return w;
  auto a = least_rotation(w.letters_);
  auto b = least_rotation(w.inverse().letters_);
  return CyclicWord(rank_less(b, a) ? std::move(b) : std::move(a));
}

CyclicWord canonical(std::span<const Letter> raw) {
  auto w = cyclic_reduce(raw);
  if (w.trivial()) throw DomainError("nontrivial word", "word reduces to the identity");
  return canonical(w);
}

bool is_canonical(const CyclicWord& w) { return canonical(w) == w; }

std::string render(std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    if (letters[i] < 0) out += '-';
    out += 'g';
    out += std::to_string(letters[i] < 0 ? -letters[i] : letters[i]);
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    int sign = 1;
    if (t.starts_with('-')) {
      sign = -1;
      t.remove_prefix(1);
    }
    for (std::string_view inv : {"^-1", "\u207B\u00B9"})
      if (t.ends_with(inv)) {
        sign = -sign;
        t.remove_suffix(inv.size());
        break;
      }
    if (!t.starts_with('g') && !t.starts_with('G'))
      throw DomainError("word tokens of the form g<i> or -g<i>", "bad word token '" + tok + "'");
    t.remove_prefix(1);
    int idx = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), idx);
    if (ec != std::errc{} || p != t.data() + t.size() || idx <= 0)
      throw DomainError("word tokens of the form g<i> or -g<i>", "bad word token '" + tok + "'");
    out.push_back(sign * idx);
  }
  return out;
}

int max_generator(std::span<const Letter> letters) {
  int m = 0;
  for (Letter l : letters) m = std::max(m, l < 0 ? -l : l);
  return m;
}

PrimitiveRoot primitive_root(const CyclicWord& w) {
  const auto& l = w.letters();
  const std::size_t n = l.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = l[i] == l[i - p];
    if (periodic) {
      std::vector<Letter> r(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(p));
      return {cyclic_reduce(r), static_cast<int>(n / p)};
    }
  }
  return {w, 1};
}

}  // namespace diskcx
