#include "parryac/word.hpp"

#include <algorithm>

#include "parryac/errors.hpp"

namespace parryac {

FiniteWord FiniteWord::from_string(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'A') {
      letters.push_back(Letter::A);
    } else if (c == 'B') {
      letters.push_back(Letter::B);
    } else {
      throw ArgumentError(std::string("letter outside {A,B}: '") + c + "'");
    }
  }
  return FiniteWord(std::move(letters));
}

void FiniteWord::append(const FiniteWord& other) { append(other.letters()); }

void FiniteWord::append(std::span<const Letter> letters) {
  letters_.insert(letters_.end(), letters.begin(), letters.end());
}

void FiniteWord::append_repeated(Letter l, std::size_t count) {
  letters_.insert(letters_.end(), count, l);
}

void FiniteWord::truncate(std::size_t n) {
  if (n < letters_.size()) letters_.resize(n);
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return FiniteWord({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)});
}

FiniteWord FiniteWord::suffix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return FiniteWord({letters_.end() - static_cast<std::ptrdiff_t>(n), letters_.end()});
}

FiniteWord FiniteWord::mirror() const { return FiniteWord({letters_.rbegin(), letters_.rend()}); }

bool FiniteWord::is_prefix_of(const FiniteWord& other) const {
  return size() <= other.size() && std::equal(begin(), end(), other.begin());
}

bool FiniteWord::is_suffix_of(const FiniteWord& other) const {
  return size() <= other.size() &&
         std::equal(begin(), end(), other.end() - static_cast<std::ptrdiff_t>(size()));
}

std::string FiniteWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(to_char(l));
  return out;
}

std::size_t count_b(std::span<const Letter> letters) noexcept {
  return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), Letter::B));
}

ParikhVector parikh(const FiniteWord& w) {
  const std::size_t b = count_b(w.letters());
  return {BigInt(w.size() - b), BigInt(b)};
}

}  // namespace parryac
