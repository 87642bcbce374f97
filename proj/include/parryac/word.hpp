#ifndef PARRYAC_WORD_HPP
#define PARRYAC_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parryac/bigint.hpp"

namespace parryac {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr char to_char(Letter l) noexcept { return l == Letter::A ? 'A' : 'B'; }

// Finite word over {A, B}, one byte per letter with O(1) random access.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Throws ArgumentError on characters other than 'A' and 'B'.
  static FiniteWord from_string(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void reserve(std::size_t n) { letters_.reserve(n); }
  void push_back(Letter l) { letters_.push_back(l); }
  void append(const FiniteWord& other);
  void append(std::span<const Letter> letters);
  void append_repeated(Letter l, std::size_t count);
  void truncate(std::size_t n);

  FiniteWord prefix(std::size_t n) const;
  FiniteWord suffix(std::size_t n) const;
  FiniteWord mirror() const;

  bool is_prefix_of(const FiniteWord& other) const;
  bool is_suffix_of(const FiniteWord& other) const;

  std::string to_string() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Letter counts (|w|_A, |w|_B).
struct ParikhVector {
  BigInt count_a;
  BigInt count_b;

  BigInt length() const { return count_a + count_b; }

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend bool operator<(const ParikhVector& l, const ParikhVector& r) {
    return l.count_a != r.count_a ? l.count_a < r.count_a : l.count_b < r.count_b;
  }
};

ParikhVector parikh(const FiniteWord& w);
std::size_t count_b(std::span<const Letter> letters) noexcept;

}  // namespace parryac

#endif  // PARRYAC_WORD_HPP
