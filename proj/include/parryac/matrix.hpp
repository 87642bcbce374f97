#ifndef PARRYAC_MATRIX_HPP
#define PARRYAC_MATRIX_HPP

#include <array>
#include <cstddef>
#include <ostream>

#include "parryac/bigint.hpp"
#include "parryac/word.hpp"

namespace parryac {

// 2x2 exact integer matrix. Row 0 holds the Parikh vector of the image of A,
// row 1 that of the image of B; columns count A and B respectively.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(BigInt a00, BigInt a01, BigInt a10, BigInt a11)
      : e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }

  const BigInt& operator()(std::size_t row, std::size_t col) const { return e_[2 * row + col]; }
  BigInt& operator()(std::size_t row, std::size_t col) { return e_[2 * row + col]; }

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(const BigInt& scalar);

  friend Mat2 operator+(Mat2 l, const Mat2& r) { return l += r; }
  friend Mat2 operator-(Mat2 l, const Mat2& r) { return l -= r; }
  friend Mat2 operator*(Mat2 l, const BigInt& s) { return l *= s; }
  friend Mat2 operator*(const Mat2& l, const Mat2& r);

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::array<BigInt, 4> e_{};
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

// Row vector times matrix: (a, b) * M.
ParikhVector operator*(const ParikhVector& v, const Mat2& m);

using IncidenceMatrix = Mat2;

}  // namespace parryac

#endif  // PARRYAC_MATRIX_HPP
