#include "parryac/matrix.hpp"

namespace parryac {

Mat2& Mat2::operator+=(const Mat2& o) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  for (std::size_t i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat2& Mat2::operator*=(const BigInt& scalar) {
  for (auto& x : e_) x *= scalar;
  return *this;
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l(0, 0) * r(0, 0) + l(0, 1) * r(1, 0), l(0, 0) * r(0, 1) + l(0, 1) * r(1, 1),
          l(1, 0) * r(0, 0) + l(1, 1) * r(1, 0), l(1, 0) * r(0, 1) + l(1, 1) * r(1, 1)};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "((" << m(0, 0) << "," << m(0, 1) << "),(" << m(1, 0) << "," << m(1, 1) << "))";
}

ParikhVector operator*(const ParikhVector& v, const Mat2& m) {
  return {v.count_a * m(0, 0) + v.count_b * m(1, 0), v.count_a * m(0, 1) + v.count_b * m(1, 1)};
}

}  // namespace parryac
