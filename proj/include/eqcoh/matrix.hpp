#ifndef EQCOH_MATRIX_HPP
#define EQCOH_MATRIX_HPP

#include <vector>

#include "eqcoh/rational.hpp"
#include "eqcoh/ring.hpp"

namespace eqcoh {

// Small dense matrix over any exact coefficient type (Rational, Polynomial,
// PolyFraction). Sizes here never exceed a few dozen.
template <typename T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(std::size_t n, const T& one, const T& zero) {
    Mat m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.rows_, y.cols_, x.rows_ && y.cols_ ? x.a_[0] - x.a_[0] : T());
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xv = x.at(i, k);
        for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xv * y.at(k, j);
      }
    return r;
  }
  Mat operator*(const T& c) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * c;
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using RatMat = Mat<Rational>;
using PolyMat = Mat<Polynomial>;

inline RatMat rat_identity(std::size_t n) {
  return RatMat::identity(n, Rational(1), Rational(0));
}

inline PolyMat poly_zero_mat(std::size_t r, std::size_t c, const RingPtr& ctx) {
  return PolyMat(r, c, Polynomial::zero(ctx));
}

inline PolyMat poly_identity(std::size_t n, const RingPtr& ctx) {
  return PolyMat::identity(n, Polynomial::constant(ctx, Rational(1)), Polynomial::zero(ctx));
}

inline PolyMat lift_to_poly(const RatMat& m, const RingPtr& ctx) {
  PolyMat r = poly_zero_mat(m.rows(), m.cols(), ctx);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = Polynomial::constant(ctx, m.at(i, j));
  return r;
}

inline bool is_zero_mat(const RatMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

inline bool is_zero_mat(const PolyMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

// Inverse of I + N with N strictly (block-)lower or upper triangular:
// finite Neumann sum. Works over Polynomial entries.
PolyMat unitriangular_inverse(const PolyMat& m, const RingPtr& ctx);

// Rank over Q by Gaussian elimination.
std::size_t rat_rank(RatMat m);

// Solve the linear system Q u = rhs where Q is rational and the right-hand
// side has entries in a Q-vector space T (Rational or Polynomial). The
// system must be consistent; free unknowns are set to zero.
template <typename T>
std::vector<T> solve_rational_system(RatMat q, std::vector<T> rhs, const T& zero);

// Row-major nested-list rendering, the canonical matrix text form.
std::string mat_str(const RatMat& m);
std::string mat_str(const PolyMat& m);

}  // namespace eqcoh

#endif
