#include "eqcoh/matrix.hpp"

#include <sstream>

namespace eqcoh {

PolyMat unitriangular_inverse(const PolyMat& m, const RingPtr& ctx) {
  std::size_t n = m.rows();
  PolyMat nil = m - poly_identity(n, ctx);
  PolyMat inv = poly_identity(n, ctx);
  PolyMat power = poly_identity(n, ctx);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    if (is_zero_mat(power)) break;
    inv = (k % 2 == 0) ? inv + power : inv - power;
  }
  return inv;
}

std::size_t rat_rank(RatMat m) {
  std::size_t rank = 0;
  std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Rational inv = m.at(rank, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename T>
std::vector<T> solve_rational_system(RatMat q, std::vector<T> rhs, const T& zero) {
  std::size_t rows = q.rows(), cols = q.cols();
  std::vector<int> pivot_col(rows, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && q.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(q.at(pivot, j), q.at(rank, j));
      std::swap(rhs[pivot], rhs[rank]);
    }
    Rational inv = q.at(rank, col).inverse();
    for (std::size_t j = col; j < cols; ++j) q.at(rank, j) *= inv;
    rhs[rank] = rhs[rank] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || q.at(i, col).is_zero()) continue;
      Rational f = q.at(i, col);
      for (std::size_t j = col; j < cols; ++j) q.at(i, j) -= f * q.at(rank, j);
      rhs[i] -= rhs[rank] * f;
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  // consistency: zero rows must have zero rhs
  auto is_zero_val = [&](const T& v) { return v == zero; };
  for (std::size_t i = rank; i < rows; ++i)
    if (!is_zero_val(rhs[i])) throw MathError("solve_rational_system: inconsistent system");
  std::vector<T> solution(cols, zero);
  for (std::size_t i = 0; i < rank; ++i)
    solution[static_cast<std::size_t>(pivot_col[i])] = rhs[i];
  return solution;
}

template std::vector<Rational> solve_rational_system<Rational>(RatMat, std::vector<Rational>,
                                                               const Rational&);
template std::vector<Polynomial> solve_rational_system<Polynomial>(RatMat, std::vector<Polynomial>,
                                                                   const Polynomial&);

namespace {
template <typename M, typename F>
std::string mat_str_impl(const M& m, F&& entry) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << entry(m.at(i, j));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}
}  // namespace

std::string mat_str(const RatMat& m) {
  return mat_str_impl(m, [](const Rational& r) { return r.str(); });
}

std::string mat_str(const PolyMat& m) {
  return mat_str_impl(m, [](const Polynomial& p) { return p.str(); });
}

}  // namespace eqcoh
