#ifndef EQCOH_LIEALG_HPP
#define EQCOH_LIEALG_HPP

#include <string>
#include <vector>

#include "eqcoh/matrix.hpp"
#include "eqcoh/ring.hpp"

namespace eqcoh {

// Exact traceless n x n matrices; sl_n elements are plain RatMat with a
// trace-zero check where it matters.

RatMat bracket(const RatMat& a, const RatMat& b);
PolyMat bracket(const PolyMat& a, const PolyMat& b);
Rational trace(const RatMat& m);

// Principal sl2-triple in sl_n: e the superdiagonal-ones matrix,
// h = diag(n-1, n-3, ..., 1-n), f with subdiagonal entries i(n-i).
// Satisfies [h,e] = 2e, [h,f] = -2f, [e,f] = h exactly.
struct PrincipalTriple {
  int n;
  RatMat e, f, h;
};
PrincipalTriple principal_triple(int n);

// dim ker(ad_x : sl_n -> sl_n) == n-1, by exact Gaussian elimination.
bool is_regular(const RatMat& x);

// Torus element in the chart v_i = a_{i+1,i+1} - a_{11}: realizes
// diag(0, v_1, ..., v_{n-1}) - (sum v_i)/n * I_n.
struct TorusElement {
  int n = 0;
  std::vector<Rational> coords;  // v_1 .. v_{n-1}

  RatMat realize() const;
  std::vector<Rational> diagonal() const;  // before the trace shift: (0, v_1, ...)
};

// Matrix realizing the i-th v-coordinate direction (1-based), i.e. the torus
// element with v_i = 1 and the others zero.
RatMat torus_direction(int n, int i);

// Kostant section S = e + C_{sl_n}(f). basis[k-2] is the ad_h-weight
// -2(k-1) vector scaled so its lowest-row leftmost nonzero entry is 1
// (this reproduces the rows (c_2 0 1 / c_3 c_2 0) shape at n = 3).
// Parameter c_k carries grading weight 2k.
struct KostantSection {
  int n;
  std::vector<RatMat> basis;            // for c_2 .. c_n
  std::vector<std::string> param_names;  // "c2" .. "cn"
  std::vector<int> param_weights;        // 4, 6, ..., 2n

  RatMat point(const std::vector<Rational>& coeffs) const;  // e + sum c_k b_k
};
KostantSection kostant_section(int n);

// Thrown by the uniform-diagonalisation solver on non-regular input; carries
// the vanishing root.
class NonRegularTorusError : public MathError {
public:
  NonRegularTorusError(int i, int j, const std::string& detail)
      : MathError(detail), root_i(i), root_j(j) {}
  int root_i, root_j;  // diagonal positions with equal entries (1-based)
};

// The unique upper-unitriangular M_w with Ad_{M_w}(w) = e + w, for regular
// rational w. Entry (i,j) is 1/prod_{k=i..j-1}(d_j - d_k) over the realized
// diagonal d.
RatMat solve_unipotent_conjugator(const TorusElement& w);

// Fraction of polynomials, used for the symbolic closed form of M_w. No gcd
// reduction; equality is by cross multiplication.
struct PolyFraction {
  Polynomial num, den;

  static PolyFraction of(Polynomial p) {
    RingPtr ctx = p.context();
    return {std::move(p), Polynomial::constant(ctx, Rational(1))};
  }
  bool same_as(const PolyFraction& o) const { return num * o.den == o.num * den; }
};
PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);

// Symbolic M_w over the fraction field of ctx, which must provide variables
// v1..v_{n-1}.
Mat<PolyFraction> unipotent_conjugator_symbolic(int n, const RingPtr& ctx);

// Solution of Ad_{A(w)}(e+w) = chi(w): A lower-unitriangular, chi in the
// Kostant section. Solved level by level in the ad_h grading; entries stay
// polynomial in the input, so the same code runs on rational and symbolic w.
template <typename T>
struct KostantConjugation {
  Mat<T> conjugator;            // A(w), lower unitriangular
  Mat<T> section_point;         // chi(w) = e + sum c_k b_k
  std::vector<T> section_coeffs;  // c_2 .. c_n
};

KostantConjugation<Rational> solve_kostant_conjugator(const TorusElement& w);
// diag entries given as polynomials (must sum to zero after the trace shift;
// pass the realized diagonal d_1..d_n)
KostantConjugation<Polynomial> solve_kostant_conjugator_symbolic(
    int n, const std::vector<Polynomial>& diagonal);

// All diagonal permutations of w, re-expressed in v-coordinates, dedupped,
// sorted.
std::vector<TorusElement> weyl_orbit(const TorusElement& w);

// Type A root data: alpha_j(w) = d_j - d_{j+1} = v_{j-1} - v_j (v_0 = 0),
// coroots h_j = E_jj - E_{j+1,j+1}, Cartan integers alpha_j(h_k).
struct RootData {
  int n;                             // sl_n
  std::vector<std::vector<int>> cartan;  // cartan[j][k] = alpha_{j+1}(h_{k+1})
};
RootData root_data(int n);
int cartan_integer(int n, int j, int k);  // 1-based simple-root indices
// alpha_j as a linear polynomial in v-variables named v1..v_{n-1} of ctx
Polynomial simple_root_poly(int n, int j, const RingPtr& ctx);

}  // namespace eqcoh

#endif
