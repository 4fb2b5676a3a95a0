#ifndef EQCOH_HILBERT_HPP
#define EQCOH_HILBERT_HPP

#include <string>
#include <vector>

#include "eqcoh/ring.hpp"

namespace eqcoh {

// Integer polynomial in the formal variable t, dense by degree.
using IntPoly = std::vector<long long>;

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_add(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_sub(const IntPoly& a, const IntPoly& b);
IntPoly ipoly_shift(const IntPoly& a, int k);  // multiply by t^k
void ipoly_trim(IntPoly& a);
bool ipoly_is_zero(const IntPoly& a);
// exact division by (1 - t^d); returns false if not divisible
bool ipoly_divide_one_minus_td(const IntPoly& a, int d, IntPoly& quotient);
std::string ipoly_str(const IntPoly& a);
long long ipoly_eval_one(const IntPoly& a);

// Rational function numerator(t) / prod_j (1 - t^{d_j}) with non-negative
// series coefficients when it is the Hilbert series of a graded quotient.
class HilbertSeries {
public:
  HilbertSeries() : numerator_{0} {}
  HilbertSeries(IntPoly numerator, std::vector<int> denominator_weights);

  const IntPoly& numerator() const { return numerator_; }
  const std::vector<int>& denominator_weights() const { return denominator_weights_; }

  // Cancel every (1 - t^d) denominator factor that divides the numerator.
  HilbertSeries reduced() const;

  // Coefficients of the power-series expansion through degree max_degree.
  std::vector<long long> expand(int max_degree) const;

  // Exact equality as rational functions (cross multiplication).
  bool same_series(const HilbertSeries& o) const;

  // Multiply by prod (1 - t^{w}) over the given weights; if the result is a
  // polynomial, return its coefficients, otherwise nullopt.
  std::optional<IntPoly> clear_factors(const std::vector<int>& weights) const;

  std::string str() const;

private:
  IntPoly numerator_;
  std::vector<int> denominator_weights_;  // kept sorted
};

// Hilbert series of ctx-ring modulo the monomial ideal spanned by the given
// exponent vectors. Generators are minimalized internally.
HilbertSeries hilbert_series_monomial_quotient(const std::vector<Exponents>& leading_terms,
                                               const RingPtr& ctx);

// Test-grade oracle: count monomials of each weighted degree <= max_degree
// not divisible by any generator (brute-force enumeration).
std::vector<long long> monomial_quotient_counts(const std::vector<Exponents>& gens,
                                                const RingPtr& ctx, int max_degree);

}  // namespace eqcoh

#endif
