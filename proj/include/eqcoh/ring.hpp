#ifndef EQCOH_RING_HPP
#define EQCOH_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqcoh/rational.hpp"

namespace eqcoh {

// Raised when a computation contradicts one of the exact identities the
// engine is built around (homogeneity, regularity, finiteness, ...).
class MathError : public std::runtime_error {
public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

enum class VarRole { Parameter, CellCoordinate };

struct Variable {
  std::string name;
  int weight = 2;  // grading weight, positive even
  VarRole role = VarRole::Parameter;

  bool operator==(const Variable& o) const {
    return name == o.name && weight == o.weight && role == o.role;
  }
};

// Ordered list of graded variables. Weights are the grading used for
// homogeneity: 2 for torus parameters, the Bialynicki-Birula weight a_i for
// cell coordinates, 2k for Kostant parameters.
class RingContext {
public:
  static std::shared_ptr<const RingContext> make(std::vector<Variable> vars);

  const std::vector<Variable>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_.at(i); }
  int index_of(const std::string& name) const;  // -1 if absent

  bool same_as(const RingContext& o) const { return vars_ == o.vars_; }

  std::vector<int> weights() const;
  std::vector<std::size_t> indices_with_role(VarRole role) const;

  // Sub-context keeping the listed variables (in this context's order).
  std::shared_ptr<const RingContext> restrict_to(
      const std::vector<std::string>& keep) const;

private:
  explicit RingContext(std::vector<Variable> vars);
  std::vector<Variable> vars_;
  std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

// Dense per-context exponent vector.
using Exponents = std::vector<int>;

int weighted_degree_of(const Exponents& e, const RingContext& ctx);
bool divides_mono(const Exponents& a, const Exponents& b);  // a | b
Exponents lcm_mono(const Exponents& a, const Exponents& b);
Exponents mul_mono(const Exponents& a, const Exponents& b);
// b / a, requires a | b
Exponents div_mono(const Exponents& b, const Exponents& a);

// Sparse multivariate polynomial with exact rational coefficients over a
// shared RingContext. No zero coefficients are stored.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(RingPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(RingPtr ctx, const Rational& c);
  static Polynomial variable(RingPtr ctx, const std::string& name, int power = 1);
  static Polynomial monomial(RingPtr ctx, const Exponents& e, const Rational& c);

  const RingPtr& context() const { return ctx_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Weighted degree if homogeneous, std::nullopt otherwise.
  // Throws MathError on the zero polynomial.
  std::optional<int> weighted_degree() const;
  bool is_homogeneous() const { return is_zero() || weighted_degree().has_value(); }
  int total_weighted_degree() const;  // max term degree, zero poly -> -1

  bool uses_var(std::size_t i) const;
  int degree_in(std::size_t i) const;  // max exponent of variable i

  // Image under the ring homomorphism sending the named variables to the
  // given polynomials (same context) and fixing the rest.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  Polynomial substitute_values(const std::map<std::string, Rational>& values) const;

  // Full evaluation; throws if a variable with a nonzero exponent is unbound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  // Move to another context matching variables by name. Fails if a used
  // variable is missing in the target.
  Polynomial transport(const RingPtr& target) const;

  // Content (gcd of coefficients, positive) and the primitive part. The
  // primitive part has coprime integer coefficients; the sign is normalized
  // so the canonical leading term is positive.
  Rational content() const;
  Polynomial primitive_part() const;

  // Canonical text form: terms by decreasing weighted degree, ties broken by
  // the reversed-exponent lexicographic comparison.
  std::string str() const;
  static Polynomial parse(const RingPtr& ctx, const std::string& text);

private:
  void check_ctx(const Polynomial& o) const;
  RingPtr ctx_;
  std::map<Exponents, Rational> terms_;
};

// Printing order: higher weighted degree first; within a degree compare
// exponent vectors from the last variable backwards (deglex on the reversed
// variable sequence). Returns true if a should print before b.
bool print_before(const Exponents& a, const Exponents& b, const RingContext& ctx);

}  // namespace eqcoh

#endif
