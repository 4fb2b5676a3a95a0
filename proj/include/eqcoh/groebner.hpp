#ifndef EQCOH_GROEBNER_HPP
#define EQCOH_GROEBNER_HPP

#include <optional>
#include <vector>

#include "eqcoh/hilbert.hpp"
#include "eqcoh/order.hpp"
#include "eqcoh/ring.hpp"

namespace eqcoh {

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, deterministically sorted
  MonomialOrder order;
  bool reduced = false;
};

// Reduced Groebner basis via Buchberger, normal pair-selection strategy
// (smallest lcm in the order, ties by pair index), with the coprime-lead and
// chain criteria. Deterministic for fixed input and order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

// Complete reduction of p modulo the basis; zero iff p is in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb);

// Mutual ideal membership of the two generating sets (the golden-file notion
// of ideal equality).
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

// Generators of the elimination ideal: the intersection of the ideal with
// the subring omitting the dropped variables. Output lives in the original
// context but is free of the dropped variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<std::string>& drop);

// Dimension of the quotient ring as a Q-vector space: the number of standard
// monomials under the order. nullopt means infinite.
std::optional<long long> quotient_dimension(const std::vector<Polynomial>& gens);
std::optional<long long> quotient_dimension(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order);

// Standard monomials (only when the count is finite).
std::vector<Exponents> standard_monomials(const GroebnerBasis& gb);

// Hilbert series of the graded quotient by a homogeneous ideal, via the
// initial ideal under a weighted-degree-compatible order.
HilbertSeries hilbert_series_ideal(const std::vector<Polynomial>& gens);

}  // namespace eqcoh

#endif
