#ifndef EQCOH_ORDER_HPP
#define EQCOH_ORDER_HPP

#include <vector>

#include "eqcoh/ring.hpp"

namespace eqcoh {

// Total multiplicative well-order on monomials of a fixed context.
//  - Lex: plain lexicographic in context variable order.
//  - WDegRevLex: weighted degree first, ties by reverse lexicographic.
//  - ElimBlock: lex between blocks (drop block first), weighted-degrevlex
//    inside the kept block. Any monomial involving a drop variable beats any
//    monomial that does not, which is what elimination needs.
class MonomialOrder {
public:
  enum class Kind { Lex, WDegRevLex, ElimBlock };

  static MonomialOrder lex(RingPtr ctx);
  static MonomialOrder wdegrevlex(RingPtr ctx);
  static MonomialOrder elim_block(RingPtr ctx, const std::vector<std::string>& drop);

  Kind kind() const { return kind_; }
  const RingPtr& context() const { return ctx_; }
  bool in_drop_block(std::size_t i) const { return drop_.empty() ? false : drop_[i] != 0; }

  // strict comparison: a comes before b (a is smaller)
  bool less(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return less(b, a); }

private:
  MonomialOrder(Kind k, RingPtr ctx) : kind_(k), ctx_(std::move(ctx)) {}
  int cmp(const Exponents& a, const Exponents& b) const;
  int cmp_lex(const Exponents& a, const Exponents& b, bool drop_block) const;
  int cmp_wdrl(const Exponents& a, const Exponents& b, bool keep_only) const;

  Kind kind_;
  RingPtr ctx_;
  std::vector<char> drop_;
};

// Leading term of a nonzero polynomial under the order.
std::pair<Exponents, Rational> leading_term(const Polynomial& p, const MonomialOrder& order);

}  // namespace eqcoh

#endif
