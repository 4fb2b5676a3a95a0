#include "eqcoh/order.hpp"

#include <algorithm>

namespace eqcoh {

MonomialOrder MonomialOrder::lex(RingPtr ctx) { return MonomialOrder(Kind::Lex, std::move(ctx)); }

MonomialOrder MonomialOrder::wdegrevlex(RingPtr ctx) {
  return MonomialOrder(Kind::WDegRevLex, std::move(ctx));
}

MonomialOrder MonomialOrder::elim_block(RingPtr ctx, const std::vector<std::string>& drop) {
  MonomialOrder o(Kind::ElimBlock, std::move(ctx));
  o.drop_.assign(o.ctx_->size(), 0);
  for (const auto& name : drop) {
    int i = o.ctx_->index_of(name);
    if (i < 0)
      throw std::invalid_argument("elim_block: unknown variable '" + name + "'");
    o.drop_[static_cast<std::size_t>(i)] = 1;
  }
  return o;
}

int MonomialOrder::cmp_lex(const Exponents& a, const Exponents& b, bool drop_block) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!drop_.empty() && (drop_[i] != 0) != drop_block) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::cmp_wdrl(const Exponents& a, const Exponents& b, bool keep_only) const {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (keep_only && !drop_.empty() && drop_[i]) continue;
    da += a[i] * ctx_->var(i).weight;
    db += b[i] * ctx_->var(i).weight;
  }
  if (da != db) return da < db ? -1 : 1;
  // revlex tie-break: larger is the one whose last difference is negative
  for (std::size_t i = a.size(); i-- > 0;) {
    if (keep_only && !drop_.empty() && drop_[i]) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::cmp(const Exponents& a, const Exponents& b) const {
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b, false);
    case Kind::WDegRevLex:
      return cmp_wdrl(a, b, false);
    case Kind::ElimBlock: {
      int c = cmp_lex(a, b, true);
      if (c != 0) return c;
      return cmp_wdrl(a, b, true);
    }
  }
  return 0;
}

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const { return cmp(a, b) < 0; }

std::pair<Exponents, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw MathError("leading_term: zero polynomial");
  const Exponents* best = nullptr;
  const Rational* coeff = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || order.less(*best, e)) {
      best = &e;
      coeff = &c;
    }
  }
  return {*best, *coeff};
}

}  // namespace eqcoh
