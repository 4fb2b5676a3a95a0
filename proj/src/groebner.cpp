#include "eqcoh/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace eqcoh {

namespace {

Polynomial make_primitive(const Polynomial& p) {
  return p.is_zero() ? p : p.primitive_part();
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  auto [lm, lc] = leading_term(p, order);
  return p * lc.inverse();
}

// One full reduction pass: rewrite every reducible term, not just the lead.
// reducer_choice picks which divisor to use among candidates (index into the
// candidate list); the default takes the first. Confluence modulo a Groebner
// basis makes the result independent of this choice.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& gens,
                       const MonomialOrder& order,
                       const std::function<std::size_t(std::size_t)>& reducer_choice) {
  std::vector<std::pair<Exponents, Rational>> leads;
  leads.reserve(gens.size());
  for (const auto& g : gens) leads.push_back(leading_term(g, order));

  Polynomial rem = p;
  bool changed = true;
  while (changed && !rem.is_zero()) {
    changed = false;
    // find the largest reducible term
    const Exponents* target = nullptr;
    std::vector<std::size_t> divisors;
    for (const auto& [e, c] : rem.terms()) {
      std::vector<std::size_t> div_here;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (divides_mono(leads[i].first, e)) div_here.push_back(i);
      if (!div_here.empty() && (!target || order.less(*target, e))) {
        target = &e;
        divisors = std::move(div_here);
      }
    }
    if (target) {
      Exponents e = *target;
      Rational c = rem.terms().at(e);
      std::size_t pick = divisors[reducer_choice(divisors.size()) % divisors.size()];
      const auto& [lm, lc] = leads[pick];
      Exponents shift = div_mono(e, lm);
      Polynomial factor = Polynomial::monomial(rem.context(), shift, c / lc);
      rem -= factor * gens[pick];
      changed = true;
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!p.context()->same_as(*gb.order.context()))
    throw std::invalid_argument("normal_form: ring context mismatch");
  if (gb.generators.empty()) return p;
  return reduce_full(p, gb.generators, gb.order, [](std::size_t) { return 0; });
}

bool in_ideal(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.context()->same_as(*order.context()))
      throw std::invalid_argument("buchberger: ring context mismatch");
    if (!g.is_zero()) basis.push_back(make_primitive(g));
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  auto first_choice = [](std::size_t) -> std::size_t { return 0; };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto li = leading_term(basis[i], order).first;
      auto lj = leading_term(basis[j], order).first;
      pending.push_back({i, j, lcm_mono(li, lj)});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    // normal strategy: smallest lcm in the order, ties by (i, j)
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      if (order.less(pending[k].lcm, pending[best].lcm) ||
          (pending[k].lcm == pending[best].lcm &&
           std::make_pair(pending[k].i, pending[k].j) <
               std::make_pair(pending[best].i, pending[best].j)))
        best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    handled.insert({pr.i, pr.j});

    auto [li, ci] = leading_term(basis[pr.i], order);
    auto [lj, cj] = leading_term(basis[pr.j], order);

    // Buchberger criterion 1: coprime leading monomials
    if (mul_mono(li, lj) == pr.lcm) continue;

    // Buchberger criterion 2 (chain): some k with lead(k) | lcm and both
    // pairs already handled
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      auto lk = leading_term(basis[k], order).first;
      if (!divides_mono(lk, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    Polynomial spoly =
        basis[pr.i] * Polynomial::monomial(order.context(), div_mono(pr.lcm, li), ci.inverse()) -
        basis[pr.j] * Polynomial::monomial(order.context(), div_mono(pr.lcm, lj), cj.inverse());
    Polynomial rem = reduce_full(spoly, basis, order, first_choice);
    if (!rem.is_zero()) {
      basis.push_back(make_primitive(rem));
      push_pairs(basis.size() - 1);
    }
  }

  // minimalize: drop generators whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto li = leading_term(basis[i], order).first;
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      auto lj = leading_term(basis[j], order).first;
      if (divides_mono(lj, li) && (lj != li || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(basis[i]);
  }

  // interreduce tails and make monic
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = reduce_full(minimal[i], others, order, first_choice);
      r = make_primitive(r);
      if (r != minimal[i]) {
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        minimal[i] = r;
        changed = true;
      }
    }
  }
  for (auto& g : minimal) g = make_monic(g, order);
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(a, order).first, leading_term(b, order).first);
  });
  return GroebnerBasis{std::move(minimal), order, true};
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  MonomialOrder order = MonomialOrder::wdegrevlex(a.front().context());
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gby = buchberger(b, order);
  for (const auto& p : b)
    if (!in_ideal(p, ga)) return false;
  for (const auto& p : a)
    if (!in_ideal(p, gby)) return false;
  return true;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<std::string>& drop) {
  if (gens.empty()) throw std::invalid_argument("eliminate: no generators");
  const RingPtr& ctx = gens.front().context();
  if (drop.empty()) return buchberger(gens, MonomialOrder::wdegrevlex(ctx)).generators;
  for (const auto& name : drop) {
    int i = ctx->index_of(name);
    if (i < 0) throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    if (ctx->var(static_cast<std::size_t>(i)).role != VarRole::CellCoordinate)
      throw std::invalid_argument("eliminate: '" + name + "' is not a cell coordinate");
  }
  MonomialOrder order = MonomialOrder::elim_block(ctx, drop);
  GroebnerBasis gb = buchberger(gens, order);
  std::vector<char> dropped(ctx->size(), 0);
  for (const auto& name : drop) dropped[static_cast<std::size_t>(ctx->index_of(name))] = 1;
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators) {
    bool free_of_drop = true;
    for (std::size_t i = 0; i < ctx->size() && free_of_drop; ++i)
      if (dropped[i] && g.uses_var(i)) free_of_drop = false;
    if (free_of_drop) out.push_back(g);
  }
  return out;
}

std::vector<Exponents> standard_monomials(const GroebnerBasis& gb) {
  const RingPtr& ctx = gb.order.context();
  std::vector<Exponents> leads;
  for (const auto& g : gb.generators) leads.push_back(leading_term(g, gb.order).first);

  // bound per variable from pure powers in the initial ideal
  std::vector<int> bound(ctx->size(), -1);
  for (const auto& lm : leads) {
    int nz = -1;
    bool pure = true;
    for (std::size_t i = 0; i < lm.size(); ++i) {
      if (lm[i] > 0) {
        if (nz >= 0) pure = false;
        nz = static_cast<int>(i);
      }
    }
    if (pure && nz >= 0) {
      std::size_t i = static_cast<std::size_t>(nz);
      if (bound[i] < 0 || lm[i] < bound[i]) bound[i] = lm[i];
    }
    if (pure && nz < 0) return {};  // 1 in the ideal
  }
  for (std::size_t i = 0; i < ctx->size(); ++i)
    if (bound[i] < 0) throw MathError("standard_monomials: staircase is unbounded");

  std::vector<Exponents> out;
  Exponents cur(ctx->size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ctx->size()) {
      for (const auto& lm : leads)
        if (divides_mono(lm, cur)) return;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      cur[i] = k;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::optional<long long> quotient_dimension(const std::vector<Polynomial>& gens,
                                            const MonomialOrder& order) {
  GroebnerBasis gb = buchberger(gens, order);
  try {
    return static_cast<long long>(standard_monomials(gb).size());
  } catch (const MathError&) {
    return std::nullopt;
  }
}

std::optional<long long> quotient_dimension(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("quotient_dimension: no generators");
  return quotient_dimension(gens, MonomialOrder::wdegrevlex(gens.front().context()));
}

HilbertSeries hilbert_series_ideal(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("hilbert_series_ideal: no generators");
  const RingPtr& ctx = gens.front().context();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.weighted_degree().has_value())
      throw MathError("hilbert_series_ideal: inhomogeneous generator " + g.str());
  }
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return hilbert_series_monomial_quotient({}, ctx);
  MonomialOrder order = MonomialOrder::wdegrevlex(ctx);
  GroebnerBasis gb = buchberger(nonzero, order);
  std::vector<Exponents> initial;
  for (const auto& g : gb.generators) initial.push_back(leading_term(g, order).first);
  return hilbert_series_monomial_quotient(initial, ctx);
}

}  // namespace eqcoh
