#include "eqcoh/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace eqcoh {

IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
  if (ipoly_is_zero(a) || ipoly_is_zero(b)) return {0};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ipoly_trim(r);
  return r;
}

IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ipoly_trim(r);
  return r;
}

IntPoly ipoly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ipoly_trim(r);
  return r;
}

IntPoly ipoly_shift(const IntPoly& a, int k) {
  if (ipoly_is_zero(a)) return {0};
  IntPoly r(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
  return r;
}

void ipoly_trim(IntPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

bool ipoly_is_zero(const IntPoly& a) {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

bool ipoly_divide_one_minus_td(const IntPoly& a, int d, IntPoly& quotient) {
  // a(t) = q(t) * (1 - t^d)  <=>  q_i = a_i + q_{i-d}
  if (ipoly_is_zero(a)) {
    quotient = {0};
    return true;
  }
  if (static_cast<int>(a.size()) <= d) return false;
  IntPoly q(a.size() - static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    long long prev = i >= static_cast<std::size_t>(d) ? q[i - static_cast<std::size_t>(d)] : 0;
    q[i] = a[i] + prev;
  }
  // q * (1 - t^d) must reproduce a, including the top d coefficients
  IntPoly check = ipoly_sub(q, ipoly_shift(q, d));
  IntPoly diff = ipoly_sub(check, a);
  if (!ipoly_is_zero(diff)) return false;
  ipoly_trim(q);
  quotient = q;
  return true;
}

std::string ipoly_str(const IntPoly& a) {
  if (ipoly_is_zero(a)) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    long long c = a[i];
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long ac = c < 0 ? -c : c;
    if (i == 0) {
      out << ac;
    } else {
      if (ac != 1) out << ac << "*";
      out << "t";
      if (i != 1) out << "^" << i;
    }
  }
  return out.str();
}

long long ipoly_eval_one(const IntPoly& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

HilbertSeries::HilbertSeries(IntPoly numerator, std::vector<int> denominator_weights)
    : numerator_(std::move(numerator)), denominator_weights_(std::move(denominator_weights)) {
  ipoly_trim(numerator_);
  std::sort(denominator_weights_.begin(), denominator_weights_.end());
}

HilbertSeries HilbertSeries::reduced() const {
  IntPoly num = numerator_;
  std::vector<int> den = denominator_weights_;
  bool progress = true;
  while (progress && !ipoly_is_zero(num)) {
    progress = false;
    for (std::size_t i = 0; i < den.size(); ++i) {
      IntPoly q;
      if (ipoly_divide_one_minus_td(num, den[i], q)) {
        num = q;
        den.erase(den.begin() + static_cast<std::ptrdiff_t>(i));
        progress = true;
        break;
      }
    }
  }
  if (ipoly_is_zero(num)) den.clear();
  return HilbertSeries(num, den);
}

std::vector<long long> HilbertSeries::expand(int max_degree) const {
  std::vector<long long> c(static_cast<std::size_t>(max_degree) + 1, 0);
  for (std::size_t i = 0; i < numerator_.size() && i <= static_cast<std::size_t>(max_degree); ++i)
    c[i] = numerator_[i];
  // multiply by 1/(1-t^d) = 1 + t^d + t^{2d} + ...
  for (int d : denominator_weights_) {
    for (std::size_t i = static_cast<std::size_t>(d); i < c.size(); ++i)
      c[i] += c[i - static_cast<std::size_t>(d)];
  }
  return c;
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
  IntPoly left = numerator_;
  for (int d : o.denominator_weights_) {
    IntPoly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(d)] = -1;
    left = ipoly_mul(left, f);
  }
  IntPoly right = o.numerator_;
  for (int d : denominator_weights_) {
    IntPoly f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(d)] = -1;
    right = ipoly_mul(right, f);
  }
  return ipoly_is_zero(ipoly_sub(left, right));
}

std::optional<IntPoly> HilbertSeries::clear_factors(const std::vector<int>& weights) const {
  IntPoly num = numerator_;
  std::vector<int> den = denominator_weights_;
  for (int w : weights) {
    auto it = std::find(den.begin(), den.end(), w);
    if (it != den.end()) {
      den.erase(it);
    } else {
      IntPoly f(static_cast<std::size_t>(w) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(w)] = -1;
      num = ipoly_mul(num, f);
    }
  }
  // remaining denominator factors must divide the numerator exactly
  for (int d : den) {
    IntPoly q;
    if (!ipoly_divide_one_minus_td(num, d, q)) return std::nullopt;
    num = q;
  }
  ipoly_trim(num);
  return num;
}

std::string HilbertSeries::str() const {
  HilbertSeries r = reduced();
  std::string s = "(" + ipoly_str(r.numerator_) + ")";
  if (!r.denominator_weights_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < r.denominator_weights_.size(); ++i) {
      if (i) s += "*";
      s += "(1 - t^" + std::to_string(r.denominator_weights_[i]) + ")";
    }
    s += ")";
  }
  return s;
}

namespace {

// remove generators divisible by another generator; drop duplicates
std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides_mono(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simple_power(const Exponents& e) {
  int nonzero = 0;
  for (int x : e) nonzero += x > 0;
  return nonzero <= 1;
}

// numerator of HS(R/I) over prod_i (1 - t^{w_i}); recursion by variable pivot
IntPoly quotient_numerator(std::vector<Exponents> gens, const RingContext& ctx) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) return {0};
  }
  bool all_simple = std::all_of(gens.begin(), gens.end(), is_simple_power);
  if (all_simple) {
    IntPoly r{1};
    for (const auto& g : gens) {
      int d = weighted_degree_of(g, ctx);
      IntPoly f(static_cast<std::size_t>(d) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(d)] = -1;
      r = ipoly_mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in the most non-simple generators
  std::vector<int> count(ctx.size(), 0);
  for (const auto& g : gens) {
    if (is_simple_power(g)) continue;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0) count[i]++;
  }
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());

  // N(I) = N(I + (x)) + t^{w(x)} * N(I : x)
  std::vector<Exponents> plus;  // I + (x): generators with x removed, plus x itself
  Exponents xgen(ctx.size(), 0);
  xgen[pivot] = 1;
  plus.push_back(xgen);
  for (const auto& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  std::vector<Exponents> colon;  // I : x
  for (const auto& g : gens) {
    Exponents h = g;
    if (h[pivot] > 0) h[pivot]--;
    colon.push_back(h);
  }
  IntPoly a = quotient_numerator(std::move(plus), ctx);
  IntPoly b = quotient_numerator(std::move(colon), ctx);
  return ipoly_add(a, ipoly_shift(b, ctx.var(pivot).weight));
}

}  // namespace

HilbertSeries hilbert_series_monomial_quotient(const std::vector<Exponents>& leading_terms,
                                               const RingPtr& ctx) {
  for (const auto& e : leading_terms)
    if (e.size() != ctx->size())
      throw std::invalid_argument("hilbert_series_monomial_quotient: exponent length mismatch");
  IntPoly num = quotient_numerator(leading_terms, *ctx);
  HilbertSeries hs(std::move(num), ctx->weights());
  return hs.reduced();
}

std::vector<long long> monomial_quotient_counts(const std::vector<Exponents>& gens,
                                                const RingPtr& ctx, int max_degree) {
  std::vector<long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  Exponents cur(ctx->size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
    if (i == ctx->size()) {
      bool in_ideal = false;
      for (const auto& g : gens)
        if (divides_mono(g, cur)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) counts[static_cast<std::size_t>(deg)]++;
      return;
    }
    int w = ctx->var(i).weight;
    for (int k = 0; deg + k * w <= max_degree; ++k) {
      cur[i] = k;
      rec(i + 1, deg + k * w);
    }
    cur[i] = 0;
  };
  rec(0, 0);
  return counts;
}

}  // namespace eqcoh
