#include "eqcoh/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eqcoh {

RingContext::RingContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Variable& v = vars_[i];
    if (v.name.empty()) throw std::invalid_argument("RingContext: empty variable name");
    if (v.weight <= 0 || v.weight % 2 != 0)
      throw std::invalid_argument("RingContext: weight of '" + v.name +
                                  "' must be a positive even integer");
    if (!index_.emplace(v.name, static_cast<int>(i)).second)
      throw std::invalid_argument("RingContext: duplicate variable '" + v.name + "'");
  }
}

std::shared_ptr<const RingContext> RingContext::make(std::vector<Variable> vars) {
  return std::shared_ptr<const RingContext>(new RingContext(std::move(vars)));
}

int RingContext::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> RingContext::weights() const {
  std::vector<int> w;
  w.reserve(vars_.size());
  for (const auto& v : vars_) w.push_back(v.weight);
  return w;
}

std::vector<std::size_t> RingContext::indices_with_role(VarRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].role == role) out.push_back(i);
  return out;
}

std::shared_ptr<const RingContext> RingContext::restrict_to(
    const std::vector<std::string>& keep) const {
  std::vector<Variable> vs;
  for (const auto& v : vars_) {
    if (std::find(keep.begin(), keep.end(), v.name) != keep.end()) vs.push_back(v);
  }
  if (vs.size() != keep.size())
    throw std::invalid_argument("RingContext::restrict_to: unknown variable in keep list");
  return make(std::move(vs));
}

int weighted_degree_of(const Exponents& e, const RingContext& ctx) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ctx.var(i).weight;
  return d;
}

bool divides_mono(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_mono(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents mul_mono(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents div_mono(const Exponents& b, const Exponents& a) {
  Exponents r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] = b[i] - a[i];
    if (r[i] < 0) throw std::invalid_argument("div_mono: not divisible");
  }
  return r;
}

bool print_before(const Exponents& a, const Exponents& b, const RingContext& ctx) {
  int da = weighted_degree_of(a, ctx), db = weighted_degree_of(b, ctx);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial Polynomial::constant(RingPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.ctx_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ctx, const std::string& name, int power) {
  int i = ctx->index_of(name);
  if (i < 0) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
  Polynomial p(std::move(ctx));
  Exponents e(p.ctx_->size(), 0);
  e[static_cast<std::size_t>(i)] = power;
  if (power < 0) throw std::invalid_argument("Polynomial: negative exponent");
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(RingPtr ctx, const Exponents& e, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (e.size() != p.ctx_->size())
    throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_ctx(const Polynomial& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same_as(*o.ctx_))
    throw std::invalid_argument("Polynomial: ring context mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ctx(b);
  Polynomial r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(mul_mono(ea, eb), ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::pow: negative power");
  Polynomial r = Polynomial::constant(ctx_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_ctx(o);
  return terms_ == o.terms_;
}

std::optional<int> Polynomial::weighted_degree() const {
  if (terms_.empty()) throw MathError("weighted_degree: zero polynomial");
  int d = weighted_degree_of(terms_.begin()->first, *ctx_);
  for (const auto& [e, c] : terms_)
    if (weighted_degree_of(e, *ctx_) != d) return std::nullopt;
  return d;
}

int Polynomial::total_weighted_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree_of(e, *ctx_));
  return d;
}

bool Polynomial::uses_var(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

int Polynomial::degree_in(std::size_t i) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  std::map<std::size_t, const Polynomial*> by_index;
  for (const auto& [name, p] : bindings) {
    int i = ctx_->index_of(name);
    if (i < 0) throw std::invalid_argument("substitute: unknown variable '" + name + "'");
    check_ctx(p);
    by_index.emplace(static_cast<std::size_t>(i), &p);
  }
  Polynomial result(ctx_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Polynomial factor = Polynomial::constant(ctx_, c);
    for (const auto& [i, p] : by_index) {
      if (e[i] > 0) {
        factor = factor * p->pow(e[i]);
        rest[i] = 0;
      }
    }
    result += factor * Polynomial::monomial(ctx_, rest, Rational(1));
  }
  return result;
}

Polynomial Polynomial::substitute_values(const std::map<std::string, Rational>& values) const {
  std::map<std::string, Polynomial> bindings;
  for (const auto& [name, val] : values)
    bindings.emplace(name, Polynomial::constant(ctx_, val));
  return substitute(bindings);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  Polynomial r = substitute_values(values);
  if (!r.is_constant()) {
    for (std::size_t i = 0; i < ctx_->size(); ++i)
      if (r.uses_var(i))
        throw std::invalid_argument("evaluate: variable '" + ctx_->var(i).name + "' unbound");
  }
  return r.constant_value();
}

Polynomial Polynomial::transport(const RingPtr& target) const {
  std::vector<int> remap(ctx_->size(), -1);
  for (std::size_t i = 0; i < ctx_->size(); ++i)
    remap[i] = target->index_of(ctx_->var(i).name);
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (remap[i] < 0)
        throw std::invalid_argument("transport: variable '" + ctx_->var(i).name +
                                    "' missing in target context");
      ne[static_cast<std::size_t>(remap[i])] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = int_gcd(num_gcd, c.numerator());
    den_lcm = int_lcm(den_lcm, c.denominator());
  }
  return Rational(mpq_class(num_gcd, den_lcm));
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational cont = content();
  Polynomial r = *this * cont.inverse();
  // sign: make the canonical first-printed coefficient positive
  const Exponents* lead = nullptr;
  for (const auto& [e, c] : r.terms_)
    if (!lead || print_before(e, *lead, *ctx_)) lead = &e;
  if (r.terms_.at(*lead).sign() < 0) r = -r;
  return r;
}

namespace {

std::string term_string(const Exponents& e, const Rational& coeff_abs,
                        const RingContext& ctx) {
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += ctx.var(i).name;
    if (e[i] != 1) mono += "^" + std::to_string(e[i]);
  }
  if (mono.empty()) return coeff_abs.str();
  if (coeff_abs.is_one()) return mono;
  return coeff_abs.str() + "*" + mono;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [this](const auto* a, const auto* b) { return print_before(a->first, b->first, *ctx_); });
  std::string out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const auto& [e, c] = *ordered[k];
    if (k == 0) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term_string(e, c.abs(), *ctx_);
  }
  return out;
}

// ---- parser -----------------------------------------------------------
namespace {

struct Parser {
  const RingPtr& ctx;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  std::string read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return s.substr(start, pos - start);
  }

  std::string read_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      fail("expected variable name");
    ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  // coefficient? factor ('*' factor)*
  Polynomial parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_number();
      std::string text = num;
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        text += "/" + read_number();
      }
      coeff = Rational::from_string(text);
      have_coeff = true;
    }
    Exponents e(ctx->size(), 0);
    bool have_var = false;
    while (true) {
      skip_ws();
      if (have_coeff || have_var) {
        if (pos < s.size() && s[pos] == '*') {
          ++pos;
        } else if (!(pos < s.size() &&
                     (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))) {
          break;
        }
      } else if (!(pos < s.size() &&
                   (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))) {
        break;
      }
      std::string name = read_name();
      int idx = ctx->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      int power = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        power = std::stoi(read_number());
      }
      e[static_cast<std::size_t>(idx)] += power;
      have_var = true;
    }
    if (!have_coeff && !have_var) fail("expected term");
    return Polynomial::monomial(ctx, e, coeff);
  }

  Polynomial parse_poly() {
    Polynomial acc(ctx);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos;
    }
    while (true) {
      Polynomial t = parse_term();
      acc += negative ? -t : t;
      if (eof()) break;
      char c = peek();
      if (c == '+') {
        negative = false;
        ++pos;
      } else if (c == '-') {
        negative = true;
        ++pos;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return acc;
  }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ctx, const std::string& text) {
  Parser p{ctx, text};
  if (p.eof()) throw std::invalid_argument("parse error: empty polynomial");
  return p.parse_poly();
}

}  // namespace eqcoh
