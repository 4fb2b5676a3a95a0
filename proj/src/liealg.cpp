#include "eqcoh/liealg.hpp"

#include <algorithm>
#include <set>

namespace eqcoh {

RatMat bracket(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("bracket: size mismatch");
  return a * b - b * a;
}

PolyMat bracket(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("bracket: size mismatch");
  return a * b - b * a;
}

Rational trace(const RatMat& m) {
  Rational t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

PrincipalTriple principal_triple(int n) {
  if (n < 2) throw std::invalid_argument("principal_triple: n >= 2 required");
  std::size_t N = static_cast<std::size_t>(n);
  RatMat e(N, N), f(N, N), h(N, N);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    e.at(i, i + 1) = Rational(1);
    f.at(i + 1, i) = Rational(static_cast<long>((i + 1) * (N - 1 - i)));
  }
  for (std::size_t i = 0; i < N; ++i)
    h.at(i, i) = Rational(static_cast<long>(n - 1) - 2 * static_cast<long>(i));
  return {n, e, f, h};
}

bool is_regular(const RatMat& x) {
  std::size_t n = x.rows();
  if (n != x.cols()) throw std::invalid_argument("is_regular: square matrix required");
  // ad_x on gl_n in the basis E_{pq}: [x, E_pq] = sum_i x_{ip} E_{iq} - sum_j x_{qj} E_{pj}
  std::size_t dim = n * n;
  RatMat ad(dim, dim);
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t i = 0; i < n; ++i) ad.at(idx(i, q), idx(p, q)) += x.at(i, p);
      for (std::size_t j = 0; j < n; ++j) ad.at(idx(p, j), idx(p, q)) -= x.at(q, j);
    }
  std::size_t rank = rat_rank(ad);
  std::size_t centralizer_gl = dim - rank;  // contains the identity
  // dim C_{sl}(x) = dim C_{gl}(x) - 1 since trace is onto on C_{gl} (I is there)
  return centralizer_gl == n;
}

RatMat TorusElement::realize() const {
  std::size_t N = static_cast<std::size_t>(n);
  if (coords.size() + 1 != N) throw std::invalid_argument("TorusElement: coordinate count");
  Rational sum(0);
  for (const auto& v : coords) sum += v;
  Rational shift = sum / Rational(static_cast<long>(n));
  RatMat m(N, N);
  m.at(0, 0) = -shift;
  for (std::size_t i = 1; i < N; ++i) m.at(i, i) = coords[i - 1] - shift;
  return m;
}

std::vector<Rational> TorusElement::diagonal() const {
  std::vector<Rational> d;
  d.push_back(Rational(0));
  for (const auto& v : coords) d.push_back(v);
  return d;
}

RatMat torus_direction(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("torus_direction: index out of range");
  TorusElement w;
  w.n = n;
  w.coords.assign(static_cast<std::size_t>(n - 1), Rational(0));
  w.coords[static_cast<std::size_t>(i - 1)] = Rational(1);
  return w.realize();
}

RatMat KostantSection::point(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("KostantSection::point: coefficient count");
  RatMat m = principal_triple(n).e;
  for (std::size_t k = 0; k < basis.size(); ++k) m = m + basis[k] * coeffs[k];
  return m;
}

KostantSection kostant_section(int n) {
  PrincipalTriple t = principal_triple(n);
  KostantSection s;
  s.n = n;
  std::size_t N = static_cast<std::size_t>(n);
  RatMat power = rat_identity(N);
  for (int k = 2; k <= n; ++k) {
    power = power * t.f;  // f^{k-1}, supported on the (k-1)-th subdiagonal
    Rational anchor = power.at(N - 1, N - static_cast<std::size_t>(k));
    if (anchor.is_zero()) throw MathError("kostant_section: degenerate basis");
    s.basis.push_back(power * anchor.inverse());
    s.param_names.push_back("c" + std::to_string(k));
    s.param_weights.push_back(2 * k);
  }
  return s;
}

RatMat solve_unipotent_conjugator(const TorusElement& w) {
  std::size_t N = static_cast<std::size_t>(w.n);
  std::vector<Rational> d;
  {
    RatMat m = w.realize();
    for (std::size_t i = 0; i < N; ++i) d.push_back(m.at(i, i));
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (d[i] == d[j])
        throw NonRegularTorusError(
            static_cast<int>(i) + 1, static_cast<int>(j) + 1,
            "solve_unipotent_conjugator: root vanishes (diagonal entries " +
                std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide)");
  // column recursion m_{ij} = m_{i+1,j} / (d_j - d_i), m_{jj} = 1
  RatMat m = rat_identity(N);
  for (std::size_t j = 1; j < N; ++j)
    for (std::size_t i = j; i-- > 0;) m.at(i, j) = m.at(i + 1, j) / (d[j] - d[i]);
  return m;
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  return {a.num * b.num, a.den * b.den};
}

Mat<PolyFraction> unipotent_conjugator_symbolic(int n, const RingPtr& ctx) {
  std::size_t N = static_cast<std::size_t>(n);
  Polynomial one = Polynomial::constant(ctx, Rational(1));
  Polynomial zero = Polynomial::zero(ctx);
  std::vector<Polynomial> d;  // trace shift cancels in all differences
  d.push_back(zero);
  for (int i = 1; i < n; ++i) d.push_back(Polynomial::variable(ctx, "v" + std::to_string(i)));
  Mat<PolyFraction> m(N, N, PolyFraction{zero, one});
  for (std::size_t i = 0; i < N; ++i) m.at(i, i) = PolyFraction{one, one};
  for (std::size_t j = 1; j < N; ++j)
    for (std::size_t i = j; i-- > 0;) {
      const PolyFraction& below = m.at(i + 1, j);
      m.at(i, j) = PolyFraction{below.num, below.den * (d[j] - d[i])};
    }
  return m;
}

namespace {

// exp of a strictly lower-triangular matrix over T (finite sum)
template <typename T>
Mat<T> nilpotent_exp(const Mat<T>& u, const Mat<T>& id, const T& zero) {
  Mat<T> result = id;
  Mat<T> term = u;
  std::size_t n = u.rows();
  long fact = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (k > 1) term = term * u;
    fact *= static_cast<long>(k);
    Mat<T> scaled(n, n, zero);
    bool vanished = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!(term.at(i, j) == zero)) vanished = false;
        scaled.at(i, j) = term.at(i, j) * Rational(1, fact);
      }
    if (vanished) break;
    result = result + scaled;
  }
  return result;
}

// Shared graded normalization; T is Rational or Polynomial, both Q-modules.
template <typename T>
KostantConjugation<T> kostant_conjugation_impl(int n, const std::vector<T>& diagonal,
                                               const T& zero, const T& one) {
  std::size_t N = static_cast<std::size_t>(n);
  PrincipalTriple triple = principal_triple(n);
  KostantSection section = kostant_section(n);

  auto to_T = [&](const Rational& r) { return one * r; };
  auto lift = [&](const RatMat& m) {
    Mat<T> out(N, N, zero);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out.at(i, j) = to_T(m.at(i, j));
    return out;
  };

  Mat<T> id = Mat<T>::identity(N, one, zero);
  Mat<T> e = lift(triple.e);
  Mat<T> x(N, N, zero);
  for (std::size_t i = 0; i < N; ++i) x.at(i, i) = diagonal[i];
  x = x + e;
  Mat<T> a = id;

  std::vector<T> coeffs(section.basis.size(), zero);

  // level l = the l-th subdiagonal (ad_h weight -2l)
  for (int level = 0; level < n; ++level) {
    std::size_t len = N - static_cast<std::size_t>(level);  // entries (i+level, i)
    bool has_section = level >= 1;                          // C(f) piece f^level
    const RatMat* b = has_section ? &section.basis[static_cast<std::size_t>(level - 1)] : nullptr;

    // Q-linear map (u, s) -> [e,u] + s*b restricted to this level,
    // u running over the (level+1)-st subdiagonal.
    std::size_t u_dim = level + 1 < n ? N - static_cast<std::size_t>(level + 1) : 0;
    std::size_t cols = u_dim + (has_section ? 1 : 0);
    RatMat q(len, cols);
    for (std::size_t uc = 0; uc < u_dim; ++uc) {
      RatMat uu(N, N);
      uu.at(uc + static_cast<std::size_t>(level) + 1, uc) = Rational(1);
      RatMat br = bracket(triple.e, uu);
      for (std::size_t r = 0; r < len; ++r)
        q.at(r, uc) = br.at(r + static_cast<std::size_t>(level), r);
    }
    if (has_section) {
      for (std::size_t r = 0; r < len; ++r)
        q.at(r, u_dim) = b->at(r + static_cast<std::size_t>(level), r);
    }

    std::vector<T> rhs;
    for (std::size_t r = 0; r < len; ++r)
      rhs.push_back(x.at(r + static_cast<std::size_t>(level), r));

    std::vector<T> sol = solve_rational_system<T>(q, rhs, zero);

    // conjugating by exp(u) with [e,u] = xi - s*b clears this level down to
    // its C(f) part and touches only strictly lower levels
    if (u_dim > 0) {
      Mat<T> u(N, N, zero);
      for (std::size_t uc = 0; uc < u_dim; ++uc)
        u.at(uc + static_cast<std::size_t>(level) + 1, uc) = sol[uc];
      Mat<T> g = nilpotent_exp(u, id, zero);
      Mat<T> ginv = nilpotent_exp(-u, id, zero);
      x = g * x * ginv;
      a = g * a;
    }
    if (has_section) coeffs[static_cast<std::size_t>(level - 1)] = sol[u_dim];
  }

  // x is now e + sum c_k b_k by construction
  KostantConjugation<T> out;
  out.conjugator = a;
  out.section_point = x;
  out.section_coeffs = coeffs;
  return out;
}

}  // namespace

KostantConjugation<Rational> solve_kostant_conjugator(const TorusElement& w) {
  std::size_t N = static_cast<std::size_t>(w.n);
  RatMat m = w.realize();
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < N; ++i) diag.push_back(m.at(i, i));
  return kostant_conjugation_impl<Rational>(w.n, diag, Rational(0), Rational(1));
}

KostantConjugation<Polynomial> solve_kostant_conjugator_symbolic(
    int n, const std::vector<Polynomial>& diagonal) {
  if (diagonal.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("solve_kostant_conjugator_symbolic: diagonal length");
  RingPtr ctx = diagonal.front().context();
  return kostant_conjugation_impl<Polynomial>(n, diagonal, Polynomial::zero(ctx),
                                              Polynomial::constant(ctx, Rational(1)));
}

std::vector<TorusElement> weyl_orbit(const TorusElement& w) {
  std::vector<Rational> d = w.diagonal();
  std::vector<std::size_t> perm(d.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::set<std::vector<Rational>> seen;
  std::vector<TorusElement> orbit;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<Rational> coords;
    for (std::size_t i = 1; i < d.size(); ++i) coords.push_back(d[perm[i]] - d[perm[0]]);
    if (seen.insert(coords).second) {
      TorusElement t;
      t.n = w.n;
      t.coords = coords;
      orbit.push_back(std::move(t));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end(),
            [](const TorusElement& a, const TorusElement& b) { return a.coords < b.coords; });
  return orbit;
}

int cartan_integer(int n, int j, int k) {
  if (j < 1 || j >= n || k < 1 || k >= n)
    throw std::invalid_argument("cartan_integer: index out of range");
  if (j == k) return 2;
  return std::abs(j - k) == 1 ? -1 : 0;
}

RootData root_data(int n) {
  RootData rd;
  rd.n = n;
  rd.cartan.assign(static_cast<std::size_t>(n - 1), std::vector<int>(n - 1, 0));
  for (int j = 1; j < n; ++j)
    for (int k = 1; k < n; ++k)
      rd.cartan[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
          cartan_integer(n, j, k);
  return rd;
}

Polynomial simple_root_poly(int n, int j, const RingPtr& ctx) {
  if (j < 1 || j >= n) throw std::invalid_argument("simple_root_poly: index out of range");
  // alpha_j = d_j - d_{j+1} = v_{j-1} - v_j with v_0 = 0
  Polynomial p = Polynomial::zero(ctx);
  if (j >= 2) p += Polynomial::variable(ctx, "v" + std::to_string(j - 1));
  p -= Polynomial::variable(ctx, "v" + std::to_string(j));
  return p;
}

}  // namespace eqcoh
