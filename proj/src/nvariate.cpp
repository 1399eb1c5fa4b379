#include "lmsf/nvariate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"
#include "lmsf/memo.hpp"

namespace lmsf::nvar {

const char* to_string(Kind k) { return k == Kind::Laguerre ? "laguerre" : "meixner"; }

namespace {

// Stirling numbers of the second kind S(n, k).
BigInt stirling2(int n, int k) {
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
  }
  return k <= n ? s[n][k] : BigInt(0);
}

// (b)_k as a polynomial in b.
BTPoly rising_b(int k) {
  BTPoly p(1);
  for (int i = 0; i < k; ++i) p *= btparam::b() + BTPoly(i);
  return p;
}

BTPoly inner(const UPoly& p, const UPoly& q, const std::vector<BTPoly>& m) {
  BTPoly acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!q[j].is_zero()) acc += p[i] * q[j] * m[i + j];
    }
  }
  return acc;
}

UPoly axpy(UPoly y, const BTPoly& a, const UPoly& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] -= a * x[i];
  return y;
}

bool all_zero(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const BTPoly& c) { return c.is_zero(); });
}

}  // namespace

BTPoly moment(Kind kind, int k) {
  if (kind == Kind::Laguerre) return rising_b(k);
  BTPoly m;
  for (int j = 0; j <= k; ++j) m += rising_b(j) * btparam::t().pow(j) * Rat(stirling2(k, j));
  return m;
}

UnivariateFamily build_univariate(Kind kind, int n_max) {
  if (n_max < 0) throw std::invalid_argument("build_univariate: n_max must be >= 0");
  UnivariateFamily fam;
  fam.kind = kind;
  for (int k = 0; k <= 2 * n_max + 2; ++k) fam.moments.push_back(moment(kind, k));
  std::vector<BTPoly> norms;
  for (int n = 0; n <= n_max + 1; ++n) {
    UPoly p(n + 1);
    p[n] = BTPoly(1);
    const UPoly xn = p;
    for (int k = 0; k < n; ++k) {
      const BTPoly proj = exact_divide(inner(xn, fam.phi[k], fam.moments), norms[k]);
      p = axpy(p, proj, fam.phi[k]);
    }
    const BTPoly h = inner(p, p, fam.moments);
    if (h.is_zero()) throw MathError("build_univariate: vanishing Hankel pivot");
    fam.phi.push_back(p);
    norms.push_back(h);
    fam.eigenvalues.push_back(n);
  }
  for (int n = 0; n <= n_max; ++n) {
    UPoly r(n + 2);
    for (int i = 0; i <= n; ++i) r[i + 1] = fam.phi[n][i];
    r = axpy(r, BTPoly(1), fam.phi[n + 1]);
    const BTPoly a = r[n];
    r = axpy(r, a, fam.phi[n]);
    BTPoly bcoef;
    if (n >= 1) {
      bcoef = r[n - 1];
      r = axpy(r, bcoef, fam.phi[n - 1]);
    }
    if (!all_zero(r)) throw MathError("build_univariate: three-term recurrence leaves a remainder");
    fam.alpha.push_back(a);
    fam.beta.push_back(bcoef);
  }
  fam.phi.pop_back();
  fam.eigenvalues.pop_back();
  return fam;
}

const UnivariateFamily& univariate_family(Kind kind, int n_max) {
  static Memo<std::pair<int, int>, UnivariateFamily> cache;
  const int size = std::max(8, n_max);
  return cache.get({static_cast<int>(kind), size}, [&] { return build_univariate(kind, size); });
}

MPoly<BTPoly> upoly_in_var(const UPoly& p, int n_vars, int i) {
  MPoly<BTPoly> out(n_vars);
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::vector<int> e(n_vars, 0);
    e[i] = static_cast<int>(k);
    out.add_term(e, p[k]);
  }
  return out;
}

MPoly<BTPoly> vandermonde(int n_vars) {
  MPoly<BTPoly> v = MPoly<BTPoly>::constant(n_vars, BTPoly(1));
  for (int i = 0; i < n_vars; ++i) {
    for (int j = i + 1; j < n_vars; ++j) {
      v = v * (MPoly<BTPoly>::variable(n_vars, i) - MPoly<BTPoly>::variable(n_vars, j));
    }
  }
  return v;
}

NVarPoly multivariate_op(const Partition& nu, const UnivariateFamily& fam, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("multivariate_op: N must be positive");
  if (nu.length() > n_vars) throw std::invalid_argument("multivariate_op: partition longer than N");
  std::vector<int> degree(n_vars);
  for (int i = 1; i <= n_vars; ++i) degree[i - 1] = nu.row(i) + n_vars - i;
  if (degree[0] >= static_cast<int>(fam.phi.size())) {
    throw std::invalid_argument("multivariate_op: univariate family too short");
  }
  std::vector<std::vector<MPoly<BTPoly>>> entry(n_vars);
  for (int i = 0; i < n_vars; ++i) {
    for (int j = 0; j < n_vars; ++j) entry[i].push_back(upoly_in_var(fam.phi[degree[i]], n_vars, j));
  }
  std::vector<int> perm(n_vars);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly<BTPoly> det(n_vars);
  do {
    int inv = 0;
    for (int i = 0; i < n_vars; ++i) {
      for (int j = i + 1; j < n_vars; ++j) inv += perm[i] > perm[j];
    }
    MPoly<BTPoly> term = MPoly<BTPoly>::constant(n_vars, BTPoly(inv % 2 ? -1 : 1));
    for (int i = 0; i < n_vars; ++i) term = term * entry[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return NVarPoly::from_mpoly(det.exact_divide(vandermonde(n_vars)));
}

NVarPoly apply_DN_laguerre_x(const NVarPoly& f) {
  const int n = f.nvars();
  const MPoly<BTPoly> m = f.to_mpoly();
  const auto b = MPoly<BTPoly>::constant(n, btparam::b());
  MPoly<BTPoly> out(n);
  std::vector<MPoly<BTPoly>> d1;
  for (int i = 0; i < n; ++i) d1.push_back(m.derivative(i));
  for (int i = 0; i < n; ++i) {
    const auto xi = MPoly<BTPoly>::variable(n, i);
    out += xi * d1[i].derivative(i);
    out += (b - xi) * d1[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto xi = MPoly<BTPoly>::variable(n, i);
      const auto xj = MPoly<BTPoly>::variable(n, j);
      const auto num = (xi * d1[i] - xj * d1[j]) * BTPoly(2);
      out += num.exact_divide(xi - xj);
    }
  }
  return NVarPoly::from_mpoly(out);
}

namespace {

NVarPoly e_monomial(const Partition& lambda, int n_vars) {
  MPoly<BTPoly> p = MPoly<BTPoly>::constant(n_vars, BTPoly(1));
  for (int part : lambda.rows()) p = p * elementary_polynomial<BTPoly>(n_vars, part);
  return NVarPoly::from_mpoly(p);
}

}  // namespace

Expansion<BTPoly> to_e_coords(const NVarPoly& f) {
  Expansion<BTPoly> out;
  NVarPoly rem = f;
  while (!rem.is_zero()) {
    const auto& [exps, c] = *rem.terms().rbegin();
    const Partition lead = Partition(exps).conjugate();
    const BTPoly coeff = c;
    add_to(out, lead, coeff);
    rem -= e_monomial(lead, f.nvars()) * coeff;
  }
  return out;
}

NVarPoly from_e_coords(const Expansion<BTPoly>& f, int n_vars) {
  NVarPoly out(n_vars);
  for (const auto& [lambda, c] : f) {
    if (lambda.length() > 0 && lambda.row(1) > n_vars) continue;
    out += e_monomial(lambda, n_vars) * c;
  }
  return out;
}

NVarPoly apply_DN_laguerre_e(const NVarPoly& f) {
  const int n = f.nvars();
  auto k_of_n = [n](int k) { return BTPoly(n - k + 1) * (btparam::b() + BTPoly(n - k)); };
  return from_e_coords(apply_e_operator(to_e_coords(f), k_of_n, n), n);
}

NVarPoly apply_DN_meixner_poly(const NVarPoly& f) {
  const int n = f.nvars();
  const MPoly<BTPoly> v = vandermonde(n);
  const MPoly<BTPoly> g = f.to_mpoly() * v;
  const auto t = MPoly<BTPoly>::constant(n, btparam::t());
  const auto one_plus_t = MPoly<BTPoly>::constant(n, BTPoly(1) + btparam::t());
  const auto b = MPoly<BTPoly>::constant(n, btparam::b());
  MPoly<BTPoly> acc(n);
  for (int i = 0; i < n; ++i) {
    const auto xi = MPoly<BTPoly>::variable(n, i);
    const auto up = t * (b + xi);
    const auto down = one_plus_t * xi;
    acc += up * g.shift(i, 1) + down * g.shift(i, -1) - (up + down) * g;
  }
  const Rat dn = make_rat(n * (n - 1), 2);
  return NVarPoly::from_mpoly(acc.exact_divide(v)) + f * BTPoly(dn);
}

LatticeRates meixner_lattice_rates(const std::vector<int>& x, const Rat& b, const Rat& xi) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0 || (i > 0 && x[i] >= x[i - 1])) {
      throw std::invalid_argument("point outside the chamber x_1 > ... > x_N >= 0");
    }
  }
  const Rat t = xi / (Rat(1) - xi);
  LatticeRates r;
  Rat sum = 0;
  for (int i = 0; i < n; ++i) {
    Rat up = t * (b + x[i]);
    Rat down = (Rat(1) + t) * x[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      up *= make_rat(x[i] - x[j] + 1, x[i] - x[j]);
      down *= make_rat(x[i] - x[j] - 1, x[i] - x[j]);
    }
    r.up.push_back(up);
    r.down.push_back(down);
    sum += x[i];
  }
  r.diagonal = t * b * n + (Rat(1) + 2 * t) * sum - make_rat(n * (n - 1), 2);
  return r;
}

Rat apply_DN_meixner(const std::map<std::vector<int>, Rat>& values, const std::vector<int>& x, const Rat& b,
                     const Rat& xi) {
  const LatticeRates r = meixner_lattice_rates(x, b, xi);
  auto value = [&](const std::vector<int>& y) -> const Rat& {
    auto it = values.find(y);
    if (it == values.end()) throw std::out_of_range("missing lattice value");
    return it->second;
  };
  Rat acc = -r.diagonal * value(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(r.up[i])) {
      auto y = x;
      ++y[i];
      acc += r.up[i] * value(y);
    }
    if (!is_zero(r.down[i])) {
      auto y = x;
      --y[i];
      acc += r.down[i] * value(y);
    }
  }
  return acc;
}

namespace {

BasicSymFunc<BTPoly> specialize(const SymFunc& f, int n_vars) {
  return f.map_coeffs<BTPoly>([n_vars](const ParamPoly& c) { return specialize_degenerate(c, n_vars); });
}

std::pair<NVarPoly, NVarPoly> truncation_sides(const Partition& nu, int n_vars, Kind kind) {
  if (nu.length() > n_vars) throw std::invalid_argument("truncation check needs l(nu) <= N");
  const auto& fam = univariate_family(kind, nu.row(1) + n_vars);
  const NVarPoly rhs = multivariate_op(nu, fam, n_vars);
  NVarPoly lhs(n_vars);
  if (kind == Kind::Laguerre) {
    lhs = truncate_pi(specialize(laguerre::laguerre_sf(nu), n_vars), n_vars);
  } else {
    const SymFunc s = meixner::convert(meixner::meixner_sf(nu), Basis::S);
    lhs = truncate_pi_prime(specialize(s, n_vars), n_vars);
  }
  return {lhs, rhs};
}

template <class C>
CheckReport compare(const NVarPolyT<C>& lhs, const NVarPolyT<C>& rhs) {
  CheckReport rep;
  if (lhs == rhs) return rep;
  rep.ok = false;
  const NVarPolyT<C> diff = lhs - rhs;
  const auto& [e, c] = *diff.terms().rbegin();
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) mono += (i ? "," : "") + std::to_string(e[i]);
  if constexpr (std::is_same_v<C, Rat>) {
    rep.detail = "monomial [" + mono + "] differs by " + lmsf::to_string(c);
  } else {
    rep.detail = "monomial [" + mono + "] differs by " + c.str();
  }
  return rep;
}

}  // namespace

CheckReport truncation_crosscheck(const Partition& nu, int n_vars, const Rat& b, Kind kind, std::optional<Rat> xi) {
  if (b <= 0) throw DomainError("b must be positive");
  Rat t = 0;
  if (kind == Kind::Meixner) {
    if (!xi || *xi <= 0 || *xi >= 1) throw DomainError("xi must lie in (0,1)");
    t = *xi / (Rat(1) - *xi);
  }
  const auto [lhs, rhs] = truncation_sides(nu, n_vars, kind);
  auto at = [&](const BTPoly& c) { return bt_eval(c, b, t); };
  return compare(lhs.map_coeffs<Rat>(at), rhs.map_coeffs<Rat>(at));
}

CheckReport truncation_crosscheck_symbolic(const Partition& nu, int n_vars, Kind kind) {
  const auto [lhs, rhs] = truncation_sides(nu, n_vars, kind);
  return compare(lhs, rhs);
}

double weight_density(const std::vector<double>& x, Kind kind, double b, double xi) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < 0 || (i > 0 && x[i] > x[i - 1])) throw std::invalid_argument("point outside the ordered chamber");
    if (kind == Kind::Meixner && x[i] != std::floor(x[i])) {
      throw std::invalid_argument("Meixner weight lives on integer points");
    }
  }
  double v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) v *= x[i] - x[j];
  }
  double w = v * v;
  for (double xi_ : x) {
    if (kind == Kind::Laguerre) {
      w *= std::pow(xi_, b - 1) * std::exp(-xi_);
    } else {
      w *= std::exp(b * std::log1p(-xi) + std::lgamma(b + xi_) - std::lgamma(b) + xi_ * std::log(xi) -
                    std::lgamma(xi_ + 1));
    }
  }
  return w;
}

UPoly meixner_to_laguerre_limit(int n) {
  const UPoly& m = univariate_family(Kind::Meixner, n).phi.at(n);
  UPoly out(m.size());
  for (int k = 0; k <= n; ++k) out[k] = leading_in_t(m[k], n - k);
  return out;
}

}  // namespace lmsf::nvar
