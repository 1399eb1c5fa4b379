#include "lmsf/meixner.hpp"

#include <stdexcept>

#include "lmsf/laguerre.hpp"
#include "lmsf/memo.hpp"

namespace lmsf::meixner {

Rat fs_value(const Partition& mu, const Partition& lambda) {
  if (!lambda.contains(mu)) return 0;
  const int n = lambda.size();
  const int k = mu.size();
  return make_rat(factorial(n) * dim_skew(lambda, mu), factorial(n - k) * dim_syt(lambda));
}

namespace {

// Exact inverse of the matrix [S_kappa(lambda)] over all |lambda|, |kappa| < n.
struct InterpolationLevel {
  std::vector<Partition> nodes;
  std::vector<std::vector<Rat>> inverse;
};

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!is_zero(m[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw MathError("FS interpolation system is singular");
    std::swap(m[pivot], m[c]);
    std::swap(inv[pivot], inv[c]);
    const Rat p = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= p;
      inv[c][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(m[r][c])) continue;
      const Rat f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Rat schur_value(const Partition& kappa, const Partition& lambda) {
  return eval_on_diagram(RatExpansion{{kappa, Rat(1)}}, lambda);
}

const InterpolationLevel& interpolation_level(int n) {
  static Memo<int, InterpolationLevel> cache;
  return cache.get(n, [&] {
    InterpolationLevel lvl;
    lvl.nodes = partitions_up_to(n - 1);
    std::vector<std::vector<Rat>> m(lvl.nodes.size(), std::vector<Rat>(lvl.nodes.size()));
    for (std::size_t i = 0; i < lvl.nodes.size(); ++i) {
      for (std::size_t j = 0; j < lvl.nodes.size(); ++j) m[i][j] = schur_value(lvl.nodes[j], lvl.nodes[i]);
    }
    lvl.inverse = invert(std::move(m));
    return lvl;
  });
}

}  // namespace

const RatExpansion& fs_in_schur(const Partition& nu) {
  static Memo<Partition, RatExpansion> cache;
  return cache.get(nu, [&] {
    RatExpansion out{{nu, Rat(1)}};
    if (nu.empty()) return out;
    const auto& lvl = interpolation_level(nu.size());
    const std::size_t n = lvl.nodes.size();
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -schur_value(nu, lvl.nodes[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Rat a = 0;
      for (std::size_t i = 0; i < n; ++i) a += lvl.inverse[j][i] * rhs[i];
      add_to(out, lvl.nodes[j], a);
    }
    return out;
  });
}

const RatExpansion& schur_in_fs(const Partition& nu) {
  static Memo<Partition, RatExpansion> cache;
  return cache.get(nu, [&] {
    // S_nu = FS_nu - sum_{kappa != nu} a_kappa S_kappa
    RatExpansion out{{nu, Rat(1)}};
    for (const auto& [kappa, a] : fs_in_schur(nu)) {
      if (kappa == nu) continue;
      for (const auto& [rho, b] : schur_in_fs(kappa)) add_to(out, rho, Rat(-a * b));
    }
    return out;
  });
}

SymFunc fs_sf(const Partition& nu) {
  SymFunc f(Basis::S);
  for (const auto& [k, c] : fs_in_schur(nu)) f.add_term(k, ParamPoly(c));
  return f;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  if (f.basis() == Basis::FS) {
    SymFunc s(Basis::S, apply_table(f.terms(), fs_in_schur));
    return target == Basis::S ? s : lmsf::convert(s, target);
  }
  if (target == Basis::FS) {
    const SymFunc s = lmsf::convert(f, Basis::S);
    return SymFunc(Basis::FS, apply_table(s.terms(), schur_in_fs));
  }
  return lmsf::convert(f, target);
}

ParamPoly expansion_coefficient(const Partition& nu, const Partition& mu) {
  const int d = nu.size() - mu.size();
  return laguerre::expansion_coefficient(nu, mu) * param::t().pow(d);
}

const SymFunc& meixner_sf(const Partition& nu) {
  static Memo<Partition, SymFunc> cache;
  return cache.get(nu, [&] {
    SymFunc f(Basis::FS);
    for (const auto& mu : subdiagrams(nu)) f.add_term(mu, expansion_coefficient(nu, mu));
    return f;
  });
}

SymFunc apply_DME_fs(const SymFunc& f) {
  const SymFunc ff = convert(f, Basis::FS);
  const ParamPoly t = param::t();
  SymFunc out(Basis::FS);
  for (const auto& [nu, c] : ff.terms()) {
    out.add_term(nu, c * Rat(-nu.size()));
    for (const Box& b : corners(nu).removable) {
      out.add_term(nu.remove_box(b), c * t * param::content_factor(b.content()));
    }
  }
  return out;
}

JumpRates jump_rates(const Partition& lambda) {
  JumpRates r;
  const ParamPoly t = param::t();
  const int n = lambda.size();
  const BigInt dim = dim_syt(lambda);
  const Corners cs = corners(lambda);
  for (const Box& b : cs.addable) {
    const Rat ratio = make_rat(dim_syt(lambda.add_box(b)), dim * (n + 1));
    r.add.emplace_back(b, t * param::content_factor(b.content()) * ratio);
  }
  for (const Box& b : cs.removable) {
    const Rat ratio = make_rat(dim_syt(lambda.remove_box(b)) * n, dim);
    r.remove.emplace_back(b, (ParamPoly(1) + t) * ratio);
  }
  r.total = (ParamPoly(1) + t * Rat(2)) * Rat(n) + t * param::z() * param::zp();
  return r;
}

Rat apply_DME_on_Y(const std::map<Partition, Rat>& values, const Partition& lambda, const NumericParams& np) {
  auto value = [&](const Partition& p) -> const Rat& {
    auto it = values.find(p);
    if (it == values.end()) throw std::out_of_range("missing value at diagram [" + p.str() + "]");
    return it->second;
  };
  const Rat& here = value(lambda);
  const JumpRates r = jump_rates(lambda);
  Rat acc = 0;
  for (const auto& [b, rate] : r.add) {
    const Rat a = param_eval_rat(rate, np);
    if (!is_zero(a)) acc += a * (value(lambda.add_box(b)) - here);
  }
  for (const auto& [b, rate] : r.remove) {
    acc += param_eval_rat(rate, np) * (value(lambda.remove_box(b)) - here);
  }
  return acc;
}

const ParamPoly& psi_me_fs(const Partition& nu) {
  static Memo<Partition, ParamPoly> cache;
  return cache.get(nu, [&] {
    if (nu.empty()) return ParamPoly(1);
    ParamPoly acc;
    for (const Box& b : corners(nu).removable) {
      acc += param::content_factor(b.content()) * psi_me_fs(nu.remove_box(b));
    }
    return acc * param::t() * make_rat(1, nu.size());
  });
}

ParamPoly psi_me_fs_closed_form(const Partition& nu) {
  return normalization_constant(nu);
}

ParamPoly psi_me(const SymFunc& f) {
  const SymFunc ff = convert(f, Basis::FS);
  ParamPoly acc;
  for (const auto& [nu, c] : ff.terms()) acc += c * psi_me_fs(nu);
  return acc;
}

namespace {

const ParamPoly& psi_me_schur(const Partition& nu) {
  static Memo<Partition, ParamPoly> cache;
  return cache.get(nu, [&] {
    ParamPoly acc;
    for (const auto& [k, c] : schur_in_fs(nu)) acc += psi_me_fs(k) * c;
    return acc;
  });
}

const ParamPoly& psi_me_fs_pair(const Partition& a, const Partition& b) {
  static Memo<std::pair<Partition, Partition>, ParamPoly> cache;
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return cache.get(key, [&] {
    RatExpansion prod;
    for (const auto& [ka, ca] : fs_in_schur(a)) {
      for (const auto& [kb, cb] : fs_in_schur(b)) {
        for (const auto& [kc, cc] : laguerre::schur_product(ka, kb)) add_to(prod, kc, Rat(ca * cb * cc));
      }
    }
    ParamPoly acc;
    for (const auto& [k, c] : prod) acc += psi_me_schur(k) * c;
    return acc;
  });
}

}  // namespace

ParamPoly inner_product_me(const SymFunc& f, const SymFunc& g) {
  const SymFunc ff = convert(f, Basis::FS);
  const SymFunc gf = convert(g, Basis::FS);
  ParamPoly acc;
  for (const auto& [a, ca] : ff.terms()) {
    ParamPoly row;
    for (const auto& [b, cb] : gf.terms()) row += cb * psi_me_fs_pair(a, b);
    acc += ca * row;
  }
  return acc;
}

ParamPoly normalization_constant(const Partition& nu) {
  return content_product(nu) * param::t().pow(nu.size()) * make_rat(dim_syt(nu), factorial(nu.size()));
}

Rat meixner_value_normalized(const Partition& nu, const Partition& lambda, const NumericParams& np) {
  const Rat t = np.t();
  const BigInt dn = dim_syt(nu);
  const BigInt dl = dim_syt(lambda);
  const BigInt fn = factorial(nu.size());
  const BigInt fl = factorial(lambda.size());
  for (const Partition* p : {&nu, &lambda}) {
    for (const Box& b : p->boxes()) {
      const GaussRat f = np.content_factor(b.content());
      if (!f.is_real() || is_zero(f.re)) {
        throw DomainError("content factor vanishes or is not real at content " + std::to_string(b.content()));
      }
    }
  }
  Rat acc = 0;
  for (const auto& mu : subdiagrams(intersect(nu, lambda))) {
    Rat prod = 1;
    for (const Box& b : mu.boxes()) prod /= np.content_factor(b.content()).re;
    const int k = mu.size();
    Rat term = make_rat(fn * fl, factorial(nu.size() - k) * factorial(lambda.size() - k)) *
               make_rat(dim_skew(nu, mu) * dim_skew(lambda, mu), dn * dl) * prod / rat_pow(t, k);
    if (k % 2) term = -term;
    acc += term;
  }
  return acc;
}

SymFunc laguerre_limit(const Partition& nu) {
  const SymFunc s = convert(meixner_sf(nu), Basis::S);
  SymFunc out(Basis::S);
  for (const auto& [kappa, q] : s.terms()) out.add_term(kappa, leading_in_t(q, nu.size() - kappa.size()));
  return out;
}

LimitReport operator_limit_check(const SymFunc& f) {
  const SymFunc fs = convert(f, Basis::S);
  SymFunc lim(Basis::S);
  for (const auto& [mu, c] : fs.terms()) {
    const SymFunc image = convert(apply_DME_fs(SymFunc::basis_element(Basis::S, mu)), Basis::S);
    for (const auto& [kappa, r] : image.terms()) {
      lim.add_term(kappa, c * leading_in_t(r, mu.size() - kappa.size()));
    }
  }
  const SymFunc expected = laguerre::apply_D_schur(fs);
  LimitReport rep;
  if (lim == expected) return rep;
  rep.ok = false;
  const SymFunc diff = lim - expected;
  const auto& [k, c] = *diff.terms().begin();
  rep.detail = "coefficient of S[" + k.str() + "] differs by " + c.str();
  return rep;
}

}  // namespace lmsf::meixner
