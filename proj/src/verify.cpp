#include "lmsf/verify.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"
#include "lmsf/nvariate.hpp"
#include "lmsf/zdynamics.hpp"

namespace lmsf::verify {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.ok ? 0 : 1;
  return n;
}

std::optional<CaseResult> SuiteReport::first_failure() const {
  for (const auto& c : cases) {
    if (!c.ok) return c;
  }
  return std::nullopt;
}

io::Json SuiteReport::to_json() const {
  io::Json o = io::Json::object();
  o["suite"] = suite;
  o["max_size"] = max_size;
  o["passed"] = ok();
  o["cases"] = cases.size();
  o["failures"] = failures();
  if (auto f = first_failure()) {
    o["first_counterexample"] = {{"case", f->label}, {"detail", f->detail}};
  } else {
    o["first_counterexample"] = nullptr;
  }
  io::Json results = io::Json::array();
  for (const auto& c : cases) results.push_back({{"case", c.label}, {"ok", c.ok}});
  o["results"] = std::move(results);
  return o;
}

namespace {

using nvar::Kind;

class Collector {
 public:
  explicit Collector(SuiteReport& r) : r_(r) {}

  void check(std::string label, bool ok, const std::function<std::string()>& detail = nullptr) {
    r_.cases.push_back({std::move(label), ok, ok || !detail ? std::string() : clip(detail())});
  }
  void fail(std::string label, std::string detail) { r_.cases.push_back({std::move(label), false, clip(detail)}); }

 private:
  static std::string clip(std::string s) {
    if (s.size() > 600) s = s.substr(0, 600) + "...";
    return s;
  }
  SuiteReport& r_;
};

std::string label(const char* name, const Partition& p) { return std::string(name) + "=(" + p.str() + ")"; }

std::string label(const char* a, const Partition& p, const char* b, const Partition& q) {
  return label(a, p) + " " + label(b, q);
}

template <class C>
std::string show(const BasicSymFunc<C>& f) {
  std::string s;
  for (const auto& [k, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "[" + c.str() + "]" + to_string(f.basis()) + "(" + k.str() + ")";
  }
  return s.empty() ? "0" : s;
}

std::string show(const BasicSymFunc<Rat>& f) {
  std::string s;
  for (const auto& [k, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + to_string(f.basis()) + "(" + k.str() + ")";
  }
  return s.empty() ? "0" : s;
}

std::string show_diff(const NVarPoly& a, const NVarPoly& b) {
  const NVarPoly d = a - b;
  if (d.is_zero()) return "0";
  const auto& [e, c] = *d.terms().rbegin();
  std::string s = "difference has coefficient " + c.str() + " at exponents [";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

std::vector<NumericParams> nondegenerate_params() {
  return {NumericParams(ZSpec::conjugate_pair(Rat(1), Rat(1)), make_rat(1, 2), true),
          NumericParams(ZSpec::real_pair(make_rat(1, 3), make_rat(1, 2)), make_rat(1, 3), true),
          NumericParams(ZSpec::conjugate_pair(make_rat(-1, 2), make_rat(2, 3)), make_rat(3, 4), true)};
}

std::string param_label(std::size_t i) { return "params#" + std::to_string(i + 1); }

BasicSymFunc<Rat> numeric(const SymFunc& f, const NumericParams& np) {
  return f.map_coeffs<Rat>([&](const ParamPoly& p) { return param_eval_rat(p, np); });
}

BasicSymFunc<BTPoly> degenerate(const SymFunc& f, int n) {
  return f.map_coeffs<BTPoly>([n](const ParamPoly& p) { return specialize_degenerate(p, n); });
}

SymFunc schur(const Partition& nu) { return SymFunc::basis_element(Basis::S, nu); }

// Hand-rolled generators with a fixed seed per suite.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rat rational() {
    int num = uniform(-5, 5);
    if (num == 0) num = 1;
    return make_rat(num, uniform(1, 4));
  }
  Partition partition(int max_size, int max_part = 0) {
    for (;;) {
      const auto all = enumerate_partitions(uniform(0, max_size));
      const Partition& p = all[uniform(0, static_cast<int>(all.size()) - 1)];
      if (max_part <= 0 || p.empty() || p.row(1) <= max_part) return p;
    }
  }
  template <class C>
  BasicSymFunc<C> symfunc(Basis basis, int max_size, int n_terms, int max_part = 0) {
    BasicSymFunc<C> f(basis);
    for (int i = 0; i < n_terms; ++i) f.add_term(partition(max_size, max_part), C(rational()));
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// laguerre

void suite_eigen(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const SymFunc& l = laguerre::laguerre_sf(nu);
    const SymFunc expected = l * ParamPoly(-nu.size());
    const SymFunc via_schur = laguerre::apply_D_schur(l);
    out.check(label("nu", nu) + " schur-rule", via_schur == expected, [&] { return show(via_schur - expected); });
    const SymFunc via_pde = convert(laguerre::apply_D_epde(convert(l, Basis::E)), Basis::S);
    out.check(label("nu", nu) + " e-pde", via_pde == expected, [&] { return show(via_pde - expected); });
  }
}

void suite_realization(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const SymFunc a = laguerre::apply_D_schur(schur(nu));
    const SymFunc b = convert(laguerre::apply_D_epde(convert(schur(nu), Basis::E)), Basis::S);
    out.check(label("nu", nu), a == b, [&] { return show(a - b); });
  }
}

void suite_orth(int m, Collector& out) {
  const auto parts = partitions_up_to(m);
  for (const auto& nu : parts) {
    for (const auto& mu : parts) {
      if (mu < nu) continue;
      const ParamPoly got = laguerre::inner_product(laguerre::laguerre_sf(nu), laguerre::laguerre_sf(mu));
      const ParamPoly want = nu == mu ? content_product(nu) : ParamPoly();
      out.check(label("nu", nu, "mu", mu), got == want, [&] { return got.str() + " != " + want.str(); });
    }
  }
}

void suite_psi(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const ParamPoly v = laguerre::psi(laguerre::apply_D_schur(schur(nu)));
    out.check(label("nu", nu) + " psi(D S)", v.is_zero(), [&] { return v.str(); });
    const ParamPoly& rec = laguerre::psi_schur(nu);
    const ParamPoly closed = laguerre::psi_schur_closed_form(nu);
    out.check(label("nu", nu) + " closed-form", rec == closed, [&] { return rec.str() + " != " + closed.str(); });
  }
}

void suite_characterization(int m, Collector& out) {
  const auto parts = partitions_up_to(m);
  for (const auto& nu : parts) {
    const SymFunc lower = laguerre::laguerre_sf(nu) - schur(nu);
    out.check(label("nu", nu) + " lower-terms", lower.is_zero() || lower.degree() < nu.size(),
              [&] { return show(lower); });
    for (const auto& mu : parts) {
      if (mu.size() >= nu.size()) break;
      const ParamPoly v = laguerre::inner_product(laguerre::laguerre_sf(nu), schur(mu));
      out.check(label("nu", nu, "mu", mu), v.is_zero(), [&] { return v.str(); });
    }
  }
}

void suite_factorization(int m, Collector& out) {
  Gen gen(0x5eed0001);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      SymFunc f = gen.symfunc<ParamPoly>(Basis::E, m, 3);
      if (trial % 2 == 1) f = f + SymFunc::basis_element(Basis::E, gen.partition(m), param::z() * gen.rational());
      const NVarPoly lhs = truncate_pi(degenerate(laguerre::apply_D_epde(f), n), n);
      const NVarPoly rhs = nvar::apply_DN_laguerre_x(truncate_pi(degenerate(f, n), n));
      out.check("N=" + std::to_string(n) + " f#" + std::to_string(trial), lhs == rhs,
                [&] { return "f = " + show(f) + "; " + show_diff(lhs, rhs); });
    }
  }
}

void suite_sepvar(int m, Collector& out) {
  std::vector<std::pair<std::string, SymFunc>> inputs;
  for (const auto& lam : partitions_up_to(m)) {
    inputs.emplace_back("e(" + lam.str() + ")", SymFunc::basis_element(Basis::E, lam));
  }
  for (const auto& lam : {Partition{1}, Partition{2}, Partition{3}, Partition{4}, Partition{2, 1}, Partition{2, 2}}) {
    if (lam.size() > m) inputs.emplace_back("e(" + lam.str() + ")", SymFunc::basis_element(Basis::E, lam));
  }
  for (const auto& [name, f] : inputs) {
    const auto rep = laguerre::separation_check(f);
    out.check(name, rep.ok, [&] { return rep.detail; });
  }
}

// ---------------------------------------------------------------------------
// meixner

void suite_meixner_eigen(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const SymFunc& mf = meixner::meixner_sf(nu);
    const SymFunc got = meixner::apply_DME_fs(mf);
    const SymFunc want = mf * ParamPoly(-nu.size());
    out.check(label("nu", nu), got == want, [&] { return show(got - want); });
  }
}

void suite_meixner_orth(int m, Collector& out) {
  const auto parts = partitions_up_to(m);
  const ParamPoly tt = param::t() * (ParamPoly(1) + param::t());
  for (const auto& nu : parts) {
    for (const auto& mu : parts) {
      if (mu < nu) continue;
      const ParamPoly got = meixner::inner_product_me(meixner::meixner_sf(nu), meixner::meixner_sf(mu));
      const ParamPoly want = nu == mu ? tt.pow(nu.size()) * content_product(nu) : ParamPoly();
      out.check(label("nu", nu, "mu", mu), got == want, [&] { return got.str() + " != " + want.str(); });
    }
  }
}

/// Values of M_nu on every diagram of size <= max_lambda at np.
std::map<Partition, Rat> value_table(const Partition& nu, int max_lambda, const NumericParams& np) {
  const auto f = numeric(meixner::convert(meixner::meixner_sf(nu), Basis::S), np);
  std::map<Partition, Rat> values;
  for (const auto& lam : partitions_up_to(max_lambda)) values.emplace(lam, eval_on_diagram(f, lam));
  return values;
}

void suite_meixner_realization(int m, Collector& out) {
  const auto params = nondegenerate_params();
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (const auto& nu : partitions_up_to(m)) {
      const auto values = value_table(nu, m + 2, params[i]);
      for (const auto& lam : partitions_up_to(m + 1)) {
        const Rat got = meixner::apply_DME_on_Y(values, lam, params[i]);
        const Rat want = -nu.size() * values.at(lam);
        out.check(param_label(i) + " " + label("nu", nu, "lambda", lam), got == want,
                  [&] { return to_string(got) + " != " + to_string(want); });
      }
    }
  }
}

void suite_values(int m, Collector& out) {
  const auto params = nondegenerate_params();
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (const auto& nu : partitions_up_to(m)) {
      const auto values = value_table(nu, m, params[i]);
      Rat c = param_eval_rat(meixner::normalization_constant(nu), params[i]);
      if (nu.size() % 2) c = -c;
      for (const auto& [lam, v] : values) {
        const Rat want = c * meixner::meixner_value_normalized(nu, lam, params[i]);
        out.check(param_label(i) + " " + label("nu", nu, "lambda", lam), v == want,
                  [&] { return to_string(v) + " != " + to_string(want); });
      }
    }
  }
}

void suite_autodual(int m, Collector& out) {
  const auto params = nondegenerate_params();
  const auto parts = partitions_up_to(m);
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (const auto& nu : parts) {
      for (const auto& lam : parts) {
        if (lam < nu) continue;
        const Rat a = meixner::meixner_value_normalized(nu, lam, params[i]);
        const Rat b = meixner::meixner_value_normalized(lam, nu, params[i]);
        out.check(param_label(i) + " " + label("nu", nu, "lambda", lam), a == b,
                  [&] { return to_string(a) + " != " + to_string(b); });
      }
    }
  }
}

void suite_fs(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const RatExpansion& fs = meixner::fs_in_schur(nu);
    bool ok = true;
    std::string detail;
    for (int size : {nu.size(), nu.size() + 1}) {
      for (const auto& lam : enumerate_partitions(size)) {
        const Rat got = eval_on_diagram(fs, lam);
        const Rat want = meixner::fs_value(nu, lam);
        if (got != want && ok) {
          ok = false;
          detail = "lambda=(" + lam.str() + "): " + to_string(got) + " != " + to_string(want);
        }
      }
    }
    out.check(label("nu", nu), ok, [&] { return detail; });
  }
}

void suite_limit(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    const SymFunc got = meixner::laguerre_limit(nu);
    const SymFunc& want = laguerre::laguerre_sf(nu);
    out.check(label("nu", nu) + " basis-limit", got == want, [&] { return show(got - want); });
    const auto rep = meixner::operator_limit_check(schur(nu));
    out.check(label("nu", nu) + " operator-limit", rep.ok, [&] { return rep.detail; });
  }
}

// ---------------------------------------------------------------------------
// nvariate

void suite_truncation(int m, Collector& out) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& nu : partitions_up_to(m)) {
      if (nu.length() > n) continue;
      for (const Rat& b : {make_rat(1, 3), Rat(1), make_rat(5, 2)}) {
        const auto rep = nvar::truncation_crosscheck(nu, n, b, Kind::Laguerre);
        out.check("N=" + std::to_string(n) + " b=" + to_string(b) + " " + label("nu", nu), rep.ok,
                  [&] { return rep.detail; });
      }
    }
  }
}

void suite_meixner_truncation(int m, Collector& out) {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& nu : partitions_up_to(m)) {
      if (nu.length() > n) continue;
      for (const Rat& xi : {make_rat(1, 3), make_rat(1, 2)}) {
        for (const Rat& b : {make_rat(1, 3), make_rat(5, 2)}) {
          const auto rep = nvar::truncation_crosscheck(nu, n, b, Kind::Meixner, xi);
          out.check("N=" + std::to_string(n) + " xi=" + to_string(xi) + " b=" + to_string(b) + " " + label("nu", nu),
                    rep.ok, [&] { return rep.detail; });
        }
      }
    }
  }
}

void suite_nvariate_eigen(int m, Collector& out) {
  for (Kind kind : {Kind::Laguerre, Kind::Meixner}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& nu : partitions_up_to(m)) {
        if (nu.length() > n) continue;
        const auto& fam = nvar::univariate_family(kind, nu.row(1) + n - 1);
        const NVarPoly phi = nvar::multivariate_op(nu, fam, n);
        const NVarPoly got = kind == Kind::Laguerre ? nvar::apply_DN_laguerre_x(phi) : nvar::apply_DN_meixner_poly(phi);
        const NVarPoly want = phi * BTPoly(-nu.size());
        out.check(std::string(nvar::to_string(kind)) + " N=" + std::to_string(n) + " " + label("nu", nu),
                  got == want, [&] { return show_diff(got, want); });
      }
    }
  }
}

void suite_nvariate_realization(int m, Collector& out) {
  Gen gen(0x5eed0002);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      NVarPoly f(n);
      for (int k = 0; k < 4; ++k) {
        std::vector<int> e(n);
        for (int& x : e) x = gen.uniform(0, m);
        std::sort(e.begin(), e.end(), std::greater<>());
        BTPoly c(gen.rational());
        if (k == 0) c = c * btparam::b();
        f.add_term(e, c);
      }
      const NVarPoly a = nvar::apply_DN_laguerre_x(f);
      const NVarPoly b = nvar::apply_DN_laguerre_e(f);
      out.check("N=" + std::to_string(n) + " f#" + std::to_string(trial), a == b, [&] { return show_diff(a, b); });
    }
  }
}

/// phi(x) with numeric b and t, as (exponents, coefficient) pairs.
struct NumericPoly {
  std::vector<std::pair<std::vector<int>, double>> terms;
  double operator()(const std::vector<double>& x) const {
    double acc = 0;
    for (const auto& [e, c] : terms) {
      double v = c;
      for (std::size_t i = 0; i < e.size(); ++i) v *= std::pow(x[i], e[i]);
      acc += v;
    }
    return acc;
  }
};

NumericPoly to_numeric(const NVarPoly& f, const Rat& b, const Rat& t) {
  NumericPoly out;
  const MPoly<BTPoly> m = f.to_mpoly();
  for (const auto& [e, c] : m.terms()) out.terms.emplace_back(e, bt_eval(c, b, t).get_d());
  return out;
}

template <class F>
double panel_integrate(F&& f) {
  using boost::math::quadrature::gauss;
  double acc = 0;
  for (int k = 0; k < 12; ++k) acc += gauss<double, 20>::integrate(f, 5.0 * k, 5.0 * (k + 1));
  return acc;
}

void suite_nvariate_orth(int m, Collector& out) {
  struct Setting {
    Kind kind;
    Rat b;
    Rat xi;
  };
  const std::vector<Setting> settings{{Kind::Laguerre, Rat(1), Rat(0)},
                                      {Kind::Laguerre, Rat(2), Rat(0)},
                                      {Kind::Meixner, make_rat(1, 3), make_rat(1, 2)},
                                      {Kind::Meixner, make_rat(5, 2), make_rat(1, 2)}};
  for (const auto& s : settings) {
    const Rat t = s.kind == Kind::Meixner ? Rat(s.xi / (Rat(1) - s.xi)) : Rat(0);
    const double b = s.b.get_d();
    const double xi = s.xi.get_d();
    for (int n = 1; n <= 2; ++n) {
      std::vector<Partition> parts;
      for (const auto& nu : partitions_up_to(m)) {
        if (nu.length() <= n) parts.push_back(nu);
      }
      std::vector<NumericPoly> phi;
      for (const auto& nu : parts) {
        phi.push_back(to_numeric(nvar::multivariate_op(nu, nvar::univariate_family(s.kind, nu.row(1) + n - 1), n),
                                 s.b, t));
      }
      // Gram matrix against the weight on the ordered chamber.
      const std::size_t k = parts.size();
      std::vector<double> gram(k * k, 0.0);
      auto accumulate = [&](const std::vector<double>& x, double w) {
        std::vector<double> v(k);
        for (std::size_t i = 0; i < k; ++i) v[i] = phi[i](x);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) gram[i * k + j] += w * v[i] * v[j];
        }
      };
      if (s.kind == Kind::Laguerre) {
        using boost::math::quadrature::gauss;
        // Tensor panels of 20-point Gauss-Legendre on [0, 60]^n.
        std::vector<std::pair<double, double>> nodes;
        const auto& absc = gauss<double, 20>::abscissa();
        const auto& wts = gauss<double, 20>::weights();
        for (int p = 0; p < 12; ++p) {
          const double mid = 5.0 * p + 2.5;
          for (std::size_t i = 0; i < absc.size(); ++i) {
            nodes.emplace_back(mid + 2.5 * absc[i], 2.5 * wts[i]);
            if (absc[i] != 0) nodes.emplace_back(mid - 2.5 * absc[i], 2.5 * wts[i]);
          }
        }
        if (n == 1) {
          for (const auto& [x, w] : nodes) accumulate({x}, w * nvar::weight_density({x}, s.kind, b));
        } else {
          for (const auto& [x, wx] : nodes) {
            for (const auto& [y, wy] : nodes) {
              if (y > x) continue;
              const double w = (y == x ? 0.5 : 1.0) * wx * wy;
              accumulate({x, y}, w * nvar::weight_density({x, y}, s.kind, b));
            }
          }
        }
      } else {
        const int cutoff = 160;
        if (n == 1) {
          for (int x = 0; x < cutoff; ++x) accumulate({double(x)}, nvar::weight_density({double(x)}, s.kind, b, xi));
        } else {
          for (int x = 0; x < cutoff; ++x) {
            for (int y = 0; y < x; ++y) {
              accumulate({double(x), double(y)}, nvar::weight_density({double(x), double(y)}, s.kind, b, xi));
            }
          }
        }
      }
      const std::string head =
          std::string(nvar::to_string(s.kind)) + " N=" + std::to_string(n) + " b=" + to_string(s.b) + " ";
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          const double scale = std::sqrt(gram[i * k + i] * gram[j * k + j]);
          const double rel = std::abs(gram[i * k + j]) / scale;
          out.check(head + label("nu", parts[i], "mu", parts[j]), rel <= 1e-8,
                    [&] { return "relative inner product " + std::to_string(rel); });
        }
      }
    }
  }
}

void suite_univariate_limit(int m, Collector& out) {
  const auto& lag = nvar::univariate_family(Kind::Laguerre, m);
  for (int n = 0; n <= m; ++n) {
    auto got = nvar::meixner_to_laguerre_limit(n);
    auto want = lag.phi.at(n);
    while (!got.empty() && got.back().is_zero()) got.pop_back();
    while (!want.empty() && want.back().is_zero()) want.pop_back();
    out.check("n=" + std::to_string(n), got == want, [&] {
      std::string s;
      for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        const BTPoly a = i < got.size() ? got[i] : BTPoly();
        const BTPoly b = i < want.size() ? want[i] : BTPoly();
        if (!(a == b)) return "x^" + std::to_string(i) + ": " + a.str() + " != " + b.str();
      }
      return s;
    });
  }
}

// ---------------------------------------------------------------------------
// zdynamics

void suite_balance(int m, Collector& out) {
  for (const auto& lam : partitions_up_to(m)) {
    for (const Box& box : corners(lam).addable) {
      std::string detail;
      const bool ok = zdyn::detailed_balance_symbolic(lam, box, &detail);
      out.check(label("lambda", lam) + " box=" + std::to_string(box.row) + "," + std::to_string(box.col), ok,
                [&] { return detail; });
    }
  }
  for (const auto& lam : partitions_up_to(m + 1)) {
    const auto r = meixner::jump_rates(lam);
    ParamPoly sum;
    for (const auto& [b, rate] : r.add) sum += rate;
    for (const auto& [b, rate] : r.remove) sum += rate;
    out.check(label("lambda", lam) + " rate-sum", sum == r.total,
              [&] { return sum.str() + " != " + r.total.str(); });
  }
}

// ---------------------------------------------------------------------------
// symcore

void suite_involution(int m, Collector& out) {
  using RS = BasicSymFunc<Rat>;
  for (const auto& nu : partitions_up_to(m)) {
    const RS s = RS::basis_element(Basis::S, nu);
    const RS w = omega_involution(s);
    const RS want = RS::basis_element(Basis::S, nu.conjugate());
    out.check(label("nu", nu) + " omega(S)=S'", w == want, [&] { return show(w); });
    const RS ww = omega_involution(w);
    out.check(label("nu", nu) + " omega^2", ww == s, [&] { return show(ww); });
  }
  Gen gen(0x5eed0003);
  for (int trial = 0; trial < 12; ++trial) {
    const RS f = gen.symfunc<Rat>(Basis::S, m / 2 + 1, 3);
    const RS g = gen.symfunc<Rat>(Basis::P, m / 2 + 1, 3);
    const RS lhs = omega_involution(multiply(f, g));
    const RS rhs = multiply(omega_involution(f), omega_involution(g));
    out.check("product#" + std::to_string(trial), lhs == rhs, [&] { return show(lhs - rhs); });
  }
}

void suite_roundtrip(int m, Collector& out) {
  using RS = BasicSymFunc<Rat>;
  const std::vector<std::pair<Basis, Basis>> routes{{Basis::E, Basis::S}, {Basis::E, Basis::P}, {Basis::S, Basis::P}};
  for (const auto& lam : partitions_up_to(m)) {
    for (const auto& [from, via] : routes) {
      const RS f = RS::basis_element(from, lam);
      const RS back = convert(convert(f, via), from);
      out.check(std::string(to_string(from)) + "->" + to_string(via) + " " + label("lambda", lam), back == f,
                [&] { return show(back); });
    }
  }
}

void suite_transpose(int m, Collector& out) {
  for (const auto& nu : partitions_up_to(m)) {
    for (const auto& lam : partitions_up_to(m)) {
      const Rat a = eval_on_diagram(RatExpansion{{nu, Rat(1)}}, lam.conjugate());
      const Rat b = eval_on_diagram(RatExpansion{{nu.conjugate(), Rat(1)}}, lam);
      out.check(label("nu", nu, "lambda", lam), a == b, [&] { return to_string(a) + " != " + to_string(b); });
    }
  }
}

void suite_thoma(int m, Collector& out) {
  using RS = BasicSymFunc<Rat>;
  Gen gen(0x5eed0004);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> alpha, beta;
    for (int i = gen.uniform(0, 3); i > 0; --i) alpha.push_back(make_rat(gen.uniform(1, 9), 40));
    for (int i = gen.uniform(0, 3); i > 0; --i) beta.push_back(make_rat(gen.uniform(1, 9), 40));
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    std::sort(beta.begin(), beta.end(), std::greater<>());
    Rat delta = make_rat(gen.uniform(0, 5), 7);
    for (const auto& a : alpha) delta += a;
    for (const auto& b : beta) delta += b;
    const ThomaPoint w(alpha, beta, delta);
    const RS f = gen.symfunc<Rat>(Basis::S, m, 4);
    const Rat a = eval_on_thoma(f, w);
    const Rat b = eval_on_thoma_series(f, w);
    out.check("point#" + std::to_string(trial), a == b, [&] { return to_string(a) + " != " + to_string(b); });
  }
}

void suite_homomorphism(int m, Collector& out) {
  using RS = BasicSymFunc<Rat>;
  Gen gen(0x5eed0005);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const RS f = gen.symfunc<Rat>(Basis::S, m, 2);
      const RS g = gen.symfunc<Rat>(Basis::E, m, 2);
      const auto lhs = truncate_pi(multiply(f, g), n);
      const auto rhs = truncate_pi(f, n) * truncate_pi(g, n);
      out.check("N=" + std::to_string(n) + " pair#" + std::to_string(trial), lhs == rhs,
                [&] { return "f = " + show(f) + ", g = " + show(g); });
    }
  }
}

struct Entry {
  SuiteInfo info;
  void (*run)(int, Collector&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r{
      {{"eigen", "laguerre", "D L_nu = -|nu| L_nu through the Schur rule and the e-PDE", 6}, suite_eigen},
      {{"realization", "laguerre", "Schur-rule and e-PDE operators agree on S_nu", 6}, suite_realization},
      {{"orth", "laguerre", "psi(L_nu L_mu) = delta content_product(nu)", 4}, suite_orth},
      {{"psi", "laguerre", "psi kills the image of D; recursion matches the closed form", 7}, suite_psi},
      {{"characterization", "laguerre", "L_nu - S_nu is lower order and orthogonal to lower S_mu", 4},
       suite_characterization},
      {{"factorization", "laguerre", "pi_N intertwines D at z=N, z'=N+b-1 with D_N", 4}, suite_factorization},
      {{"sepvar", "laguerre", "radial/angular separated form of D", 4}, suite_sepvar},
      {{"meixner-eigen", "meixner", "D^ME M_nu = -|nu| M_nu", 6}, suite_meixner_eigen},
      {{"meixner-orth", "meixner", "psi^ME(M_nu M_mu) = delta (t(1+t))^|nu| content_product(nu)", 4},
       suite_meixner_orth},
      {{"meixner-realization", "meixner", "jump-process form of D^ME on value tables", 4}, suite_meixner_realization},
      {{"values", "meixner", "M_nu(lambda) = (-1)^|nu| C''(nu) M'_nu(lambda)", 4}, suite_values},
      {{"autodual", "meixner", "M'_nu(lambda) = M'_lambda(nu)", 5}, suite_autodual},
      {{"fs", "meixner", "FS_nu reproduces its value formula on sizes |nu|, |nu|+1", 6}, suite_fs},
      {{"limit", "meixner", "xi -> 1 limits of M_nu and D^ME", 5}, suite_limit},
      {{"truncation", "nvariate", "pi_N L_nu equals the determinantal Laguerre polynomial", 4}, suite_truncation},
      {{"meixner-truncation", "nvariate", "pi'_N M_nu equals the determinantal Meixner polynomial", 4},
       suite_meixner_truncation},
      {{"nvariate-eigen", "nvariate", "D_N phi_nu = -|nu| phi_nu for both kinds", 4}, suite_nvariate_eigen},
      {{"nvariate-realization", "nvariate", "x- and e-coordinate forms of D_N agree", 4}, suite_nvariate_realization},
      {{"nvariate-orth", "nvariate", "quadrature orthogonality of phi_nu against w_N", 3}, suite_nvariate_orth},
      {{"univariate-limit", "nvariate", "(1-xi)^n M_n(x/(1-xi)) -> L_n(x)", 6}, suite_univariate_limit},
      {{"balance", "zdynamics", "detailed balance and rate-sum identity", 5}, suite_balance},
      {{"involution", "symcore", "omega is an involution and an algebra map", 6}, suite_involution},
      {{"roundtrip", "symcore", "basis conversions round-trip", 8}, suite_roundtrip},
      {{"transpose", "symcore", "S_nu(lambda') = S_nu'(lambda)", 6}, suite_transpose},
      {{"thoma", "symcore", "Thoma evaluation via P-basis and generating series", 6}, suite_thoma},
      {{"homomorphism", "symcore", "pi_N(fg) = pi_N(f) pi_N(g)", 5}, suite_homomorphism},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return list;
}

SuiteReport run_suite(const std::string& name, int max_size) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteReport r;
    r.suite = name;
    r.max_size = max_size < 0 ? e.info.default_max_size : max_size;
    Collector c(r);
    e.run(r.max_size, c);
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace lmsf::verify
