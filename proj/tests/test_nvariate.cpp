#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "lmsf/laguerre.hpp"
#include "lmsf/nvariate.hpp"
#include "support.hpp"

using namespace lmsf;
using nvar::Kind;

namespace {

const BTPoly b = btparam::b();

double upoly_eval(const nvar::UPoly& p, double x, const Rat& bv, const Rat& tv) {
  double acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + bt_eval(p[k], bv, tv).get_d();
  return acc;
}

Rat nvar_eval(const NVarPoly& f, const std::vector<int>& x, const Rat& bv, const Rat& tv) {
  const MPoly<BTPoly> m = f.to_mpoly();
  Rat acc = 0;
  for (const auto& [e, c] : m.terms()) {
    Rat term = bt_eval(c, bv, tv);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    }
    acc += term;
  }
  return acc;
}

NVarPoly e_poly(int k, int n) { return truncate_pi(BasicSymFunc<BTPoly>::basis_element(Basis::E, Partition{k}), n); }

}  // namespace

TEST_CASE("first univariate polynomials") {
  const auto& lag = nvar::univariate_family(Kind::Laguerre, 3);
  CHECK(lag.phi[0] == nvar::UPoly{BTPoly(1)});
  CHECK(lag.phi[1] == nvar::UPoly{-b, BTPoly(1)});
  CHECK(lag.phi[2] == nvar::UPoly{b * (b + BTPoly(1)), BTPoly(-2) * (b + BTPoly(1)), BTPoly(1)});
  const auto& mx = nvar::univariate_family(Kind::Meixner, 3);
  CHECK(mx.phi[1] == nvar::UPoly{-(b * btparam::t()), BTPoly(1)});
  CHECK(nvar::moment(Kind::Laguerre, 2) == b * (b + BTPoly(1)));
  CHECK(nvar::moment(Kind::Meixner, 1) == b * btparam::t());
  CHECK(lag.eigenvalues[3] == 3);
}

TEST_CASE("Laguerre polynomials are orthogonal under x^(b-1) e^(-x)") {
  const auto& fam = nvar::univariate_family(Kind::Laguerre, 4);
  boost::math::quadrature::exp_sinh<double> integrator;
  for (const Rat bv : {make_rat(3, 2), Rat(2)}) {
    const double bd = bv.get_d();
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n < m; ++n) {
        const double v = integrator.integrate([&](double x) {
          if (x > 600) return 0.0;
          return upoly_eval(fam.phi[m], x, bv, Rat(0)) * upoly_eval(fam.phi[n], x, bv, Rat(0)) *
                 std::exp((bd - 1) * std::log(x) - x);
        });
        CHECK(std::abs(v) < 1e-8 * boost::math::tgamma(bd + m + n));
      }
    }
  }
}

TEST_CASE("Meixner polynomials are orthogonal under the negative binomial weight") {
  const auto& fam = nvar::univariate_family(Kind::Meixner, 4);
  for (const Rat xi : {make_rat(1, 3), make_rat(1, 2)}) {
    const Rat bv = make_rat(5, 2);
    const Rat tv = xi / (Rat(1) - xi);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= m; ++n) {
        double sum = 0, w = std::pow(1 - xi.get_d(), bv.get_d());
        for (int x = 0; x < 400; ++x) {
          sum += upoly_eval(fam.phi[m], x, bv, tv) * upoly_eval(fam.phi[n], x, bv, tv) * w;
          w *= (bv.get_d() + x) * xi.get_d() / (x + 1);
        }
        if (m != n) CHECK(std::abs(sum) < 1e-9);
        if (m == n) CHECK(sum > 0);
      }
    }
  }
}

TEST_CASE("univariate Meixner operator eigenvalues") {
  const auto& fam = nvar::univariate_family(Kind::Meixner, 4);
  for (int n = 0; n <= 4; ++n) {
    NVarPoly f(1);
    for (std::size_t k = 0; k < fam.phi[n].size(); ++k) f.add_term({static_cast<int>(k)}, fam.phi[n][k]);
    CHECK(nvar::apply_DN_meixner_poly(f) == f * BTPoly(-n));
  }
}

TEST_CASE("D_N on e_1") {
  for (int n = 1; n <= 4; ++n) {
    const NVarPoly e1 = e_poly(1, n);
    const NVarPoly want = NVarPoly::constant(n, BTPoly(n) * (BTPoly(n - 1) + b)) - e1;
    CHECK(nvar::apply_DN_laguerre_x(e1) == want);
    CHECK(nvar::apply_DN_laguerre_e(e1) == want);
  }
  CHECK(nvar::apply_DN_laguerre_x(NVarPoly::constant(2, BTPoly(1))).is_zero());
}

TEST_CASE("x-form and e-form of D_N agree") {
  testsupport::Gen gen(41);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 10; ++i) {
      NVarPoly f = NVarPoly::constant(n, BTPoly(gen.rational()));
      for (int k = 0; k < 3; ++k) {
        const int a = gen.uniform(1, n), c = gen.uniform(1, n);
        f += e_poly(a, n) * e_poly(c, n) * BTPoly(gen.rational());
      }
      CHECK(nvar::apply_DN_laguerre_x(f) == nvar::apply_DN_laguerre_e(f));
      const auto round = nvar::from_e_coords(nvar::to_e_coords(f), n);
      CHECK(round == f);
    }
  }
}

TEST_CASE("determinantal polynomials are eigenfunctions") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& nu : partitions_up_to(3)) {
      if (nu.length() > n) continue;
      const NVarPoly lag = nvar::multivariate_op(nu, nvar::univariate_family(Kind::Laguerre, 6), n);
      CHECK(nvar::apply_DN_laguerre_x(lag) == lag * BTPoly(-nu.size()));
      const NVarPoly mx = nvar::multivariate_op(nu, nvar::univariate_family(Kind::Meixner, 6), n);
      CHECK(nvar::apply_DN_meixner_poly(mx) == mx * BTPoly(-nu.size()));
    }
  }
}

TEST_CASE("lattice operator at N = 1 is the birth-death generator") {
  const Rat bv = make_rat(3, 2), xi = make_rat(1, 3);
  const Rat tv = xi / (Rat(1) - xi);
  std::map<std::vector<int>, Rat> vals;
  for (int x = 0; x <= 6; ++x) vals[{x}] = Rat(x * x * x - 2 * x);
  for (int x = 0; x <= 5; ++x) {
    const Rat up = tv * (bv + x), down = (Rat(1) + tv) * x;
    Rat want = up * (vals[{x + 1}] - vals[{x}]);
    if (x > 0) want += down * (vals[{x - 1}] - vals[{x}]);
    CHECK(nvar::apply_DN_meixner(vals, {x}, bv, xi) == want);
  }
}

TEST_CASE("lattice operator kills constants and matches the polynomial form") {
  const Rat bv = make_rat(5, 2), xi = make_rat(1, 2);
  const Rat tv = xi / (Rat(1) - xi);
  std::map<std::vector<int>, Rat> ones;
  for (int x1 = 0; x1 <= 6; ++x1) {
    for (int x2 = 0; x2 < x1; ++x2) ones[{x1, x2}] = Rat(1);
  }
  for (int x1 = 1; x1 <= 5; ++x1) {
    for (int x2 = 0; x2 < x1; ++x2) CHECK(nvar::apply_DN_meixner(ones, {x1, x2}, bv, xi) == Rat(0));
  }
  const NVarPoly f = e_poly(1, 2) * e_poly(2, 2) + e_poly(1, 2) * e_poly(1, 2);
  std::map<std::vector<int>, Rat> vals;
  for (const auto& [k, v] : ones) vals[k] = nvar_eval(f, k, bv, tv);
  const NVarPoly df = nvar::apply_DN_meixner_poly(f);
  for (int x1 = 1; x1 <= 5; ++x1) {
    for (int x2 = 0; x2 < x1; ++x2) {
      CHECK(nvar::apply_DN_meixner(vals, {x1, x2}, bv, xi) == nvar_eval(df, {x1, x2}, bv, tv));
    }
  }
  CHECK_THROWS_AS(nvar::apply_DN_meixner(ones, {1, 1}, bv, xi), std::invalid_argument);
  CHECK_THROWS_AS(nvar::apply_DN_meixner(ones, {6, 0}, bv, xi), std::out_of_range);
}

TEST_CASE("truncation cross-checks") {
  CHECK(nvar::truncation_crosscheck(Partition{1}, 1, Rat(1), Kind::Laguerre).ok);
  CHECK(nvar::truncation_crosscheck(Partition{2, 1}, 2, make_rat(1, 3), Kind::Laguerre).ok);
  CHECK(nvar::truncation_crosscheck(Partition{1}, 1, Rat(1), Kind::Meixner, make_rat(1, 2)).ok);
  CHECK(nvar::truncation_crosscheck(Partition{2, 1}, 2, make_rat(5, 2), Kind::Meixner, make_rat(1, 3)).ok);
  CHECK(nvar::truncation_crosscheck_symbolic(Partition{2}, 2, Kind::Laguerre).ok);
  CHECK(nvar::truncation_crosscheck_symbolic(Partition{1, 1}, 2, Kind::Meixner).ok);
}

TEST_CASE("weight densities") {
  CHECK(nvar::weight_density({1.0}, Kind::Laguerre, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(nvar::weight_density({2.0, 1.0}, Kind::Laguerre, 1.0) == doctest::Approx(std::exp(-3.0)));
  CHECK(nvar::weight_density({3.0, 1.0}, Kind::Laguerre, 2.0) == doctest::Approx(4.0 * 3.0 * std::exp(-4.0)));
  CHECK(nvar::weight_density({0.0}, Kind::Meixner, 2.0, 0.5) == doctest::Approx(0.25));
  CHECK(nvar::weight_density({1.0, 0.0}, Kind::Meixner, 2.0, 0.5) == doctest::Approx(0.25 * 0.25 * 2.0 * 0.5));
  CHECK_THROWS_AS(nvar::weight_density({1.0, 2.0}, Kind::Laguerre, 1.0), std::invalid_argument);
}

TEST_CASE("Meixner to Laguerre limit of univariate polynomials") {
  const auto& lag = nvar::univariate_family(Kind::Laguerre, 6);
  for (int n = 0; n <= 6; ++n) CHECK(nvar::meixner_to_laguerre_limit(n) == lag.phi[n]);
}
