#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "lmsf/laguerre.hpp"
#include "lmsf/nvariate.hpp"
#include "support.hpp"

using namespace lmsf;
using testsupport::Gen;

namespace {

SymFunc S(const Partition& p, const ParamPoly& c = ParamPoly(1)) { return SymFunc::basis_element(Basis::S, p, c); }
SymFunc E(const Partition& p, const ParamPoly& c = ParamPoly(1)) { return SymFunc::basis_element(Basis::E, p, c); }

const ParamPoly zz = param::z() * param::zp();

}  // namespace

TEST_CASE("Laguerre symmetric functions in the Schur basis") {
  CHECK(laguerre::laguerre_sf(Partition()) == SymFunc::one());
  CHECK(laguerre::laguerre_sf(Partition{1}) == S({1}) - S({}, zz));
  const ParamPoly c1 = param::content_factor(1);
  const SymFunc l2 = S({2}) - S({1}, c1) + S({}, zz * c1 * make_rat(1, 2));
  CHECK(laguerre::laguerre_sf(Partition{2}) == l2);
  CHECK(laguerre::expansion_coefficient(Partition{2}, Partition{1}) == -c1);
  CHECK(laguerre::expansion_coefficient(Partition{2}, Partition{1, 1}).is_zero());
}

TEST_CASE("Schur-rule operator examples") {
  CHECK(laguerre::apply_D_schur(S({1})) == S({1}, ParamPoly(-1)) + S({}, zz));
  CHECK(laguerre::apply_D_schur(SymFunc::one()).is_zero());
  CHECK(laguerre::apply_D_schur(S({2})) == S({2}, ParamPoly(-2)) + S({1}, param::content_factor(1)));
}

TEST_CASE("e-PDE operator examples") {
  CHECK(laguerre::apply_D_epde(E({1})) == E({1}, ParamPoly(-1)) + E({}, zz));
  CHECK(laguerre::apply_D_epde(SymFunc::one(Basis::E)).is_zero());
  const SymFunc via_pde = laguerre::apply_D_epde(E({2}));
  const SymFunc via_schur = convert(laguerre::apply_D_schur(S({1, 1})), Basis::E);
  CHECK(via_pde == via_schur);
  // Result stays in the input basis.
  CHECK(laguerre::apply_D_epde(S({2})).basis() == Basis::S);
}

TEST_CASE("both realizations agree on S_nu and on L_nu eigenrelations") {
  for (const auto& nu : partitions_up_to(5)) {
    const SymFunc a = laguerre::apply_D_schur(S(nu));
    const SymFunc b = convert(laguerre::apply_D_epde(convert(S(nu), Basis::E)), Basis::S);
    CHECK(a == b);
    const SymFunc& l = laguerre::laguerre_sf(nu);
    CHECK(laguerre::apply_D_schur(l) == l * ParamPoly(-nu.size()));
  }
}

TEST_CASE("psi examples") {
  CHECK(laguerre::psi(SymFunc::one()) == ParamPoly(1));
  CHECK(laguerre::psi(S({1})) == zz);
  const SymFunc l1 = laguerre::laguerre_sf(Partition{1});
  CHECK(laguerre::psi(multiply(l1, l1)) == zz);
  CHECK(laguerre::psi(E({1})) == zz);
}

TEST_CASE("psi recursion matches the first-power closed form") {
  for (const auto& nu : partitions_up_to(6)) {
    CHECK(laguerre::psi_schur(nu) == laguerre::psi_schur_closed_form(nu));
  }
  // The squared dimension ratio differs already at (2,1).
  const Partition nu{2, 1};
  const ParamPoly squared = content_product(nu) * make_rat(dim_syt(nu) * dim_syt(nu), factorial(3) * factorial(3));
  CHECK_FALSE(laguerre::psi_schur(nu) == squared);
}

TEST_CASE("psi at z = 1, z' = b is the Gamma(b) moment functional") {
  // pi_1 S_(k) = x^k and pi_1 kills every S_nu with two rows.
  for (double b : {0.5, 1.0, 2.5}) {
    const Rat br = parse_rat(b == 0.5 ? "1/2" : b == 1.0 ? "1" : "5/2");
    for (int k = 0; k <= 5; ++k) {
      const Rat moment = bt_eval(specialize_degenerate(laguerre::psi_schur(Partition(k ? std::vector<int>{k} : std::vector<int>{})), 1), br, Rat(0));
      boost::math::quadrature::exp_sinh<double> integrator;
      const double q = integrator.integrate([&](double x) { return x > 600 ? 0.0 : std::exp((k + b - 1) * std::log(x) - x); }) /
                       boost::math::tgamma(b);
      CHECK(moment.get_d() == doctest::Approx(q).epsilon(1e-9));
    }
    CHECK(specialize_degenerate(laguerre::psi_schur(Partition{1, 1}), 1).is_zero());
  }
}

TEST_CASE("psi annihilates the image of D") {
  for (const auto& nu : partitions_up_to(7)) CHECK(laguerre::psi(laguerre::apply_D_schur(S(nu))).is_zero());
}

TEST_CASE("inner products") {
  using laguerre::inner_product;
  using laguerre::laguerre_sf;
  CHECK(inner_product(laguerre_sf({1}), laguerre_sf({2})).is_zero());
  CHECK(inner_product(SymFunc::one(), SymFunc::one()) == ParamPoly(1));
  CHECK(inner_product(laguerre_sf({1, 1}), laguerre_sf({1, 1})) ==
        zz * (param::z() - ParamPoly(1)) * (param::zp() - ParamPoly(1)));
  // Bilinear evaluation agrees with psi of the explicit product.
  Gen gen(31);
  for (int i = 0; i < 10; ++i) {
    const SymFunc f = S(gen.partition(3), ParamPoly(gen.rational())) + S(gen.partition(2), param::z());
    const SymFunc g = S(gen.partition(3), ParamPoly(gen.rational()));
    CHECK(inner_product(f, g) == laguerre::psi(multiply(f, g)));
  }
}

TEST_CASE("orthogonality for |nu|, |mu| <= 3") {
  const auto parts = partitions_up_to(3);
  for (const auto& nu : parts) {
    for (const auto& mu : parts) {
      const ParamPoly v = laguerre::inner_product(laguerre::laguerre_sf(nu), laguerre::laguerre_sf(mu));
      CHECK(v == (nu == mu ? content_product(nu) : ParamPoly()));
    }
  }
}

TEST_CASE("L_nu minus S_nu is lower order and orthogonal to lower Schur functions") {
  for (const auto& nu : partitions_up_to(4)) {
    const SymFunc lower = laguerre::laguerre_sf(nu) - S(nu);
    CHECK((lower.is_zero() || lower.degree() < nu.size()));
    for (const auto& mu : partitions_up_to(nu.size() - 1)) {
      CHECK(laguerre::inner_product(laguerre::laguerre_sf(nu), S(mu)).is_zero());
    }
  }
}

TEST_CASE("Schur structure constants follow Pieri for a single box") {
  const auto& prod = laguerre::schur_product(Partition{2, 1}, Partition{1});
  const RatExpansion want{{Partition{3, 1}, Rat(1)}, {Partition{2, 2}, Rat(1)}, {Partition{2, 1, 1}, Rat(1)}};
  CHECK(prod == want);
}

TEST_CASE("degenerate specialization intertwines D with D_N") {
  Gen gen(32);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 5; ++i) {
      SymFunc f(Basis::E);
      for (int k = 0; k < 3; ++k) f.add_term(gen.partition(4), ParamPoly(gen.rational()) + param::zp() * gen.rational());
      auto spec = [n](const SymFunc& g) {
        return g.map_coeffs<BTPoly>([n](const ParamPoly& p) { return specialize_degenerate(p, n); });
      };
      const NVarPoly lhs = truncate_pi(spec(laguerre::apply_D_epde(f)), n);
      const NVarPoly rhs = nvar::apply_DN_laguerre_x(truncate_pi(spec(f), n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("separation of variables") {
  CHECK(laguerre::separation_check(E({1})).ok);
  CHECK(laguerre::separation_check(SymFunc::one(Basis::E)).ok);
  CHECK(laguerre::separation_check(E({2})).ok);
  for (const auto& lam : partitions_up_to(5)) CHECK(laguerre::separation_check(E(lam)).ok);
  CHECK(laguerre::separation_check(S({2, 1})).ok);
}
