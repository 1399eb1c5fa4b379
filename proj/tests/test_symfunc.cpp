#include <doctest.h>

#include "support.hpp"

using namespace lmsf;
using testsupport::Gen;
using testsupport::realize;
using RS = BasicSymFunc<Rat>;

namespace {

RS e(const Partition& p) { return RS::basis_element(Basis::E, p); }
RS pw(const Partition& p) { return RS::basis_element(Basis::P, p); }
RS s(const Partition& p) { return RS::basis_element(Basis::S, p); }

}  // namespace

TEST_CASE("conversion examples") {
  CHECK(convert(s({1, 1}), Basis::E) == e({2}));
  CHECK(convert(s({2}), Basis::E) == e({1, 1}) - e({2}));
  CHECK(convert(pw({2}), Basis::E) == e({1, 1}) - e({2}) * Rat(2));
  CHECK_THROWS_AS(convert(s({1}), Basis::FS), std::invalid_argument);
}

TEST_CASE("Schur expansions match bialternants in enough variables") {
  for (const auto& nu : partitions_up_to(5)) {
    const int n = std::max(nu.size(), 1);
    const auto want = testsupport::schur_bialternant(nu, n);
    CHECK(realize(convert(s(nu), Basis::E), n) == want);
    CHECK(realize(convert(s(nu), Basis::P), n) == want);
  }
}

TEST_CASE("round trips are identities") {
  for (const auto& lam : partitions_up_to(8)) {
    CHECK(convert(convert(e(lam), Basis::S), Basis::E) == e(lam));
    CHECK(convert(convert(e(lam), Basis::P), Basis::E) == e(lam));
    CHECK(convert(convert(s(lam), Basis::P), Basis::S) == s(lam));
  }
}

TEST_CASE("multiplication") {
  CHECK(multiply(s({1}), s({1})) == s({2}) + s({1, 1}));
  CHECK(multiply(RS::one(Basis::S), s({2, 1})) == s({2, 1}));
  CHECK(multiply(e({1}), e({2})) == e({2, 1}));
  Gen gen(21);
  for (int i = 0; i < 25; ++i) {
    const RS f = gen.rat_symfunc(Basis::S, 3, 2);
    const RS g = gen.rat_symfunc(Basis::P, 2, 2);
    CHECK(realize(multiply(f, g), 5) == realize(f, 5) * realize(g, 5));
  }
}

TEST_CASE("evaluation on diagrams") {
  CHECK(eval_on_diagram(pw({1}), Partition{3, 2, 2}) == Rat(7));
  CHECK(eval_on_diagram(RS::one(Basis::S), Partition{4, 1}) == Rat(1));
  CHECK(eval_on_diagram(pw({2}), Partition{1}) == Rat(0));
  CHECK(power_sum_on_diagram(1, Partition{3, 2, 2}) == Rat(7));
  // p_2 of a single row (n): sum of contents doubled.
  for (int n = 1; n <= 6; ++n) CHECK(power_sum_on_diagram(2, Partition{n}) == Rat(n * (n - 1)));
}

TEST_CASE("transposed diagram evaluates the conjugate Schur function") {
  for (const auto& nu : partitions_up_to(5)) {
    for (const auto& lam : partitions_up_to(5)) {
      CHECK(eval_on_diagram(s(nu), lam.conjugate()) == eval_on_diagram(s(nu.conjugate()), lam));
      CHECK(eval_on_diagram(RatExpansion{{nu, Rat(1)}}, lam) == eval_on_diagram(s(nu), lam));
    }
  }
}

TEST_CASE("Thoma evaluation") {
  const ThomaPoint w({Rat(1)}, {Rat(1)}, Rat(2));
  CHECK(eval_on_thoma(pw({2}), w) == Rat(0));
  CHECK(w.gamma() == Rat(0));
  Gen gen(22);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> alpha, beta;
    for (int k = gen.uniform(0, 3); k > 0; --k) alpha.push_back(make_rat(gen.uniform(1, 9), 30));
    for (int k = gen.uniform(0, 3); k > 0; --k) beta.push_back(make_rat(gen.uniform(1, 9), 30));
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    std::sort(beta.begin(), beta.end(), std::greater<>());
    Rat delta = make_rat(gen.uniform(0, 4), 5);
    for (const auto& a : alpha) delta += a;
    for (const auto& b : beta) delta += b;
    const ThomaPoint pt(alpha, beta, delta);
    CHECK(eval_on_thoma(pw({1}), pt) == delta);
    CHECK(eval_on_thoma(e({1}), pt) == delta);
    const RS f = gen.rat_symfunc(Basis::S, 5, 3);
    CHECK(eval_on_thoma(f, pt) == eval_on_thoma_series(f, pt));
  }
  CHECK_THROWS_AS(ThomaPoint({Rat(1)}, {}, make_rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ThomaPoint({Rat(1), Rat(2)}, {}, Rat(5)), std::invalid_argument);
}

TEST_CASE("truncation pi_N") {
  CHECK(truncate_pi(e({3}), 2).is_zero());
  CHECK(truncate_pi(s({1, 1}), 1).is_zero());
  const NVarPolyT<Rat> x2 = NVarPolyT<Rat>::from_mpoly(MPoly<Rat>::variable(1, 0, 2));
  CHECK(truncate_pi(s({2}), 1) == x2);
  for (const auto& nu : partitions_up_to(4)) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(truncate_pi(s(nu), n).to_mpoly() == testsupport::schur_bialternant(nu, n));
    }
  }
}

TEST_CASE("pi_N is an algebra homomorphism") {
  Gen gen(23);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 8; ++i) {
      const RS f = gen.rat_symfunc(Basis::S, 5, 2);
      const RS g = gen.rat_symfunc(Basis::P, 4, 2);
      CHECK(truncate_pi(multiply(f, g), n) == truncate_pi(f, n) * truncate_pi(g, n));
    }
  }
}

TEST_CASE("shifted truncation pi'_N") {
  const auto x = MPoly<Rat>::variable(1, 0);
  CHECK(truncate_pi_prime(pw({1}), 1).to_mpoly() == x);
  CHECK(truncate_pi_prime(RS::one(Basis::S), 2) == NVarPolyT<Rat>::constant(2, Rat(1)));
  CHECK(truncate_pi_prime(pw({2}), 1).to_mpoly() == x * x - x);
  // pi'_N(f)(x) = f(lambda) at x_i = lambda_i + N - i.
  for (const auto& nu : partitions_up_to(4)) {
    const auto img = truncate_pi_prime(s(nu), 2).to_mpoly();
    for (const auto& lam : partitions_up_to(5)) {
      if (lam.length() > 2) continue;
      CHECK(img.eval({Rat(lam.row(1) + 1), Rat(lam.row(2))}) == eval_on_diagram(s(nu), lam));
    }
  }
}

TEST_CASE("omega involution") {
  CHECK(omega_involution(pw({2})) == pw({2}) * Rat(-1));
  CHECK(omega_involution(s({2})) == s({1, 1}));
  CHECK(omega_involution(pw({1})) == pw({1}));
  for (const auto& nu : partitions_up_to(6)) {
    CHECK(omega_involution(s(nu)) == s(nu.conjugate()));
    CHECK(omega_involution(omega_involution(e(nu))) == e(nu));
  }
  Gen gen(24);
  for (int i = 0; i < 20; ++i) {
    const RS f = gen.rat_symfunc(Basis::E, 3, 3), g = gen.rat_symfunc(Basis::S, 3, 2);
    CHECK(omega_involution(multiply(f, g)) == multiply(omega_involution(f), omega_involution(g)));
  }
}

TEST_CASE("basis tags and parsing") {
  CHECK(parse_basis("S") == Basis::S);
  CHECK(parse_basis("FS") == Basis::FS);
  CHECK(std::string(to_string(Basis::P)) == "P");
  CHECK_THROWS_AS(parse_basis("Q"), std::invalid_argument);
  CHECK_THROWS_AS(s({1}) + e({1}), std::invalid_argument);
}
