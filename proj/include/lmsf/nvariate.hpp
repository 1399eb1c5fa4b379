#ifndef LMSF_NVARIATE_HPP
#define LMSF_NVARIATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/nvarpoly.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace lmsf::nvar {

enum class Kind { Laguerre, Meixner };

const char* to_string(Kind k);

/// Univariate polynomial: coefficient of x^k at index k.
using UPoly = std::vector<BTPoly>;

/// Monic orthogonal polynomials phi_0..phi_n with coefficients in Q[b, t].
/// Laguerre: weight x^{b-1} e^{-x}, moments (b)_k.
/// Meixner: negative binomial weight, factorial moments (b)_k t^k.
struct UnivariateFamily {
  Kind kind = Kind::Laguerre;
  std::vector<UPoly> phi;
  std::vector<BTPoly> moments;
  /// x phi_n = phi_{n+1} + alpha_n phi_n + beta_n phi_{n-1}
  std::vector<BTPoly> alpha;
  std::vector<BTPoly> beta;
  /// D phi_n = -mu_n phi_n, mu_n = n for both kinds.
  std::vector<int> eigenvalues;
};

/// Builds phi_0..phi_{n_max} by Gram-Schmidt against exact moments. Throws
/// MathError if a Hankel pivot vanishes or the recurrence leaves a remainder.
UnivariateFamily build_univariate(Kind kind, int n_max);

/// Shared cached family with at least n_max + 1 members.
const UnivariateFamily& univariate_family(Kind kind, int n_max);

/// k-th moment of the weight, symbolic in b (and t for Meixner).
BTPoly moment(Kind kind, int k);

/// phi(x) as an N-variable polynomial in variable i.
MPoly<BTPoly> upoly_in_var(const UPoly& p, int n_vars, int i);

/// det[phi_{nu_i + N - i}(x_j)] / V_N, with exact division.
NVarPoly multivariate_op(const Partition& nu, const UnivariateFamily& fam, int n_vars);

/// Vandermonde prod_{i<j} (x_i - x_j).
MPoly<BTPoly> vandermonde(int n_vars);

/// sum_i (x_i d_i^2 + (b - x_i) d_i) + sum_{i<j} 2 (x_i d_i - x_j d_j)/(x_i - x_j).
NVarPoly apply_DN_laguerre_x(const NVarPoly& f);

/// Expansion of a symmetric polynomial in e-monomials e_lambda (parts <= N).
Expansion<BTPoly> to_e_coords(const NVarPoly& f);
NVarPoly from_e_coords(const Expansion<BTPoly>& f, int n_vars);

/// Same operator in e-coordinates: B_n = -n e_n + (N-n+1)(N+b-n) e_{n-1}, e_k = 0 for k > N.
NVarPoly apply_DN_laguerre_e(const NVarPoly& f);

/// V^{-1} (sum_i D^{x_i}) V + N(N-1)/2 with the univariate Meixner operator
/// D f(x) = t(b+x) f(x+1) + (1+t) x f(x-1) - (t(b+x) + (1+t) x) f(x).
NVarPoly apply_DN_meixner_poly(const NVarPoly& f);

/// Lattice form sum A_i f(x+e_i) + sum B_i f(x-e_i) - C f(x) on the strict
/// chamber x_1 > ... > x_N >= 0. Moves with a zero rate are not looked up.
/// Throws std::invalid_argument outside the chamber and std::out_of_range for
/// a missing neighbour value.
Rat apply_DN_meixner(const std::map<std::vector<int>, Rat>& values, const std::vector<int>& x, const Rat& b,
                     const Rat& xi);

/// Rates of the lattice form at x (exact).
struct LatticeRates {
  std::vector<Rat> up;
  std::vector<Rat> down;
  Rat diagonal;
};
LatticeRates meixner_lattice_rates(const std::vector<int>& x, const Rat& b, const Rat& xi);

struct CheckReport {
  bool ok = true;
  std::string detail;
};

/// Laguerre: pi_N(L_nu at z=N, z'=N+b-1) vs the determinantal polynomial.
/// Meixner: pi'_N(M_nu at z=N, z'=N+b-1) vs the determinantal polynomial.
/// Both sides are compared at the given b (and xi for Meixner).
CheckReport truncation_crosscheck(const Partition& nu, int n_vars, const Rat& b, Kind kind,
                                  std::optional<Rat> xi = std::nullopt);

/// The same comparison kept symbolic in b and t.
CheckReport truncation_crosscheck_symbolic(const Partition& nu, int n_vars, Kind kind);

/// Laguerre: V_N(x)^2 prod x_i^{b-1} e^{-x_i}.
/// Meixner: V_N(x)^2 prod (1-xi)^b (b)_{x_i} xi^{x_i} / x_i!  (x integral).
/// Throws std::invalid_argument outside the ordered chamber.
double weight_density(const std::vector<double>& x, Kind kind, double b, double xi = 0.5);

/// Coefficients of (1-xi)^n M_n(x/(1-xi)) as xi -> 1, via leading t-coefficients.
UPoly meixner_to_laguerre_limit(int n);

}  // namespace lmsf::nvar

#endif  // LMSF_NVARIATE_HPP
