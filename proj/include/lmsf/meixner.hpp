#ifndef LMSF_MEIXNER_HPP
#define LMSF_MEIXNER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace lmsf::meixner {

/// FS_mu(lambda) = |lambda|!/(|lambda|-|mu|)! * dim(lambda/mu) / dim(lambda), 0 unless mu is inside lambda.
Rat fs_value(const Partition& mu, const Partition& lambda);

/// FS_nu in the Schur basis, fixed by FS_nu - S_nu having size < |nu| and
/// matching fs_value on every diagram of size < |nu|. Throws MathError if the
/// interpolation system is singular.
const RatExpansion& fs_in_schur(const Partition& nu);
/// Inverse table: S_nu in the FS basis.
const RatExpansion& schur_in_fs(const Partition& nu);
/// FS_nu as a Schur-tagged element.
SymFunc fs_sf(const Partition& nu);

/// Basis conversion that also handles FS.
SymFunc convert(const SymFunc& f, Basis target);

/// Coefficient of FS_mu in M_nu:
/// (-1)^d t^d dim(nu/mu)/d! prod_{nu/mu} (z+c)(z'+c), d = |nu| - |mu|.
ParamPoly expansion_coefficient(const Partition& nu, const Partition& mu);

/// M_nu in the FS basis (cached).
const SymFunc& meixner_sf(const Partition& nu);

/// D^ME FS_nu = -|nu| FS_nu + t sum_{corners} (z+c)(z'+c) FS_{nu minus box}; result in FS.
SymFunc apply_DME_fs(const SymFunc& f);

struct JumpRates {
  std::vector<std::pair<Box, ParamPoly>> add;
  std::vector<std::pair<Box, ParamPoly>> remove;
  ParamPoly total;
};

/// A(lambda, box) = t (z+c)(z'+c) dim(lambda + box) / ((|lambda|+1) dim lambda),
/// B(lambda, box) = (1+t) |lambda| dim(lambda - box) / dim lambda,
/// C(lambda) = (1+2t)|lambda| + t z z'.
JumpRates jump_rates(const Partition& lambda);

/// sum A [f(lambda+box) - f(lambda)] + sum B [f(lambda-box) - f(lambda)] at np.
/// Throws std::out_of_range if a neighbour with a nonzero rate is missing.
Rat apply_DME_on_Y(const std::map<Partition, Rat>& values, const Partition& lambda, const NumericParams& np);

/// psi^ME(FS_nu) from |nu| psi(FS_nu) = t sum_{corners} (z+c)(z'+c) psi(FS_{nu minus box}).
const ParamPoly& psi_me_fs(const Partition& nu);
/// t^|nu| prod_nu (z+c)(z'+c) dim(nu) / |nu|!.
ParamPoly psi_me_fs_closed_form(const Partition& nu);
ParamPoly psi_me(const SymFunc& f);
/// psi^ME(f g), bilinear over FS pairs.
ParamPoly inner_product_me(const SymFunc& f, const SymFunc& g);

/// C''(nu) = t^|nu| dim(nu)/|nu|! prod_nu (z+c)(z'+c).
ParamPoly normalization_constant(const Partition& nu);

/// M'_nu(lambda) = (-1)^{|nu|} M_nu(lambda) / C''(nu), exact. Throws DomainError if a
/// content factor on nu or lambda vanishes or is not real.
Rat meixner_value_normalized(const Partition& nu, const Partition& lambda, const NumericParams& np);

/// xi -> 1 limit of (1-xi)^{|nu|} (1-xi)^{-G} M_nu in the Schur basis.
SymFunc laguerre_limit(const Partition& nu);

struct LimitReport {
  bool ok = true;
  std::string detail;
};

/// Compares lim (1-xi)^{-G} D^ME (1-xi)^G f with the Laguerre operator on f.
LimitReport operator_limit_check(const SymFunc& f);

}  // namespace lmsf::meixner

#endif  // LMSF_MEIXNER_HPP
