#ifndef LMSF_LAGUERRE_HPP
#define LMSF_LAGUERRE_HPP

#include <map>
#include <string>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace lmsf {

/// Second-order operator in the e-variables
///   sum_{m,n} A_mn d^2/de_m de_n + sum_n B_n d/de_n,
///   A_mn = sum_{k=0}^{min(m,n)-1} (m+n-1-2k) e_{m+n-1-k} e_k,
///   B_n  = -n e_n + K(n) e_{n-1},
/// with e_0 = 1. The sum over (m, n) runs over ordered pairs. When
/// `max_index` > 0, e_k is set to zero for k > max_index.
template <class C, class K>
Expansion<C> apply_e_operator(const Expansion<C>& f, K&& k_of_n, int max_index = 0) {
  Expansion<C> out;
  auto emit = [&](std::vector<int> parts, const C& c) {
    if (max_index > 0) {
      for (int p : parts) {
        if (p > max_index) return;
      }
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    add_to(out, Partition(std::move(parts)), c);
  };
  for (const auto& [lambda, coeff] : f) {
    std::map<int, int> mult;
    for (int p : lambda.rows()) ++mult[p];
    auto without = [&](int a, int b) {
      std::map<int, int> m = mult;
      if (--m[a] == 0) m.erase(a);
      if (b > 0 && --m[b] == 0) m.erase(b);
      std::vector<int> parts;
      for (const auto& [k, v] : m) parts.insert(parts.end(), v, k);
      return parts;
    };
    for (const auto& [n, mn] : mult) {
      // B_n d/de_n
      auto rest = without(n, 0);
      {
        auto parts = rest;
        parts.push_back(n);
        emit(parts, C(coeff * Rat(-n * mn)));
      }
      {
        auto parts = rest;
        parts.push_back(n - 1);
        emit(parts, C(coeff * C(k_of_n(n)) * Rat(mn)));
      }
      for (const auto& [m, mm] : mult) {
        // A_mn d^2/de_m de_n
        int factor;
        if (m == n) {
          if (mn < 2) continue;
          factor = mn * (mn - 1);
        } else {
          factor = mm * mn;
        }
        const auto base = without(m, n);
        for (int k = 0; k < std::min(m, n); ++k) {
          auto parts = base;
          parts.push_back(m + n - 1 - k);
          parts.push_back(k);
          emit(parts, C(coeff * Rat(factor * (m + n - 1 - 2 * k))));
        }
      }
    }
  }
  return out;
}

namespace laguerre {

/// Coefficient of S_mu in L_nu:
/// (-1)^{|nu|-|mu|} dim(nu/mu)/(|nu|-|mu|)! prod_{nu/mu} (z+c)(z'+c).
ParamPoly expansion_coefficient(const Partition& nu, const Partition& mu);

/// L_nu in the Schur basis (cached).
const SymFunc& laguerre_sf(const Partition& nu);

/// D S_nu = -|nu| S_nu + sum_{corners} (z+c)(z'+c) S_{nu minus box}; result in S.
SymFunc apply_D_schur(const SymFunc& f);

/// D through its e-variable differential form; result in f's basis.
SymFunc apply_D_epde(const SymFunc& f);

/// psi(S_nu) from |nu| psi(S_nu) = sum_{corners} (z+c)(z'+c) psi(S_{nu minus box}).
const ParamPoly& psi_schur(const Partition& nu);
/// prod_nu (z+c)(z'+c) * dim(nu) / |nu|!.
ParamPoly psi_schur_closed_form(const Partition& nu);
ParamPoly psi(const SymFunc& f);

/// psi(S_a S_b), cached.
const ParamPoly& psi_schur_pair(const Partition& a, const Partition& b);
/// (f, g) = psi(f g), computed bilinearly over Schur pairs.
ParamPoly inner_product(const SymFunc& f, const SymFunc& g);

/// Rational structure constants: S_a S_b = sum_c coeff S_c (cached).
const RatExpansion& schur_product(const Partition& a, const Partition& b);

struct SeparationReport {
  bool ok = true;
  std::string detail;
};

/// Rewrites f in r = e_1, e°_n = e_n / e_1^n and compares the radial plus
/// angular form of the operator against apply_D_epde term by term.
SeparationReport separation_check(const SymFunc& f);

}  // namespace laguerre
}  // namespace lmsf

#endif  // LMSF_LAGUERRE_HPP
