#ifndef LMSF_TESTS_SUPPORT_HPP
#define LMSF_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/nvarpoly.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace testsupport {

using lmsf::BigInt;
using lmsf::ParamPoly;
using lmsf::Partition;
using lmsf::Rat;

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rat rational(int span = 6, int max_den = 5) {
    return lmsf::make_rat(uniform(-span, span), uniform(1, max_den));
  }

  Partition partition(int max_size) {
    // Random walk of box additions.
    Partition p;
    const int n = uniform(0, max_size);
    for (int i = 0; i < n; ++i) {
      const auto add = lmsf::corners(p).addable;
      p = p.add_box(add[uniform(0, static_cast<int>(add.size()) - 1)]);
    }
    return p;
  }

  ParamPoly param_poly(int max_terms = 4, int max_deg = 2) {
    ParamPoly p;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) {
      ParamPoly::Exponents e{uniform(0, max_deg), uniform(0, max_deg), uniform(0, max_deg)};
      p += ParamPoly::monomial(e, rational());
    }
    return p;
  }

  lmsf::BasicSymFunc<Rat> rat_symfunc(lmsf::Basis basis, int max_size, int n_terms) {
    lmsf::BasicSymFunc<Rat> f(basis);
    for (int i = 0; i < n_terms; ++i) f.add_term(partition(max_size), rational());
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Standard tableaux counted by stripping removable corners recursively.
inline BigInt brute_syt(const Partition& lambda, const Partition& stop = Partition()) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
  if (lambda == stop) return 1;
  if (!lambda.contains(stop)) return 0;
  const auto key = std::make_pair(lambda.rows(), stop.rows());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (int r = 1; r <= lambda.length(); ++r) {
    if (lambda.row(r) > lambda.row(r + 1)) {
      const Partition smaller = lambda.remove_box({r, lambda.row(r)});
      if (smaller.contains(stop)) total += brute_syt(smaller, stop);
    }
  }
  memo.emplace(key, total);
  return total;
}

/// Number of partitions of n from the recursion p(n, k) over the largest part.
inline long count_partitions(int n) {
  std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= n; ++k) p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
  }
  return p[n][n];
}

using RPoly = lmsf::MPoly<Rat>;

/// Determinant of a square matrix of polynomials (Laplace expansion).
inline RPoly poly_det(const std::vector<std::vector<RPoly>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return RPoly::constant(nvars, Rat(1));
  if (n == 1) return m[0][0];
  RPoly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<RPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const RPoly term = m[0][j] * poly_det(minor, nvars);
    if (j % 2) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

/// Schur polynomial s_lambda(x_1..x_n) as the bialternant a_{lambda+delta} / a_delta.
inline RPoly schur_bialternant(const Partition& lambda, int n) {
  if (lambda.length() > n) return RPoly(n);
  auto alternant = [n](const std::vector<int>& exps) {
    std::vector<std::vector<RPoly>> m(n, std::vector<RPoly>(n, RPoly(n)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = RPoly::variable(n, j, exps[i]);
    }
    return poly_det(m, n);
  };
  std::vector<int> top(n), delta(n);
  for (int i = 0; i < n; ++i) {
    delta[i] = n - 1 - i;
    top[i] = lambda.row(i + 1) + delta[i];
  }
  return alternant(top).exact_divide(alternant(delta));
}

/// Power sum p_k(x_1..x_n).
inline RPoly power_sum_poly(int k, int n) {
  RPoly p(n);
  for (int i = 0; i < n; ++i) p += RPoly::variable(n, i, k);
  return p;
}

/// Image of a rational symmetric function in n variables, computed through
/// the bialternant (S), power sums (P) or Schur columns e_k = s_(1^k) (E).
inline RPoly realize(const lmsf::BasicSymFunc<Rat>& f, int n) {
  RPoly acc(n);
  for (const auto& [k, c] : f.terms()) {
    RPoly m = RPoly::constant(n, Rat(1));
    switch (f.basis()) {
      case lmsf::Basis::S:
        m = schur_bialternant(k, n);
        break;
      case lmsf::Basis::P:
        for (int part : k.rows()) m = m * power_sum_poly(part, n);
        break;
      case lmsf::Basis::E:
        for (int part : k.rows()) m = m * schur_bialternant(Partition(std::vector<int>(part, 1)), n);
        break;
      case lmsf::Basis::FS:
        throw std::invalid_argument("realize: FS has no polynomial image here");
    }
    acc += m * c;
  }
  return acc;
}

/// Standard fillings of lambda/mu by corner stripping.
inline BigInt brute_skew(const Partition& lambda, const Partition& mu) { return brute_syt(lambda, mu); }

}  // namespace testsupport

#endif  // LMSF_TESTS_SUPPORT_HPP
