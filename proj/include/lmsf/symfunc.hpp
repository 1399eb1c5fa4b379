#ifndef LMSF_SYMFUNC_HPP
#define LMSF_SYMFUNC_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/nvarpoly.hpp"
#include "lmsf/partition.hpp"

namespace lmsf {

/// E: e-monomials e_lambda, P: p-monomials p_lambda, S: Schur functions,
/// FS: Frobenius-Schur functions (handled by the meixner module).
enum class Basis { E, P, S, FS };

const char* to_string(Basis b);
Basis parse_basis(std::string_view name);

/// Sparse linear combination of basis elements indexed by partitions.
template <class C>
using Expansion = std::map<Partition, C>;

using RatExpansion = Expansion<Rat>;

template <class C>
void add_to(Expansion<C>& acc, const Partition& key, const C& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

/// Element of Lambda with coefficients in C, tagged with its basis.
template <class C>
class BasicSymFunc {
 public:
  explicit BasicSymFunc(Basis basis = Basis::S) : basis_(basis) {}
  BasicSymFunc(Basis basis, Expansion<C> terms) : basis_(basis) {
    for (auto& [k, c] : terms) add_term(k, c);
  }

  static BasicSymFunc one(Basis basis = Basis::S) { return basis_element(basis, Partition()); }
  static BasicSymFunc basis_element(Basis basis, const Partition& index, const C& c = C(1)) {
    BasicSymFunc f(basis);
    f.add_term(index, c);
    return f;
  }

  Basis basis() const { return basis_; }
  const Expansion<C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Largest index size (the filtration degree, for every basis here).
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.size());
    return d;
  }

  void add_term(const Partition& index, const C& c) { add_to(terms_, index, c); }

  BasicSymFunc& operator+=(const BasicSymFunc& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BasicSymFunc& operator-=(const BasicSymFunc& o) {
    require_same_basis(o);
    for (const auto& [k, c] : o.terms_) add_term(k, C(-c));
    return *this;
  }
  BasicSymFunc& operator*=(const C& c) {
    Expansion<C> out;
    for (const auto& [k, x] : terms_) add_to(out, k, C(x * c));
    terms_ = std::move(out);
    return *this;
  }
  friend BasicSymFunc operator+(BasicSymFunc a, const BasicSymFunc& b) { return a += b; }
  friend BasicSymFunc operator-(BasicSymFunc a, const BasicSymFunc& b) { return a -= b; }
  friend BasicSymFunc operator*(BasicSymFunc a, const C& c) { return a *= c; }
  friend BasicSymFunc operator*(const C& c, BasicSymFunc a) { return a *= c; }

  /// Structural equality: same basis tag and same terms.
  friend bool operator==(const BasicSymFunc& a, const BasicSymFunc& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// Maps every coefficient through f (e.g. parameter specialisation).
  template <class D, class F>
  BasicSymFunc<D> map_coeffs(F&& f) const {
    Expansion<D> out;
    for (const auto& [k, c] : terms_) add_to(out, k, D(f(c)));
    return BasicSymFunc<D>(basis_, std::move(out));
  }

 private:
  void require_same_basis(const BasicSymFunc& o) const {
    if (o.basis_ != basis_) throw std::invalid_argument("SymFunc: basis mismatch");
  }

  Basis basis_;
  Expansion<C> terms_;
};

using SymFunc = BasicSymFunc<ParamPoly>;

// ---------------------------------------------------------------------------
// Rational change-of-basis tables (memoized, thread-safe).

/// S_nu in e-monomials via the Nagelsbach-Kostka determinant det[e_{nu'_i - i + j}].
const RatExpansion& schur_in_e(const Partition& nu);
/// e_lambda in Schur functions via iterated Pieri (vertical strips).
const RatExpansion& e_monomial_in_schur(const Partition& lambda);
/// p_lambda in e-monomials (Newton's identities).
const RatExpansion& p_monomial_in_e(const Partition& lambda);
/// e_lambda in p-monomials (Newton's identities).
const RatExpansion& e_monomial_in_p(const Partition& lambda);
/// p_k(lambda) = sum_i [a_i^k - (-b_i)^k] over modified Frobenius coordinates.
Rat power_sum_on_diagram(int k, const Partition& lambda);

/// sum_k coeff_k * table(k)
template <class C, class Table>
Expansion<C> apply_table(const Expansion<C>& f, Table&& table) {
  Expansion<C> out;
  for (const auto& [k, c] : f) {
    for (const auto& [j, r] : table(k)) add_to(out, j, C(c * r));
  }
  return out;
}

/// Re-expresses f in E, P or S. FS is handled by meixner::convert.
template <class C>
BasicSymFunc<C> convert(const BasicSymFunc<C>& f, Basis target) {
  if (f.basis() == Basis::FS || target == Basis::FS) {
    throw std::invalid_argument("convert: FS conversions live in the meixner module");
  }
  if (f.basis() == target) return f;
  Expansion<C> in_e;
  switch (f.basis()) {
    case Basis::E:
      in_e = f.terms();
      break;
    case Basis::P:
      in_e = apply_table(f.terms(), p_monomial_in_e);
      break;
    case Basis::S:
      in_e = apply_table(f.terms(), schur_in_e);
      break;
    case Basis::FS:
      break;
  }
  switch (target) {
    case Basis::E:
      return BasicSymFunc<C>(Basis::E, std::move(in_e));
    case Basis::P:
      return BasicSymFunc<C>(Basis::P, apply_table(in_e, e_monomial_in_p));
    case Basis::S:
      return BasicSymFunc<C>(Basis::S, apply_table(in_e, e_monomial_in_schur));
    case Basis::FS:
      break;
  }
  throw std::logic_error("unreachable");
}

/// Product in the free polynomial ring on e_1, e_2, ... (or p_1, p_2, ...).
template <class C>
Expansion<C> monomial_product(const Expansion<C>& a, const Expansion<C>& b) {
  Expansion<C> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) add_to(out, merge_parts(ka, kb), C(ca * cb));
  }
  return out;
}

/// f * g computed in the E basis, returned in f's basis (E/P/S only).
template <class C>
BasicSymFunc<C> multiply(const BasicSymFunc<C>& f, const BasicSymFunc<C>& g) {
  const auto fe = convert(f, Basis::E);
  const auto ge = convert(g, Basis::E);
  return convert(BasicSymFunc<C>(Basis::E, monomial_product(fe.terms(), ge.terms())), f.basis());
}

/// p_n -> (-1)^(n-1) p_n, extended multiplicatively; result in f's basis.
template <class C>
BasicSymFunc<C> omega_involution(const BasicSymFunc<C>& f) {
  const auto fp = convert(f, Basis::P);
  Expansion<C> out;
  for (const auto& [k, c] : fp.terms()) {
    const bool odd = ((k.size() - k.length()) % 2) != 0;
    add_to(out, k, odd ? C(-c) : c);
  }
  return convert(BasicSymFunc<C>(Basis::P, std::move(out)), f.basis());
}

/// Value of f on the Young diagram lambda (realization through p_k(lambda)).
template <class C>
C eval_on_diagram(const BasicSymFunc<C>& f, const Partition& lambda) {
  const auto fp = convert(f, Basis::P);
  std::vector<Rat> pk{Rat(1)};
  C acc{};
  for (const auto& [k, c] : fp.terms()) {
    Rat m = 1;
    for (int part : k.rows()) {
      while (static_cast<int>(pk.size()) <= part) pk.push_back(power_sum_on_diagram(static_cast<int>(pk.size()), lambda));
      m *= pk[part];
    }
    acc += C(c * m);
  }
  return acc;
}

/// Rational-coefficient shortcut used for interpolation tables.
Rat eval_on_diagram(const RatExpansion& schur_terms, const Partition& lambda);

// ---------------------------------------------------------------------------
// Thoma cone.

/// omega = (alpha, beta, delta) with finitely many nonzero coordinates.
class ThomaPoint {
 public:
  ThomaPoint() = default;
  /// Throws std::invalid_argument unless alpha, beta are weakly decreasing and
  /// nonnegative and sum(alpha + beta) <= delta.
  ThomaPoint(std::vector<Rat> alpha, std::vector<Rat> beta, Rat delta);

  const std::vector<Rat>& alpha() const { return alpha_; }
  const std::vector<Rat>& beta() const { return beta_; }
  const Rat& delta() const { return delta_; }
  Rat gamma() const;

  /// p_1 = delta, p_n = sum alpha_i^n - sum (-beta_i)^n for n >= 2.
  Rat power_sum(int n) const;
  /// e_n as the t^n coefficient of e^{gamma t} prod (1 + alpha_i t)/(1 - beta_i t).
  std::vector<Rat> elementary_up_to(int n) const;

 private:
  std::vector<Rat> alpha_;
  std::vector<Rat> beta_;
  Rat delta_;
};

/// f(omega) through the P-basis.
template <class C>
C eval_on_thoma(const BasicSymFunc<C>& f, const ThomaPoint& w) {
  const auto fp = convert(f, Basis::P);
  C acc{};
  for (const auto& [k, c] : fp.terms()) {
    Rat m = 1;
    for (int part : k.rows()) m *= w.power_sum(part);
    acc += C(c * m);
  }
  return acc;
}

/// f(omega) through the E-basis and the generating series of e_n(omega).
template <class C>
C eval_on_thoma_series(const BasicSymFunc<C>& f, const ThomaPoint& w) {
  const auto fe = convert(f, Basis::E);
  const auto e = w.elementary_up_to(std::max(fe.degree(), 0));
  C acc{};
  for (const auto& [k, c] : fe.terms()) {
    Rat m = 1;
    for (int part : k.rows()) m *= e[part];
    acc += C(c * m);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Truncations Lambda -> Lambda_N.

/// e_k(x_1..x_N) as a polynomial (zero for k > N).
template <class C>
MPoly<C> elementary_polynomial(int n_vars, int k) {
  MPoly<C> p(n_vars);
  if (k > n_vars || k < 0) return p;
  std::vector<int> pick(n_vars, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    p.add_term(pick, C(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

/// pi_N: e_k -> e_k(x_1..x_N), e_k -> 0 for k > N.
template <class C>
NVarPolyT<C> truncate_pi(const BasicSymFunc<C>& f, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("truncate_pi: N must be positive");
  const auto fe = convert(f, Basis::E);
  std::vector<MPoly<C>> ek;
  for (int k = 0; k <= n_vars; ++k) ek.push_back(elementary_polynomial<C>(n_vars, k));
  MPoly<C> acc(n_vars);
  for (const auto& [k, c] : fe.terms()) {
    if (k.length() > 0 && k.row(1) > n_vars) continue;
    MPoly<C> m = MPoly<C>::constant(n_vars, c);
    for (int part : k.rows()) m = m * ek[part];
    acc += m;
  }
  return NVarPolyT<C>::from_mpoly(acc);
}

/// pi'_N: p_k -> sum_i [(x_i - N + 1/2)^k - (-i + 1/2)^k].
template <class C>
NVarPolyT<C> truncate_pi_prime(const BasicSymFunc<C>& f, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("truncate_pi_prime: N must be positive");
  const auto fp = convert(f, Basis::P);
  std::vector<MPoly<C>> pk{MPoly<C>::constant(n_vars, C(1))};
  auto image = [&](int k) {
    MPoly<C> s(n_vars);
    for (int i = 1; i <= n_vars; ++i) {
      const MPoly<C> shifted =
          MPoly<C>::variable(n_vars, i - 1) + MPoly<C>::constant(n_vars, C(Rat(make_rat(1, 2) - n_vars)));
      MPoly<C> pw = MPoly<C>::constant(n_vars, C(1));
      for (int j = 0; j < k; ++j) pw = pw * shifted;
      s += pw;
      s -= MPoly<C>::constant(n_vars, C(rat_pow(make_rat(1, 2) - i, k)));
    }
    return s;
  };
  MPoly<C> acc(n_vars);
  for (const auto& [k, c] : fp.terms()) {
    MPoly<C> m = MPoly<C>::constant(n_vars, c);
    for (int part : k.rows()) {
      while (static_cast<int>(pk.size()) <= part) pk.push_back(image(static_cast<int>(pk.size())));
      m = m * pk[part];
    }
    acc += m;
  }
  return NVarPolyT<C>::from_mpoly(acc);
}

}  // namespace lmsf

#endif  // LMSF_SYMFUNC_HPP
