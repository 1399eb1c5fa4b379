#ifndef LMSF_COEFFRING_HPP
#define LMSF_COEFFRING_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lmsf {

using Rat = mpq_class;
using BigInt = mpz_class;

/// Raised when numeric parameters fall outside the domain an operation needs
/// (xi outside (0,1), inadmissible or degenerate (z, z') where forbidden).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact identity that must hold by construction fails
/// (nonzero division remainder, divergent t-degree, singular system).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-7/4" or a finite decimal such as "0.25" into an exact rational.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/// num/den in lowest terms (mpq_class(num, den) does not reduce).
inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, int exponent);
BigInt factorial(int n);

// ---------------------------------------------------------------------------
// Sparse polynomials in a fixed, small set of formal parameters.

/// Parameter ring Q[z, z', t] with t = xi / (1 - xi).
struct ZZpTVars {
  static constexpr std::size_t count = 3;
  static constexpr std::size_t t_index = 2;
  static constexpr std::array<const char*, 3> keys{"dz", "dzp", "dt"};
  static constexpr std::array<const char*, 3> names{"z", "z'", "t"};
};

/// Ring Q[b, t] used for the N-variate classical families.
struct BTVars {
  static constexpr std::size_t count = 2;
  static constexpr std::size_t t_index = 1;
  static constexpr std::array<const char*, 2> keys{"db", "dt"};
  static constexpr std::array<const char*, 2> names{"b", "t"};
};

template <class Vars>
class SparsePoly {
 public:
  static constexpr std::size_t kVars = Vars::count;
  using Exponents = std::array<int, kVars>;

  struct Term {
    Exponents exps{};
    Rat coeff;
  };

  SparsePoly() = default;
  SparsePoly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (!lmsf::is_zero(c)) terms_.push_back({Exponents{}, c});
  }
  SparsePoly(long c) : SparsePoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(int c) : SparsePoly(Rat(c)) {}   // NOLINT(google-explicit-constructor)

  static SparsePoly monomial(const Exponents& e, const Rat& c) {
    SparsePoly p;
    if (!lmsf::is_zero(c)) p.terms_.push_back({e, c});
    return p;
  }
  static SparsePoly variable(std::size_t index, int power = 1) {
    Exponents e{};
    e.at(index) = power;
    return monomial(e, Rat(1));
  }

  /// Canonical term order: total degree, then lexicographic on exponents.
  static bool term_less(const Exponents& a, const Exponents& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
  }
  Rat constant_term() const { return coefficient(Exponents{}); }

  Rat coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& x) { return term_less(t.exps, x); });
    if (it != terms_.end() && it->exps == e) return it->coeff;
    return Rat(0);
  }

  /// Highest power of variable `index` (-1 for the zero polynomial).
  int degree(std::size_t index) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exps[index]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, std::accumulate(t.exps.begin(), t.exps.end(), 0));
    return d;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
  }
  SparsePoly& operator*=(const Rat& c) {
    if (lmsf::is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.is_constant()) return b * a.terms_[0].coeff;
    if (b.is_constant()) return a * b.terms_[0].coeff;
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        Term t;
        for (std::size_t i = 0; i < kVars; ++i) t.exps[i] = x.exps[i] + y.exps[i];
        mpq_mul(t.coeff.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
        prods.push_back(std::move(t));
      }
    }
    std::sort(prods.begin(), prods.end(),
              [](const Term& l, const Term& r) { return term_less(l.exps, r.exps); });
    for (auto& t : prods) {
      if (!out.terms_.empty() && out.terms_.back().exps == t.exps) {
        mpq_add(out.terms_.back().coeff.get_mpq_t(), out.terms_.back().coeff.get_mpq_t(),
                t.coeff.get_mpq_t());
      } else {
        if (!out.terms_.empty() && lmsf::is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && lmsf::is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly pow(int k) const {
    SparsePoly r(Rat(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Human-readable form, e.g. "z*z' - 1/2*t^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rat c = it->coeff;
      const bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < kVars; ++i) {
        if (it->exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += Vars::names[i];
        if (it->exps[i] > 1) mono += "^" + std::to_string(it->exps[i]);
      }
      if (mono.empty()) {
        s += to_string(c);
      } else if (c == 1) {
        s += mono;
      } else {
        s += to_string(c) + "*" + mono;
      }
    }
    return s;
  }

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && term_less(a[i].exps, b[j].exps))) {
        out.push_back(a[i++]);
      } else if (i == a.size() || term_less(b[j].exps, a[i].exps)) {
        out.push_back({b[j].exps, sign > 0 ? b[j].coeff : Rat(-b[j].coeff)});
        ++j;
      } else {
        Rat c = sign > 0 ? Rat(a[i].coeff + b[j].coeff) : Rat(a[i].coeff - b[j].coeff);
        if (!lmsf::is_zero(c)) out.push_back({a[i].exps, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;  // sorted by term_less, no zero coefficients
};

template <class Vars>
bool is_zero(const SparsePoly<Vars>& p) {
  return p.is_zero();
}

using ParamPoly = SparsePoly<ZZpTVars>;
using BTPoly = SparsePoly<BTVars>;

namespace param {
inline ParamPoly z() { return ParamPoly::variable(0); }
inline ParamPoly zp() { return ParamPoly::variable(1); }
inline ParamPoly t() { return ParamPoly::variable(2); }
/// (z + c)(z' + c), the per-box content factor.
inline ParamPoly content_factor(int c) { return (z() + ParamPoly(c)) * (zp() + ParamPoly(c)); }
}  // namespace param

namespace btparam {
inline BTPoly b() { return BTPoly::variable(0); }
inline BTPoly t() { return BTPoly::variable(1); }
}  // namespace btparam

/// Coefficient of t^d, i.e. lim (1-xi)^d p as xi -> 1. Throws MathError when
/// p has t-degree above d (the rescaled limit would diverge).
template <class Vars>
SparsePoly<Vars> leading_in_t(const SparsePoly<Vars>& p, int d) {
  constexpr std::size_t ti = Vars::t_index;
  if (p.degree(ti) > d) {
    throw MathError("leading_in_t: t-degree " + std::to_string(p.degree(ti)) + " exceeds " +
                    std::to_string(d));
  }
  SparsePoly<Vars> out;
  for (const auto& term : p.terms()) {
    if (term.exps[ti] != d) continue;
    auto e = term.exps;
    e[ti] = 0;
    out += SparsePoly<Vars>::monomial(e, term.coeff);
  }
  return out;
}

/// Exact multivariate division; throws MathError if `den` does not divide `num`.
template <class Vars>
SparsePoly<Vars> exact_divide(const SparsePoly<Vars>& num, const SparsePoly<Vars>& den) {
  using P = SparsePoly<Vars>;
  if (den.is_zero()) throw MathError("exact_divide: division by zero polynomial");
  const auto& lead = den.terms().back();
  P rem = num;
  P quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms().back();
    typename P::Exponents e{};
    for (std::size_t i = 0; i < P::kVars; ++i) {
      e[i] = lt.exps[i] - lead.exps[i];
      if (e[i] < 0) throw MathError("exact_divide: nonzero remainder");
    }
    P q = P::monomial(e, lt.coeff / lead.coeff);
    quot += q;
    rem -= q * den;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Numeric parameters.

/// Exact Gaussian rational re + i*im.
struct GaussRat {
  Rat re;
  Rat im;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  GaussRat conj() const { return {re, -im}; }
  bool is_real() const { return lmsf::is_zero(im); }
};

enum class Series { Principal, Complementary, Degenerate, Inadmissible };

const char* to_string(Series s);

/// The (z, z') pair: either two rationals or a conjugate pair z' = conj(z).
struct ZSpec {
  GaussRat z;
  GaussRat zp;

  static ZSpec real_pair(const Rat& z, const Rat& zp) { return {{z, 0}, {zp, 0}}; }
  static ZSpec conjugate_pair(const Rat& re, const Rat& im) { return {{re, im}, {re, -im}}; }
};

/// Principal / complementary / degenerate / inadmissible split of (z, z').
Series classify(const ZSpec& spec);

class NumericParams {
 public:
  /// Throws DomainError if xi is outside (0,1), or if `require_admissible`
  /// and the pair is inadmissible.
  NumericParams(ZSpec spec, Rat xi, bool require_admissible = false);

  const ZSpec& spec() const { return spec_; }
  const Rat& xi() const { return xi_; }
  Rat t() const { return xi_ / (Rat(1) - xi_); }
  Series series() const { return series_; }
  bool admissible() const { return series_ != Series::Inadmissible; }
  bool nondegenerate() const { return series_ == Series::Principal || series_ == Series::Complementary; }

  /// z z' and z + z'; both are real for every admissible pair.
  GaussRat zzp() const { return spec_.z * spec_.zp; }
  GaussRat z_plus_zp() const { return spec_.z + spec_.zp; }
  /// (z + c)(z' + c) as an exact Gaussian rational.
  GaussRat content_factor(int c) const;
  /// Same factor, requiring it to be real.
  Rat content_factor_real(int c) const;

 private:
  ZSpec spec_;
  Rat xi_;
  Series series_;
};

/// Exact value of p at (z, z', t = xi/(1-xi)).
GaussRat param_eval_exact(const ParamPoly& p, const NumericParams& np);
/// Real value of p. Throws MathError if the imaginary part is not negligible
/// (|im| > 1e-12 * max(1, |re|)); z<->z' symmetric inputs are always real.
double param_eval(const ParamPoly& p, const NumericParams& np);
/// Exact value when the imaginary part vanishes identically; throws otherwise.
Rat param_eval_rat(const ParamPoly& p, const NumericParams& np);

/// Substitutes z = N, z' = N + b - 1 and keeps t: the degenerate specialisation.
BTPoly specialize_degenerate(const ParamPoly& p, int n);
/// Substitutes numeric b and t into a BTPoly.
Rat bt_eval(const BTPoly& p, const Rat& b, const Rat& t);

}  // namespace lmsf

#endif  // LMSF_COEFFRING_HPP
