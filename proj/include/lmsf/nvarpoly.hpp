#ifndef LMSF_NVARPOLY_HPP
#define LMSF_NVARPOLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lmsf/coeffring.hpp"

namespace lmsf {

/// Polynomial in x_1..x_n with coefficients in C (Rat, ParamPoly or BTPoly).
/// Terms are keyed by exponent vectors in lexicographic order.
template <class C>
class MPoly {
 public:
  using Exps = std::vector<int>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}

  static MPoly constant(int nvars, const C& c) {
    MPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
  }
  static MPoly variable(int nvars, int i, int power = 1) {
    MPoly p(nvars);
    Exps e(nvars, 0);
    e.at(i) = power;
    p.add_term(e, C(1));
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exps, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const C& c) {
    if (lmsf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (lmsf::is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(out.n_, 0);
        for (int i = 0; i < out.n_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, C(ca * cb));
      }
    }
    return out;
  }
  friend MPoly operator*(const MPoly& a, const C& c) {
    MPoly out(a.n_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, C(x * c));
    return out;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  MPoly derivative(int i) const {
    MPoly out(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps f = e;
      --f[i];
      out.add_term(f, C(c * Rat(e[i])));
    }
    return out;
  }

  /// Substitutes x_i -> x_i + delta.
  MPoly shift(int i, int delta) const {
    MPoly out(n_);
    for (const auto& [e, c] : terms_) {
      // (x + delta)^k = sum_j binom(k, j) delta^(k-j) x^j
      BigInt binom = 1;
      const int k = e[i];
      for (int j = k; j >= 0; --j) {
        Exps f = e;
        f[i] = j;
        out.add_term(f, C(c * (Rat(binom) * rat_pow(Rat(delta), k - j))));
        binom = binom * j / (k - j + 1);
      }
    }
    return out;
  }

  /// Exact division; the divisor's leading coefficient must be a nonzero
  /// rational. Throws MathError on a nonzero remainder.
  MPoly exact_divide(const MPoly& d) const {
    if (d.is_zero()) throw MathError("MPoly::exact_divide: zero divisor");
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    const Rat inv = Rat(1) / constant_of(lead_c);
    MPoly rem = *this;
    MPoly quot(n_);
    while (!rem.is_zero()) {
      const auto& [e, c] = *rem.terms_.rbegin();
      Exps q(n_, 0);
      for (int i = 0; i < n_; ++i) {
        q[i] = e[i] - lead_e[i];
        if (q[i] < 0) throw MathError("MPoly::exact_divide: nonzero remainder");
      }
      MPoly mono(n_);
      mono.add_term(q, C(c * inv));
      quot += mono;
      rem -= mono * d;
    }
    return quot;
  }

  /// Value at a rational point (coefficients scaled, result in C).
  C eval(const std::vector<Rat>& point) const {
    C acc{};
    for (const auto& [e, c] : terms_) {
      Rat m = 1;
      for (int i = 0; i < n_; ++i) m *= rat_pow(point[i], e[i]);
      acc += C(c * m);
    }
    return acc;
  }

  /// Applies f to every coefficient.
  template <class D, class F>
  MPoly<D> map_coeffs(F&& f) const {
    MPoly<D> out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  static Rat constant_of(const Rat& c) { return c; }
  template <class P>
  static Rat constant_of(const P& c) {
    if (!c.is_constant()) throw MathError("MPoly::exact_divide: leading coefficient is not a constant");
    return c.constant_term();
  }

  int n_;
  std::map<Exps, C> terms_;
};

/// Symmetric polynomial in x_1..x_N stored in the monomial symmetric basis:
/// each key is a weakly decreasing exponent vector of length N.
template <class C>
class NVarPolyT {
 public:
  using Exps = std::vector<int>;

  explicit NVarPolyT(int n = 1) : n_(n) {}

  static NVarPolyT constant(int n, const C& c) {
    NVarPolyT p(n);
    p.add_term(Exps(n, 0), c);
    return p;
  }

  /// Throws MathError if `p` is not symmetric.
  static NVarPolyT from_mpoly(const MPoly<C>& p) {
    NVarPolyT out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.terms_.emplace(e, c);
    }
    if (!(out.to_mpoly() == p)) throw MathError("polynomial is not symmetric");
    return out;
  }

  MPoly<C> to_mpoly() const {
    MPoly<C> p(n_);
    for (const auto& [e, c] : terms_) {
      Exps perm = e;
      std::sort(perm.begin(), perm.end());
      do {
        p.add_term(perm, c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exps, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const C& c) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) {
      throw std::invalid_argument("NVarPoly keys must be weakly decreasing");
    }
    if (lmsf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (lmsf::is_zero(it->second)) terms_.erase(it);
    }
  }

  NVarPolyT& operator+=(const NVarPolyT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  NVarPolyT& operator-=(const NVarPolyT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  friend NVarPolyT operator+(NVarPolyT a, const NVarPolyT& b) { return a += b; }
  friend NVarPolyT operator-(NVarPolyT a, const NVarPolyT& b) { return a -= b; }
  friend NVarPolyT operator*(const NVarPolyT& a, const NVarPolyT& b) {
    return from_mpoly(a.to_mpoly() * b.to_mpoly());
  }
  friend NVarPolyT operator*(const NVarPolyT& a, const C& c) {
    NVarPolyT out(a.n_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, C(x * c));
    return out;
  }
  friend bool operator==(const NVarPolyT& a, const NVarPolyT& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  C eval(const std::vector<Rat>& point) const { return to_mpoly().eval(point); }

  template <class D, class F>
  NVarPolyT<D> map_coeffs(F&& f) const {
    NVarPolyT<D> out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  int n_;
  std::map<Exps, C> terms_;
};

/// Symmetric polynomials in N variables over Q[b, t].
using NVarPoly = NVarPolyT<BTPoly>;

}  // namespace lmsf

#endif  // LMSF_NVARPOLY_HPP
