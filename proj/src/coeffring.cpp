#include "lmsf/coeffring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>

namespace lmsf {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad rational: " + s);
    if (digits[0] == '+') digits.erase(0, 1);
    for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw std::invalid_argument("bad rational: " + s);
    }
    BigInt num(digits, 10);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && i == 0))) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& base, int exponent) {
  if (exponent < 0) return Rat(1) / rat_pow(base, -exponent);
  Rat r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt factorial(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

const char* to_string(Series s) {
  switch (s) {
    case Series::Principal:
      return "principal";
    case Series::Complementary:
      return "complementary";
    case Series::Degenerate:
      return "degenerate";
    case Series::Inadmissible:
      return "inadmissible";
  }
  return "inadmissible";
}

namespace {

bool is_integer(const Rat& q) { return q.get_den() == 1; }

BigInt floor_of(const Rat& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// (a, b) = (N, N + beta - 1) with N >= 1 and beta > 0.
bool degenerate_positive(const Rat& a, const Rat& b) { return is_integer(a) && a >= 1 && b - a + 1 > 0; }

}  // namespace

Series classify(const ZSpec& spec) {
  const auto& z = spec.z;
  const auto& zp = spec.zp;
  if (!z.is_real() || !zp.is_real()) {
    if (!z.is_real() && zp == z.conj()) return Series::Principal;
    return Series::Inadmissible;
  }
  const Rat& a = z.re;
  const Rat& b = zp.re;
  if (is_zero(a) || is_zero(b)) return Series::Inadmissible;
  if (!is_integer(a) && !is_integer(b) && floor_of(a) == floor_of(b)) return Series::Complementary;
  if (degenerate_positive(a, b) || degenerate_positive(b, a) || degenerate_positive(-a, -b) ||
      degenerate_positive(-b, -a)) {
    return Series::Degenerate;
  }
  return Series::Inadmissible;
}

NumericParams::NumericParams(ZSpec spec, Rat xi, bool require_admissible)
    : spec_(std::move(spec)), xi_(std::move(xi)), series_(classify(spec_)) {
  if (xi_ <= 0 || xi_ >= 1) throw DomainError("xi must lie in (0,1), got " + to_string(xi_));
  if (require_admissible && series_ == Series::Inadmissible) {
    throw DomainError("parameters (z, z') are not admissible");
  }
}

GaussRat NumericParams::content_factor(int c) const {
  const GaussRat shift{Rat(c), Rat(0)};
  return (spec_.z + shift) * (spec_.zp + shift);
}

Rat NumericParams::content_factor_real(int c) const {
  GaussRat f = content_factor(c);
  if (!f.is_real()) throw MathError("content factor is not real for these parameters");
  return f.re;
}

GaussRat param_eval_exact(const ParamPoly& p, const NumericParams& np) {
  const GaussRat& z = np.spec().z;
  const GaussRat& zp = np.spec().zp;
  const Rat t = np.t();
  std::vector<GaussRat> zpow{{1, 0}};
  std::vector<GaussRat> zppow{{1, 0}};
  std::vector<Rat> tpow{Rat(1)};
  GaussRat acc{0, 0};
  for (const auto& term : p.terms()) {
    while (static_cast<int>(zpow.size()) <= term.exps[0]) zpow.push_back(zpow.back() * z);
    while (static_cast<int>(zppow.size()) <= term.exps[1]) zppow.push_back(zppow.back() * zp);
    while (static_cast<int>(tpow.size()) <= term.exps[2]) tpow.push_back(tpow.back() * t);
    GaussRat v = zpow[term.exps[0]] * zppow[term.exps[1]];
    const Rat scale = term.coeff * tpow[term.exps[2]];
    acc.re += v.re * scale;
    acc.im += v.im * scale;
  }
  return acc;
}

double param_eval(const ParamPoly& p, const NumericParams& np) {
  const std::complex<double> z(np.spec().z.re.get_d(), np.spec().z.im.get_d());
  const std::complex<double> zp(np.spec().zp.re.get_d(), np.spec().zp.im.get_d());
  const double t = np.t().get_d();
  std::complex<double> acc = 0;
  for (const auto& term : p.terms()) {
    acc += term.coeff.get_d() * std::pow(z, term.exps[0]) * std::pow(zp, term.exps[1]) *
           std::pow(t, term.exps[2]);
  }
  if (std::abs(acc.imag()) > 1e-12 * std::max(1.0, std::abs(acc.real()))) {
    throw MathError("param_eval: value has a non-negligible imaginary part");
  }
  return acc.real();
}

Rat param_eval_rat(const ParamPoly& p, const NumericParams& np) {
  GaussRat v = param_eval_exact(p, np);
  if (!v.is_real()) throw MathError("param_eval_rat: value is not real");
  return v.re;
}

BTPoly specialize_degenerate(const ParamPoly& p, int n) {
  // z -> N, z' -> (N - 1) + b, t -> t
  const BTPoly zp = BTPoly(Rat(n - 1)) + btparam::b();
  std::vector<BTPoly> zppow{BTPoly(1)};
  BTPoly out;
  for (const auto& term : p.terms()) {
    while (static_cast<int>(zppow.size()) <= term.exps[1]) zppow.push_back(zppow.back() * zp);
    const Rat scale = term.coeff * rat_pow(Rat(n), term.exps[0]);
    out += zppow[term.exps[1]] * BTPoly::variable(1, term.exps[2]) * scale;
  }
  return out;
}

Rat bt_eval(const BTPoly& p, const Rat& b, const Rat& t) {
  Rat acc = 0;
  for (const auto& term : p.terms()) acc += term.coeff * rat_pow(b, term.exps[0]) * rat_pow(t, term.exps[1]);
  return acc;
}

}  // namespace lmsf
