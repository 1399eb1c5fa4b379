#include "lmsf/symfunc.hpp"

#include <cctype>

#include "lmsf/memo.hpp"

namespace lmsf {

const char* to_string(Basis b) {
  switch (b) {
    case Basis::E:
      return "E";
    case Basis::P:
      return "P";
    case Basis::S:
      return "S";
    case Basis::FS:
      return "FS";
  }
  return "S";
}

Basis parse_basis(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "e" || s == "elementary") return Basis::E;
  if (s == "p" || s == "power") return Basis::P;
  if (s == "s" || s == "schur") return Basis::S;
  if (s == "fs" || s == "frobenius-schur") return Basis::FS;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

namespace {

using TableCache = Memo<Partition, RatExpansion>;

// Expands det[e_{c_i - i + j}] by rows, skipping zero entries (negative index).
void expand_nk_det(const std::vector<int>& c, std::size_t row, std::vector<bool>& used, int sign,
                   std::vector<int>& picked, RatExpansion& out) {
  const std::size_t n = c.size();
  if (row == n) {
    std::vector<int> parts;
    for (int k : picked) {
      if (k > 0) parts.push_back(k);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    add_to(out, Partition(std::move(parts)), Rat(sign));
    return;
  }
  int inversions_before = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) {
      ++inversions_before;
      continue;
    }
    const int idx = c[row] - static_cast<int>(row) + static_cast<int>(j);
    if (idx < 0) continue;
    // Sign of the permutation: columns to the right of j already used count as inversions.
    const int right_used = static_cast<int>(row) - inversions_before;
    used[j] = true;
    picked.push_back(idx);
    expand_nk_det(c, row + 1, used, (right_used % 2) ? -sign : sign, picked, out);
    picked.pop_back();
    used[j] = false;
  }
}

void vertical_strips(const std::vector<int>& mu, std::size_t row, int remaining, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> r = cur;
    for (std::size_t i = row; i < mu.size(); ++i) r.push_back(mu[i]);
    out.emplace_back(std::move(r));
    return;
  }
  const int base = row < mu.size() ? mu[row] : 0;
  for (int add = 1; add >= 0; --add) {
    const int v = base + add;
    if (v == 0) continue;
    if (row > 0 && v > cur[row - 1]) continue;
    cur.push_back(v);
    vertical_strips(mu, row + 1, remaining - add, cur, out);
    cur.pop_back();
  }
}

const RatExpansion& single_p_in_e(int n);

}  // namespace

const RatExpansion& schur_in_e(const Partition& nu) {
  static TableCache cache;
  return cache.get(nu, [&] {
    const Partition conj = nu.conjugate();
    RatExpansion out;
    std::vector<bool> used(conj.length(), false);
    std::vector<int> picked;
    expand_nk_det(conj.rows(), 0, used, 1, picked, out);
    if (nu.empty()) out = {{Partition(), Rat(1)}};
    return out;
  });
}

const RatExpansion& e_monomial_in_schur(const Partition& lambda) {
  static TableCache cache;
  return cache.get(lambda, [&] {
    RatExpansion out;
    if (lambda.empty()) {
      out.emplace(Partition(), Rat(1));
      return out;
    }
    const int k = lambda.row(1);
    const Partition rest(std::vector<int>(lambda.rows().begin() + 1, lambda.rows().end()));
    for (const auto& [mu, c] : e_monomial_in_schur(rest)) {
      std::vector<Partition> strips;
      std::vector<int> cur;
      vertical_strips(mu.rows(), 0, k, cur, strips);
      for (const auto& rho : strips) add_to(out, rho, c);
    }
    return out;
  });
}

namespace {

const RatExpansion& single_p_in_e(int n) {
  static TableCache cache;
  return cache.get(Partition({n}), [&] {
    // p_n = sum_{i=1}^{n-1} (-1)^(i-1) e_i p_{n-i} + (-1)^(n-1) n e_n
    RatExpansion out;
    for (int i = 1; i < n; ++i) {
      RatExpansion ei{{Partition({i}), Rat(i % 2 ? 1 : -1)}};
      for (const auto& [k, c] : monomial_product(ei, single_p_in_e(n - i))) add_to(out, k, c);
    }
    add_to(out, Partition({n}), Rat(n % 2 ? n : -n));
    return out;
  });
}

const RatExpansion& single_e_in_p(int n) {
  static TableCache cache;
  return cache.get(Partition({n}), [&] {
    // e_n = (1/n) sum_{i=1}^{n} (-1)^(i-1) e_{n-i} p_i
    RatExpansion out;
    for (int i = 1; i <= n; ++i) {
      RatExpansion pi{{Partition({i}), make_rat(i % 2 ? 1 : -1, n)}};
      const RatExpansion en_i = n - i == 0 ? RatExpansion{{Partition(), Rat(1)}} : single_e_in_p(n - i);
      for (const auto& [k, c] : monomial_product(pi, en_i)) add_to(out, k, c);
    }
    return out;
  });
}

template <class Single>
RatExpansion product_of_singles(const Partition& lambda, Single&& single) {
  RatExpansion acc{{Partition(), Rat(1)}};
  for (int part : lambda.rows()) acc = monomial_product(acc, single(part));
  return acc;
}

}  // namespace

const RatExpansion& p_monomial_in_e(const Partition& lambda) {
  static TableCache cache;
  return cache.get(lambda, [&] { return product_of_singles(lambda, single_p_in_e); });
}

const RatExpansion& e_monomial_in_p(const Partition& lambda) {
  static TableCache cache;
  return cache.get(lambda, [&] { return product_of_singles(lambda, single_e_in_p); });
}

Rat power_sum_on_diagram(int k, const Partition& lambda) {
  const Frobenius f = frobenius(lambda);
  Rat s = 0;
  for (int i = 0; i < f.rank(); ++i) s += rat_pow(f.a(i), k) - rat_pow(Rat(-f.b(i)), k);
  return s;
}

Rat eval_on_diagram(const RatExpansion& schur_terms, const Partition& lambda) {
  int n = 0;
  for (const auto& [k, c] : schur_terms) n = std::max(n, k.size());
  std::vector<Rat> p(n + 1);
  for (int k = 1; k <= n; ++k) p[k] = power_sum_on_diagram(k, lambda);
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat s = 0;
    for (int i = 1; i <= m; ++i) s += (i % 2 ? 1 : -1) * e[m - i] * p[i];
    e[m] = s / m;
  }
  Rat acc = 0;
  for (const auto& [nu, c] : schur_terms) {
    for (const auto& [k, r] : schur_in_e(nu)) {
      Rat m = c * r;
      for (int part : k.rows()) m *= e[part];
      acc += m;
    }
  }
  return acc;
}

ThomaPoint::ThomaPoint(std::vector<Rat> alpha, std::vector<Rat> beta, Rat delta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), delta_(std::move(delta)) {
  auto check = [](const std::vector<Rat>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw std::invalid_argument(std::string(name) + " coordinates must be nonnegative");
      if (i > 0 && v[i] > v[i - 1]) throw std::invalid_argument(std::string(name) + " must be weakly decreasing");
    }
  };
  check(alpha_, "alpha");
  check(beta_, "beta");
  if (gamma() < 0) throw std::invalid_argument("sum of alpha and beta exceeds delta");
}

Rat ThomaPoint::gamma() const {
  Rat g = delta_;
  for (const auto& a : alpha_) g -= a;
  for (const auto& b : beta_) g -= b;
  return g;
}

Rat ThomaPoint::power_sum(int n) const {
  if (n == 1) return delta_;
  Rat s = 0;
  for (const auto& a : alpha_) s += rat_pow(a, n);
  for (const auto& b : beta_) s -= rat_pow(Rat(-b), n);
  return s;
}

std::vector<Rat> ThomaPoint::elementary_up_to(int n) const {
  auto times = [n](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  std::vector<Rat> series(n + 1);
  // e^{gamma t}
  const Rat g = gamma();
  Rat term = 1;
  for (int k = 0; k <= n; ++k) {
    series[k] = term;
    term = term * g / (k + 1);
  }
  for (const auto& a : alpha_) {
    std::vector<Rat> f(n + 1);
    f[0] = 1;
    if (n >= 1) f[1] = a;
    series = times(series, f);
  }
  for (const auto& b : beta_) {
    std::vector<Rat> f(n + 1);
    for (int k = 0; k <= n; ++k) f[k] = rat_pow(b, k);
    series = times(series, f);
  }
  return series;
}

}  // namespace lmsf
