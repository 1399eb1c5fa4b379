#include "lmsf/laguerre.hpp"

#include "lmsf/memo.hpp"

namespace lmsf::laguerre {

ParamPoly expansion_coefficient(const Partition& nu, const Partition& mu) {
  if (!nu.contains(mu)) return ParamPoly();
  const int d = nu.size() - mu.size();
  Rat c = make_rat(dim_skew(nu, mu), factorial(d));
  if (d % 2) c = -c;
  return content_product(nu, mu) * c;
}

const SymFunc& laguerre_sf(const Partition& nu) {
  static Memo<Partition, SymFunc> cache;
  return cache.get(nu, [&] {
    SymFunc f(Basis::S);
    for (const auto& mu : subdiagrams(nu)) f.add_term(mu, expansion_coefficient(nu, mu));
    return f;
  });
}

SymFunc apply_D_schur(const SymFunc& f) {
  const SymFunc fs = convert(f, Basis::S);
  SymFunc out(Basis::S);
  for (const auto& [nu, c] : fs.terms()) {
    out.add_term(nu, c * Rat(-nu.size()));
    for (const Box& b : corners(nu).removable) {
      out.add_term(nu.remove_box(b), c * param::content_factor(b.content()));
    }
  }
  return out;
}

SymFunc apply_D_epde(const SymFunc& f) {
  const SymFunc fe = convert(f, Basis::E);
  auto k_of_n = [](int n) { return param::content_factor(1 - n); };
  SymFunc out(Basis::E, apply_e_operator(fe.terms(), k_of_n));
  return convert(out, f.basis());
}

const ParamPoly& psi_schur(const Partition& nu) {
  static Memo<Partition, ParamPoly> cache;
  return cache.get(nu, [&] {
    if (nu.empty()) return ParamPoly(1);
    ParamPoly acc;
    for (const Box& b : corners(nu).removable) {
      acc += param::content_factor(b.content()) * psi_schur(nu.remove_box(b));
    }
    return acc * make_rat(1, nu.size());
  });
}

ParamPoly psi_schur_closed_form(const Partition& nu) {
  return content_product(nu) * make_rat(dim_syt(nu), factorial(nu.size()));
}

ParamPoly psi(const SymFunc& f) {
  const SymFunc fs = convert(f, Basis::S);
  ParamPoly acc;
  for (const auto& [nu, c] : fs.terms()) acc += c * psi_schur(nu);
  return acc;
}

const RatExpansion& schur_product(const Partition& a, const Partition& b) {
  static Memo<std::pair<Partition, Partition>, RatExpansion> cache;
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return cache.get(key, [&] {
    const RatExpansion prod = monomial_product(schur_in_e(a), schur_in_e(b));
    return apply_table(prod, e_monomial_in_schur);
  });
}

const ParamPoly& psi_schur_pair(const Partition& a, const Partition& b) {
  static Memo<std::pair<Partition, Partition>, ParamPoly> cache;
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return cache.get(key, [&] {
    ParamPoly acc;
    for (const auto& [c, r] : schur_product(a, b)) acc += psi_schur(c) * r;
    return acc;
  });
}

ParamPoly inner_product(const SymFunc& f, const SymFunc& g) {
  const SymFunc fs = convert(f, Basis::S);
  const SymFunc gs = convert(g, Basis::S);
  ParamPoly acc;
  for (const auto& [a, ca] : fs.terms()) {
    ParamPoly row;
    for (const auto& [b, cb] : gs.terms()) row += cb * psi_schur_pair(a, b);
    acc += ca * row;
  }
  return acc;
}

namespace {

// r^power * prod e°_{index parts}, parts >= 2.
struct ExtKey {
  int power = 0;
  Partition circ;
  friend bool operator<(const ExtKey& x, const ExtKey& y) {
    if (x.power != y.power) return x.power < y.power;
    return x.circ < y.circ;
  }
  friend bool operator==(const ExtKey&, const ExtKey&) = default;
};

using ExtPoly = std::map<ExtKey, ParamPoly>;

void add_ext(ExtPoly& p, int power, std::vector<int> parts, const ParamPoly& c) {
  if (c.is_zero()) return;
  std::erase_if(parts, [](int k) { return k <= 1; });
  std::sort(parts.begin(), parts.end(), std::greater<>());
  ExtKey key{power, Partition(std::move(parts))};
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// e_lambda = r^{|lambda|} prod_{parts >= 2} e°_part.
ExtPoly to_ext(const Expansion<ParamPoly>& f) {
  ExtPoly out;
  for (const auto& [lambda, c] : f) add_ext(out, lambda.size(), lambda.rows(), c);
  return out;
}

ExtPoly apply_ext_operator(const ExtPoly& f) {
  const ParamPoly cc = param::z() * param::zp();
  ExtPoly out;
  for (const auto& [key, coeff] : f) {
    const int a = key.power;
    const std::vector<int>& mu = key.circ.rows();
    // r d^2/dr^2 + (c - r) d/dr
    add_ext(out, a - 1, mu, coeff * Rat(a * (a - 1)));
    add_ext(out, a - 1, mu, coeff * cc * Rat(a));
    add_ext(out, a, mu, coeff * Rat(-a));

    // r^{-1} D°
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    auto without = [&](int x, int y) {
      std::map<int, int> m = mult;
      if (--m[x] == 0) m.erase(x);
      if (y > 0 && --m[y] == 0) m.erase(y);
      std::vector<int> parts;
      for (const auto& [k, v] : m) parts.insert(parts.end(), v, k);
      return parts;
    };
    for (const auto& [n, mn] : mult) {
      const auto rest = without(n, 0);
      auto with_n = rest;
      with_n.push_back(n);
      add_ext(out, a - 1, with_n, coeff * (cc + ParamPoly(n - 1)) * Rat(-n * mn));
      auto with_n1 = rest;
      with_n1.push_back(n - 1);
      add_ext(out, a - 1, with_n1, coeff * param::content_factor(1 - n) * Rat(mn));
      for (const auto& [m, mm] : mult) {
        int factor;
        if (m == n) {
          if (mn < 2) continue;
          factor = mn * (mn - 1);
        } else {
          factor = mm * mn;
        }
        const auto base = without(m, n);
        auto both = base;
        both.push_back(m);
        both.push_back(n);
        add_ext(out, a - 1, both, coeff * Rat(-m * n * factor));
        for (int k = 0; k < std::min(m, n); ++k) {
          auto parts = base;
          parts.push_back(m + n - 1 - k);
          parts.push_back(k);
          add_ext(out, a - 1, parts, coeff * Rat(factor * (m + n - 1 - 2 * k)));
        }
      }
    }
  }
  return out;
}

std::string describe(const ExtKey& k) { return "r^" + std::to_string(k.power) + " e°[" + k.circ.str() + "]"; }

}  // namespace

SeparationReport separation_check(const SymFunc& f) {
  const SymFunc fe = convert(f, Basis::E);
  const ExtPoly lhs = to_ext(convert(apply_D_epde(fe), Basis::E).terms());
  const ExtPoly rhs = apply_ext_operator(to_ext(fe.terms()));
  SeparationReport rep;
  if (lhs == rhs) return rep;
  rep.ok = false;
  for (const auto& [k, c] : lhs) {
    auto it = rhs.find(k);
    const ParamPoly other = it == rhs.end() ? ParamPoly() : it->second;
    if (c != other) {
      rep.detail = "coefficient of " + describe(k) + ": " + c.str() + " vs " + other.str();
      return rep;
    }
  }
  for (const auto& [k, c] : rhs) {
    if (!lhs.count(k)) {
      rep.detail = "coefficient of " + describe(k) + ": 0 vs " + c.str();
      return rep;
    }
  }
  return rep;
}

}  // namespace lmsf::laguerre
