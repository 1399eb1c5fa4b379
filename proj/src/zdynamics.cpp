#include "lmsf/zdynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"

namespace lmsf::zdyn {

namespace {

constexpr int kContentCache = 256;

struct CornerContents {
  std::vector<int> add_rows;  // 1-based row of each addable box
  std::vector<int> add_c;
  std::vector<int> rem_rows;
  std::vector<int> rem_c;
};

CornerContents corner_contents(const std::vector<int>& rows) {
  CornerContents cc;
  const int l = static_cast<int>(rows.size());
  auto row = [&](int i) { return i >= 1 && i <= l ? rows[i - 1] : 0; };
  for (int i = 1; i <= l + 1; ++i) {
    if (i == 1 || row(i - 1) > row(i)) {
      cc.add_rows.push_back(i);
      cc.add_c.push_back(row(i) + 1 - i);
    }
  }
  for (int i = 1; i <= l; ++i) {
    if (row(i) > row(i + 1)) {
      cc.rem_rows.push_back(i);
      cc.rem_c.push_back(row(i) - i);
    }
  }
  return cc;
}

// dim(lambda + box_k) / ((n+1) dim lambda) from the interlacing contents.
double up_ratio(const CornerContents& cc, std::size_t k) {
  const double x = cc.add_c[k];
  double r = 1;
  for (int y : cc.rem_c) r *= x - y;
  for (std::size_t i = 0; i < cc.add_c.size(); ++i) {
    if (i != k) r /= x - cc.add_c[i];
  }
  return r;
}

// n dim(lambda - box_k) / dim lambda.
double down_ratio_times_n(const CornerContents& cc, std::size_t k) {
  const double y = cc.rem_c[k];
  double r = -1;
  for (int x : cc.add_c) r *= y - x;
  for (std::size_t i = 0; i < cc.rem_c.size(); ++i) {
    if (i != k) r /= y - cc.rem_c[i];
  }
  return r;
}

double log_hook_product(const Partition& lambda) {
  double s = 0;
  for (const Box& b : lambda.boxes()) s += std::log(static_cast<double>(lambda.hook_length(b)));
  return s;
}

}  // namespace

ZMeasure::ZMeasure(NumericParams np) : np_(std::move(np)) {
  if (!np_.admissible()) throw DomainError("parameters (z, z') are not admissible");
  zzp_ = np_.zzp().re.get_d();
  z_plus_zp_ = np_.z_plus_zp().re.get_d();
  xi_ = np_.xi().get_d();
  for (int c = -kContentCache; c <= kContentCache; ++c) cf_cache_.push_back(np_.content_factor(c).re.get_d());
}

double ZMeasure::content_factor(int c) const {
  if (c >= -kContentCache && c <= kContentCache) return cf_cache_[static_cast<std::size_t>(c + kContentCache)];
  return zzp_ + c * z_plus_zp_ + static_cast<double>(c) * c;
}

bool ZMeasure::in_support(const Partition& lambda) const {
  for (const Box& b : lambda.boxes()) {
    if (!(content_factor(b.content()) > 0)) return false;
  }
  return true;
}

double ZMeasure::log_pmf(const Partition& lambda) const {
  double s = zzp_ * std::log1p(-xi_) + lambda.size() * std::log(xi_) - 2 * log_hook_product(lambda);
  for (const Box& b : lambda.boxes()) {
    const double f = content_factor(b.content());
    if (!(f > 0)) return -std::numeric_limits<double>::infinity();
    s += std::log(f);
  }
  return s;
}

double ZMeasure::pmf(const Partition& lambda) const { return std::exp(log_pmf(lambda)); }

NormalizationReport normalization_check(const ZMeasure& zm, int cutoff,
                                        const std::function<double(const Partition&)>& f) {
  NormalizationReport rep;
  for (int n = 0; n <= cutoff; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const double m = zm.pmf(lambda);
      rep.partial_sum += m;
      if (f) rep.weighted_sum += f(lambda) * m;
    }
    rep.partial_by_size.push_back(rep.partial_sum);
  }
  rep.deficit = 1 - rep.partial_sum;
  return rep;
}

namespace {

// prod_lambda (z+c)(z'+c) t^n (1+t)^{N-n} (dim/n!)^2: M(lambda) (1+t)^N / (1-xi)^{zz'}.
ParamPoly scaled_weight(const Partition& lambda, int big_n) {
  const int n = lambda.size();
  const Rat d = make_rat(dim_syt(lambda), factorial(n));
  return content_product(lambda) * param::t().pow(n) * (ParamPoly(1) + param::t()).pow(big_n - n) * Rat(d * d);
}

}  // namespace

bool detailed_balance_symbolic(const Partition& lambda, const Box& box, std::string* detail) {
  const Partition up = lambda.add_box(box);
  const auto ra = meixner::jump_rates(lambda);
  const auto rb = meixner::jump_rates(up);
  ParamPoly a;
  ParamPoly b;
  for (const auto& [bx, r] : ra.add) {
    if (bx == box) a = r;
  }
  for (const auto& [bx, r] : rb.remove) {
    if (bx == box) b = r;
  }
  const int big_n = up.size();
  const ParamPoly lhs = scaled_weight(lambda, big_n) * a;
  const ParamPoly rhs = scaled_weight(up, big_n) * b;
  if (lhs == rhs) return true;
  if (detail) *detail = "[" + lambda.str() + "] + (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                        "): " + lhs.str() + " vs " + rhs.str();
  return false;
}

bool detailed_balance_numeric(const Partition& lambda, const Box& box, const ZMeasure& zm) {
  const Partition up = lambda.add_box(box);
  const NumericRates ra = numeric_rates(lambda, zm);
  const NumericRates rb = numeric_rates(up, zm);
  double a = 0;
  double b = 0;
  for (std::size_t i = 0; i < ra.add_boxes.size(); ++i) {
    if (ra.add_boxes[i] == box) a = ra.add_rates[i];
  }
  for (std::size_t i = 0; i < rb.remove_boxes.size(); ++i) {
    if (rb.remove_boxes[i] == box) b = rb.remove_rates[i];
  }
  const double lhs = zm.pmf(lambda) * a;
  const double rhs = zm.pmf(up) * b;
  return std::abs(lhs - rhs) <= 1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  gen_.seed(seq);
}

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

Partition Trajectory::state_at(double time) const {
  Partition s = initial;
  for (const Event& e : events) {
    if (e.time > time) break;
    s = e.add ? s.add_box(e.box) : s.remove_box(e.box);
  }
  return s;
}

NumericRates numeric_rates(const Partition& lambda, const ZMeasure& zm) {
  const double xi = zm.xi();
  const double t = xi / (1 - xi);
  const int n = lambda.size();
  const CornerContents cc = corner_contents(lambda.rows());
  NumericRates r;
  for (std::size_t k = 0; k < cc.add_c.size(); ++k) {
    const double cf = zm.content_factor(cc.add_c[k]);
    const double rate = cf > 0 ? t * cf * up_ratio(cc, k) : 0.0;
    r.add_boxes.push_back({cc.add_rows[k], cc.add_c[k] + cc.add_rows[k]});
    r.add_rates.push_back(rate);
    r.total += rate;
  }
  for (std::size_t k = 0; k < cc.rem_c.size(); ++k) {
    const double rate = n > 0 ? (1 + t) * down_ratio_times_n(cc, k) : 0.0;
    r.remove_boxes.push_back({cc.rem_rows[k], cc.rem_c[k] + cc.rem_rows[k]});
    r.remove_rates.push_back(rate);
    r.total += rate;
  }
  return r;
}

namespace {

// Runs the chain; visit(state, holding_time, event_or_null) is called once per
// holding interval. Stops after max_events jumps (if > 0) or past t_max.
template <class Visit>
Partition run_chain(const Partition& initial, const ZMeasure& zm, Rng& rng, double t_max, std::size_t max_events,
                    Visit&& visit) {
  if (!zm.in_support(initial)) {
    throw DomainError("initial state [" + initial.str() + "] lies outside the support of the z-measure");
  }
  Partition state = initial;
  double time = 0;
  std::size_t jumps = 0;
  while (max_events == 0 || jumps < max_events) {
    const NumericRates r = numeric_rates(state, zm);
    if (!(r.total > 0)) {
      visit(state, t_max - time, static_cast<const Event*>(nullptr));
      break;
    }
    const double hold = rng.exponential(r.total);
    if (time + hold > t_max) {
      visit(state, t_max - time, static_cast<const Event*>(nullptr));
      break;
    }
    time += hold;
    double u = rng.uniform() * r.total;
    Event e{time, {}, true};
    bool chosen = false;
    for (std::size_t i = 0; i < r.add_rates.size() && !chosen; ++i) {
      if (u < r.add_rates[i]) {
        e.box = r.add_boxes[i];
        e.add = true;
        chosen = true;
      } else {
        u -= r.add_rates[i];
      }
    }
    for (std::size_t i = 0; i < r.remove_rates.size() && !chosen; ++i) {
      if (u < r.remove_rates[i] || i + 1 == r.remove_rates.size()) {
        e.box = r.remove_boxes[i];
        e.add = false;
        chosen = true;
      } else {
        u -= r.remove_rates[i];
      }
    }
    if (!chosen) {
      // Rounding left u past the last addable rate with no removable corner.
      for (std::size_t i = r.add_rates.size(); i-- > 0;) {
        if (r.add_rates[i] > 0) {
          e.box = r.add_boxes[i];
          e.add = true;
          break;
        }
      }
    }
    visit(state, hold, &e);
    state = e.add ? state.add_box(e.box) : state.remove_box(e.box);
    ++jumps;
  }
  return state;
}

}  // namespace

Trajectory simulate(const Partition& initial, double t_max, const ZMeasure& zm, std::uint64_t seed,
                    std::uint64_t stream, std::size_t max_events) {
  Rng rng(seed, stream);
  Trajectory tr;
  tr.initial = initial;
  tr.t_max = t_max;
  tr.seed = seed;
  tr.final_state = run_chain(initial, zm, rng, t_max, max_events, [&](const Partition&, double, const Event* e) {
    if (e) tr.events.push_back(*e);
  });
  return tr;
}

std::map<Partition, double> occupation_measure(const Partition& initial, std::size_t n_events, const ZMeasure& zm,
                                               std::uint64_t seed, std::size_t* max_rows) {
  Rng rng(seed, 0);
  std::map<Partition, double> occ;
  double total = 0;
  std::size_t rows = initial.length();
  const Partition last = run_chain(initial, zm, rng, std::numeric_limits<double>::infinity(), n_events,
            [&](const Partition& s, double hold, const Event* e) {
              if (!e) return;
              occ[s] += hold;
              total += hold;
              rows = std::max(rows, static_cast<std::size_t>(s.length()));
            });
  rows = std::max(rows, static_cast<std::size_t>(last.length()));
  for (auto& [k, v] : occ) v /= total;
  if (max_rows) *max_rows = rows;
  return occ;
}

StationarySampler::StationarySampler(const ZMeasure& zm, int cutoff) {
  double acc = 0;
  for (const auto& lambda : partitions_up_to(cutoff)) {
    const double m = zm.pmf(lambda);
    if (m <= 0) continue;
    states_.push_back(lambda);
    masses_.push_back(m);
    acc += m;
    cdf_.push_back(acc);
  }
  tail_ = 1 - acc;
}

Partition StationarySampler::sample(Rng& rng) const {
  const double u = rng.uniform() * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf_.begin()), states_.size() - 1);
  return states_[idx];
}

Partition sample_z_measure(const ZMeasure& zm, Rng& rng) {
  const double zzp = zm.zzp();
  const double xi = zm.xi();
  if (!(zzp > 0)) throw DomainError("sample_z_measure needs zz' > 0");
  const double log_p0 = zzp * std::log1p(-xi);
  if (log_p0 < -700) throw DomainError("size distribution too spread for the inverse-CDF sampler");
  double p = std::exp(log_p0);
  double cdf = p;
  const double u = rng.uniform();
  int n = 0;
  while (cdf <= u && p > 0) {
    p *= xi * (zzp + n) / (n + 1);
    ++n;
    cdf += p;
  }
  std::vector<int> rows;
  std::vector<double> w;
  for (int k = 0; k < n; ++k) {
    const CornerContents cc = corner_contents(rows);
    w.assign(cc.add_c.size(), 0.0);
    double total = 0;
    for (std::size_t i = 0; i < cc.add_c.size(); ++i) {
      const double cf = zm.content_factor(cc.add_c[i]);
      w[i] = cf > 0 ? cf * up_ratio(cc, i) : 0.0;
      total += w[i];
    }
    double v = rng.uniform() * total;
    std::size_t pick = 0;
    for (; pick + 1 < w.size(); ++pick) {
      if (v < w[pick]) break;
      v -= w[pick];
    }
    while (w[pick] <= 0 && pick > 0) --pick;
    const int r = cc.add_rows[pick];
    if (r > static_cast<int>(rows.size())) {
      rows.push_back(1);
    } else {
      ++rows[r - 1];
    }
  }
  return Partition(std::move(rows));
}

TransitionResult transition_prob(const Partition& lambda, const Partition& kappa, double time, const ZMeasure& zm,
                                 int cutoff) {
  const NumericParams& np = zm.params();
  if (!np.nondegenerate()) throw DomainError("transition_prob needs principal or complementary parameters");
  const double log_pref = zm.zzp() * std::log1p(-zm.xi());
  const double m_kappa = zm.pmf(kappa);
  TransitionResult res;
  for (int n = 0; n <= cutoff; ++n) {
    double shell = 0;
    for (const auto& nu : enumerate_partitions(n)) {
      const double w = std::exp(zm.log_pmf(nu) - log_pref);
      const double a = meixner::meixner_value_normalized(nu, lambda, np).get_d();
      const double b = meixner::meixner_value_normalized(nu, kappa, np).get_d();
      const double term = std::exp(-time * n) * w * a * b * m_kappa;
      res.value += term;
      shell += std::abs(term);
    }
    if (n == cutoff) res.last_shell = shell;
  }
  return res;
}

ThomaPoint embed(const Partition& lambda, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("embedding scale must be positive");
  const Frobenius f = frobenius(lambda);
  std::vector<Rat> alpha;
  std::vector<Rat> beta;
  for (int i = 0; i < f.rank(); ++i) {
    alpha.push_back(eps * f.a(i));
    beta.push_back(eps * f.b(i));
  }
  return ThomaPoint(std::move(alpha), std::move(beta), eps * lambda.size());
}

double eval_embedded(const RatExpansion& f_in_p, const Partition& lambda, double eps) {
  const Frobenius f = frobenius(lambda);
  int top = 0;
  for (const auto& [k, c] : f_in_p) {
    if (k.length() > 0) top = std::max(top, k.row(1));
  }
  std::vector<double> pk(top + 1, 0.0);
  if (top >= 1) pk[1] = eps * lambda.size();
  for (int k = 2; k <= top; ++k) {
    double s = 0;
    for (int i = 0; i < f.rank(); ++i) s += std::pow(f.twice_a[i] / 2.0, k) - std::pow(-f.twice_b[i] / 2.0, k);
    pk[k] = std::pow(eps, k) * s;
  }
  double acc = 0;
  for (const auto& [k, c] : f_in_p) {
    double m = c.get_d();
    for (int part : k.rows()) m *= pk[part];
    acc += m;
  }
  return acc;
}

ScalingStat scaling_limit_stats(const ZSpec& spec, const Rat& xi, const SymFunc& f, std::size_t samples,
                                std::uint64_t seed) {
  const NumericParams np(spec, xi, true);
  const ZMeasure zm(np);
  const SymFunc fp = convert(f, Basis::P);
  RatExpansion f_rat;
  std::map<int, SymFunc> graded;
  for (const auto& [k, c] : fp.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("scaling statistics need rational coefficients");
    add_to(f_rat, k, c.constant_term());
    graded.try_emplace(k.size(), Basis::P).first->second.add_term(k, c);
  }
  ScalingStat st;
  st.xi = xi.get_d();
  st.n = samples;
  st.reference = param_eval(laguerre::psi(f), np);
  const Rat eps = Rat(1) - xi;
  for (const auto& [d, g] : graded) {
    st.exact_prelimit += param_eval(meixner::psi_me(g), np) * rat_pow(eps, d).get_d();
  }
  double mean = 0;
  double m2 = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(seed, i);
    const Partition lambda = sample_z_measure(zm, rng);
    const double v = eval_embedded(f_rat, lambda, eps.get_d());
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  st.estimate = mean;
  st.stderr_ = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples)) : 0.0;
  return st;
}

}  // namespace lmsf::zdyn
