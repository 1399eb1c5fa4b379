#ifndef LMSF_ZDYNAMICS_HPP
#define LMSF_ZDYNAMICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lmsf/coeffring.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace lmsf::zdyn {

/// Mixed z-measure M(lambda) = (1-xi)^{zz'} prod_lambda (z+c)(z'+c) xi^|lambda| (dim lambda / |lambda|!)^2.
class ZMeasure {
 public:
  /// Throws DomainError for inadmissible parameters.
  explicit ZMeasure(NumericParams np);

  const NumericParams& params() const { return np_; }
  double zzp() const { return zzp_; }
  double xi() const { return xi_; }
  /// (z+c)(z'+c) as a double.
  double content_factor(int c) const;

  /// -infinity outside the support.
  double log_pmf(const Partition& lambda) const;
  double pmf(const Partition& lambda) const;
  /// Whether every box of lambda has a positive content factor.
  bool in_support(const Partition& lambda) const;

 private:
  NumericParams np_;
  double zzp_;
  double z_plus_zp_;
  double xi_;
  std::vector<double> cf_cache_;
};

struct NormalizationReport {
  double partial_sum = 0;
  /// 1 - partial_sum
  double deficit = 0;
  /// Cumulative partial sums for sizes 0..cutoff.
  std::vector<double> partial_by_size;
  /// sum f(lambda) M(lambda) over the truncation (0 if no f given).
  double weighted_sum = 0;
};

NormalizationReport normalization_check(const ZMeasure& zm, int cutoff,
                                        const std::function<double(const Partition&)>& f = nullptr);

/// M(lambda) A(lambda, box) = M(lambda + box) B(lambda + box, box), with the
/// common (1-xi)^{zz'} factor cancelled and both sides scaled by (1+t)^{|lambda|+1}.
bool detailed_balance_symbolic(const Partition& lambda, const Box& box, std::string* detail = nullptr);
/// Same identity in floating point at np (relative tolerance 1e-12).
bool detailed_balance_numeric(const Partition& lambda, const Box& box, const ZMeasure& zm);

// ---------------------------------------------------------------------------
// Random streams.

/// mt19937_64 seeded from (seed, stream) through std::seed_seq, so each
/// trajectory index owns an independent reproducible stream.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Exponential with the given rate.
  double exponential(double rate);

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------------------
// Jump process.

struct Event {
  double time = 0;
  Box box;
  bool add = true;
};

struct Trajectory {
  Partition initial;
  std::vector<Event> events;
  Partition final_state;
  double t_max = 0;
  std::uint64_t seed = 0;

  /// State at the given time (right-continuous).
  Partition state_at(double time) const;
};

/// Numeric rates at lambda: addable / removable corners with their rates.
struct NumericRates {
  std::vector<Box> add_boxes;
  std::vector<double> add_rates;
  std::vector<Box> remove_boxes;
  std::vector<double> remove_rates;
  double total = 0;
};
NumericRates numeric_rates(const Partition& lambda, const ZMeasure& zm);

/// Gillespie simulation up to t_max (and at most max_events jumps when
/// max_events > 0). Throws DomainError if `initial` is outside the support.
Trajectory simulate(const Partition& initial, double t_max, const ZMeasure& zm, std::uint64_t seed,
                    std::uint64_t stream = 0, std::size_t max_events = 0);

/// Time-averaged occupation over n_events jumps.
std::map<Partition, double> occupation_measure(const Partition& initial, std::size_t n_events, const ZMeasure& zm,
                                               std::uint64_t seed, std::size_t* max_rows = nullptr);

/// Exact enumeration of sizes <= cutoff with inverse-CDF sampling.
class StationarySampler {
 public:
  StationarySampler(const ZMeasure& zm, int cutoff);
  Partition sample(Rng& rng) const;
  const std::vector<Partition>& states() const { return states_; }
  /// pmf values (not renormalized) aligned with states().
  const std::vector<double>& masses() const { return masses_; }
  double tail_mass() const { return tail_; }

 private:
  std::vector<Partition> states_;
  std::vector<double> masses_;
  std::vector<double> cdf_;
  double tail_ = 0;
};

/// Exact sampler without truncation: |lambda| from the negative binomial
/// law (zz')_n xi^n (1-xi)^{zz'} / n!, then the up-chain of the z-measure
/// with transition weights (z+c)(z'+c) dim(lambda+box)/((n+1) dim lambda).
/// Requires zz' > 0.
Partition sample_z_measure(const ZMeasure& zm, Rng& rng);

struct TransitionResult {
  double value = 0;
  /// Sum of |terms| over the outermost included shell |nu| = cutoff.
  double last_shell = 0;
};

/// Spectral sum over |nu| <= cutoff for P(time; lambda, kappa). Throws
/// DomainError unless np is principal or complementary.
TransitionResult transition_prob(const Partition& lambda, const Partition& kappa, double time, const ZMeasure& zm,
                                 int cutoff);

/// iota_eps(lambda): alpha = eps a, beta = eps b, delta = eps |lambda|.
ThomaPoint embed(const Partition& lambda, const Rat& eps);

/// f(iota_eps(lambda)) in floating point (f with rational coefficients).
double eval_embedded(const RatExpansion& f_in_p, const Partition& lambda, double eps);

struct ScalingStat {
  double xi = 0;
  double estimate = 0;
  double reference = 0;
  double exact_prelimit = 0;
  double stderr_ = 0;
  std::size_t n = 0;
};

/// Monte Carlo estimate of E[f(iota_{1-xi}(lambda))] under M_{z,z',xi},
/// the exact pre-limit value psi^ME((1-xi)^G f), and the limit psi(f).
/// f must have coefficients free of z, z', t.
ScalingStat scaling_limit_stats(const ZSpec& spec, const Rat& xi, const SymFunc& f, std::size_t samples,
                                std::uint64_t seed);

}  // namespace lmsf::zdyn

#endif  // LMSF_ZDYNAMICS_HPP
