#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <set>

#include "lmsf/meixner.hpp"
#include "lmsf/zdynamics.hpp"
#include "support.hpp"

using namespace lmsf;
using namespace lmsf::zdyn;

namespace {

NumericParams params(const Rat& re, const Rat& im, const Rat& xi) {
  return NumericParams(ZSpec::conjugate_pair(re, im), xi);
}

ZMeasure principal() { return ZMeasure(params(Rat(1), Rat(1), make_rat(1, 2))); }

/// Pearson statistic over partitions of size <= max_size plus one tail cell.
double chi_square_p(const std::map<Partition, long>& counts, long n, const std::function<double(const Partition&)>& pmf,
                    int max_size) {
  double stat = 0, covered = 0;
  long seen = 0;
  int cells = 0;
  for (const auto& lam : partitions_up_to(max_size)) {
    const double p = pmf(lam);
    if (p <= 0) continue;
    covered += p;
    const auto it = counts.find(lam);
    const double obs = it == counts.end() ? 0 : static_cast<double>(it->second);
    seen += static_cast<long>(obs);
    stat += (obs - n * p) * (obs - n * p) / (n * p);
    ++cells;
  }
  const double tail = 1 - covered, tail_obs = static_cast<double>(n - seen);
  stat += (tail_obs - n * tail) * (tail_obs - n * tail) / (n * tail);
  boost::math::chi_squared dist(cells);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST_CASE("pmf examples") {
  const ZMeasure zm = principal();
  CHECK(zm.pmf(Partition()) == doctest::Approx(0.25));
  CHECK(zm.pmf(Partition{1}) == doctest::Approx(0.25));
  CHECK(zm.pmf(Partition{2}) == doctest::Approx(0.15625));
  CHECK(zm.pmf(Partition{1, 1}) == doctest::Approx(0.25 * 2 * 1 * 0.25 * 0.25));
  CHECK(zm.log_pmf(Partition{2}) == doctest::Approx(std::log(0.15625)));
  CHECK_THROWS_AS(ZMeasure(NumericParams(ZSpec::real_pair(make_rat(1, 3), make_rat(4, 3)), make_rat(1, 2))),
                  DomainError);
}

TEST_CASE("degenerate support") {
  const ZMeasure zm(NumericParams(ZSpec::real_pair(Rat(2), Rat(4)), make_rat(1, 2)));
  CHECK(zm.in_support(Partition{5, 2}));
  CHECK_FALSE(zm.in_support(Partition{1, 1, 1}));
  CHECK(zm.pmf(Partition{1, 1, 1}) == 0.0);
  CHECK(std::isinf(zm.log_pmf(Partition{2, 2, 1})));
  const ZMeasure small(NumericParams(ZSpec::real_pair(Rat(2), Rat(4)), make_rat(1, 5)));
  CHECK(std::abs(normalization_check(small, 30).deficit) < 1e-10);
}

TEST_CASE("transposition flips the sign of z and z'") {
  const ZMeasure a = principal();
  const ZMeasure b(params(Rat(-1), Rat(1), make_rat(1, 2)));
  for (const auto& lam : partitions_up_to(7)) {
    CHECK(a.pmf(lam.conjugate()) == doctest::Approx(b.pmf(lam)).epsilon(1e-12));
  }
}

TEST_CASE("normalization and first moment") {
  const ZMeasure zm = principal();
  const auto rep = normalization_check(zm, 40, [](const Partition& l) { return static_cast<double>(l.size()); });
  CHECK(rep.deficit < 1e-10);
  CHECK(rep.deficit >= -1e-12);
  CHECK(rep.weighted_sum == doctest::Approx(2.0).epsilon(1e-8));
  for (std::size_t i = 1; i < rep.partial_by_size.size(); ++i) CHECK(rep.partial_by_size[i] >= rep.partial_by_size[i - 1]);
}

TEST_CASE("detailed balance") {
  const ZMeasure zm(params(make_rat(1, 2), make_rat(2, 3), make_rat(3, 4)));
  for (const auto& lam : partitions_up_to(5)) {
    for (const Box& box : corners(lam).addable) {
      std::string detail;
      CHECK_MESSAGE(detailed_balance_symbolic(lam, box, &detail), detail);
      CHECK(detailed_balance_numeric(lam, box, zm));
    }
  }
}

TEST_CASE("numeric rates agree with the symbolic rates") {
  const auto np = params(make_rat(1, 2), make_rat(2, 3), make_rat(3, 4));
  const ZMeasure zm(np);
  for (const auto& lam : partitions_up_to(6)) {
    const auto num = numeric_rates(lam, zm);
    const auto sym = meixner::jump_rates(lam);
    REQUIRE(num.add_boxes.size() == sym.add.size());
    REQUIRE(num.remove_boxes.size() == sym.remove.size());
    for (std::size_t i = 0; i < sym.add.size(); ++i) {
      CHECK(num.add_boxes[i] == sym.add[i].first);
      CHECK(num.add_rates[i] == doctest::Approx(param_eval(sym.add[i].second, np)).epsilon(1e-12));
    }
    for (std::size_t i = 0; i < sym.remove.size(); ++i) {
      CHECK(num.remove_rates[i] == doctest::Approx(param_eval(sym.remove[i].second, np)).epsilon(1e-12));
    }
    CHECK(num.total == doctest::Approx(param_eval(sym.total, np)).epsilon(1e-12));
  }
}

TEST_CASE("random streams") {
  Rng a(7, 0), b(7, 0), c(7, 1);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    if (x != c.uniform()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("simulation is deterministic and moves one box at a time") {
  const ZMeasure zm = principal();
  const auto t1 = simulate(Partition(), 20.0, zm, 5, 3);
  const auto t2 = simulate(Partition(), 20.0, zm, 5, 3);
  const auto t3 = simulate(Partition(), 20.0, zm, 5, 4);
  REQUIRE(t1.events.size() == t2.events.size());
  for (std::size_t i = 0; i < t1.events.size(); ++i) {
    CHECK(t1.events[i].time == t2.events[i].time);
    CHECK(t1.events[i].box == t2.events[i].box);
  }
  CHECK((t1.events.size() != t3.events.size() || t1.final_state != t3.final_state ||
         t1.events.front().time != t3.events.front().time));
  Partition state = t1.initial;
  double last = 0;
  for (const auto& ev : t1.events) {
    CHECK(ev.time > last);
    CHECK(ev.time <= 20.0);
    last = ev.time;
    const Partition next = ev.add ? state.add_box(ev.box) : state.remove_box(ev.box);
    CHECK(std::abs(next.size() - state.size()) == 1);
    state = next;
  }
  CHECK(state == t1.final_state);
  CHECK(t1.state_at(0.0) == Partition());
  CHECK(t1.state_at(20.0) == t1.final_state);
  CHECK(simulate(Partition{2, 1}, 5.0, zm, 1, 0, 3).events.size() <= 3);
}

TEST_CASE("first holding time at the empty diagram has mean 1 / (t z z')") {
  const ZMeasure zm = principal();
  const int n = 4000;
  double sum = 0, sq = 0;
  for (int k = 0; k < n; ++k) {
    const auto tr = simulate(Partition(), 100.0, zm, 11, k, 1);
    REQUIRE(tr.events.size() == 1);
    sum += tr.events[0].time;
    sq += tr.events[0].time * tr.events[0].time;
  }
  const double mean = sum / n, sd = std::sqrt(sq / n - mean * mean);
  CHECK(std::abs(mean - 0.5) <= 4 * sd / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("degenerate dynamics stay inside the N-row support") {
  const ZMeasure zm(NumericParams(ZSpec::real_pair(Rat(2), Rat(4)), make_rat(1, 2)));
  const auto tr = simulate(Partition(), 1e9, zm, 3, 0, 3000);
  Partition state;
  for (const auto& ev : tr.events) {
    state = ev.add ? state.add_box(ev.box) : state.remove_box(ev.box);
    CHECK(state.length() <= 2);
  }
  CHECK_THROWS_AS(simulate(Partition{1, 1, 1}, 1.0, zm, 1), DomainError);
}

TEST_CASE("exact sampler matches the pmf") {
  const ZMeasure zm = principal();
  Rng rng(2024, 0);
  const long n = 20000;
  std::map<Partition, long> counts;
  for (long i = 0; i < n; ++i) ++counts[sample_z_measure(zm, rng)];
  const double p = chi_square_p(counts, n, [&](const Partition& l) { return zm.pmf(l); }, 5);
  CHECK(p > 0.01);
}

TEST_CASE("transposed samples follow the measure with z, z' negated") {
  const ZMeasure zm(params(make_rat(1, 2), Rat(1), make_rat(1, 2)));
  const ZMeasure flipped(params(make_rat(-1, 2), Rat(1), make_rat(1, 2)));
  Rng rng(2025, 0);
  const long n = 20000;
  std::map<Partition, long> counts;
  for (long i = 0; i < n; ++i) ++counts[sample_z_measure(zm, rng).conjugate()];
  CHECK(chi_square_p(counts, n, [&](const Partition& l) { return flipped.pmf(l); }, 5) > 0.01);
}

TEST_CASE("truncated sampler") {
  const ZMeasure zm = principal();
  const StationarySampler s(zm, 30);
  CHECK(s.states().size() == s.masses().size());
  CHECK(s.tail_mass() < 1e-6);
  Rng rng(1, 0);
  for (int i = 0; i < 100; ++i) CHECK(s.sample(rng).size() <= 30);
}

TEST_CASE("transition probabilities") {
  const ZMeasure zm = principal();
  double total = 0;
  for (const auto& kappa : partitions_up_to(8)) total += transition_prob(Partition(), kappa, 2.0, zm, 8).value;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-2));
  for (const auto& kappa : partitions_up_to(3)) {
    CHECK(transition_prob(Partition{1}, kappa, 15.0, zm, 8).value == doctest::Approx(zm.pmf(kappa)).epsilon(1e-4));
  }
  // Reversibility: M(lambda) P(lambda, kappa) = M(kappa) P(kappa, lambda).
  const Partition l{2}, k{1, 1};
  CHECK(zm.pmf(l) * transition_prob(l, k, 1.0, zm, 8).value ==
        doctest::Approx(zm.pmf(k) * transition_prob(k, l, 1.0, zm, 8).value).epsilon(1e-9));
  const ZMeasure degenerate(NumericParams(ZSpec::real_pair(Rat(2), Rat(4)), make_rat(1, 2)));
  CHECK_THROWS_AS(transition_prob(Partition(), Partition(), 1.0, degenerate, 4), DomainError);
}

TEST_CASE("embedding of diagrams") {
  const ThomaPoint w = embed(Partition{3, 2, 2}, make_rat(1, 2));
  CHECK(w.alpha() == std::vector<Rat>{make_rat(5, 4), make_rat(1, 4)});
  CHECK(w.beta() == std::vector<Rat>{make_rat(5, 4), make_rat(3, 4)});
  CHECK(w.delta() == make_rat(7, 2));
  const RatExpansion p1{{Partition{1}, Rat(1)}}, p2{{Partition{2}, Rat(1)}};
  CHECK(eval_embedded(p1, Partition{3, 2, 2}, 0.1) == doctest::Approx(0.7));
  CHECK(eval_embedded(p2, Partition{3, 2, 2}, 1.0) == doctest::Approx(-2.0));
}

TEST_CASE("scaling statistics") {
  const ZSpec spec = ZSpec::conjugate_pair(Rat(1), Rat(1));
  const auto one = scaling_limit_stats(spec, make_rat(1, 2), SymFunc::one(Basis::P), 500, 9);
  CHECK(one.estimate == doctest::Approx(1.0));
  CHECK(one.reference == doctest::Approx(1.0));
  const auto p1 = scaling_limit_stats(spec, make_rat(1, 2), SymFunc::basis_element(Basis::P, Partition{1}), 20000, 9);
  CHECK(p1.exact_prelimit == doctest::Approx(1.0));
  CHECK(p1.reference == doctest::Approx(2.0));
  CHECK(std::abs(p1.estimate - p1.exact_prelimit) <= 4 * p1.stderr_);
  CHECK(p1.n == 20000);
}
