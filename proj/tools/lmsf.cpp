// lmsf command-line tool.
// Exit codes: 0 success, 1 mathematical failure, 2 usage error, 3 parameter domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lmsf/json_io.hpp"
#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"
#include "lmsf/verify.hpp"
#include "lmsf/zdynamics.hpp"

namespace {

using lmsf::io::Json;

struct ParamFlags {
  std::string z, zp, z_re, z_im;
  std::string xi = "1/2";

  void add_to(CLI::App* app) {
    app->add_option("--z", z, "z as an exact rational (real pair with --zp)");
    app->add_option("--zp", zp, "z' as an exact rational");
    app->add_option("--z-re", z_re, "Re z for a conjugate pair z' = conj(z)");
    app->add_option("--z-im", z_im, "Im z for a conjugate pair");
    app->add_option("--xi", xi, "xi in (0,1), rational or decimal")->capture_default_str();
  }

  /// Defaults to z = 1+i when no pair is given.
  lmsf::ZSpec spec() const {
    if (!z_re.empty() || !z_im.empty()) {
      if (!z.empty() || !zp.empty()) throw std::invalid_argument("use either --z/--zp or --z-re/--z-im");
      return lmsf::ZSpec::conjugate_pair(lmsf::parse_rat(z_re.empty() ? "0" : z_re),
                                         lmsf::parse_rat(z_im.empty() ? "0" : z_im));
    }
    if (!z.empty() || !zp.empty()) {
      if (z.empty() || zp.empty()) throw std::invalid_argument("--z and --zp must be given together");
      return lmsf::ZSpec::real_pair(lmsf::parse_rat(z), lmsf::parse_rat(zp));
    }
    return lmsf::ZSpec::conjugate_pair(lmsf::Rat(1), lmsf::Rat(1));
  }

  lmsf::NumericParams params() const { return lmsf::NumericParams(spec(), lmsf::parse_rat(xi), true); }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const Json& j, const std::string& path) {
  Output out(path);
  out.stream() << j.dump(2) << "\n";
}

lmsf::Basis basis_from_flag(const std::string& s) {
  if (s == "schur" || s == "S") return lmsf::Basis::S;
  if (s == "e" || s == "E" || s == "elementary") return lmsf::Basis::E;
  if (s == "p" || s == "P" || s == "power") return lmsf::Basis::P;
  if (s == "fs" || s == "FS") return lmsf::Basis::FS;
  throw std::invalid_argument("unknown basis: " + s);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json stat_json(const lmsf::zdyn::ScalingStat& s) {
  Json o = Json::object();
  o["xi"] = s.xi;
  o["estimate"] = s.estimate;
  o["reference"] = s.reference;
  o["exact_prelimit"] = s.exact_prelimit;
  o["stderr"] = s.stderr_;
  o["n"] = s.n;
  return o;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Laguerre and Meixner symmetric functions, z-measures and jump dynamics"};
  app.set_config("--config", "", "TOML file mirroring the command-line flags (flags win)");
  app.require_subcommand(1);

  // expand
  auto* expand = app.add_subcommand("expand", "Write the expansion of L_nu, M_nu, FS_nu or S_nu as SymFunc JSON");
  std::string family = "laguerre", shape, basis_flag, out_path;
  expand->add_option("--family", family, "laguerre | meixner | fs | schur")
      ->check(CLI::IsMember({"laguerre", "meixner", "fs", "schur"}))
      ->capture_default_str();
  expand->add_option("--shape", shape, "partition as \"3,2,2\" (empty for the empty diagram)")->required();
  expand->add_option("--basis", basis_flag, "target basis: schur | e | p | fs (default: the family's own basis)");
  expand->add_option("--out", out_path, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
  std::string suite;
  int max_size = -1;
  bool list = false;
  verify->add_option("--suite", suite, "suite name (see --list)");
  verify->add_option("--max-size", max_size, "size bound (default: the suite's own)");
  verify->add_flag("--list", list, "list the available suites");
  verify->add_option("--out", out_path, "report file (default stdout)");

  // zm
  auto* zm = app.add_subcommand("zm", "Mixed z-measure computations");
  zm->require_subcommand(1);
  ParamFlags zm_params;
  auto* zm_pmf = zm->add_subcommand("pmf", "M(lambda) for one diagram");
  zm_params.add_to(zm_pmf);
  zm_pmf->add_option("--shape", shape, "partition")->required();
  zm_pmf->add_option("--out", out_path, "output file");
  auto* zm_sum = zm->add_subcommand("sum", "Partial sums of M and |lambda| M over |lambda| <= cutoff");
  zm_params.add_to(zm_sum);
  int cutoff = 40;
  zm_sum->add_option("--cutoff", cutoff, "largest diagram size")->capture_default_str();
  zm_sum->add_option("--out", out_path, "output file");

  // dyn
  auto* dyn = app.add_subcommand("dyn", "Meixner jump process on Young diagrams");
  dyn->require_subcommand(1);
  ParamFlags dyn_params;
  std::uint64_t seed = 0;
  std::string from, to;

  auto* sim = dyn->add_subcommand("simulate", "Trajectory CSV from a Gillespie run");
  dyn_params.add_to(sim);
  double t_max = 10;
  std::size_t max_events = 0;
  sim->add_option("--from", from, "initial diagram")->capture_default_str();
  sim->add_option("--t-max", t_max, "time horizon")->capture_default_str();
  sim->add_option("--max-events", max_events, "stop after this many jumps (0: unlimited)");
  sim->add_option("--seed", seed, "random seed")->required();
  sim->add_option("--out", out_path, "CSV file (default stdout)");

  auto* trans = dyn->add_subcommand("transition", "Spectral transition probability P(t; from, to)");
  dyn_params.add_to(trans);
  double time = 1;
  int trans_cutoff = 8;
  trans->add_option("--from", from, "start diagram")->required();
  trans->add_option("--to", to, "target diagram")->required();
  trans->add_option("--t", time, "time")->capture_default_str();
  trans->add_option("--cutoff", trans_cutoff, "largest |nu| in the spectral sum")->capture_default_str();
  trans->add_option("--out", out_path, "output file");

  auto* scal = dyn->add_subcommand("scaling", "Monte Carlo moments of the embedded z-measure as xi -> 1");
  dyn_params.add_to(scal);
  std::string xis = "0.9,0.99", f_basis = "p", f_shape = "1,1";
  std::size_t samples = 100000;
  scal->add_option("--xis", xis, "comma-separated xi values")->capture_default_str();
  scal->add_option("--f-basis", f_basis, "basis of the test function")->capture_default_str();
  scal->add_option("--f-shape", f_shape, "index of the test function")->capture_default_str();
  scal->add_option("--samples", samples, "samples per xi")->capture_default_str();
  scal->add_option("--seed", seed, "random seed")->required();
  scal->add_option("--out", out_path, "stats JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*expand) {
    const lmsf::Partition nu = lmsf::Partition::parse(shape);
    lmsf::SymFunc f;
    if (family == "laguerre") {
      f = lmsf::laguerre::laguerre_sf(nu);
    } else if (family == "meixner") {
      f = lmsf::meixner::meixner_sf(nu);
    } else if (family == "fs") {
      f = lmsf::SymFunc::basis_element(lmsf::Basis::FS, nu);
    } else {
      f = lmsf::SymFunc::basis_element(lmsf::Basis::S, nu);
    }
    if (!basis_flag.empty()) f = lmsf::meixner::convert(f, basis_from_flag(basis_flag));
    emit_json(lmsf::io::to_json(f), out_path);
    return 0;
  }

  if (*verify) {
    if (list) {
      for (const auto& s : lmsf::verify::suites()) {
        std::cout << s.name << "\t" << s.module << "\tmax-size " << s.default_max_size << "\t" << s.summary << "\n";
      }
      return 0;
    }
    if (suite.empty()) throw std::invalid_argument("--suite is required");
    const auto report = lmsf::verify::run_suite(suite, max_size);
    emit_json(report.to_json(), out_path);
    if (!report.ok()) {
      const auto f = report.first_failure();
      std::cerr << "suite " << suite << " failed at " << f->label << ": " << f->detail << "\n";
      return 1;
    }
    return 0;
  }

  if (*zm_pmf) {
    const lmsf::zdyn::ZMeasure m(zm_params.params());
    const lmsf::Partition lam = lmsf::Partition::parse(shape);
    Json o = Json::object();
    o["partition"] = lmsf::io::to_json(lam);
    o["series"] = lmsf::to_string(m.params().series());
    o["pmf"] = m.pmf(lam);
    o["log_pmf"] = m.in_support(lam) ? Json(m.log_pmf(lam)) : Json(nullptr);
    emit_json(o, out_path);
    return 0;
  }

  if (*zm_sum) {
    const lmsf::zdyn::ZMeasure m(zm_params.params());
    const auto rep =
        lmsf::zdyn::normalization_check(m, cutoff, [](const lmsf::Partition& p) { return double(p.size()); });
    Json o = Json::object();
    o["cutoff"] = cutoff;
    o["series"] = lmsf::to_string(m.params().series());
    o["partial_sum"] = rep.partial_sum;
    o["deficit"] = rep.deficit;
    o["mean_size"] = rep.weighted_sum;
    o["mean_size_exact"] = m.zzp() * m.xi() / (1 - m.xi());
    o["partial_by_size"] = rep.partial_by_size;
    emit_json(o, out_path);
    return 0;
  }

  if (*sim) {
    const lmsf::zdyn::ZMeasure m(dyn_params.params());
    const auto traj = lmsf::zdyn::simulate(lmsf::Partition::parse(from), t_max, m, seed, 0, max_events);
    Output out(out_path);
    auto& os = out.stream();
    os << "time,event,partition\n";
    os << fmt(0.0) << ",\"init\",\"" << traj.initial.str() << "\"\n";
    lmsf::Partition state = traj.initial;
    for (const auto& ev : traj.events) {
      state = ev.add ? state.add_box(ev.box) : state.remove_box(ev.box);
      os << fmt(ev.time) << ",\"" << (ev.add ? '+' : '-') << ev.box.row << "," << ev.box.col << "\",\"" << state.str()
         << "\"\n";
    }
    return 0;
  }

  if (*trans) {
    const lmsf::zdyn::ZMeasure m(dyn_params.params());
    const lmsf::Partition a = lmsf::Partition::parse(from);
    const lmsf::Partition b = lmsf::Partition::parse(to);
    const auto r = lmsf::zdyn::transition_prob(a, b, time, m, trans_cutoff);
    Json o = Json::object();
    o["from"] = lmsf::io::to_json(a);
    o["to"] = lmsf::io::to_json(b);
    o["t"] = time;
    o["cutoff"] = trans_cutoff;
    o["value"] = r.value;
    o["last_shell"] = r.last_shell;
    o["pmf_to"] = m.pmf(b);
    emit_json(o, out_path);
    return 0;
  }

  if (*scal) {
    const lmsf::ZSpec spec = dyn_params.spec();
    const lmsf::SymFunc f = lmsf::SymFunc::basis_element(basis_from_flag(f_basis), lmsf::Partition::parse(f_shape));
    Json arr = Json::array();
    for (const auto& x : split_list(xis)) {
      arr.push_back(stat_json(lmsf::zdyn::scaling_limit_stats(spec, lmsf::parse_rat(x), f, samples, seed)));
    }
    emit_json(arr, out_path);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lmsf::DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const lmsf::MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
