#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "lmsf/json_io.hpp"
#include "lmsf/laguerre.hpp"
#include "lmsf/meixner.hpp"
#include "lmsf/verify.hpp"
#include "lmsf/zdynamics.hpp"

namespace py = pybind11;
using lmsf::io::Json;

namespace {

/// z = 1+i when no pair is given; `z`/`zp` select a real pair, `z_re`/`z_im` a conjugate pair.
lmsf::NumericParams make_params(const std::optional<std::string>& z, const std::optional<std::string>& zp,
                                const std::optional<std::string>& z_re, const std::optional<std::string>& z_im,
                                const std::string& xi) {
  lmsf::ZSpec spec = lmsf::ZSpec::conjugate_pair(lmsf::Rat(1), lmsf::Rat(1));
  if (z || zp) {
    if (!z || !zp) throw std::invalid_argument("z and zp must be given together");
    if (z_re || z_im) throw std::invalid_argument("use either z/zp or z_re/z_im");
    spec = lmsf::ZSpec::real_pair(lmsf::parse_rat(*z), lmsf::parse_rat(*zp));
  } else if (z_re || z_im) {
    spec = lmsf::ZSpec::conjugate_pair(lmsf::parse_rat(z_re.value_or("0")), lmsf::parse_rat(z_im.value_or("0")));
  }
  return lmsf::NumericParams(spec, lmsf::parse_rat(xi), true);
}

lmsf::Basis basis_of(const std::string& s) {
  if (s == "schur") return lmsf::Basis::S;
  if (s == "e") return lmsf::Basis::E;
  if (s == "p") return lmsf::Basis::P;
  if (s == "fs") return lmsf::Basis::FS;
  return lmsf::parse_basis(s);
}

std::string expand(const std::string& family, const std::string& shape, const std::string& basis) {
  const lmsf::Partition nu = lmsf::Partition::parse(shape);
  lmsf::SymFunc f;
  if (family == "laguerre") {
    f = lmsf::laguerre::laguerre_sf(nu);
  } else if (family == "meixner") {
    f = lmsf::meixner::meixner_sf(nu);
  } else if (family == "fs") {
    f = lmsf::SymFunc::basis_element(lmsf::Basis::FS, nu);
  } else if (family == "schur") {
    f = lmsf::SymFunc::basis_element(lmsf::Basis::S, nu);
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  if (!basis.empty()) f = lmsf::meixner::convert(f, basis_of(basis));
  return lmsf::io::to_json(f).dump();
}

std::string suites() {
  Json arr = Json::array();
  for (const auto& s : lmsf::verify::suites()) {
    arr.push_back({{"name", s.name}, {"module", s.module}, {"summary", s.summary}, {"max_size", s.default_max_size}});
  }
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_lmsf, m) {
  m.doc() = "JSON-level bindings for the lmsf library";
  py::register_exception<lmsf::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<lmsf::MathError>(m, "MathError", PyExc_ArithmeticError);

  m.def("expand", &expand, py::arg("family"), py::arg("shape"), py::arg("basis") = "");
  m.def("suites", &suites);
  m.def(
      "verify", [](const std::string& suite, int max_size) { return lmsf::verify::run_suite(suite, max_size).to_json().dump(); },
      py::arg("suite"), py::arg("max_size") = -1);

  m.def(
      "zm_pmf",
      [](const std::string& shape, std::optional<std::string> z, std::optional<std::string> zp,
         std::optional<std::string> z_re, std::optional<std::string> z_im, const std::string& xi) {
        const lmsf::zdyn::ZMeasure zm(make_params(z, zp, z_re, z_im, xi));
        const lmsf::Partition lam = lmsf::Partition::parse(shape);
        Json o = Json::object();
        o["partition"] = lmsf::io::to_json(lam);
        o["series"] = lmsf::to_string(zm.params().series());
        o["pmf"] = zm.pmf(lam);
        o["log_pmf"] = zm.in_support(lam) ? Json(zm.log_pmf(lam)) : Json(nullptr);
        return o.dump();
      },
      py::arg("shape"), py::arg("z") = py::none(), py::arg("zp") = py::none(), py::arg("z_re") = py::none(),
      py::arg("z_im") = py::none(), py::arg("xi") = "1/2");

  m.def(
      "zm_sum",
      [](int cutoff, std::optional<std::string> z, std::optional<std::string> zp, std::optional<std::string> z_re,
         std::optional<std::string> z_im, const std::string& xi) {
        const lmsf::zdyn::ZMeasure zm(make_params(z, zp, z_re, z_im, xi));
        const auto rep = lmsf::zdyn::normalization_check(
            zm, cutoff, [](const lmsf::Partition& p) { return static_cast<double>(p.size()); });
        Json o = Json::object();
        o["cutoff"] = cutoff;
        o["partial_sum"] = rep.partial_sum;
        o["deficit"] = rep.deficit;
        o["mean_size"] = rep.weighted_sum;
        o["mean_size_exact"] = zm.zzp() * zm.xi() / (1 - zm.xi());
        return o.dump();
      },
      py::arg("cutoff") = 40, py::arg("z") = py::none(), py::arg("zp") = py::none(), py::arg("z_re") = py::none(),
      py::arg("z_im") = py::none(), py::arg("xi") = "1/2");

  m.def(
      "simulate",
      [](const std::string& start, double t_max, std::uint64_t seed, std::size_t max_events,
         std::optional<std::string> z, std::optional<std::string> zp, std::optional<std::string> z_re,
         std::optional<std::string> z_im, const std::string& xi) {
        const lmsf::zdyn::ZMeasure zm(make_params(z, zp, z_re, z_im, xi));
        const auto tr = lmsf::zdyn::simulate(lmsf::Partition::parse(start), t_max, zm, seed, 0, max_events);
        Json events = Json::array();
        lmsf::Partition state = tr.initial;
        for (const auto& ev : tr.events) {
          state = ev.add ? state.add_box(ev.box) : state.remove_box(ev.box);
          events.push_back({{"time", ev.time},
                            {"add", ev.add},
                            {"box", {ev.box.row, ev.box.col}},
                            {"partition", lmsf::io::to_json(state)}});
        }
        Json o = Json::object();
        o["initial"] = lmsf::io::to_json(tr.initial);
        o["events"] = std::move(events);
        o["final"] = lmsf::io::to_json(tr.final_state);
        return o.dump();
      },
      py::arg("start") = "", py::arg("t_max") = 10.0, py::arg("seed") = 0, py::arg("max_events") = 0,
      py::arg("z") = py::none(), py::arg("zp") = py::none(), py::arg("z_re") = py::none(),
      py::arg("z_im") = py::none(), py::arg("xi") = "1/2");

  m.def(
      "transition",
      [](const std::string& from, const std::string& to, double t, int cutoff, std::optional<std::string> z,
         std::optional<std::string> zp, std::optional<std::string> z_re, std::optional<std::string> z_im,
         const std::string& xi) {
        const lmsf::zdyn::ZMeasure zm(make_params(z, zp, z_re, z_im, xi));
        const lmsf::Partition a = lmsf::Partition::parse(from), b = lmsf::Partition::parse(to);
        const auto r = lmsf::zdyn::transition_prob(a, b, t, zm, cutoff);
        Json o = Json::object();
        o["value"] = r.value;
        o["last_shell"] = r.last_shell;
        o["pmf_to"] = zm.pmf(b);
        return o.dump();
      },
      py::arg("start"), py::arg("target"), py::arg("t") = 1.0, py::arg("cutoff") = 8, py::arg("z") = py::none(),
      py::arg("zp") = py::none(), py::arg("z_re") = py::none(), py::arg("z_im") = py::none(),
      py::arg("xi") = "1/2");

  m.def(
      "scaling",
      [](const std::string& xi, const std::string& f_basis, const std::string& f_shape, std::size_t samples,
         std::uint64_t seed, std::optional<std::string> z, std::optional<std::string> zp,
         std::optional<std::string> z_re, std::optional<std::string> z_im) {
        const lmsf::ZSpec spec = make_params(z, zp, z_re, z_im, xi).spec();
        const lmsf::SymFunc f = lmsf::SymFunc::basis_element(basis_of(f_basis), lmsf::Partition::parse(f_shape));
        const auto s = lmsf::zdyn::scaling_limit_stats(spec, lmsf::parse_rat(xi), f, samples, seed);
        Json o = Json::object();
        o["xi"] = s.xi;
        o["estimate"] = s.estimate;
        o["reference"] = s.reference;
        o["exact_prelimit"] = s.exact_prelimit;
        o["stderr"] = s.stderr_;
        o["n"] = s.n;
        return o.dump();
      },
      py::arg("xi"), py::arg("f_basis") = "p", py::arg("f_shape") = "1,1", py::arg("samples") = 100000,
      py::arg("seed") = 0, py::arg("z") = py::none(), py::arg("zp") = py::none(), py::arg("z_re") = py::none(),
      py::arg("z_im") = py::none());
}
