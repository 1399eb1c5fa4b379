#include "lmsf/json_io.hpp"

namespace lmsf::io {

Json to_json(const Partition& p) {
  Json arr = Json::array();
  for (int r : p.rows()) arr.push_back(r);
  return arr;
}

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json t = Json::object();
    t["index"] = to_json(k);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json o = Json::object();
  o["basis"] = to_string(f.basis());
  o["terms"] = std::move(terms);
  return o;
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    f.add_term(partition_from_json(t.at("index")), poly_from_json<ZZpTVars>(t.at("coeff")));
  }
  return f;
}

Json to_json(const NVarPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t = Json::object();
    t["exps"] = e;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json o = Json::object();
  o["N"] = f.nvars();
  o["terms"] = std::move(terms);
  return o;
}

NVarPoly nvarpoly_from_json(const Json& j) {
  NVarPoly f(j.at("N").get<int>());
  for (const auto& t : j.at("terms")) {
    f.add_term(t.at("exps").get<std::vector<int>>(), poly_from_json<BTVars>(t.at("coeff")));
  }
  return f;
}

}  // namespace lmsf::io
