#ifndef LMSF_JSON_IO_HPP
#define LMSF_JSON_IO_HPP

#include <json.hpp>

#include "lmsf/coeffring.hpp"
#include "lmsf/nvarpoly.hpp"
#include "lmsf/partition.hpp"
#include "lmsf/symfunc.hpp"

namespace lmsf::io {

using Json = nlohmann::ordered_json;

/// [{"dz":..,"dzp":..,"dt":..,"num":"..","den":".."}, ...] in canonical term order
/// (BTPoly uses "db", "dt").
template <class Vars>
Json to_json(const SparsePoly<Vars>& p) {
  Json arr = Json::array();
  for (const auto& term : p.terms()) {
    Json o = Json::object();
    for (std::size_t i = 0; i < Vars::count; ++i) o[Vars::keys[i]] = term.exps[i];
    o["num"] = term.coeff.get_num().get_str();
    o["den"] = term.coeff.get_den().get_str();
    arr.push_back(std::move(o));
  }
  return arr;
}

template <class Vars>
SparsePoly<Vars> poly_from_json(const Json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  SparsePoly<Vars> p;
  for (const auto& o : arr) {
    typename SparsePoly<Vars>::Exponents e{};
    for (std::size_t i = 0; i < Vars::count; ++i) e[i] = o.at(Vars::keys[i]).template get<int>();
    Rat c(BigInt(o.at("num").template get<std::string>()), BigInt(o.at("den").template get<std::string>()));
    c.canonicalize();
    p += SparsePoly<Vars>::monomial(e, c);
  }
  return p;
}

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const NVarPoly& f);
NVarPoly nvarpoly_from_json(const Json& j);

}  // namespace lmsf::io

#endif  // LMSF_JSON_IO_HPP
