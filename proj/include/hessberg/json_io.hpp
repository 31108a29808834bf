#ifndef HESSBERG_JSON_IO_HPP
#define HESSBERG_JSON_IO_HPP

#include <json.hpp>

#include "hessberg/hessfn.hpp"
#include "hessberg/rootsystem.hpp"

namespace hessberg {

inline nlohmann::json root_table_json(const RootTable& table) {
  nlohmann::json chains = nlohmann::json::array();
  for (const auto& chain : table.chains) {
    nlohmann::json row = nlohmann::json::array();
    for (const PositiveRoot& r : chain)
      row.push_back({{"i", r.row}, {"j", r.col}, {"coeffs", r.coeffs}});
    chains.push_back(std::move(row));
  }
  return {{"type", std::string(1, family_letter(table.type.family))},
          {"rank", table.type.rank},
          {"chains", std::move(chains)}};
}

inline nlohmann::json hessfn_json(const HessFn& h) {
  return {{"type", std::string(1, family_letter(h.type.family))},
          {"rank", h.type.rank},
          {"h", h.values}};
}

inline HessFn hessfn_from_json(const nlohmann::json& j) {
  std::string fam = j.at("type").get<std::string>();
  if (fam.size() != 1) throw std::invalid_argument("bad type field");
  std::string spec = fam + std::to_string(j.at("rank").get<int>()) + ":";
  auto vals = j.at("h").get<std::vector<int>>();
  for (size_t k = 0; k < vals.size(); ++k)
    spec += (k ? "," : "") + std::to_string(vals[k]);
  return parse_hessfn(spec);
}

}  // namespace hessberg

#endif
