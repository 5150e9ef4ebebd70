#pragma once

// JSON import/export for groups and module dumps. Kept out of the umbrella
// header so the core stays free of the JSON dependency.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmodule.hpp"
#include "pgroup.hpp"

namespace syzygy {

inline nlohmann::json group_to_json(const PGroup& G) {
    nlohmann::json j;
    j["p"] = G.p();
    j["order"] = G.order();
    j["table"] = G.table_rows();
    j["generators"] = G.generators();
    j["name"] = G.name();
    return j;
}

inline PGroup group_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("group json: not an object");
    uint32_t p = j.at("p").get<uint32_t>();
    auto table = j.at("table").get<std::vector<std::vector<uint32_t>>>();
    if (j.contains("order") && j.at("order").get<size_t>() != table.size())
        throw std::invalid_argument("group json: order does not match the table");
    std::string name = j.value("name", std::string("imported"));
    if (j.contains("generators")) {
        auto gens = j.at("generators").get<std::vector<uint32_t>>();
        return PGroup::from_table(p, table, gens, name);
    }
    return PGroup::from_table_auto(p, table, name);
}

inline nlohmann::json module_to_json(const GModule& M) {
    nlohmann::json j;
    j["group"] = M.group().name();
    j["dim"] = M.dim();
    nlohmann::json action = nlohmann::json::array();
    for (size_t i = 0; i < M.group().generators().size(); ++i) {
        FpMatrix m = M.action_matrix(M.group().generators()[i]);
        nlohmann::json rows = nlohmann::json::array();
        for (size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(row);
        }
        action.push_back(rows);
    }
    j["action"] = action;
    return j;
}

}  // namespace syzygy
