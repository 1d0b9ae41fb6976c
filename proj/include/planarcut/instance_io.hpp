#pragma once

#include <string>
#include <variant>

#include "planarcut/instance.hpp"

namespace planarcut {

// Line-directive instance file format (UTF-8, '#' comments):
//   graph <n>
//   vertex <id> [<x> <y>]
//   edge <eid> <u> <v> <weight>
//   rotation <v> <eid> <eid> ...
//   outer <vertex> <vertex> ...
//   pair <s> <t>            (MinMC mode)
//   cluster <t1> <t2> ...   (MinMCC mode, exclusive with pair)
// External edge ids may be arbitrary distinct non-negative integers; they are
// mapped to dense internal ids on parse.
struct ParsedInstance {
    std::variant<MinMCInstance, MCCInstance> inst;
    std::vector<long long> edge_names;  // dense edge id -> external id

    bool is_minmc() const { return std::holds_alternative<MinMCInstance>(inst); }
    const MinMCInstance& minmc() const { return std::get<MinMCInstance>(inst); }
    const MCCInstance& mcc() const { return std::get<MCCInstance>(inst); }
    const PlanarGraph& graph() const {
        return is_minmc() ? minmc().graph : mcc().graph;
    }
    int dense_edge(long long external) const;
};

ParsedInstance parse_instance(const std::string& text);
std::string serialize_instance(const ParsedInstance& pi);

}  // namespace planarcut
