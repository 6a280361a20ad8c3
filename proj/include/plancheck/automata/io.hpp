#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "plancheck/automata/structures.hpp"

namespace plancheck::automata {

nlohmann::json to_json(const Fsa& a);
Fsa fsa_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const TransitionSystem& ts);
TransitionSystem ts_from_json(const nlohmann::json& doc);

std::string to_dot(const Fsa& a, const std::string& graph_name = "plan");
std::string to_dot(const ProductAutomaton& p, const std::string& graph_name = "product");

}  // namespace plancheck::automata
