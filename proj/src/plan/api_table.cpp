#include "plancheck/plan/api_table.hpp"

#include <nlohmann/json.hpp>

#include "plancheck/error.hpp"

namespace plancheck::plan {

namespace {
constexpr const char* kSchema = "plancheck.api_table/1";
}

ApiTable::ApiTable(std::vector<ApiDecl> apis) : apis_(std::move(apis)) {
  for (std::size_t i = 0; i < apis_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (apis_[i].name == apis_[j].name) {
        throw Error(ErrorKind::format_error, "duplicate API '" + apis_[i].name + "'");
      }
    }
  }
}

const ApiDecl* ApiTable::find(const std::string& name) const {
  for (const auto& a : apis_) {
    if (a.name == name) return &a;
  }
  if (name == "sleep") {
    static const ApiDecl builtin{"sleep", 1, ApiKind::action, "Pause for the given duration."};
    return &builtin;
  }
  return nullptr;
}

ApiTable ApiTable::from_json(const nlohmann::json& doc) {
  try {
    if (doc.value("schema", std::string()) != kSchema) {
      throw Error(ErrorKind::format_error, std::string("API table must declare schema ") + kSchema);
    }
    std::vector<ApiDecl> apis;
    for (const auto& item : doc.at("apis")) {
      ApiDecl d;
      d.name = item.at("name").get<std::string>();
      if (item.contains("arity") && !item.at("arity").is_null()) d.arity = item.at("arity").get<int>();
      std::string returns = item.value("returns", std::string("action"));
      if (returns == "boolean") {
        d.kind = ApiKind::boolean;
      } else if (returns == "action") {
        d.kind = ApiKind::action;
      } else {
        throw Error(ErrorKind::format_error, "API '" + d.name + "': returns must be boolean or action");
      }
      d.doc = item.value("doc", std::string());
      apis.push_back(std::move(d));
    }
    return ApiTable(std::move(apis));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::format_error, std::string("malformed API table: ") + e.what());
  }
}

nlohmann::json ApiTable::to_json() const {
  nlohmann::json apis = nlohmann::json::array();
  for (const auto& a : apis_) {
    nlohmann::json item;
    item["name"] = a.name;
    item["arity"] = a.arity ? nlohmann::json(*a.arity) : nlohmann::json(nullptr);
    item["returns"] = a.kind == ApiKind::boolean ? "boolean" : "action";
    item["doc"] = a.doc;
    apis.push_back(std::move(item));
  }
  return {{"schema", kSchema}, {"apis", std::move(apis)}};
}

}  // namespace plancheck::plan
