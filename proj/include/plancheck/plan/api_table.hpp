#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace plancheck::plan {

enum class ApiKind { boolean, action };

struct ApiDecl {
  std::string name;
  std::optional<int> arity;  // nullopt accepts any argument count
  ApiKind kind = ApiKind::action;
  std::string doc;

  bool operator==(const ApiDecl&) const = default;
};

/// Declared robot APIs. `sleep` is always available as a one-argument action
/// even when the document does not list it.
class ApiTable {
 public:
  ApiTable() = default;
  explicit ApiTable(std::vector<ApiDecl> apis);

  const ApiDecl* find(const std::string& name) const;
  const std::vector<ApiDecl>& apis() const { return apis_; }

  static ApiTable from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

 private:
  std::vector<ApiDecl> apis_;
};

}  // namespace plancheck::plan
