#include "tropical/system.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace tropical {

using json = nlohmann::ordered_json;

SystemDef::SystemDef(std::vector<std::string> vars,
                     std::vector<std::pair<std::string, Scalar>> params,
                     std::vector<ExprPtr> updates)
    : vars_(std::move(vars)),
      params_(std::move(params)),
      updates_(std::move(updates)) {
  if (vars_.empty())
    throw Error(ErrorKind::ArityMismatch, "a system needs at least one variable");
  if (updates_.size() != vars_.size())
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(vars_.size()) + " variables but " +
                    std::to_string(updates_.size()) + " updates");

  std::set<std::string, std::less<>> declared;
  auto declare = [&](const std::string& name, const char* what) {
    if (!is_identifier(name))
      throw SyntaxError(0, "an identifier",
                        std::string(what) + " name '" + name + "'");
    if (!declared.insert(name).second)
      throw SyntaxError(0, "distinct names", "'" + name + "' declared twice");
  };
  for (const auto& v : vars_) declare(v, "variable");
  for (const auto& [name, value] : params_) declare(name, "parameter");

  for (std::size_t i = 0; i < updates_.size(); ++i)
    for (const auto& name : free_variables(*updates_[i]))
      if (!declared.contains(name))
        throw Error(ErrorKind::UnknownName,
                    "update " + std::to_string(i + 1) + " uses undeclared '" +
                        name + "'");
}

SystemDef SystemDef::with_param(std::string_view name, Scalar value) const {
  auto params = params_;
  auto it = std::find_if(params.begin(), params.end(),
                         [&](const auto& p) { return p.first == name; });
  if (it == params.end())
    throw Error(ErrorKind::UnknownName,
                "no parameter named '" + std::string(name) + "'");
  it->second = value;
  return SystemDef(vars_, std::move(params), updates_);
}

Env SystemDef::param_env() const {
  return Env(params_.begin(), params_.end());
}

ExprPtr SystemDef::bound_update(std::size_t i) const {
  return substitute(updates_.at(i), param_env());
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw SyntaxError(0, what, "invalid system file");
}

Scalar scalar_from_json(const json& v, const std::string& where) {
  if (v.is_number()) return Scalar(v.get<double>());
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  schema_error("a number or \"eps\" for " + where);
}

}  // namespace

SystemDef load_system(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte > 0 ? e.byte - 1 : 0, "well-formed JSON", e.what());
  }
  if (!doc.is_object()) schema_error("a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "vars" && key != "params" && key != "updates")
      schema_error("only \"vars\", \"params\" and \"updates\" keys, got \"" +
                   key + "\"");

  if (!doc.contains("vars") || !doc["vars"].is_array())
    schema_error("\"vars\": an array of names");
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) schema_error("variable names as strings");
    vars.push_back(v.get<std::string>());
  }

  std::vector<std::pair<std::string, Scalar>> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) schema_error("\"params\": an object");
    for (const auto& [name, value] : doc["params"].items())
      params.emplace_back(name, scalar_from_json(value, "parameter " + name));
  }

  if (!doc.contains("updates") || !doc["updates"].is_array())
    schema_error("\"updates\": an array of expressions");
  std::vector<ExprPtr> updates;
  for (std::size_t i = 0; i < doc["updates"].size(); ++i) {
    const auto& u = doc["updates"][i];
    if (!u.is_string()) schema_error("update expressions as strings");
    try {
      updates.push_back(parse_expr(u.get<std::string>()));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.position(), e.expected(),
                        "in update " + std::to_string(i + 1) +
                            (e.detail().empty() ? "" : ": " + e.detail()));
    }
  }
  return SystemDef(std::move(vars), std::move(params), std::move(updates));
}

std::string dump_system(const SystemDef& s) {
  json doc;
  doc["vars"] = s.vars();
  json params = json::object();
  for (const auto& [name, value] : s.params()) {
    if (value.is_eps())
      params[name] = "eps";
    else
      params[name] = value.value();
  }
  doc["params"] = params;
  json updates = json::array();
  for (const auto& u : s.updates()) updates.push_back(to_string(*u));
  doc["updates"] = updates;
  return doc.dump(2);
}

Vector eval_map(const SystemDef& s, const Vector& x) {
  if (x.dim() != s.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "system has " + std::to_string(s.dim()) +
                    " variables, state has " + std::to_string(x.dim()));
  Env env = s.param_env();
  for (std::size_t i = 0; i < s.dim(); ++i) env[s.vars()[i]] = x[i];
  Vector y(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) y[i] = eval(*s.updates()[i], env);
  return y;
}

}  // namespace tropical
