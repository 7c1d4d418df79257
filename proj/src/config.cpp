#include "fdebvp/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fdebvp/format.hpp"

namespace fdebvp {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) throw ConfigError(strf("config: %s must be an object", where));
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(strf("config: missing key '%s' in %s", key, where));
  return *it;
}

// Numeric leaves accept a JSON number or a constant expression ("pi", "e",
// "-pi", "1e-8"); variables are rejected.
double number_or_expr(const json& j, const char* where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return Expr::parse(j.get<std::string>(), VarSet::none())();
    } catch (const FdeError& e) {
      throw ConfigError(strf("config key %s: %s", where, e.what()));
    }
  }
  throw ConfigError(strf("config key %s must be a number or a constant expression", where));
}

Expr expr_member(const json& obj, const char* key, VarSet allowed, bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw ConfigError(strf("config: missing key '%s'", key));
    return Expr{};
  }
  if (!it->is_string()) throw ConfigError(strf("config key %s must be an expression string", key));
  try {
    return Expr::parse(it->get<std::string>(), allowed);
  } catch (const ParseError& e) {
    throw ConfigError(strf("config key %s: %s", key, e.what()));
  }
}

}  // namespace

ProblemConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(strf("config syntax error at byte %zu: %s",
                           static_cast<std::size_t>(e.byte), e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  ProblemConfig config;
  config.spec.a = number_or_expr(member(member(doc, "interval", "top level"), "a", "interval"),
                                 "interval.a");

  const json& bc = member(doc, "bc", "top level");
  if (!bc.is_array() || bc.size() != 3)
    throw ConfigError("config: 'bc' must be an array of exactly 3 boundary rows");
  for (std::size_t r = 0; r < 3; ++r) {
    const json& row = bc[r];
    std::string where = strf("bc[%zu]", r);
    const json& at = member(row, "at", where.c_str());
    if (!at.is_string() || (at != "left" && at != "right"))
      throw ConfigError(strf("config: %s.at must be \"left\" or \"right\"", where.c_str()));
    BoundaryRow& out = config.spec.bc[r];
    out.at = at == "left" ? Side::left : Side::right;
    out.alpha = number_or_expr(member(row, "alpha", where.c_str()), (where + ".alpha").c_str());
    out.beta = number_or_expr(member(row, "beta", where.c_str()), (where + ".beta").c_str());
    out.gamma = number_or_expr(member(row, "gamma", where.c_str()), (where + ".gamma").c_str());
    out.b = number_or_expr(member(row, "b", where.c_str()), (where + ".b").c_str());
  }

  config.spec.f = expr_member(doc, "f", VarSet::all(), true);
  config.spec.phi = expr_member(doc, "phi", VarSet::time_only(), true);
  if (doc.contains("exact"))
    config.spec.exact = expr_member(doc, "exact", VarSet::time_only(), true);

  const json& n = member(doc, "N", "top level");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw ConfigError("config: 'N' must be a positive integer");
  config.n = n.get<int>();

  if (doc.contains("tol")) {
    config.options.tol = number_or_expr(doc["tol"], "tol");
    if (!(config.options.tol > 0.0)) throw ConfigError("config: 'tol' must be positive");
  }
  if (doc.contains("max_iter")) {
    const json& mi = doc["max_iter"];
    if (!mi.is_number_integer() || mi.get<long long>() < 1)
      throw ConfigError("config: 'max_iter' must be a positive integer");
    config.options.max_iter = mi.get<int>();
  }
  if (doc.contains("M")) config.m = number_or_expr(doc["M"], "M");

  return config;
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(strf("cannot open config file '%s'", path.string().c_str()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(strf("%s: %s", path.string().c_str(), e.what()));
  }
}

std::string save_config(const ProblemConfig& config) {
  json doc;
  doc["interval"]["a"] = config.spec.a;
  doc["bc"] = json::array();
  for (const BoundaryRow& row : config.spec.bc) {
    doc["bc"].push_back({{"at", row.at == Side::left ? "left" : "right"},
                         {"alpha", row.alpha},
                         {"beta", row.beta},
                         {"gamma", row.gamma},
                         {"b", row.b}});
  }
  doc["f"] = config.spec.f.text();
  doc["phi"] = config.spec.phi.text();
  if (config.spec.exact) doc["exact"] = config.spec.exact->text();
  doc["N"] = config.n;
  doc["tol"] = config.options.tol;
  doc["max_iter"] = config.options.max_iter;
  if (config.m) doc["M"] = *config.m;
  return doc.dump(2) + "\n";
}

}  // namespace fdebvp
