#include "orbrec/model_io.hpp"

#include <nlohmann/json.hpp>

#include "orbrec/error.hpp"
#include "orbrec/poly_text.hpp"

namespace orbrec::model_io {

using ordered_json = nlohmann::ordered_json;

ModelDocument standard_document(const quotients::IsotropyGroupKind& g) {
  ModelDocument doc;
  doc.model = atlas::quotient_input_model(g);
  doc.semialgebraic = quotients::semialgebraic_model(g);
  return doc;
}

std::string serialize_model(const ModelDocument& doc) {
  ordered_json j;
  j["dimension"] = doc.model.dimension;

  j["strata"] = ordered_json::array();
  for (const auto& s : doc.model.stratified.strata) {
    ordered_json js;
    js["id"] = s.id;
    js["codim"] = s.codim;
    js["label"] = s.label;
    if (s.order) js["order"] = *s.order;
    if (s.open_dense) js["open_dense"] = true;
    j["strata"].push_back(std::move(js));
  }

  j["frontier"] = ordered_json::array();
  for (const auto& [lower, upper] : doc.model.stratified.frontier)
    j["frontier"].push_back(ordered_json::array({lower, upper}));

  j["germs"] = ordered_json::object();
  for (const auto& [id, germ] : doc.model.germs) j["germs"][id] = to_string(germ);

  if (doc.semialgebraic) {
    ordered_json jm;
    jm["variables"] = ordered_json::array();
    for (const auto& v : *doc.semialgebraic->vars) jm["variables"].push_back(v);
    jm["equalities"] = ordered_json::array();
    for (const auto& p : doc.semialgebraic->equalities) jm["equalities"].push_back(to_string(p));
    jm["inequalities"] = ordered_json::array();
    for (const auto& p : doc.semialgebraic->inequalities)
      jm["inequalities"].push_back(to_string(p));
    j["model"] = std::move(jm);
  }

  return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void syntax_error_at(const std::string& text, std::size_t byte,
                                  const std::string& what) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw domain_error("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what);
}

const ordered_json& require_field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw domain_error(std::string("document missing field '") + key + "'");
  return *it;
}

unsigned read_unsigned(const ordered_json& j, const char* what) {
  if (!j.is_number_unsigned()) throw domain_error(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

std::string read_string(const ordered_json& j, const char* what) {
  if (!j.is_string()) throw domain_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

ModelDocument parse_model(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    syntax_error_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!j.is_object()) throw domain_error("document must be a JSON object");

  ModelDocument doc;
  doc.model.dimension = read_unsigned(require_field(j, "dimension"), "dimension");

  const ordered_json& jstrata = require_field(j, "strata");
  if (!jstrata.is_array()) throw domain_error("'strata' must be an array");
  for (const auto& js : jstrata) {
    if (!js.is_object()) throw domain_error("each stratum must be an object");
    strata::Stratum s;
    s.id = read_string(require_field(js, "id"), "stratum id");
    s.codim = read_unsigned(require_field(js, "codim"), "stratum codim");
    s.label = read_string(require_field(js, "label"), "stratum label");
    if (js.contains("order")) s.order = read_unsigned(js["order"], "stratum order");
    if (js.contains("open_dense")) {
      if (!js["open_dense"].is_boolean()) throw domain_error("'open_dense' must be a boolean");
      s.open_dense = js["open_dense"].get<bool>();
    }
    doc.model.stratified.strata.push_back(std::move(s));
  }

  const ordered_json& jfront = require_field(j, "frontier");
  if (!jfront.is_array()) throw domain_error("'frontier' must be an array");
  for (const auto& jp : jfront) {
    if (!jp.is_array() || jp.size() != 2)
      throw domain_error("each frontier entry must be a pair of stratum ids");
    doc.model.stratified.frontier.emplace(read_string(jp[0], "frontier id"),
                                          read_string(jp[1], "frontier id"));
  }

  VarNamesPtr model_vars;
  if (j.contains("model")) {
    const ordered_json& jm = j["model"];
    if (!jm.is_object()) throw domain_error("'model' must be an object");
    std::vector<std::string> names;
    for (const auto& jv : require_field(jm, "variables"))
      names.push_back(read_string(jv, "variable name"));
    if (names.empty()) throw domain_error("'model' needs at least one variable");
    model_vars = make_vars(names);

    quotients::SemialgebraicModel sm;
    sm.vars = model_vars;
    for (const auto& jp : require_field(jm, "equalities"))
      sm.equalities.push_back(parse_polynomial(read_string(jp, "equality"), model_vars));
    for (const auto& jp : require_field(jm, "inequalities"))
      sm.inequalities.push_back(parse_polynomial(read_string(jp, "inequality"), model_vars));
    doc.semialgebraic = std::move(sm);
  }

  const ordered_json& jgerms = require_field(j, "germs");
  if (!jgerms.is_object()) throw domain_error("'germs' must be an object");
  for (const auto& [id, jg] : jgerms.items())
    doc.model.germs.emplace(id, parse_polynomial(read_string(jg, "germ"), model_vars));

  std::vector<std::string> violations = strata::validate(doc.model.stratified);
  if (!violations.empty()) {
    std::string msg = "invalid stratified model";
    for (const auto& v : violations) msg += "; " + v;
    throw domain_error(msg);
  }

  for (const auto& s : doc.model.stratified.strata) {
    if (s.codim > doc.model.dimension)
      throw domain_error("stratum '" + s.id + "' has codimension " + std::to_string(s.codim) +
                         " in a dimension-" + std::to_string(doc.model.dimension) + " model");
    if (s.codim == 2 && !s.order && !doc.model.germs.count(s.id))
      throw domain_error("codimension-2 stratum '" + s.id +
                         "' has neither a stored order nor a germ");
  }
  for (const auto& [id, germ] : doc.model.germs) {
    const strata::Stratum* s = doc.model.stratified.find(id);
    if (s == nullptr) throw domain_error("germ attached to unknown stratum '" + id + "'");
    if (s->codim != 2)
      throw domain_error("germ attached to stratum '" + id + "' of codimension " +
                         std::to_string(s->codim) + "; only codimension-2 strata carry germs");
  }

  if (doc.semialgebraic && doc.semialgebraic->singular_germ == std::nullopt) {
    auto origin = doc.model.germs.find("origin");
    if (origin != doc.model.germs.end()) doc.semialgebraic->singular_germ = origin->second;
  }

  return doc;
}

std::string serialize_atlas(const atlas::AtlasDescriptor& a) {
  ordered_json j;
  j["dimension"] = a.dimension;
  j["charts"] = ordered_json::array();
  for (const auto& c : a.charts) {
    ordered_json jc;
    jc["stratum"] = c.stratum_id;
    jc["dimension"] = c.dimension;
    ordered_json jiso;
    switch (c.isotropy.family()) {
      case quotients::GroupFamily::Trivial: jiso["kind"] = "trivial"; break;
      case quotients::GroupFamily::Cyclic:
        jiso["kind"] = "cyclic";
        jiso["k"] = c.isotropy.k();
        break;
      case quotients::GroupFamily::Dihedral:
        jiso["kind"] = "dihedral";
        jiso["k"] = c.isotropy.k();
        break;
    }
    jc["isotropy"] = std::move(jiso);
    jc["model"] = c.model_tag;
    j["charts"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

}  // namespace orbrec::model_io
