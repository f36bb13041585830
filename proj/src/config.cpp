#include "alf/config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace alf {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 7> kKinds{{
    {Kind::Interval, "interval"},
    {Kind::Rectangle, "rectangle"},
    {Kind::Houdini, "houdini"},
    {Kind::IceInvariant, "ice-invariant"},
    {Kind::AdequateFixpoint, "adequate-fixpoint"},
    {Kind::AbstractPost, "abstract-post"},
    {Kind::SygusLite, "sygus-lite"},
}};

// Allowed learners per kind; the first is the default.
std::vector<std::string> learners_for(Kind k) {
  switch (k) {
    case Kind::Interval: return {"occam", "wqo"};
    case Kind::Rectangle: return {"wqo"};
    case Kind::Houdini: return {"houdini"};
    case Kind::IceInvariant: return {"occam-conj", "houdini"};
    case Kind::AdequateFixpoint: return {"box-hull"};
    case Kind::AbstractPost: return {"alpha-join"};
    case Kind::SygusLite: return {"occam"};
  }
  return {};
}

std::set<std::string> keys_for(Kind k) {
  std::set<std::string> keys{"kind", "learner", "budget", "seed", "checked", "description"};
  switch (k) {
    case Kind::Interval: keys.insert("target"); break;
    case Kind::Rectangle: keys.insert({"dim", "target"}); break;
    case Kind::Houdini:
    case Kind::IceInvariant: keys.insert({"program", "predicates"}); break;
    case Kind::AdequateFixpoint: keys.insert("system"); break;
    case Kind::AbstractPost: keys.insert({"system", "xhat"}); break;
    case Kind::SygusLite:
      keys.insert({"inputs", "constants", "formula", "function", "max_size"});
      break;
  }
  return keys;
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  const std::string at = path.empty() ? key : path + "." + key;
  if (!obj.contains(key)) throw ConfigError(at, "missing required field");
  return obj[key];
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::uint64_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const std::string& text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

Coord integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<Coord>();
}

Point point(const Json& j, std::size_t dim, const std::string& path) {
  Point p;
  if (j.is_number_integer()) {
    p = Point{j.get<Coord>()};
  } else {
    array(j, path);
    for (std::size_t i = 0; i < j.size(); ++i) p.coords.push_back(integer(j[i], index_path(path, i)));
  }
  if (p.dim() != dim) {
    throw ConfigError(path, "expected a point of dimension " + std::to_string(dim));
  }
  return p;
}

PointSet points(const Json& j, std::size_t dim, const std::string& path) {
  array(j, path);
  PointSet out;
  for (std::size_t i = 0; i < j.size(); ++i) out.insert(point(j[i], dim, index_path(path, i)));
  return out;
}

BoxParams box_params(const Json& doc, Kind kind) {
  std::size_t dim = 1;
  if (kind == Kind::Rectangle) {
    dim = natural(require(doc, "dim", ""), "dim");
    if (dim < 1 || dim > 8) throw ConfigError("dim", "must be in [1, 8]");
  }
  const auto& t = object(require(doc, "target", ""), "target");
  BoxTarget target{points(require(t, "required", "target"), dim, "target.required"),
                   t.contains("forbidden") ? points(t["forbidden"], dim, "target.forbidden")
                                           : PointSet{}};
  if (!box_target_realizable(target)) throw ConfigError("target", "target unrealizable");
  return {dim, std::move(target)};
}

std::vector<VarDecl> var_decls(const Json& j, const std::string& path) {
  array(j, path);
  if (j.empty() || j.size() > expr::kMaxArity) throw ConfigError(path, "expected 1 to 8 variables");
  std::vector<VarDecl> vars;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = index_path(path, i);
    object(j[i], at);
    VarDecl v{text(require(j[i], "name", at), at + ".name"),
              integer(require(j[i], "lo", at), at + ".lo"),
              integer(require(j[i], "hi", at), at + ".hi")};
    if (!seen.insert(v.name).second) throw ConfigError(at + ".name", "duplicate variable name");
    vars.push_back(std::move(v));
  }
  return vars;
}

StateSpace state_space(const Json& j, const std::string& path) {
  try {
    return StateSpace(var_decls(j, path));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

expr::Expr formula(const Json& j, std::span<const std::string> names, const std::string& path,
                   bool want_bool, const std::string& fname = "") {
  try {
    auto e = expr::parse(text(j, path), names, {fname});
    if (expr::is_bool(*e) != want_bool) {
      throw ConfigError(path, want_bool ? "expected a boolean formula" : "expected an integer term");
    }
    return e;
  } catch (const expr::ParseError& e) {
    throw ConfigError(path, e.what());
  }
}

std::vector<expr::Expr> updates(const Json& j, std::span<const std::string> names,
                                const std::string& path) {
  array(j, path);
  if (j.size() != names.size()) {
    throw ConfigError(path, "expected one update per variable (" + std::to_string(names.size()) + ")");
  }
  std::vector<expr::Expr> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(formula(j[i], names, index_path(path, i), false));
  return out;
}

ProgramParams program_params(const Json& doc) {
  const auto& p = object(require(doc, "program", ""), "program");
  StateSpace space = state_space(require(p, "vars", "program"), "program.vars");
  const auto names = space.names();
  LoopProgram prog{std::move(space),
                   formula(require(p, "init", "program"), names, "program.init", true),
                   formula(require(p, "guard", "program"), names, "program.guard", true),
                   formula(require(p, "post", "program"), names, "program.post", true),
                   updates(require(p, "body", "program"), names, "program.body")};
  const auto& pj = array(require(doc, "predicates", ""), "predicates");
  if (pj.size() > 64) throw ConfigError("predicates", "at most 64 predicates");
  PredicateList preds;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string at = index_path("predicates", i);
    preds.preds.push_back(formula(pj[i], names, at, true));
    preds.sources.push_back(pj[i].get<std::string>());
  }
  return {std::move(prog), std::move(preds)};
}

TransitionSystem system(const Json& doc) {
  const auto& s = object(require(doc, "system", ""), "system");
  StateSpace space = state_space(require(s, "vars", "system"), "system.vars");
  const auto names = space.names();
  auto optional_formula = [&](const char* key, bool dflt) {
    if (!s.contains(key)) return expr::truth(dflt);
    return formula(s[key], names, std::string("system.") + key, true);
  };
  TransitionSystem ts{std::move(space),
                      formula(require(s, "init", "system"), names, "system.init", true),
                      optional_formula("guard", true), optional_formula("bad", false),
                      updates(require(s, "update", "system"), names, "system.update")};
  return ts;
}

SygusParams sygus_params(const Json& doc) {
  auto inputs = var_decls(require(doc, "inputs", ""), "inputs");
  try {
    StateSpace check(inputs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("inputs", e.what());
  }
  std::vector<Coord> constants = kDefaultConstants;
  if (doc.contains("constants")) {
    const auto& cj = array(doc["constants"], "constants");
    constants.clear();
    for (std::size_t i = 0; i < cj.size(); ++i) constants.push_back(integer(cj[i], index_path("constants", i)));
  }
  std::string fname = doc.contains("function") ? text(doc["function"], "function") : "f";
  SynthSpec spec;
  spec.inputs = std::move(inputs);
  spec.constants = std::move(constants);
  spec.fname = fname;
  const auto names = spec.input_names();
  if (std::find(names.begin(), names.end(), fname) != names.end()) {
    throw ConfigError("function", "clashes with an input name");
  }
  spec.formula = formula(require(doc, "formula", ""), names, "formula", true, fname);
  try {
    validate(spec);
  } catch (const std::exception& e) {
    throw ConfigError("formula", e.what());
  }
  std::size_t max_size = 12;
  if (doc.contains("max_size")) {
    max_size = natural(doc["max_size"], "max_size");
    if (max_size < 1 || max_size > 32) throw ConfigError("max_size", "must be in [1, 32]");
  }
  return {std::move(spec), max_size};
}

}  // namespace

std::string_view kind_name(Kind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

ConfigError::ConfigError(std::string field, std::string reason, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + field + ": " + reason),
      field_(std::move(field)),
      reason_(std::move(reason)) {}

InstanceConfig parse_config(const Json& doc) {
  object(doc, "(root)");
  const std::string& kname = text(require(doc, "kind", ""), "kind");
  const auto it = std::find_if(kKinds.begin(), kKinds.end(),
                               [&](const auto& kv) { return kv.second == kname; });
  if (it == kKinds.end()) throw ConfigError("kind", "unknown kind '" + kname + "'");
  const Kind kind = it->first;

  const auto allowed = keys_for(kind);
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) throw ConfigError(key, "unknown field for kind " + kname);
  }

  const auto learners = learners_for(kind);
  std::string learner = learners.front();
  if (doc.contains("learner")) {
    learner = text(doc["learner"], "learner");
    if (std::find(learners.begin(), learners.end(), learner) == learners.end()) {
      throw ConfigError("learner", "'" + learner + "' is not a learner for kind " + kname);
    }
  }

  // Budget 0 is accepted so that an instance can be run with no rounds at all.
  const std::size_t budget = natural(require(doc, "budget", ""), "budget");
  const std::uint64_t seed = doc.contains("seed") ? natural(doc["seed"], "seed") : 0;
  bool checked = false;
  if (doc.contains("checked")) {
    if (!doc["checked"].is_boolean()) throw ConfigError("checked", "expected a boolean");
    checked = doc["checked"].get<bool>();
  }
  if (doc.contains("description")) text(doc["description"], "description");

  InstanceParams params = [&]() -> InstanceParams {
    switch (kind) {
      case Kind::Interval:
      case Kind::Rectangle: return box_params(doc, kind);
      case Kind::Houdini:
      case Kind::IceInvariant: return program_params(doc);
      case Kind::AdequateFixpoint: return FixpointParams{system(doc)};
      case Kind::AbstractPost: {
        TransitionSystem ts = system(doc);
        const std::string& xs = text(require(doc, "xhat", ""), "xhat");
        try {
          Rect xhat = parse_rect(xs, ts.space.arity());
          if (!xhat.is_empty() && xhat.dim() != ts.space.arity()) {
            throw ConfigError("xhat", "dimension differs from the system's variable count");
          }
          return AbstractPostParams{std::move(ts), std::move(xhat)};
        } catch (const std::invalid_argument& e) {
          throw ConfigError("xhat", e.what());
        }
      }
      case Kind::SygusLite: return sygus_params(doc);
    }
    throw ConfigError("kind", "unhandled kind");
  }();

  return InstanceConfig{kind, learner, budget, seed, checked, std::move(params), doc,
                        fnv1a_hex(doc.dump())};
}

InstanceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": invalid JSON: " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(e.field(), e.reason(), path.string());
  }
}

}  // namespace alf
