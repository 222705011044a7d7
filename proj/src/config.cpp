#include "wordgen/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

namespace {

namespace fs = std::filesystem;

void reject_unknown_keys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError(where.empty() ? key : where + "." + key, "unknown field");
}

const Json& expect_object(const Json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigError(field, "expected an object");
  return v;
}

double read_number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

std::int64_t read_integer(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  return v.get<std::int64_t>();
}

std::string read_string(const Json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field, "expected a string");
  return v.get<std::string>();
}

void read_per_group(const Json& v, const std::string& field, PerGroup<double>& out) {
  expect_object(v, field);
  for (const auto& [key, value] : v.items()) {
    auto g = parse_group_key(key);
    if (!g) throw ConfigError(field + "." + key, "unknown feature group (expected super, basic, subord, inst)");
    out[*g] = read_number(value, field + "." + key);
  }
}

Json per_group_json(const PerGroup<double>& values) {
  Json out = Json::object();
  for (GroupLevel g : kAllGroups) out[std::string(group_key(g))] = values[g];
  return out;
}

template <typename Enum, typename Parse, typename Name>
std::vector<Enum> read_enum_list(const Json& v, const std::string& field, Parse parse, Name name) {
  if (!v.is_array() || v.empty()) throw ConfigError(field, "expected a non-empty array");
  std::vector<Enum> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string item_field = fmt::format("{}[{}]", field, i);
    auto parsed = parse(read_string(v[i], item_field));
    if (!parsed) throw ConfigError(item_field, fmt::format("unknown value '{}'", v[i].get<std::string>()));
    if (std::find(out.begin(), out.end(), *parsed) != out.end())
      throw ConfigError(item_field, fmt::format("duplicate value '{}'", name(*parsed)));
    out.push_back(*parsed);
  }
  return out;
}

Taxonomy read_taxonomy(const Json& v, const fs::path& base_dir) {
  try {
    if (v.is_string()) {
      fs::path path = v.get<std::string>();
      if (path.is_relative()) path = base_dir / path;
      std::ifstream in(path);
      if (!in) throw ConfigError("taxonomy", fmt::format("cannot open '{}'", path.string()));
      Json spec;
      try {
        spec = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ConfigError("taxonomy", fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
      }
      return Taxonomy::from_json(spec);
    }
    return Taxonomy::from_json(v);
  } catch (const TaxonomyError& e) {
    throw ConfigError("taxonomy", e.what());
  }
}

void validate(const RunConfig& c) {
  c.params.validate();
  if (c.word.empty()) throw ConfigError("word", "must not be empty");

  const auto sub = c.taxonomy.find(c.training_subordinate);
  if (!sub) throw ConfigError("training_subordinate", fmt::format("'{}' is not in the taxonomy", c.training_subordinate));
  if (sub->group != GroupLevel::Subordinate)
    throw ConfigError("training_subordinate", fmt::format("'{}' is not a subordinate category", c.training_subordinate));

  for (MatchLevel m : kAllMatches)
    if (c.test_counts[m] < 1)
      throw ConfigError(fmt::format("test_counts.{}", match_name(m)), "must be a positive integer");

  if (c.timing.simultaneous_test_offset < 0)
    throw ConfigError("timing.simultaneous_test_offset", "must be non-negative");
  if (c.timing.sequential_test_offset < 2)
    throw ConfigError("timing.sequential_test_offset", "must not precede the third presentation (>= 2)");

  // Dry runs surface taxonomy capacity problems before any output is written.
  try {
    Taxonomy probe = c.taxonomy;
    build_test_set(probe, c.training_subordinate, c.test_counts);
  } catch (const Error& e) {
    throw ConfigError("test_counts", e.what());
  }
  for (TrainingKind k : c.conditions) {
    try {
      run_condition(c.params, c.taxonomy, {k, Presentation::Sequential, c.training_subordinate, c.word, c.timing},
                    Ablation::Baseline, c.test_counts);
    } catch (const Error& e) {
      throw ConfigError("conditions", fmt::format("'{}': {}", training_name(k), e.what()));
    }
  }
}

}  // namespace

GridOptions RunConfig::grid_options() const {
  return GridOptions{conditions, training_subordinate, word, timing, test_counts};
}

RunConfig parse_config(const Json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  reject_unknown_keys(doc, "",
                      {"taxonomy", "params", "conditions", "ablations", "test_counts", "timing", "word",
                       "training_subordinate", "output"});
  RunConfig c;

  if (doc.contains("taxonomy")) c.taxonomy = read_taxonomy(doc["taxonomy"], base_dir);

  if (doc.contains("params")) {
    const Json& p = expect_object(doc["params"], "params");
    reject_unknown_keys(p, "params", {"gamma0", "k", "d", "gamma_growth_exponent"});
    if (p.contains("gamma0")) read_per_group(p["gamma0"], "params.gamma0", c.params.gamma0);
    if (p.contains("k")) read_per_group(p["k"], "params.k", c.params.k);
    if (p.contains("d")) read_per_group(p["d"], "params.d", c.params.d);
    if (p.contains("gamma_growth_exponent"))
      c.params.gamma_growth_exponent = read_number(p["gamma_growth_exponent"], "params.gamma_growth_exponent");
  }

  if (doc.contains("conditions"))
    c.conditions = read_enum_list<TrainingKind>(doc["conditions"], "conditions", parse_training, training_name);
  if (doc.contains("ablations"))
    c.ablations = read_enum_list<Ablation>(doc["ablations"], "ablations", parse_ablation, ablation_name);

  if (doc.contains("test_counts")) {
    const Json& t = expect_object(doc["test_counts"], "test_counts");
    reject_unknown_keys(t, "test_counts", {"subordinate", "basic", "superordinate"});
    for (MatchLevel m : kAllMatches) {
      const std::string key(match_name(m));
      if (t.contains(key)) {
        const std::int64_t n = read_integer(t[key], "test_counts." + key);
        if (n < 1 || n > 1'000'000) throw ConfigError("test_counts." + key, "must be a positive integer");
        c.test_counts[m] = static_cast<int>(n);
      }
    }
  }

  if (doc.contains("timing")) {
    const Json& t = expect_object(doc["timing"], "timing");
    reject_unknown_keys(t, "timing", {"origin", "simultaneous_test_offset", "sequential_test_offset"});
    if (t.contains("origin")) c.timing.origin = read_integer(t["origin"], "timing.origin");
    if (t.contains("simultaneous_test_offset"))
      c.timing.simultaneous_test_offset = read_integer(t["simultaneous_test_offset"], "timing.simultaneous_test_offset");
    if (t.contains("sequential_test_offset"))
      c.timing.sequential_test_offset = read_integer(t["sequential_test_offset"], "timing.sequential_test_offset");
    if (c.timing.origin < 1) throw ConfigError("timing.origin", "must be at least 1");
  }

  if (doc.contains("word")) c.word = read_string(doc["word"], "word");
  if (doc.contains("training_subordinate"))
    c.training_subordinate = read_string(doc["training_subordinate"], "training_subordinate");

  if (doc.contains("output")) {
    const Json& o = expect_object(doc["output"], "output");
    reject_unknown_keys(o, "output", {"csv", "svg", "trace"});
    auto path_field = [&o](const char* key) -> std::optional<fs::path> {
      if (!o.contains(key) || o[key].is_null()) return std::nullopt;
      return fs::path(read_string(o[key], std::string("output.") + key));
    };
    c.output = {path_field("csv"), path_field("svg"), path_field("trace")};
  }

  validate(c);
  return c;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", fmt::format("cannot open config '{}'", path.string()));
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return parse_config(doc, path.parent_path());
}

Json config_to_json(const RunConfig& c) {
  Json doc = Json::object();
  doc["taxonomy"] = c.taxonomy.to_json();
  doc["params"] = Json{{"gamma0", per_group_json(c.params.gamma0)},
                       {"k", per_group_json(c.params.k)},
                       {"d", per_group_json(c.params.d)},
                       {"gamma_growth_exponent", c.params.gamma_growth_exponent}};
  Json conditions = Json::array();
  for (TrainingKind k : c.conditions) conditions.push_back(training_name(k));
  doc["conditions"] = conditions;
  Json ablations = Json::array();
  for (Ablation a : c.ablations) ablations.push_back(ablation_name(a));
  doc["ablations"] = ablations;
  Json counts = Json::object();
  for (MatchLevel m : kAllMatches) counts[std::string(match_name(m))] = c.test_counts[m];
  doc["test_counts"] = counts;
  doc["timing"] = Json{{"origin", c.timing.origin},
                       {"simultaneous_test_offset", c.timing.simultaneous_test_offset},
                       {"sequential_test_offset", c.timing.sequential_test_offset}};
  doc["word"] = c.word;
  doc["training_subordinate"] = c.training_subordinate;
  Json output = Json::object();
  if (c.output.csv) output["csv"] = c.output.csv->string();
  if (c.output.svg) output["svg"] = c.output.svg->string();
  if (c.output.trace) output["trace"] = c.output.trace->string();
  doc["output"] = output;
  return doc;
}

}  // namespace wordgen
