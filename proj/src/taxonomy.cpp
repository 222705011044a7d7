#include "wordgen/taxonomy.hpp"

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

namespace {

constexpr std::array<std::string_view, kGroupCount> kGroupKeys = {"super", "basic", "subord", "inst"};
constexpr std::array<std::string_view, kGroupCount> kLevelNames = {"superordinate", "basic", "subordinate",
                                                                   "instance"};

}  // namespace

std::string_view group_key(GroupLevel g) { return kGroupKeys[index_of(g)]; }

std::optional<GroupLevel> parse_group_key(std::string_view key) {
  for (GroupLevel g : kAllGroups)
    if (group_key(g) == key) return g;
  return std::nullopt;
}

std::size_t Taxonomy::add_node(std::string name, GroupLevel level, std::optional<std::size_t> parent) {
  if (name.empty()) throw TaxonomyError(fmt::format("empty {} name", kLevelNames[index_of(level)]));
  if (index_.contains(name)) throw TaxonomyError(fmt::format("duplicate category name '{}'", name));
  const std::size_t id = nodes_.size();
  index_.emplace(name, id);
  nodes_.push_back(Node{std::move(name), level, parent, {}});
  if (parent)
    nodes_[*parent].children.push_back(id);
  else
    roots_.push_back(id);
  return id;
}

Taxonomy Taxonomy::from_json(const Json& spec) {
  if (!spec.is_object() || spec.empty())
    throw TaxonomyError("taxonomy must be a non-empty object of superordinate categories");

  Taxonomy tax;
  // Levels above the instance group are objects; the subordinate level maps
  // to an array of instance names.
  auto build = [&tax](auto&& self, const Json& children, GroupLevel level,
                      std::optional<std::size_t> parent) -> void {
    for (const auto& [name, value] : children.items()) {
      const std::size_t id = tax.add_node(name, level, parent);
      if (level == GroupLevel::Subordinate) {
        if (!value.is_array())
          throw TaxonomyError(fmt::format(
              "wrong depth: subordinate '{}' must map to an array of instances (four levels required)", name));
        for (const Json& inst : value) {
          if (!inst.is_string())
            throw TaxonomyError(fmt::format("wrong depth: instances under '{}' must be plain names", name));
          tax.add_node(inst.get<std::string>(), GroupLevel::Instance, id);
        }
        continue;
      }
      const auto lower = static_cast<GroupLevel>(index_of(level) + 1);
      if (!value.is_object())
        throw TaxonomyError(fmt::format("wrong depth: {} '{}' must map to an object of {} categories",
                                        kLevelNames[index_of(level)], name, kLevelNames[index_of(lower)]));
      if (value.empty())
        throw TaxonomyError(fmt::format("{} '{}' has no {} children", kLevelNames[index_of(level)], name,
                                        kLevelNames[index_of(lower)]));
      self(self, value, lower, id);
    }
  };
  build(build, spec, GroupLevel::Superordinate, std::nullopt);
  return tax;
}

Json Taxonomy::to_json() const {
  auto emit = [this](auto&& self, const Node& n) -> Json {
    if (n.level == GroupLevel::Subordinate) {
      Json arr = Json::array();
      for (std::size_t c : n.children) arr.push_back(nodes_[c].name);
      return arr;
    }
    Json obj = Json::object();
    for (std::size_t c : n.children) obj[nodes_[c].name] = self(self, nodes_[c]);
    return obj;
  };
  Json out = Json::object();
  for (std::size_t r : roots_) out[nodes_[r].name] = emit(emit, nodes_[r]);
  return out;
}

const Taxonomy::Node& Taxonomy::node(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw TaxonomyError(fmt::format("unknown category '{}'", name));
  return nodes_[it->second];
}

std::optional<Feature> Taxonomy::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return as_feature(nodes_[it->second]);
}

Feature Taxonomy::feature(std::string_view name) const { return as_feature(node(name)); }

std::optional<Feature> Taxonomy::parent(std::string_view name) const {
  const Node& n = node(name);
  if (!n.parent) return std::nullopt;
  return as_feature(nodes_[*n.parent]);
}

std::vector<Feature> Taxonomy::children(std::string_view name) const {
  std::vector<Feature> out;
  for (std::size_t c : node(name).children) out.push_back(as_feature(nodes_[c]));
  return out;
}

std::vector<Feature> Taxonomy::roots() const {
  std::vector<Feature> out;
  for (std::size_t r : roots_) out.push_back(as_feature(nodes_[r]));
  return out;
}

ObjectStimulus Taxonomy::make_instance(std::string_view subordinate, std::string_view instance_id) {
  const Node& sub = node(subordinate);
  if (sub.level != GroupLevel::Subordinate)
    throw TaxonomyError(fmt::format("'{}' is a {} category, not a subordinate one", subordinate,
                                    kLevelNames[index_of(sub.level)]));
  const std::size_t sub_id = index_.at(std::string(subordinate));

  if (auto it = index_.find(std::string(instance_id)); it != index_.end()) {
    const Node& existing = nodes_[it->second];
    if (existing.level != GroupLevel::Instance || existing.parent != sub_id)
      throw TaxonomyError(fmt::format("instance '{}' is already attached elsewhere in the taxonomy", instance_id));
  } else {
    add_node(std::string(instance_id), GroupLevel::Instance, sub_id);
  }
  return path_to_root(instance_id);
}

ObjectStimulus Taxonomy::path_to_root(std::string_view instance) const {
  const Node* n = &node(instance);
  if (n->level != GroupLevel::Instance)
    throw TaxonomyError(fmt::format("'{}' is not an instance", instance));
  ObjectStimulus out;
  while (true) {
    out.features[n->level] = as_feature(*n);
    if (!n->parent) break;
    n = &nodes_[*n->parent];
  }
  return out;
}

std::string Taxonomy::fresh_instance_id() const {
  for (std::size_t i = 1;; ++i) {
    std::string id = fmt::format("instance{}", i);
    if (!index_.contains(id)) return id;
  }
}

const Json& default_taxonomy_json() {
  static const Json kDefault = Json::parse(R"({
  "animal": {
    "dog": {"dalmatian": [], "poodle": [], "terrier": []},
    "bird": {"toucan": [], "parrot": [], "eagle": []},
    "cat": {"siamese": [], "tabby": [], "persian": []}
  }
})");
  return kDefault;
}

}  // namespace wordgen
