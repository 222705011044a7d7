#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace wordgen {

using Json = nlohmann::ordered_json;

// Feature groups, ordered from most abstract to most specific.
enum class GroupLevel : std::uint8_t { Superordinate = 0, Basic = 1, Subordinate = 2, Instance = 3 };

inline constexpr std::size_t kGroupCount = 4;
inline constexpr std::array<GroupLevel, kGroupCount> kAllGroups = {
    GroupLevel::Superordinate, GroupLevel::Basic, GroupLevel::Subordinate, GroupLevel::Instance};

constexpr std::size_t index_of(GroupLevel g) { return static_cast<std::size_t>(g); }

// Short keys used in config files: super, basic, subord, inst.
std::string_view group_key(GroupLevel g);
std::optional<GroupLevel> parse_group_key(std::string_view key);

// Fixed-size table indexed by feature group.
template <typename T>
struct PerGroup {
  std::array<T, kGroupCount> values{};

  T& operator[](GroupLevel g) { return values[index_of(g)]; }
  const T& operator[](GroupLevel g) const { return values[index_of(g)]; }

  friend bool operator==(const PerGroup&, const PerGroup&) = default;
};

struct Feature {
  std::string name;
  GroupLevel group = GroupLevel::Instance;

  friend auto operator<=>(const Feature&, const Feature&) = default;
};

// One feature per group, forming a root-to-leaf path of the taxonomy.
struct ObjectStimulus {
  PerGroup<Feature> features;

  const Feature& at(GroupLevel g) const { return features[g]; }

  friend bool operator==(const ObjectStimulus&, const ObjectStimulus&) = default;
};

// Four-level strict tree of categories. Instances are registered lazily by
// make_instance(); everything else is fixed at construction.
//
// Config form: nested objects for superordinate -> basic -> subordinate,
// and an array of instance names (possibly empty) under each subordinate:
//
//   {"animal": {"dog": {"dalmatian": ["instance1"], "poodle": []}}}
class Taxonomy {
 public:
  // Validates and builds. Throws TaxonomyError on wrong depth, duplicate or
  // empty names, and categories with no children.
  static Taxonomy from_json(const Json& spec);
  Json to_json() const;

  std::optional<Feature> find(std::string_view name) const;
  Feature feature(std::string_view name) const;  // throws if absent
  std::optional<Feature> parent(std::string_view name) const;
  // Children in declaration order.
  std::vector<Feature> children(std::string_view name) const;
  std::vector<Feature> roots() const;
  std::size_t size() const { return nodes_.size(); }

  // Returns {instance, subordinate, basic, superordinate} and registers the
  // instance under `subordinate` if it is new.
  ObjectStimulus make_instance(std::string_view subordinate, std::string_view instance_id);

  // Walks parent links from any feature up to the root.
  ObjectStimulus path_to_root(std::string_view instance) const;

  // Smallest "instanceN" (N >= 1) not yet used by any node.
  std::string fresh_instance_id() const;

  friend bool operator==(const Taxonomy& a, const Taxonomy& b) { return a.to_json() == b.to_json(); }

 private:
  struct Node {
    std::string name;
    GroupLevel level;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  std::size_t add_node(std::string name, GroupLevel level, std::optional<std::size_t> parent);
  const Node& node(std::string_view name) const;
  Feature as_feature(const Node& n) const { return {n.name, n.level}; }

  std::vector<Node> nodes_;
  std::vector<std::size_t> roots_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Alias kept for symmetry with the other module entry points.
inline Taxonomy build_taxonomy(const Json& spec) { return Taxonomy::from_json(spec); }

// The bundled animal taxonomy: animal -> {dog, bird, cat} x 3 subordinates.
const Json& default_taxonomy_json();

}  // namespace wordgen
