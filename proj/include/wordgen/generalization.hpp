#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordgen/learner.hpp"
#include "wordgen/taxonomy.hpp"

namespace wordgen {

// How a test object relates to the training subordinate category.
enum class MatchLevel : std::uint8_t { Subordinate = 0, Basic = 1, Superordinate = 2 };

inline constexpr std::array<MatchLevel, 3> kAllMatches = {MatchLevel::Subordinate, MatchLevel::Basic,
                                                           MatchLevel::Superordinate};

std::string_view match_name(MatchLevel m);

template <typename T>
struct PerMatch {
  std::array<T, 3> values{};

  T& operator[](MatchLevel m) { return values[static_cast<std::size_t>(m)]; }
  const T& operator[](MatchLevel m) const { return values[static_cast<std::size_t>(m)]; }

  friend bool operator==(const PerMatch&, const PerMatch&) = default;
};

struct TestObject {
  ObjectStimulus stimulus;
  MatchLevel match = MatchLevel::Subordinate;

  friend bool operator==(const TestObject&, const TestObject&) = default;
};

// Objects per match level; every entry must be positive.
using TestCounts = PerMatch<int>;
inline constexpr TestCounts kDefaultTestCounts{{2, 2, 4}};

struct GenResult {
  PerMatch<double> p_gen;
  PerMatch<double> raw_means;
  Word word;
  Time test_time = 0;

  friend bool operator==(const GenResult&, const GenResult&) = default;
};

// Subordinate matches are fresh instances of the training subordinate; basic
// matches take one sibling subordinate each; superordinate matches take
// subordinates of the other basic categories. Selection follows taxonomy
// declaration order and every object gets a fresh instance.
std::vector<TestObject> build_test_set(Taxonomy& tax, std::string_view training_subordinate,
                                       const TestCounts& counts);

// Product of the per-group meaning probabilities of the object's features.
double object_prob(const Learner& learner, const ObjectStimulus& object, const Word& w, Time t);

GenResult p_gen(const Learner& learner, std::span<const TestObject> test_set, const Word& w, Time t);

}  // namespace wordgen
