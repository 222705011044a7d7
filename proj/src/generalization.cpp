#include "wordgen/generalization.hpp"

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

std::string_view match_name(MatchLevel m) {
  switch (m) {
    case MatchLevel::Subordinate: return "subordinate";
    case MatchLevel::Basic: return "basic";
    case MatchLevel::Superordinate: return "superordinate";
  }
  return "?";
}

std::vector<TestObject> build_test_set(Taxonomy& tax, std::string_view training_subordinate,
                                       const TestCounts& counts) {
  for (MatchLevel m : kAllMatches)
    if (counts[m] < 1)
      throw ModelError(fmt::format("test count for {} matches must be positive, got {}", match_name(m), counts[m]));

  const Feature sub = tax.feature(training_subordinate);
  if (sub.group != GroupLevel::Subordinate)
    throw TaxonomyError(fmt::format("'{}' is not a subordinate category", training_subordinate));
  const Feature basic = *tax.parent(sub.name);
  const Feature super = *tax.parent(basic.name);

  std::vector<Feature> siblings;
  for (const Feature& s : tax.children(basic.name))
    if (s.name != sub.name) siblings.push_back(s);

  std::vector<Feature> cousins;
  for (const Feature& b : tax.children(super.name))
    if (b.name != basic.name)
      for (const Feature& s : tax.children(b.name)) cousins.push_back(s);

  if (static_cast<std::size_t>(counts[MatchLevel::Basic]) > siblings.size())
    throw TaxonomyError(fmt::format("{} basic matches requested but '{}' has only {} sibling subordinates",
                                    counts[MatchLevel::Basic], sub.name, siblings.size()));
  if (static_cast<std::size_t>(counts[MatchLevel::Superordinate]) > cousins.size())
    throw TaxonomyError(fmt::format("{} superordinate matches requested but only {} subordinates lie outside '{}'",
                                    counts[MatchLevel::Superordinate], cousins.size(), basic.name));

  std::vector<TestObject> out;
  auto add = [&](const Feature& s, MatchLevel m) {
    out.push_back({tax.make_instance(s.name, tax.fresh_instance_id()), m});
  };
  for (int i = 0; i < counts[MatchLevel::Subordinate]; ++i) add(sub, MatchLevel::Subordinate);
  for (int i = 0; i < counts[MatchLevel::Basic]; ++i) add(siblings[i], MatchLevel::Basic);
  for (int i = 0; i < counts[MatchLevel::Superordinate]; ++i) add(cousins[i], MatchLevel::Superordinate);
  return out;
}

double object_prob(const Learner& learner, const ObjectStimulus& object, const Word& w, Time t) {
  double p = 1.0;
  for (GroupLevel g : kAllGroups) p *= learner.meaning_prob(object.at(g), w, t);
  return p;
}

GenResult p_gen(const Learner& learner, std::span<const TestObject> test_set, const Word& w, Time t) {
  if (test_set.empty()) throw ModelError("empty test set");

  PerMatch<double> sums;
  PerMatch<int> counts;
  for (const TestObject& y : test_set) {
    sums[y.match] += object_prob(learner, y.stimulus, w, t);
    ++counts[y.match];
  }
  if (counts[MatchLevel::Subordinate] == 0)
    throw ModelError("test set has no subordinate matches to scale by");

  GenResult result;
  result.word = w;
  result.test_time = t;
  for (MatchLevel m : kAllMatches)
    result.raw_means[m] = counts[m] > 0 ? sums[m] / counts[m] : 0.0;
  const double scale = result.raw_means[MatchLevel::Subordinate];
  for (MatchLevel m : kAllMatches) result.p_gen[m] = result.raw_means[m] / scale;
  return result;
}

}  // namespace wordgen
