#include <doctest.h>

#include <cmath>

#include "support/oracle.hpp"
#include "wordgen/error.hpp"
#include "wordgen/experiment.hpp"
#include "wordgen/generalization.hpp"

using namespace wordgen;

namespace {

Taxonomy fig_taxonomy() {
  return Taxonomy::from_json(
      Json::parse(R"({"animal": {"dog": {"dalmatian": [], "poodle": []}, "bird": {"toucan": []}}})"));
}

const std::vector<Word> kFep{"fep"};

Learner one_example_learner(Taxonomy& tax, const Params& p = {}) {
  Learner l(p);
  const ObjectStimulus x = tax.make_instance("dalmatian", tax.fresh_instance_id());
  std::vector<Feature> scene;
  for (GroupLevel g : kAllGroups) scene.push_back(x.at(g));
  l.process_input(kFep, scene, 1);
  return l;
}

}  // namespace

TEST_CASE("test set follows declaration order with fresh instances") {
  Taxonomy tax = fig_taxonomy();
  for (int i = 1; i <= 3; ++i) tax.make_instance("dalmatian", tax.fresh_instance_id());
  const auto set = build_test_set(tax, "dalmatian", TestCounts{{1, 1, 1}});
  REQUIRE(set.size() == 3);

  auto names = [](const TestObject& y) {
    return std::vector<std::string>{y.stimulus.at(GroupLevel::Instance).name,
                                    y.stimulus.at(GroupLevel::Subordinate).name,
                                    y.stimulus.at(GroupLevel::Basic).name,
                                    y.stimulus.at(GroupLevel::Superordinate).name};
  };
  CHECK(names(set[0]) == std::vector<std::string>{"instance4", "dalmatian", "dog", "animal"});
  CHECK(names(set[1]) == std::vector<std::string>{"instance5", "poodle", "dog", "animal"});
  CHECK(names(set[2]) == std::vector<std::string>{"instance6", "toucan", "bird", "animal"});
  CHECK(set[0].match == MatchLevel::Subordinate);
  CHECK(set[1].match == MatchLevel::Basic);
  CHECK(set[2].match == MatchLevel::Superordinate);
}

TEST_CASE("test set invariants on the bundled taxonomy") {
  Taxonomy tax = Taxonomy::from_json(default_taxonomy_json());
  const Feature train = tax.feature("dalmatian");
  const auto set = build_test_set(tax, "dalmatian", kDefaultTestCounts);
  CHECK(set.size() == 8);
  for (const TestObject& y : set) {
    const auto& s = y.stimulus;
    CHECK(s.at(GroupLevel::Superordinate).name == "animal");
    switch (y.match) {
      case MatchLevel::Subordinate: CHECK(s.at(GroupLevel::Subordinate) == train); break;
      case MatchLevel::Basic:
        CHECK(s.at(GroupLevel::Subordinate) != train);
        CHECK(s.at(GroupLevel::Basic).name == "dog");
        break;
      case MatchLevel::Superordinate: CHECK(s.at(GroupLevel::Basic).name != "dog"); break;
    }
  }
  // Fresh instances are all distinct.
  std::set<std::string> ids;
  for (const TestObject& y : set) ids.insert(y.stimulus.at(GroupLevel::Instance).name);
  CHECK(ids.size() == set.size());
}

TEST_CASE("test set errors") {
  Taxonomy tax = fig_taxonomy();
  CHECK_THROWS_AS(build_test_set(tax, "dalmatian", TestCounts{{0, 0, 0}}), ModelError);
  CHECK_THROWS_AS(build_test_set(tax, "dalmatian", TestCounts{{1, 2, 1}}), TaxonomyError);
  CHECK_THROWS_AS(build_test_set(tax, "dalmatian", TestCounts{{1, 1, 2}}), TaxonomyError);
  CHECK_THROWS_AS(build_test_set(tax, "dog", TestCounts{{1, 1, 1}}), TaxonomyError);
}

TEST_CASE("object_prob") {
  Taxonomy tax = fig_taxonomy();
  const auto set = build_test_set(tax, "dalmatian", TestCounts{{2, 1, 1}});

  SUBCASE("untrained word is pure smoothing") {
    const Learner l{Params{}};
    CHECK(object_prob(l, set[0].stimulus, "fep", 1) == doctest::Approx(1e-8).epsilon(1e-12));
  }
  SUBCASE("objects differing only in fresh instances agree") {
    Taxonomy t2 = fig_taxonomy();
    const Learner l = one_example_learner(t2);
    const auto fresh = build_test_set(t2, "dalmatian", TestCounts{{2, 1, 1}});
    CHECK(fresh[0].stimulus.at(GroupLevel::Instance) != fresh[1].stimulus.at(GroupLevel::Instance));
    CHECK(object_prob(l, fresh[0].stimulus, "fep", 2) == object_prob(l, fresh[1].stimulus, "fep", 2));
  }
  SUBCASE("subordinate match after 1-example training") {
    Taxonomy t2 = fig_taxonomy();
    const Learner l = one_example_learner(t2);
    const auto trained = build_test_set(t2, "dalmatian", TestCounts{{1, 1, 1}});
    const auto tr = oracle::one_example_closed_form(Params{});
    CHECK(object_prob(l, trained[0].stimulus, "fep", 2) ==
          doctest::Approx(tr.raw[MatchLevel::Subordinate]).epsilon(1e-12));
    // Frozen from an independent trace.
    CHECK(object_prob(l, trained[0].stimulus, "fep", 2) ==
          doctest::Approx(2.7577804143667453e-07).epsilon(1e-12));
  }
}

TEST_CASE("p_gen") {
  Taxonomy tax = fig_taxonomy();
  Learner l = one_example_learner(tax);
  const auto set = build_test_set(tax, "dalmatian", TestCounts{{1, 1, 1}});
  const GenResult r = p_gen(l, set, "fep", 2);
  CHECK(r.p_gen[MatchLevel::Subordinate] == 1.0);
  CHECK(r.p_gen[MatchLevel::Superordinate] < r.p_gen[MatchLevel::Basic]);
  CHECK(r.p_gen[MatchLevel::Basic] < 1.0);
  for (MatchLevel m : kAllMatches)
    CHECK(r.p_gen[m] == doctest::Approx(r.raw_means[m] / r.raw_means[MatchLevel::Subordinate]).epsilon(1e-15));

  CHECK_THROWS_AS(p_gen(l, std::vector<TestObject>{}, "fep", 2), ModelError);
  const std::vector<TestObject> no_sub{set[1], set[2]};
  CHECK_THROWS_AS(p_gen(l, no_sub, "fep", 2), ModelError);
}

TEST_CASE("instance factor cancels in p_gen") {
  for (TrainingKind kind : {TrainingKind::OneExample, TrainingKind::ThreeSubordinate})
    for (Presentation pres : kAllPresentations) {
      const Taxonomy tax = Taxonomy::from_json(default_taxonomy_json());
      const Condition cond{kind, pres};
      const ConditionRun run = run_condition_traced(Params{}, tax, cond, Ablation::Full);
      const Time t = run.result.test_time;

      PerMatch<double> sums;
      PerMatch<int> counts;
      for (const TestObject& y : run.test_set) {
        double p = 1.0;
        for (GroupLevel g : {GroupLevel::Superordinate, GroupLevel::Basic, GroupLevel::Subordinate})
          p *= run.learner.meaning_prob(y.stimulus.at(g), "fep", t);
        sums[y.match] += p;
        ++counts[y.match];
      }
      const double sub = sums[MatchLevel::Subordinate] / counts[MatchLevel::Subordinate];
      for (MatchLevel m : kAllMatches)
        CHECK(sums[m] / counts[m] / sub == doctest::Approx(run.result.p_gen[m]).epsilon(1e-12));
    }
}

TEST_CASE("raising basic-level smoothing does not reduce basic generalization") {
  const Taxonomy tax = Taxonomy::from_json(default_taxonomy_json());
  // Basic and subordinate matches share the basic feature, so the basic
  // p_gen is flat in gamma0_basic up to rounding; superordinate rises.
  double prev_basic = -1.0, prev_super = -1.0;
  for (double g : {0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    Params p;
    p.gamma0[GroupLevel::Basic] = g;
    const GenResult r = run_condition(p, tax, Condition{}, Ablation::Full);
    CHECK(r.p_gen[MatchLevel::Basic] >= prev_basic * (1.0 - 1e-12));
    CHECK(r.p_gen[MatchLevel::Superordinate] > prev_super);
    prev_basic = r.p_gen[MatchLevel::Basic];
    prev_super = r.p_gen[MatchLevel::Superordinate];
  }
}
