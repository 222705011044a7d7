#include <doctest.h>

#include "wordgen/error.hpp"
#include "wordgen/experiment.hpp"

using namespace wordgen;

namespace {

const Taxonomy& animals() {
  static const Taxonomy tax = Taxonomy::from_json(default_taxonomy_json());
  return tax;
}

double basic_of(const GridResult& g, TrainingKind k, Presentation p) {
  return g.at(k, p).result.p_gen[MatchLevel::Basic];
}

}  // namespace

TEST_CASE("names parse back") {
  for (Ablation a : kAllAblations) CHECK(parse_ablation(ablation_name(a)) == a);
  for (Presentation p : kAllPresentations) CHECK(parse_presentation(presentation_name(p)) == p);
  for (auto k : {TrainingKind::OneExample, TrainingKind::ThreeSubordinate, TrainingKind::ThreeBasic,
                 TrainingKind::ThreeSuperordinate})
    CHECK(parse_training(training_name(k)) == k);
  CHECK_FALSE(parse_ablation("none").has_value());
}

TEST_CASE("ablation switches") {
  CHECK(apply_ablation({}, Ablation::Full).decay_enabled);
  CHECK(apply_ablation({}, Ablation::Full).novelty_enabled);
  CHECK(apply_ablation({}, Ablation::DecayOnly).decay_enabled);
  CHECK_FALSE(apply_ablation({}, Ablation::DecayOnly).novelty_enabled);
  CHECK_FALSE(apply_ablation({}, Ablation::AttentionOnly).decay_enabled);
  CHECK(apply_ablation({}, Ablation::AttentionOnly).novelty_enabled);
  CHECK_FALSE(apply_ablation({}, Ablation::Baseline).decay_enabled);
  CHECK_FALSE(apply_ablation({}, Ablation::Baseline).novelty_enabled);
}

TEST_CASE("schedules") {
  Condition c;
  c.training = TrainingKind::ThreeSubordinate;
  c.presentation = Presentation::Simultaneous;
  Schedule s = schedule_for(c);
  CHECK(s.training_times == std::vector<Time>{1});
  CHECK(s.test_time == 2);

  c.presentation = Presentation::Sequential;
  s = schedule_for(c);
  CHECK(s.training_times == std::vector<Time>{1, 2, 3});
  CHECK(s.test_time == 5);

  c.training = TrainingKind::OneExample;
  CHECK(schedule_for(c).training_times == std::vector<Time>{1});
  CHECK(schedule_for(c).test_time == 2);

  c.training = TrainingKind::ThreeSubordinate;
  c.timing.sequential_test_offset = 1;
  CHECK_THROWS_AS(schedule_for(c), ModelError);
}

TEST_CASE("one example is presentation-independent under every ablation") {
  for (Ablation a : kAllAblations) {
    const GenResult sim = run_condition({}, animals(), {TrainingKind::OneExample, Presentation::Simultaneous}, a);
    const GenResult seq = run_condition({}, animals(), {TrainingKind::OneExample, Presentation::Sequential}, a);
    CHECK(sim == seq);
  }
}

TEST_CASE("full model: suspicious coincidence and its reversal") {
  const GridResult g = run_grid({}, animals(), Ablation::Full);
  REQUIRE(g.cells.size() == 4);
  const double one = basic_of(g, TrainingKind::OneExample, Presentation::Simultaneous);
  CHECK(basic_of(g, TrainingKind::ThreeSubordinate, Presentation::Simultaneous) < one);
  CHECK(basic_of(g, TrainingKind::ThreeSubordinate, Presentation::Sequential) > one);
  for (const CellResult& c : g.cells) {
    CHECK(c.result.p_gen[MatchLevel::Subordinate] == 1.0);
    CHECK(c.result.p_gen[MatchLevel::Superordinate] < c.result.p_gen[MatchLevel::Basic]);
  }

  // Values frozen from an independent trace of the same schedules.
  CHECK(one == doctest::Approx(0.585786437626905).epsilon(1e-12));
  CHECK(basic_of(g, TrainingKind::ThreeSubordinate, Presentation::Simultaneous) ==
        doctest::Approx(0.32037724101704074).epsilon(1e-12));
  CHECK(basic_of(g, TrainingKind::ThreeSubordinate, Presentation::Sequential) ==
        doctest::Approx(0.6111111152018522).epsilon(1e-12));
  CHECK(g.at(TrainingKind::ThreeSubordinate, Presentation::Sequential).result.p_gen[MatchLevel::Superordinate] ==
        doctest::Approx(0.14273986949454454).epsilon(1e-12));
}

TEST_CASE("ablation grids") {
  const GridResult full = run_grid({}, animals(), Ablation::Full);
  const GridResult decay = run_grid({}, animals(), Ablation::DecayOnly);
  const GridResult attention = run_grid({}, animals(), Ablation::AttentionOnly);
  const GridResult baseline = run_grid({}, animals(), Ablation::Baseline);

  CHECK(basic_of(decay, TrainingKind::ThreeSubordinate, Presentation::Sequential) ==
        doctest::Approx(0.39610802245359655).epsilon(1e-12));
  CHECK(basic_of(attention, TrainingKind::ThreeSubordinate, Presentation::Sequential) ==
        doctest::Approx(0.3529411764705883).epsilon(1e-12));
  CHECK(basic_of(baseline, TrainingKind::ThreeSubordinate, Presentation::Sequential) == 0.25);

  const AblationFindings f = check_reversal(full, decay, attention, baseline);
  CHECK(f.full.effect_present);
  CHECK(f.full.reversal_present);
  CHECK(f.full_pattern());
  CHECK(f.decay_only_no_flip);
  CHECK(f.attention_only_below_full);
  REQUIRE(f.baseline.has_value());
  CHECK(f.baseline->delta_basic_simultaneous == f.baseline->delta_basic_sequential);
  CHECK(f.baseline_schedule_invariant == true);

  const AblationFindings without_baseline = check_reversal(full, decay, attention);
  CHECK_FALSE(without_baseline.baseline.has_value());
}

TEST_CASE("missing grid cells are reported") {
  GridOptions only_one;
  only_one.trainings = {TrainingKind::OneExample};
  const GridResult partial = run_grid({}, animals(), Ablation::Full, only_one);
  CHECK(partial.cells.size() == 2);
  CHECK_THROWS_AS(reversal_report(partial), ModelError);
  CHECK(partial.find(TrainingKind::ThreeSubordinate, Presentation::Sequential) == nullptr);
}

TEST_CASE("exploratory training conditions run") {
  for (auto k : {TrainingKind::ThreeBasic, TrainingKind::ThreeSuperordinate})
    for (Presentation p : kAllPresentations) {
      const ConditionRun run = run_condition_traced({}, animals(), {k, p}, Ablation::Full);
      CHECK(run.result.p_gen[MatchLevel::Subordinate] == 1.0);
      CHECK(run.learner.ledger().observed_types[GroupLevel::Subordinate].size() == 3);
    }
  const Taxonomy narrow = Taxonomy::from_json(Json::parse(R"({"a": {"b": {"c": [], "d": []}, "e": {"f": []}}})"));
  CHECK_THROWS_AS(run_condition({}, narrow, {TrainingKind::ThreeBasic, Presentation::Simultaneous, "c"},
                                Ablation::Full, TestCounts{{1, 1, 1}}),
                  TaxonomyError);
}

TEST_CASE("conditions do not share learner or taxonomy state") {
  const Taxonomy tax = animals();
  const GenResult first = run_condition({}, tax, {TrainingKind::ThreeSubordinate, Presentation::Sequential},
                                        Ablation::Full);
  const GenResult again = run_condition({}, tax, {TrainingKind::ThreeSubordinate, Presentation::Sequential},
                                        Ablation::Full);
  CHECK(first == again);
  CHECK(tax == animals());
}
