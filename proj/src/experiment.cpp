#include "wordgen/experiment.hpp"

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

namespace {

constexpr std::array<std::string_view, 2> kPresentationNames = {"simultaneous", "sequential"};
constexpr std::array<std::string_view, 4> kTrainingNames = {"1-example", "3-subordinate", "3-basic",
                                                            "3-superordinate"};
constexpr std::array<std::string_view, 4> kAblationNames = {"full", "decay-only", "attention-only", "baseline"};

template <typename Enum, std::size_t N>
std::optional<Enum> parse_name(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<Enum>(i);
  return std::nullopt;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Subordinate categories the training exemplars are drawn from, one per exemplar.
std::vector<std::string> training_subordinates(const Taxonomy& tax, TrainingKind kind, const std::string& sub) {
  const Feature subf = tax.feature(sub);
  if (subf.group != GroupLevel::Subordinate)
    throw TaxonomyError(fmt::format("training category '{}' is not a subordinate", sub));
  switch (kind) {
    case TrainingKind::OneExample: return {sub};
    case TrainingKind::ThreeSubordinate: return {sub, sub, sub};
    case TrainingKind::ThreeBasic: {
      std::vector<std::string> out{sub};
      for (const Feature& s : tax.children(tax.parent(sub)->name))
        if (s.name != sub && out.size() < 3) out.push_back(s.name);
      if (out.size() < 3) throw TaxonomyError(fmt::format("'{}' needs two sibling subordinates for 3-basic", sub));
      return out;
    }
    case TrainingKind::ThreeSuperordinate: {
      const Feature basic = *tax.parent(sub);
      std::vector<std::string> out{sub};
      for (const Feature& b : tax.children(tax.parent(basic.name)->name))
        if (b.name != basic.name && out.size() < 3) out.push_back(tax.children(b.name).front().name);
      if (out.size() < 3)
        throw TaxonomyError(fmt::format("'{}' needs two other basic categories for 3-superordinate", basic.name));
      return out;
    }
  }
  return {};
}

void append_features(std::vector<Feature>& scene, const ObjectStimulus& object) {
  for (GroupLevel g : kAllGroups) scene.push_back(object.at(g));
}

}  // namespace

std::string_view presentation_name(Presentation p) { return kPresentationNames[static_cast<std::size_t>(p)]; }
std::string_view training_name(TrainingKind k) { return kTrainingNames[static_cast<std::size_t>(k)]; }
std::string_view ablation_name(Ablation a) { return kAblationNames[static_cast<std::size_t>(a)]; }

std::optional<Presentation> parse_presentation(std::string_view s) {
  return parse_name<Presentation>(kPresentationNames, s);
}
std::optional<TrainingKind> parse_training(std::string_view s) { return parse_name<TrainingKind>(kTrainingNames, s); }
std::optional<Ablation> parse_ablation(std::string_view s) { return parse_name<Ablation>(kAblationNames, s); }

int exemplar_count(TrainingKind k) { return k == TrainingKind::OneExample ? 1 : 3; }

Params apply_ablation(Params params, Ablation a) {
  params.decay_enabled = a == Ablation::Full || a == Ablation::DecayOnly;
  params.novelty_enabled = a == Ablation::Full || a == Ablation::AttentionOnly;
  return params;
}

Schedule schedule_for(const Condition& cond) {
  const int n = exemplar_count(cond.training);
  const Timing& tm = cond.timing;
  Schedule s;
  if (cond.presentation == Presentation::Simultaneous || n == 1) {
    s.training_times = {tm.origin};
    s.test_time = tm.origin + tm.simultaneous_test_offset;
  } else {
    for (int i = 0; i < n; ++i) s.training_times.push_back(tm.origin + i);
    s.test_time = tm.origin + tm.sequential_test_offset;
  }
  if (s.test_time < s.training_times.back())
    throw ModelError(fmt::format("test time {} precedes the last training time {}", s.test_time,
                                 s.training_times.back()));
  return s;
}

ConditionRun run_condition_traced(const Params& params, const Taxonomy& tax, const Condition& cond,
                                  Ablation ablation, const TestCounts& counts) {
  Taxonomy local = tax;
  const Schedule schedule = schedule_for(cond);
  const std::vector<Word> utterance{cond.word};

  std::vector<ObjectStimulus> exemplars;
  for (const std::string& sub : training_subordinates(local, cond.training, cond.training_subordinate))
    exemplars.push_back(local.make_instance(sub, local.fresh_instance_id()));

  Learner learner(apply_ablation(params, ablation));
  if (schedule.training_times.size() == 1) {
    std::vector<Feature> scene;
    for (const ObjectStimulus& x : exemplars) append_features(scene, x);
    learner.process_input(utterance, scene, schedule.training_times.front());
  } else {
    for (std::size_t i = 0; i < exemplars.size(); ++i) {
      std::vector<Feature> scene;
      append_features(scene, exemplars[i]);
      learner.process_input(utterance, scene, schedule.training_times[i]);
    }
  }

  std::vector<TestObject> test_set = build_test_set(local, cond.training_subordinate, counts);
  GenResult result = p_gen(learner, test_set, cond.word, schedule.test_time);
  return {std::move(result), std::move(learner), std::move(test_set)};
}

GenResult run_condition(const Params& params, const Taxonomy& tax, const Condition& cond, Ablation ablation,
                        const TestCounts& counts) {
  return run_condition_traced(params, tax, cond, ablation, counts).result;
}

const CellResult* GridResult::find(TrainingKind k, Presentation p) const {
  for (const CellResult& c : cells)
    if (c.training == k && c.presentation == p) return &c;
  return nullptr;
}

const CellResult& GridResult::at(TrainingKind k, Presentation p) const {
  if (const CellResult* c = find(k, p)) return *c;
  throw ModelError(fmt::format("grid for '{}' has no cell ({}, {})", ablation_name(ablation), training_name(k),
                               presentation_name(p)));
}

GridResult run_grid(const Params& params, const Taxonomy& tax, Ablation ablation, const GridOptions& options) {
  GridResult grid;
  grid.ablation = ablation;
  for (TrainingKind kind : options.trainings) {
    for (Presentation p : kAllPresentations) {
      Condition cond{kind, p, options.training_subordinate, options.word, options.timing};
      ConditionRun run = run_condition_traced(params, tax, cond, ablation, options.counts);
      grid.cells.push_back({kind, p, ablation, std::move(run.result), run.learner.ledger_json()});
    }
  }
  return grid;
}

ReversalReport reversal_report(const GridResult& grid) {
  auto basic = [&grid](TrainingKind k, Presentation p) { return grid.at(k, p).result.p_gen[MatchLevel::Basic]; };
  ReversalReport r;
  r.delta_basic_simultaneous = basic(TrainingKind::ThreeSubordinate, Presentation::Simultaneous) -
                               basic(TrainingKind::OneExample, Presentation::Simultaneous);
  r.delta_basic_sequential = basic(TrainingKind::ThreeSubordinate, Presentation::Sequential) -
                             basic(TrainingKind::OneExample, Presentation::Sequential);
  r.effect_present = r.delta_basic_simultaneous < 0.0;
  r.reversal_present = r.delta_basic_sequential > 0.0;
  return r;
}

AblationFindings check_reversal(const GridResult& full, const GridResult& decay_only,
                                const GridResult& attention_only) {
  AblationFindings f;
  f.full = reversal_report(full);
  f.decay_only = reversal_report(decay_only);
  f.attention_only = reversal_report(attention_only);
  f.decay_only_no_flip = sign_of(f.decay_only.delta_basic_simultaneous) == sign_of(f.decay_only.delta_basic_sequential);
  const auto seq3 = [](const GridResult& g) {
    return g.at(TrainingKind::ThreeSubordinate, Presentation::Sequential).result.p_gen[MatchLevel::Basic];
  };
  f.attention_only_below_full = seq3(attention_only) < seq3(full);
  return f;
}

AblationFindings check_reversal(const GridResult& full, const GridResult& decay_only,
                                const GridResult& attention_only, const GridResult& baseline) {
  AblationFindings f = check_reversal(full, decay_only, attention_only);
  f.baseline = reversal_report(baseline);
  bool invariant = true;
  for (TrainingKind k : {TrainingKind::OneExample, TrainingKind::ThreeSubordinate}) {
    const GenResult& sim = baseline.at(k, Presentation::Simultaneous).result;
    const GenResult& seq = baseline.at(k, Presentation::Sequential).result;
    invariant = invariant && sim.p_gen == seq.p_gen && sim.raw_means == seq.raw_means;
  }
  f.baseline_schedule_invariant = invariant;
  return f;
}

}  // namespace wordgen
