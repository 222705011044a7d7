#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordgen/generalization.hpp"
#include "wordgen/learner.hpp"
#include "wordgen/taxonomy.hpp"

namespace wordgen {

enum class Presentation : std::uint8_t { Simultaneous, Sequential };

// How the training exemplars are spread over the taxonomy. Only OneExample
// and ThreeSubordinate take part in the reversal check; the other two are
// accepted for exploratory runs.
enum class TrainingKind : std::uint8_t { OneExample, ThreeSubordinate, ThreeBasic, ThreeSuperordinate };

enum class Ablation : std::uint8_t { Full, DecayOnly, AttentionOnly, Baseline };

inline constexpr std::array<Presentation, 2> kAllPresentations = {Presentation::Simultaneous,
                                                                  Presentation::Sequential};
inline constexpr std::array<Ablation, 4> kAllAblations = {Ablation::Full, Ablation::DecayOnly,
                                                          Ablation::AttentionOnly, Ablation::Baseline};

std::string_view presentation_name(Presentation p);
std::string_view training_name(TrainingKind k);
std::string_view ablation_name(Ablation a);
std::optional<Presentation> parse_presentation(std::string_view s);
std::optional<TrainingKind> parse_training(std::string_view s);
std::optional<Ablation> parse_ablation(std::string_view s);

int exemplar_count(TrainingKind k);

// Params with the decay/novelty switches set for the ablation.
Params apply_ablation(Params params, Ablation a);

// Absolute time origin plus test offsets. Simultaneous training happens at
// `origin`; sequential training at origin, origin+1, ...; tests sit at the
// given offsets from `origin`.
struct Timing {
  Time origin = 1;
  Time simultaneous_test_offset = 1;
  Time sequential_test_offset = 4;

  friend bool operator==(const Timing&, const Timing&) = default;
};

struct Condition {
  TrainingKind training = TrainingKind::OneExample;
  Presentation presentation = Presentation::Simultaneous;
  std::string training_subordinate = "dalmatian";
  Word word = "fep";
  Timing timing;
};

// Training times (one entry per process_input call) and the test time.
struct Schedule {
  std::vector<Time> training_times;
  Time test_time = 0;
};

// A single exemplar has no sequence, so both presentations share the
// simultaneous schedule.
Schedule schedule_for(const Condition& cond);

struct ConditionRun {
  GenResult result;
  Learner learner;
  std::vector<TestObject> test_set;
};

// Trains a fresh learner on a private copy of `tax` and scores the test set.
ConditionRun run_condition_traced(const Params& params, const Taxonomy& tax, const Condition& cond,
                                  Ablation ablation, const TestCounts& counts = kDefaultTestCounts);
GenResult run_condition(const Params& params, const Taxonomy& tax, const Condition& cond, Ablation ablation,
                        const TestCounts& counts = kDefaultTestCounts);

struct CellResult {
  TrainingKind training;
  Presentation presentation;
  Ablation ablation;
  GenResult result;
  Json ledger;
};

struct GridResult {
  Ablation ablation = Ablation::Full;
  std::vector<CellResult> cells;  // training-major, then presentation

  const CellResult* find(TrainingKind k, Presentation p) const;
  const CellResult& at(TrainingKind k, Presentation p) const;  // throws if missing
};

struct GridOptions {
  std::vector<TrainingKind> trainings{TrainingKind::OneExample, TrainingKind::ThreeSubordinate};
  std::string training_subordinate = "dalmatian";
  Word word = "fep";
  Timing timing;
  TestCounts counts = kDefaultTestCounts;
};

GridResult run_grid(const Params& params, const Taxonomy& tax, Ablation ablation,
                    const GridOptions& options = {});

// Basic-level deltas (3-subordinate minus 1-example) for one ablation.
struct ReversalReport {
  double delta_basic_simultaneous = 0.0;
  double delta_basic_sequential = 0.0;
  bool effect_present = false;
  bool reversal_present = false;
};

ReversalReport reversal_report(const GridResult& grid);

struct AblationFindings {
  ReversalReport full;
  ReversalReport decay_only;
  ReversalReport attention_only;
  // Decay alone leaves the basic delta with the same sign in both modes.
  bool decay_only_no_flip = false;
  // Attention alone keeps sequential 3-subordinate basic generalization below the full model.
  bool attention_only_below_full = false;
  // Set only when a baseline grid was supplied.
  std::optional<ReversalReport> baseline;
  std::optional<bool> baseline_schedule_invariant;

  bool full_pattern() const { return full.effect_present && full.reversal_present; }
};

AblationFindings check_reversal(const GridResult& full, const GridResult& decay_only,
                                const GridResult& attention_only);
AblationFindings check_reversal(const GridResult& full, const GridResult& decay_only,
                                const GridResult& attention_only, const GridResult& baseline);

}  // namespace wordgen
