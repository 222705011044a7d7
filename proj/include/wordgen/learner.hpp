#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wordgen/taxonomy.hpp"

namespace wordgen {

using Time = std::int64_t;
using Word = std::string;

struct Params {
  // A priori smoothing per group, increasing with depth for adults.
  PerGroup<double> gamma0{{0.2, 0.5, 1.0, 1.2}};
  // Expected number of features per group.
  PerGroup<double> k{{100.0, 100.0, 100.0, 100.0}};
  // Decay constants, increasing with depth.
  PerGroup<double> d{{0.01, 0.05, 0.5, 0.8}};
  // gamma^t = gamma0 * max(1, types)^gamma_growth_exponent
  double gamma_growth_exponent = 1.0;
  bool decay_enabled = true;
  bool novelty_enabled = true;

  // Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

struct AlignmentRecord {
  Time time = 0;
  double strength = 0.0;
  int tokens = 1;

  friend bool operator==(const AlignmentRecord&, const AlignmentRecord&) = default;
};

// Timestamped alignment history for every word-feature pair seen so far.
struct AssociationLedger {
  // word -> feature name -> records, strictly increasing in time
  std::map<Word, std::map<std::string, std::vector<AlignmentRecord>>> records;
  // feature name -> group, for every feature ever observed
  std::map<std::string, GroupLevel> feature_groups;
  PerGroup<std::set<std::string>> observed_types;
  Time clock = 0;

  friend bool operator==(const AssociationLedger&, const AssociationLedger&) = default;
};

// Exponent applied to the elapsed-time divisor of one alignment: d_G / strength.
double decay_exponent(const Params& params, GroupLevel group, double strength);

// Incremental cross-situational learner with group-wise smoothed meanings,
// per-group forgetting, and attention to novel word-feature pairings.
//
// All read queries are const and do not touch shared state, so a frozen
// learner may be queried from several threads. process_input() needs
// exclusive access.
class Learner {
 public:
  explicit Learner(Params params);

  const Params& params() const { return params_; }
  const AssociationLedger& ledger() const { return ledger_; }
  const std::set<Word>& vocabulary() const { return vocabulary_; }
  Time clock() const { return ledger_.clock; }

  double gamma_t(GroupLevel group) const;

  // Smoothed P_t(f | w), normalized over f's feature group.
  double meaning_prob(const Feature& f, const Word& w, Time t) const;

  // Decayed (or plain, with decay off) association score at time t.
  double association(const Feature& f, const Word& w, Time t) const;

  // Token share of time t among all co-occurrences of (f, w) up to t.
  // Requires that (f, w) was recorded at exactly t.
  double novelty(const Feature& f, const Word& w, Time t) const;

  // Strength the pair would receive if observed at t with `tokens` copies of f:
  // the competition term over `utterance` using current probabilities, times
  // the novelty factor when enabled. Requires t > clock().
  double alignment(const Feature& f, const Word& w, std::span<const Word> utterance, Time t,
                   int tokens = 1) const;

  // One learning step. `scene` is a multiset: repeated features are the
  // co-timed tokens of a simultaneous presentation.
  void process_input(std::span<const Word> utterance, std::span<const Feature> scene, Time t);

  // word -> feature -> [{time, strength, tokens}, ...]
  Json ledger_json() const;

 private:
  const std::vector<AlignmentRecord>* history(const Feature& f, const Word& w) const;
  void check_feature(const Feature& f) const;
  int prior_tokens(const Feature& f, const Word& w, Time before) const;
  double sum_group_association(GroupLevel group, const Word& w, Time t) const;
  double association_of(const std::vector<AlignmentRecord>& recs, GroupLevel group, Time t) const;

  Params params_;
  AssociationLedger ledger_;
  std::set<Word> vocabulary_;
};

}  // namespace wordgen
