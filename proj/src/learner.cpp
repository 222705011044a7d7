#include "wordgen/learner.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wordgen/error.hpp"

namespace wordgen {

void Params::validate() const {
  for (GroupLevel g : kAllGroups) {
    const std::string key(group_key(g));
    if (!(gamma0[g] > 0.0) || !std::isfinite(gamma0[g]))
      throw ConfigError("params.gamma0." + key, fmt::format("must be positive, got {}", gamma0[g]));
    if (!(k[g] > 0.0) || !std::isfinite(k[g]))
      throw ConfigError("params.k." + key, fmt::format("must be positive, got {}", k[g]));
    if (!(d[g] > 0.0) || !std::isfinite(d[g]))
      throw ConfigError("params.d." + key, fmt::format("must be positive, got {}", d[g]));
  }
  if (!(gamma_growth_exponent >= 0.0) || !std::isfinite(gamma_growth_exponent))
    throw ConfigError("params.gamma_growth_exponent",
                      fmt::format("must be non-negative, got {}", gamma_growth_exponent));
}

double decay_exponent(const Params& params, GroupLevel group, double strength) {
  if (!(strength > 0.0)) throw ModelError(fmt::format("decay exponent needs a positive strength, got {}", strength));
  return params.d[group] / strength;
}

Learner::Learner(Params params) : params_(std::move(params)) { params_.validate(); }

double Learner::gamma_t(GroupLevel group) const {
  const auto types = static_cast<double>(ledger_.observed_types[group].size());
  return params_.gamma0[group] * std::pow(std::max(1.0, types), params_.gamma_growth_exponent);
}

void Learner::check_feature(const Feature& f) const {
  if (f.name.empty()) throw ModelError("feature with empty name");
  auto it = ledger_.feature_groups.find(f.name);
  if (it != ledger_.feature_groups.end() && it->second != f.group)
    throw ModelError(fmt::format("feature '{}' is registered in group '{}', not '{}'", f.name,
                                 group_key(it->second), group_key(f.group)));
}

const std::vector<AlignmentRecord>* Learner::history(const Feature& f, const Word& w) const {
  auto wit = ledger_.records.find(w);
  if (wit == ledger_.records.end()) return nullptr;
  auto fit = wit->second.find(f.name);
  if (fit == wit->second.end()) return nullptr;
  return &fit->second;
}

double Learner::association_of(const std::vector<AlignmentRecord>& recs, GroupLevel group, Time t) const {
  if (!recs.empty() && recs.back().time > t)
    throw ModelError(fmt::format("association queried at t={} before a record at t={}", t, recs.back().time));
  double sum = 0.0;
  for (const AlignmentRecord& r : recs) {
    double contribution = r.tokens * r.strength;
    if (params_.decay_enabled) {
      const auto elapsed = static_cast<double>(t - r.time + 1);
      contribution /= std::pow(elapsed, decay_exponent(params_, group, r.strength));
    }
    sum += contribution;
  }
  return sum;
}

double Learner::association(const Feature& f, const Word& w, Time t) const {
  check_feature(f);
  const auto* recs = history(f, w);
  return recs ? association_of(*recs, f.group, t) : 0.0;
}

double Learner::sum_group_association(GroupLevel group, const Word& w, Time t) const {
  auto wit = ledger_.records.find(w);
  if (wit == ledger_.records.end()) return 0.0;
  double sum = 0.0;
  for (const auto& [name, recs] : wit->second)
    if (ledger_.feature_groups.at(name) == group) sum += association_of(recs, group, t);
  return sum;
}

double Learner::meaning_prob(const Feature& f, const Word& w, Time t) const {
  check_feature(f);
  const double gamma = gamma_t(f.group);
  const double numerator = association(f, w, t) + gamma;
  return numerator / (sum_group_association(f.group, w, t) + params_.k[f.group] * gamma);
}

int Learner::prior_tokens(const Feature& f, const Word& w, Time before) const {
  int total = 0;
  if (const auto* recs = history(f, w))
    for (const AlignmentRecord& r : *recs)
      if (r.time < before) total += r.tokens;
  return total;
}

double Learner::novelty(const Feature& f, const Word& w, Time t) const {
  check_feature(f);
  const auto* recs = history(f, w);
  auto at = recs ? std::find_if(recs->begin(), recs->end(), [t](const AlignmentRecord& r) { return r.time == t; })
                 : std::vector<AlignmentRecord>::const_iterator{};
  if (!recs || at == recs->end())
    throw ModelError(fmt::format("no tokens of ('{}', '{}') at t={}", f.name, w, t));
  const int now = at->tokens;
  return static_cast<double>(now) / static_cast<double>(prior_tokens(f, w, t) + now);
}

double Learner::alignment(const Feature& f, const Word& w, std::span<const Word> utterance, Time t,
                          int tokens) const {
  if (utterance.empty()) throw ModelError("alignment over an empty utterance");
  if (std::find(utterance.begin(), utterance.end(), w) == utterance.end())
    throw ModelError(fmt::format("word '{}' is not in the utterance", w));
  if (t <= ledger_.clock)
    throw ModelError(fmt::format("alignment at t={} but the learner is already at t={}", t, ledger_.clock));
  if (tokens < 1) throw ModelError("alignment needs at least one token");

  // Competition among the utterance's words, all evaluated at t-1.
  const Time prev = t - 1;
  double total = 0.0;
  std::set<Word> seen;
  for (const Word& other : utterance)
    if (seen.insert(other).second) total += meaning_prob(f, other, prev);
  double strength = meaning_prob(f, w, prev) / total;

  if (params_.novelty_enabled) {
    const int before = prior_tokens(f, w, t);
    strength *= static_cast<double>(tokens) / static_cast<double>(before + tokens);
  }
  return strength;
}

void Learner::process_input(std::span<const Word> utterance, std::span<const Feature> scene, Time t) {
  if (utterance.empty()) throw ModelError("empty utterance");
  if (scene.empty()) throw ModelError("empty scene");
  if (t <= ledger_.clock)
    throw ModelError(fmt::format("input at t={} does not advance the clock (currently t={})", t, ledger_.clock));

  std::map<Feature, int> multiplicity;
  for (const Feature& f : scene) {
    check_feature(f);
    ++multiplicity[f];
  }
  std::map<std::string, GroupLevel> in_scene;
  for (const auto& [f, n] : multiplicity)
    if (!in_scene.emplace(f.name, f.group).second)
      throw ModelError(fmt::format("feature '{}' appears in two groups in one scene", f.name));

  const std::set<Word> words(utterance.begin(), utterance.end());
  const std::vector<Word> unique_words(words.begin(), words.end());

  // Every strength for this step comes from the pre-update state.
  struct Pending {
    const Word* word;
    const Feature* feature;
    AlignmentRecord record;
  };
  std::vector<Pending> pending;
  for (const Word& w : unique_words)
    for (const auto& [f, n] : multiplicity)
      pending.push_back({&w, &f, {t, alignment(f, w, unique_words, t, n), n}});

  for (const Pending& p : pending) ledger_.records[*p.word][p.feature->name].push_back(p.record);
  for (const auto& [f, n] : multiplicity) {
    ledger_.feature_groups.emplace(f.name, f.group);
    ledger_.observed_types[f.group].insert(f.name);
  }
  vocabulary_.insert(words.begin(), words.end());
  ledger_.clock = t;
}

Json Learner::ledger_json() const {
  Json out = Json::object();
  for (const auto& [word, features] : ledger_.records) {
    Json& per_word = out[word] = Json::object();
    for (const auto& [name, recs] : features) {
      Json arr = Json::array();
      for (const AlignmentRecord& r : recs)
        arr.push_back(Json{{"time", r.time}, {"strength", r.strength}, {"tokens", r.tokens}});
      per_word[name] = std::move(arr);
    }
  }
  return out;
}

}  // namespace wordgen
