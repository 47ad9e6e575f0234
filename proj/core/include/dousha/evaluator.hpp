#ifndef DOUSHA_EVALUATOR_HPP
#define DOUSHA_EVALUATOR_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "dousha/classify.hpp"
#include "dousha/corpus.hpp"
#include "dousha/resolver.hpp"

namespace dousha {

struct TallyCounts {
  std::size_t correct = 0;
  std::size_t total = 0;
};

struct EvalReport {
  MethodId method = MethodId::Scm;
  AnaphorParticle particle = AnaphorParticle::Ga;
  std::size_t correct = 0;
  std::size_t total = 0;
  // Absent when the corpus holds no anaphor of this particle.
  std::optional<double> accuracy;
  // Buckets keyed by the gold referent's location.
  std::map<LocationCategory, TallyCounts> by_location;
  // Keyed by the rule that produced the prediction; nullopt collects the
  // anaphors left unresolved, so bucket totals always sum to `total`.
  std::map<std::optional<RuleId>, TallyCounts> by_rule;
};

// Scores `method` over every gold-linked anaphor of `particle`. A missing
// prediction counts as incorrect. Throws DoushaError when the method cannot
// process the particle (the ga cascade on ha, or vice versa) or when an
// anaphor of the particle lacks a gold_ref.
EvalReport evaluate(const Corpus& corpus, MethodId method, AnaphorParticle particle,
                    const ResolveOptions& options = {});

// The baseline and the matching cascade, per particle.
struct MethodComparison {
  EvalReport scm_ga;
  EvalReport cascade_ga;
  EvalReport scm_ha;
  EvalReport cascade_ha;
};

MethodComparison compare_methods(const Corpus& corpus, const ResolveOptions& options = {});

std::string render_report(const EvalReport& report, bool by_location = false,
                          bool by_rule = false);
std::string render_comparison(const MethodComparison& cmp);

// JSON record mirroring render_report.
std::string eval_record(const EvalReport& report, bool by_location = false,
                        bool by_rule = false);
std::string comparison_records(const MethodComparison& cmp);

}  // namespace dousha

#endif  // DOUSHA_EVALUATOR_HPP
