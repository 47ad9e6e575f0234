#ifndef DOUSHA_RESOLVER_HPP
#define DOUSHA_RESOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dousha/classify.hpp"
#include "dousha/corpus.hpp"

namespace dousha {

// One rule of the resolution cascade, in default precedence order.
enum class RuleId {
  SameSentenceClosest,
  SubjectParticleClosest,
  EmphasisPrevSentence,
  TitlePatternPrevSentence,
  ClosestFallback,
};

// The methods under comparison: the closest-company baseline and the two
// particle/pattern cascades, one per anaphor particle.
enum class MethodId { Scm, Method2Ga, Method3Ha };

struct Resolution {
  std::string anaphor_id;
  std::optional<std::string> predicted;  // company mention id
  std::optional<RuleId> rule;            // present iff predicted is
  std::size_t candidates_considered = 0;
};

struct ResolveOptions {
  // Sentence-distance cap for the subject-particle search; unbounded when
  // absent.
  std::optional<std::size_t> subject_window;
  ClosingChars closing = ClosingChars::defaults();
};

// Company mentions strictly preceding the anaphor, nearest first. A mention
// precedes when its sentence comes earlier, or it shares the sentence and
// ends at or before the anaphor's start.
std::vector<DocumentIndex::Entry> candidates_before(const DocumentIndex& doc,
                                                    const Mention& anaphor);

// Baseline: predict the closest preceding company.
Resolution resolve_scm(const DocumentIndex& doc, const Mention& anaphor);

// Cascade for ga-marked anaphors: same-sentence closest, then closest
// subject-marked company, then emphasis, then the title pattern, then the
// closest-company fallback.
Resolution resolve_method2(const DocumentIndex& doc, const Mention& anaphor,
                           const ResolveOptions& options = {});

// Cascade for ha-marked anaphors: method 2 minus the same-sentence rule.
Resolution resolve_method3(const DocumentIndex& doc, const Mention& anaphor,
                           const ResolveOptions& options = {});

Resolution resolve(const DocumentIndex& doc, const Mention& anaphor, MethodId method,
                   const ResolveOptions& options = {});

// Runs an explicit rule order; the first rule that fires wins. This is the
// engine behind both cascades and the --rule-order experiments.
Resolution resolve_with_rules(const DocumentIndex& doc, const Mention& anaphor,
                              std::span<const RuleId> rules,
                              const ResolveOptions& options = {});

std::span<const RuleId> method2_rule_order();
std::span<const RuleId> method3_rule_order();

std::string_view rule_key(RuleId r);
std::optional<RuleId> parse_rule(std::string_view key);
std::string_view method_key(MethodId m);
std::optional<MethodId> parse_method(std::string_view key);

// Comma-separated rule keys -> rule order; nullopt on unknown or repeated
// rules.
std::optional<std::vector<RuleId>> parse_rule_order(std::string_view csv);

}  // namespace dousha

#endif  // DOUSHA_RESOLVER_HPP
