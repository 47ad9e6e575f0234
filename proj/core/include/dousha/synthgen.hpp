#ifndef DOUSHA_SYNTHGEN_HPP
#define DOUSHA_SYNTHGEN_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dousha/corpus.hpp"
#include "dousha/resolver.hpp"

namespace dousha {

// Recipe for one synthetic document: which cascade rule should resolve its
// single anaphor, where the gold referent sits, and how many closer-or-
// farther decoy companies to plant. Decoys always carry non-subject
// particles, so they distract the closest-company baseline, never the
// cascade.
struct GenSpec {
  std::uint64_t seed = 0;
  RuleId target_rule = RuleId::ClosestFallback;
  AnaphorParticle particle = AnaphorParticle::Ha;
  LocationCategory location = LocationCategory::PreviousSentence;
  std::size_t decoy_count = 0;
};

struct GeneratedDocument {
  Document document;
  std::string anaphor_id;
  std::string gold_id;
  // First cascade rule that fires on the document. Matches target_rule
  // except for the one shadowed combination (fallback target, ga anaphor,
  // referent in the same sentence), where the same-sentence rule fires
  // first by construction.
  RuleId expected_rule = RuleId::ClosestFallback;
  MethodId method = MethodId::Method3Ha;  // cascade matching the particle
};

// Rejects combinations no document can realize: the same-sentence rule
// needs a ga anaphor and a same-sentence referent; emphasis and the title
// pattern need the referent in the previous sentence; the subject-particle
// rule is shadowed for ga anaphors with a same-sentence referent; and any
// non-fallback target with a referent beyond the anaphor's sentence needs
// at least one decoy. Throws DoushaError.
void check_genspec(const GenSpec& spec);

// Rule the matching cascade will report for a document built from `spec`.
RuleId effective_rule(const GenSpec& spec);

MethodId method_for(AnaphorParticle particle);

// Deterministic: equal specs produce byte-identical documents.
GeneratedDocument generate_document(const GenSpec& spec);

// One document per spec; doc_ids encode position and seed.
Corpus generate_corpus(std::span<const GenSpec> specs);

// Deterministic sampler over the valid spec space.
GenSpec random_genspec(std::uint64_t seed);

// JSONL, one spec per line. load_genspecs throws DoushaError naming the
// offending line on parse errors, unknown keys' values, or inconsistent
// specs.
std::vector<GenSpec> load_genspecs(std::istream& in);
void serialize_genspecs(std::span<const GenSpec> specs, std::ostream& out);

}  // namespace dousha

#endif  // DOUSHA_SYNTHGEN_HPP
