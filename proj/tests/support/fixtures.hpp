#ifndef DOUSHA_TESTS_FIXTURES_HPP
#define DOUSHA_TESTS_FIXTURES_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "dousha/corpus.hpp"

namespace dousha::testing {

// The two-sentence fried-chicken/pizza article: the tie-up partner sits
// closest to the anaphor, the gold referent one step further back but
// topic-marked. Mentions: m-kfc (company + ha), m-pizzahut (company + to),
// m-dousha (ha anaphor, gold m-kfc).
Document kfc_document();
Corpus worked_example_corpus();

// Hand-built corpus with one document per anaphor case of the reference
// location/context inventory: 42 ga cases and 64 ha cases. Adversarial
// documents plant a decoy company between the gold referent and the
// anaphor, so the closest-company baseline picks the decoy while the
// cascade stays correct.
Corpus golden_corpus();

// Hand-derived facts about golden_corpus(), frozen here so tests never
// recompute them with the code under test.
struct GoldenFacts {
  std::size_t ga_total = 42;
  std::size_t ha_total = 64;
  std::size_t scm_ga_correct = 23;
  std::size_t scm_ha_correct = 12;
  std::size_t adversarial_ga = 19;  // docs where the baseline picks a decoy
  std::size_t adversarial_ha = 52;
  std::size_t distant_total = 40;
  std::size_t distant_ha_marked = 37;
};
GoldenFacts golden_facts();

// Expected nonzero profile cells for golden_corpus(), counted by hand.
using CellMap = std::map<std::pair<LocationCategory, ContextCategory>, std::size_t>;
CellMap golden_cells(AnaphorParticle particle);

// Expected per-rule tallies for the cascades on golden_corpus(): pairs of
// (rule fired, number of documents), again counted by hand.
struct GoldenRuleCounts {
  std::size_t same_sentence = 0;
  std::size_t subject_particle = 0;
  std::size_t emphasis = 0;
  std::size_t title_pattern = 0;
  std::size_t fallback = 0;
};
GoldenRuleCounts golden_rule_counts(AnaphorParticle particle);

}  // namespace dousha::testing

#endif  // DOUSHA_TESTS_FIXTURES_HPP
