#ifndef DOUSHA_PROFILER_HPP
#define DOUSHA_PROFILER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "dousha/classify.hpp"
#include "dousha/corpus.hpp"

namespace dousha {

// Count matrix over (location, context) of gold referents for one anaphor
// particle — the shape of the corpus analysis tables.
struct LocationContextProfile {
  AnaphorParticle particle = AnaphorParticle::Ga;
  std::map<std::pair<LocationCategory, ContextCategory>, std::size_t> counts;
  std::size_t total = 0;

  std::size_t at(LocationCategory loc, ContextCategory ctx) const;
  std::size_t location_subtotal(LocationCategory loc) const;
};

// Gold referents two or more sentences back (every category beyond the
// previous sentence, paragraph crossings included), and how many of those
// companies are marked with ha. The particle decides the ha_marked count,
// so a topic-of-paragraph referent written "company + ha" still counts.
struct DistantReferentStat {
  std::size_t distant_total = 0;
  std::size_t ha_marked = 0;
};

// Profiles every gold-linked anaphor with the given particle. Throws
// DoushaError, naming the document, when such an anaphor lacks a gold_ref.
LocationContextProfile profile(const Corpus& corpus, AnaphorParticle particle,
                               const ClosingChars& closing = ClosingChars::defaults());

// Pools both particles. Same gold-link requirement as profile().
DistantReferentStat distant_particle_stat(const Corpus& corpus);

// Plain-text table grouped by location with per-location subtotals;
// zero-count cells are omitted. Deterministic byte-for-byte.
std::string render_profile(const LocationContextProfile& profile);

// One JSON record per nonzero cell, in canonical category order.
std::string profile_records(const LocationContextProfile& profile);

std::string render_distant_stat(const DistantReferentStat& stat);
std::string distant_stat_record(const DistantReferentStat& stat);

}  // namespace dousha

#endif  // DOUSHA_PROFILER_HPP
