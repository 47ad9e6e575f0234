#ifndef DOUSHA_PARTICLE_HPP
#define DOUSHA_PARTICLE_HPP

#include <optional>
#include <string_view>

namespace dousha {

// Canonical post-nominal particle keys. Every particle string seen in a
// corpus is normalized into exactly one of these.
enum class Particle {
  Ha,
  Ga,
  No,
  To,
  Deha,
  Niyoruto,
  Kara,
  WoTsuuji,
  TonoAidade,
  Other,
};

// Particles accepted on the anaphor itself. Anaphors carrying anything
// else are rejected when the corpus is loaded.
enum class AnaphorParticle { Ga, Ha };

// Maps a particle string, in Japanese script or romanization, to its
// canonical key. Unknown strings map to Particle::Other; canonical keys map
// to themselves, so the function is idempotent.
Particle normalize_particle(std::string_view raw);

// Canonical key for a particle, e.g. "ha", "wo_tsuuji".
std::string_view particle_key(Particle p);

std::string_view anaphor_particle_key(AnaphorParticle p);

// Ha and Ga are the only particles with an anaphor-side counterpart.
std::optional<AnaphorParticle> to_anaphor_particle(Particle p);
Particle to_particle(AnaphorParticle p);

// Particles that mark a subject or topic position: ha, ga, deha, niyoruto.
bool is_subject_particle(Particle p);

}  // namespace dousha

#endif  // DOUSHA_PARTICLE_HPP
