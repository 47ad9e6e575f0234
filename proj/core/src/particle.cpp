#include "dousha/particle.hpp"

#include <array>
#include <utility>

namespace dousha {

namespace {

struct ParticleName {
  std::string_view script;
  std::string_view key;
  Particle value;
};

constexpr std::array<ParticleName, 9> kParticleTable = {{
    {"は", "ha", Particle::Ha},
    {"が", "ga", Particle::Ga},
    {"の", "no", Particle::No},
    {"と", "to", Particle::To},
    {"では", "deha", Particle::Deha},
    {"によると", "niyoruto", Particle::Niyoruto},
    {"から", "kara", Particle::Kara},
    {"を通じ", "wo_tsuuji", Particle::WoTsuuji},
    {"との間で", "tono_aidade", Particle::TonoAidade},
}};

}  // namespace

Particle normalize_particle(std::string_view raw) {
  for (const auto& entry : kParticleTable) {
    if (raw == entry.script || raw == entry.key) return entry.value;
  }
  if (raw == "other") return Particle::Other;
  return Particle::Other;
}

std::string_view particle_key(Particle p) {
  for (const auto& entry : kParticleTable) {
    if (entry.value == p) return entry.key;
  }
  return "other";
}

std::string_view anaphor_particle_key(AnaphorParticle p) {
  return p == AnaphorParticle::Ga ? "ga" : "ha";
}

std::optional<AnaphorParticle> to_anaphor_particle(Particle p) {
  switch (p) {
    case Particle::Ga:
      return AnaphorParticle::Ga;
    case Particle::Ha:
      return AnaphorParticle::Ha;
    default:
      return std::nullopt;
  }
}

Particle to_particle(AnaphorParticle p) {
  return p == AnaphorParticle::Ga ? Particle::Ga : Particle::Ha;
}

bool is_subject_particle(Particle p) {
  return p == Particle::Ha || p == Particle::Ga || p == Particle::Deha ||
         p == Particle::Niyoruto;
}

}  // namespace dousha
