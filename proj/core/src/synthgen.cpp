#include "dousha/synthgen.hpp"

#include <cstdio>
#include <iterator>
#include <random>
#include <sstream>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "dousha/builder.hpp"

namespace dousha {

namespace {

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
  std::mt19937_64 eng;
};

constexpr const char* kCompanies[] = {
    "Aoba Denki",    "Hoshino Seiyaku",  "Kawakami Juko",     "Midori Ginko",
    "Sakura Tsushin", "Tsubaki Shoji",   "Yamabuki Butsuryu", "Kitakaze Shokuhin",
    "Hikari Kagaku", "Minato Fudosan",
};
constexpr const char* kPersons[] = {"Tanaka", "Suzuki", "Yamada", "Kobayashi", "Watanabe"};
constexpr const char* kTitles[] = {"shachou", "fukushachou", "senmu", "kaichou"};
constexpr const char* kWords[] = {
    "shinseihin", "kessan",  "happyou", "teikei",  "kakudai", "keikaku",
    "shijou",     "gijutsu", "kouhyou", "kentou",  "kaishi",  "yotei",
};

std::string_view pick_word(Rng& rng) { return kWords[rng.pick(std::size(kWords))]; }

Particle non_subject_particle(Rng& rng) {
  static constexpr Particle pool[] = {Particle::To, Particle::Kara, Particle::WoTsuuji,
                                      Particle::TonoAidade, Particle::Other};
  return pool[rng.pick(std::size(pool))];
}

Particle subject_particle(Rng& rng) {
  static constexpr Particle pool[] = {Particle::Ha, Particle::Ga, Particle::Deha,
                                      Particle::Niyoruto};
  return pool[rng.pick(std::size(pool))];
}

Particle gold_fallback_particle(Rng& rng) {
  static constexpr Particle pool[] = {Particle::To, Particle::Kara, Particle::WoTsuuji,
                                      Particle::TonoAidade};
  return pool[rng.pick(std::size(pool))];
}

// The same-sentence rule ignores particles, so mix subject ones in to keep
// that property exercised.
Particle gold_same_sentence_particle(Rng& rng) {
  static constexpr Particle pool[] = {Particle::To, Particle::Kara, Particle::Ha,
                                      Particle::Niyoruto};
  return pool[rng.pick(std::size(pool))];
}

struct Decoy {
  std::string id;
  std::string name;
};

Sentence filler_sentence(Rng& rng) {
  SentenceBuilder sb;
  std::size_t n = 2 + rng.pick(2);
  for (std::size_t i = 0; i < n; ++i) sb.word(pick_word(rng));
  sb.period();
  return std::move(sb).build();
}

// Decoy followed by a trailing word so it never reads as sentence-final.
Sentence decoy_sentence(Rng& rng, const Decoy& d) {
  SentenceBuilder sb;
  sb.company(d.id, d.name, non_subject_particle(rng));
  sb.word(pick_word(rng));
  sb.period();
  return std::move(sb).build();
}

Sentence anaphor_sentence(Rng& rng, const GenSpec& spec, const std::string& anaphor_id,
                          const std::string& gold_id) {
  SentenceBuilder sb;
  sb.anaphor(anaphor_id, spec.particle).gold_ref(gold_id);
  sb.word(pick_word(rng));
  sb.period();
  return std::move(sb).build();
}

Document assemble(const std::string& doc_id, std::vector<std::vector<Sentence>> paras) {
  DocumentBuilder db(doc_id);
  for (auto& p : paras) {
    db.paragraph();
    for (auto& s : p) db.add(std::move(s));
  }
  return std::move(db).build();
}

}  // namespace

void check_genspec(const GenSpec& spec) {
  bool same_sentence = spec.location == LocationCategory::WithinSameSentence;
  switch (spec.target_rule) {
    case RuleId::SameSentenceClosest:
      if (spec.particle != AnaphorParticle::Ga) {
        throw DoushaError("genspec: same_sentence_closest needs a ga anaphor");
      }
      if (!same_sentence) {
        throw DoushaError(
            "genspec: same_sentence_closest needs the referent within the same sentence");
      }
      break;
    case RuleId::SubjectParticleClosest:
      if (spec.particle == AnaphorParticle::Ga && same_sentence) {
        throw DoushaError(
            "genspec: a same-sentence referent of a ga anaphor is claimed by the "
            "same-sentence rule first");
      }
      break;
    case RuleId::EmphasisPrevSentence:
      if (spec.location != LocationCategory::PreviousSentence) {
        throw DoushaError(
            "genspec: emphasis_prev_sentence needs the referent in the previous sentence");
      }
      break;
    case RuleId::TitlePatternPrevSentence:
      if (spec.location != LocationCategory::PreviousSentence) {
        throw DoushaError(
            "genspec: title_pattern_prev_sentence needs the referent in the previous "
            "sentence");
      }
      break;
    case RuleId::ClosestFallback:
      break;
  }
  if (spec.target_rule != RuleId::ClosestFallback && !same_sentence &&
      spec.decoy_count == 0) {
    throw DoushaError(
        "genspec: a non-fallback target beyond the anaphor's sentence needs at least one "
        "decoy");
  }
}

RuleId effective_rule(const GenSpec& spec) {
  if (spec.target_rule == RuleId::ClosestFallback && spec.particle == AnaphorParticle::Ga &&
      spec.location == LocationCategory::WithinSameSentence) {
    return RuleId::SameSentenceClosest;
  }
  return spec.target_rule;
}

MethodId method_for(AnaphorParticle particle) {
  return particle == AnaphorParticle::Ga ? MethodId::Method2Ga : MethodId::Method3Ha;
}

GeneratedDocument generate_document(const GenSpec& spec) {
  check_genspec(spec);
  Rng rng(spec.seed);

  constexpr std::size_t n_companies = std::size(kCompanies);
  std::size_t g = rng.pick(n_companies);
  const std::string gold_name = kCompanies[g];
  const std::string gold_id = "c-gold";
  const std::string anaphor_id = "a-0";
  std::vector<Decoy> decoys;
  decoys.reserve(spec.decoy_count);
  for (std::size_t i = 0; i < spec.decoy_count; ++i) {
    decoys.push_back({"c-d" + std::to_string(i), kCompanies[(g + 1 + i) % n_companies]});
  }

  bool paragraph_family = false;
  std::size_t gap = 0;
  switch (spec.location) {
    case LocationCategory::WithinSameSentence: gap = 0; break;
    case LocationCategory::PreviousSentence: gap = 1; break;
    case LocationCategory::TwoSentencesBefore: gap = 2; break;
    case LocationCategory::ThreeSentencesBefore: gap = 3; break;
    case LocationCategory::PreviousParagraph: paragraph_family = true; gap = 1; break;
    case LocationCategory::TwoParagraphsBefore: paragraph_family = true; gap = 2; break;
    case LocationCategory::ThreeParagraphsBefore: paragraph_family = true; gap = 3; break;
    case LocationCategory::FurtherBack:
      paragraph_family = rng.pick(2) == 1;
      gap = 4 + rng.pick(2);
      break;
  }

  bool lead_filler = rng.pick(2) == 0;
  std::vector<std::vector<Sentence>> paras;

  if (!paragraph_family) {
    std::vector<Sentence> para;
    switch (spec.target_rule) {
      case RuleId::SameSentenceClosest: {
        for (const Decoy& d : decoys) para.push_back(decoy_sentence(rng, d));
        if (lead_filler) para.push_back(filler_sentence(rng));
        SentenceBuilder sb;
        sb.company(gold_id, gold_name, gold_same_sentence_particle(rng));
        sb.word(pick_word(rng));
        sb.anaphor(anaphor_id, spec.particle).gold_ref(gold_id);
        sb.word(pick_word(rng));
        sb.period();
        para.push_back(std::move(sb).build());
        break;
      }
      case RuleId::SubjectParticleClosest: {
        if (lead_filler) para.push_back(filler_sentence(rng));
        if (gap <= 1) {
          // Decoys sit between the gold mention and the anaphor: inside the
          // shared sentence, or after the gold in the previous one.
          SentenceBuilder sb;
          sb.company(gold_id, gold_name, subject_particle(rng));
          sb.word(pick_word(rng));
          for (const Decoy& d : decoys) {
            sb.company(d.id, d.name, non_subject_particle(rng));
            sb.word(pick_word(rng));
          }
          if (gap == 0) {
            sb.anaphor(anaphor_id, spec.particle).gold_ref(gold_id);
            sb.word(pick_word(rng));
            sb.period();
            para.push_back(std::move(sb).build());
          } else {
            sb.period();
            para.push_back(std::move(sb).build());
            para.push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
          }
        } else {
          SentenceBuilder sb;
          sb.company(gold_id, gold_name, subject_particle(rng));
          sb.word(pick_word(rng));
          sb.period();
          para.push_back(std::move(sb).build());
          std::vector<std::vector<const Decoy*>> slots(gap - 1);
          for (std::size_t j = 0; j < decoys.size(); ++j) {
            slots[j % slots.size()].push_back(&decoys[j]);
          }
          for (const auto& slot : slots) {
            if (slot.empty()) {
              para.push_back(filler_sentence(rng));
              continue;
            }
            SentenceBuilder mid;
            for (const Decoy* d : slot) {
              mid.company(d->id, d->name, non_subject_particle(rng));
              mid.word(pick_word(rng));
            }
            mid.period();
            para.push_back(std::move(mid).build());
          }
          para.push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
        }
        break;
      }
      case RuleId::EmphasisPrevSentence: {
        // Decoys stay in front of the gold sentence: rule order, not
        // proximity, must decide these documents.
        for (const Decoy& d : decoys) para.push_back(decoy_sentence(rng, d));
        if (lead_filler) para.push_back(filler_sentence(rng));
        SentenceBuilder sb;
        sb.word(pick_word(rng)).word(pick_word(rng));
        sb.company(gold_id, gold_name);
        sb.period();
        para.push_back(std::move(sb).build());
        para.push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
        break;
      }
      case RuleId::TitlePatternPrevSentence: {
        if (lead_filler) para.push_back(filler_sentence(rng));
        SentenceBuilder sb;
        sb.company(gold_id, gold_name, Particle::No);
        sb.person("p-0", kPersons[rng.pick(std::size(kPersons))]);
        sb.title("t-0", kTitles[rng.pick(std::size(kTitles))]);
        for (const Decoy& d : decoys) {
          sb.company(d.id, d.name, non_subject_particle(rng));
          sb.word(pick_word(rng));
        }
        sb.period();
        para.push_back(std::move(sb).build());
        para.push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
        break;
      }
      case RuleId::ClosestFallback: {
        // Decoys go in front of the gold mention so the nearest candidate
        // stays correct.
        for (const Decoy& d : decoys) para.push_back(decoy_sentence(rng, d));
        if (lead_filler) para.push_back(filler_sentence(rng));
        SentenceBuilder sb;
        sb.company(gold_id, gold_name, gold_fallback_particle(rng));
        sb.word(pick_word(rng));
        if (gap == 0) {
          sb.anaphor(anaphor_id, spec.particle).gold_ref(gold_id);
          sb.word(pick_word(rng));
          sb.period();
          para.push_back(std::move(sb).build());
        } else {
          sb.period();
          para.push_back(std::move(sb).build());
          for (std::size_t i = 1; i < gap; ++i) para.push_back(filler_sentence(rng));
          para.push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
        }
        break;
      }
    }
    paras.push_back(std::move(para));
  } else {
    paras.resize(gap + 1);
    if (spec.target_rule == RuleId::SubjectParticleClosest) {
      if (lead_filler) paras[0].push_back(filler_sentence(rng));
      SentenceBuilder sb;
      sb.company(gold_id, gold_name, subject_particle(rng));
      sb.word(pick_word(rng));
      sb.period();
      paras[0].push_back(std::move(sb).build());
      // Spread decoys over the middle paragraphs and the run-up to the
      // anaphor; paragraphs left without one still need a sentence.
      std::vector<std::vector<const Decoy*>> mid(gap - 1);
      std::vector<const Decoy*> pre;
      for (std::size_t j = 0; j < decoys.size(); ++j) {
        std::size_t slot = j % gap;
        if (slot + 1 < gap) {
          mid[slot].push_back(&decoys[j]);
        } else {
          pre.push_back(&decoys[j]);
        }
      }
      for (std::size_t i = 0; i < mid.size(); ++i) {
        if (mid[i].empty()) {
          paras[1 + i].push_back(filler_sentence(rng));
          continue;
        }
        for (const Decoy* d : mid[i]) paras[1 + i].push_back(decoy_sentence(rng, *d));
      }
      for (const Decoy* d : pre) paras[gap].push_back(decoy_sentence(rng, *d));
      paras[gap].push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
    } else {
      for (const Decoy& d : decoys) paras[0].push_back(decoy_sentence(rng, d));
      if (lead_filler) paras[0].push_back(filler_sentence(rng));
      SentenceBuilder sb;
      sb.company(gold_id, gold_name, gold_fallback_particle(rng));
      sb.word(pick_word(rng));
      sb.period();
      paras[0].push_back(std::move(sb).build());
      for (std::size_t i = 1; i < gap; ++i) paras[i].push_back(filler_sentence(rng));
      paras[gap].push_back(anaphor_sentence(rng, spec, anaphor_id, gold_id));
    }
  }

  char buf[32];
  std::snprintf(buf, sizeof buf, "gen-%016llx", static_cast<unsigned long long>(spec.seed));
  GeneratedDocument out;
  out.document = assemble(buf, std::move(paras));
  out.anaphor_id = anaphor_id;
  out.gold_id = gold_id;
  out.expected_rule = effective_rule(spec);
  out.method = method_for(spec.particle);
  return out;
}

Corpus generate_corpus(std::span<const GenSpec> specs) {
  Corpus corpus;
  corpus.documents.reserve(specs.size());
  char buf[48];
  for (std::size_t i = 0; i < specs.size(); ++i) {
    GeneratedDocument g = generate_document(specs[i]);
    std::snprintf(buf, sizeof buf, "gen-%05zu-%016llx", i,
                  static_cast<unsigned long long>(specs[i].seed));
    g.document.doc_id = buf;
    corpus.documents.push_back(std::move(g.document));
  }
  return corpus;
}

GenSpec random_genspec(std::uint64_t seed) {
  Rng rng(seed);
  GenSpec spec;
  spec.seed = rng.eng();
  spec.particle = rng.pick(2) == 0 ? AnaphorParticle::Ga : AnaphorParticle::Ha;
  const auto& locs = all_location_categories();
  spec.location = locs[rng.pick(locs.size())];
  bool same_sentence = spec.location == LocationCategory::WithinSameSentence;
  bool ga = spec.particle == AnaphorParticle::Ga;

  std::vector<RuleId> choices{RuleId::ClosestFallback};
  if (ga && same_sentence) {
    choices.push_back(RuleId::SameSentenceClosest);
  } else {
    choices.push_back(RuleId::SubjectParticleClosest);
  }
  if (spec.location == LocationCategory::PreviousSentence) {
    choices.push_back(RuleId::EmphasisPrevSentence);
    choices.push_back(RuleId::TitlePatternPrevSentence);
  }
  spec.target_rule = choices[rng.pick(choices.size())];

  if (spec.target_rule != RuleId::ClosestFallback && !same_sentence) {
    spec.decoy_count = 1 + rng.pick(3);
  } else {
    spec.decoy_count = rng.pick(3);
  }
  return spec;
}

std::vector<GenSpec> load_genspecs(std::istream& in) {
  std::vector<GenSpec> specs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fail = [lineno](const std::string& msg) {
      return DoushaError("genspec line " + std::to_string(lineno) + ": " + msg);
    };
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw fail("not a JSON object");

    GenSpec spec;
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw fail("seed must be a non-negative integer");
      spec.seed = j["seed"].get<std::uint64_t>();
    }
    if (!j.contains("target_rule") || !j["target_rule"].is_string()) {
      throw fail("missing target_rule");
    }
    std::string rule_name = j["target_rule"].get<std::string>();
    auto rule = parse_rule(rule_name);
    if (!rule) throw fail("unknown target_rule '" + rule_name + "'");
    spec.target_rule = *rule;

    if (!j.contains("particle") || !j["particle"].is_string()) throw fail("missing particle");
    std::string particle_name = j["particle"].get<std::string>();
    if (particle_name == "ga") {
      spec.particle = AnaphorParticle::Ga;
    } else if (particle_name == "ha") {
      spec.particle = AnaphorParticle::Ha;
    } else {
      throw fail("unknown particle '" + particle_name + "'");
    }

    if (!j.contains("location") || !j["location"].is_string()) throw fail("missing location");
    std::string location_name = j["location"].get<std::string>();
    auto loc = parse_location(location_name);
    if (!loc) throw fail("unknown location '" + location_name + "'");
    spec.location = *loc;

    if (j.contains("decoy_count")) {
      if (!j["decoy_count"].is_number_unsigned()) {
        throw fail("decoy_count must be a non-negative integer");
      }
      spec.decoy_count = j["decoy_count"].get<std::size_t>();
    }

    try {
      check_genspec(spec);
    } catch (const DoushaError& e) {
      throw fail(e.what());
    }
    specs.push_back(spec);
  }
  return specs;
}

void serialize_genspecs(std::span<const GenSpec> specs, std::ostream& out) {
  for (const GenSpec& spec : specs) {
    nlohmann::ordered_json j;
    j["seed"] = spec.seed;
    j["target_rule"] = rule_key(spec.target_rule);
    j["particle"] = anaphor_particle_key(spec.particle);
    j["location"] = location_key(spec.location);
    j["decoy_count"] = spec.decoy_count;
    out << j.dump() << '\n';
  }
}

}  // namespace dousha
