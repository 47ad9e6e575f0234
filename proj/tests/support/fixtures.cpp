#include "support/fixtures.hpp"

#include <iterator>
#include <string>

#include "dousha/builder.hpp"
#include "dousha/resolver.hpp"

namespace dousha::testing {

namespace {

constexpr const char* kCompanies[] = {
    "Aoba Denki",     "Hoshino Seiyaku", "Kawakami Juko",     "Midori Ginko",
    "Sakura Tsushin", "Tsubaki Shoji",   "Yamabuki Butsuryu", "Kitakaze Shokuhin",
    "Hikari Kagaku",  "Minato Fudosan",
};
constexpr const char* kWords[] = {
    "shinseihin", "kessan",  "happyou", "teikei", "kakudai", "keikaku",
    "shijou",     "gijutsu", "kouhyou", "kentou", "kaishi",  "yotei",
};

std::string_view word_at(std::size_t i) { return kWords[i % std::size(kWords)]; }

Particle decoy_particle(std::size_t i) {
  constexpr Particle pool[] = {Particle::To, Particle::Kara, Particle::WoTsuuji,
                               Particle::TonoAidade, Particle::Other};
  return pool[i % std::size(pool)];
}

// How the gold referent is dressed in a document.
enum class Ctx {
  Ha,
  Ga,
  Deha,
  Niyoruto,
  To,
  OtherNonSubject,  // kara / wo_tsuuji / tono_aidade, cycled
  Emphasis,         // bare company at sentence end
  PartOfSubject,    // company + no inside a larger subject phrase, labeled
  TopicHa,          // topic-of-paragraph label over company + ha
  TopicGa,          // topic-of-paragraph label over company + ga
};

struct Row {
  AnaphorParticle anaphor;
  LocationCategory loc;
  Ctx ctx;
  int count;
  bool adversarial;  // decoy planted between gold and anaphor
  RuleId fired;      // cascade rule that resolves documents of this row
  const char* tag;
};

constexpr LocationCategory kSS = LocationCategory::WithinSameSentence;
constexpr LocationCategory kPS = LocationCategory::PreviousSentence;
constexpr LocationCategory k2S = LocationCategory::TwoSentencesBefore;
constexpr LocationCategory k3S = LocationCategory::ThreeSentencesBefore;
constexpr LocationCategory kPP = LocationCategory::PreviousParagraph;
constexpr LocationCategory k2P = LocationCategory::TwoParagraphsBefore;
constexpr LocationCategory k3P = LocationCategory::ThreeParagraphsBefore;

constexpr Row kRows[] = {
    // ga anaphors: 42 documents
    {AnaphorParticle::Ga, kSS, Ctx::Ha, 7, false, RuleId::SameSentenceClosest, "ss-ha"},
    {AnaphorParticle::Ga, kSS, Ctx::PartOfSubject, 1, false, RuleId::SameSentenceClosest,
     "ss-psub"},
    {AnaphorParticle::Ga, kSS, Ctx::Niyoruto, 3, false, RuleId::SameSentenceClosest,
     "ss-niyoruto"},
    {AnaphorParticle::Ga, kSS, Ctx::OtherNonSubject, 8, false, RuleId::SameSentenceClosest,
     "ss-oth"},
    {AnaphorParticle::Ga, kPS, Ctx::Ha, 8, true, RuleId::SubjectParticleClosest, "ps-ha"},
    {AnaphorParticle::Ga, kPS, Ctx::Ga, 1, true, RuleId::SubjectParticleClosest, "ps-ga"},
    {AnaphorParticle::Ga, kPS, Ctx::Emphasis, 1, false, RuleId::EmphasisPrevSentence,
     "ps-emp"},
    {AnaphorParticle::Ga, kPS, Ctx::PartOfSubject, 1, false, RuleId::ClosestFallback,
     "ps-psub"},
    {AnaphorParticle::Ga, kPS, Ctx::To, 2, false, RuleId::ClosestFallback, "ps-to"},
    {AnaphorParticle::Ga, k2S, Ctx::Ha, 5, true, RuleId::SubjectParticleClosest, "2s-ha"},
    {AnaphorParticle::Ga, k2S, Ctx::Ga, 1, true, RuleId::SubjectParticleClosest, "2s-ga"},
    {AnaphorParticle::Ga, kPP, Ctx::TopicHa, 1, true, RuleId::SubjectParticleClosest,
     "pp-topha"},
    {AnaphorParticle::Ga, k2P, Ctx::TopicHa, 3, true, RuleId::SubjectParticleClosest,
     "2p-topha"},
    // ha anaphors: 64 documents
    {AnaphorParticle::Ha, kSS, Ctx::Ga, 1, true, RuleId::SubjectParticleClosest, "ss-ga"},
    {AnaphorParticle::Ha, kSS, Ctx::Deha, 1, true, RuleId::SubjectParticleClosest,
     "ss-deha"},
    {AnaphorParticle::Ha, kPS, Ctx::Ha, 21, true, RuleId::SubjectParticleClosest, "ps-ha"},
    {AnaphorParticle::Ha, kPS, Ctx::Emphasis, 5, false, RuleId::EmphasisPrevSentence,
     "ps-emp"},
    {AnaphorParticle::Ha, kPS, Ctx::PartOfSubject, 4, false, RuleId::ClosestFallback,
     "ps-psub"},
    {AnaphorParticle::Ha, kPS, Ctx::OtherNonSubject, 2, false, RuleId::ClosestFallback,
     "ps-oth"},
    {AnaphorParticle::Ha, k2S, Ctx::Ha, 16, true, RuleId::SubjectParticleClosest, "2s-ha"},
    {AnaphorParticle::Ha, k2S, Ctx::PartOfSubject, 1, false, RuleId::ClosestFallback,
     "2s-psub"},
    {AnaphorParticle::Ha, k3S, Ctx::Ha, 2, true, RuleId::SubjectParticleClosest, "3s-ha"},
    {AnaphorParticle::Ha, kPP, Ctx::TopicHa, 6, true, RuleId::SubjectParticleClosest,
     "pp-topha"},
    {AnaphorParticle::Ha, kPP, Ctx::TopicGa, 1, true, RuleId::SubjectParticleClosest,
     "pp-topga"},
    {AnaphorParticle::Ha, k2P, Ctx::TopicHa, 2, true, RuleId::SubjectParticleClosest,
     "2p-topha"},
    {AnaphorParticle::Ha, k3P, Ctx::TopicHa, 2, true, RuleId::SubjectParticleClosest,
     "3p-topha"},
};

std::optional<Particle> gold_particle(Ctx ctx, std::size_t i) {
  switch (ctx) {
    case Ctx::Ha: return Particle::Ha;
    case Ctx::Ga: return Particle::Ga;
    case Ctx::Deha: return Particle::Deha;
    case Ctx::Niyoruto: return Particle::Niyoruto;
    case Ctx::To: return Particle::To;
    case Ctx::OtherNonSubject: {
      constexpr Particle pool[] = {Particle::Kara, Particle::WoTsuuji, Particle::TonoAidade};
      return pool[i % std::size(pool)];
    }
    case Ctx::Emphasis: return std::nullopt;
    case Ctx::PartOfSubject: return Particle::No;
    case Ctx::TopicHa: return Particle::Ha;
    case Ctx::TopicGa: return Particle::Ga;
  }
  return std::nullopt;
}

std::optional<ContextCategory> gold_label(Ctx ctx) {
  if (ctx == Ctx::PartOfSubject) return ContextCategory::PartOfSubject;
  if (ctx == Ctx::TopicHa || ctx == Ctx::TopicGa) return ContextCategory::TopicOfParagraph;
  return std::nullopt;
}

// Context cell the profiler should report for a row.
ContextCategory profiled_context(Ctx ctx, std::size_t i) {
  switch (ctx) {
    case Ctx::Ha: return ContextCategory::CompanyHa;
    case Ctx::Ga: return ContextCategory::CompanyGa;
    case Ctx::Deha: return ContextCategory::CompanyDeha;
    case Ctx::Niyoruto: return ContextCategory::CompanyNiyoruto;
    case Ctx::To: return ContextCategory::CompanyTo;
    case Ctx::OtherNonSubject: return ContextCategory::OtherParticle;
    case Ctx::Emphasis: return ContextCategory::EmphasisStructure;
    case Ctx::PartOfSubject: return ContextCategory::PartOfSubject;
    case Ctx::TopicHa:
    case Ctx::TopicGa: return ContextCategory::TopicOfParagraph;
  }
  (void)i;
  return ContextCategory::OtherParticle;
}

Sentence decoy_sentence(const std::string& id, const std::string& name, std::size_t i) {
  SentenceBuilder sb;
  sb.company(id, name, decoy_particle(i));
  sb.word(word_at(i + 4));
  sb.period();
  return std::move(sb).build();
}

Sentence filler_sentence(std::size_t i) {
  SentenceBuilder sb;
  sb.word(word_at(i)).word(word_at(i + 5));
  sb.period();
  return std::move(sb).build();
}

// Gold mention plus its dressing, without the terminal period.
void put_gold(SentenceBuilder& sb, const Row& row, std::size_t i, const std::string& name) {
  auto particle = gold_particle(row.ctx, i);
  auto label = gold_label(row.ctx);
  sb.company("c-gold", name, particle);
  if (label) sb.context(*label);
  if (row.ctx == Ctx::PartOfSubject) {
    sb.word("kogaisha-ha");
  }
  if (row.ctx != Ctx::Emphasis) sb.word(word_at(i));
}

Sentence anaphor_only_sentence(const Row& row, std::size_t i) {
  SentenceBuilder sb;
  sb.word(word_at(i + 6));
  sb.anaphor("a-0", row.anaphor).gold_ref("c-gold");
  sb.word(word_at(i + 7));
  sb.period();
  return std::move(sb).build();
}

Document golden_doc(const Row& row, std::size_t i, std::size_t row_index) {
  std::string doc_id = std::string(anaphor_particle_key(row.anaphor)) + "-" + row.tag + "-" +
                       std::to_string(i);
  const std::size_t base = row_index * 3 + i;
  const std::string gold_name = kCompanies[base % std::size(kCompanies)];
  const std::string decoy_name = kCompanies[(base + 1) % std::size(kCompanies)];
  const std::string lead_name = kCompanies[(base + 2) % std::size(kCompanies)];

  const bool lead_decoy = row.adversarial ? (i % 3 == 0) : (i % 2 == 1);

  DocumentBuilder db(doc_id);
  db.paragraph();

  switch (row.loc) {
    case kSS: {
      if (lead_decoy) db.add(decoy_sentence("c-d1", lead_name, i));
      SentenceBuilder sb;
      put_gold(sb, row, i, gold_name);
      if (row.adversarial) {
        sb.company("c-d0", decoy_name, decoy_particle(i + 1));
        sb.word(word_at(i + 1));
      }
      sb.anaphor("a-0", row.anaphor).gold_ref("c-gold");
      sb.word(word_at(i + 2));
      sb.period();
      db.add(std::move(sb).build());
      break;
    }
    case kPS: {
      if (lead_decoy) db.add(decoy_sentence("c-d1", lead_name, i));
      SentenceBuilder sb;
      if (row.ctx == Ctx::Emphasis) {
        sb.word(word_at(i)).word(word_at(i + 1));
        put_gold(sb, row, i, gold_name);
      } else {
        put_gold(sb, row, i, gold_name);
        if (row.adversarial) {
          sb.company("c-d0", decoy_name, decoy_particle(i + 1));
          sb.word(word_at(i + 1));
        }
      }
      sb.period();
      db.add(std::move(sb).build());
      db.add(anaphor_only_sentence(row, i));
      break;
    }
    case k2S:
    case k3S: {
      if (lead_decoy) db.add(decoy_sentence("c-d1", lead_name, i));
      SentenceBuilder sb;
      put_gold(sb, row, i, gold_name);
      sb.period();
      db.add(std::move(sb).build());
      std::size_t gaps = row.loc == k2S ? 1 : 2;
      std::size_t decoy_slot = i % gaps;
      for (std::size_t s = 0; s < gaps; ++s) {
        if (row.adversarial && s == decoy_slot) {
          db.add(decoy_sentence("c-d0", decoy_name, i + 1));
        } else {
          db.add(filler_sentence(i + s));
        }
      }
      db.add(anaphor_only_sentence(row, i));
      break;
    }
    case kPP:
    case k2P:
    case k3P: {
      std::size_t pgap = row.loc == kPP ? 1 : row.loc == k2P ? 2 : 3;
      if (lead_decoy) db.add(decoy_sentence("c-d1", lead_name, i));
      SentenceBuilder sb;
      put_gold(sb, row, i, gold_name);
      sb.period();
      db.add(std::move(sb).build());
      // Decoy lands in one middle paragraph (or just before the anaphor
      // when there is none); the rest hold filler.
      std::size_t decoy_para = 1 + (i % pgap);
      for (std::size_t p = 1; p < pgap; ++p) {
        db.paragraph();
        if (row.adversarial && p == decoy_para) {
          db.add(decoy_sentence("c-d0", decoy_name, i + 1));
        } else {
          db.add(filler_sentence(i + p));
        }
      }
      db.paragraph();
      if (row.adversarial && decoy_para == pgap) {
        db.add(decoy_sentence("c-d0", decoy_name, i + 1));
      }
      db.add(anaphor_only_sentence(row, i));
      break;
    }
    case LocationCategory::FurtherBack:
      break;  // no row uses it
  }
  return std::move(db).build();
}

}  // namespace

Document kfc_document() {
  DocumentBuilder db("kfc-pizzahut");
  db.paragraph();
  db.sentence(std::move(
      SentenceBuilder()
          .company("m-kfc", "Nihon Kentakii Furaido Chikin", Particle::Ha)
          .word("sekai")
          .word("saidai")
          .word("no")
          .word("piza")
          .word("chien")
          .company("m-pizzahut", "Piza Hatto", Particle::To)
          .word("teikei")
          .word("wo")
          .word("musubi")
          .word("takuhai")
          .word("piza")
          .word("chien")
          .word("no")
          .word("tenkai")
          .word("wo")
          .word("hajimeru")
          .word("to")
          .word("happyou")
          .word("shita")
          .period()));
  db.sentence(std::move(SentenceBuilder()
                            .word("sarani")
                            .anaphor("m-dousha", AnaphorParticle::Ha)
                            .gold_ref("m-kfc")
                            .word("furaido")
                            .word("chikin")
                            .word("no")
                            .word("takuhai")
                            .word("saabisu")
                            .word("nimo")
                            .word("noridasu")
                            .period()));
  return std::move(db).build();
}

Corpus worked_example_corpus() {
  Corpus c;
  c.documents.push_back(kfc_document());
  return c;
}

Corpus golden_corpus() {
  Corpus c;
  for (std::size_t r = 0; r < std::size(kRows); ++r) {
    const Row& row = kRows[r];
    for (std::size_t i = 0; i < static_cast<std::size_t>(row.count); ++i) {
      c.documents.push_back(golden_doc(row, i, r));
    }
  }
  return c;
}

GoldenFacts golden_facts() { return {}; }

CellMap golden_cells(AnaphorParticle particle) {
  CellMap cells;
  for (const Row& row : kRows) {
    if (row.anaphor != particle) continue;
    for (std::size_t i = 0; i < static_cast<std::size_t>(row.count); ++i) {
      cells[{row.loc, profiled_context(row.ctx, i)}] += 1;
    }
  }
  return cells;
}

GoldenRuleCounts golden_rule_counts(AnaphorParticle particle) {
  GoldenRuleCounts counts;
  for (const Row& row : kRows) {
    if (row.anaphor != particle) continue;
    std::size_t n = static_cast<std::size_t>(row.count);
    switch (row.fired) {
      case RuleId::SameSentenceClosest: counts.same_sentence += n; break;
      case RuleId::SubjectParticleClosest: counts.subject_particle += n; break;
      case RuleId::EmphasisPrevSentence: counts.emphasis += n; break;
      case RuleId::TitlePatternPrevSentence: counts.title_pattern += n; break;
      case RuleId::ClosestFallback: counts.fallback += n; break;
    }
  }
  return counts;
}

}  // namespace dousha::testing
