#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dousha/classify.hpp"
#include "dousha/evaluator.hpp"
#include "dousha/io.hpp"
#include "dousha/profiler.hpp"
#include "dousha/synthgen.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace dousha;

namespace {

constexpr std::uint64_t kSweep = 1000;

bool subject_marked(const Mention& m) {
  if (!m.particle) return false;
  switch (*m.particle) {
    case Particle::Ha:
    case Particle::Ga:
    case Particle::Deha:
    case Particle::Niyoruto:
      return true;
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("the indexed resolver agrees with the brute-force one") {
  for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
    GeneratedDocument g = generate_document(random_genspec(seed));
    DocumentIndex index(g.document);
    const Mention& anaphor = *index.at(g.anaphor_id).mention;

    for (MethodId method : {MethodId::Scm, g.method}) {
      Resolution fast = resolve(index, anaphor, method);
      testing::NaiveResult slow = testing::naive_resolve(g.document, g.anaphor_id, method);
      CHECK_MESSAGE(fast.predicted == slow.predicted,
                    g.document.doc_id << " " << method_key(method));
      CHECK_MESSAGE(fast.rule == slow.rule,
                    g.document.doc_id << " " << method_key(method));
    }

    auto entries = candidates_before(index, anaphor);
    std::vector<std::string> fast_ids;
    fast_ids.reserve(entries.size());
    for (const auto& e : entries) fast_ids.push_back(e.mention->mention_id);
    CHECK(fast_ids == testing::naive_candidates(g.document, g.anaphor_id));
  }
}

TEST_CASE("sentence windows do not break oracle agreement") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratedDocument g = generate_document(random_genspec(seed));
    DocumentIndex index(g.document);
    const Mention& anaphor = *index.at(g.anaphor_id).mention;
    for (std::size_t window : {0u, 1u, 2u}) {
      ResolveOptions opts;
      opts.subject_window = window;
      Resolution fast = resolve(index, anaphor, g.method, opts);
      testing::NaiveResult slow =
          testing::naive_resolve(g.document, g.anaphor_id, g.method, window);
      CHECK(fast.predicted == slow.predicted);
      CHECK(fast.rule == slow.rule);
    }
  }
}

TEST_CASE("the ha cascade is the ga cascade minus its first rule") {
  for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
    GenSpec spec = random_genspec(seed);
    if (spec.particle != AnaphorParticle::Ha) continue;
    GeneratedDocument g = generate_document(spec);
    DocumentIndex index(g.document);
    const Mention& anaphor = *index.at(g.anaphor_id).mention;

    Resolution full = resolve_with_rules(index, anaphor, method2_rule_order());
    Resolution m3 = resolve(index, anaphor, MethodId::Method3Ha);
    if (full.rule != RuleId::SameSentenceClosest) {
      CHECK(full.predicted == m3.predicted);
      CHECK(full.rule == m3.rule);
    }
  }
}

TEST_CASE("predictions always point backwards") {
  for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
    GeneratedDocument g = generate_document(random_genspec(seed));
    DocumentIndex index(g.document);
    const Mention& anaphor = *index.at(g.anaphor_id).mention;
    for (MethodId method : {MethodId::Scm, g.method}) {
      Resolution r = resolve(index, anaphor, method);
      REQUIRE(r.predicted.has_value());
      CHECK(precedes(index, *index.at(*r.predicted).mention, anaphor));
    }
  }
}

TEST_CASE("with one candidate every method picks it") {
  std::size_t covered = 0;
  for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
    GenSpec spec = random_genspec(seed);
    if (spec.decoy_count != 0) continue;
    ++covered;
    GeneratedDocument g = generate_document(spec);
    DocumentIndex index(g.document);
    const Mention& anaphor = *index.at(g.anaphor_id).mention;
    for (MethodId method : {MethodId::Scm, g.method}) {
      Resolution r = resolve(index, anaphor, method);
      CHECK(r.predicted == g.gold_id);
      CHECK(r.candidates_considered == 1);
    }
  }
  CHECK(covered > 50);
}

TEST_CASE("the reported rule is justified by the document") {
  for (std::uint64_t seed = 0; seed < kSweep; ++seed) {
    GeneratedDocument g = generate_document(random_genspec(seed));
    DocumentIndex index(g.document);
    const auto& anaphor_entry = index.at(g.anaphor_id);
    Resolution r = resolve(index, *anaphor_entry.mention, g.method);
    REQUIRE(r.predicted.has_value());
    const auto& hit = index.at(*r.predicted);

    switch (*r.rule) {
      case RuleId::SameSentenceClosest:
        CHECK(hit.address.sentence == anaphor_entry.address.sentence);
        break;
      case RuleId::SubjectParticleClosest:
        CHECK(subject_marked(*hit.mention));
        break;
      case RuleId::EmphasisPrevSentence:
        CHECK(hit.address.sentence + 1 == anaphor_entry.address.sentence);
        CHECK(is_sentence_final(*hit.mention,
                                index.sentence_at(hit.address.sentence)));
        break;
      case RuleId::TitlePatternPrevSentence: {
        CHECK(hit.address.sentence + 1 == anaphor_entry.address.sentence);
        CHECK(hit.mention->particle == Particle::No);
        break;
      }
      case RuleId::ClosestFallback: {
        auto cands = candidates_before(index, *anaphor_entry.mention);
        REQUIRE(!cands.empty());
        CHECK(cands.front().mention->mention_id == *r.predicted);
        break;
      }
    }
  }
}

TEST_CASE("profile counts, evaluation buckets, and totals stay consistent") {
  Corpus golden = testing::golden_corpus();
  DistantReferentStat stat = distant_particle_stat(golden);

  std::size_t distant_cells = 0;
  for (AnaphorParticle particle : {AnaphorParticle::Ga, AnaphorParticle::Ha}) {
    LocationContextProfile p = profile(golden, particle);
    EvalReport scm = evaluate(golden, MethodId::Scm, particle);
    CHECK(scm.total == p.total);
    for (LocationCategory loc : all_location_categories()) {
      const std::size_t subtotal = p.location_subtotal(loc);
      const auto it = scm.by_location.find(loc);
      const std::size_t bucket = it == scm.by_location.end() ? 0 : it->second.total;
      CHECK(bucket == subtotal);
      if (loc != LocationCategory::WithinSameSentence &&
          loc != LocationCategory::PreviousSentence) {
        distant_cells += subtotal;
      }
    }
  }
  CHECK(distant_cells == stat.distant_total);
}

TEST_CASE("document order within the corpus does not change scores") {
  Corpus golden = testing::golden_corpus();
  Corpus reversed;
  reversed.documents.assign(golden.documents.rbegin(), golden.documents.rend());

  MethodComparison a = compare_methods(golden);
  MethodComparison b = compare_methods(reversed);
  CHECK(a.scm_ga.correct == b.scm_ga.correct);
  CHECK(a.scm_ha.correct == b.scm_ha.correct);
  CHECK(a.cascade_ga.correct == b.cascade_ga.correct);
  CHECK(a.cascade_ha.correct == b.cascade_ha.correct);

  REQUIRE(a.scm_ga.by_location.size() == b.scm_ga.by_location.size());
  for (const auto& [loc, tally] : a.scm_ga.by_location) {
    const TallyCounts& other = b.scm_ga.by_location.at(loc);
    CHECK(tally.correct == other.correct);
    CHECK(tally.total == other.total);
  }
  REQUIRE(a.scm_ha.by_rule.size() == b.scm_ha.by_rule.size());
  for (const auto& [rule, tally] : a.scm_ha.by_rule) {
    const TallyCounts& other = b.scm_ha.by_rule.at(rule);
    CHECK(tally.correct == other.correct);
    CHECK(tally.total == other.total);
  }
}

TEST_CASE("generated corpora survive a serialization cycle unchanged") {
  std::vector<GenSpec> specs;
  specs.reserve(500);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    specs.push_back(random_genspec(seed));
  }
  Corpus corpus = generate_corpus(specs);

  std::ostringstream first;
  serialize_corpus(corpus, first);
  std::istringstream back(first.str());
  Corpus reloaded = load_corpus(back);
  std::ostringstream second;
  serialize_corpus(reloaded, second);
  CHECK(first.str() == second.str());

  for (const Document& doc : corpus.documents) {
    CHECK_MESSAGE(check_document(doc).empty(), doc.doc_id);
  }
}
