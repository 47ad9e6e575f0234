#include "dousha/resolver.hpp"

#include <algorithm>
#include <array>

namespace dousha {

namespace {

constexpr std::array<RuleId, 5> kMethod2Order = {
    RuleId::SameSentenceClosest,     RuleId::SubjectParticleClosest,
    RuleId::EmphasisPrevSentence,    RuleId::TitlePatternPrevSentence,
    RuleId::ClosestFallback,
};

constexpr std::array<RuleId, 4> kMethod3Order = {
    RuleId::SubjectParticleClosest, RuleId::EmphasisPrevSentence,
    RuleId::TitlePatternPrevSentence, RuleId::ClosestFallback,
};

struct RuleName {
  std::string_view key;
  RuleId value;
};

constexpr std::array<RuleName, 5> kRuleNames = {{
    {"same_sentence_closest", RuleId::SameSentenceClosest},
    {"subject_particle_closest", RuleId::SubjectParticleClosest},
    {"emphasis_prev_sentence", RuleId::EmphasisPrevSentence},
    {"title_pattern_prev_sentence", RuleId::TitlePatternPrevSentence},
    {"closest_fallback", RuleId::ClosestFallback},
}};

void require_anaphor(const Mention& anaphor) {
  if (anaphor.kind != MentionKind::Anaphor) {
    throw DoushaError("mention '" + anaphor.mention_id + "' is not an anaphor");
  }
}

void require_particle(const Mention& anaphor, AnaphorParticle want,
                      std::string_view method) {
  const auto have =
      anaphor.particle ? to_anaphor_particle(*anaphor.particle) : std::nullopt;
  if (!have || *have != want) {
    throw DoushaError(std::string(method) + " requires a " +
                      std::string(anaphor_particle_key(want)) +
                      "-marked anaphor, got '" + anaphor.mention_id + "'");
  }
}

// Rule bodies return the predicted company entry or nullptr.

const DocumentIndex::Entry* same_sentence_closest(
    const DocumentIndex::Entry& anaphor,
    std::span<const DocumentIndex::Entry> candidates) {
  for (const auto& c : candidates) {
    if (c.address.sentence == anaphor.address.sentence) return &c;
  }
  return nullptr;
}

const DocumentIndex::Entry* subject_particle_closest(
    const DocumentIndex::Entry& anaphor,
    std::span<const DocumentIndex::Entry> candidates, const ResolveOptions& options) {
  for (const auto& c : candidates) {
    if (options.subject_window &&
        anaphor.address.sentence - c.address.sentence > *options.subject_window) {
      break;  // candidates are nearest-first, everything further is out of range
    }
    if (c.mention->particle && is_subject_particle(*c.mention->particle)) return &c;
  }
  return nullptr;
}

const DocumentIndex::Entry* emphasis_prev_sentence(
    const DocumentIndex& doc, const DocumentIndex::Entry& anaphor,
    std::span<const DocumentIndex::Entry> candidates, const ResolveOptions& options) {
  if (anaphor.address.sentence == 0) return nullptr;
  const std::size_t prev = anaphor.address.sentence - 1;
  const Sentence& prev_sentence = doc.sentence_at(prev);
  for (const auto& c : candidates) {
    if (c.address.sentence > prev) continue;  // same-sentence candidates come first
    if (c.address.sentence < prev) break;     // nearest-first: nothing later is in prev
    if (is_sentence_final(*c.mention, prev_sentence, options.closing)) return &c;
  }
  return nullptr;
}

const DocumentIndex::Entry* title_pattern_prev_sentence(
    const DocumentIndex& doc, const DocumentIndex::Entry& anaphor,
    std::span<const DocumentIndex::Entry> candidates) {
  if (anaphor.address.sentence == 0) return nullptr;
  const std::size_t prev = anaphor.address.sentence - 1;
  const Sentence& prev_sentence = doc.sentence_at(prev);
  const auto& mentions = prev_sentence.mentions;
  // Company-no, person, title as consecutive mentions; latest match wins.
  for (std::size_t i = mentions.size(); i >= 3; --i) {
    const Mention& company = mentions[i - 3];
    const Mention& person = mentions[i - 2];
    const Mention& title = mentions[i - 1];
    if (company.kind != MentionKind::Company || !company.particle ||
        *company.particle != Particle::No) {
      continue;
    }
    if (person.kind != MentionKind::Person || title.kind != MentionKind::Title) continue;
    for (const auto& c : candidates) {
      if (c.mention == &company) return &c;
    }
  }
  return nullptr;
}

}  // namespace

std::vector<DocumentIndex::Entry> candidates_before(const DocumentIndex& doc,
                                                    const Mention& anaphor) {
  require_anaphor(anaphor);
  const auto& entry = doc.at(anaphor.mention_id);
  std::vector<DocumentIndex::Entry> out;
  const auto& mentions = doc.mentions();
  for (auto it = mentions.rbegin(); it != mentions.rend(); ++it) {
    if (it->mention->kind != MentionKind::Company) continue;
    if (it->address.sentence > entry.address.sentence) continue;
    if (it->address.sentence == entry.address.sentence &&
        it->mention->end > entry.mention->start) {
      continue;
    }
    out.push_back(*it);
  }
  return out;
}

Resolution resolve_with_rules(const DocumentIndex& doc, const Mention& anaphor,
                              std::span<const RuleId> rules,
                              const ResolveOptions& options) {
  require_anaphor(anaphor);
  const auto& entry = doc.at(anaphor.mention_id);
  const std::vector<DocumentIndex::Entry> candidates = candidates_before(doc, anaphor);

  Resolution result;
  result.anaphor_id = anaphor.mention_id;
  result.candidates_considered = candidates.size();

  for (const RuleId rule : rules) {
    const DocumentIndex::Entry* hit = nullptr;
    switch (rule) {
      case RuleId::SameSentenceClosest:
        hit = same_sentence_closest(entry, candidates);
        break;
      case RuleId::SubjectParticleClosest:
        hit = subject_particle_closest(entry, candidates, options);
        break;
      case RuleId::EmphasisPrevSentence:
        hit = emphasis_prev_sentence(doc, entry, candidates, options);
        break;
      case RuleId::TitlePatternPrevSentence:
        hit = title_pattern_prev_sentence(doc, entry, candidates);
        break;
      case RuleId::ClosestFallback:
        hit = candidates.empty() ? nullptr : &candidates.front();
        break;
    }
    if (hit != nullptr) {
      result.predicted = hit->mention->mention_id;
      result.rule = rule;
      return result;
    }
  }
  return result;
}

Resolution resolve_scm(const DocumentIndex& doc, const Mention& anaphor) {
  constexpr std::array<RuleId, 1> order = {RuleId::ClosestFallback};
  return resolve_with_rules(doc, anaphor, order);
}

Resolution resolve_method2(const DocumentIndex& doc, const Mention& anaphor,
                           const ResolveOptions& options) {
  require_anaphor(anaphor);
  require_particle(anaphor, AnaphorParticle::Ga, "method 2");
  return resolve_with_rules(doc, anaphor, kMethod2Order, options);
}

Resolution resolve_method3(const DocumentIndex& doc, const Mention& anaphor,
                           const ResolveOptions& options) {
  require_anaphor(anaphor);
  require_particle(anaphor, AnaphorParticle::Ha, "method 3");
  return resolve_with_rules(doc, anaphor, kMethod3Order, options);
}

Resolution resolve(const DocumentIndex& doc, const Mention& anaphor, MethodId method,
                   const ResolveOptions& options) {
  switch (method) {
    case MethodId::Scm:
      require_anaphor(anaphor);
      return resolve_scm(doc, anaphor);
    case MethodId::Method2Ga:
      return resolve_method2(doc, anaphor, options);
    case MethodId::Method3Ha:
      return resolve_method3(doc, anaphor, options);
  }
  throw DoushaError("unknown method");
}

std::span<const RuleId> method2_rule_order() { return kMethod2Order; }
std::span<const RuleId> method3_rule_order() { return kMethod3Order; }

std::string_view rule_key(RuleId r) {
  for (const auto& e : kRuleNames) {
    if (e.value == r) return e.key;
  }
  return "closest_fallback";
}

std::optional<RuleId> parse_rule(std::string_view key) {
  for (const auto& e : kRuleNames) {
    if (e.key == key) return e.value;
  }
  return std::nullopt;
}

std::string_view method_key(MethodId m) {
  switch (m) {
    case MethodId::Scm:
      return "scm";
    case MethodId::Method2Ga:
      return "m2";
    case MethodId::Method3Ha:
      return "m3";
  }
  return "scm";
}

std::optional<MethodId> parse_method(std::string_view key) {
  if (key == "scm") return MethodId::Scm;
  if (key == "m2" || key == "method2") return MethodId::Method2Ga;
  if (key == "m3" || key == "method3") return MethodId::Method3Ha;
  return std::nullopt;
}

std::optional<std::vector<RuleId>> parse_rule_order(std::string_view csv) {
  std::vector<RuleId> order;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    std::string_view item = csv.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto rule = parse_rule(item);
      if (!rule) return std::nullopt;
      if (std::find(order.begin(), order.end(), *rule) != order.end()) return std::nullopt;
      order.push_back(*rule);
    }
    pos = comma + 1;
  }
  if (order.empty()) return std::nullopt;
  return order;
}

}  // namespace dousha
