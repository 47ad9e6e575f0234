#include "dousha/classify.hpp"

#include <algorithm>

#include "dousha/utf8.hpp"

namespace dousha {

bool ClosingChars::contains(char32_t cp) const {
  return std::find(chars_.begin(), chars_.end(), cp) != chars_.end();
}

const ClosingChars& ClosingChars::defaults() {
  static const ClosingChars closing(std::vector<char32_t>{
      U'。', U'、', U'」', U'』', U'）', U'.', U'"', U')',
      U' ', U'\t', U'\n', U'\r', U'　'});
  return closing;
}

bool is_sentence_final(const Mention& mention, const Sentence& sentence,
                       const ClosingChars& closing) {
  const std::string_view text = sentence.text;
  std::size_t pos = utf8::byte_offset(text, mention.end);
  while (pos < text.size()) {
    const auto cp = utf8::decode_at(text, pos);
    if (!cp || !closing.contains(*cp)) return false;
  }
  return true;
}

bool precedes(const DocumentIndex& doc, const Mention& before, const Mention& after) {
  const auto& a = doc.at(before.mention_id).address;
  const auto& b = doc.at(after.mention_id).address;
  if (a.sentence != b.sentence) return a.sentence < b.sentence;
  return before.end <= after.start;
}

std::size_t sentence_distance(const DocumentIndex& doc, const Mention& anaphor,
                              const Mention& candidate) {
  if (!precedes(doc, candidate, anaphor)) {
    throw DoushaError("mention '" + candidate.mention_id +
                      "' does not precede '" + anaphor.mention_id + "'");
  }
  const auto& a = doc.at(anaphor.mention_id).address;
  const auto& c = doc.at(candidate.mention_id).address;
  return a.sentence - c.sentence;
}

LocationCategory classify_location(const DocumentIndex& doc, const Mention& anaphor,
                                   const Mention& referent) {
  const std::size_t sent_dist = sentence_distance(doc, anaphor, referent);
  const auto& a = doc.at(anaphor.mention_id).address;
  const auto& r = doc.at(referent.mention_id).address;
  if (a.paragraph == r.paragraph) {
    switch (sent_dist) {
      case 0:
        return LocationCategory::WithinSameSentence;
      case 1:
        return LocationCategory::PreviousSentence;
      case 2:
        return LocationCategory::TwoSentencesBefore;
      case 3:
        return LocationCategory::ThreeSentencesBefore;
      default:
        return LocationCategory::FurtherBack;
    }
  }
  switch (a.paragraph - r.paragraph) {
    case 1:
      return LocationCategory::PreviousParagraph;
    case 2:
      return LocationCategory::TwoParagraphsBefore;
    case 3:
      return LocationCategory::ThreeParagraphsBefore;
    default:
      return LocationCategory::FurtherBack;
  }
}

ContextCategory classify_context(const DocumentIndex& doc, const Mention& referent,
                                 const ClosingChars& closing) {
  if (referent.kind != MentionKind::Company) {
    throw DoushaError("context classification requires a company mention, got '" +
                      referent.mention_id + "'");
  }
  if (referent.context_label) return *referent.context_label;
  const auto& entry = doc.at(referent.mention_id);
  if (is_sentence_final(referent, doc.sentence_at(entry.address.sentence), closing)) {
    return ContextCategory::EmphasisStructure;
  }
  if (!referent.particle) return ContextCategory::OtherParticle;
  switch (*referent.particle) {
    case Particle::Ha:
      return ContextCategory::CompanyHa;
    case Particle::Ga:
      return ContextCategory::CompanyGa;
    case Particle::Deha:
      return ContextCategory::CompanyDeha;
    case Particle::Niyoruto:
      return ContextCategory::CompanyNiyoruto;
    case Particle::To:
      return ContextCategory::CompanyTo;
    default:
      return ContextCategory::OtherParticle;
  }
}

}  // namespace dousha
