#include "dousha/corpus.hpp"

#include <array>

namespace dousha {

namespace {

struct KindName {
  std::string_view key;
  MentionKind value;
};

constexpr std::array<KindName, 4> kKinds = {{
    {"company", MentionKind::Company},
    {"person", MentionKind::Person},
    {"title", MentionKind::Title},
    {"anaphor", MentionKind::Anaphor},
}};

struct LocationName {
  std::string_view key;
  std::string_view label;
  LocationCategory value;
};

constexpr std::array<LocationName, kLocationCategoryCount> kLocations = {{
    {"same_sentence", "Within the same sentence", LocationCategory::WithinSameSentence},
    {"previous_sentence", "In the previous sentence", LocationCategory::PreviousSentence},
    {"two_sentences_before", "In two sentences before", LocationCategory::TwoSentencesBefore},
    {"three_sentences_before", "In three sentences before", LocationCategory::ThreeSentencesBefore},
    {"previous_paragraph", "In previous paragraph", LocationCategory::PreviousParagraph},
    {"two_paragraphs_before", "In two paragraphs before", LocationCategory::TwoParagraphsBefore},
    {"three_paragraphs_before", "In three paragraphs before", LocationCategory::ThreeParagraphsBefore},
    {"further_back", "Further back", LocationCategory::FurtherBack},
}};

struct ContextName {
  std::string_view key;
  std::string_view label;
  ContextCategory value;
};

constexpr std::array<ContextName, kContextCategoryCount> kContexts = {{
    {"company_ha", "company name + ha", ContextCategory::CompanyHa},
    {"company_ga", "company name + ga", ContextCategory::CompanyGa},
    {"company_deha", "company name + deha", ContextCategory::CompanyDeha},
    {"company_niyoruto", "company name + niyoruto", ContextCategory::CompanyNiyoruto},
    {"company_to", "company name + to", ContextCategory::CompanyTo},
    {"emphasis_structure", "emphasis structure", ContextCategory::EmphasisStructure},
    {"part_of_subject", "part of the subject", ContextCategory::PartOfSubject},
    {"topic_of_paragraph", "topic of the paragraph", ContextCategory::TopicOfParagraph},
    {"other_particle", "others", ContextCategory::OtherParticle},
}};

}  // namespace

std::string_view mention_kind_key(MentionKind k) {
  for (const auto& e : kKinds) {
    if (e.value == k) return e.key;
  }
  return "company";
}

std::optional<MentionKind> parse_mention_kind(std::string_view key) {
  for (const auto& e : kKinds) {
    if (e.key == key) return e.value;
  }
  return std::nullopt;
}

std::string_view location_key(LocationCategory c) {
  for (const auto& e : kLocations) {
    if (e.value == c) return e.key;
  }
  return "further_back";
}

std::optional<LocationCategory> parse_location(std::string_view key) {
  for (const auto& e : kLocations) {
    if (e.key == key) return e.value;
  }
  return std::nullopt;
}

std::string_view location_label(LocationCategory c) {
  for (const auto& e : kLocations) {
    if (e.value == c) return e.label;
  }
  return "Further back";
}

std::string_view context_key(ContextCategory c) {
  for (const auto& e : kContexts) {
    if (e.value == c) return e.key;
  }
  return "other_particle";
}

std::optional<ContextCategory> parse_context(std::string_view key) {
  for (const auto& e : kContexts) {
    if (e.key == key) return e.value;
  }
  return std::nullopt;
}

std::string_view context_label_text(ContextCategory c) {
  for (const auto& e : kContexts) {
    if (e.value == c) return e.label;
  }
  return "others";
}

const std::vector<LocationCategory>& all_location_categories() {
  static const std::vector<LocationCategory> cats = [] {
    std::vector<LocationCategory> v;
    for (const auto& e : kLocations) v.push_back(e.value);
    return v;
  }();
  return cats;
}

const std::vector<ContextCategory>& all_context_categories() {
  static const std::vector<ContextCategory> cats = [] {
    std::vector<ContextCategory> v;
    for (const auto& e : kContexts) v.push_back(e.value);
    return v;
  }();
  return cats;
}

DocumentIndex::DocumentIndex(const Document& doc) : doc_(&doc) {
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    const Paragraph& para = doc.paragraphs[p];
    for (std::size_t s = 0; s < para.sentences.size(); ++s) {
      sentences_.push_back({&para.sentences[s], p, s});
    }
  }
  for (std::size_t g = 0; g < sentences_.size(); ++g) {
    const SentenceRef& ref = sentences_[g];
    for (const Mention& m : ref.sentence->mentions) {
      Address addr;
      addr.paragraph = ref.paragraph;
      addr.sentence = g;
      addr.sentence_in_paragraph = ref.in_paragraph;
      addr.ordinal = mentions_.size();
      mentions_.push_back({addr, &m});
      by_id_.emplace(m.mention_id, addr.ordinal);
    }
  }
}

const Sentence& DocumentIndex::sentence_at(std::size_t global_index) const {
  return *sentences_.at(global_index).sentence;
}

std::size_t DocumentIndex::paragraph_of_sentence(std::size_t global_index) const {
  return sentences_.at(global_index).paragraph;
}

const DocumentIndex::Entry* DocumentIndex::find(std::string_view mention_id) const {
  auto it = by_id_.find(std::string(mention_id));
  if (it == by_id_.end()) return nullptr;
  return &mentions_[it->second];
}

const DocumentIndex::Entry& DocumentIndex::at(std::string_view mention_id) const {
  const Entry* e = find(mention_id);
  if (e == nullptr) {
    throw DoushaError("unknown mention id '" + std::string(mention_id) +
                      "' in document '" + doc_->doc_id + "'");
  }
  return *e;
}

}  // namespace dousha
