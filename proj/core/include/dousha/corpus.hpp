#ifndef DOUSHA_CORPUS_HPP
#define DOUSHA_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dousha/particle.hpp"

namespace dousha {

enum class MentionKind { Company, Person, Title, Anaphor };

// Structural distance from an anaphor back to its referent, bucketed the
// way the location/context profile reports it. A referent in a different
// paragraph is always classified by paragraph distance, even when it is
// only one sentence back.
enum class LocationCategory {
  WithinSameSentence,
  PreviousSentence,
  TwoSentencesBefore,
  ThreeSentencesBefore,
  PreviousParagraph,
  TwoParagraphsBefore,
  ThreeParagraphsBefore,
  FurtherBack,
};

// Syntactic/particle environment of a referent. PartOfSubject and
// TopicOfParagraph require discourse-level judgement and are therefore
// only ever assigned through gold annotation, never computed.
enum class ContextCategory {
  CompanyHa,
  CompanyGa,
  CompanyDeha,
  CompanyNiyoruto,
  CompanyTo,
  EmphasisStructure,
  PartOfSubject,
  TopicOfParagraph,
  OtherParticle,
};

// An annotated span. Offsets are code-point offsets into the owning
// sentence's text; end is exclusive.
struct Mention {
  std::string mention_id;
  MentionKind kind = MentionKind::Company;
  std::size_t start = 0;
  std::size_t end = 0;
  std::optional<Particle> particle;
  std::optional<ContextCategory> context_label;  // gold annotation, anaphors excluded
  std::optional<std::string> gold_ref;           // anaphors only
};

struct Sentence {
  std::string text;
  std::vector<Mention> mentions;  // sorted by start, pairwise non-overlapping
};

struct Paragraph {
  std::vector<Sentence> sentences;
};

struct Document {
  std::string doc_id;
  std::vector<Paragraph> paragraphs;
};

struct Corpus {
  std::vector<Document> documents;
};

std::string_view mention_kind_key(MentionKind k);
std::optional<MentionKind> parse_mention_kind(std::string_view key);

std::string_view location_key(LocationCategory c);
std::optional<LocationCategory> parse_location(std::string_view key);
// Human-readable label, e.g. "In two sentences before".
std::string_view location_label(LocationCategory c);

std::string_view context_key(ContextCategory c);
std::optional<ContextCategory> parse_context(std::string_view key);
// Human-readable label, e.g. "company name + ha".
std::string_view context_label_text(ContextCategory c);

inline constexpr std::size_t kLocationCategoryCount = 8;
inline constexpr std::size_t kContextCategoryCount = 9;

// All categories in canonical (report) order.
const std::vector<LocationCategory>& all_location_categories();
const std::vector<ContextCategory>& all_context_categories();

class DoushaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precomputed addressing over an immutable Document: global sentence
// numbering and a document-order mention list. Every query the resolver,
// profiler, and evaluator make goes through this.
class DocumentIndex {
 public:
  struct Address {
    std::size_t paragraph = 0;              // paragraph index in the document
    std::size_t sentence = 0;               // global sentence index in the document
    std::size_t sentence_in_paragraph = 0;  // sentence index within its paragraph
    std::size_t ordinal = 0;                // index into mentions()
  };

  struct Entry {
    Address address;
    const Mention* mention = nullptr;
  };

  explicit DocumentIndex(const Document& doc);

  const Document& document() const { return *doc_; }

  std::size_t sentence_count() const { return sentences_.size(); }
  const Sentence& sentence_at(std::size_t global_index) const;
  std::size_t paragraph_of_sentence(std::size_t global_index) const;

  // Mentions in document order: by sentence, then by start offset.
  const std::vector<Entry>& mentions() const { return mentions_; }

  // Lookup by mention id; nullptr when absent.
  const Entry* find(std::string_view mention_id) const;

  // Lookup that throws DoushaError when the id is absent.
  const Entry& at(std::string_view mention_id) const;

 private:
  const Document* doc_;
  struct SentenceRef {
    const Sentence* sentence;
    std::size_t paragraph;
    std::size_t in_paragraph;
  };
  std::vector<SentenceRef> sentences_;
  std::vector<Entry> mentions_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace dousha

#endif  // DOUSHA_CORPUS_HPP
