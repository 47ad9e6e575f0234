#ifndef DOUSHA_CLASSIFY_HPP
#define DOUSHA_CLASSIFY_HPP

#include <string_view>
#include <vector>

#include "dousha/corpus.hpp"

namespace dousha {

// Characters that may follow a mention without it losing sentence-final
// status: closing punctuation, quotes, and whitespace.
class ClosingChars {
 public:
  ClosingChars() = default;
  explicit ClosingChars(std::vector<char32_t> chars) : chars_(std::move(chars)) {}

  bool contains(char32_t cp) const;

  // 。 、 」 』 ） . " ) and ASCII/ideographic whitespace.
  static const ClosingChars& defaults();

 private:
  std::vector<char32_t> chars_;
};

// True iff only closing characters follow the mention in its sentence.
bool is_sentence_final(const Mention& mention, const Sentence& sentence,
                       const ClosingChars& closing = ClosingChars::defaults());

// Number of sentence boundaries between candidate's sentence and anaphor's
// sentence, counted across paragraph boundaries; 0 means same sentence.
// Throws DoushaError unless candidate precedes anaphor in document order.
std::size_t sentence_distance(const DocumentIndex& doc, const Mention& anaphor,
                              const Mention& candidate);

// True iff `before` strictly precedes `after` in document order: an earlier
// sentence, or the same sentence with before.end <= after.start.
bool precedes(const DocumentIndex& doc, const Mention& before, const Mention& after);

// Buckets the (anaphor, referent) distance. Same paragraph buckets by
// sentence distance; a paragraph crossing buckets by paragraph distance.
// Throws DoushaError unless referent precedes anaphor.
LocationCategory classify_location(const DocumentIndex& doc, const Mention& anaphor,
                                   const Mention& referent);

// Context of a company mention: the gold context_label when present,
// otherwise EmphasisStructure for a sentence-final company, otherwise a
// bucket determined by its particle. Throws DoushaError on non-company
// mentions.
ContextCategory classify_context(const DocumentIndex& doc, const Mention& referent,
                                 const ClosingChars& closing = ClosingChars::defaults());

}  // namespace dousha

#endif  // DOUSHA_CLASSIFY_HPP
