#ifndef DOUSHA_IO_HPP
#define DOUSHA_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dousha/corpus.hpp"

namespace dousha {

// A problem found while loading or validating a corpus stream.
struct ValidationIssue {
  std::size_t line = 0;  // 1-based input line
  std::string doc_id;    // empty when the record was unreadable
  std::string message;
};

struct ValidationReport {
  std::size_t documents = 0;  // well-formed documents seen
  std::vector<ValidationIssue> issues;
  bool clean() const { return issues.empty(); }
};

class CorpusLoadError : public DoushaError {
 public:
  CorpusLoadError(ValidationIssue issue, const std::string& what)
      : DoushaError(what), issue_(std::move(issue)) {}
  const ValidationIssue& issue() const { return issue_; }

 private:
  ValidationIssue issue_;
};

// Reads the line-delimited document format: one JSON document record per
// line, UTF-8, offsets in code points. Particles are normalized to
// canonical keys and every structural invariant is checked. Throws
// CorpusLoadError on the first problem.
Corpus load_corpus(std::istream& in);

// Same scan, but collects every issue instead of stopping; documents with
// problems are skipped, clean ones are kept.
ValidationReport validate_corpus(std::istream& in, Corpus* out = nullptr);

// Checks an in-memory document against the same invariants load enforces.
std::vector<std::string> check_document(const Document& doc);

// Canonical one-line-per-document serialization; load_corpus of the output
// reproduces the corpus exactly.
void serialize_corpus(const Corpus& corpus, std::ostream& out);
std::string serialize_document(const Document& doc);

}  // namespace dousha

#endif  // DOUSHA_IO_HPP
