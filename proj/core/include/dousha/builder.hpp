#ifndef DOUSHA_BUILDER_HPP
#define DOUSHA_BUILDER_HPP

#include <string>
#include <string_view>

#include "dousha/corpus.hpp"

namespace dousha {

// Assembles one sentence from words and annotated spans, tracking
// code-point offsets so callers never compute them by hand. Particles are
// rendered in kana directly after the mention text; everything else is
// space-separated.
class SentenceBuilder {
 public:
  SentenceBuilder& word(std::string_view w);

  // Adds a mention spanning `surface`. The particle, when given, is
  // appended to the text in kana and recorded on the mention.
  SentenceBuilder& mention(MentionKind kind, std::string_view id,
                           std::string_view surface,
                           std::optional<Particle> particle = std::nullopt);

  SentenceBuilder& company(std::string_view id, std::string_view surface,
                           std::optional<Particle> particle = std::nullopt);
  SentenceBuilder& person(std::string_view id, std::string_view surface);
  SentenceBuilder& title(std::string_view id, std::string_view surface);
  SentenceBuilder& anaphor(std::string_view id, AnaphorParticle particle,
                           std::string_view surface = "同社");

  // Sets the gold annotations of the most recently added mention.
  SentenceBuilder& gold_ref(std::string_view referent_id);
  SentenceBuilder& context(ContextCategory label);

  // Terminal 。 with no preceding space.
  SentenceBuilder& period();

  Sentence build() &&;

 private:
  void append_separator();
  Sentence sentence_;
  std::size_t cp_len_ = 0;
};

// Accumulates paragraphs and sentences into a Document.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(std::string doc_id);

  DocumentBuilder& paragraph();
  DocumentBuilder& add(Sentence sentence);
  DocumentBuilder& sentence(SentenceBuilder&& sb);

  Document build() &&;

 private:
  Document doc_;
};

// Kana rendering of a particle, e.g. Particle::Niyoruto -> "によると".
std::string_view particle_script(Particle p);

}  // namespace dousha

#endif  // DOUSHA_BUILDER_HPP
