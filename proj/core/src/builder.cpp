#include "dousha/builder.hpp"

#include "dousha/utf8.hpp"

namespace dousha {

std::string_view particle_script(Particle p) {
  switch (p) {
    case Particle::Ha:
      return "は";
    case Particle::Ga:
      return "が";
    case Particle::No:
      return "の";
    case Particle::To:
      return "と";
    case Particle::Deha:
      return "では";
    case Particle::Niyoruto:
      return "によると";
    case Particle::Kara:
      return "から";
    case Particle::WoTsuuji:
      return "を通じ";
    case Particle::TonoAidade:
      return "との間で";
    case Particle::Other:
      return "も";
  }
  return "";
}

void SentenceBuilder::append_separator() {
  if (!sentence_.text.empty()) {
    sentence_.text += ' ';
    cp_len_ += 1;
  }
}

SentenceBuilder& SentenceBuilder::word(std::string_view w) {
  append_separator();
  sentence_.text += w;
  cp_len_ += utf8::length(w).value();
  return *this;
}

SentenceBuilder& SentenceBuilder::mention(MentionKind kind, std::string_view id,
                                          std::string_view surface,
                                          std::optional<Particle> particle) {
  append_separator();
  Mention m;
  m.mention_id = std::string(id);
  m.kind = kind;
  m.start = cp_len_;
  m.end = cp_len_ + utf8::length(surface).value();
  m.particle = particle;
  sentence_.text += surface;
  cp_len_ = m.end;
  if (particle) {
    const std::string_view script = particle_script(*particle);
    sentence_.text += script;
    cp_len_ += utf8::length(script).value();
  }
  sentence_.mentions.push_back(std::move(m));
  return *this;
}

SentenceBuilder& SentenceBuilder::company(std::string_view id, std::string_view surface,
                                          std::optional<Particle> particle) {
  return mention(MentionKind::Company, id, surface, particle);
}

SentenceBuilder& SentenceBuilder::person(std::string_view id, std::string_view surface) {
  return mention(MentionKind::Person, id, surface);
}

SentenceBuilder& SentenceBuilder::title(std::string_view id, std::string_view surface) {
  return mention(MentionKind::Title, id, surface);
}

SentenceBuilder& SentenceBuilder::anaphor(std::string_view id, AnaphorParticle particle,
                                          std::string_view surface) {
  return mention(MentionKind::Anaphor, id, surface, to_particle(particle));
}

SentenceBuilder& SentenceBuilder::gold_ref(std::string_view referent_id) {
  sentence_.mentions.back().gold_ref = std::string(referent_id);
  return *this;
}

SentenceBuilder& SentenceBuilder::context(ContextCategory label) {
  sentence_.mentions.back().context_label = label;
  return *this;
}

SentenceBuilder& SentenceBuilder::period() {
  sentence_.text += "。";
  cp_len_ += 1;
  return *this;
}

Sentence SentenceBuilder::build() && { return std::move(sentence_); }

DocumentBuilder::DocumentBuilder(std::string doc_id) {
  doc_.doc_id = std::move(doc_id);
}

DocumentBuilder& DocumentBuilder::paragraph() {
  doc_.paragraphs.emplace_back();
  return *this;
}

DocumentBuilder& DocumentBuilder::add(Sentence sentence) {
  if (doc_.paragraphs.empty()) doc_.paragraphs.emplace_back();
  doc_.paragraphs.back().sentences.push_back(std::move(sentence));
  return *this;
}

DocumentBuilder& DocumentBuilder::sentence(SentenceBuilder&& sb) {
  return add(std::move(sb).build());
}

Document DocumentBuilder::build() && { return std::move(doc_); }

}  // namespace dousha
