#include "dousha/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "dousha/utf8.hpp"

namespace dousha {

namespace {

using json = nlohmann::ordered_json;

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::optional<std::size_t> get_offset(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) return std::nullopt;
  const auto v = j[field].get<long long>();
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

// Parses one record; structural validation happens separately in
// check_document so that in-memory corpora go through the same checks.
Document parse_document(const json& j, std::vector<std::string>& errors) {
  Document doc;
  if (!j.contains("doc_id") || !j["doc_id"].is_string()) {
    errors.push_back("missing or non-string doc_id");
    return doc;
  }
  doc.doc_id = j["doc_id"].get<std::string>();
  if (!j.contains("paragraphs") || !j["paragraphs"].is_array()) {
    errors.push_back("missing paragraphs array");
    return doc;
  }
  for (const json& jp : j["paragraphs"]) {
    Paragraph para;
    if (!jp.contains("sentences") || !jp["sentences"].is_array()) {
      errors.push_back("paragraph without sentences array");
      doc.paragraphs.push_back(std::move(para));
      continue;
    }
    for (const json& js : jp["sentences"]) {
      Sentence sent;
      if (!js.contains("text") || !js["text"].is_string()) {
        errors.push_back("sentence without text");
      } else {
        sent.text = js["text"].get<std::string>();
      }
      if (js.contains("mentions")) {
        if (!js["mentions"].is_array()) {
          errors.push_back("mentions must be an array");
        } else {
          for (const json& jm : js["mentions"]) {
            Mention m;
            if (!jm.contains("mention_id") || !jm["mention_id"].is_string()) {
              errors.push_back("mention without mention_id");
              continue;
            }
            m.mention_id = jm["mention_id"].get<std::string>();
            if (!jm.contains("kind") || !jm["kind"].is_string()) {
              errors.push_back("mention '" + m.mention_id + "' without kind");
              continue;
            }
            const auto kind = parse_mention_kind(jm["kind"].get<std::string>());
            if (!kind) {
              errors.push_back("mention '" + m.mention_id + "' has unknown kind '" +
                               jm["kind"].get<std::string>() + "'");
              continue;
            }
            m.kind = *kind;
            const auto start = get_offset(jm, "start");
            const auto end = get_offset(jm, "end");
            if (!start || !end) {
              errors.push_back("mention '" + m.mention_id +
                               "' has missing or negative offsets");
              continue;
            }
            m.start = *start;
            m.end = *end;
            if (jm.contains("particle")) {
              if (!jm["particle"].is_string()) {
                errors.push_back("mention '" + m.mention_id + "' particle must be a string");
                continue;
              }
              m.particle = normalize_particle(jm["particle"].get<std::string>());
            }
            if (jm.contains("context_label")) {
              if (!jm["context_label"].is_string()) {
                errors.push_back("mention '" + m.mention_id +
                                 "' context_label must be a string");
                continue;
              }
              const auto ctx = parse_context(jm["context_label"].get<std::string>());
              if (!ctx) {
                errors.push_back("mention '" + m.mention_id +
                                 "' has unknown context_label '" +
                                 jm["context_label"].get<std::string>() + "'");
                continue;
              }
              m.context_label = *ctx;
            }
            if (jm.contains("gold_ref")) {
              if (!jm["gold_ref"].is_string()) {
                errors.push_back("mention '" + m.mention_id + "' gold_ref must be a string");
                continue;
              }
              m.gold_ref = jm["gold_ref"].get<std::string>();
            }
            sent.mentions.push_back(std::move(m));
          }
        }
      }
      para.sentences.push_back(std::move(sent));
    }
    doc.paragraphs.push_back(std::move(para));
  }
  return doc;
}

struct Position {
  std::size_t sentence;  // global
  std::size_t start;
  std::size_t end;
  const Mention* mention;
};

}  // namespace

std::vector<std::string> check_document(const Document& doc) {
  std::vector<std::string> errors;
  if (doc.doc_id.empty()) errors.push_back("empty doc_id");
  if (doc.paragraphs.empty()) {
    errors.push_back("document has no paragraphs");
    return errors;
  }
  std::unordered_map<std::string, Position> by_id;
  std::vector<Position> order;
  std::size_t global_sentence = 0;
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    const Paragraph& para = doc.paragraphs[p];
    if (para.sentences.empty()) {
      errors.push_back("paragraph " + std::to_string(p) + " has no sentences");
      continue;
    }
    for (const Sentence& sent : para.sentences) {
      const auto text_len = utf8::length(sent.text);
      if (!text_len) {
        errors.push_back("sentence " + std::to_string(global_sentence) +
                         " text is not valid UTF-8");
        ++global_sentence;
        continue;
      }
      const Mention* prev = nullptr;
      for (const Mention& m : sent.mentions) {
        if (m.start >= m.end) {
          errors.push_back("mention '" + m.mention_id + "' has empty or inverted span");
        } else if (m.end > *text_len) {
          errors.push_back("mention '" + m.mention_id + "' span exceeds sentence length");
        }
        if (prev != nullptr) {
          if (m.start < prev->start) {
            errors.push_back("mention '" + m.mention_id + "' is out of order");
          } else if (m.start < prev->end) {
            errors.push_back("mention '" + m.mention_id + "' overlaps mention '" +
                             prev->mention_id + "'");
          }
        }
        prev = &m;
        if (by_id.count(m.mention_id) != 0) {
          errors.push_back("duplicate mention id '" + m.mention_id + "'");
        } else {
          const Position pos{global_sentence, m.start, m.end, &m};
          by_id.emplace(m.mention_id, pos);
          order.push_back(pos);
        }
        if (m.kind == MentionKind::Anaphor) {
          if (!m.particle || !to_anaphor_particle(*m.particle)) {
            errors.push_back("unsupported anaphor particle on mention '" +
                             m.mention_id + "'");
          }
        } else if (m.gold_ref) {
          errors.push_back("gold_ref on non-anaphor mention '" + m.mention_id + "'");
        }
      }
      ++global_sentence;
    }
  }
  for (const Position& pos : order) {
    const Mention& m = *pos.mention;
    if (m.kind != MentionKind::Anaphor || !m.gold_ref) continue;
    const auto it = by_id.find(*m.gold_ref);
    if (it == by_id.end()) {
      errors.push_back("gold_ref '" + *m.gold_ref + "' of mention '" + m.mention_id +
                       "' names no mention");
      continue;
    }
    const Position& ref = it->second;
    if (ref.mention->kind != MentionKind::Company) {
      errors.push_back("gold_ref '" + *m.gold_ref + "' of mention '" + m.mention_id +
                       "' is not a company");
    }
    const bool before = ref.sentence < pos.sentence ||
                        (ref.sentence == pos.sentence && ref.end <= pos.start);
    if (!before) {
      errors.push_back("gold_ref '" + *m.gold_ref + "' does not precede mention '" +
                       m.mention_id + "'");
    }
  }
  return errors;
}

ValidationReport validate_corpus(std::istream& in, Corpus* out) {
  ValidationReport report;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      report.issues.push_back({line_no, "", "malformed record"});
      continue;
    }
    std::vector<std::string> errors;
    Document doc = parse_document(j, errors);
    if (errors.empty()) {
      for (std::string& e : check_document(doc)) errors.push_back(std::move(e));
    }
    if (errors.empty() && !seen_ids.insert(doc.doc_id).second) {
      errors.push_back("duplicate doc_id '" + doc.doc_id + "'");
    }
    if (!errors.empty()) {
      for (std::string& e : errors) {
        report.issues.push_back({line_no, doc.doc_id, std::move(e)});
      }
      continue;
    }
    ++report.documents;
    if (out != nullptr) out->documents.push_back(std::move(doc));
  }
  return report;
}

Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  const ValidationReport report = validate_corpus(in, &corpus);
  if (!report.clean()) {
    const ValidationIssue& first = report.issues.front();
    std::ostringstream what;
    what << "line " << first.line;
    if (!first.doc_id.empty()) what << " doc '" << first.doc_id << "'";
    what << ": " << first.message;
    throw CorpusLoadError(first, what.str());
  }
  return corpus;
}

std::string serialize_document(const Document& doc) {
  json j;
  j["doc_id"] = doc.doc_id;
  json paragraphs = json::array();
  for (const Paragraph& para : doc.paragraphs) {
    json jp;
    json sentences = json::array();
    for (const Sentence& sent : para.sentences) {
      json js;
      js["text"] = sent.text;
      json mentions = json::array();
      for (const Mention& m : sent.mentions) {
        json jm;
        jm["mention_id"] = m.mention_id;
        jm["kind"] = std::string(mention_kind_key(m.kind));
        jm["start"] = m.start;
        jm["end"] = m.end;
        if (m.particle) jm["particle"] = std::string(particle_key(*m.particle));
        if (m.context_label) jm["context_label"] = std::string(context_key(*m.context_label));
        if (m.gold_ref) jm["gold_ref"] = *m.gold_ref;
        mentions.push_back(std::move(jm));
      }
      js["mentions"] = std::move(mentions);
      sentences.push_back(std::move(js));
    }
    jp["sentences"] = std::move(sentences);
    paragraphs.push_back(std::move(jp));
  }
  j["paragraphs"] = std::move(paragraphs);
  return j.dump();
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Document& doc : corpus.documents) {
    out << serialize_document(doc) << '\n';
  }
}

}  // namespace dousha
