#include "dousha/profiler.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dousha {

namespace {

constexpr int kNameWidth = 44;
constexpr int kCountWidth = 6;

void append_row(std::ostringstream& out, std::string_view name, int indent,
                std::size_t count) {
  std::string label(static_cast<std::size_t>(indent), ' ');
  label += name;
  out << std::left << std::setw(kNameWidth) << label << std::right
      << std::setw(kCountWidth) << count << '\n';
}

}  // namespace

std::size_t LocationContextProfile::at(LocationCategory loc, ContextCategory ctx) const {
  auto it = counts.find({loc, ctx});
  return it == counts.end() ? 0 : it->second;
}

std::size_t LocationContextProfile::location_subtotal(LocationCategory loc) const {
  std::size_t n = 0;
  for (ContextCategory ctx : all_context_categories()) n += at(loc, ctx);
  return n;
}

LocationContextProfile profile(const Corpus& corpus, AnaphorParticle particle,
                               const ClosingChars& closing) {
  LocationContextProfile result;
  result.particle = particle;
  for (const Document& doc : corpus.documents) {
    DocumentIndex index(doc);
    for (const auto& entry : index.mentions()) {
      const Mention& m = *entry.mention;
      if (m.kind != MentionKind::Anaphor) continue;
      if (!m.particle || to_anaphor_particle(*m.particle) != particle) continue;
      if (!m.gold_ref) {
        throw DoushaError("document '" + doc.doc_id + "': anaphor '" + m.mention_id +
                          "' has no gold referent");
      }
      const Mention& gold = *index.at(*m.gold_ref).mention;
      LocationCategory loc = classify_location(index, m, gold);
      ContextCategory ctx = classify_context(index, gold, closing);
      ++result.counts[{loc, ctx}];
      ++result.total;
    }
  }
  return result;
}

DistantReferentStat distant_particle_stat(const Corpus& corpus) {
  DistantReferentStat stat;
  for (const Document& doc : corpus.documents) {
    DocumentIndex index(doc);
    for (const auto& entry : index.mentions()) {
      const Mention& m = *entry.mention;
      if (m.kind != MentionKind::Anaphor) continue;
      if (!m.particle) continue;
      if (!m.gold_ref) {
        throw DoushaError("document '" + doc.doc_id + "': anaphor '" + m.mention_id +
                          "' has no gold referent");
      }
      const Mention& gold = *index.at(*m.gold_ref).mention;
      LocationCategory loc = classify_location(index, m, gold);
      if (loc == LocationCategory::WithinSameSentence ||
          loc == LocationCategory::PreviousSentence) {
        continue;
      }
      ++stat.distant_total;
      if (gold.particle == Particle::Ha) ++stat.ha_marked;
    }
  }
  return stat;
}

std::string render_profile(const LocationContextProfile& p) {
  std::ostringstream out;
  std::string header = "dousha with ";
  header += anaphor_particle_key(p.particle);
  out << std::left << std::setw(kNameWidth) << header << std::right
      << std::setw(kCountWidth) << "cases" << '\n';
  out << std::string(kNameWidth + kCountWidth, '-') << '\n';
  for (LocationCategory loc : all_location_categories()) {
    std::size_t subtotal = p.location_subtotal(loc);
    if (subtotal == 0) continue;
    append_row(out, location_label(loc), 0, subtotal);
    for (ContextCategory ctx : all_context_categories()) {
      std::size_t n = p.at(loc, ctx);
      if (n == 0) continue;
      append_row(out, context_label_text(ctx), 2, n);
    }
  }
  out << std::string(kNameWidth + kCountWidth, '-') << '\n';
  append_row(out, "total", 0, p.total);
  return out.str();
}

std::string profile_records(const LocationContextProfile& p) {
  std::ostringstream out;
  for (LocationCategory loc : all_location_categories()) {
    for (ContextCategory ctx : all_context_categories()) {
      std::size_t n = p.at(loc, ctx);
      if (n == 0) continue;
      nlohmann::ordered_json rec;
      rec["particle"] = anaphor_particle_key(p.particle);
      rec["location"] = location_key(loc);
      rec["context"] = context_key(ctx);
      rec["count"] = n;
      out << rec.dump() << '\n';
    }
  }
  return out.str();
}

std::string render_distant_stat(const DistantReferentStat& stat) {
  std::ostringstream out;
  out << "referents two or more sentences back: " << stat.distant_total << '\n';
  out << "of those marked as company name + ha:  " << stat.ha_marked << '\n';
  return out.str();
}

std::string distant_stat_record(const DistantReferentStat& stat) {
  nlohmann::ordered_json rec;
  rec["distant_total"] = stat.distant_total;
  rec["ha_marked"] = stat.ha_marked;
  return rec.dump() + "\n";
}

}  // namespace dousha
