#include "dousha/evaluator.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dousha {

namespace {

std::string fmt_pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
  return buf;
}

std::string fmt_ratio(const TallyCounts& t) {
  std::ostringstream out;
  out << t.correct << '/' << t.total;
  return out.str();
}

void check_method_particle(MethodId method, AnaphorParticle particle) {
  if (method == MethodId::Method2Ga && particle != AnaphorParticle::Ga) {
    throw DoushaError("method m2 only handles ga anaphors");
  }
  if (method == MethodId::Method3Ha && particle != AnaphorParticle::Ha) {
    throw DoushaError("method m3 only handles ha anaphors");
  }
}

nlohmann::ordered_json report_json(const EvalReport& r, bool by_location, bool by_rule) {
  nlohmann::ordered_json rec;
  rec["method"] = method_key(r.method);
  rec["particle"] = anaphor_particle_key(r.particle);
  rec["correct"] = r.correct;
  rec["total"] = r.total;
  if (r.accuracy) {
    rec["accuracy"] = *r.accuracy;
  } else {
    rec["accuracy"] = nullptr;
  }
  if (by_location) {
    auto& arr = rec["by_location"] = nlohmann::ordered_json::array();
    for (const auto& [loc, tally] : r.by_location) {
      nlohmann::ordered_json row;
      row["location"] = location_key(loc);
      row["correct"] = tally.correct;
      row["total"] = tally.total;
      arr.push_back(std::move(row));
    }
  }
  if (by_rule) {
    auto& arr = rec["by_rule"] = nlohmann::ordered_json::array();
    for (const auto& [rule, tally] : r.by_rule) {
      nlohmann::ordered_json row;
      if (rule) {
        row["rule"] = rule_key(*rule);
      } else {
        row["rule"] = nullptr;
      }
      row["correct"] = tally.correct;
      row["total"] = tally.total;
      arr.push_back(std::move(row));
    }
  }
  return rec;
}

}  // namespace

EvalReport evaluate(const Corpus& corpus, MethodId method, AnaphorParticle particle,
                    const ResolveOptions& options) {
  check_method_particle(method, particle);
  EvalReport report;
  report.method = method;
  report.particle = particle;
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
      Resolution res = resolve(index, m, method, options);
      bool correct = res.predicted && *res.predicted == *m.gold_ref;

      ++report.total;
      if (correct) ++report.correct;

      LocationCategory loc = classify_location(index, m, gold);
      auto& loc_tally = report.by_location[loc];
      ++loc_tally.total;
      if (correct) ++loc_tally.correct;

      auto& rule_tally = report.by_rule[res.rule];
      ++rule_tally.total;
      if (correct) ++rule_tally.correct;
    }
  }
  if (report.total > 0) {
    report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
  }
  return report;
}

MethodComparison compare_methods(const Corpus& corpus, const ResolveOptions& options) {
  MethodComparison cmp;
  cmp.scm_ga = evaluate(corpus, MethodId::Scm, AnaphorParticle::Ga, options);
  cmp.cascade_ga = evaluate(corpus, MethodId::Method2Ga, AnaphorParticle::Ga, options);
  cmp.scm_ha = evaluate(corpus, MethodId::Scm, AnaphorParticle::Ha, options);
  cmp.cascade_ha = evaluate(corpus, MethodId::Method3Ha, AnaphorParticle::Ha, options);
  return cmp;
}

std::string render_report(const EvalReport& r, bool by_location, bool by_rule) {
  std::ostringstream out;
  out << "method: " << method_key(r.method)
      << "  particle: " << anaphor_particle_key(r.particle) << '\n';
  out << "accuracy: ";
  if (r.accuracy) {
    out << fmt_pct(*r.accuracy);
  } else {
    out << "n/a";
  }
  out << "  (" << r.correct << '/' << r.total << ")\n";
  if (by_location) {
    out << "by location\n";
    for (const auto& [loc, tally] : r.by_location) {
      out << "  " << std::left << std::setw(34) << location_label(loc) << std::right
          << std::setw(9) << fmt_ratio(tally) << '\n';
    }
  }
  if (by_rule) {
    out << "by rule\n";
    for (const auto& [rule, tally] : r.by_rule) {
      std::string name = rule ? std::string(rule_key(*rule)) : "(no prediction)";
      out << "  " << std::left << std::setw(34) << name << std::right << std::setw(9)
          << fmt_ratio(tally) << '\n';
    }
  }
  return out.str();
}

std::string render_comparison(const MethodComparison& cmp) {
  std::ostringstream out;
  auto row = [&out](const EvalReport& r) {
    out << "  " << std::left << std::setw(6) << method_key(r.method) << std::right
        << std::setw(7) << (r.accuracy ? fmt_pct(*r.accuracy) : std::string("n/a"))
        << "  (" << r.correct << '/' << r.total << ")\n";
  };
  out << "dousha with ga\n";
  row(cmp.scm_ga);
  row(cmp.cascade_ga);
  out << "dousha with ha\n";
  row(cmp.scm_ha);
  row(cmp.cascade_ha);
  return out.str();
}

std::string eval_record(const EvalReport& r, bool by_location, bool by_rule) {
  return report_json(r, by_location, by_rule).dump() + "\n";
}

std::string comparison_records(const MethodComparison& cmp) {
  std::string out;
  out += eval_record(cmp.scm_ga);
  out += eval_record(cmp.cascade_ga);
  out += eval_record(cmp.scm_ha);
  out += eval_record(cmp.cascade_ha);
  return out;
}

}  // namespace dousha
