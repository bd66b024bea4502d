#include "gufo/report.hpp"

#include "json.hpp"

namespace gufo {

std::size_t Report::count(Severity s) const {
  std::size_t n = 0;
  for (const Violation& v : violations) {
    if (v.severity == s) ++n;
  }
  return n;
}

std::string emit_text(const Report& r) {
  std::string out;
  for (const Violation& v : r.violations) {
    if (v.location) {
      out += v.location->file;
      out += ':';
      out += std::to_string(v.location->line);
      out += ": ";
    }
    out += severity_name(v.severity);
    out += " [";
    out += v.rule;
    out += "] ";
    out += display_term(v.focus, r.prefixes);
    out += ": ";
    out += v.message;
    out += '\n';
  }
  out += std::to_string(r.count(Severity::Error)) + " error(s), " +
         std::to_string(r.count(Severity::Warning)) + " warning(s), " +
         std::to_string(r.count(Severity::Info)) + " info note(s)\n";
  return out;
}

std::string emit_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["version"] = r.version;
  j["files"] = json::array();
  for (const FileSummary& f : r.files) {
    j["files"].push_back(json{{"path", f.path}, {"triples", f.triples}});
  }
  j["violations"] = json::array();
  for (const Violation& v : r.violations) {
    json jv;
    jv["rule"] = v.rule;
    jv["severity"] = severity_name(v.severity);
    jv["focus"] = v.focus.ntriples();
    jv["secondary"] = json::array();
    for (const Term& t : v.secondary) jv["secondary"].push_back(t.ntriples());
    jv["message"] = v.message;
    if (v.location) {
      jv["file"] = v.location->file;
      jv["line"] = v.location->line;
    } else {
      jv["file"] = nullptr;
      jv["line"] = nullptr;
    }
    j["violations"].push_back(std::move(jv));
  }
  j["counts"] = json{{"error", r.count(Severity::Error)},
                     {"warning", r.count(Severity::Warning)},
                     {"info", r.count(Severity::Info)}};
  if (r.stats) {
    json js;
    js["triples"] = r.stats->triples;
    js["classes"] = r.stats->classes;
    js["individuals"] = r.stats->individuals;
    json jm;
    for (const auto& [name, count] : r.stats->metatypeCounts) jm[name] = count;
    js["metatypes"] = std::move(jm);
    j["stats"] = std::move(js);
  }
  return j.dump(2) + "\n";
}

}  // namespace gufo
