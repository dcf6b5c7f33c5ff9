#include "surfrep/serialize.hpp"

#include "surfrep/word.hpp"

#include <stdexcept>

namespace surfrep {

using json = nlohmann::ordered_json;

json to_json(const RepPoint& pt) {
  json coords = json::array();
  for (const Rational& c : pt.coords) coords.push_back(c.str());
  return json{{"space", pt.space.name()}, {"coords", std::move(coords)}};
}

RepPoint rep_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("coords"))
    throw std::invalid_argument("rep point JSON needs \"space\" and \"coords\"");
  RepPoint pt;
  pt.space = Space::parse(j.at("space").get<std::string>());
  for (const auto& c : j.at("coords"))
    pt.coords.push_back(Rational::parse(c.get<std::string>()));
  if (static_cast<int>(pt.coords.size()) != pt.space.coord_count())
    throw std::invalid_argument("rep point JSON: space " + pt.space.name() + " needs " +
                                std::to_string(pt.space.coord_count()) + " coordinates");
  return pt;
}

json to_json(const GenAssignment& rep) {
  json images = json::object();
  const Presentation& pres = rep.presentation();
  for (int i = 0; i < pres.generator_count(); ++i)
    images[pres.generator_name(i)] = rep.image(i).str();
  return json{{"presentation", pres.surface_name()}, {"images", std::move(images)}};
}

json to_json(const MembershipResult& m) {
  json j{{"member", m.ok}};
  if (!m.ok) {
    j["violated"] = m.constraint;
    j["residual"] = m.residual.str();
  }
  return j;
}

json to_json(const SccClass& cls, const Presentation& pres) {
  return json{{"kind", cls.kind},   {"index", cls.index}, {"one_sided", cls.one_sided},
              {"k", cls.k},         {"l", cls.l},         {"eps", cls.eps},
              {"word", render_word(cls.word, pres)}};
}

std::string scc_line(const SccClass& cls, const Presentation& pres) {
  std::string line = "kind=" + cls.kind;
  if (cls.index != 0) line += ":" + std::to_string(cls.index);
  line += " one_sided=" + std::to_string(cls.one_sided ? 1 : 0);
  if (cls.k != 0 || cls.l != 0)
    line += " k=" + std::to_string(cls.k) + " l=" + std::to_string(cls.l);
  line += " " + render_word(cls.word, pres);
  return line;
}

json to_json(const Certificate& cert) {
  json inputs = json::object();
  for (const auto& [key, value] : cert.inputs) inputs[key] = value;
  json checks = json::array();
  for (const CertCheck& check : cert.checks)
    checks.push_back(json{{"name", check.name},
                          {"status", check.pass ? "pass" : "fail"},
                          {"witness", check.witness}});
  return json{{"inputs", std::move(inputs)},
              {"checks", std::move(checks)},
              {"verdict", cert.accept ? "accept" : "reject"},
              {"notes", cert.notes}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("inputs") || !j.contains("checks") ||
      !j.contains("verdict"))
    throw std::invalid_argument("certificate JSON needs \"inputs\", \"checks\", \"verdict\"");
  Certificate cert;
  for (const auto& [key, value] : j.at("inputs").items())
    cert.inputs.emplace_back(key, value.get<std::string>());
  for (const auto& check : j.at("checks")) {
    const std::string status = check.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
      throw std::invalid_argument("certificate JSON: check status must be pass or fail");
    cert.checks.push_back({check.at("name").get<std::string>(), status == "pass",
                           check.value("witness", std::string())});
  }
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "accept" && verdict != "reject")
    throw std::invalid_argument("certificate JSON: verdict must be accept or reject");
  cert.accept = verdict == "accept";
  for (const auto& note : j.value("notes", json::array())) cert.notes.push_back(note);
  return cert;
}

json to_json(const ScanResult& result, const Presentation& pres) {
  auto hits = [&pres](const std::vector<KernelHit>& list) {
    json out = json::array();
    for (const KernelHit& hit : list) {
      json entry = to_json(hit.cls, pres);
      entry["image"] = hit.image.str();
      out.push_back(std::move(entry));
    }
    return out;
  };
  return json{{"scanned", result.scanned},
              {"identity", hits(result.identity)},
              {"minus_identity", hits(result.minus_identity)},
              {"kernel_free", result.identity.empty() && result.minus_identity.empty()},
              {"notes", result.notes}};
}

json to_json(const TwoSidedReport& report) {
  json rows = json::array();
  const Presentation& pres = report.assignment.presentation();
  for (const TwoSidedRow& row : report.rows)
    rows.push_back(json{{"word", render_word(row.word, pres)},
                        {"det", row.det},
                        {"character", row.character},
                        {"match", row.match}});
  return json{{"assignment", to_json(report.assignment)},
              {"relator_residual", report.relation.residual.str()},
              {"relation_holds", report.relation.holds_exactly},
              {"c_square_identity", report.c_square_identity},
              {"rows", std::move(rows)},
              {"all_match", report.all_match}};
}

}  // namespace surfrep
