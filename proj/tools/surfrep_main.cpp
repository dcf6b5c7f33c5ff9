#include <surfrep/certify.hpp>
#include <surfrep/presentation.hpp>
#include <surfrep/repspace.hpp>
#include <surfrep/scc.hpp>
#include <surfrep/serialize.hpp>
#include <surfrep/word.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using surfrep::Certificate;
using surfrep::GenAssignment;
using surfrep::Presentation;
using surfrep::Rational;
using surfrep::RepPoint;
using surfrep::SccClass;
using surfrep::Space;
using surfrep::UTMat;
using surfrep::Word;
using json = nlohmann::ordered_json;

struct Output {
  bool as_json = false;
  std::string out_path;

  void add_options(CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
    cmd->add_option("--out", out_path, "write the output to this file instead of stdout");
  }

  void deliver(const std::string& text_payload, const json& json_payload) const {
    const std::string payload = as_json ? json_payload.dump(2) + "\n" : text_payload;
    if (out_path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file " + out_path);
    file << payload;
  }
};

std::vector<Rational> parse_coords(const std::string& text) {
  std::vector<Rational> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) out.push_back(Rational::parse(token));
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

RepPoint parse_point(const std::string& space_str, const std::string& point_str) {
  RepPoint pt;
  pt.space = Space::parse(space_str);
  pt.coords = parse_coords(point_str);
  if (static_cast<int>(pt.coords.size()) != pt.space.coord_count())
    throw std::invalid_argument("space " + pt.space.name() + " needs " +
                                std::to_string(pt.space.coord_count()) +
                                " coordinates, got " + std::to_string(pt.coords.size()));
  return pt;
}

std::string coords_text(const std::vector<Rational>& coords) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].str();
  }
  return out;
}

std::string certificate_text(const Certificate& cert) {
  std::string out = "inputs:";
  for (const auto& [key, value] : cert.inputs) out += " " + key + "=" + value;
  out += "\n";
  for (const auto& check : cert.checks)
    out += "check " + check.name + ": " + (check.pass ? "pass" : "fail") + " (" +
           check.witness + ")\n";
  out += "verdict: " + std::string(cert.accept ? "accept" : "reject") + "\n";
  for (const auto& note : cert.notes) out += "note: " + note + "\n";
  return out;
}

Rational input_coord(const Certificate& cert, const std::string& key) {
  for (const auto& [name, value] : cert.inputs)
    if (name == key) return Rational::parse(value);
  throw std::invalid_argument("certificate lacks input \"" + key + "\"");
}

/* Builds an assignment either from --space/--point (a point on a
 * representation variety) or from --surface/--images (explicit matrices,
 * one name=x,y[,det] per generator). */
GenAssignment assignment_from_flags(const std::string& space_str, const std::string& point_str,
                                    const std::string& surface_str,
                                    const std::vector<std::string>& image_strs) {
  const bool by_point = !space_str.empty() || !point_str.empty();
  const bool by_images = !surface_str.empty() || !image_strs.empty();
  if (by_point == by_images)
    throw std::invalid_argument("pass either --space with --point, or --surface with --images");
  if (by_point) {
    if (space_str.empty() || point_str.empty())
      throw std::invalid_argument("--space and --point are required together");
    return rep_of(parse_point(space_str, point_str));
  }
  if (surface_str.empty() || image_strs.empty())
    throw std::invalid_argument("--surface and --images are required together");
  const Presentation pres = Presentation::parse_surface(surface_str);
  std::vector<UTMat> images(static_cast<size_t>(pres.generator_count()));
  std::vector<bool> seen(images.size(), false);
  for (const std::string& entry : image_strs) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--images entries look like name=x,y[,det]: " + entry);
    const auto gen = pres.generator_index(entry.substr(0, eq));
    if (!gen)
      throw std::invalid_argument("unknown generator \"" + entry.substr(0, eq) + "\" on " +
                                  pres.surface_name());
    images[static_cast<size_t>(*gen)] = UTMat::parse(entry.substr(eq + 1));
    seen[static_cast<size_t>(*gen)] = true;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw std::invalid_argument("missing image for generator " + pres.generator_names()[i]);
  return GenAssignment(pres, std::move(images));
}

std::string double_str(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for upper-triangular surface-group representations"};
  app.set_version_flag("--version", "surfrep 1.0.0");
  app.require_subcommand(1);
  int verdict = 0;

  // ---- certify ----
  auto* certify = app.add_subcommand(
      "certify", "Certify that the genus-3 representation at (x,y,z,w) kills no simple "
                 "closed curve");
  auto certify_out = std::make_shared<Output>();
  auto certify_point = std::make_shared<std::string>();
  certify->add_option("--point", *certify_point, "x,y,z,w (exact rationals)")->required();
  certify_out->add_options(certify);
  certify->callback([certify_point, certify_out, &verdict] {
    const auto c = parse_coords(*certify_point);
    if (c.size() != 4) throw std::invalid_argument("--point needs exactly 4 coordinates");
    const Certificate cert = surfrep::certify_genus3(c[0], c[1], c[2], c[3]);
    certify_out->deliver(certificate_text(cert), surfrep::to_json(cert));
    verdict = cert.accept ? 0 : 1;
  });

  // ---- scan ----
  auto* scan = app.add_subcommand(
      "scan", "Evaluate every word of the genus-3 curve catalog and report kernel hits "
              "(reads a certificate JSON from stdin when --point is omitted)");
  auto scan_out = std::make_shared<Output>();
  auto scan_point = std::make_shared<std::string>();
  auto scan_max_k = std::make_shared<int>(6);
  auto scan_max_n = std::make_shared<int>(6);
  auto scan_no_squares = std::make_shared<bool>(false);
  scan->add_option("--point", *scan_point, "x,y,z,w (exact rationals)");
  scan->add_option("--max-k", *scan_max_k, "largest torus-word b-count")->check(CLI::PositiveNumber);
  scan->add_option("--max-n", *scan_max_n, "largest torus-word a-run")->check(CLI::PositiveNumber);
  scan->add_flag("--no-squares", *scan_no_squares, "omit squares of one-sided words");
  scan_out->add_options(scan);
  scan->callback([scan_point, scan_max_k, scan_max_n, scan_no_squares, scan_out, &verdict] {
    std::vector<Rational> c;
    if (scan_point->empty()) {
      json fed;
      try {
        fed = json::parse(std::cin);
      } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("stdin is not certificate JSON: ") + e.what());
      }
      const Certificate cert = surfrep::certificate_from_json(fed);
      c = {input_coord(cert, "x"), input_coord(cert, "y"), input_coord(cert, "z"),
           input_coord(cert, "w")};
    } else {
      c = parse_coords(*scan_point);
      if (c.size() != 4) throw std::invalid_argument("--point needs exactly 4 coordinates");
    }
    const GenAssignment rep = surfrep::genus3_assignment(c[0], c[1], c[2], c[3]);
    const auto catalog = surfrep::genus3_catalog(*scan_max_k, *scan_max_n, !*scan_no_squares);
    const auto result = surfrep::scan_kernel(rep, catalog);
    const Presentation& pres = rep.presentation();

    std::string text = "point: " + coords_text(c) + "\n";
    text += "scanned: " + std::to_string(result.scanned) + "\n";
    for (const auto& hit : result.identity)
      text += "identity: " + surfrep::scc_line(hit.cls, pres) + "\n";
    for (const auto& hit : result.minus_identity)
      text += "minus identity: " + surfrep::scc_line(hit.cls, pres) + "\n";
    const bool kernel_free = result.identity.empty() && result.minus_identity.empty();
    text += "verdict: " + std::string(kernel_free ? "kernel-free" : "kernel hit") + "\n";
    for (const auto& note : result.notes) text += "note: " + note + "\n";

    json j = surfrep::to_json(result, pres);
    json wrapped;
    wrapped["point"] = coords_text(c);
    wrapped["max_k"] = *scan_max_k;
    wrapped["max_n"] = *scan_max_n;
    wrapped["include_squares"] = !*scan_no_squares;
    for (auto& [key, value] : j.items()) wrapped[key] = std::move(value);

    scan_out->deliver(text, wrapped);
    verdict = kernel_free ? 0 : 1;
  });

  // ---- catalog ----
  auto* catalog = app.add_subcommand(
      "catalog", "List simple-closed-curve words: the genus-3 catalog, or per-surface "
                 "representatives with --representatives");
  auto catalog_out = std::make_shared<Output>();
  auto catalog_surface = std::make_shared<std::string>("N3");
  auto catalog_reps = std::make_shared<bool>(false);
  auto catalog_max_k = std::make_shared<int>(6);
  auto catalog_max_n = std::make_shared<int>(6);
  auto catalog_no_squares = std::make_shared<bool>(false);
  catalog->add_option("--surface", *catalog_surface,
                      "S<g>, N<n>, N<n>:squares, N<2g+1>:hybrid or N<2g+2>:klein");
  catalog->add_flag("--representatives", *catalog_reps,
                    "one representative per curve class up to homeomorphism");
  catalog->add_option("--max-k", *catalog_max_k, "largest torus-word b-count")->check(CLI::PositiveNumber);
  catalog->add_option("--max-n", *catalog_max_n, "largest torus-word a-run")->check(CLI::PositiveNumber);
  catalog->add_flag("--no-squares", *catalog_no_squares, "omit squares of one-sided words");
  catalog_out->add_options(catalog);
  catalog->callback([catalog_surface, catalog_reps, catalog_max_k, catalog_max_n,
                     catalog_no_squares, catalog_out] {
    const Presentation pres = Presentation::parse_surface(*catalog_surface);
    std::vector<SccClass> entries;
    if (*catalog_reps) {
      entries = surfrep::curve_representatives(pres);
    } else {
      if (pres != Presentation::hybrid(1))
        throw std::invalid_argument("the full catalog exists only for the genus-3 surface "
                                    "(N3); use --representatives for " + pres.surface_name());
      entries = surfrep::genus3_catalog(*catalog_max_k, *catalog_max_n, !*catalog_no_squares);
    }
    std::string text;
    json list = json::array();
    for (const auto& cls : entries) {
      text += surfrep::scc_line(cls, pres) + "\n";
      list.push_back(surfrep::to_json(cls, pres));
    }
    catalog_out->deliver(text, json{{"surface", pres.surface_name()},
                                    {"count", entries.size()},
                                    {"entries", std::move(list)}});
  });

  // ---- perturb ----
  auto* perturb = app.add_subcommand(
      "perturb", "Move a point off a degenerate locus by an exact step that stays on the "
                 "variety");
  auto perturb_out = std::make_shared<Output>();
  auto perturb_space = std::make_shared<std::string>();
  auto perturb_point = std::make_shared<std::string>();
  auto perturb_case = std::make_shared<std::string>();
  auto perturb_eps = std::make_shared<std::string>("1/2");
  perturb->add_option("--space", *perturb_space, "U:<g>, V:<n>, VH:<g> or VK:<g>")->required();
  perturb->add_option("--point", *perturb_point, "comma-separated exact coordinates")->required();
  perturb->add_option("--case", *perturb_case,
                      "kill-a1 | separating:<g0> | kill-c1 | prefix:<n0> | commutator:<g0> | a1")
      ->required();
  perturb->add_option("--epsilon", *perturb_eps, "step size, a nonnegative rational");
  perturb_out->add_options(perturb);
  perturb->callback([perturb_space, perturb_point, perturb_case, perturb_eps, perturb_out] {
    const RepPoint pt = parse_point(*perturb_space, *perturb_point);
    const Rational eps = Rational::parse(*perturb_eps);
    const std::string& which = *perturb_case;
    const auto colon = which.find(':');
    const std::string head = which.substr(0, colon);
    int index = 0;
    if (colon != std::string::npos) {
      try {
        index = std::stoi(which.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("--case " + which + ": index must be an integer");
      }
    }
    const auto need_index = [&](const char* name) {
      if (colon == std::string::npos)
        throw std::invalid_argument(std::string("--case ") + name +
                                    " needs an index, e.g. " + name + ":1");
    };

    if (head == "prefix") {
      need_index("prefix");
      const auto result = surfrep::perturb_prefix_squares(pt, index, eps);
      std::string text = "case: " + which + "\nepsilon: " + eps.str() + "\n";
      text += "exact: " + std::string(result.exact ? "yes" : "no") + "\n";
      text += "st:";
      for (const auto& block : result.st)
        text += " (" + block.s.str() + "," + block.t.str() + ")";
      text += "\n";
      json j{{"case", which}, {"epsilon", eps.str()}, {"exact", result.exact}};
      json st = json::array();
      for (const auto& block : result.st)
        st.push_back(json{{"s", block.s.str()}, {"t", block.t.str()}});
      j["st"] = std::move(st);
      if (result.exact) {
        text += "space: " + result.point.space.name() + "\n";
        text += "point: " + coords_text(result.point.coords) + "\n";
        text += "member: yes\n";
        j["point"] = surfrep::to_json(result.point);
        j["member"] = true;
      } else {
        text += "approx:";
        for (double v : result.approx_coords) text += " " + double_str(v);
        text += "\nresidual: " + double_str(result.residual) + "\n";
        j["approx_coords"] = result.approx_coords;
        j["residual"] = result.residual;
      }
      perturb_out->deliver(text, j);
      return;
    }

    RepPoint out;
    if (head == "kill-a1") {
      if (colon != std::string::npos)
        throw std::invalid_argument("--case kill-a1 takes no index");
      out = surfrep::perturb_kill_a1(pt, eps);
    } else if (head == "separating") {
      need_index("separating");
      out = surfrep::perturb_separating(pt, index, eps);
    } else if (head == "kill-c1") {
      if (colon != std::string::npos)
        throw std::invalid_argument("--case kill-c1 takes no index");
      out = surfrep::perturb_kill_c1(pt, eps);
    } else if (head == "commutator") {
      need_index("commutator");
      if (pt.space.kind == surfrep::SpaceKind::VH)
        out = surfrep::perturb_hybrid_commutator(pt, index, eps);
      else if (pt.space.kind == surfrep::SpaceKind::VK)
        out = surfrep::perturb_klein_commutator(pt, index, eps);
      else
        throw std::invalid_argument("--case commutator applies to VH:<g> and VK:<g> only");
    } else if (head == "a1") {
      if (colon != std::string::npos)
        throw std::invalid_argument("--case a1 takes no index");
      if (pt.space.kind == surfrep::SpaceKind::VH)
        out = surfrep::perturb_hybrid_a1(pt, eps);
      else if (pt.space.kind == surfrep::SpaceKind::VK)
        out = surfrep::perturb_klein_a1(pt, eps);
      else
        throw std::invalid_argument("--case a1 applies to VH:<g> and VK:<g> only "
                                    "(use kill-a1 on U:<g>)");
    } else {
      throw std::invalid_argument(
          "--case must be kill-a1, separating:<g0>, kill-c1, prefix:<n0>, commutator:<g0> "
          "or a1");
    }

    const auto member = surfrep::membership(out);
    std::string text = "case: " + which + "\nepsilon: " + eps.str() + "\n";
    text += "space: " + out.space.name() + "\n";
    text += "point: " + coords_text(out.coords) + "\n";
    text += "member: " + std::string(member.ok ? "yes" : "no") + "\n";
    json j{{"case", which}, {"epsilon", eps.str()}};
    j["point"] = surfrep::to_json(out);
    j["member"] = member.ok;
    perturb_out->deliver(text, j);
  });

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "Evaluate a word under a representation");
  auto eval_out = std::make_shared<Output>();
  auto eval_space = std::make_shared<std::string>();
  auto eval_point = std::make_shared<std::string>();
  auto eval_surface = std::make_shared<std::string>();
  auto eval_images = std::make_shared<std::vector<std::string>>();
  auto eval_word_str = std::make_shared<std::string>();
  eval->add_option("--space", *eval_space, "U:<g>, V:<n>, VH:<g> or VK:<g>");
  eval->add_option("--point", *eval_point, "comma-separated exact coordinates");
  eval->add_option("--surface", *eval_surface, "surface name, for explicit --images");
  eval->add_option("--images", *eval_images, "generator images, name=x,y[,det] each");
  eval->add_option("--word", *eval_word_str, "word in the generators, e.g. \"a1 b1 A1 B1 c^2\"")
      ->required();
  eval_out->add_options(eval);
  eval->callback([eval_space, eval_point, eval_surface, eval_images, eval_word_str, eval_out] {
    const GenAssignment rep =
        assignment_from_flags(*eval_space, *eval_point, *eval_surface, *eval_images);
    const Word word = surfrep::parse_word(*eval_word_str, rep.presentation());
    const UTMat image = surfrep::eval_word(word, rep);
    std::string text = "word: " + surfrep::render_word(word, rep.presentation()) + "\n";
    text += "image: " + image.str() + "\n";
    text += "identity: " + std::string(image.is_identity() ? "yes" : "no") + "\n";
    eval_out->deliver(text, json{{"word", surfrep::render_word(word, rep.presentation())},
                                 {"image", image.str()},
                                 {"identity", image.is_identity()},
                                 {"minus_identity", image.is_minus_identity()}});
  });

  // ---- relate ----
  auto* relate = app.add_subcommand("relate", "Check the defining relator under a representation");
  auto relate_out = std::make_shared<Output>();
  auto relate_space = std::make_shared<std::string>();
  auto relate_point = std::make_shared<std::string>();
  auto relate_surface = std::make_shared<std::string>();
  auto relate_images = std::make_shared<std::vector<std::string>>();
  relate->add_option("--space", *relate_space, "U:<g>, V:<n>, VH:<g> or VK:<g>");
  relate->add_option("--point", *relate_point, "comma-separated exact coordinates");
  relate->add_option("--surface", *relate_surface, "surface name, for explicit --images");
  relate->add_option("--images", *relate_images, "generator images, name=x,y[,det] each");
  relate_out->add_options(relate);
  relate->callback([relate_space, relate_point, relate_surface, relate_images, relate_out,
                    &verdict] {
    const GenAssignment rep =
        assignment_from_flags(*relate_space, *relate_point, *relate_surface, *relate_images);
    const auto report = surfrep::check_relation(rep);
    const std::string relator = surfrep::render_word(rep.presentation().relator(),
                                                     rep.presentation());
    std::string text = "relator: " + relator + "\n";
    text += "residual: " + report.residual.str() + "\n";
    text += "holds: " + std::string(report.holds_exactly      ? "exactly"
                                    : report.holds_projectively ? "projectively"
                                                                : "no") + "\n";
    relate_out->deliver(text, json{{"relator", relator},
                                   {"residual", report.residual.str()},
                                   {"holds_exactly", report.holds_exactly},
                                   {"holds_projectively", report.holds_projectively}});
    verdict = report.holds_exactly ? 0 : 1;
  });

  // ---- klein ----
  auto* klein = app.add_subcommand(
      "klein", "Klein-bottle analysis: the relator forces the first generator to +-I");
  auto klein_out = std::make_shared<Output>();
  auto klein_forced = std::make_shared<bool>(false);
  auto klein_samples = std::make_shared<int>(100);
  auto klein_seed = std::make_shared<unsigned long long>(0);
  auto klein_z = std::make_shared<std::string>();
  auto klein_w = std::make_shared<std::string>();
  auto klein_c_sign = std::make_shared<int>(0);
  klein->add_flag("--forced", *klein_forced,
                  "sample random d-images and solve the relator for c each time");
  klein->add_option("--samples", *klein_samples, "number of samples for --forced")
      ->check(CLI::PositiveNumber);
  klein->add_option("--seed", *klein_seed, "seed for --forced");
  klein->add_option("--z", *klein_z, "diagonal of the d-image (exact rational, > 0)");
  klein->add_option("--w", *klein_w, "upper entry of the d-image (exact rational)");
  klein->add_option("--c-sign", *klein_c_sign, "+1 or -1: which of +-I the c-image is");
  klein_out->add_options(klein);
  klein->callback([klein_forced, klein_samples, klein_seed, klein_z, klein_w, klein_c_sign,
                   klein_out, &verdict] {
    if (*klein_forced) {
      if (!klein_z->empty() || !klein_w->empty() || *klein_c_sign != 0)
        throw std::invalid_argument("--forced takes only --samples and --seed");
      const auto samples = surfrep::klein_forced_form(*klein_samples, *klein_seed);
      bool all = true;
      std::string text;
      json list = json::array();
      for (const auto& s : samples) {
        all = all && s.pm_identity;
        text += "d=" + s.z.str() + "," + s.w.str() + " c=" + s.c.str() + " pm_identity=" +
                (s.pm_identity ? "yes" : "no") + "\n";
        list.push_back(json{{"z", s.z.str()},
                            {"w", s.w.str()},
                            {"c", s.c.str()},
                            {"pm_identity", s.pm_identity}});
      }
      text += "all pm identity: " + std::string(all ? "yes" : "no") + "\n";
      klein_out->deliver(text, json{{"samples", samples.size()},
                                    {"all_pm_identity", all},
                                    {"solutions", std::move(list)}});
      verdict = all ? 0 : 1;
      return;
    }
    if (klein_z->empty() || klein_w->empty() || *klein_c_sign == 0)
      throw std::invalid_argument("pass --z, --w and --c-sign (or --forced)");
    const Certificate cert = surfrep::klein_analyze(Rational::parse(*klein_z),
                                                    Rational::parse(*klein_w), *klein_c_sign);
    klein_out->deliver(certificate_text(cert), surfrep::to_json(cert));
    verdict = cert.accept ? 0 : 1;
  });

  // ---- sample ----
  auto* sample = app.add_subcommand(
      "sample", "Deterministically sample a point on a representation variety");
  auto sample_out = std::make_shared<Output>();
  auto sample_space = std::make_shared<std::string>();
  auto sample_seed = std::make_shared<unsigned long long>(0);
  sample->add_option("--space", *sample_space, "U:<g>, V:<n>, VH:<g> or VK:<g>")->required();
  sample->add_option("--seed", *sample_seed, "sampling seed (same seed, same point)");
  sample_out->add_options(sample);
  sample->callback([sample_space, sample_seed, sample_out] {
    const Space space = Space::parse(*sample_space);
    const RepPoint pt = surfrep::sample_point(space, *sample_seed);
    const auto member = surfrep::membership(pt);
    std::string text = "space: " + space.name() + "\n";
    text += "seed: " + std::to_string(*sample_seed) + "\n";
    text += "point: " + coords_text(pt.coords) + "\n";
    text += "member: " + std::string(member.ok ? "yes" : "no") + "\n";
    json j = surfrep::to_json(pt);
    j["seed"] = *sample_seed;
    j["member"] = member.ok;
    sample_out->deliver(text, j);
  });

  // ---- torus ----
  auto* torus = app.add_subcommand(
      "torus", "Diagonal torus representation a -> diag(x, 1/x), b -> diag(z, 1/z): "
               "multiplicative independence and an exhaustive kernel box check");
  auto torus_out = std::make_shared<Output>();
  auto torus_x = std::make_shared<std::string>();
  auto torus_z = std::make_shared<std::string>();
  auto torus_box = std::make_shared<int>(30);
  torus->add_option("--x", *torus_x, "diagonal of the a-image (exact rational, > 0)")->required();
  torus->add_option("--z", *torus_z, "diagonal of the b-image (exact rational, > 0)")->required();
  torus->add_option("--max-exp", *torus_box, "check a^p b^q for all |p|, |q| <= this")
      ->check(CLI::PositiveNumber);
  torus_out->add_options(torus);
  torus->callback([torus_x, torus_z, torus_box, torus_out, &verdict] {
    const Rational x = Rational::parse(*torus_x);
    const Rational z = Rational::parse(*torus_z);
    const RepPoint pt = surfrep::torus_rep(x, z);
    const GenAssignment rep = surfrep::rep_of(pt);
    const auto indep = surfrep::mult_indep(x, z);

    const Presentation& pres = rep.presentation();
    std::vector<std::pair<int, int>> kernel_pairs;
    for (int p = -*torus_box; p <= *torus_box; ++p)
      for (int q = -*torus_box; q <= *torus_box; ++q) {
        if (p == 0 && q == 0) continue;
        if (x.pow(p) * z.pow(q) == Rational(1)) kernel_pairs.emplace_back(p, q);
      }

    std::string text = "x: " + x.str() + "\nz: " + z.str() + "\n";
    text += "independent: " + std::string(indep.independent ? "yes" : "no") + "\n";
    json j{{"x", x.str()}, {"z", z.str()}, {"independent", indep.independent}};
    if (indep.witness) {
      const std::string wtn =
          "(" + indep.witness->first.get_str() + ", " + indep.witness->second.get_str() + ")";
      text += "witness: " + wtn + "\n";
      j["witness"] = wtn;
    }
    j["max_exp"] = *torus_box;
    json hits = json::array();
    if (kernel_pairs.empty()) {
      text += "kernel in box |p|,|q| <= " + std::to_string(*torus_box) + ": none\n";
    } else {
      for (const auto& [p, q] : kernel_pairs) {
        const Word word = Word::generator(0, p) * Word::generator(1, q);
        const std::string rendered = surfrep::render_word(word, pres);
        text += "kernel word: " + rendered + " -> " +
                surfrep::eval_word(word, rep).str() + "\n";
        hits.push_back(json{{"p", p}, {"q", q}, {"word", rendered}});
      }
    }
    j["kernel_words"] = std::move(hits);
    torus_out->deliver(text, j);
    verdict = (indep.independent && kernel_pairs.empty()) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return verdict;
}
