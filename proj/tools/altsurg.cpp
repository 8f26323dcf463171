// Command-line front end: every subcommand prints one JSON report and exits
// with 0 (yes), 1 (no), 2 (error) or 3 (enumeration budget exhausted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "altsurg/error.hpp"
#include "altsurg/knotdiag.hpp"
#include "altsurg/recognizer.hpp"
#include "altsurg/serialize.hpp"
#include "altsurg/surgery.hpp"

#ifndef ALTSURG_VERSION
#define ALTSURG_VERSION "dev"
#endif

using namespace altsurg;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2, kBudget = 3 };

struct Outcome {
  int code = kYes;
  Json result;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DiagramData load_knot_diagram(const std::string& path, bool need_alternating) {
  PDCode pd = PDCode::parse(read_file(path));
  require(pd.components() == 1, "'" + path + "' is a link diagram, not a knot");
  DiagramData d = color_and_white_graph(pd);
  if (need_alternating) {
    require(d.diagram.alternating, "'" + path + "' is not an alternating diagram");
    require(is_reduced(d), "'" + path + "' is not a reduced diagram");
  }
  return d;
}

Json diagram_summary(const DiagramData& d) {
  return Json{{"crossings", d.diagram.pd.size()},
              {"alternating", d.diagram.alternating},
              {"reduced", is_reduced(d)},
              {"determinant", determinant(d)},
              {"signature", signature(d)},
              {"white_graph", to_json(d.goeritz.white_graph)},
              {"dropped_vertex", d.goeritz.dropped},
              {"goeritz", to_json(d.goeritz.goeritz)}};
}

// The certificate for the diagram or, failing that, for its mirror.
std::optional<EmbeddingCertificate> recognize_either(const DiagramData& d, const Slope& slope, std::int64_t budget) {
  if (auto cert = recognize_diagram(d, slope, budget)) return cert;
  if (auto cert = recognize_diagram(color_and_white_graph(mirror(d.diagram.pd)), slope, budget)) {
    cert->mirrored = true;
    return cert;
  }
  return std::nullopt;
}

Json reduction_json(const Reduction& r) {
  return Json{{"stages", r.stages()},
              {"ranks", r.ranks},
              {"marked_counts", r.marked_counts},
              {"trace", to_json(r.trace)},
              {"clasp", to_json(r.final_cert)}};
}

Outcome cmd_goeritz(const std::string& path) {
  DiagramData d = load_knot_diagram(path, false);
  return {kYes, diagram_summary(d)};
}

Outcome cmd_unknotting_one(const std::string& path, std::int64_t budget) {
  DiagramData d = load_knot_diagram(path, true);
  std::int64_t det = determinant(d);
  require(det > 1, "determinant 1: the test needs a nontrivial determinant");
  Slope slope(det, 2);
  Json out = diagram_summary(d);
  out["slope"] = to_json(slope);
  auto cert = recognize_either(d, slope, budget);
  if (!cert) {
    out["answer"] = "no";
    return {kNo, out};
  }
  Markers mk = marker_vertices(*cert);
  out["answer"] = "yes";
  out["mirrored"] = cert->mirrored;
  out["marked"] = mk.marked;
  out["marked_crossings"] = mk.crossings;
  out["certificate"] = to_json(*cert);
  return {kYes, out};
}

Outcome cmd_alt_surgery(const std::string& path, const std::string& slope_text, std::int64_t budget) {
  DiagramData d = load_knot_diagram(path, true);
  Slope slope = Slope::parse(slope_text);
  require(slope.q >= 1 && slope.p > slope.q, "alt-surgery needs a slope p/q > 1");
  Json out = diagram_summary(d);
  out["slope"] = to_json(slope);
  auto cert = recognize_either(d, slope, budget);
  if (!cert) {
    out["answer"] = "no";
    return {kNo, out};
  }
  out["answer"] = "yes";
  out["mirrored"] = cert->mirrored;
  out["certificate"] = to_json(*cert);
  if (!slope.is_integer()) {
    FractionalTangle ft = fractional_tangle(*cert);
    out["tangle"] = Json{{"slope", ft.slope.str()},
                         {"expected", ft.expected.str()},
                         {"flypes", to_json(ft.trace)},
                         {"collapsed", to_json(ft.collapsed)}};
  }
  return {kYes, out};
}

Outcome cmd_cm_build(const std::string& slope_text, const std::string& stable_text) {
  ChangemakerLattice lat = cm_build(Slope::parse(slope_text), parse_int_list(stable_text));
  return {kYes, to_json(lat)};
}

Outcome cmd_recover_stable(const std::string& vseq, std::int64_t budget) {
  VSeq V = VSeq::parse(vseq);
  require(V.valid(), "'" + vseq + "' is not a valid V-sequence");
  Json out{{"V", V.v}};
  Coeffs stable;
  try {
    stable = recover_stable(V, budget);
  } catch (const InputError& e) {
    out["answer"] = "no";
    out["reason"] = e.what();
    return {kNo, out};
  }
  out["answer"] = "yes";
  out["stable"] = stable;
  out["genus"] = V.nu_plus();
  out["ones"] = minimal_ones(stable);
  return {kYes, out};
}

Outcome cmd_d_inv(const std::string& slope_text, const std::string& alexander, const std::string& torus,
                  const std::string& vseq) {
  Slope slope = Slope::parse(slope_text);
  require(slope.p > 0, "d-inv needs a positive slope");
  int given = !alexander.empty() + !torus.empty() + !vseq.empty();
  require(given <= 1, "give at most one of --alexander, --torus, --vseq");
  Json out{{"slope", to_json(slope)}};
  Json rows = Json::array();
  if (given == 0) {
    out["knot"] = "unknot";
    for (const auto& c : lens_d_invariants(slope)) rows.push_back(Json{{"label", c.label}, {"d", to_json(c.d)}});
    out["d"] = rows;
    return {kYes, out};
  }
  VSeq V;
  if (!vseq.empty()) {
    V = VSeq::parse(vseq);
  } else {
    AlexPoly poly;
    if (!torus.empty()) {
      auto rs = parse_int_list(torus);
      require(rs.size() == 2, "--torus expects r,s");
      poly = torus_tools(rs[0], rs[1]).alexander;
    } else {
      poly = AlexPoly::parse(alexander);
    }
    require(poly.lspace_shaped(), "Alexander polynomial is not of L-space type; V is not determined by it");
    V.v = torsion_coeffs(poly);
    out["alexander"] = poly.str();
  }
  require(V.valid(), "V-sequence is not valid");
  out["V"] = V.v;
  auto d = surgery_d_invariants(slope, V);
  for (std::size_t i = 0; i < d.size(); ++i)
    rows.push_back(Json{{"label", static_cast<std::int64_t>(i)}, {"d", to_json(d[i])}});
  out["d"] = rows;
  return {kYes, out};
}

Outcome cmd_tangle_slope(const std::string& path, const std::string& regions, const std::string& edges) {
  DiagramData d = load_knot_diagram(path, false);
  std::vector<int> chain, inside;
  for (auto x : parse_int_list(regions)) chain.push_back(static_cast<int>(x));
  for (auto x : parse_int_list(edges)) inside.push_back(static_cast<int>(x));
  Json out{{"regions", chain}, {"white_graph", to_json(d.goeritz.white_graph)}};
  auto slope = tangle_slope_detect(d.goeritz.white_graph, chain, inside);
  if (!slope) {
    out["answer"] = "no";
    return {kNo, out};
  }
  out["answer"] = "yes";
  out["slope"] = slope->str();
  return {kYes, out};
}

Outcome cmd_char_slope(const std::string& torus, const std::string& slope_text) {
  auto rs = parse_int_list(torus);
  require(rs.size() == 2, "--torus expects r,s");
  TorusData t = torus_tools(rs[0], rs[1]);
  Slope slope = Slope::parse(slope_text);
  bool covered = slope.value() >= t.char_slope_threshold;
  Json out{{"r", t.r},
           {"s", t.s},
           {"alexander", t.alexander.str()},
           {"genus", t.genus},
           {"unknotting", t.unknotting},
           {"threshold", to_json(t.char_slope_threshold)},
           {"slope", to_json(slope)},
           {"answer", covered ? "yes" : "no"}};
  return {covered ? kYes : kNo, out};
}

Outcome cmd_reduce(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
  // Accept a bare certificate or a report that carries one.
  if (j.contains("result")) j = j["result"];
  if (j.contains("certificate")) j = j["certificate"];
  EmbeddingCertificate cert = certificate_from_json(j);
  require(!cert.lattice.integral(), "reduce needs a certificate for a non-integer slope");
  Json out;
  if (cert.lattice.slope.q != 2) {
    FractionalTangle ft = fractional_tangle(cert);
    out["tangle"] = Json{{"slope", ft.slope.str()}, {"expected", ft.expected.str()}, {"flypes", to_json(ft.trace)}};
    cert = ft.collapsed;
  }
  out["start"] = to_json(cert);
  out["reduction"] = reduction_json(reduce_to_clasp(cert));
  return {kYes, out};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating knots, changemaker lattices and Dehn surgery"};
  app.require_subcommand(1);
  app.fallthrough();
  std::int64_t budget = kDefaultBudget;
  bool quiet = false;
  bool json = true;
  app.add_option("--budget", budget, "node budget for every enumeration")->capture_default_str();
  app.add_flag("--quiet", quiet, "print nothing; report only through the exit code");
  app.add_flag("--json", json, "print a JSON report (default)");
  app.set_version_flag("--version", ALTSURG_VERSION);

  std::string pd_file, slope, stable, vseq, alexander, torus, regions, edges, cert_file;
  Json inputs;
  std::function<Outcome()> action;

  auto* goeritz = app.add_subcommand("goeritz", "white graph, Goeritz matrix, determinant and signature");
  goeritz->add_option("pd-file", pd_file)->required()->check(CLI::ExistingFile);
  goeritz->callback([&] {
    inputs = Json{{"pd_file", pd_file}};
    action = [&] { return cmd_goeritz(pd_file); };
  });

  auto* unknot = app.add_subcommand("unknotting-one", "obstruct or certify unknotting number one");
  unknot->add_option("pd-file", pd_file)->required()->check(CLI::ExistingFile);
  unknot->callback([&] {
    inputs = Json{{"pd_file", pd_file}};
    action = [&] { return cmd_unknotting_one(pd_file, budget); };
  });

  auto* surgery = app.add_subcommand("alt-surgery", "changemaker certificate for an alternating surgery slope");
  surgery->add_option("pd-file", pd_file)->required()->check(CLI::ExistingFile);
  surgery->add_option("--slope", slope, "p/q")->required();
  surgery->callback([&] {
    inputs = Json{{"pd_file", pd_file}, {"slope", slope}};
    action = [&] { return cmd_alt_surgery(pd_file, slope, budget); };
  });

  auto* build = app.add_subcommand("cm-build", "changemaker lattice from a slope and stable coefficients");
  build->add_option("--slope", slope, "p/q")->required();
  build->add_option("--stable", stable, "a,b,... (may be empty)")->required();
  build->callback([&] {
    inputs = Json{{"slope", slope}, {"stable", stable}};
    action = [&] { return cmd_cm_build(slope, stable); };
  });

  auto* recover = app.add_subcommand("recover-stable", "stable coefficients from V_0, V_1, ...");
  recover->add_option("--vseq", vseq, "V_0,V_1,...")->required();
  recover->callback([&] {
    inputs = Json{{"vseq", vseq}};
    action = [&] { return cmd_recover_stable(vseq, budget); };
  });

  auto* dinv = app.add_subcommand("d-inv", "d-invariants of p/q-surgery on the unknot or an L-space knot");
  dinv->add_option("--slope", slope, "p/q")->required();
  dinv->add_option("--alexander", alexander, "a_0 a_1 ... a_g of the symmetrised polynomial");
  dinv->add_option("--torus", torus, "r,s");
  dinv->add_option("--vseq", vseq, "V_0,V_1,...");
  dinv->callback([&] {
    inputs = Json{{"slope", slope}, {"alexander", alexander}, {"torus", torus}, {"vseq", vseq}};
    action = [&] { return cmd_d_inv(slope, alexander, torus, vseq); };
  });

  auto* tangle = app.add_subcommand("tangle-slope", "slope of a rational tangle given by a chain of white regions");
  tangle->add_option("pd-file", pd_file)->required()->check(CLI::ExistingFile);
  tangle->add_option("--regions", regions, "white-graph vertices v_0,...,v_{l+1}")->required();
  tangle->add_option("--edges", edges, "white-graph edge indices inside the tangle (default: induced)");
  tangle->callback([&] {
    inputs = Json{{"pd_file", pd_file}, {"regions", regions}, {"edges", edges}};
    action = [&] { return cmd_tangle_slope(pd_file, regions, edges); };
  });

  auto* charslope = app.add_subcommand("char-slope", "is p/q above the characterizing threshold of T(r,s)");
  charslope->add_option("--torus", torus, "r,s")->required();
  charslope->add_option("--slope", slope, "p/q")->required();
  charslope->callback([&] {
    inputs = Json{{"torus", torus}, {"slope", slope}};
    action = [&] { return cmd_char_slope(torus, slope); };
  });

  auto* reduce = app.add_subcommand("reduce", "clasp reduction of a certificate");
  reduce->add_option("certificate", cert_file)->required()->check(CLI::ExistingFile);
  reduce->callback([&] {
    inputs = Json{{"certificate", cert_file}};
    action = [&] { return cmd_reduce(cert_file); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "altsurg " << command << ": budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "altsurg " << command << ": " << e.what() << "\n";
    return kError;
  } catch (const InvariantError& e) {
    std::cerr << "altsurg " << command << ": internal invariant violated: " << e.what() << "\n";
    return kError;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!quiet) {
    Json report{{"command", command},
                {"version", ALTSURG_VERSION},
                {"inputs", inputs},
                {"exit_code", outcome.code},
                {"result", outcome.result},
                {"timing", Json{{"seconds", seconds}}}};
    std::cout << report.dump(2) << "\n";
  }
  return outcome.code;
}
