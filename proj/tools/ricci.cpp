// ricci: command-line front end for the curvature toolkit.
//
// Exit codes: 0 ok / verified, 1 verification failure, 2 input error,
// 3 configuration error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/data.hpp"
#include "ricci/families.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/harmonic.hpp"
#include "ricci/verify.hpp"

#ifndef RICCI_VERSION
#define RICCI_VERSION "0.0.0"
#endif

using nlohmann::json;
using namespace ricci;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kConfigError = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongScheme:
    case ErrorCode::DataFile:
    case ErrorCode::ResourceExceeded:
      return kConfigError;
    case ErrorCode::SelfValidationFailed:
    case ErrorCode::NoConvergence:
    case ErrorCode::MassMismatch:
      return kFailed;
    default:
      return kInputError;
  }
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedHeader, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParam, "cannot write " + path);
  out << text;
}

struct Run {
  std::string subcommand;
  json config = json::object();
  json inputs = json::array();
  json outputs = json::array();
  std::string manifest_path;

  void input(const std::string& path) {
    inputs.push_back({{"path", path}, {"fnv1a64", fnv1a64(slurp(path))}});
  }
  void inline_input(const std::string& name, const std::string& text) {
    inputs.push_back({{"path", name}, {"fnv1a64", fnv1a64(text)}});
  }
  // Writes to `path`, or stdout when it is empty.
  void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      outputs.push_back("-");
    } else {
      write_text(path, text);
      outputs.push_back(path);
    }
  }
};

struct GraphInput {
  std::string file;
  std::string g6;
  std::string scheme;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--in", in.file, "graph file (.json edge list or graph6)");
  cmd->add_option("--g6", in.g6, "graph6 string");
  cmd->add_option("--scheme", in.scheme, "combinatorial | normalized (overrides the input)");
}

Graph load_graph(const GraphInput& in, Run& run) {
  std::optional<WeightScheme> scheme;
  if (!in.scheme.empty()) scheme = parse_scheme(in.scheme);
  run.config["scheme"] = in.scheme.empty() ? json() : json(in.scheme);
  if (!in.file.empty()) {
    run.input(in.file);
    return read_graph_file(in.file, scheme);
  }
  if (!in.g6.empty()) {
    run.inline_input("--g6", in.g6);
    return parse_graph6(in.g6, scheme.value_or(WeightScheme::Combinatorial));
  }
  throw Error(ErrorCode::BadParam, "give --in FILE or --g6 STRING");
}

// ---- subcommands ----

struct CurvatureArgs {
  GraphInput graph;
  std::string engine = "auto";
  std::string format = "json";
  std::string out;
};

int cmd_curvature(const CurvatureArgs& a, Run& run) {
  const Graph g = load_graph(a.graph, run);
  const Engine engine = parse_engine(a.engine);
  run.config["engine"] = a.engine;
  run.config["format"] = a.format;
  if (a.format != "json" && a.format != "csv") throw Error(ErrorCode::BadParam, "format must be json or csv");
  const auto table = edge_curvatures(g, engine);
  Rational lo = table.empty() ? Rational(0) : table.front().curvature.value;
  for (const auto& ec : table) lo = std::min(lo, ec.curvature.value);

  std::string text;
  if (a.format == "csv") {
    text = "u,v,kappa\n";
    for (const auto& ec : table)
      text += std::to_string(ec.edge.u) + "," + std::to_string(ec.edge.v) + "," + to_string(ec.curvature.value) + "\n";
    text += "# min," + to_string(lo) + "\n";
  } else {
    json j;
    j["scheme"] = std::string(to_string(g.scheme()));
    j["engine"] = a.engine;
    j["n"] = g.order();
    j["edges"] = json::array();
    for (const auto& ec : table)
      j["edges"].push_back({{"u", ec.edge.u}, {"v", ec.edge.v}, {"kappa", to_string(ec.curvature.value)}});
    j["min"] = to_string(lo);
    j["nonnegative"] = lo >= 0;
    text = j.dump(2) + "\n";
  }
  run.emit(a.out, text);
  return kOk;
}

struct GenerateArgs {
  std::string family;
  int k = 0;
  int n = 0;
  int length = 0;
  int core = 0;
  std::string left = "L0";
  std::string right = "R0";
  bool twisted = false;
  std::string variant = "reconstruction";
  std::string kind = "a";
  int width = 0;
  std::string out;
  std::string descriptor;
};

int cmd_generate(const GenerateArgs& a, Run& run) {
  FamilyDescriptor d;
  run.config["family"] = a.family;
  if (a.family == "path") {
    d.kind = FamilyKind::Path;
    d.size = a.length;
    run.config["length"] = a.length;
  } else if (a.family == "cycle") {
    d.kind = FamilyKind::Cycle;
    d.size = a.n;
    run.config["n"] = a.n;
  } else if (a.family == "prism" || a.family == "mobius") {
    d.kind = a.family == "prism" ? FamilyKind::Prism : FamilyKind::MobiusLadder;
    d.size = a.k;
    run.config["k"] = a.k;
  } else if (a.family == "particular") {
    d.kind = FamilyKind::Particular;
    if (a.variant == "reconstruction") {
      d.size = 10;
    } else if (a.variant == "lemma-text") {
      d.size = 12;
    } else {
      throw Error(ErrorCode::BadParam, "variant must be reconstruction or lemma-text");
    }
    run.config["variant"] = a.variant;
  } else if (a.family == "quasi-ladder") {
    d.kind = FamilyKind::QuasiLadder;
    d.size = 0;
    d.quasi_ladder = QuasiLadderSpec{a.core, parse_form_id(a.left), parse_form_id(a.right), a.twisted};
    run.config["core"] = a.core;
    run.config["left"] = a.left;
    run.config["right"] = a.right;
    run.config["twisted"] = a.twisted;
  } else if (a.family == "window") {
    if (a.kind.size() != 1) throw Error(ErrorCode::BadParam, "window kind is one letter a..j");
    d.kind = FamilyKind::InfiniteWindow;
    d.infinite_kind = a.kind[0];
    d.size = a.width;
    run.config["kind"] = a.kind;
    run.config["width"] = a.width;
  } else {
    throw Error(ErrorCode::BadParam, "unknown family '" + a.family + "'");
  }
  const Graph g = generate(d);
  if (d.kind == FamilyKind::QuasiLadder) d.size = g.order();
  json desc = to_json(d);
  desc["n"] = g.order();
  desc["graph6"] = emit_graph6(g);
  desc["edges"] = json::parse(emit_edge_json(g))["edges"];
  if (d.kind == FamilyKind::InfiniteWindow) {
    const InfiniteWindow w = gen_infinite_window(d.infinite_kind, d.size);
    desc["interior"] = w.interior;
  }
  run.emit(a.out, emit_graph6(g) + "\n");
  if (!a.descriptor.empty()) run.emit(a.descriptor, desc.dump() + "\n");
  return kOk;
}

struct ClassifyArgs {
  GraphInput graph;
  bool ollivier = false;
  std::string out;
};

int cmd_classify(const ClassifyArgs& a, Run& run) {
  GraphInput in = a.graph;
  if (a.ollivier && in.scheme.empty()) in.scheme = "normalized";
  const Graph g = load_graph(in, run);
  run.config["ollivier"] = a.ollivier;
  const Classification c = a.ollivier ? classify_ollivier(g) : classify(g);
  json j;
  if (c.family) {
    j = to_json(*c.family);
  } else {
    j["kind"] = "Unrecognized";
    j["note"] = c.note;
  }
  j["graph6"] = emit_graph6(g);
  run.emit(a.out, j.dump() + "\n");
  return c.recognized() ? kOk : kFailed;
}

struct VerifyArgs {
  std::string task;
  int n = 0;
  int jobs = 1;
  int max_degree = 0;
  int min_diameter = 0;
  std::string scheme;
  std::string out;
  std::string survivors;
};

int cmd_verify(const VerifyArgs& a, Run& run) {
  EnumerationConfig c = default_config(a.task);
  if (a.n > 0) c.n_max = a.n;
  if (a.jobs > 0) c.jobs = a.jobs;
  if (a.max_degree > 0) c.max_degree = a.max_degree;
  if (a.min_diameter > 0) c.min_diameter = a.min_diameter;
  if (!a.scheme.empty()) c.scheme = parse_scheme(a.scheme);
  const VerificationReport r = run_verification(a.task, c);
  json j = r.to_json(false);
  run.config = j["config"];
  run.config["task"] = a.task;
  run.config["wall_seconds"] = r.wall_seconds;
  run.emit(a.out, j.dump(2) + "\n");
  std::string sidecar = a.survivors;
  if (sidecar.empty() && !a.out.empty() && a.out != "-") sidecar = a.out + ".g6";
  if (!sidecar.empty()) {
    std::string lines;
    for (const auto& s : r.survivors) lines += s + "\n";
    run.emit(sidecar, lines);
  }
  return r.verified() ? kOk : kFailed;
}

struct LiouvilleArgs {
  int width = 12;
  std::string z0 = "1", z1 = "4", h0 = "1", h1 = "2";
  std::string out;
};

int cmd_liouville(const LiouvilleArgs& a, Run& run) {
  LiouvilleOptions o{parse_rational(a.z0), parse_rational(a.z1), parse_rational(a.h0), parse_rational(a.h1)};
  run.config = {{"width", a.width}, {"z0", a.z0}, {"z1", a.z1}, {"h0", a.h0}, {"h1", a.h1}};
  const LiouvilleReport r = liouville_window_check(a.width, o);
  run.emit(a.out, r.to_json().dump(2) + "\n");
  return r.ok() ? kOk : kFailed;
}

struct HarmonicArgs {
  std::string in;
  std::string out;
};

int cmd_harmonic(const HarmonicArgs& a, Run& run) {
  run.input(a.in);
  const HarmonicProblem p = parse_harmonic_problem(slurp(a.in));
  const VertexFunction f = solve_harmonic(p);
  run.emit(a.out, harmonic_solution_json(p, f).dump(2) + "\n");
  return kOk;
}

struct LocalArgs {
  GraphInput graph;
  std::string path;
  std::string out;
};

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParam, "bad vertex '" + item + "' in --path");
    }
  }
  return out;
}

int cmd_local_structure(const LocalArgs& a, Run& run) {
  const Graph g = load_graph(a.graph, run);
  run.config["path"] = a.path.empty() ? json("all-diameter-paths") : json(a.path);
  std::vector<GeodesicPath> paths;
  if (a.path.empty()) {
    paths = all_diameter_paths(g);
  } else {
    paths.push_back(GeodesicPath{parse_vertex_list(a.path)});
  }
  json j;
  j["graph6"] = emit_graph6(g);
  j["paths"] = json::array();
  int violations = 0;
  for (const auto& p : paths) {
    const LocalStructureReport r = forbidden_pair_check(g, p);
    const StateAssignment states = state_function(g, p);
    json pj;
    pj["vertices"] = p.vertices;
    pj["states"] = json::array();
    for (int i = 1; i < p.length(); ++i) pj["states"].push_back(std::string(to_string(states.state(i))));
    pj["pairs"] = json::array();
    for (const auto& pr : r.pairs) {
      pj["pairs"].push_back({{"position", pr.position},
                             {"pair", {std::string(to_string(pr.first)), std::string(to_string(pr.second))}},
                             {"status", std::string(to_string(pr.status))},
                             {"matched", pr.matched}});
    }
    pj["violations"] = r.violations();
    if (p.length() >= 4) pj["propagation"] = propagation_check(g, p);
    violations += r.violations();
    if (p.length() >= 4 && !propagation_check(g, p)) ++violations;
    j["paths"].push_back(pj);
  }
  j["violations"] = violations;
  run.emit(a.out, j.dump(2) + "\n");
  return violations == 0 ? kOk : kFailed;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_manifest(const Run& run, int code) {
  json m;
  m["subcommand"] = run.subcommand;
  m["config"] = run.config;
  m["inputs"] = run.inputs;
  m["version"] = RICCI_VERSION;
  m["data_dir"] = data_directory().string();
  m["outputs"] = run.outputs;
  m["exit_code"] = code;
  m["timestamp"] = utc_now();
  if (run.manifest_path.empty()) {
    std::cerr << m.dump() << "\n";
  } else {
    try {
      write_text(run.manifest_path, m.dump(2) + "\n");
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ricci curvature toolkit for subcubic graphs"};
  app.set_version_flag("--version", RICCI_VERSION);
  app.require_subcommand(1);
  Run run;
  app.add_option("--manifest", run.manifest_path, "write the run manifest here instead of stderr");

  CurvatureArgs curv;
  auto* c_curv = app.add_subcommand("curvature", "per-edge curvature table");
  add_graph_options(c_curv, curv.graph);
  c_curv->add_option("--engine", curv.engine, "auto | transport | ot-limit | ollivier");
  c_curv->add_option("--format", curv.format, "json | csv");
  c_curv->add_option("--out", curv.out, "output file (default stdout)");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "family generator");
  c_gen->add_option("family", gen.family, "path | cycle | prism | mobius | particular | quasi-ladder | window")
      ->required();
  c_gen->add_option("--k", gen.k, "prism / Moebius parameter");
  c_gen->add_option("--n", gen.n, "cycle order");
  c_gen->add_option("--length", gen.length, "path length");
  c_gen->add_option("--core", gen.core, "quasi-ladder core rungs");
  c_gen->add_option("--left", gen.left, "left end form, L0..L6");
  c_gen->add_option("--right", gen.right, "right end form, R0..R6");
  c_gen->add_flag("--twisted", gen.twisted, "glue the right form with its roots swapped");
  c_gen->add_option("--variant", gen.variant, "particular graph: reconstruction | lemma-text");
  c_gen->add_option("--kind", gen.kind, "window kind a..j");
  c_gen->add_option("--width", gen.width, "window width");
  c_gen->add_option("--out", gen.out, "graph6 output (default stdout)");
  c_gen->add_option("--descriptor", gen.descriptor, "JSON descriptor output");

  ClassifyArgs cls;
  auto* c_cls = app.add_subcommand("classify", "family recognition");
  add_graph_options(c_cls, cls.graph);
  c_cls->add_flag("--ollivier", cls.ollivier, "use the Ollivier-curvature family list (normalized scheme)");
  c_cls->add_option("--out", cls.out, "output file (default stdout)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "exhaustive bounded verification");
  c_ver->add_option("task", ver.task, "classification | scheme-equivalence | engines | ollivier")->required();
  c_ver->add_option("--n", ver.n, "largest order (default depends on the task)");
  c_ver->add_option("--jobs", ver.jobs, "worker threads");
  c_ver->add_option("--max-degree", ver.max_degree, "degree bound for enumeration");
  c_ver->add_option("--min-diameter", ver.min_diameter, "diameter filter for classification tasks");
  c_ver->add_option("--scheme", ver.scheme, "weight scheme");
  c_ver->add_option("--out", ver.out, "report file (default stdout)");
  c_ver->add_option("--survivors", ver.survivors, "graph6 sidecar (default <out>.g6)");

  LiouvilleArgs lv;
  auto* c_lv = app.add_subcommand("liouville", "harmonic ladder window check");
  c_lv->add_option("--width", lv.width, "window width (>= 4)");
  c_lv->add_option("--z0", lv.z0, "z_0 as p/q");
  c_lv->add_option("--z1", lv.z1, "z_1 as p/q");
  c_lv->add_option("--h0", lv.h0, "h_0 as p/q");
  c_lv->add_option("--h1", lv.h1, "h_1 as p/q");
  c_lv->add_option("--out", lv.out, "output file (default stdout)");

  HarmonicArgs hm;
  auto* c_hm = app.add_subcommand("harmonic", "solve a Dirichlet problem exactly");
  c_hm->add_option("--in", hm.in, "problem JSON")->required();
  c_hm->add_option("--out", hm.out, "output file (default stdout)");

  LocalArgs loc;
  auto* c_loc = app.add_subcommand("local-structure", "state function and local templates along geodesic paths");
  add_graph_options(c_loc, loc.graph);
  c_loc->add_option("--path", loc.path, "comma-separated geodesic path (default: every diameter path)");
  c_loc->add_option("--out", loc.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  int code = kOk;
  try {
    if (*c_curv) {
      run.subcommand = "curvature";
      code = cmd_curvature(curv, run);
    } else if (*c_gen) {
      run.subcommand = "generate";
      code = cmd_generate(gen, run);
    } else if (*c_cls) {
      run.subcommand = "classify";
      code = cmd_classify(cls, run);
    } else if (*c_ver) {
      run.subcommand = "verify";
      code = cmd_verify(ver, run);
    } else if (*c_lv) {
      run.subcommand = "liouville";
      code = cmd_liouville(lv, run);
    } else if (*c_hm) {
      run.subcommand = "harmonic";
      code = cmd_harmonic(hm, run);
    } else if (*c_loc) {
      run.subcommand = "local-structure";
      code = cmd_local_structure(loc, run);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kInputError;
  }
  write_manifest(run, code);
  return code;
}
