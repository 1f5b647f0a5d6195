// Command-line front end: one subcommand per pipeline stage.
//
// Exit status: 0 on success, 1 when an invariant fails, 2 on input errors.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flatcone/families.hpp"
#include "flatcone/pipeline.hpp"
#include "flatcone/report.hpp"
#include "flatcone/svg.hpp"

namespace fs = std::filesystem;
using namespace flatcone;
using report::Json;

namespace {

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kInputError = 2;

class InputError : public Error {
 public:
  using Error::Error;
};

struct Args {
  std::string input;
  std::string out;
  long long max_len = 3;
  std::string point = "0";
  std::string seed_flag;
  std::uint64_t budget = cone::kDefaultBudget;
  std::string family;
  int k = 0;
  std::string k_range;
  bool triangles = false;
  bool vertex_colors = false;
  bool overlay_dual = false;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes through a temporary file so readers never see a partial result.
void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  fs::path target(a.out);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write '" + a.out + "'");
    out << text;
  }
  fs::rename(tmp, target);
}

void emit_json(const Args& a, const Json& j) { emit(a, j.dump(2) + "\n"); }

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("--k-range expects A..B, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("--k-range expects A..B, got '" + text + "'");
  }
}

// "--input path", "--input bundled:NAME" or "--family spiral --k N".
std::pair<std::string, emg::EnhancedMultigraph> load_graph(const Args& a) {
  if (!a.family.empty()) {
    if (a.family != "spiral") throw InputError("unknown family '" + a.family + "' (known: spiral)");
    if (a.k < 3) throw InputError("--family spiral needs --k N with N >= 3");
    return {"spiral-k" + std::to_string(a.k), families::gen_spiral(a.k)};
  }
  if (a.input.empty()) throw InputError("no instance given: use --input <file>, --input bundled:NAME or --family");
  const std::string prefix = "bundled:";
  if (a.input.rfind(prefix, 0) == 0) {
    std::string name = a.input.substr(prefix.size());
    return {name, families::load_bundled(name)};
  }
  return {fs::path(a.input).stem().string(), emg::parse_emg(read_file(a.input))};
}

pipeline::Instance load_instance(const Args& a) {
  auto [name, g] = load_graph(a);
  std::optional<labeling::SeedFlag> seed;
  if (!a.seed_flag.empty()) seed = labeling::parse_seed_flag(a.seed_flag);
  return pipeline::analyze(name, std::move(g), seed);
}

cone::EnumerationResult enumerate(const pipeline::Instance& inst, const Args& a) {
  try {
    return cone::enumerate_lattice_points(inst.cone, inst.lattice, a.max_len, a.budget);
  } catch (const cone::BudgetExceeded& e) {
    throw InputError(std::string(e.what()) + "; raise --budget or lower --max-len (" +
                     std::to_string(e.partial().points.size()) + " points found before stopping)");
  }
}

// An index into the strictly positive lattice points, or an explicit vector: edge lengths
// in column order or coordinates in the lattice basis.
IntVector select_point(const pipeline::Instance& inst, const Args& a) {
  std::vector<Integer> values;
  std::stringstream ss(a.point);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      values.emplace_back(item);
    } catch (const std::exception&) {
      throw InputError("bad --point entry '" + item + "'");
    }
  }
  if (values.size() == 1) {
    if (values[0] < 0) throw InputError("--point index must be nonnegative");
    std::vector<IntVector> positive;
    for (const auto& p : enumerate(inst, a).points)
      if (p.strictly_positive) positive.push_back(p.edges);
    if (values[0] >= positive.size())
      throw InputError("--point " + a.point + " is out of range: " + std::to_string(positive.size()) +
                       " strictly positive points with --max-len " + std::to_string(a.max_len));
    return positive[values[0].convert_to<std::size_t>()];
  }
  IntVector v(values.begin(), values.end());
  if (v.size() == inst.system.edge_count()) return v;
  if (v.size() == inst.lattice.rank()) return inst.lattice.basis * v;
  throw InputError("--point vector needs " + std::to_string(inst.system.edge_count()) + " edge lengths or " +
                   std::to_string(inst.lattice.rank()) + " lattice coordinates");
}

Json instance_header(const pipeline::Instance& inst) {
  return Json{{"instance", inst.name},
              {"vertices", inst.graph.vertex_count()},
              {"blue_edges", inst.graph.blue_edge_count()},
              {"red_edges", inst.graph.red_edge_count()}};
}

long long elapsed_us(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - since).count();
}

int cmd_validate(const Args& a) {
  auto [name, g] = load_graph(a);
  auto r = emg::validate_plausible(g);
  if (a.json) {
    Json j = report::validation(r);
    j["instance"] = name;
    emit_json(a, j);
  } else {
    std::ostringstream s;
    s << name << ": " << (r.plausible ? "plausible" : "not plausible") << " (V=" << r.counts.vertices
      << ", E_b=" << r.counts.blue_edges << ", E_red=" << r.counts.red_edges << ", bigons=" << r.counts.bigons
      << ", quads=" << r.counts.quadrilaterals << ")\n";
    for (const auto& f : r.findings)
      s << "  [" << emg::to_string(f.rule) << "] " << emg::to_string(f.severity) << ": " << f.message << "\n";
    emit(a, s.str());
  }
  return r.plausible ? kOk : kInvariantFailure;
}

int cmd_labels(const Args& a) {
  auto inst = load_instance(a);
  Json j = instance_header(inst);
  j["labels"] = report::labels(inst.graph, inst.labels);
  emit_json(a, j);
  return kOk;
}

int cmd_solve(const Args& a) {
  auto inst = load_instance(a);
  Json j = instance_header(inst);
  j["system"] = report::system(inst);
  emit_json(a, j);
  return inst.lemmas.all() ? kOk : kInvariantFailure;
}

int cmd_rays(const Args& a) {
  auto inst = load_instance(a);
  Json j = instance_header(inst);
  j["cone"] = report::cone(inst);
  emit_json(a, j);
  return kOk;
}

int cmd_lattice(const Args& a) {
  auto inst = load_instance(a);
  Json j = instance_header(inst);
  j["max_len"] = a.max_len;
  j["lattice"] = report::lattice_points(inst, enumerate(inst, a));
  emit_json(a, j);
  return kOk;
}

int cmd_realize(const Args& a) {
  auto inst = load_instance(a);
  auto r = pipeline::realize_point(inst, select_point(inst, a));
  Json j = instance_header(inst);
  j["realization"] = report::realization(inst, r, true);
  emit_json(a, j);
  return r.ok() ? kOk : kInvariantFailure;
}

int cmd_qform(const Args& a) {
  auto inst = load_instance(a);
  Json j = instance_header(inst);
  j["form"] = report::form(inst);
  emit_json(a, j);
  return kOk;
}

int cmd_check(const Args& a) {
  const auto start = std::chrono::steady_clock::now();
  auto inst = load_instance(a);
  const long long analyze_us = elapsed_us(start);

  Json findings = Json::array();
  bool ok = inst.lemmas.all() && inst.cone.has_positive_point;
  if (!inst.lemmas.all()) findings.push_back("shape system rank or dependency checks failed");
  if (!inst.cone.has_positive_point) findings.push_back("cone has no strictly positive point");
  if (inst.form.signature && !(*inst.form.signature == report::kExpectedSignature))
    findings.push_back("restricted form signature differs from (1,3,0)");

  const auto realize_start = std::chrono::steady_clock::now();
  auto points = enumerate(inst, a);
  Json realized = Json::array();
  std::size_t passed = 0, positive = 0;
  for (const auto& p : points.points) {
    if (!p.strictly_positive) continue;
    ++positive;
    try {
      auto r = pipeline::realize_point(inst, p.edges);
      passed += r.ok();
      if (!r.ok()) findings.push_back("lattice point " + std::to_string(positive - 1) + " fails a surface check");
      realized.push_back(report::realization(inst, r, false));
    } catch (const Error& e) {
      findings.push_back("lattice point " + std::to_string(positive - 1) + ": " + e.what());
      realized.push_back({{"edge_lengths", report::integers(p.edges)}, {"error", e.what()}, {"ok", false}});
    }
  }
  ok = ok && passed == positive;

  Json j = instance_header(inst);
  j["validation"] = report::validation(inst.validation);
  j["labels"] = report::labels(inst.graph, inst.labels);
  j["system"] = report::system(inst);
  j["cone"] = report::cone(inst);
  j["form"] = report::form(inst);
  j["max_len"] = a.max_len;
  j["lattice_points"] = points.points.size();
  j["strictly_positive_points"] = positive;
  j["realizations"] = std::move(realized);
  j["findings"] = findings;
  j["timings_us"] = {{"analyze", analyze_us}, {"realize", elapsed_us(realize_start)}};
  j["ok"] = ok;
  if (a.json) {
    emit_json(a, j);
  } else {
    std::ostringstream s;
    s << inst.name << ": V=" << inst.graph.vertex_count() << " E_b=" << inst.graph.blue_edge_count()
      << " rank=" << inst.kernel.rank << " dim=" << inst.kernel.dimension << " rays=" << inst.cone.rays.size()
      << " positive=" << (inst.cone.has_positive_point ? "yes" : "no");
    if (inst.form.signature)
      s << " signature=(" << inst.form.signature->positive << "," << inst.form.signature->negative << ","
        << inst.form.signature->zero << ")";
    s << "\n  realized " << passed << "/" << positive << " strictly positive points with lengths <= " << a.max_len
      << "\n";
    for (const auto& f : findings) s << "  finding: " << f.get<std::string>() << "\n";
    s << (ok ? "OK\n" : "FAILED\n");
    emit(a, s.str());
  }
  return ok ? kOk : kInvariantFailure;
}

int cmd_gen(const Args& a) {
  if (a.family.empty()) throw InputError("gen needs --family spiral --k N");
  auto [name, g] = load_graph(a);
  emit(a, "# " + name + "\n" + emg::render_emg(g));
  return kOk;
}

int cmd_survey(const Args& a) {
  if (a.family != "spiral") throw InputError("survey needs --family spiral");
  auto [lo, hi] = a.k_range.empty() ? std::pair{a.k, a.k} : parse_range(a.k_range);
  if (lo < 3 || hi < lo) throw InputError("survey needs 3 <= A <= B");
  Json rows = Json::array();
  bool ok = true;
  for (int k = lo; k <= hi; ++k) {
    const auto start = std::chrono::steady_clock::now();
    Json row{{"family", "spiral"}, {"k", k}};
    try {
      auto inst = pipeline::analyze("spiral-k" + std::to_string(k), families::gen_spiral(k));
      row["vertices"] = inst.graph.vertex_count();
      row["blue_edges"] = inst.graph.blue_edge_count();
      row["rank"] = inst.kernel.rank;
      row["dimension"] = inst.kernel.dimension;
      row["lemmas_hold"] = inst.lemmas.all();
      row["rays"] = inst.cone.rays.size();
      row["has_positive_point"] = inst.cone.has_positive_point;
      if (inst.form.signature) {
        row["signature"] = {{"positive", inst.form.signature->positive},
                            {"negative", inst.form.signature->negative},
                            {"zero", inst.form.signature->zero}};
        row["signature_is_1_3_0"] = *inst.form.signature == report::kExpectedSignature;
      }
      ok = ok && inst.lemmas.all() && inst.cone.has_positive_point;
    } catch (const Error& e) {
      row["error"] = e.what();
      ok = false;
    }
    row["time_us"] = elapsed_us(start);
    rows.push_back(std::move(row));
  }
  emit_json(a, Json{{"survey", std::move(rows)}, {"ok", ok}});
  return ok ? kOk : kInvariantFailure;
}

int cmd_render(const Args& a) {
  auto inst = load_instance(a);
  auto columns = select_point(inst, a);
  auto surface =
      geometry::realize(inst.graph, inst.boundaries, inst.labels, pipeline::edge_lengths(inst, columns));
  emit(a, svg::render(inst.graph, inst.boundaries, surface, {a.triangles, a.vertex_colors, a.overlay_dual}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of nice colorings of flat cone octahedra"};
  app.require_subcommand(1);
  Args a;

  auto add_instance = [&](CLI::App* c) {
    c->add_option("--input", a.input, "EMG file, or bundled:NAME");
    c->add_option("--family", a.family, "generated family (spiral)");
    c->add_option("--k", a.k, "family parameter");
    c->add_option("--seed-flag", a.seed_flag, "label seed as vertex:edge");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", a.out, "output file (default stdout)"); };
  auto add_points = [&](CLI::App* c) {
    c->add_option("--max-len", a.max_len, "largest edge length when enumerating lattice points")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--budget", a.budget, "maximum number of enumeration candidates");
  };

  std::map<CLI::App*, int (*)(const Args&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* c = app.add_subcommand(name, help);
    add_out(c);
    handlers[c] = fn;
    return c;
  };

  auto* validate = sub("validate", "check the plausibility axioms", cmd_validate);
  add_instance(validate);
  validate->add_flag("--json", a.json, "JSON report");
  add_instance(sub("labels", "direction labels of the blue edges", cmd_labels));
  add_instance(sub("solve", "shape system, kernel and rank checks", cmd_solve));
  add_instance(sub("rays", "extreme rays of the cone of solutions", cmd_rays));
  auto* lattice = sub("lattice", "lattice points with bounded edge lengths", cmd_lattice);
  add_instance(lattice);
  add_points(lattice);
  auto* realize = sub("realize", "realize one lattice point as a triangulated sphere", cmd_realize);
  add_instance(realize);
  add_points(realize);
  realize->add_option("--point", a.point, "index of a strictly positive point, or a comma-separated vector");
  add_instance(sub("qform", "the quadratic form and its signature", cmd_qform));
  auto* check = sub("check", "full pipeline on one instance", cmd_check);
  add_instance(check);
  add_points(check);
  check->add_flag("--json", a.json, "JSON report");
  auto* gen = sub("gen", "write a generated instance as EMG", cmd_gen);
  gen->add_option("--family", a.family, "family (spiral)")->required();
  gen->add_option("--k", a.k, "family parameter")->required();
  auto* survey = sub("survey", "rank, cone and signature over a family", cmd_survey);
  survey->add_option("--family", a.family, "family (spiral)")->required();
  survey->add_option("--k", a.k, "single family parameter");
  survey->add_option("--k-range", a.k_range, "parameter range A..B");
  auto* render = sub("render", "SVG net of a realized lattice point", cmd_render);
  add_instance(render);
  add_points(render);
  render->add_option("--point", a.point, "index of a strictly positive point, or a comma-separated vector");
  render->add_flag("--triangles", a.triangles, "draw the unit triangle grid");
  render->add_flag("--vertex-colors", a.vertex_colors, "draw the 4-coloring");
  render->add_flag("--overlay-dual", a.overlay_dual, "draw the blue and red edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (auto& [c, fn] : handlers)
      if (c->parsed()) return fn(a);
    return kInputError;
  } catch (const pipeline::InvalidInstance& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& f : e.report().findings)
      std::cerr << "  [" << emg::to_string(f.rule) << "] " << f.message << "\n";
    return kInvariantFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const emg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const emg::StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const families::RegistryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
