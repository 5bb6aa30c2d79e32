// slocc4: command-line front end for the four-qubit SLOCC toolkit.
//
//   slocc4 classify --in state.json
//   slocc4 report --in states/ --seed 7 --pretty
//   slocc4 catalog --name w4 | slocc4 distill
//
// Exit codes: 0 ok, 2 parse error, 3 ambiguous classification, 4 distillation
// diverged (the result is still emitted), 64 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "slocc4/documents.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace slocc4;

namespace {

enum Exit : int { kOk = 0, kParse = 2, kAmbiguous = 3, kDiverging = 4, kUsage = 64 };

struct Settings {
  std::string in = "-";
  std::string out = "-";
  bool pretty = false;
  double tol = -1.0;  // per-command default when negative
  double rank_tol = 1e-8;
  std::uint64_t seed = 0;
  std::vector<int> alphas;
  int max_iter = 1000;
  double floor = 1e-8;
  int samples = 100;
  bool with_distill = false;
  std::string kind = "haar_state";
  double max_cond = 10.0;
  std::string name;
};

struct Outcome {
  json doc;
  int code = kOk;
};

Tolerances tolerances(const Settings& s) {
  return {s.tol > 0.0 ? s.tol : 1e-6, s.rank_tol};
}

json tolerance_json(const Settings& s) {
  const Tolerances t = tolerances(s);
  return {{"tol", t.cluster}, {"rankTol", t.rank}};
}

Outcome run_state_command(const std::string& command, const StateDocument& in, const Settings& s) {
  Outcome o;
  json& d = o.doc;
  d["toolVersion"] = kToolVersion;
  d["command"] = command;
  d["input"] = emit_state(in.state, in.label, in.normalized);
  const Tolerances tol = tolerances(s);
  try {
    if (command == "classify") {
      d["toleranceSettings"] = tolerance_json(s);
      d["result"] = to_json(classify(in.state, tol));
    } else if (command == "signature") {
      d["toleranceSettings"] = tolerance_json(s);
      d["result"] = to_json(signature(in.state, tol));
    } else if (command == "normal-form") {
      d["result"] = to_json(lu_normal_form(in.state));
    } else if (command == "monotones") {
      d["toleranceSettings"] = tolerance_json(s);
      const auto sig = signature(in.state.normalized(), tol);
      json table = json::object();
      const std::vector<int> alphas = s.alphas.empty() ? std::vector<int>{1, 2, 3, 4, 6} : s.alphas;
      for (int a : alphas) table[std::to_string(a)] = monotone_from_quad(sig.quad, a);
      d["result"] = {{"monotones", table}, {"quad", to_json(sig).at("quad")}};
    } else if (command == "report") {
      ReportOptions opts;
      if (!s.alphas.empty()) opts.alphas = s.alphas;
      opts.samples = s.samples;
      opts.tol = tol;
      d["toleranceSettings"] = tolerance_json(s);
      d["seed"] = s.seed;
      d["samples"] = s.samples;
      const EntanglementReport rep = entanglement_report(in.state, s.seed, opts);
      const json fields = to_json(rep);
      for (const auto& [key, value] : fields.items()) d[key] = value;
      if (!rep.family) o.code = kAmbiguous;
      if (s.with_distill) {
        const auto res = distill(in.state, {s.max_iter, 1e-10, s.floor});
        d["distillation"] = to_json(res);
      }
    } else if (command == "distill") {
      const double tol_conv = s.tol > 0.0 ? s.tol : 1e-10;
      d["toleranceSettings"] = {{"tol", tol_conv}, {"floor", s.floor}, {"maxIter", s.max_iter}};
      const auto res = distill(in.state, {s.max_iter, tol_conv, s.floor});
      d["result"] = to_json(res);
      if (res.status == DistillStatus::diverging) o.code = kDiverging;
    }
  } catch (const AmbiguousClassification& e) {
    d["status"] = "ambiguous";
    d["error"] = e.what();
    o.code = kAmbiguous;
  }
  return o;
}

Outcome parse_failure(const std::string& message) {
  Outcome o;
  o.doc = {{"toolVersion", kToolVersion}, {"status", "parse-error"}, {"error", message}};
  o.code = kParse;
  return o;
}

std::string read_stream(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

Outcome run_on_text(const std::string& command, const std::string& text, const Settings& s) {
  StateDocument in;
  try {
    in = parse_state(text);
  } catch (const ParseError& e) {
    return parse_failure(e.what());
  }
  try {
    return run_state_command(command, in, s);
  } catch (const InvalidInput& e) {
    return parse_failure(e.what());
  }
}

int severity(int code) {
  switch (code) {
    case kParse: return 3;
    case kAmbiguous: return 2;
    case kDiverging: return 1;
    default: return 0;
  }
}

Outcome run_state_input(const std::string& command, const Settings& s) {
  if (s.in == "-") return run_on_text(command, read_stream(std::cin), s);
  const fs::path path(s.in);
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    Outcome batch;
    batch.doc = {{"toolVersion", kToolVersion}, {"command", command}, {"results", json::array()}};
    for (const auto& f : files) {
      std::ifstream is(f);
      Outcome one = run_on_text(command, read_stream(is), s);
      batch.doc["results"].push_back(
          {{"file", f.filename().string()}, {"exitCode", one.code}, {"document", one.doc}});
      if (severity(one.code) > severity(batch.code)) batch.code = one.code;
    }
    return batch;
  }
  std::ifstream is(path);
  if (!is) return parse_failure("cannot open input file: " + s.in);
  return run_on_text(command, read_stream(is), s);
}

Outcome run_sample(const Settings& s) {
  Outcome o;
  const SampleKind kind = sample_kind_from_string(s.kind);
  const SampleResult r = sample(kind, s.seed, s.max_cond);
  if (const auto* st = std::get_if<PureState4>(&r)) {
    o.doc = emit_state(*st, "haar_state seed " + std::to_string(s.seed), true);
  } else {
    o.doc = {{"toolVersion", kToolVersion},
             {"command", "sample"},
             {"kind", s.kind},
             {"seed", s.seed},
             {"matrix", to_json(MatX(std::get<Mat2>(r)))}};
  }
  return o;
}

Outcome run_catalog(const Settings& s) {
  Outcome o;
  if (!s.name.empty()) {
    o.doc = emit_state(named_state(s.name), s.name, true);
    return o;
  }
  json entries = json::array();
  for (const auto& e : catalog()) {
    json params = json::array();
    for (const Complex& z : e.expected_params) params.push_back(to_json(z));
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"expectedFamily", std::string(family_name(e.expected_family))},
                       {"expectedParams", params},
                       {"state", emit_state(named_state(e.id), e.name, true)}});
  }
  o.doc = {{"toolVersion", kToolVersion}, {"command", "catalog"}, {"entries", entries}};
  return o;
}

void add_io(CLI::App* cmd, Settings& s) {
  cmd->add_option("--in", s.in, "input state document: path, directory of *.json, or - for stdin");
  cmd->add_option("--out", s.out, "output path, or - for stdout");
  cmd->add_flag("--pretty", s.pretty, "indent the JSON output");
}

void add_tolerances(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tol", s.tol, "eigenvalue clustering tolerance (default 1e-6)");
  cmd->add_option("--rank-tol", s.rank_tol, "relative rank tolerance (default 1e-8)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-qubit SLOCC classification and entanglement toolkit", "slocc4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Settings s;

  auto* classify_cmd = app.add_subcommand("classify", "family label with parameters");
  auto* signature_cmd = app.add_subcommand("signature", "invariants (a,b,c,d) and eigenvalues of R R^T");
  auto* nf_cmd = app.add_subcommand("normal-form", "local-unitary normal form of R");
  auto* mono_cmd = app.add_subcommand("monotones", "entanglement monotones M_alpha");
  auto* report_cmd = app.add_subcommand("report", "full entanglement report");
  auto* distill_cmd = app.add_subcommand("distill", "local filtering to the locally stochastic form");
  auto* sample_cmd = app.add_subcommand("sample", "seeded random state or 2x2 matrix");
  auto* catalog_cmd = app.add_subcommand("catalog", "named example states and their families");

  for (auto* cmd : {classify_cmd, signature_cmd, nf_cmd, mono_cmd, report_cmd, distill_cmd}) {
    add_io(cmd, s);
  }
  for (auto* cmd : {classify_cmd, signature_cmd, mono_cmd, report_cmd}) add_tolerances(cmd, s);
  for (auto* cmd : {mono_cmd, report_cmd}) {
    cmd->add_option("--alpha", s.alphas, "monotone order (repeatable)")->check(CLI::PositiveNumber);
  }
  report_cmd->add_option("--seed", s.seed, "seed for the sampled tangle averages");
  report_cmd->add_option("--samples", s.samples, "right-unitary samples per reduction")
      ->check(CLI::PositiveNumber);
  report_cmd->add_flag("--distill", s.with_distill, "include a distillation block");
  for (auto* cmd : {report_cmd, distill_cmd}) {
    cmd->add_option("--max-iter", s.max_iter, "maximum filtering sweeps")->check(CLI::PositiveNumber);
    cmd->add_option("--floor", s.floor, "success probability below which a run diverges");
  }
  distill_cmd->add_option("--tol", s.tol, "convergence tolerance on max ||2 rho_q - I|| (default 1e-10)");

  sample_cmd->add_option("--kind", s.kind, "haar_state, su2 or sl2_det1")
      ->check(CLI::IsMember({"haar_state", "su2", "sl2_det1"}));
  sample_cmd->add_option("--seed", s.seed, "random seed");
  sample_cmd->add_option("--max-cond", s.max_cond, "condition bound for sl2_det1");
  sample_cmd->add_option("--out", s.out, "output path, or - for stdout");
  sample_cmd->add_flag("--pretty", s.pretty, "indent the JSON output");
  catalog_cmd->add_option("--name", s.name, "emit the state document of one named state");
  catalog_cmd->add_option("--out", s.out, "output path, or - for stdout");
  catalog_cmd->add_flag("--pretty", s.pretty, "indent the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Outcome o;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "sample") {
      o = run_sample(s);
    } else if (name == "catalog") {
      o = run_catalog(s);
    } else {
      o = run_state_input(name, s);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "slocc4: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "slocc4: " << e.what() << "\n";
    return 1;
  }

  const std::string text = o.doc.dump(s.pretty ? 2 : -1) + "\n";
  if (s.out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(s.out);
    if (!os) {
      std::cerr << "slocc4: cannot write " << s.out << "\n";
      return 1;
    }
    os << text;
  }
  if (o.code == kParse) std::cerr << "slocc4: " << o.doc.value("error", std::string()) << "\n";
  return o.code;
}
