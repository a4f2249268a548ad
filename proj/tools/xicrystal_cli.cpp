// Command-line surface for slope-parameterized crystal realizations on
// colored multi-partitions: generation, regularity checks with the tangent
// oracle, operator words, cross-realization isomorphism, the monomial-crystal
// morphism, and exhaustive small-instance verification.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
// error, 3 refused precondition (non-aligned datum without --allow-nonaligned).

#include "xicrystal/crystal.hpp"
#include "xicrystal/enumerate.hpp"
#include "xicrystal/monomial.hpp"
#include "xicrystal/regularity.hpp"
#include "xicrystal/slope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace xicrystal;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct RunConfig {
  int n = 0;
  std::vector<int> coloring;
  std::string slope;  // JSON text
  int max_boxes = 0;
  std::string format = "json";
  std::string output;
  bool allow_nonaligned = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inline JSON (starts with '{') or @path / plain path to a JSON file.
std::string json_argument(const std::string& value) {
  if (value.empty()) return value;
  if (value.front() == '{') return value;
  if (value.front() == '@') return read_file(value.substr(1));
  return read_file(value);
}

std::vector<int> parse_coloring(const std::string& text) {
  std::vector<int> result;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    result.push_back(std::stoi(item));
  }
  return result;
}

void write_output(const RunConfig& config, const std::string& text) {
  if (config.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(config.output);
    if (!out) {
      throw std::invalid_argument("cannot write file: " + config.output);
    }
    out << text;
  }
}

void print_report(const json& report) { std::cout << report.dump() << "\n"; }

// Applies the JSON config file (if any), then lets explicit flags win.
void merge_config_file(const std::string& path, RunConfig& config,
                       const CLI::App& cmd) {
  if (path.empty()) return;
  json doc = json::parse(read_file(path));
  auto given = [&](const std::string& flag) {
    auto* option = cmd.get_option_no_throw(flag);
    return option != nullptr && option->count() > 0;
  };
  if (doc.contains("n") && !given("--n")) config.n = doc["n"].get<int>();
  if (doc.contains("coloring") && !given("--coloring")) {
    config.coloring = doc["coloring"].get<std::vector<int>>();
  }
  if (doc.contains("slope") && !given("--slope")) {
    config.slope = doc["slope"].dump();
  }
  if (doc.contains("max_boxes") && !given("--max-boxes")) {
    config.max_boxes = doc["max_boxes"].get<int>();
  }
  if (doc.contains("format") && !given("--format")) {
    config.format = doc["format"].get<std::string>();
  }
  if (doc.contains("output") && !given("--output")) {
    config.output = doc["output"].get<std::string>();
  }
}

SlopeDatum load_slope(const RunConfig& config) {
  if (config.slope.empty()) {
    throw std::invalid_argument("missing slope datum (--slope)");
  }
  return SlopeDatum::from_json(json_argument(config.slope));
}

void check_common(const RunConfig& config, const SlopeDatum& datum) {
  if (config.n < 2) {
    throw std::invalid_argument("--n must be >= 2");
  }
  if (config.coloring.empty()) {
    throw std::invalid_argument("missing coloring (--coloring)");
  }
  if (static_cast<int>(config.coloring.size()) != datum.level()) {
    throw std::invalid_argument(
        "coloring length does not match the slope datum's components");
  }
  for (int color : config.coloring) {
    if (color < 0 || color >= config.n) {
      throw std::invalid_argument("coloring residue out of range");
    }
  }
  if (config.max_boxes < 0) {
    throw std::invalid_argument("--max-boxes must be >= 0");
  }
}

// Exits 2 on a usage problem, 3 on a refused precondition.
struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CrystalGraph build_graph(const RunConfig& config, const SlopeDatum& datum) {
  check_common(config, datum);
  if (!datum.perturbed()) {
    throw std::invalid_argument(
        "generation needs a perturbed slope datum (generic/row/row_prime)");
  }
  if (!datum.aligned() && !config.allow_nonaligned) {
    throw Refused(
        "slope datum is not aligned: the generated set would not be the full "
        "regular set; pass --allow-nonaligned to force");
  }
  return generate(datum, config.n, config.coloring, config.max_boxes, true);
}

json box_json(const Box& box) {
  return json{box.component, box.row, box.col};
}

json triple_json(const HookTriple& triple) {
  json doc;
  doc["box"] = box_json(triple.box);
  doc["source"] = triple.source;
  doc["target"] = triple.target;
  return doc;
}

int cmd_generate(const RunConfig& config) {
  SlopeDatum datum = load_slope(config);
  CrystalGraph graph = build_graph(config, datum);
  if (config.format == "json") {
    write_output(config, export_json(graph));
  } else if (config.format == "dot") {
    write_output(config, export_dot(graph));
  } else if (config.format == "text") {
    std::ostringstream out;
    out << "vertices: " << graph.vertices().size()
        << "\nedges: " << graph.edges().size() << "\n";
    for (std::size_t i = 0; i < graph.vertices().size(); ++i) {
      out << "v" << i << " " << graph.vertices()[i].to_json() << "\n";
    }
    for (const auto& edge : graph.edges()) {
      out << "v" << edge[0] << " -" << edge[1] << "-> v" << edge[2] << "\n";
    }
    write_output(config, out.str());
  } else {
    throw std::invalid_argument("unknown format: " + config.format);
  }
  return kExitOk;
}

int cmd_check_regular(const RunConfig& config, const std::string& mp_arg) {
  SlopeDatum datum = load_slope(config);
  MultiPartition mp = MultiPartition::from_json(json_argument(mp_arg));
  if (mp.level() != datum.level()) {
    throw std::invalid_argument(
        "multi-partition component count does not match the slope datum");
  }
  if (!datum.perturbed()) {
    throw std::invalid_argument(
        "regularity checks need a perturbed slope datum");
  }
  auto illegal = illegal_triples(datum, mp);
  auto hooks = hook_triples(mp);
  int attracting = attracting_dimension(datum, mp);

  json report;
  report["command"] = "check-regular";
  report["status"] = illegal.empty() ? "regular" : "irregular";
  auto witness = json::array();
  for (const auto& triple : illegal) {
    witness.push_back(triple_json(triple));
  }
  report["witness"] = witness;
  json counts;
  counts["hook_triples"] = hooks.size();
  counts["illegal_triples"] = illegal.size();
  counts["attracting_dimension"] = attracting;
  counts["attracting_equals_half_dim"] =
      attracting == static_cast<int>(hooks.size());
  report["counts"] = counts;
  print_report(report);
  return illegal.empty() ? kExitOk : kExitFalse;
}

int cmd_apply(const RunConfig& config, const std::string& word,
              const std::string& start_arg) {
  SlopeDatum datum = load_slope(config);
  check_common(config, datum);
  if (!datum.perturbed()) {
    throw std::invalid_argument("operators need a perturbed slope datum");
  }
  MultiPartition start =
      start_arg.empty() ? MultiPartition(config.n, config.coloring)
                        : MultiPartition::from_json(json_argument(start_arg));

  std::optional<MultiPartition> current = start;
  std::istringstream in(word);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'f' && token[0] != 'e')) {
      throw std::invalid_argument("malformed operator token: " + token);
    }
    int residue = 0;
    try {
      std::size_t used = 0;
      residue = std::stoi(token.substr(1), &used);
      if (used + 1 != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed operator token: " + token);
    }
    if (residue < 0 || residue >= config.n) {
      throw std::invalid_argument("residue out of range in token: " + token);
    }
    if (!current) continue;  // operators fix 0
    current = token[0] == 'f' ? lower(datum, *current, residue)
                              : raise(datum, *current, residue);
  }
  json report;
  report["command"] = "apply";
  report["status"] = "ok";
  report["result"] = current ? json::parse(current->to_json()) : json("0");
  print_report(report);
  return kExitOk;
}

int cmd_iso(const RunConfig& config, const std::string& slope2) {
  SlopeDatum first = load_slope(config);
  if (slope2.empty()) {
    throw std::invalid_argument("missing second slope datum (--slope2)");
  }
  SlopeDatum second = SlopeDatum::from_json(json_argument(slope2));
  CrystalGraph left = build_graph(config, first);
  RunConfig other = config;
  CrystalGraph right = build_graph(other, second);
  auto mismatch = parallel_iso_check(left, right);

  json report;
  report["command"] = "iso";
  report["status"] = mismatch ? "mismatch" : "isomorphic";
  if (mismatch) {
    json witness;
    witness["word"] = mismatch->word;
    witness["residue"] = mismatch->residue;
    witness["detail"] = mismatch->detail;
    report["witness"] = witness;
  } else {
    report["witness"] = nullptr;
  }
  json counts;
  counts["vertices"] = left.vertices().size();
  counts["edges"] = left.edges().size();
  counts["weight_multiplicities_equal"] =
      weight_multiplicities(left) == weight_multiplicities(right);
  report["counts"] = counts;
  print_report(report);
  return mismatch ? kExitFalse : kExitOk;
}

int cmd_psi(const RunConfig& config) {
  SlopeDatum datum = load_slope(config);
  check_common(config, datum);
  if (!datum.integral()) {
    throw std::invalid_argument(
        "psi needs a plain slope datum with positive integer entries");
  }
  if (!datum.aligned()) {
    throw Refused("psi verification needs an aligned slope datum");
  }
  SlopeDatum row_datum = SlopeDatum::row(datum.base());
  CrystalGraph graph =
      generate(row_datum, config.n, config.coloring, config.max_boxes);
  EdgeConstants constants = constants_from_slope(datum, config.n);
  auto mismatch = verify_psi_commutes(datum, constants, graph);

  json report;
  report["command"] = "psi";
  report["status"] = mismatch ? "mismatch" : "commutes";
  if (mismatch) {
    json witness;
    witness["vertex"] = json::parse(mismatch->vertex);
    witness["residue"] = mismatch->residue;
    witness["detail"] = mismatch->detail;
    report["witness"] = witness;
  } else {
    report["witness"] = nullptr;
  }
  json counts;
  counts["vertices"] = graph.vertices().size();
  counts["edges"] = graph.edges().size();
  counts["level_span"] = constants.level_span;
  report["counts"] = counts;
  print_report(report);
  return mismatch ? kExitFalse : kExitOk;
}

int cmd_verify(const RunConfig& config, int size) {
  SlopeDatum datum = load_slope(config);
  RunConfig bounded = config;
  bounded.max_boxes = size;
  CrystalGraph graph = build_graph(bounded, datum);

  std::set<std::string> generated;
  for (const auto& vertex : graph.vertices()) {
    generated.insert(vertex.to_json());
  }

  json report;
  report["command"] = "verify";
  json counts;
  counts["generated"] = generated.size();

  std::size_t regular_count = 0;
  std::string status = "ok";
  json witness = nullptr;
  long enumerated = 0;
  for (const auto& mp : multipartitions_up_to(config.n, config.coloring, size)) {
    ++enumerated;
    auto hooks = hook_triples(mp);
    auto illegal = illegal_triples(datum, mp);
    int attracting = attracting_dimension(datum, mp);
    bool regular = illegal.empty();
    if (regular) ++regular_count;

    if (attracting !=
        static_cast<int>(hooks.size()) - static_cast<int>(illegal.size())) {
      status = "tangent-oracle-mismatch";
      witness = json::parse(mp.to_json());
      break;
    }
    if ((attracting == static_cast<int>(hooks.size())) != regular) {
      status = "tangent-oracle-mismatch";
      witness = json::parse(mp.to_json());
      break;
    }
    if (regular != (generated.count(mp.to_json()) > 0)) {
      status = "generation-mismatch";
      witness = json::parse(mp.to_json());
      break;
    }
  }
  counts["enumerated"] = enumerated;
  counts["regular"] = regular_count;
  report["status"] = status;
  report["witness"] = witness;
  report["counts"] = counts;
  print_report(report);
  return status == "ok" ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Slope-parameterized crystal realizations on colored multi-partitions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path;
  std::string mp_arg;
  std::string word;
  std::string start_arg;
  std::string slope2;
  int size = 6;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--config", config_path, "JSON config file (flags win)");
    cmd->add_option("--n", config.n, "residue modulus n");
    cmd->add_option(
        "--coloring",
        [&config](const std::vector<std::string>& values) {
          config.coloring = parse_coloring(values.back());
          return true;
        },
        "comma-separated component residues, e.g. 0,1");
    cmd->add_option("--slope", config.slope,
                    "slope datum JSON (inline, @file, or path)");
    cmd->add_option("--max-boxes", config.max_boxes, "generation depth");
    if (with_format) {
      cmd->add_option("--format", config.format, "json|dot|text");
      cmd->add_option("--output", config.output, "output path (default stdout)");
    }
    cmd->add_flag("--allow-nonaligned", config.allow_nonaligned,
                  "generate from a non-aligned datum anyway");
  };

  CLI::App* gen = app.add_subcommand("generate", "generate a crystal graph");
  add_common(gen, true);

  CLI::App* check =
      app.add_subcommand("check-regular", "regularity and the tangent oracle");
  add_common(check, false);
  check->add_option("multipartition", mp_arg,
                    "multi-partition JSON (inline, @file, or path)")
      ->required();

  CLI::App* apply =
      app.add_subcommand("apply", "apply an operator word to a vertex");
  add_common(apply, false);
  apply->add_option("--word", word, "whitespace-separated tokens f<r>/e<r>")
      ->required();
  apply->add_option("--start", start_arg,
                    "starting multi-partition (default: empty)");

  CLI::App* iso =
      app.add_subcommand("iso", "compare two realizations up to depth");
  add_common(iso, false);
  iso->add_option("--slope2", slope2, "second slope datum JSON");

  CLI::App* psi_cmd = app.add_subcommand(
      "psi", "verify the monomial-crystal morphism on a generated graph");
  add_common(psi_cmd, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustive generated-equals-regular and tangent-oracle check");
  add_common(verify, false);
  verify->add_option("--size", size, "maximum total boxes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    merge_config_file(config_path, config, *cmd);
    if (gen->parsed()) return cmd_generate(config);
    if (check->parsed()) return cmd_check_regular(config, mp_arg);
    if (apply->parsed()) return cmd_apply(config, word, start_arg);
    if (iso->parsed()) return cmd_iso(config, slope2);
    if (psi_cmd->parsed()) return cmd_psi(config);
    if (verify->parsed()) return cmd_verify(config, size);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const Refused& err) {
    std::cerr << "refused: " << err.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
}
