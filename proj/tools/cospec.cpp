// Copyright 2026 The cospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cospec: build, certify, search and export cospectral unfolding pairs.
//
//   cospec construct {1|2|3} --seed FILE [--dot DIR] [--g6 DIR] --out FILE
//   cospec check {pet|pst} --matrix FILE
//   cospec search {1|2|3} --template FILE --max-b N --out FILE
//   cospec export --pair FILE --format {dot|graph6} [--out-dir DIR]
//
// Exit codes: 0 ok, 2 schema, 3 precondition, 4 cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cospec/cospec.hpp"

namespace fs = std::filesystem;
using cospec::Json;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cospec::SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw cospec::SchemaError(path + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

std::string g6_lines(const cospec::PairReport& r) { return r.left_graph6 + "\n" + r.right_graph6 + "\n"; }

std::string dot_pair(const cospec::Graph& left, const cospec::Graph& right) {
  return cospec::to_dot(left, "left") + cospec::to_dot(right, "right");
}

unsigned default_threads() {
  if (const char* env = std::getenv("COSPEC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_construct(int kind, const std::string& seed_file, const std::string& out, const std::string& dot_dir,
                  const std::string& g6_dir) {
  const auto construction = cospec::construction_from_int(kind);
  const auto seed = cospec::seed_from_json(construction, read_json(seed_file));
  const auto pair = cospec::build_unfolding(construction, seed);
  const auto report = cospec::certify(pair);
  write_json(out, cospec::report_to_json(report));
  if (!dot_dir.empty()) {
    write_text(fs::path(dot_dir) / "left.dot", cospec::to_dot(pair.left, "left"));
    write_text(fs::path(dot_dir) / "right.dot", cospec::to_dot(pair.right, "right"));
  }
  if (!g6_dir.empty()) write_text(fs::path(g6_dir) / "pair.g6", g6_lines(report));
  std::cout << cospec::to_string(construction) << ": " << report.vertices << " vertices, cospectral="
            << (report.cospectral ? "true" : "false") << ", isomorphic=" << cospec::to_string(report.isomorphic);
  if (report.isomorphic == cospec::IsoVerdict::kNo) {
    std::cout << (report.prediction.isomorphic == std::optional<bool>(false) ? " (predicted)" : " (observed)");
  }
  std::cout << "\n";
  return 0;
}

int cmd_check(const std::string& what, const std::string& matrix_file) {
  Json j = read_json(matrix_file);
  if (j.is_object() && j.contains("B")) j = j["B"];
  const auto b = cospec::matrix_from_json(j, "matrix", false);
  if (!b.square()) throw cospec::PreconditionError("check: matrix must be square");
  Json out = Json::object();
  if (what == "pet") {
    const auto w = cospec::is_pet(b);
    out["pet"] = w.has_value();
    out["quick_non_pet"] = cospec::quick_non_pet(b);
    out["witness"] = w ? cospec::witness_to_json(*w) : Json(nullptr);
  } else {
    const auto w = cospec::is_pst(b);
    out["pst"] = w.has_value();
    out["witness"] = w ? cospec::witness_to_json(*w) : Json(nullptr);
  }
  out["method"] = "exhaustive";
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_search(int kind, const std::string& template_file, std::size_t max_b, unsigned threads,
               bool symmetric_only, const std::string& out) {
  const auto construction = cospec::construction_from_int(kind);
  cospec::SearchOptions opts;
  opts.max_b = max_b;
  opts.threads = threads;
  opts.symmetric_only = symmetric_only;
  const auto catalog = cospec::run_search(cospec::template_from_json(construction, read_json(template_file)), opts);
  write_json(out, cospec::catalog_to_json(catalog));
  std::cout << "examined " << catalog.examined << " seeds, " << catalog.cospectral << " cospectral, "
            << catalog.entries.size() << " cospectral non-isomorphic\n";
  return 0;
}

int cmd_export(const std::string& pair_file, const std::string& format, const std::string& out_dir) {
  const Json report = read_json(pair_file);
  const auto [left, right] = cospec::graphs_from_report(report);
  std::string text;
  std::string name;
  if (format == "graph6") {
    text = cospec::graph6::encode(left) + "\n" + cospec::graph6::encode(right) + "\n";
    name = "pair.g6";
  } else {
    text = dot_pair(left, right);
    name = "pair.dot";
  }
  if (out_dir.empty()) {
    std::cout << text;
  } else {
    write_text(fs::path(out_dir) / name, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and certify cospectral graph pairs from unfolding constructions"};
  app.set_config("--config", "", "Read default option values from an INI/TOML file");
  app.require_subcommand(1);

  int kind = 0;
  std::string seed_file, out_file, dot_dir, g6_dir;
  auto* construct = app.add_subcommand("construct", "Build a pair from a seed file and certify it");
  construct->add_option("kind", kind, "Construction 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  construct->add_option("--seed", seed_file, "Seed JSON")->required()->check(CLI::ExistingFile);
  construct->add_option("--out", out_file, "Pair report JSON")->required();
  construct->add_option("--dot", dot_dir, "Directory for left.dot / right.dot");
  construct->add_option("--g6", g6_dir, "Directory for pair.g6");

  std::string what, matrix_file;
  auto* check = app.add_subcommand("check", "Decide whether a matrix is PET or PST");
  check->add_option("what", what, "pet or pst")->required()->check(CLI::IsMember({"pet", "pst"}));
  check->add_option("--matrix", matrix_file, "Matrix JSON")->required()->check(CLI::ExistingFile);

  std::string template_file;
  std::size_t max_b = 3;
  unsigned threads = default_threads();
  bool symmetric_only = false;
  auto* search = app.add_subcommand("search", "Enumerate seeds B and catalog cospectral non-isomorphic pairs");
  search->add_option("kind", kind, "Construction 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  search->add_option("--template", template_file, "Template JSON")->required()->check(CLI::ExistingFile);
  search->add_option("--max-b", max_b, "Largest B dimension")->capture_default_str();
  search->add_option("--threads", threads, "Worker threads (default: $COSPEC_THREADS or all cores)");
  search->add_flag("--symmetric-only", symmetric_only, "Enumerate symmetric B only");
  search->add_option("--out", out_file, "Catalog JSON")->required();

  std::string pair_file, format, out_dir;
  auto* exporter = app.add_subcommand("export", "Export the graphs of a pair report");
  exporter->add_option("--pair", pair_file, "Pair report JSON")->required()->check(CLI::ExistingFile);
  exporter->add_option("--format", format, "dot or graph6")->required()->check(CLI::IsMember({"dot", "graph6"}));
  exporter->add_option("--out-dir", out_dir, "Write pair.dot / pair.g6 here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSchema;
  }

  try {
    if (*construct) return cmd_construct(kind, seed_file, out_file, dot_dir, g6_dir);
    if (*check) return cmd_check(what, matrix_file);
    if (*search) return cmd_search(kind, template_file, max_b, threads, symmetric_only, out_file);
    if (*exporter) return cmd_export(pair_file, format, out_dir);
  } catch (const cospec::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const cospec::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const cospec::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
