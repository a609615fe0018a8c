#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nestlab/cli/corpus.hpp"
#include "nestlab/cli/parser.hpp"

#ifndef NESTLAB_CORPUS_PATH
#define NESTLAB_CORPUS_PATH "corpus/examples.nest"
#endif

namespace {

using nestlab::cli::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nestlab::Error(nestlab::Errc::MissingArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_summary(const Json& report) {
  std::cout << report["command"].get<std::string>();
  for (const auto& n : report["inputs"]["names"]) std::cout << " " << n.get<std::string>();
  std::cout << "\n";
  if (report["command"] == "examples") {
    for (const auto& c : report["result"]["checks"])
      std::cout << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["anchor"].get<std::string>() << "\n";
    std::cout << report["result"]["passed"] << "/" << report["result"]["total"] << " checks passed\n";
    return;
  }
  for (const auto& [k, v] : report["result"].items()) std::cout << "  " << k << ": " << v.dump() << "\n";
  for (const auto& n : report["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular embeddings of finite dimensional nest algebras"};
  std::string command;
  std::string file;
  nestlab::cli::Options opt;
  std::string json_out;
  app.add_option("command", command, "one of: classify decompose k0 gmap conjugate recover lift compose system-classify scale compare examples")
      ->required();
  app.add_option("file", file, "input file (examples: defaults to the shipped corpus)");
  app.add_option("names", opt.names, "names declared in the file");
  app.add_option("--horizon", opt.horizon, "stages examined for scale membership")->check(CLI::NonNegativeNumber);
  app.add_option("--depth", opt.depth, "zig-zag depth for compare")->check(CLI::PositiveNumber);
  app.add_option("--bound", opt.bound, "entry bound for compare")->check(CLI::PositiveNumber);
  app.add_option("--mode", opt.mode, "lift mode")->check(CLI::IsMember({"loc", "op"}));
  app.add_option("--stage", opt.stage, "stage for scale")->check(CLI::NonNegativeNumber);
  app.add_option("--json", json_out, "write the JSON report here and print a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto& known = nestlab::cli::commands();
  if (std::find(known.begin(), known.end(), command) == known.end()) {
    std::cerr << "error: UnknownCommand: '" << command << "'\n" << app.help();
    return 2;
  }

  Json report;
  try {
    if (command == "examples") {
      if (file.empty()) file = NESTLAB_CORPUS_PATH;
      const auto ws = nestlab::cli::parse(read_file(file));
      report = nestlab::cli::run_examples(ws, std::filesystem::path(file).filename().string());
    } else {
      if (file.empty()) throw nestlab::Error(nestlab::Errc::MissingArgument, "an input file is required");
      const auto ws = nestlab::cli::parse(read_file(file));
      opt.file = std::filesystem::path(file).filename().string();
      report = nestlab::cli::run(command, ws, opt);
    }
  } catch (const nestlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == nestlab::Errc::MissingArgument || e.code() == nestlab::Errc::UnknownCommand;
    return usage ? 2 : 1;
  }

  const std::string text = report.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << json_out << "'\n";
      return 2;
    }
    out << text;
    print_summary(report);
  }
  if (command == "examples" && report["result"]["passed"] != report["result"]["total"]) return 1;
  return 0;
}
