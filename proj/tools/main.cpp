// Copyright 2026 The scramble Authors
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


// Command-line front end: one subcommand per figure-style output.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "scramble/error.hpp"
#include "scramble/io.hpp"

namespace {

enum ExitCode { kOk = 0, kValidationFailed = 1, kConfigError = 2, kRuntimeError = 3 };

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

int fail(int code, const char* kind, const std::string& message) {
  std::cerr << "error kind=" << kind << " code=" << code << " message=" << quote(message) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact open-system scrambling experiments on small spin chains"};
  // Single-letter keys (g, h) are config overrides, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", scramble::library_version());

  std::string subcommand;
  std::optional<std::string> config_file;
  std::string out_dir = ".";
  bool svg = false;
  int threads = 1;
  app.add_option("subcommand", subcommand, "Pipeline to run")
      ->required()
      ->check(CLI::IsMember(scramble::kSubcommands));
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--out-dir", out_dir, "Directory for CSV, SVG and manifest output");
  app.add_flag("--svg", svg, "Also render SVG figures");
  app.add_option("--threads", threads, "Worker threads for independent runs")->check(CLI::PositiveNumber);

  // Every configuration key doubles as a --key=value override.
  std::map<std::string, std::string> overrides;
  for (const auto& [key, value] : scramble::SimConfig{}.snapshot()) {
    app.add_option("--" + key, overrides[key], "Override " + key + " (default " + value + ")");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kConfigError, "usage", e.what());
  }

  std::vector<std::pair<std::string, std::string>> given;
  for (const auto& [key, value] : overrides) {
    if (app.count("--" + key) > 0) given.emplace_back(key, value);
  }

  try {
    scramble::RunOptions opt;
    opt.subcommand = subcommand;
    opt.config = scramble::parse_config(config_file, given);
    opt.out_dir = out_dir;
    opt.svg = svg;
    opt.threads = threads;
    const scramble::RunManifest m = scramble::run_subcommand(opt, std::cerr);
    for (const auto& [k, v] : m.results) std::cout << k << "=" << v << "\n";
    for (const auto& [file, hash] : m.outputs) std::cout << "wrote " << file << " sha256=" << hash << "\n";
    if (m.failures > 0) {
      return fail(kValidationFailed, "validation", std::to_string(m.failures) + " check(s) failed");
    }
    return kOk;
  } catch (const scramble::ConfigError& e) {
    return fail(kConfigError, "config", e.what());
  } catch (const scramble::NumericalError& e) {
    return fail(kRuntimeError, "numerical", e.what());
  } catch (const std::exception& e) {
    return fail(kRuntimeError, "runtime", e.what());
  }
}
