// Copyright 2026 The Authors.
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

#pragma once

// Command-line front end. Kept in a header so tests can drive `run` with
// in-memory streams.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "friendship/friendship.hpp"

namespace friendship::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file),
          std::istreambuf_iterator<char>()};
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// `out` (or the --out file), diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and classify friendship digraphs",
               "friendship"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path = "-";
  std::string format = "json";
  bool quiet = false;
  app.add_option("--out", out_path, "Output path, '-' for stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_flag("--quiet", quiet, "Suppress standard output");

  std::vector<std::size_t> cycles;
  auto* wheel = app.add_subcommand("wheel", "Fancy wheel from cycle lengths");
  wheel->add_option("--cycles", cycles, "Comma-separated cycle lengths")
      ->required()
      ->delimiter(',');

  std::uint64_t q = 0;
  std::string emit = "design";
  std::optional<std::uint64_t> seed;
  auto* plane = app.add_subcommand("plane", "Projective plane PG(2,q)");
  plane->add_option("--q", q, "Prime power order")->required();
  plane->add_option("--emit", emit, "Emit the design or its digraph")
      ->check(CLI::IsMember({"design", "digraph"}));
  plane->add_option("--seed", seed, "Permute SDR candidate order");

  std::string design_path;
  auto* build = app.add_subcommand("build", "Regular friendship digraph from an SBIBD");
  build->add_option("--design", design_path, "Design JSON, '-' for stdin")
      ->required();
  build->add_option("--seed", seed, "Permute SDR candidate order");

  std::string digraph_path;
  bool all_props = false;
  auto* verify = app.add_subcommand("verify", "Friendship and consequence checks");
  verify->add_option("--digraph", digraph_path, "Digraph JSON, '-' for stdin")
      ->required();
  verify->add_flag("--all-props", all_props, "Also run the six consequence checks");

  auto* classify_cmd = app.add_subcommand("classify", "Fancy wheel / regular verdict");
  classify_cmd
      ->add_option("--digraph", digraph_path, "Digraph JSON, '-' for stdin")
      ->required();

  std::size_t n = 0;
  bool modulo_iso = false;
  bool allow_large = false;
  std::optional<std::size_t> max_results;
  auto* search = app.add_subcommand("search", "Enumerate friendship digraphs of order n");
  search->add_option("--n", n, "Order")->required();
  search->add_flag("--modulo-iso", modulo_iso, "One digraph per isomorphism class");
  search->add_option("--max-results", max_results, "Stop after this many results");
  search->add_flag("--allow-large", allow_large, "Permit n above the default cap");

  bool exhaustive = false;
  auto* hall = app.add_subcommand("hall", "Hall's condition for block complements");
  hall->add_option("--design", design_path, "Design JSON, '-' for stdin")
      ->required();
  hall->add_flag("--exhaustive", exhaustive, "Check every block subset (v <= 20)");

  std::vector<const char*> argv{"friendship"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream text;
  int status = kOk;
  try {
    const bool wants_dot = format == "dot";
    auto emit_digraph = [&](const Digraph& d) {
      text << (wants_dot ? to_dot(d) : to_json(d) + "\n");
    };
    auto require_json = [&](const char* what) {
      if (wants_dot) {
        throw detail::UsageError(std::string("--format dot does not apply to ") + what);
      }
    };

    if (*wheel) {
      emit_digraph(fancy_wheel(cycles));
    } else if (*plane) {
      const Design design = projective_plane(q);
      if (emit == "digraph") {
        emit_digraph(digraph_from_sbibd(design, seed));
      } else {
        require_json("designs");
        text << to_json(design) << "\n";
      }
    } else if (*build) {
      emit_digraph(digraph_from_sbibd(
          design_from_json(detail::read_source(design_path, in)), seed));
    } else if (*verify) {
      require_json("property reports");
      const Digraph d = digraph_from_json(detail::read_source(digraph_path, in));
      std::vector<PropertyReport> reports{is_friendship(d)};
      if (all_props) {
        for (auto& r : check_consequences(d)) reports.push_back(std::move(r));
      }
      for (const auto& r : reports) {
        text << to_json_value(r).dump() << "\n";
        if (!r.holds) status = kFailed;
      }
    } else if (*classify_cmd) {
      require_json("classifications");
      const Digraph d = digraph_from_json(detail::read_source(digraph_path, in));
      const Classification c = classify(d);
      text << to_json_value(c).dump() << "\n";
      if (!c.is_friendship()) status = kFailed;
    } else if (*search) {
      require_json("search results");
      SearchConfig config{n, max_results, modulo_iso, allow_large};
      std::size_t wheels = 0, regular = 0, other = 0, count = 0;
      for (const auto& d : enumerate_friendship_digraphs(config)) {
        text << to_json(d) << "\n";
        const auto c = classify(d);
        wheels += c.is_fancy_wheel();
        regular += c.is_regular();
        other += !c.is_friendship();
        ++count;
      }
      nlohmann::ordered_json summary = {{"n", n},
                                {"modulo_iso", modulo_iso},
                                {"count", count},
                                {"fancy_wheel", wheels},
                                {"regular", regular},
                                {"not_friendship", other}};
      text << nlohmann::ordered_json{{"summary", summary}}.dump() << "\n";
    } else if (*hall) {
      require_json("Hall reports");
      const auto report = check_hall_condition(
          design_from_json(detail::read_source(design_path, in)), exhaustive);
      text << to_json_value(report).dump() << "\n";
      if (!report.holds) status = kFailed;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (out_path != "-") {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    file << text.str();
  } else if (!quiet) {
    out << text.str();
  }
  return status;
}

}  // namespace friendship::cli
