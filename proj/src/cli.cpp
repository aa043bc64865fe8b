// Copyright 2026 The nilsem Authors
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

#include "nilsem/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilsem/errors.hpp"
#include "nilsem/extremal.hpp"
#include "nilsem/io.hpp"
#include "nilsem/partition.hpp"
#include "nilsem/search.hpp"
#include "nilsem/semigroup.hpp"
#include "nilsem/treeops.hpp"

namespace nilsem::cli {

  namespace {

    struct Context {
      CommandOutcome& outcome;
      FileFormat      format = FileFormat::text;

      std::ostringstream out;

      void write_file(std::filesystem::path const& path, std::string const& contents) {
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << contents)) {
          throw std::runtime_error("cannot write " + path.string());
        }
        outcome.files_written.push_back(path.string());
      }

      void write_semigroup(std::filesystem::path const& path, Semigroup const& s) {
        write_file(path, format_semigroup(s, format));
      }
    };

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string points_string(std::vector<Point> const& pts) {
      std::string out;
      for (auto x : pts) {
        out += (out.empty() ? "" : " ") + std::to_string(x + 1);
      }
      return out;
    }

    std::string describe_zero(Transformation const& e) {
      if (e.rank() == 1) {
        return "constant at " + std::to_string(e[0] + 1) + " (rank 1)";
      }
      return to_string(e) + " (rank " + std::to_string(e.rank()) + ")";
    }

    // Reads a file that must hold a closed set of maps.
    Semigroup load_semigroup(std::string const& path) {
      auto maps = read_maps(path);
      if (maps.maps.empty()) {
        throw ParseError(0, path + " contains no transformations");
      }
      if (auto bad = find_unclosed_pair(maps.maps)) {
        throw PreconditionError(path + " is not closed: (" + to_string(bad->first) + ") * ("
                                + to_string(bad->second)
                                + ") is missing; run `nilsem closure " + path + "` first");
      }
      return Semigroup::from_elements(maps.n, std::move(maps.maps));
    }

    std::chrono::milliseconds parse_budget(std::string const& text) {
      std::size_t used  = 0;
      double      value = 0;
      try {
        value = std::stod(text, &used);
      } catch (std::exception const&) {
        throw ArgumentError("bad budget \"" + text + "\"");
      }
      auto const unit = text.substr(used);
      double     ms   = 0;
      if (unit.empty() || unit == "s") {
        ms = value * 1e3;
      } else if (unit == "ms") {
        ms = value;
      } else if (unit == "m" || unit == "min") {
        ms = value * 60e3;
      } else if (unit == "h") {
        ms = value * 3600e3;
      } else {
        throw ArgumentError("bad budget unit \"" + unit + "\" (use ms, s, m or h)");
      }
      if (value < 0) {
        throw ArgumentError("budget must be nonnegative");
      }
      return std::chrono::milliseconds(static_cast<long long>(ms));
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_check(Context& ctx, std::string const& path) {
      auto  maps = read_maps(path);
      auto& os   = ctx.out;
      if (maps.maps.empty()) {
        throw ParseError(0, path + " contains no transformations");
      }
      os << "n: " << maps.n << "\n";
      if (auto bad = find_unclosed_pair(maps.maps)) {
        os << "closed: no ((" << to_string(bad->first) << ") * (" << to_string(bad->second)
           << ") is missing)\n"
           << "hint: run `nilsem closure " << path << "` to close it\n";
        return property_negative;
      }
      auto const s    = Semigroup::from_elements(maps.n, std::move(maps.maps));
      auto const zero = zero_of(s);
      auto const idx  = nilpotency_index(s);
      os << "size: " << s.size() << "\n"
         << "closed: yes\n"
         << "zero: " << (zero ? describe_zero(*zero) : "none") << "\n"
         << "commutative: " << yes_no(is_commutative(s)) << "\n"
         << "nilpotency index: " << (idx ? std::to_string(*idx) : "none") << "\n"
         << "nilpotent: " << yes_no(idx.has_value()) << "\n"
         << "null: " << yes_no(idx && *idx <= 2) << "\n";
      if (idx) {
        auto report = check_structure(s);
        os << "structure: " << (report.ok() ? "ok" : "VIOLATED") << "\n" << to_string(report);
        if (!report.ok()) {
          return invariant_violation;
        }
      }
      return success;
    }

    int cmd_closure(Context& ctx, std::string const& path, std::string const& output) {
      auto maps = read_maps(path);
      if (maps.maps.empty()) {
        throw ParseError(0, path + " contains no transformations");
      }
      auto const s = Semigroup::closure(maps.n, maps.maps);
      if (output.empty()) {
        ctx.out << format_semigroup(s, ctx.format);
      } else {
        ctx.write_semigroup(output, s);
        ctx.out << "closure of " << maps.maps.size() << " maps has " << s.size()
                << " elements, written to " << output << "\n";
      }
      return success;
    }

    int cmd_partition(Context& ctx, std::string const& path) {
      auto const s = load_semigroup(path);
      auto const p = s_partition(s);
      ctx.out << to_string(p) << "\n"
              << "ordering: " << points_string(p.ordering) << "\n";
      return success;
    }

    int cmd_tree(Context& ctx, std::string const& path, std::string const& dot) {
      auto const s    = load_semigroup(path);
      auto const tree = build_tree(s);
      auto&      os   = ctx.out;
      os << "ordering: " << points_string(tree.ordering()) << "\n"
         << "leaves: " << tree.leaves().size() << "\n"
         << "trunk length: " << tree.trunk_length() << "\n"
         << "levels:";
      for (auto k : tree.levels()) {
        os << (k == LevelKind::linear ? " L" : " B");
      }
      os << "\nlinear levels: " << tree.linear_level_count() << "\n"
         << "branchings:";
      for (std::size_t v = 0; v < tree.nodes().size(); ++v) {
        auto const& node = tree.nodes()[v];
        if (node.children.size() >= 2) {
          auto w = v == 0 ? std::string("eps") : word_string(tree.word(v), tree.degree());
          os << " " << w << " (" << node.children.size() << " arcs)";
        }
      }
      auto const lemmas = check_branching_lemmas(tree);
      os << "\n" << to_string(lemmas, tree);
      if (!dot.empty()) {
        ctx.write_file(dot, export_dot(tree, TreeStage::original));
      }
      return lemmas.ok() ? success : invariant_violation;
    }

    int cmd_nullify(Context&           ctx,
                    std::string const& path,
                    std::string const& output,
                    std::string const& dot_prefix) {
      auto const s = load_semigroup(path);
      auto const r = nullify_with_trees(s);
      if (!dot_prefix.empty()) {
        for (auto stage : {TreeStage::original, TreeStage::stripped, TreeStage::relabelled}) {
          ctx.write_file(dot_prefix + "-" + to_string(stage) + ".dot",
                         export_dot(r.original, stage));
        }
      }
      if (output.empty()) {
        ctx.out << format_semigroup(r.result, ctx.format, "null semigroup of size "
                                                             + std::to_string(r.result.size()));
      } else {
        ctx.write_semigroup(output, r.result);
        ctx.out << "size: " << s.size() << " -> " << r.result.size() << "\n"
                << "linear levels: " << r.linear_levels << "\n"
                << "null: " << yes_no(is_null(r.result)) << "\n"
                << "written to " << output << "\n";
      }
      return success;
    }

    int cmd_max_null(Context&                        ctx,
                     std::size_t                     n,
                     std::size_t                     t,
                     std::vector<std::size_t> const& block_1,
                     std::size_t                     base_1,
                     std::string const&              output) {
      if (t == 0) {
        t = alpha(n);
      }
      std::vector<Point> block;
      if (block_1.empty()) {
        for (Point x = 0; x < t; ++x) {
          block.push_back(x);
        }
      } else {
        for (auto x : block_1) {
          if (x == 0) {
            throw ArgumentError("block points are 1-based");
          }
          block.push_back(static_cast<Point>(x - 1));
        }
      }
      Point base = base_1 == 0 ? (block.empty() ? 0 : block.front()) : static_cast<Point>(base_1 - 1);
      if (base_1 == 0 && !block.empty()) {
        base = *std::min_element(block.begin(), block.end());
      }
      auto const s = max_null(n, t, block, base);
      if (output.empty()) {
        ctx.out << format_semigroup(s, ctx.format);
      } else {
        ctx.write_semigroup(output, s);
        ctx.out << "max_null(" << n << ", " << t << ") has " << s.size()
                << " elements, written to " << output << "\n";
      }
      return success;
    }

    nlohmann::json report_json(SearchReport const& r) {
      nlohmann::json j;
      j["n"]                        = r.n;
      j["mode"]                     = to_string(r.mode);
      j["certified"]                = r.certified;
      j["max_size"]                 = r.max_size;
      j["xi"]                       = xi(r.n).str();
      j["max_equals_xi"]            = r.max_equals_xi;
      j["maximizers_null"]          = r.maximizers_null;
      j["maximizers_characterized"] = r.maximizers_characterized;
      j["xi_bound_violations"]      = r.xi_bound_violations;
      j["nodes_explored"]           = r.nodes_explored;
      j["elapsed_seconds"]          = r.elapsed_seconds;
      j["maximizer_t"]              = r.maximizer_t;
      j["maximizers"]               = nlohmann::json::array();
      for (auto const& s : r.maximizers) {
        auto maps = nlohmann::json::array();
        for (auto const& f : s) {
          auto row = nlohmann::json::array();
          for (auto x : f.images()) {
            row.push_back(x + 1);
          }
          maps.push_back(std::move(row));
        }
        j["maximizers"].push_back(std::move(maps));
      }
      j["zero_classes"] = nlohmann::json::array();
      for (auto const& z : r.zero_classes) {
        j["zero_classes"].push_back({{"zero", to_string(z.zero)},
                                     {"block_sizes", z.block_sizes},
                                     {"pool_size", z.pool_size},
                                     {"best", z.best}});
      }
      return j;
    }

    int cmd_search(Context&           ctx,
                   std::size_t        n,
                   std::string const& mode,
                   std::string const& budget,
                   std::string const& emit_dir,
                   unsigned           threads,
                   bool               json) {
      SearchOptions options;
      options.mode    = mode == "all" ? SearchMode::all_zeros : SearchMode::rank1;
      options.budget  = parse_budget(budget);
      options.threads = threads;
      auto const r    = certify_max(n, options);
      if (json) {
        ctx.out << report_json(r).dump(2) << "\n";
      } else {
        ctx.out << to_string(r);
      }
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        auto const ext = ctx.format == FileFormat::json ? ".json" : ".sg";
        for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof(name), "maximizer-%03zu", i + 1);
          ctx.write_semigroup(std::filesystem::path(emit_dir) / (name + std::string(ext)),
                              r.maximizers[i]);
        }
      }
      if (r.xi_bound_violations != 0) {
        return invariant_violation;
      }
      return r.certified ? success : property_negative;
    }

    int cmd_random(Context& ctx, std::size_t n, std::uint64_t seed, std::size_t size,
                   std::string const& output) {
      auto const s = random_cn(n, seed, size);
      if (output.empty()) {
        ctx.out << format_semigroup(s, ctx.format, "random_cn seed " + std::to_string(seed));
      } else {
        ctx.write_semigroup(output, s);
        ctx.out << "random commutative nilpotent semigroup of size " << s.size()
                << ", written to " << output << "\n";
      }
      return success;
    }

  }  // namespace

  CommandOutcome run(std::vector<std::string> const& args) {
    CommandOutcome outcome;
    Context        ctx{outcome, FileFormat::text, {}};

    CLI::App app{"Commutative nilpotent transformation semigroups", "nilsem"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Write semigroups and reports as JSON");

    std::size_t n = 0;
    std::string file, output, dot, dot_prefix;

    auto* xi_cmd = app.add_subcommand("xi", "Print xi(N) = max t^(N-t)");
    xi_cmd->add_option("N", n, "Degree")->required()->check(CLI::PositiveNumber);

    auto* alpha_cmd = app.add_subcommand("alpha", "Print the largest t attaining xi(N)");
    alpha_cmd->add_option("N", n, "Degree")->required()->check(CLI::PositiveNumber);

    auto* check_cmd = app.add_subcommand("check", "Report the properties of a semigroup file");
    check_cmd->add_option("FILE", file)->required();

    auto* closure_cmd = app.add_subcommand("closure", "Close a set of maps under composition");
    closure_cmd->add_option("FILE", file)->required();
    closure_cmd->add_option("-o,--output", output, "Output file");

    auto* partition_cmd = app.add_subcommand("partition", "Print the S-partition");
    partition_cmd->add_option("FILE", file)->required();

    auto* tree_cmd = app.add_subcommand("tree", "Describe the word tree and check its lemmas");
    tree_cmd->add_option("FILE", file)->required();
    tree_cmd->add_option("--dot", dot, "Write the tree as a DOT file");

    auto* nullify_cmd = app.add_subcommand("nullify", "Null semigroup of the same size");
    nullify_cmd->add_option("FILE", file)->required();
    nullify_cmd->add_option("-o,--output", output, "Output file");
    nullify_cmd->add_option("--dot-prefix", dot_prefix,
                            "Write PREFIX-{original,stripped,relabelled}.dot");

    std::size_t              t = 0, base = 0;
    std::vector<std::size_t> block;
    auto* max_null_cmd = app.add_subcommand("max-null", "Largest null semigroup construction");
    max_null_cmd->add_option("N", n, "Degree")->required()->check(CLI::PositiveNumber);
    max_null_cmd->add_option("--t", t, "Block size (default alpha(N))");
    max_null_cmd->add_option("--block", block, "Block points, e.g. 1,2,5")->delimiter(',');
    max_null_cmd->add_option("--base", base, "Base point in the block (default: least)");
    max_null_cmd->add_option("-o,--output", output, "Output file");

    std::string mode = "rank1", budget = "60s", emit_dir;
    unsigned    threads = 1;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for the largest "
                                                    "commutative nilpotent subsemigroups");
    search_cmd->add_option("N", n, "Degree")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--mode", mode, "rank1 or all")
        ->check(CLI::IsMember({"rank1", "all"}));
    search_cmd->add_option("--budget", budget, "Time limit, e.g. 60s, 10m");
    search_cmd->add_option("--emit-maximizers", emit_dir, "Directory for maximizer files");
    search_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    std::uint64_t seed = 0;
    std::size_t   size = 16;
    auto* random_cmd = app.add_subcommand("random", "Random commutative nilpotent semigroup");
    random_cmd->add_option("N", n, "Degree")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", seed, "Random seed")->required();
    random_cmd->add_option("--size", size, "Target size");
    random_cmd->add_option("-o,--output", output, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      std::ostringstream out, err;
      int code          = app.exit(e, out, err);
      outcome.out       = out.str();
      outcome.err       = err.str();
      outcome.exit_code = code == 0 ? success : usage_error;
      if (code != 0 && outcome.err.find("--help") == std::string::npos) {
        outcome.err += "Run with --help for more information.\n";
      }
      return outcome;
    }
    ctx.format = json ? FileFormat::json : FileFormat::text;

    try {
      int code = success;
      if (xi_cmd->parsed()) {
        ctx.out << xi(n) << "\n";
      } else if (alpha_cmd->parsed()) {
        ctx.out << alpha(n) << "\n";
      } else if (check_cmd->parsed()) {
        code = cmd_check(ctx, file);
      } else if (closure_cmd->parsed()) {
        code = cmd_closure(ctx, file, output);
      } else if (partition_cmd->parsed()) {
        code = cmd_partition(ctx, file);
      } else if (tree_cmd->parsed()) {
        code = cmd_tree(ctx, file, dot);
      } else if (nullify_cmd->parsed()) {
        code = cmd_nullify(ctx, file, output, dot_prefix);
      } else if (max_null_cmd->parsed()) {
        code = cmd_max_null(ctx, n, t, block, base, output);
      } else if (search_cmd->parsed()) {
        code = cmd_search(ctx, n, mode, budget, emit_dir, threads, json);
      } else if (random_cmd->parsed()) {
        code = cmd_random(ctx, n, seed, size, output);
      }
      outcome.exit_code = code;
    } catch (PreconditionError const& e) {
      outcome.err       = std::string("nilsem: ") + e.what() + "\n";
      outcome.exit_code = property_negative;
    } catch (InvariantViolation const& e) {
      outcome.err       = std::string("nilsem: internal invariant violated: ") + e.what() + "\n";
      outcome.exit_code = invariant_violation;
    } catch (std::exception const& e) {
      outcome.err       = std::string("nilsem: ") + e.what() + "\n";
      outcome.exit_code = usage_error;
    }
    outcome.out = ctx.out.str() + outcome.out;
    return outcome;
  }

}  // namespace nilsem::cli
