// Command-line front end: invariant reports, triangulation generation,
// certificate emission, and oracle cross-checks for graph groups.
//
// Exit codes: 0 ok, 1 invalid input, 2 gate refusal without override,
// 3 oracle disagreement.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ggi/io.hpp"

namespace {

int write_output(const ggi::ojson& j, const std::string& out_path) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

ggi::FieldTag parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "0") return ggi::FieldTag::rationals();
  if (!spec.empty() && (spec[0] == 'p' || spec[0] == 'P'))
    return ggi::FieldTag::prime(std::stol(spec.substr(1)));
  throw std::invalid_argument("--field must be 'q' or 'p<prime>' (e.g. p2, p5)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of right-angled Artin groups and their length-homomorphism kernels"};
  app.require_subcommand(1);

  // report
  std::string report_path, report_out, report_field = "q";
  int report_order = 12;
  std::uint64_t report_seed = 0;
  int report_threads = 1;
  std::optional<int> report_max_subset;
  bool report_assume_sc = false;
  {
    CLI::App* cmd = app.add_subcommand("report", "full invariant report for a graph document");
    cmd->add_option("path", report_path, "graph document (JSON)")->required();
    cmd->add_option("--order", report_order, "truncation order for graded ranks")->default_val(12);
    cmd->add_option("--field", report_field, "homology coefficients: q or p<prime>")->default_val("q");
    cmd->add_option("--seed", report_seed, "seed echoed into the report")->default_val(0);
    cmd->add_option("--max-subset-size", [&report_max_subset](const std::vector<std::string>& v) {
      report_max_subset = std::stoi(v.at(0));
      return true;
    }, "cap the subset size in cut-coefficient enumeration (partial results are flagged)");
    cmd->add_flag("--assume-simply-connected", report_assume_sc,
                  "treat an unknown simple-connectivity status as yes");
    cmd->add_option("--threads", report_threads, "worker hint; results are deterministic regardless");
    cmd->add_option("--out", report_out, "write the report here instead of stdout");
  }

  // generate
  std::string gen_kind, gen_steps_path, gen_out;
  std::uint64_t gen_seed = 0;
  int gen_count = 3;
  bool gen_seed_given = false;
  {
    CLI::App* cmd = app.add_subcommand("generate", "build a special or extra-special disk triangulation");
    cmd->add_option("kind", gen_kind, "special | extra-special")
        ->required()
        ->check(CLI::IsMember({"special", "extra-special"}));
    cmd->add_option("--steps", gen_steps_path, "build script (JSON) with start triangle and steps");
    cmd->add_option("--seed", gen_seed, "seeded random build")->each([&gen_seed_given](const std::string&) {
      gen_seed_given = true;
    });
    cmd->add_option("--count", gen_count, "number of attachment steps for seeded builds")->default_val(3);
    cmd->add_option("--out", gen_out, "write the graph document here instead of stdout");
  }

  // distinguish
  std::string dist_path;
  bool dist_assume_sc = false;
  {
    CLI::App* cmd = app.add_subcommand("distinguish", "emit non-Artin / non-arrangement certificates");
    cmd->add_option("path", dist_path, "graph document (JSON)")->required();
    cmd->add_flag("--assume-simply-connected", dist_assume_sc,
                  "treat an unknown simple-connectivity status as yes");
  }

  // crosscheck
  std::string cross_path;
  std::uint64_t cross_seed = 0;
  int cross_points = 10;
  bool cross_assume_sc = false;
  {
    CLI::App* cmd = app.add_subcommand("crosscheck", "sample-based oracle agreement summary");
    cmd->add_option("path", cross_path, "graph document (JSON)")->required();
    cmd->add_option("--seed", cross_seed, "sampling seed")->default_val(0);
    cmd->add_option("--points", cross_points, "points per component and generic points")->default_val(10);
    cmd->add_flag("--assume-simply-connected", cross_assume_sc,
                  "treat an unknown simple-connectivity status as yes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("report")) {
      ggi::ParsedDocument doc = ggi::load_graph_document(report_path);
      ggi::ReportOptions opt;
      opt.order = report_order;
      opt.field = parse_field(report_field);
      opt.seed = report_seed;
      opt.max_subset_size = report_max_subset;
      opt.assume_simply_connected = report_assume_sc;
      (void)report_threads;  // enumeration is deterministic either way
      ggi::ReportResult res = ggi::build_report(doc, opt);
      int rc = write_output(res.json, report_out);
      if (rc != 0) return rc;
      return res.gate_refused ? 2 : 0;
    }

    if (app.got_subcommand("generate")) {
      ggi::DiskTriangulation tri;
      if (!gen_steps_path.empty()) {
        std::ifstream in(gen_steps_path);
        if (!in) throw std::invalid_argument("cannot open '" + gen_steps_path + "'");
        ggi::ojson sj;
        try {
          sj = ggi::ojson::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
          throw std::invalid_argument("parse error in '" + gen_steps_path + "': " + e.what());
        }
        tri = ggi::build_special(ggi::parse_build_script(sj));
      } else if (gen_seed_given) {
        tri = ggi::build_special_random(gen_seed, gen_count);
      } else {
        throw std::invalid_argument("generate: pass --steps <script.json> or --seed <S>");
      }
      if (gen_kind == "extra-special") tri = ggi::extend_extra_special(tri);
      ggi::ValidationReport rep = ggi::validate(tri);
      if (!rep.pass) {
        std::cerr << "error: generated triangulation failed validation: " << rep.failures[0] << "\n";
        return 1;
      }
      return write_output(ggi::triangulation_document(tri), gen_out);
    }

    if (app.got_subcommand("distinguish")) {
      ggi::ParsedDocument doc = ggi::load_graph_document(dist_path);
      ggi::DistinguishResult res = ggi::run_distinguish(doc.graph, dist_assume_sc);
      int rc = write_output(res.json, "");
      if (rc != 0) return rc;
      return res.gate_refused ? 2 : 0;
    }

    if (app.got_subcommand("crosscheck")) {
      ggi::ParsedDocument doc = ggi::load_graph_document(cross_path);
      ggi::CrosscheckResult res =
          ggi::run_crosscheck(doc.graph, cross_seed, cross_points, cross_assume_sc);
      int rc = write_output(ggi::crosscheck_to_json(res), "");
      if (rc != 0) return rc;
      if (!res.all_agree()) {
        std::cerr << "oracle disagreement at " << res.failures[0].point << ": "
                  << res.failures[0].detail << "\n";
        return 3;
      }
      return 0;
    }
  } catch (const ggi::gate_refused& e) {
    std::cerr << "gate refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
