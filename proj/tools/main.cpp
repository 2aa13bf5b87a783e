#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "burnlab/cli.hpp"
#include "burnlab/errors.hpp"

namespace {

using burnlab::cli::GlobalOpts;
using burnlab::cli::Json;
using burnlab::cli::RunReport;

void add_common_flags(CLI::App* cmd, GlobalOpts& opts) {
  cmd->add_flag("--json", opts.json, "emit the run report as JSON");
  cmd->add_flag("--no-timing", opts.no_timing, "omit elapsed_ms from the report");
  cmd->add_option("--max-cosets", opts.max_cosets, "coset table capacity")
      ->envname("BURNSIDE_LAB_MAX_COSETS")
      ->check(CLI::PositiveNumber);
}

void print_human(const RunReport& rep, bool include_timing) {
  std::cout << "command: " << rep.command << "\n";
  std::cout << "status: " << rep.status << "\n";
  if (rep.status != "ok") {
    std::cout << "error_code: " << rep.error_code << "\n";
    std::cout << "error_message: " << rep.error_message << "\n";
  }
  for (const auto& item : rep.results.items()) {
    const Json& v = item.value();
    std::cout << item.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
  }
  if (include_timing) std::cout << "elapsed_ms: " << rep.elapsed_ms << "\n";
}

int run_command(const std::string& name, const GlobalOpts& opts,
                const std::function<RunReport()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  int exit_code = 0;
  try {
    rep = body();
    exit_code = rep.exit_code;
  } catch (const burnlab::Error& e) {
    rep.status = "error";
    rep.error_code = burnlab::cli::error_code_for(e);
    rep.error_message = e.what();
    exit_code = burnlab::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.error_code = "internal_error";
    rep.error_message = e.what();
    exit_code = 3;
  }
  if (rep.command.empty()) rep.command = name;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  Json j = rep.to_json(!opts.no_timing);
  burnlab::cli::validate_run_report(j);
  if (opts.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    print_human(rep, !opts.no_timing);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "burnside-lab: coset enumeration, Burnside group orders, PSL(2,q) verification, "
      "Poincare series numerics, and Cayley/tiling renderers"};
  app.require_subcommand(1);

  GlobalOpts opts;
  int exit_code = 0;

  std::string order_file;
  std::string order_table_out;
  {
    CLI::App* cmd = app.add_subcommand("order", "enumerate cosets of a finite presentation");
    cmd->add_option("presentation", order_file, "presentation file")->required();
    cmd->add_option("--table-out", order_table_out, "write the standardized table JSON here");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("order", opts, [&] {
        return burnlab::cli::cmd_order(order_file, opts, order_table_out);
      });
    });
  }

  int bg_m = 2;
  int bg_n = 2;
  int bg_maxlen = 6;
  std::string bg_table_out;
  {
    CLI::App* cmd = app.add_subcommand("burnside", "compute |B(m,n)| with certification");
    cmd->add_option("--gens", bg_m, "number of generators m")->required();
    cmd->add_option("--exp", bg_n, "exponent n")->required();
    cmd->add_option("--max-len", bg_maxlen, "largest base-word length to instantiate");
    cmd->add_option("--table-out", bg_table_out, "write the final coset table JSON here");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("burnside", opts, [&] {
        return burnlab::cli::cmd_burnside(bg_m, bg_n, bg_maxlen, opts, bg_table_out);
      });
    });
  }

  std::string v_poly;
  std::string v_override;
  {
    CLI::App* cmd = app.add_subcommand(
        "verify-504", "full pipeline: GF(8), PSL(2,8), class equation, presentation, witness");
    cmd->add_option("--poly", v_poly,
                    "reduction polynomial bits c0,c1,...,ck (constant first, default 1,1,0,1)");
    cmd->add_option("--override-relator", v_override,
                    "replace the first relator of the built-in presentation");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("verify-504", opts, [&] {
        return burnlab::cli::cmd_verify504(opts, v_poly, v_override);
      });
    });
  }

  {
    CLI::App* cmd = app.add_subcommand(
        "fricke-mod8", "closure of the two parabolic matrices over Z/8Z");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("fricke-mod8", opts,
                              [&] { return burnlab::cli::cmd_fricke_mod8(opts); });
    });
  }

  std::string pc_config;
  std::string pc_csv;
  std::string pc_svg;
  {
    CLI::App* cmd = app.add_subcommand("poincare", "partial sums of a Poincare theta series");
    cmd->add_option("config", pc_config, "Schottky series job JSON")->required();
    cmd->add_option("--csv-out", pc_csv, "CSV output path (default: <config>.csv)");
    cmd->add_option("--svg-out", pc_svg, "optional SVG decay plot");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("poincare", opts, [&] {
        return burnlab::cli::cmd_poincare(pc_config, opts, pc_csv, pc_svg);
      });
    });
  }

  int dc_m = 1;
  int dc_n = 2;
  {
    CLI::App* cmd = app.add_subcommand(
        "dimension-count", "zero/constant bookkeeping for an n-circle-pair configuration");
    cmd->add_option("--m", dc_m, "order parameter m (at least 1)")->required();
    cmd->add_option("--n", dc_n, "number of circle pairs n (at least 2)")->required();
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("dimension-count", opts,
                              [&] { return burnlab::cli::cmd_dimension_count(dc_m, dc_n, opts); });
    });
  }

  std::string r_kind;
  std::string r_in;
  std::string r_out;
  double r_scale = 40.0;
  {
    CLI::App* cmd = app.add_subcommand("render", "emit DOT or SVG from a coset table");
    cmd->add_option("--kind", r_kind, "cayley | hexagon")->required();
    cmd->add_option("--in", r_in, "coset table JSON path")->required();
    cmd->add_option("--out", r_out, "output path (.dot or .svg)")->required();
    cmd->add_option("--scale", r_scale, "hexagon triangle side in SVG units");
    add_common_flags(cmd, opts);
    cmd->callback([&] {
      exit_code = run_command("render", opts, [&] {
        return burnlab::cli::cmd_render(r_kind, r_in, r_out, r_scale, opts);
      });
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return exit_code;
}
