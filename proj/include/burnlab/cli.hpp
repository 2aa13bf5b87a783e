#pragma once

#include <cstdint>
#include <string>

#include "burnlab/report.hpp"

namespace burnlab::cli {

struct GlobalOpts {
  bool json = false;
  bool no_timing = false;
  std::int64_t max_cosets = 200000;
};

std::string read_file(const std::string& path);               // IoError on failure
void write_file(const std::string& path, const std::string& content);

// Each command builds its RunReport; timing and error reports are attached by
// the caller. table_out, csv_out, svg_out may be empty (no file written).

RunReport cmd_order(const std::string& presentation_path, const GlobalOpts& opts,
                    const std::string& table_out);

RunReport cmd_burnside(int m, int n, int max_len, const GlobalOpts& opts,
                       const std::string& table_out);

RunReport cmd_verify504(const GlobalOpts& opts, const std::string& poly_csv,
                        const std::string& override_relator);

RunReport cmd_fricke_mod8(const GlobalOpts& opts);

RunReport cmd_poincare(const std::string& config_path, const GlobalOpts& opts,
                       const std::string& csv_out, const std::string& svg_out);

RunReport cmd_dimension_count(int m, int n, const GlobalOpts& opts);

RunReport cmd_render(const std::string& kind, const std::string& table_path,
                     const std::string& out_path, double scale, const GlobalOpts& opts);

}  // namespace burnlab::cli
