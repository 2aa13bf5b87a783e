#include "burnlab/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "burnlab/algebra.hpp"
#include "burnlab/burnside.hpp"
#include "burnlab/coset_table.hpp"
#include "burnlab/perm.hpp"
#include "burnlab/presentation.hpp"
#include "burnlab/psl.hpp"
#include "burnlab/render.hpp"
#include "burnlab/schottky.hpp"

namespace burnlab::cli {

namespace {

// Defining relators: a^7 = b^2 = (ab)^3 = (a^3 b a^5 b a^3 b)^2 = 1.
constexpr const char* k504Presentation = "gens: a b\na^7\nb^2\n(ab)^3\n(a^3ba^5ba^3b)^2\n";

std::string hash_hex(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class F>
auto stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw StateError(std::string("stage ") + name + " failed: " + e.what());
  }
}

Json mat_to_json(const psl::ProjMat2& m) {
  const auto& r = m.rep();
  return Json::array({Json::array({r.a().index(), r.b().index()}),
                      Json::array({r.c().index(), r.d().index()})});
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

RunReport cmd_order(const std::string& presentation_path, const GlobalOpts& opts,
                    const std::string& table_out) {
  RunReport rep;
  rep.command = "order";
  rep.inputs = Json{{"presentation", presentation_path}, {"max_cosets", opts.max_cosets}};
  fp::Presentation p = fp::parse_presentation(read_file(presentation_path));
  fp::CosetTable t = fp::coset_enumerate(p, {}, opts.max_cosets);
  rep.results["order"] = t.nrows();
  rep.results["ngens"] = t.ngens();
  rep.results["table_hash"] = hash_hex(t.hash());
  if (!table_out.empty()) {
    write_file(table_out, t.to_json());
    rep.results["table_file"] = table_out;
  }
  return rep;
}

RunReport cmd_burnside(int m, int n, int max_len, const GlobalOpts& opts,
                       const std::string& table_out) {
  RunReport rep;
  rep.command = "burnside";
  rep.inputs = Json{{"gens", m}, {"exp", n}, {"max_len", max_len}, {"max_cosets", opts.max_cosets}};
  bg::BurnsideSpec spec;
  spec.m = m;
  spec.n = n;
  spec.max_word_len = max_len;
  spec.max_cosets = opts.max_cosets;
  bg::BurnsideResult res = bg::compute_burnside(spec);
  rep.results["m"] = m;
  rep.results["n"] = n;
  rep.results["order"] = res.order;
  rep.results["L"] = res.relator_len_used;
  rep.results["certified"] = res.exponent_certified;
  if (!table_out.empty()) {
    write_file(table_out, res.table.to_json());
    rep.results["table_file"] = table_out;
  }
  return rep;
}

RunReport cmd_verify504(const GlobalOpts& opts, const std::string& poly_csv,
                        const std::string& override_relator) {
  RunReport rep;
  rep.command = "verify-504";
  std::vector<unsigned> poly = {1, 1, 0, 1};
  if (!poly_csv.empty()) {
    poly.clear();
    std::stringstream ss(poly_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        poly.push_back(static_cast<unsigned>(std::stoul(item)));
      } catch (const std::exception&) {
        throw ParseError(1, 1, "bad --poly entry '" + item + "': expected comma-separated bits");
      }
    }
  }
  rep.inputs = Json{{"poly", poly}, {"max_cosets", opts.max_cosets}};
  if (!override_relator.empty()) rep.inputs["override_relator"] = override_relator;

  fp::Presentation p = fp::parse_presentation(k504Presentation);
  if (!override_relator.empty()) {
    fp::Presentation ov = fp::parse_presentation("gens: a b\n" + override_relator + "\n");
    p.relators[0] = ov.relators[0];
  }

  algebra::FiniteField field =
      stage("field", [&] { return algebra::FiniteField(2, 3, poly); });
  std::vector<psl::ProjMat2> group = stage("group", [&] { return psl::build_psl2(field); });
  psl::ConjClassReport classes = stage("classes", [&] { return psl::conj_classes(group); });
  bool simple = stage("simplicity", [&] { return psl::is_simple_by_class_equation(classes); });
  std::int64_t pres_order = stage("enumeration", [&] {
    return fp::coset_enumerate(p, {}, opts.max_cosets).nrows();
  });
  auto witness =
      stage("witness_search", [&] { return psl::search_presentation_images(p, group); });

  bool iso = witness.has_value() && pres_order == static_cast<std::int64_t>(group.size());
  rep.results["psl_order"] = group.size();
  rep.results["class_sizes"] = classes.class_sizes;
  rep.results["simple"] = simple;
  rep.results["presentation_order"] = pres_order;
  rep.results["witness_found"] = witness.has_value();
  if (witness) {
    Json imgs = Json::array();
    for (const psl::ProjMat2& m : *witness) imgs.push_back(mat_to_json(m));
    rep.results["witness_images"] = imgs;
  }
  rep.results["isomorphic"] = iso;

  bool all_good = group.size() == 504 && simple && pres_order == 504 && witness.has_value() && iso;
  if (!all_good) {
    rep.status = "error";
    rep.error_code = "verification_failed";
    rep.error_message = "pipeline verdicts disagree; see results payload";
    rep.exit_code = 3;
  }
  return rep;
}

RunReport cmd_fricke_mod8(const GlobalOpts& opts) {
  RunReport rep;
  rep.command = "fricke-mod8";
  rep.inputs = Json{{"modulus", 8}};
  algebra::ModRing ring(8);
  algebra::ModMat2 x(ring.make(1), ring.make(2), ring.make(0), ring.make(1));
  algebra::ModMat2 y(ring.make(1), ring.make(0), ring.make(2), ring.make(1));
  std::vector<algebra::ModMat2> gens = {x, y};
  std::vector<algebra::ModMat2> closure = algebra::group_closure(gens, 1000000);

  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t exponent = 1;
  for (const algebra::ModMat2& m : closure) {
    std::uint64_t ord = algebra::element_order(m, closure.size());
    ++histogram[ord];
    exponent = std::lcm(exponent, ord);
  }
  rep.results["order"] = closure.size();
  rep.results["exponent"] = exponent;
  Json hist = Json::object();
  for (const auto& [ord, count] : histogram) hist[std::to_string(ord)] = count;
  rep.results["element_order_histogram"] = hist;
  (void)opts;
  return rep;
}

RunReport cmd_poincare(const std::string& config_path, const GlobalOpts& opts,
                       const std::string& csv_out, const std::string& svg_out) {
  RunReport rep;
  rep.command = "poincare";
  rep.inputs = Json{{"config", config_path}};
  schottky::SchottkyJob job = schottky::parse_schottky_job(read_file(config_path));
  schottky::validate_config(job.cfg);
  schottky::SeriesReport series = schottky::poincare_partial_sum(job.cfg, job.H, job.d, job.z, job.K);

  const std::string csv_path = csv_out.empty() ? config_path + ".csv" : csv_out;
  write_file(csv_path, schottky::series_report_csv(series));
  rep.results["csv"] = csv_path;
  if (!svg_out.empty()) {
    write_file(svg_out, schottky::series_report_svg(series));
    rep.results["svg"] = svg_out;
  }
  rep.results["d"] = job.d;
  rep.results["K"] = job.K;
  rep.results["z"] = Json::array({job.z.real(), job.z.imag()});
  rep.results["shell_counts"] = series.counts;
  rep.results["decay_ratios"] = series.decay_ratios;
  rep.results["final_partial_sum"] =
      Json::array({series.partial_sums.back().real(), series.partial_sums.back().imag()});
  if (!series.decay_ratios.empty()) rep.results["last_decay_ratio"] = series.decay_ratios.back();
  (void)opts;
  return rep;
}

RunReport cmd_dimension_count(int m, int n, const GlobalOpts& opts) {
  RunReport rep;
  rep.command = "dimension-count";
  rep.inputs = Json{{"m", m}, {"n", n}};
  schottky::DimensionCount dc = schottky::dimension_count(m, n);
  rep.results["m"] = dc.m;
  rep.results["n"] = dc.n;
  rep.results["zeros"] = dc.zeros;
  rep.results["independents"] = dc.independents;
  rep.results["arbitraries_left"] = dc.arbitraries_left;
  rep.results["arbitraries_required"] = dc.arbitraries_required;
  rep.results["deficiency"] = dc.deficiency;
  (void)opts;
  return rep;
}

RunReport cmd_render(const std::string& kind, const std::string& table_path,
                     const std::string& out_path, double scale, const GlobalOpts& opts) {
  RunReport rep;
  rep.command = "render";
  rep.inputs = Json{{"kind", kind}, {"in", table_path}, {"out", out_path}, {"scale", scale}};
  fp::CosetTable t = fp::CosetTable::from_json(read_file(table_path));
  if (kind == "cayley") {
    render::CayleyGraph g = render::cayley_from_table(t);
    write_file(out_path, render::emit_dot(g));
    rep.results["kind"] = kind;
    rep.results["out"] = out_path;
    rep.results["nodes"] = g.nodes;
    rep.results["edges"] = g.edges.size();
  } else if (kind == "hexagon") {
    render::TriangleTiling tiling = render::hexagon_tiling_b23(t);
    write_file(out_path, render::emit_svg_tiling(tiling, scale));
    std::size_t black = 0;
    for (const render::Triangle& tr : tiling.triangles) black += tr.black ? 1 : 0;
    rep.results["kind"] = kind;
    rep.results["out"] = out_path;
    rep.results["triangles"] = tiling.triangles.size();
    rep.results["black"] = black;
    rep.results["white"] = tiling.triangles.size() - black;
  } else {
    throw DomainError("unknown render kind '" + kind + "' (expected cayley or hexagon)");
  }
  (void)opts;
  return rep;
}

}  // namespace burnlab::cli
