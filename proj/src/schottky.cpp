#include "burnlab/schottky.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "burnlab/errors.hpp"

namespace burnlab::schottky {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kHPoleTol = 1e-9;
constexpr double kDisjointTol = 1e-9;
constexpr double kBoundaryTol = 1e-6;

// Compensated (Kahan) accumulator.
struct Kahan {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

Complex pow_int(Complex w, int e) {
  bool invert = e < 0;
  unsigned n = static_cast<unsigned>(invert ? -(long long)e : e);
  Complex acc{1.0, 0.0};
  Complex base = w;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return invert ? Complex{1.0, 0.0} / acc : acc;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string word_name(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += 'f';
    out += std::to_string(word[i] / 2 + 1);
    if (word[i] % 2 == 1) out += '\'';
  }
  return out;
}

}  // namespace

MobiusMap MobiusMap::normalized(Complex a, Complex b, Complex c, Complex d) {
  Complex det = a * d - b * c;
  if (std::abs(det) < 1e-30) throw SingularityError("degenerate fractional linear map");
  Complex s = std::sqrt(det);
  return MobiusMap{a / s, b / s, c / s, d / s};
}

bool MobiusMap::is_identity(double tol) const {
  auto near = [tol](Complex u, Complex v) { return std::abs(u - v) <= tol; };
  Complex one{1.0, 0.0}, zero{0.0, 0.0};
  bool plus = near(a, one) && near(b, zero) && near(c, zero) && near(d, one);
  bool minus = near(a, -one) && near(b, zero) && near(c, zero) && near(d, -one);
  return plus || minus;
}

MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
  // Both operands carry ad-bc = 1, so the product does too. The determinant
  // must not be recomputed from the product entries: for long compositions of
  // contracting maps the entries grow to ~1e8 and ad-bc cancels
  // catastrophically (to 0.0 in doubles), while the entries themselves stay
  // accurate to ~1e-15 relative.
  return MobiusMap{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                   f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

Complex mobius_apply(const MobiusMap& f, Complex z) {
  if (std::abs(f.c) > 0.0) {
    Complex pole = -f.d / f.c;
    if (std::abs(z - pole) <= kPoleTol)
      throw SingularityError("point is within 1e-12 of the map's pole");
  }
  return (f.a * z + f.b) / (f.c * z + f.d);
}

MobiusMap pairing_map(const Circle& C, const Circle& Cprime) {
  if (C.radius <= 0.0 || Cprime.radius <= 0.0) throw DomainError("circle radius must be positive");
  const Complex p = C.center, q = Cprime.center;
  const double rr = C.radius * Cprime.radius;
  // f(z) = q + rr/(z - p): exterior of C -> interior of Cprime
  return MobiusMap::normalized(q, Complex{rr, 0.0} - q * p, Complex{1.0, 0.0}, -p);
}

CirclePair make_pair(const Circle& C, const Circle& Cprime) {
  return CirclePair{C, Cprime, pairing_map(C, Cprime)};
}

void validate_config(const SchottkyConfig& cfg) {
  if (cfg.pairs.empty()) throw DomainError("configuration needs at least one circle pair");
  std::vector<Circle> circles;
  for (const CirclePair& p : cfg.pairs) {
    circles.push_back(p.C);
    circles.push_back(p.Cprime);
  }
  for (const Circle& c : circles)
    if (!(c.radius > 0.0)) throw DomainError("circle radius must be positive");
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      double dist = std::abs(circles[i].center - circles[j].center);
      if (dist - (circles[i].radius + circles[j].radius) <= kDisjointTol)
        throw DomainError("circles " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not disjoint");
    }
  }
  for (std::size_t pi = 0; pi < cfg.pairs.size(); ++pi) {
    const CirclePair& p = cfg.pairs[pi];
    for (int s = 0; s < 16; ++s) {
      double th = 2.0 * M_PI * s / 16.0;
      Complex zb = p.C.center + p.C.radius * Complex{std::cos(th), std::sin(th)};
      Complex w = mobius_apply(p.map, zb);
      if (std::abs(std::abs(w - p.Cprime.center) - p.Cprime.radius) > kBoundaryTol)
        throw DomainError("pairing map of pair " + std::to_string(pi) +
                          " does not carry its C boundary onto its Cprime boundary");
    }
  }
}

SchottkyConfig make_standard_config() {
  SchottkyConfig cfg;
  cfg.pairs.push_back(make_pair(Circle{{-3.0, 0.0}, 0.5}, Circle{{3.0, 0.0}, 0.5}));
  cfg.pairs.push_back(make_pair(Circle{{-6.0, 0.0}, 0.5}, Circle{{6.0, 0.0}, 0.5}));
  return cfg;
}

Complex RationalH::eval(Complex z) const {
  Complex v{0.0, 0.0};
  for (std::size_t i = poly.size(); i-- > 0;) v = v * z + poly[i];
  for (const PoleTerm& t : poles) {
    Complex diff = z - t.z0;
    if (std::abs(diff) <= kHPoleTol)
      throw SingularityError("evaluation point is within 1e-9 of a pole of H");
    v += t.coef / pow_int(diff, t.order);
  }
  return v;
}

namespace {

std::uint64_t shell_count(std::size_t npairs, int k) {
  if (k == 0) return 1;
  std::uint64_t n2 = 2 * npairs;
  std::uint64_t count = n2;
  for (int i = 1; i < k; ++i) {
    if (count > (1ull << 62) / (n2 - 1)) return UINT64_MAX;
    count *= n2 - 1;
  }
  return count;
}

// Depth-first walk over reduced words of length exactly k, in lexicographic
// letter order, invoking emit with the word and its composed map.
void shell_walk(const SchottkyConfig& cfg, int k,
                const std::function<void(const std::vector<int>&, const MobiusMap&)>& emit) {
  const int nletters = static_cast<int>(cfg.pairs.size()) * 2;
  std::vector<int> word;
  std::vector<MobiusMap> stack = {MobiusMap::identity()};
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == k) {
      emit(word, stack.back());
      return;
    }
    for (int l = 0; l < nletters; ++l) {
      if (!word.empty() && word.back() == (l ^ 1)) continue;
      const CirclePair& p = cfg.pairs[l / 2];
      MobiusMap m = (l % 2 == 0) ? p.map : p.map.inverse();
      word.push_back(l);
      stack.push_back(compose(stack.back(), m));
      rec();
      stack.pop_back();
      word.pop_back();
    }
  };
  rec();
}

void check_shell_cap(const SchottkyConfig& cfg, int k, std::size_t cap) {
  if (k < 0) throw DomainError("shell index must be nonnegative");
  if (cfg.pairs.empty()) throw DomainError("configuration needs at least one circle pair");
  std::uint64_t count = shell_count(cfg.pairs.size(), k);
  if (count > cap)
    throw CapacityError("shell " + std::to_string(k) + " holds " +
                        (count == UINT64_MAX ? std::string("more than 2^62")
                                             : std::to_string(count)) +
                        " elements, above the cap " + std::to_string(cap));
}

}  // namespace

std::vector<MobiusMap> enumerate_shell(const SchottkyConfig& cfg, int k, std::size_t max_size) {
  check_shell_cap(cfg, k, max_size);
  std::vector<MobiusMap> out;
  shell_walk(cfg, k, [&out](const std::vector<int>&, const MobiusMap& m) { out.push_back(m); });
  return out;
}

std::vector<std::vector<int>> enumerate_shell_words(const SchottkyConfig& cfg, int k,
                                                    std::size_t max_size) {
  check_shell_cap(cfg, k, max_size);
  std::vector<std::vector<int>> out;
  shell_walk(cfg, k, [&out](const std::vector<int>& w, const MobiusMap&) { out.push_back(w); });
  return out;
}

namespace {

// Core summation; assumes the configuration and parameters were validated.
// The evaluation point may lie inside a circle (as the image of a base point
// under a group element does); singular or overflowing terms still throw.
SeriesReport partial_sum_core(const SchottkyConfig& cfg, const RationalH& H, int d, Complex z,
                              int K, std::size_t shell_cap) {
  SeriesReport rep;
  rep.d = d;
  rep.z = z;
  rep.K = K;
  for (int k = 0; k <= K; ++k) {
    check_shell_cap(cfg, k, shell_cap);
    Kahan sum_re, sum_im, mag;
    std::uint64_t count = 0;
    shell_walk(cfg, k, [&](const std::vector<int>& w, const MobiusMap& m) {
      Complex denom = m.c * z + m.d;
      if (std::abs(denom) <= kPoleTol)
        throw SingularityError("automorphy factor vanishes at word " + word_name(w));
      Complex gz = (m.a * z + m.b) / denom;
      for (const PoleTerm& t : H.poles)
        if (std::abs(gz - t.z0) <= kHPoleTol)
          throw SingularityError("orbit point of word " + word_name(w) +
                                 " hits a pole of H");
      Complex term = H.eval(gz) * pow_int(denom, d);
      if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
        throw NumericError("series term overflowed at word " + word_name(w));
      sum_re.add(term.real());
      sum_im.add(term.imag());
      mag.add(std::abs(term));
      ++count;
    });
    rep.counts.push_back(count);
    rep.shell_sums.push_back(Complex{sum_re.s, sum_im.s});
    rep.shell_mags.push_back(mag.s);
  }
  // Partial sums: shells added largest k first, so the smallest (largest
  // magnitude) shell lands last in each compensated accumulation.
  for (int j = 0; j <= K; ++j) {
    Kahan re, im;
    for (int k = j; k >= 0; --k) {
      re.add(rep.shell_sums[k].real());
      im.add(rep.shell_sums[k].imag());
    }
    Complex ps{re.s, im.s};
    if (!std::isfinite(ps.real()) || !std::isfinite(ps.imag()))
      throw NumericError("partial sum overflowed at shell " + std::to_string(j));
    rep.partial_sums.push_back(ps);
  }
  for (int k = 1; k <= K; ++k) {
    double prev = rep.shell_mags[k - 1], cur = rep.shell_mags[k];
    if (prev == 0.0) {
      if (cur != 0.0) throw NumericError("decay ratio undefined: zero shell below a nonzero one");
      rep.decay_ratios.push_back(0.0);
    } else {
      rep.decay_ratios.push_back(cur / prev);
    }
  }
  return rep;
}

void validate_series_args(const SchottkyConfig& cfg, int d, int K) {
  validate_config(cfg);
  if (d > -1) throw DomainError("series dimension must be a negative integer");
  if (K < 0) throw DomainError("shell count K must be nonnegative");
}

}  // namespace

SeriesReport poincare_partial_sum(const SchottkyConfig& cfg, const RationalH& H, int d, Complex z,
                                  int K, std::size_t shell_cap) {
  validate_series_args(cfg, d, K);
  for (const CirclePair& p : cfg.pairs) {
    if (std::abs(z - p.C.center) <= p.C.radius + kDisjointTol ||
        std::abs(z - p.Cprime.center) <= p.Cprime.radius + kDisjointTol)
      throw DomainError("base point z must lie outside every circle");
  }
  return partial_sum_core(cfg, H, d, z, K, shell_cap);
}

double automorphy_residual(const SchottkyConfig& cfg, const RationalH& H, int d, Complex z,
                           const MobiusMap& gamma, int K, std::size_t shell_cap) {
  Complex denom = gamma.c * z + gamma.d;
  if (std::abs(denom) <= kPoleTol)
    throw SingularityError("automorphy factor vanishes at the test point");
  Complex gz = (gamma.a * z + gamma.b) / denom;
  // The base point obeys the exterior precondition; its image under gamma
  // lies inside gamma's target circle by construction, so the left-hand
  // series is evaluated with the core summation directly.
  SeriesReport at_z = poincare_partial_sum(cfg, H, d, z, K, shell_cap);
  validate_series_args(cfg, d, K);
  SeriesReport at_gz = partial_sum_core(cfg, H, d, gz, K, shell_cap);
  Complex lhs = at_gz.partial_sums.back();
  // The cocycle identity j(wg, z) = j(w, gz) j(g, z) makes the full series
  // transform as theta(gz) = j(g, z)^(-d) theta(z), so that is the factor
  // whose truncation residual vanishes as K grows.
  Complex rhs = pow_int(denom, -d) * at_z.partial_sums.back();
  return std::abs(lhs - rhs);
}

DimensionCount dimension_count(int m, int n) {
  if (m < 1) throw DomainError("dimension_count: m must be at least 1");
  if (n < 2) throw DomainError("dimension_count: n must be at least 2 circle pairs");
  DimensionCount out;
  out.m = m;
  out.n = n;
  out.zeros = 2ll * m * (n - 1);
  out.independents = (2ll * m + 1) * (n - 1);
  out.arbitraries_left = out.independents - out.zeros;
  out.arbitraries_required = n;
  out.deficiency = out.arbitraries_required - out.arbitraries_left;
  return out;
}

SchottkyJob parse_schottky_job(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
  }
  auto as_complex = [](const nlohmann::json& v, const char* what) -> Complex {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ParseError(1, 1, std::string(what) + " must be a [re, im] pair");
    return Complex{v[0].get<double>(), v[1].get<double>()};
  };
  try {
    SchottkyJob job;
    if (!j.is_object() || !j.contains("pairs")) throw ParseError(1, 1, "config needs a pairs array");
    for (const auto& p : j["pairs"]) {
      auto circle = [](const nlohmann::json& v, const char* what) -> Circle {
        if (!v.is_array() || v.size() != 3)
          throw ParseError(1, 1, std::string(what) + " must be [x, y, r]");
        return Circle{Complex{v[0].get<double>(), v[1].get<double>()}, v[2].get<double>()};
      };
      if (!p.contains("c") || !p.contains("cprime"))
        throw ParseError(1, 1, "each pair needs c and cprime");
      job.cfg.pairs.push_back(make_pair(circle(p["c"], "c"), circle(p["cprime"], "cprime")));
    }
    if (j.contains("H")) {
      const auto& h = j["H"];
      if (!h.is_object()) throw ParseError(1, 1, "H must be an object");
      job.H.poly.clear();
      if (h.contains("poly"))
        for (const auto& c : h["poly"]) job.H.poly.push_back(as_complex(c, "H.poly entry"));
      if (job.H.poly.size() > 3) throw ParseError(1, 1, "H.poly degree above 2");
      if (h.contains("poles")) {
        for (const auto& t : h["poles"]) {
          PoleTerm pt;
          if (!t.contains("z0")) throw ParseError(1, 1, "H pole needs z0");
          pt.z0 = as_complex(t["z0"], "H pole z0");
          pt.order = t.value("order", 1);
          if (pt.order < 1) throw ParseError(1, 1, "H pole order must be positive");
          if (t.contains("coef")) pt.coef = as_complex(t["coef"], "H pole coef");
          job.H.poles.push_back(pt);
        }
      }
      if (job.H.poly.empty() && job.H.poles.empty())
        throw ParseError(1, 1, "H must have a polynomial part or poles");
    } else {
      job.H = RationalH::one();
    }
    job.d = j.value("d", -4);
    if (j.contains("z")) job.z = as_complex(j["z"], "z");
    job.K = j.value("K", 8);
    return job;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("malformed config field: ") + e.what());
  }
}

std::string series_report_csv(const SeriesReport& r) {
  std::string out = "k,count,shell_sum,ratio,partial_re,partial_im\n";
  for (int k = 0; k <= r.K; ++k) {
    out += std::to_string(k);
    out += ',';
    out += std::to_string(r.counts[k]);
    out += ',';
    out += fmt("%.12g", r.shell_mags[k]);
    out += ',';
    if (k > 0) out += fmt("%.12g", r.decay_ratios[k - 1]);
    out += ',';
    out += fmt("%.12g", r.partial_sums[k].real());
    out += ',';
    out += fmt("%.12g", r.partial_sums[k].imag());
    out += '\n';
  }
  return out;
}

std::string series_report_svg(const SeriesReport& r) {
  const double w = 480.0, h = 320.0, ml = 60.0, mr = 20.0, mt = 20.0, mb = 40.0;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  std::vector<double> ys;
  for (double m : r.shell_mags) {
    double y = m > 0.0 ? std::log10(m) : -300.0;
    ys.push_back(y);
    if (first || y < lo) lo = y;
    if (first || y > hi) hi = y;
    first = false;
  }
  if (hi - lo < 1e-9) {
    hi += 1.0;
    lo -= 1.0;
  }
  auto px = [&](int k) { return ml + (w - ml - mr) * (r.K == 0 ? 0.5 : double(k) / r.K); };
  auto py = [&](double y) { return mt + (h - mt - mb) * (1.0 - (y - lo) / (hi - lo)); };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"320\" "
         "viewBox=\"0 0 480 320\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"480\" height=\"320\" fill=\"white\"/>\n";
  out += "<line x1=\"" + fmt("%.3f", ml) + "\" y1=\"" + fmt("%.3f", h - mb) + "\" x2=\"" +
         fmt("%.3f", w - mr) + "\" y2=\"" + fmt("%.3f", h - mb) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + fmt("%.3f", ml) + "\" y1=\"" + fmt("%.3f", mt) + "\" x2=\"" +
         fmt("%.3f", ml) + "\" y2=\"" + fmt("%.3f", h - mb) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + fmt("%.3f", w / 2) + "\" y=\"" + fmt("%.3f", h - 10.0) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">shell k</text>\n";
  out += "<text x=\"15\" y=\"" + fmt("%.3f", h / 2) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 15 " +
         fmt("%.3f", h / 2) + ")\">log10 shell sum</text>\n";
  out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (int k = 0; k <= r.K; ++k) {
    if (k > 0) out += ' ';
    out += fmt("%.3f", px(k)) + "," + fmt("%.3f", py(ys[k]));
  }
  out += "\"/>\n";
  for (int k = 0; k <= r.K; ++k)
    out += "<circle cx=\"" + fmt("%.3f", px(k)) + "\" cy=\"" + fmt("%.3f", py(ys[k])) +
           "\" r=\"3\" fill=\"steelblue\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace burnlab::schottky
