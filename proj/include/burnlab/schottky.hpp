#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace burnlab::schottky {

using Complex = std::complex<double>;

// Fractional linear map z -> (az+b)/(cz+d), kept normalized to ad-bc = 1.
// Composition is 2x2 matrix multiplication.
struct MobiusMap {
  Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  static MobiusMap normalized(Complex a, Complex b, Complex c, Complex d);
  static MobiusMap identity() { return MobiusMap{}; }

  MobiusMap inverse() const { return MobiusMap{d, -b, -c, a}; }
  bool is_identity(double tol = 1e-12) const;
};

MobiusMap compose(const MobiusMap& f, const MobiusMap& g);  // z -> f(g(z))
Complex mobius_apply(const MobiusMap& f, Complex z);        // SingularityError near the pole

struct Circle {
  Complex center;
  double radius;
};

struct CirclePair {
  Circle C, Cprime;
  MobiusMap map;  // carries the exterior of C onto the interior of Cprime
};

struct SchottkyConfig {
  std::vector<CirclePair> pairs;
};

// The standard pairing map f(z) = p' + r*r'/(z - p) for centers p, p' and
// radii r, r'.
MobiusMap pairing_map(const Circle& C, const Circle& Cprime);

// Builds a pair from two circles using pairing_map.
CirclePair make_pair(const Circle& C, const Circle& Cprime);

// Checks all 2n circles are pairwise disjoint (center distance exceeds the
// radius sum by more than 1e-9) and that each pairing map carries its C
// boundary onto its Cprime boundary (16 sample points, residual <= 1e-6).
// Throws DomainError on violation.
void validate_config(const SchottkyConfig& cfg);

// Two pairs on the real axis, radii 0.5, centers -3 -> +3 and -6 -> +6.
SchottkyConfig make_standard_config();

// H in the restricted family: a polynomial of degree <= 2 plus simple terms
// coef/(z - z0)^order.
struct PoleTerm {
  Complex z0;
  int order = 1;
  Complex coef{1.0, 0.0};
};

struct RationalH {
  std::vector<Complex> poly;  // coefficients, constant first, degree <= 2
  std::vector<PoleTerm> poles;

  static RationalH one() { return RationalH{{Complex{1.0, 0.0}}, {}}; }
  Complex eval(Complex z) const;  // SingularityError within 1e-9 of a pole
};

// Reduced words of length exactly k over the 2n pairing maps and inverses, in
// lexicographic order (f1 < f1' < f2 < ...). CapacityError when the shell
// would exceed max_size.
std::vector<MobiusMap> enumerate_shell(const SchottkyConfig& cfg, int k,
                                       std::size_t max_size = 1000000);
// The same shell as letter sequences (letter 2i = pair i's map, 2i+1 its
// inverse).
std::vector<std::vector<int>> enumerate_shell_words(const SchottkyConfig& cfg, int k,
                                                    std::size_t max_size = 1000000);

struct SeriesReport {
  int d = 0;
  Complex z;
  int K = 0;
  std::vector<std::uint64_t> counts;   // shell sizes, k = 0..K
  std::vector<double> shell_mags;      // sum of |H(gz)(cz+d)^d| per shell
  std::vector<Complex> shell_sums;     // complex sum per shell
  std::vector<Complex> partial_sums;   // partial_sums[j] = sum of shells 0..j
  std::vector<double> decay_ratios;    // shell_mags[k] / shell_mags[k-1], k = 1..K
};

// Shell-wise Poincare series evaluation: per-shell compensated summation in
// enumeration order, then each partial sum accumulates its shells from
// largest k down to smallest. d <= -1; z must lie outside every circle.
// SingularityError names the offending word; NumericError on overflow.
SeriesReport poincare_partial_sum(const SchottkyConfig& cfg, const RationalH& H, int d,
                                  Complex z, int K, std::size_t shell_cap = 1000000);

// |theta_K(gamma z) - (c z + d)^d * theta_K(z)| for the K-shell truncation.
double automorphy_residual(const SchottkyConfig& cfg, const RationalH& H, int d, Complex z,
                           const MobiusMap& gamma, int K, std::size_t shell_cap = 1000000);

struct DimensionCount {
  int m = 0;
  int n = 0;
  std::int64_t zeros = 0;                 // 2m(n-1)
  std::int64_t independents = 0;          // (2m+1)(n-1)
  std::int64_t arbitraries_left = 0;      // n-1
  std::int64_t arbitraries_required = 0;  // n
  std::int64_t deficiency = 0;            // required - left
};

// The letter's dimension-count arithmetic for series of dimension -2m over n
// circle pairs. m >= 1, n >= 2.
DimensionCount dimension_count(int m, int n);

// A full series job as read from a JSON config file:
// {"pairs": [{"c": [x,y,r], "cprime": [x,y,r]}, ...],
//  "H": {"poly": [[re,im], ...], "poles": [{"z0": [re,im], "order": j,
//        "coef": [re,im]}, ...]},
//  "d": int, "z": [x,y], "K": int}
struct SchottkyJob {
  SchottkyConfig cfg;
  RationalH H;
  int d = -4;
  Complex z;
  int K = 8;
};

// ParseError on malformed JSON or missing fields; the configuration itself is
// validated separately by validate_config.
SchottkyJob parse_schottky_job(const std::string& json_text);

// CSV with columns k,count,shell_sum,ratio,partial_re,partial_im (ratio blank
// on the k=0 row). Byte-stable for identical reports.
std::string series_report_csv(const SeriesReport& r);

// Minimal SVG line plot of log10 shell magnitude against k. Byte-stable.
std::string series_report_svg(const SeriesReport& r);

}  // namespace burnlab::schottky
