#pragma once

// Frozen reference values computed by independent implementations (brute-force
// closures and direct summation), recorded here as regression oracles. Tests
// compare library output against these constants; they must never be updated
// from library output.

#include <cstdint>
#include <map>
#include <vector>

namespace oracles {

// Closure of [[1,2],[0,1]] and [[1,0],[2,1]] over Z/8Z.
inline constexpr std::uint64_t kFrickeMod8Order = 32;
inline constexpr std::uint64_t kFrickeMod8Exponent = 4;
inline const std::map<std::uint64_t, std::uint64_t> kFrickeMod8OrderHistogram = {
    {1, 1}, {2, 7}, {4, 24}};

// PSL(2,8): order, ascending conjugacy class sizes, element-order histogram.
inline constexpr std::uint64_t kPsl28Order = 504;
inline const std::vector<std::uint64_t> kPsl28ClassSizes = {1, 56, 56, 56, 56, 63, 72, 72, 72};
inline const std::map<std::uint64_t, std::uint64_t> kPsl28OrderHistogram = {
    {1, 1}, {2, 63}, {3, 56}, {7, 216}, {9, 168}};

// Shell magnitudes sum_{|w|=k} |H(w(z)) (c_w z + d_w)^{-2}| for the reference
// two-pair configuration (radii 0.5, centers -3->3 and -6->6), H(z) =
// 1/(z - 2.8), z = i, k = 0..6. Direct summation with raw matrix products,
// analytic determinant tracking, and fsum accumulation.
inline const std::vector<double> kSeriesD2ShellMags = {
    0.3363363969981562,    0.0976403850669846,     0.0027504624545178313,
    0.00021325471145242092, 4.249854198108431e-06, 2.2232822338039852e-07,
    5.7134292240061544e-09};

}  // namespace oracles
