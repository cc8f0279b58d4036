#pragma once

#include <vector>

#include "crofton/certificate.hpp"
#include "crofton/path.hpp"

namespace crofton {

// Largest sawtooth index materialized as an explicit polyline.
inline constexpr int kMaxSawtoothIndex = 21;

// Graph of f_n(t) = 2^-n dist(2^n t, Z) as a polyline with vertices at
// i / 2^(n+1). Slope +-1, length sqrt 2, vertical variation 1.
PathSpec sawtooth(int n);

// f = sum a_k f_k for a prefix with at most one 1: sawtooth(m) if bit m is
// set, otherwise the flat segment (0,0)-(1,0).
PathSpec mixture(const std::vector<int>& bits);

// g(x) = f(x) + x for a graph-type path (polyline, sawtooth, mixture or
// sampled graph).
PathSpec tilt(const PathSpec& graph);

// Samples of f_n on the uniform 2^k-cell grid, Lipschitz constant 1.
PathSpec sampled_sawtooth(int n, int k);

struct DemoReport {
  int n = 0;
  int k = 0;
  Dyadic grid_resolution;  // 2^-k
  Dyadic feature_scale;    // 2^-n
  Certificate sampled;     // bracket for v_{pi/2} from the samples alone
  Interval exact;          // v_{pi/2} from the vertex partition
};

// Sampled bracket against the exact vertical variation of f_n.
DemoReport adversarial_demo(int n, int k);

}  // namespace crofton
