#pragma once

#include <vector>

#include "kneadlab/family.hpp"
#include "kneadlab/word.hpp"

namespace kneadlab {

inline constexpr int kDefaultLapDepth = 20;

struct LapCount {
  int n;       // iterate
  long laps;   // maximal monotone pieces of f^n_mu
};

// laps(n) = 1 + #{distinct x : f^k_mu(x) = c for some 0 <= k <= n-1},
// computed by breadth-first preimage propagation through the inverse
// branches.  The tree is pruned exactly where c stops having preimages
// (value > mu), which is where lap growth stalls.  Coincident preimages
// (they occur at superstable parameters, where c is periodic) are counted
// once.
std::vector<LapCount> lap_numbers(const UnimodalFamily& fam, double mu,
                                  int n_max);

// h ~ lim (1/n) log laps(n): least-squares slope of log laps over the last
// ceil(n_max/2) points, clamped to [0, log 2].
double entropy_lap(const UnimodalFamily& fam, double mu,
                   int n_max = kDefaultLapDepth);

// log spectral radius of the 0/1 interval-covering matrix induced by the
// superstable orbit of an admissible word (period >= 2).  The orbit's
// real-line order is recovered symbolically: point k of the cycle carries the
// k-th rotation of the periodic word, and rotations sort by parity-lex order.
// The spectral radius comes from power iteration with a +I shift applied per
// strongly connected component (plain power iteration does not converge on
// the reducible or periodic matrices that zero-entropy words produce);
// Collatz-Wielandt bounds give the 1e-10 stopping test.
double entropy_matrix(const Word& word);

}  // namespace kneadlab
