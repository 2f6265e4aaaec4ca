#pragma once

#include "kneadlab/family.hpp"
#include "kneadlab/word.hpp"

namespace kneadlab {

// |x - c| <= c_tol is read as landing on the critical point.  Exact equality
// is measure zero in floating point; solver reports carry the achieved
// distance so callers can judge confidence.
inline constexpr double kDefaultCTol = 1e-9;
inline constexpr int kDefaultMaxLen = 64;

enum class Termination { HitC, Truncated };
const char* to_string(Termination t);

struct KneadingResult {
  Word word;
  Termination termination;
  double c_distance;  // smallest |f^k(x0) - c| seen while forming the word
};

// Symbols of x0, f(x0), f^2(x0), ... against the critical point; stops at the
// first C or after max_len symbols.
KneadingResult itinerary(const UnimodalFamily& fam, double mu, double x0,
                         int max_len = kDefaultMaxLen,
                         double c_tol = kDefaultCTol);

// K(mu f): the itinerary of the critical value mu = mu*f(c).
KneadingResult kneading_sequence(const UnimodalFamily& fam, double mu,
                                 int max_len = kDefaultMaxLen,
                                 double c_tol = kDefaultCTol);

}  // namespace kneadlab
