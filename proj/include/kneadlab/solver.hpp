#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kneadlab/family.hpp"
#include "kneadlab/kneading.hpp"
#include "kneadlab/word.hpp"

namespace kneadlab {

inline constexpr double kDefaultSolveTol = 1e-11;

enum class SolveStatus { Ok, BracketInvalid, NoConvergence, WordMismatch };
const char* to_string(SolveStatus s);

struct SolveReport {
  Word target;
  SolveStatus status;
  std::string message;
  double mu_star = 0.0;
  double residual = 0.0;  // |f^n_mu(c) - c| with n = |target|
  std::vector<std::pair<double, double>> bracket_history;
  std::optional<KneadingResult> kneading_check;

  bool ok() const noexcept { return status == SolveStatus::Ok; }
};

// Finds mu with K(mu f) = word inside [lo, hi].  Requires
// K(lo f) < word < K(hi f) in the parity-lex order; bisects on the kneading
// comparison until the bracket is below 1e-6, then runs safeguarded Newton on
// g(mu) = f^n_mu(c) - c.  The converged parameter's kneading sequence must
// reproduce the target or the report carries WordMismatch.  The word itself
// must be finite and shift-maximal (std::invalid_argument otherwise).
SolveReport solve_word(const UnimodalFamily& fam, const Word& word, double lo,
                       double hi, double tol = kDefaultSolveTol);

// Solves each word with automatic bracket discovery from a coarse 2^12-point
// kneading prescan; reports are sorted by mu_star, per-word failures are
// collected rather than thrown.
std::vector<SolveReport> solve_all(const UnimodalFamily& fam,
                                   std::span<const Word> words,
                                   double tol = kDefaultSolveTol);

// All admissible words of period <= max_period, solved.
std::vector<SolveReport> solve_up_to_period(const UnimodalFamily& fam,
                                            int max_period,
                                            double tol = kDefaultSolveTol);

}  // namespace kneadlab
