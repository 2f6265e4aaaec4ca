#pragma once

#include <cstdint>
#include <vector>

#include "kneadlab/word.hpp"

namespace kneadlab {

// Standard Moebius function.
int mobius(std::int64_t d);

// (1/2n) * sum of mobius(d) * 2^{n/d} over the odd square-free divisors d of
// n: the number of admissible kneading words of primitive period n.  The sum
// must divide exactly; a remainder throws std::logic_error.
std::int64_t formula_count(int n);

// All shift-maximal primitive words P*C with P in {L,R}^{n-1}, sorted in
// parity-lex order.  Exhaustive over 2^{n-1} candidates (n <= 20), which
// keeps this trustworthy as the oracle for the counting formula.
std::vector<Word> enumerate_admissible(int n);

std::vector<Word> enumerate_admissible_up_to(int max_period);

struct PeriodCensus {
  int n;
  std::vector<Word> words;
  std::int64_t formula;

  bool consistent() const noexcept {
    return static_cast<std::int64_t>(words.size()) == formula;
  }
};

// Censuses periods 1..n_max (n_max <= 16).
std::vector<PeriodCensus> census(int n_max);

}  // namespace kneadlab
