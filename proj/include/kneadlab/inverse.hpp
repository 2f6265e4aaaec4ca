#pragma once

#include <optional>
#include <vector>

#include "kneadlab/family.hpp"
#include "kneadlab/word.hpp"

namespace kneadlab {

// Inverse branches of mu*f: L maps [0,mu] into [0,c], R maps [0,mu] into
// [c,1].
enum class Branch : std::uint8_t { L = 0, R = 1 };

char to_char(Branch b);
Branch branch_from_char(char ch);  // throws std::invalid_argument
std::vector<Branch> parse_branch_word(std::string_view text);
std::string branch_word_str(const std::vector<Branch>& word);

inline constexpr double kInvertTol = 1e-13;

// Solves mu*f(x) = y on the branch's half-interval (unique by strict
// monotonicity).  Newton-accelerated bisection; the bracket guarantees
// convergence even where f' vanishes.  y > mu + tol throws std::domain_error
// (the horizontal line y never meets the graph); y in (mu, mu+tol] is treated
// as y = mu.
double invert_branch(const UnimodalFamily& fam, double mu, Branch branch,
                     double y, double tol = kInvertTol);

// First composition step whose input left [0, mu], counted from the
// innermost application (depth 1 inverts the last branch symbol at y = c).
struct DomainViolation {
  int depth;
  double value;
};

struct LevelResult {
  std::optional<double> value;
  std::optional<DomainViolation> violation;
  bool ok() const noexcept { return value.has_value(); }
};

// x^k_P(mu) = inv_{P1} o ... o inv_{Pk} (c) for a branch word P = P1..Pk.
// The branch word of a superstable kneading word s0 s1 .. s_{k-1} C is
// s0..s_{k-1} in the same order; evaluation applies the word back-to-front
// starting from c (the composition's innermost factor is P_k).  This
// orientation reproduces K(mu* f) = the kneading word at the fixed point,
// checked against the period-2 and period-3 closed forms in the tests.
class LevelFunction {
 public:
  LevelFunction(const UnimodalFamily& fam, std::vector<Branch> branch_word);

  const UnimodalFamily& family() const noexcept { return *fam_; }
  const std::vector<Branch>& branch_word() const noexcept { return word_; }
  std::size_t order() const noexcept { return word_.size(); }

 private:
  const UnimodalFamily* fam_;
  std::vector<Branch> word_;
};

// Evaluates x^k_P(mu); a domain violation is a structured result, not an
// error.
LevelResult level(const LevelFunction& fn, double mu, double tol = kInvertTol);

// Strips the trailing C of a finite kneading word.
std::vector<Branch> branch_word_for(const Word& kneading_word);

struct FixedPointResult {
  std::optional<double> mu;  // first root of level(mu) - mu in the bracket
  double forward_residual;   // |f^{k+1}_mu(c) - c| at the root (the Lemma)
  int sign_changes;          // roots seen across the whole scan
};

// Scans the bracket at 256 points for sign changes of level(mu) - mu, then
// bisects and Newton-polishes the first one.  The Schwarzian condition makes
// the root unique for admissible words, but the search does not assume it:
// sign_changes reports what was actually found.
FixedPointResult find_level_fixed_point(const LevelFunction& fn, double mu_lo,
                                        double mu_hi, double tol = 1e-11);

}  // namespace kneadlab
