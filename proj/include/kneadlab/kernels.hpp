#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kneadlab/family.hpp"
#include "kneadlab/kneading.hpp"

// Batched inner loops for parameter-grid sweeps: one lane per grid point,
// x[i] <- mu[i] * f(x[i]) stepped in lockstep.  A scalar reference kernel
// works for every family; the logistic family has an AVX2 variant selected at
// runtime.  Both variants apply the same operation order, so their results
// are bit-identical (the equivalence suite asserts this).

namespace kneadlab::kernels {

enum class Isa { Scalar, Avx2 };
const char* to_string(Isa isa);

bool cpu_supports_avx2() noexcept;

// Resolved once from KNEADLAB_SIMD (auto|scalar|avx2, default auto) and the
// CPU.  Requesting avx2 on hardware without it throws.
Isa active_isa();

// One elementwise map step across all lanes.
void map_batch(const UnimodalFamily& fam, const double* mu, double* x,
               std::size_t n, Isa isa);
void map_batch(const UnimodalFamily& fam, const double* mu, double* x,
               std::size_t n);

// Kneading sequences for a whole parameter grid; lane i matches
// kneading_sequence(fam, mus[i], max_len, c_tol) exactly.
std::vector<KneadingResult> kneading_batch(const UnimodalFamily& fam,
                                           std::span<const double> mus,
                                           int max_len, double c_tol, Isa isa);
std::vector<KneadingResult> kneading_batch(const UnimodalFamily& fam,
                                           std::span<const double> mus,
                                           int max_len = kDefaultMaxLen,
                                           double c_tol = kDefaultCTol);

// The two logistic step variants, exposed for the equivalence suite.
void logistic_map_scalar(const double* mu, double* x, std::size_t n);
void logistic_map_avx2(const double* mu, double* x, std::size_t n);  // pre: cpu_supports_avx2()

}  // namespace kneadlab::kernels
