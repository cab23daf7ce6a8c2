#pragma once
// Data-parallel arithmetic kernels behind the spectral iteration and the
// prevalence estimator. Each kernel has a scalar reference implementation and
// an AVX2 variant; the active set is chosen once at runtime from CPU features
// (override with RDSNET_KERNELS=scalar). SIMD variants may associate floating
// point sums differently from the reference; equivalence tests bound the
// difference, they do not demand bit equality.

#include <cstddef>
#include <cstdint>

namespace rdsnet::kernels {

struct InvDegreeSums {
    double infected; // sum of 1/k over infected sample members
    double all;      // sum of 1/k over the whole sample
};

struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, size_t n);
    void (*axpy)(double alpha, const double* x, double* y, size_t n);
    void (*scal)(double alpha, double* x, size_t n);
    // y[i] = sum over r in [offsets[i], offsets[i+1]) of weights[r] * x[cols[r]]
    void (*csr_matvec)(const uint64_t* offsets, const uint32_t* cols,
                       const double* weights, const double* x, double* y, size_t n);
    InvDegreeSums (*inv_degree_sums)(const uint32_t* degrees, const uint8_t* infected,
                                     size_t n);
};

const Ops& scalar_ops();

// AVX2 variants, or nullptr when unsupported (by the build or by the CPU).
const Ops* avx2_ops();

// The runtime-selected set. Stable for the lifetime of the process.
const Ops& active();

} // namespace rdsnet::kernels
