#include "rdsnet/kernels.hpp"

namespace rdsnet::kernels {
namespace {

double dot_scalar(const double* a, const double* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(double alpha, double* x, size_t n) {
    for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void csr_matvec_scalar(const uint64_t* offsets, const uint32_t* cols,
                       const double* weights, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (uint64_t r = offsets[i]; r < offsets[i + 1]; ++r)
            acc += weights[r] * x[cols[r]];
        y[i] = acc;
    }
}

InvDegreeSums inv_degree_sums_scalar(const uint32_t* degrees, const uint8_t* infected,
                                     size_t n) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double w = 1.0 / static_cast<double>(degrees[i]);
        den += w;
        if (infected[i]) num += w;
    }
    return {num, den};
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {"scalar",     dot_scalar,
                            axpy_scalar,  scal_scalar,
                            csr_matvec_scalar, inv_degree_sums_scalar};
    return ops;
}

} // namespace rdsnet::kernels
