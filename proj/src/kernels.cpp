#include "influmax/kernels.hpp"

#include <cmath>

namespace influmax::kernels {

namespace {

void rank_sweep_scalar(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                       std::uint32_t n, double alpha, const double* damp,
                       const double* x, double* y) {
    for (std::uint32_t u = 0; u < n; ++u) {
        double acc = 0.0;
        for (std::uint64_t j = offsets[u]; j < offsets[u + 1]; ++j) {
            acc += w[j] * x[cols[j]];
        }
        double r = 1.0 + alpha * acc;
        y[u] = damp ? damp[u] * r : r;
    }
}

void icn_sweep_scalar(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                      std::uint32_t n, double alpha, double q, const double* damp,
                      const double* gp_in, const double* gn_in, const double* h_in,
                      double* gp_out, double* gn_out, double* h_out) {
    const double nq = 1.0 - q;
    for (std::uint32_t u = 0; u < n; ++u) {
        double sp = 0.0, sn = 0.0, sh = 0.0;
        for (std::uint64_t j = offsets[u]; j < offsets[u + 1]; ++j) {
            const double wj = w[j];
            const NodeId v = cols[j];
            sp += wj * gp_in[v];
            sn += wj * gn_in[v];
            sh += wj * h_in[v];
        }
        const double d = damp ? damp[u] : 1.0;
        gp_out[u] = d * q * (1.0 + alpha * sp);
        gn_out[u] = d * (nq + alpha * (nq * sh + q * sn));
        h_out[u] = d * (1.0 + alpha * sh);
    }
}

void spmv_scalar(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                 std::uint32_t n, const double* x, double* y) {
    for (std::uint32_t u = 0; u < n; ++u) {
        double acc = 0.0;
        for (std::uint64_t j = offsets[u]; j < offsets[u + 1]; ++j) {
            acc += w[j] * x[cols[j]];
        }
        y[u] = acc;
    }
}

double max_abs_diff_scalar(const double* a, const double* b, std::uint32_t n) {
    double m = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        m = std::max(m, std::fabs(a[i] - b[i]));
    }
    return m;
}

double max_abs_scalar(const double* a, std::uint32_t n) {
    double m = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        m = std::max(m, std::fabs(a[i]));
    }
    return m;
}

constexpr Table kScalarTable{
    rank_sweep_scalar, icn_sweep_scalar, spmv_scalar,
    max_abs_diff_scalar, max_abs_scalar, "scalar",
};

const Table* g_forced = nullptr;  // null = auto

}  // namespace

const Table& scalar_table() { return kScalarTable; }

const Table& active() {
    if (g_forced) return *g_forced;
    static const Table* auto_table = avx2_available() ? &avx2_table() : &kScalarTable;
    return *auto_table;
}

void set_backend(Backend backend) {
    switch (backend) {
        case Backend::Auto:
            g_forced = nullptr;
            return;
        case Backend::Scalar:
            g_forced = &kScalarTable;
            return;
        case Backend::Avx2:
            if (!avx2_available()) {
                throw ValidationError("avx2 backend not available on this machine");
            }
            g_forced = &avx2_table();
            return;
    }
}

std::string active_name() { return active().name; }

}  // namespace influmax::kernels
