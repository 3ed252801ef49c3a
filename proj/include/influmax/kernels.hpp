#pragma once

#include <cstdint>
#include <string>

#include "influmax/common.hpp"

namespace influmax::kernels {

/// The rank-iteration inner loops are plain CSR gather/multiply/accumulate
/// sweeps, so they live here as flat-array kernels with a scalar reference
/// implementation and an AVX2 variant selected at runtime. Row accumulation
/// order is fixed per backend, so results are deterministic for a given
/// backend; scalar and AVX2 agree to rounding (see the equivalence tests).
struct Table {
    /// y[u] = d(u) * (1 + alpha * sum_j w[j] * x[col[j]]), j over row u,
    /// where d(u) = damp[u], or 1.0 when damp is null.
    void (*rank_sweep)(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                       std::uint32_t n, double alpha, const double* damp,
                       const double* x, double* y);

    /// Coupled positive/negative/negative-carrier sweep. Per row u with
    /// sums SP = sum w*gp[col], SN = sum w*gn[col], SH = sum w*h[col]:
    ///   gp_out[u] = d(u) * q * (1 + alpha * SP)
    ///   gn_out[u] = d(u) * ((1-q) + alpha * ((1-q) * SH + q * SN))
    ///   h_out[u]  = d(u) * (1 + alpha * SH)
    void (*icn_sweep)(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                      std::uint32_t n, double alpha, double q, const double* damp,
                      const double* gp_in, const double* gn_in, const double* h_in,
                      double* gp_out, double* gn_out, double* h_out);

    /// y[u] = sum_j w[j] * x[col[j]] over row u.
    void (*spmv)(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                 std::uint32_t n, const double* x, double* y);

    double (*max_abs_diff)(const double* a, const double* b, std::uint32_t n);
    double (*max_abs)(const double* a, std::uint32_t n);

    const char* name;
};

enum class Backend { Auto, Scalar, Avx2 };

/// True when the AVX2 kernels are both compiled in and supported by this CPU.
bool avx2_available();

const Table& scalar_table();
const Table& avx2_table();  // requires avx2_available()

/// Forces a backend (Auto re-enables CPU detection). Throws ValidationError
/// if the requested backend is unavailable. Not safe to call concurrently
/// with running solvers.
void set_backend(Backend backend);

/// Table currently in effect (Auto resolves to AVX2 when available).
const Table& active();

/// Name of the table `active()` returns ("scalar" / "avx2").
std::string active_name();

}  // namespace influmax::kernels
