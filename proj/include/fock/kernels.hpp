#pragma once

/// Data-parallel inner loops over 2^n-point complex arrays: Walsh-Hadamard
/// butterflies, two-point tensor stages, subset zeta/Moebius sweeps, and a
/// fused complex multiply-accumulate.
///
/// Each operation exists as a scalar reference kernel and (on x86-64) an AVX2
/// variant selected at runtime. Every variant performs the same IEEE operations
/// in the same association order — no FMA contraction, no reordered reductions —
/// so all implementations of one operation produce bit-identical output. The
/// equivalence tests assert exact equality, not a tolerance.

#include <complex>
#include <cstddef>
#include <vector>

namespace fock::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct Ops {
    Isa isa;
    const char* name;

    /// In-place unnormalized Walsh-Hadamard transform; len is a power of two.
    /// Butterfly: (x, y) -> (x + y, x - y).
    void (*fwht)(cplx* data, std::size_t len);

    /// One tensor stage at pair distance h (a power of two, h < len):
    /// for every index pair (i, i+h) with (i & h) == 0,
    ///   (x, y) -> (a00*x + a01*y, a10*x + a11*y), coefficients real.
    void (*two_point_stage)(cplx* data, std::size_t len, std::size_t h,
                            double a00, double a01, double a10, double a11);

    /// In-place subset-sum (zeta) transform: f[S] += f[S \ {d}] over all bits d.
    void (*subset_zeta)(cplx* data, std::size_t len);

    /// Inverse of subset_zeta (Moebius): f[S] -= f[S \ {d}] over all bits d.
    void (*subset_mobius)(cplx* data, std::size_t len);

    /// acc[i] += a[i] * b[i] (complex), i < len.
    void (*cmul_add)(cplx* acc, const cplx* a, const cplx* b, std::size_t len);
};

const Ops& scalar_ops();

/// Null when the build carries no AVX2 kernels or the CPU lacks them.
const Ops* avx2_ops_if_available();

/// Best available table, honoring force_isa().
const Ops& active_ops();

/// Pin dispatch to one ISA (throws if unavailable). Used by tests and --isa.
void force_isa(Isa isa);
void reset_isa();

/// Every table usable on this machine (scalar first).
std::vector<const Ops*> available_ops();

const char* isa_name(Isa isa);

}  // namespace fock::kernels
