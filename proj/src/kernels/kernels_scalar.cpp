#include "fock/kernels.hpp"

// Reference kernels. These fix the operation order every other ISA variant
// must reproduce bit-for-bit: complex multiply is the textbook formula with
// separate mul/add (no FMA), and per-stage loops touch pairs in ascending
// index order.

namespace fock::kernels {

namespace detail {

void fwht_scalar(cplx* data, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; ++j) {
                const cplx x = data[base + j];
                const cplx y = data[base + j + h];
                data[base + j] = x + y;
                data[base + j + h] = x - y;
            }
        }
    }
}

void two_point_stage_scalar(cplx* data, std::size_t len, std::size_t h,
                            double a00, double a01, double a10, double a11) {
    for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t j = 0; j < h; ++j) {
            const cplx x = data[base + j];
            const cplx y = data[base + j + h];
            data[base + j] = cplx(a00 * x.real() + a01 * y.real(),
                                  a00 * x.imag() + a01 * y.imag());
            data[base + j + h] = cplx(a10 * x.real() + a11 * y.real(),
                                      a10 * x.imag() + a11 * y.imag());
        }
    }
}

void subset_zeta_scalar(cplx* data, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; ++j)
                data[base + j + h] += data[base + j];
        }
    }
}

void subset_mobius_scalar(cplx* data, std::size_t len) {
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; ++j)
                data[base + j + h] -= data[base + j];
        }
    }
}

void cmul_add_scalar(cplx* acc, const cplx* a, const cplx* b, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        const double re = (ar * br) - (ai * bi);
        const double im = (ar * bi) + (ai * br);
        acc[i] = cplx(acc[i].real() + re, acc[i].imag() + im);
    }
}

}  // namespace detail

const Ops& scalar_ops() {
    static const Ops table{
        Isa::scalar,
        "scalar",
        &detail::fwht_scalar,
        &detail::two_point_stage_scalar,
        &detail::subset_zeta_scalar,
        &detail::subset_mobius_scalar,
        &detail::cmul_add_scalar,
    };
    return table;
}

}  // namespace fock::kernels
