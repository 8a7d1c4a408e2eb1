#pragma once

#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/intpoly.hpp"
#include "qgdf/typea.hpp"

namespace qgdf {

/// Poincare polynomial of Gr_g(P) for P = + P_i^{a_i} on equioriented A_n:
/// prod_k qbinom(a_1+...+a_k - g_{k-1}, g_k - g_{k-1}), g_0 = 0.
inline IntPoly poincare_proj(const std::vector<int>& a, const DimVector& g) {
    if (a.size() != g.size()) throw dimension_error("poincare_proj: length mismatch");
    IntPoly out = IntPoly::one();
    int acc = 0, prev = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += a[k];
        out *= q_binomial(acc - prev, g[k] - prev);
        if (out.is_zero()) return out;
        prev = g[k];
    }
    return out;
}

/// Poincare polynomial of Gr_f(I) for I = + I_j^{b_j}:
/// prod_j qbinom(b_j + f_{j+1}, f_j), f_{n+1} = 0.
inline IntPoly poincare_inj(const std::vector<int>& b, const DimVector& f) {
    if (b.size() != f.size()) throw dimension_error("poincare_inj: length mismatch");
    IntPoly out = IntPoly::one();
    int n = (int)b.size();
    for (int j = 0; j < n; ++j) {
        int f_next = j + 1 < n ? f[j + 1] : 0;
        out *= q_binomial(b[j] + f_next, f[j]);
        if (out.is_zero()) return out;
    }
    return out;
}

/// Fiber dimension of the stratum map over Gr_g(P) x Gr_f(I):
/// dim Hom(N_P, I/N_I) = <e - f, dim I - f>.
inline long long strata_fiber_dim(const PIConfig& cfg, const DimVector& f) {
    cfg.validate();
    DimVector e = cfg.dim_p(), di = cfg.dim_i();
    if (!dim_leq(f, e) || !dim_leq(f, di))
        throw dimension_error("strata_fiber_dim: f exceeds dim P or dim I");
    return euler_form(Quiver::type_a(cfg.n), dim_sub(e, f), dim_sub(di, f));
}

/// Which reading of the stratum-sum exponent to use. The Euler-form reading
/// (fiber dimension <g, dim I - f>, i.e. sum g_i (b_i - f_i + f_{i+1})) is
/// the default; the `printed` variant substitutes a_i for b_i, which agrees
/// only when a = b, and is kept selectable so the discrepancy can be
/// demonstrated against brute-force point counts.
enum class ExponentConvention { euler, printed };

namespace detail {
inline void next_f(DimVector& f, const DimVector& e, bool& done) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < e[i]) {
            ++f[i];
            return;
        }
        f[i] = 0;
    }
    done = true;
}
}  // namespace detail

/// Poincare polynomial of Gr_{dim P}(P + I): stratum sum over f + g = e.
inline IntPoly poincare_x(const PIConfig& cfg,
                          ExponentConvention conv = ExponentConvention::euler) {
    cfg.validate();
    int n = cfg.n;
    DimVector e = cfg.dim_p();
    IntPoly total;
    DimVector f(n, 0);
    bool done = false;
    while (!done) {
        DimVector g = dim_sub(e, f);
        IntPoly term = poincare_proj(cfg.a, g);
        if (!term.is_zero()) term *= poincare_inj(cfg.b, f);
        if (!term.is_zero()) {
            long long expo = 0;
            for (int i = 0; i < n; ++i) {
                int coef = (conv == ExponentConvention::euler ? cfg.b[i] : cfg.a[i]);
                int f_next = i + 1 < n ? f[i + 1] : 0;
                expo += (long long)g[i] * (coef - f[i] + f_next);
            }
            if (expo < 0)
                throw invariant_violation("negative stratum exponent; not a polynomial");
            total += IntPoly::monomial((std::size_t)expo) * term;
        }
        detail::next_f(f, e, done);
    }
    return total;
}

/// Specialized complete-flag sum (a = b = 1), kept as an independent route
/// and cross-checked against poincare_x in the suite.
inline IntPoly poincare_complete_flag(int n) {
    if (n < 1) throw input_error("poincare_complete_flag: n must be positive");
    PIConfig cfg = PIConfig::complete_flag(n);
    DimVector e = cfg.dim_p();  // (1, 2, ..., n)
    IntPoly total;
    DimVector f(n, 0);
    bool done = false;
    while (!done) {
        IntPoly term = IntPoly::one();
        long long expo = 0;
        for (int k = 1; k <= n; ++k) {
            int fk = f[k - 1];
            int f_prev = k >= 2 ? f[k - 2] : 0;
            int f_next = k < n ? f[k] : 0;
            term *= q_binomial(1 + f_prev, fk);
            if (term.is_zero()) break;
            term *= q_binomial(1 + f_next, fk);
            if (term.is_zero()) break;
            expo += (long long)(k - fk) * (1 - fk + f_next);
        }
        if (!term.is_zero()) total += IntPoly::monomial((std::size_t)expo) * term;
        detail::next_f(f, e, done);
    }
    return total;
}

inline Int euler_characteristic(const PIConfig& cfg) {
    return eval_int(poincare_x(cfg), 1);
}

}  // namespace qgdf
