#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/rep.hpp"

namespace qgdf {

/// Interval [left, right] on the vertices of equioriented A_n, 1-indexed.
/// Names the indecomposable S_{left,right}.
struct Interval {
    int left = 1;
    int right = 1;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const Interval& a, const Interval& b) {
        return a.left != b.left ? a.left < b.left : a.right < b.right;
    }
};

/// Multiplicities of projective and injective summands of P + I on A_n.
struct PIConfig {
    int n = 0;
    std::vector<int> a;  // a[i-1] copies of P_i
    std::vector<int> b;  // b[i-1] copies of I_i

    void validate() const {
        if (n <= 0) throw input_error("PIConfig: n must be positive");
        if ((int)a.size() != n || (int)b.size() != n)
            throw dimension_error("PIConfig: multiplicity length mismatch");
        bool any = false;
        for (int x : a) {
            if (x < 0) throw input_error("PIConfig: negative multiplicity");
            any = any || x > 0;
        }
        for (int x : b) {
            if (x < 0) throw input_error("PIConfig: negative multiplicity");
            any = any || x > 0;
        }
        if (!any) throw input_error("PIConfig: all multiplicities are zero");
    }

    /// dim P: (sum_{i<=k} a_i)_k — the target dimension vector e.
    DimVector dim_p() const {
        DimVector e(n, 0);
        int acc = 0;
        for (int k = 0; k < n; ++k) {
            acc += a[k];
            e[k] = acc;
        }
        return e;
    }

    /// dim I: (sum_{j>=k} b_j)_k.
    DimVector dim_i() const {
        DimVector d(n, 0);
        int acc = 0;
        for (int k = n - 1; k >= 0; --k) {
            acc += b[k];
            d[k] = acc;
        }
        return d;
    }

    DimVector dim_m() const { return dim_add(dim_p(), dim_i()); }

    /// The complete flag configuration: a = b = (1,...,1) on A_n.
    static PIConfig complete_flag(int n) {
        return PIConfig{n, std::vector<int>(n, 1), std::vector<int>(n, 1)};
    }
};

/// Partial flag shape inside an (n+1)-dimensional ambient space.
struct FlagSpec {
    int ambient = 0;              // n + 1
    std::vector<int> steps;       // strictly increasing, 0 < d_1, d_s < ambient

    void validate() const {
        if (ambient < 2) throw input_error("FlagSpec: ambient dimension too small");
        if (steps.empty()) throw input_error("FlagSpec: no steps");
        int prev = 0;
        for (int d : steps) {
            if (d <= prev) throw input_error("FlagSpec: steps must increase strictly");
            prev = d;
        }
        if (steps.back() >= ambient) throw input_error("FlagSpec: step exceeds ambient");
    }
};

/// The interval module S_{i,j} of A_n: interval indicator dimension vector,
/// identity maps on the support.
template <class F = Rat>
Rep<F> interval_module(const Interval& iv, int n) {
    if (!(1 <= iv.left && iv.left <= iv.right && iv.right <= n))
        throw input_error("interval out of range");
    Rep<F> r{Quiver::type_a(n), DimVector(n, 0), {}, {}};
    for (int v = iv.left; v <= iv.right; ++v) r.dims[v - 1] = 1;
    for (int v = 0; v + 1 < n; ++v) {
        Matrix<F> m(r.dims[v + 1], r.dims[v]);
        if (r.dims[v] == 1 && r.dims[v + 1] == 1 && v + 1 >= iv.left && v + 2 <= iv.right)
            m(0, 0) = F(1);
        r.matrices.push_back(std::move(m));
    }
    return r;
}

/// Closed form for dim Hom(S_{a,b}, S_{c,d}) on equioriented A_n:
/// 1 iff c <= a <= d <= b. Gated by an exhaustive test against the
/// linear-algebra route in the suite.
inline int interval_hom_dim(const Interval& src, const Interval& tgt) {
    return (tgt.left <= src.left && src.left <= tgt.right && tgt.right <= src.right) ? 1 : 0;
}

inline std::string summand_label(char kind, int index, int copy) {
    std::string s{kind};
    s += std::to_string(index);
    s += ':';
    s += std::to_string(copy);
    return s;
}

/// P + I with the distinguished basis: all P-blocks by index, then all
/// I-blocks by index; copies in declaration order. Every arrow matrix is
/// 0/1 in this basis (block-diagonal interval modules).
template <class F = Rat>
Rep<F> build_pi(const PIConfig& cfg) {
    cfg.validate();
    Rep<F> out = Rep<F>::zero(Quiver::type_a(cfg.n));
    auto append = [&](const Interval& iv, const std::string& label) {
        Rep<F> block = interval_module<F>(iv, cfg.n);
        Summand s{label, {}};
        s.basis.resize(cfg.n);
        for (int v = 0; v < cfg.n; ++v)
            if (block.dims[v] == 1) s.basis[v].push_back(0);
        block.summands = {std::move(s)};
        if (out.summands.empty() && out.dims == DimVector(cfg.n, 0))
            out = block;
        else
            out = direct_sum(out, block);
    };
    for (int i = 1; i <= cfg.n; ++i)
        for (int c = 1; c <= cfg.a[i - 1]; ++c) append({i, cfg.n}, summand_label('P', i, c));
    for (int j = 1; j <= cfg.n; ++j)
        for (int c = 1; c <= cfg.b[j - 1]; ++c) append({1, j}, summand_label('I', j, c));
    out.validate();
    return out;
}

/// Partial flag -> P/I multiplicities on A_s: a_i = d_i - d_{i-1},
/// b_i = d_{i+1} - d_i with d_0 = 0, d_{s+1} = ambient.
inline PIConfig flag_to_pi(const FlagSpec& spec) {
    spec.validate();
    int s = (int)spec.steps.size();
    PIConfig cfg{s, std::vector<int>(s), std::vector<int>(s)};
    for (int i = 0; i < s; ++i) {
        int prev = i == 0 ? 0 : spec.steps[i - 1];
        int next = i + 1 == s ? spec.ambient : spec.steps[i + 1];
        cfg.a[i] = spec.steps[i] - prev;
        cfg.b[i] = next - spec.steps[i];
    }
    return cfg;
}

using DegreeAssignment = std::map<std::string, int>;

/// Torus degrees of the summands: every injective degree lies above every
/// projective one (I_k descending in k above P_j descending in j), the rule
/// under which the attracting sets form cells computing the Poincare
/// polynomial. Duplicate copies are spread to consecutive distinct integers.
/// `reversed` negates the assignment (the opposite torus direction; its
/// attracting sets do not compute Betti numbers on singular varieties).
inline DegreeAssignment type_a_gt_degrees(const PIConfig& cfg, bool reversed = false) {
    cfg.validate();
    struct Entry {
        int base;
        int decl;
        std::string label;
    };
    std::vector<Entry> entries;
    int decl = 0;
    for (int i = 1; i <= cfg.n; ++i)
        for (int c = 1; c <= cfg.a[i - 1]; ++c)
            entries.push_back({i + cfg.n - 1, decl++, summand_label('P', i, c)});
    for (int j = 1; j <= cfg.n; ++j)
        for (int c = 1; c <= cfg.b[j - 1]; ++c)
            entries.push_back({j - 1, decl++, summand_label('I', j, c)});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return x.base != y.base ? x.base < y.base : x.decl < y.decl;
    });
    DegreeAssignment deg;
    for (std::size_t k = 0; k < entries.size(); ++k)
        deg[entries[k].label] = reversed ? (int)k : (int)(entries.size() - 1 - k);
    return deg;
}

}  // namespace qgdf
