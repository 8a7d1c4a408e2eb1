#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/intpoly.hpp"
#include "qgdf/typea.hpp"

namespace qgdf {

/// Motzkin path of a given length: heights f_0..f_len with f_0 = f_len = 0,
/// steps in {-1, 0, +1}, all heights non-negative.
struct MotzkinPath {
    std::vector<int> heights;

    /// rises + falls
    int step_count() const {
        int l = 0;
        for (std::size_t i = 0; i + 1 < heights.size(); ++i)
            l += heights[i] != heights[i + 1];
        return l;
    }
};

/// All Motzkin paths of the given length, lexicographic in the height
/// sequence.
inline std::vector<MotzkinPath> motzkin_paths(int length) {
    if (length < 0) throw input_error("motzkin_paths: negative length");
    std::vector<MotzkinPath> out;
    std::vector<int> h{0};
    std::function<void()> rec = [&]() {
        int pos = (int)h.size() - 1;
        if (pos == length) {
            if (h.back() == 0) out.push_back({h});
            return;
        }
        for (int step = -1; step <= 1; ++step) {
            int next = h.back() + step;
            if (next < 0) continue;
            if (next > length - pos - 1) continue;  // cannot return to 0 in time
            h.push_back(next);
            rec();
            h.pop_back();
        }
    };
    rec();
    return out;
}

/// h_n as the number of chains (S_1,...,S_{n-1}), S_i subset of {1..n},
/// #S_i = i, S_i subset of S_{i+1} + {i+1}.
inline Int genocchi_sets(int n) {
    if (n < 1) throw input_error("genocchi_sets: n must be positive");
    if (n == 1) return 1;  // empty chain
    // enumerate top-down: S_{n-1}, then S_{n-2} inside S_{n-1} | {n-1}, ...
    std::vector<std::vector<unsigned>> subsets_cache;
    std::function<Int(int, unsigned)> count = [&](int i, unsigned allowed) -> Int {
        // number of chains S_1..S_i with S_i subset of `allowed`, #S_i = i
        Int total = 0;
        std::vector<int> members;
        for (int bit = 0; bit < n; ++bit)
            if (allowed & (1u << bit)) members.push_back(bit);
        if ((int)members.size() < i) return 0;
        std::vector<int> pick(i);
        std::function<void(int, int)> choose = [&](int idx, int from) {
            if (idx == i) {
                unsigned mask = 0;
                for (int k = 0; k < i; ++k) mask |= 1u << pick[k];
                if (i == 1)
                    total += 1;
                else
                    total += count(i - 1, mask | (1u << (i - 1)));  // element i, 0-based bit i-1
                return;
            }
            for (int m = from; m < (int)members.size(); ++m) {
                pick[idx] = members[m];
                choose(idx + 1, m + 1);
            }
        };
        choose(0, 0);
        return total;
    };
    return count(n - 1, (1u << n) - 1);
}

namespace detail {
inline Int binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace detail

/// h_{n+1} via the closed sum over non-negative f_1..f_n with f_0=f_{n+1}=0:
/// sum prod binom(1+f_{k-1}, f_k) binom(1+f_{k+1}, f_k). Every nonzero term
/// lies on Motzkin support (|f_{k+1} - f_k| <= 1), asserted during summation.
inline Int genocchi_formula(int n_plus_1) {
    if (n_plus_1 < 2) {
        if (n_plus_1 == 1) return 1;
        throw input_error("genocchi_formula: argument must be >= 1");
    }
    int n = n_plus_1 - 1;
    DimVector f(n, 0);
    Int total = 0;
    bool done = false;
    while (!done) {
        Int term = 1;
        for (int k = 1; k <= n && !term.is_zero(); ++k) {
            int fk = f[k - 1];
            int f_prev = k >= 2 ? f[k - 2] : 0;
            int f_next = k < n ? f[k] : 0;
            term *= detail::binom(1 + f_prev, fk) * detail::binom(1 + f_next, fk);
        }
        if (!term.is_zero()) {
            for (int k = 0; k <= n; ++k) {
                int cur = k == 0 ? 0 : f[k - 1];
                int nxt = k == n ? 0 : f[k];
                if (std::abs(cur - nxt) > 1)
                    throw invariant_violation("nonzero term off Motzkin support");
            }
            total += term;
        }
        // bound f_k <= n is crude but safe; zero factors prune the rest
        for (std::size_t i = 0;; ++i) {
            if (i == f.size()) {
                done = true;
                break;
            }
            if (f[i] < n) {
                ++f[i];
                break;
            }
            f[i] = 0;
        }
    }
    return total;
}

/// h_{n+1} as the Motzkin-path sum of (prod (1+f_k)^2) / 2^{rises+falls},
/// in exact rational arithmetic with integrality asserted.
inline Int genocchi_motzkin(int n_plus_1) {
    if (n_plus_1 < 1) throw input_error("genocchi_motzkin: argument must be >= 1");
    Rat total = 0;
    for (const auto& path : motzkin_paths(n_plus_1)) {
        Rat term = 1;
        for (std::size_t k = 1; k + 1 < path.heights.size(); ++k) {
            Rat h(1 + path.heights[k]);
            term *= h * h;
        }
        Rat denom = 1;
        for (int i = 0; i < path.step_count(); ++i) denom *= 2;
        total += term / denom;
    }
    if (denominator(total) != 1)
        throw invariant_violation("Motzkin sum is not an integer");
    return numerator(total);
}

/// Orbit label: interval multisets for the quotient Q_P and the sub N_I,
/// with equal dimension vectors.
struct OrbitLabel {
    std::map<Interval, int> qp;
    std::map<Interval, int> ni;
};

namespace detail {

/// Per-endpoint multiset choices: for each anchor vertex k = 1..n, choose a
/// multiset of intervals anchored at k (by right endpoint when
/// `anchor_right`, else by left endpoint) with total multiplicity <= bound[k].
/// Emits (multiset, dimension vector) pairs via callback.
inline void enumerate_anchored_multisets(
    int n, const std::vector<int>& bound, bool anchor_right,
    const std::function<void(const std::map<Interval, int>&, const DimVector&)>& emit) {
    std::map<Interval, int> current;
    DimVector dv(n, 0);
    std::function<void(int)> per_anchor = [&](int k) {
        if (k > n) {
            emit(current, dv);
            return;
        }
        // intervals anchored at k: right endpoint k -> left in 1..k;
        // left endpoint k -> right in k..n.
        std::vector<Interval> opts;
        if (anchor_right)
            for (int i = 1; i <= k; ++i) opts.push_back({i, k});
        else
            for (int j = k; j <= n; ++j) opts.push_back({k, j});
        std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int left_budget) {
            if (idx == opts.size()) {
                per_anchor(k + 1);
                return;
            }
            choose(idx + 1, left_budget);  // multiplicity 0 first
            const Interval& iv = opts[idx];
            int used = 0;
            while (used < left_budget) {
                ++used;
                current[iv] += 1;
                for (int v = iv.left; v <= iv.right; ++v) dv[v - 1] += 1;
                choose(idx + 1, left_budget - used);
            }
            if (used) {
                current[iv] -= used;
                if (current[iv] == 0) current.erase(iv);
                for (int v = iv.left; v <= iv.right; ++v) dv[v - 1] -= used;
            }
        };
        choose(0, bound[k - 1]);
    };
    per_anchor(1);
}

}  // namespace detail

/// Endpoint convention for the orbit-label constraints. `remark` anchors
/// N_I intervals by right endpoint (socle condition against b) and Q_P
/// intervals by left endpoint (top condition against a); `swapped` is the
/// transposed convention, equivalent under interval reversal.
enum class OrbitConvention { remark, swapped };

/// All G-orbit labels of Gr_{dim P}(P + I) for an equioriented A_n config.
inline std::vector<OrbitLabel> orbit_enumerate(const PIConfig& cfg,
                                               OrbitConvention conv = OrbitConvention::remark) {
    cfg.validate();
    bool remark = conv == OrbitConvention::remark;
    // bucket Q_P multisets by dimension vector, then match N_I multisets
    std::map<DimVector, std::vector<std::map<Interval, int>>> qp_by_dim;
    detail::enumerate_anchored_multisets(
        cfg.n, cfg.a, /*anchor_right=*/!remark,
        [&](const std::map<Interval, int>& ms, const DimVector& dv) {
            qp_by_dim[dv].push_back(ms);
        });
    std::vector<OrbitLabel> out;
    detail::enumerate_anchored_multisets(
        cfg.n, cfg.b, /*anchor_right=*/remark,
        [&](const std::map<Interval, int>& ms, const DimVector& dv) {
            auto it = qp_by_dim.find(dv);
            if (it == qp_by_dim.end()) return;
            for (const auto& qp : it->second) out.push_back({qp, ms});
        });
    return out;
}

/// Orbit count without materializing labels.
inline Int orbit_count(const PIConfig& cfg, OrbitConvention conv = OrbitConvention::remark) {
    cfg.validate();
    bool remark = conv == OrbitConvention::remark;
    std::map<DimVector, Int> qp_by_dim;
    detail::enumerate_anchored_multisets(
        cfg.n, cfg.a, !remark,
        [&](const std::map<Interval, int>&, const DimVector& dv) { qp_by_dim[dv] += 1; });
    Int total = 0;
    detail::enumerate_anchored_multisets(
        cfg.n, cfg.b, remark,
        [&](const std::map<Interval, int>&, const DimVector& dv) {
            auto it = qp_by_dim.find(dv);
            if (it != qp_by_dim.end()) total += it->second;
        });
    return total;
}

}  // namespace qgdf
