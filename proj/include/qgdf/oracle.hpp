#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/intpoly.hpp"
#include "qgdf/rep.hpp"
#include "qgdf/scalar.hpp"

namespace qgdf {

struct OracleOptions {
    long long budget = 100000000;  // max candidate subspaces to enumerate
    int threads = 1;
};

struct OracleResult {
    Int total = 0;
    std::map<DimVector, Int> by_stratum;  // filled for P/I-labeled inputs
    long long candidates = 0;
};

/// Reduce a rational representation mod a prime. Summand data is kept.
inline Rep<Fp> reduce_mod(const Rep<Rat>& m, std::int64_t p) {
    if (!is_prime(p)) throw input_error("reduce_mod: modulus must be prime");
    Rep<Fp> out{m.quiver, m.dims, {}, m.summands};
    Int pn = p;
    for (const auto& mat : m.matrices) {
        Matrix<Fp> f(mat.rows(), mat.cols());
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c) {
                const Rat& x = mat(r, c);
                std::int64_t den = (((denominator(x) % pn) + pn) % pn).convert_to<std::int64_t>();
                if (den == 0) throw config_error("reduce_mod: denominator vanishes mod p");
                std::int64_t num = (((numerator(x) % pn) + pn) % pn).convert_to<std::int64_t>();
                f(r, c) = Fp(num, p) / Fp(den, p);
            }
        out.matrices.push_back(std::move(f));
    }
    return out;
}

namespace oracle_detail {

/// Column-echelon subspace: column j has its pivot 1 in row pivots[j],
/// zeros in the other pivot rows and above its own pivot.
template <class Col>
struct Space {
    std::vector<int> pivots;
    std::vector<Col> cols;
};

/// General prime field, columns as int64 coordinate vectors.
struct GenPolicy {
    using Col = std::vector<std::int64_t>;
    struct Mat {
        std::size_t rows = 0, cols = 0;
        std::vector<std::int64_t> a;
    };

    std::int64_t p;

    Mat convert(const Matrix<Fp>& m) const {
        Mat out{m.rows(), m.cols(), std::vector<std::int64_t>(m.rows() * m.cols(), 0)};
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const Fp& x = m(r, c);
                if (x.modulus() != 0 && x.modulus() != p)
                    throw config_error("representation carries a different modulus");
                out.a[r * m.cols() + c] = ((x.value() % p) + p) % p;
            }
        return out;
    }

    Col apply(const Mat& m, const Col& v) const {
        Col out(m.rows, 0);
        for (std::size_t r = 0; r < m.rows; ++r) {
            std::int64_t acc = 0;
            for (std::size_t c = 0; c < m.cols; ++c) acc += m.a[r * m.cols + c] * v[c] % p;
            out[r] = acc % p;
        }
        return out;
    }

    bool contains(const Space<Col>& s, Col v) const {
        for (std::size_t j = 0; j < s.cols.size(); ++j) {
            std::int64_t coeff = v[s.pivots[j]];
            if (coeff == 0) continue;
            for (std::size_t r = 0; r < v.size(); ++r)
                v[r] = ((v[r] - coeff * s.cols[j][r]) % p + p) % p;
        }
        for (auto x : v)
            if (x) return false;
        return true;
    }

    /// dim(U intersect span{e_r : r in rows}) = k + |rows| - rank [U | E].
    int coord_intersection_dim(const Space<Col>& s, const std::vector<int>& rows, int d) const {
        std::size_t k = s.cols.size(), w = rows.size();
        if (k == 0 || w == 0) return 0;
        std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(k + w, 0));
        for (std::size_t j = 0; j < k; ++j)
            for (int r = 0; r < d; ++r) m[r][j] = s.cols[j][r];
        for (std::size_t j = 0; j < w; ++j) m[rows[j]][k + j] = 1;
        int rank = 0;
        for (std::size_t col = 0; col < k + w && rank < d; ++col) {
            int sel = -1;
            for (int r = rank; r < d; ++r)
                if (m[r][col] % p != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(m[rank], m[sel]);
            std::int64_t inv = (Fp(1, p) / Fp(m[rank][col], p)).value();
            for (auto& x : m[rank]) x = x % p * inv % p;
            for (int r = 0; r < d; ++r) {
                if (r == rank) continue;
                std::int64_t f = ((m[r][col] % p) + p) % p;
                if (!f) continue;
                for (std::size_t j = col; j < k + w; ++j)
                    m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
            }
            ++rank;
        }
        return (int)(k + w) - rank;
    }

    /// All k-dimensional echelon subspaces of F_p^d, charging `charge` once
    /// per emitted subspace.
    void enumerate(int d, int k, const std::function<void()>& charge,
                   const std::function<void(const Space<Col>&)>& fn) const {
        if (k > d) return;
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        bool combos_left = true;
        while (combos_left) {
            std::vector<bool> is_piv(d, false);
            for (int r : piv) is_piv[r] = true;
            std::vector<std::pair<int, int>> free_pos;  // (row, col)
            for (int j = 0; j < k; ++j)
                for (int r = piv[j] + 1; r < d; ++r)
                    if (!is_piv[r]) free_pos.push_back({r, j});
            Space<Col> s;
            s.pivots = piv;
            s.cols.assign(k, Col(d, 0));
            for (int j = 0; j < k; ++j) s.cols[j][piv[j]] = 1;
            std::vector<std::int64_t> vals(free_pos.size(), 0);
            bool vals_left = true;
            while (vals_left) {
                charge();
                fn(s);
                vals_left = false;
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    auto [r, j] = free_pos[i];
                    if (vals[i] + 1 < p) {
                        s.cols[j][r] = ++vals[i];
                        vals_left = true;
                        break;
                    }
                    vals[i] = 0;
                    s.cols[j][r] = 0;
                }
            }
            // next pivot combination
            combos_left = false;
            for (int i = k - 1; i >= 0; --i) {
                if (piv[i] < d - (k - i)) {
                    ++piv[i];
                    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                    combos_left = true;
                    break;
                }
            }
        }
    }
};

/// F_2 with columns as 64-bit masks (bit r = row r).
struct F2Policy {
    using Col = std::uint64_t;
    struct Mat {
        std::size_t rows = 0;
        std::vector<std::uint64_t> row_mask;  // row r: mask over input coords
    };

    std::int64_t p = 2;

    Mat convert(const Matrix<Fp>& m) const {
        Mat out{m.rows(), std::vector<std::uint64_t>(m.rows(), 0)};
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const Fp& x = m(r, c);
                if (x.modulus() != 0 && x.modulus() != 2)
                    throw config_error("representation carries a different modulus");
                if (((x.value() % 2) + 2) % 2) out.row_mask[r] |= 1ull << c;
            }
        return out;
    }

    Col apply(const Mat& m, Col v) const {
        Col out = 0;
        for (std::size_t r = 0; r < m.rows; ++r)
            out |= (Col)(__builtin_popcountll(m.row_mask[r] & v) & 1) << r;
        return out;
    }

    bool contains(const Space<Col>& s, Col v) const {
        for (std::size_t j = 0; j < s.cols.size(); ++j)
            if (v >> s.pivots[j] & 1) v ^= s.cols[j];
        return v == 0;
    }

    int coord_intersection_dim(const Space<Col>& s, const std::vector<int>& rows, int d) const {
        (void)d;
        std::size_t k = s.cols.size(), w = rows.size();
        if (k == 0 || w == 0) return 0;
        std::vector<Col> basis = s.cols;
        for (int r : rows) basis.push_back(1ull << r);
        int rank = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Col v = basis[i];
            for (int j = 0; j < rank; ++j)
                if (v & (basis[j] & -basis[j])) v ^= basis[j];
            if (v) {
                basis[rank++] = v;
                for (int j = 0; j < rank - 1; ++j)
                    if (basis[j] & (v & -v)) basis[j] ^= v;
            }
        }
        return (int)(k + w) - rank;
    }

    void enumerate(int d, int k, const std::function<void()>& charge,
                   const std::function<void(const Space<Col>&)>& fn) const {
        if (k > d) return;
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        bool combos_left = true;
        while (combos_left) {
            std::vector<bool> is_piv(d, false);
            for (int r : piv) is_piv[r] = true;
            std::vector<std::pair<int, int>> free_pos;
            for (int j = 0; j < k; ++j)
                for (int r = piv[j] + 1; r < d; ++r)
                    if (!is_piv[r]) free_pos.push_back({r, j});
            Space<Col> s;
            s.pivots = piv;
            s.cols.assign(k, 0);
            for (int j = 0; j < k; ++j) s.cols[j] = 1ull << piv[j];
            std::uint64_t total = 1ull << free_pos.size();
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                for (int j = 0; j < k; ++j) s.cols[j] = 1ull << piv[j];
                for (std::size_t i = 0; i < free_pos.size(); ++i)
                    if (mask >> i & 1) s.cols[free_pos[i].second] |= 1ull << free_pos[i].first;
                charge();
                fn(s);
            }
            combos_left = false;
            for (int i = k - 1; i >= 0; --i) {
                if (piv[i] < d - (k - i)) {
                    ++piv[i];
                    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                    combos_left = true;
                    break;
                }
            }
        }
    }
};

template <class P>
struct Engine {
    const Rep<Fp>& m;
    DimVector e;
    P pol;
    std::vector<typename P::Mat> mats;
    std::vector<std::vector<std::size_t>> in_arrows;  // arrows targeting each vertex
    std::vector<std::vector<int>> inj_rows;           // injective coordinates per vertex
    bool stratum_enabled = false;
    std::atomic<long long>* consumed = nullptr;

    using Sp = Space<typename P::Col>;
    using Leaf = std::function<void(const std::vector<Sp>&)>;

    Engine(const Rep<Fp>& rep, DimVector ev, P policy) : m(rep), e(std::move(ev)), pol(policy) {
        for (const auto& mat : m.matrices) mats.push_back(pol.convert(mat));
        in_arrows.resize(m.quiver.vertex_count());
        for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a)
            in_arrows[m.quiver.arrows()[a].target].push_back(a);
        if (!m.summands.empty()) {
            stratum_enabled = true;
            for (const auto& s : m.summands)
                if (s.label.empty() || (s.label.front() != 'P' && s.label.front() != 'I'))
                    stratum_enabled = false;
            if (stratum_enabled) {
                inj_rows.resize(m.quiver.vertex_count());
                for (const auto& s : m.summands)
                    if (s.label.front() == 'I')
                        for (int v = 0; v < m.quiver.vertex_count(); ++v)
                            for (int idx : s.basis[v]) inj_rows[v].push_back(idx);
            }
        }
    }

    void charge() const { consumed->fetch_add(1, std::memory_order_relaxed); }

    bool admissible(const std::vector<Sp>& spaces, int v, const Sp& cand) const {
        for (auto a : in_arrows[v]) {
            int src = m.quiver.arrows()[a].source;
            for (const auto& col : spaces[src].cols)
                if (!pol.contains(cand, pol.apply(mats[a], col))) return false;
        }
        return true;
    }

    void dfs(std::size_t ti, std::vector<Sp>& spaces, const Leaf& leaf) const {
        const auto& topo = m.quiver.topological_vertices();
        if (ti == topo.size()) {
            leaf(spaces);
            return;
        }
        int v = topo[ti];
        pol.enumerate(m.dims[v], e[v], [&] { charge(); },
                      [&](const Sp& cand) {
                          if (!admissible(spaces, v, cand)) return;
                          spaces[v] = cand;
                          dfs(ti + 1, spaces, leaf);
                      });
    }

    DimVector stratum(const std::vector<Sp>& spaces) const {
        DimVector f(m.quiver.vertex_count(), 0);
        for (int v = 0; v < m.quiver.vertex_count(); ++v)
            f[v] = pol.coord_intersection_dim(spaces[v], inj_rows[v], m.dims[v]);
        return f;
    }

    /// Count leaves, partitioning the first vertex's subspaces over threads.
    OracleResult count(const OracleOptions& opts) {
        std::atomic<long long> used{0};
        consumed = &used;
        OracleResult result;
        const auto& topo = m.quiver.topological_vertices();

        auto leaf_into = [&](long long& total, std::map<DimVector, long long>& strata) {
            return Leaf([&, this](const std::vector<Sp>& spaces) {
                ++total;
                if (stratum_enabled) ++strata[stratum(spaces)];
            });
        };

        if (opts.threads <= 1 || topo.empty()) {
            long long total = 0;
            std::map<DimVector, long long> strata;
            std::vector<Sp> spaces(m.quiver.vertex_count());
            dfs(0, spaces, leaf_into(total, strata));
            result.total = total;
            for (auto& [f, c] : strata) result.by_stratum[f] = c;
            result.candidates = used.load();
            return result;
        }

        int v0 = topo[0];
        std::vector<Sp> first;
        pol.enumerate(m.dims[v0], e[v0], [&] { charge(); },
                      [&](const Sp& s) { first.push_back(s); });
        int nt = std::min<int>(opts.threads, std::max<std::size_t>(first.size(), 1));
        std::mutex merge_mutex;
        long long grand_total = 0;
        std::map<DimVector, long long> grand_strata;
        std::exception_ptr failure;
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) {
            pool.emplace_back([&, t] {
                try {
                    long long total = 0;
                    std::map<DimVector, long long> strata;
                    std::vector<Sp> spaces(m.quiver.vertex_count());
                    Leaf leaf = leaf_into(total, strata);
                    for (std::size_t i = t; i < first.size(); i += nt) {
                        spaces[v0] = first[i];
                        dfs(1, spaces, leaf);
                    }
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    grand_total += total;
                    for (auto& [f, c] : strata) grand_strata[f] += c;
                } catch (...) {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
        result.total = grand_total;
        for (auto& [f, c] : grand_strata) result.by_stratum[f] = c;
        result.candidates = used.load();
        return result;
    }
};

inline void check_field(std::int64_t p) {
    if (!is_prime(p) || p > 7)
        throw config_error("oracle field order must be a prime <= 7");
}

/// Precondition guard: the product of per-vertex subspace counts (the raw
/// enumeration space before pruning) must fit the configured budget.
inline void check_budget(const Rep<Fp>& m, const DimVector& e, std::int64_t p, long long budget) {
    if (budget <= 0) throw input_error("oracle budget must be positive");
    Int work = 1;
    for (int v = 0; v < m.quiver.vertex_count(); ++v)
        work *= eval_int(q_binomial(m.dims[v], e[v]), p);
    if (work > budget)
        throw resource_error("oracle budget exceeded: " + work.str() +
                             " candidate subspace tuples, budget " + std::to_string(budget));
}

}  // namespace oracle_detail

/// All k-dimensional subspaces of F_p^d, one canonical echelon column basis
/// each (d x k matrices with unit pivots).
inline std::vector<Matrix<Fp>> enumerate_subspaces_fq(int d, int k, std::int64_t p) {
    oracle_detail::check_field(p);
    if (k < 0 || d < 0 || k > d) throw dimension_error("enumerate_subspaces_fq: need 0 <= k <= d");
    oracle_detail::GenPolicy pol{p};
    std::vector<Matrix<Fp>> out;
    pol.enumerate(d, k, [] {}, [&](const oracle_detail::Space<oracle_detail::GenPolicy::Col>& s) {
        Matrix<Fp> cols(d, s.cols.size());
        for (std::size_t j = 0; j < s.cols.size(); ++j)
            for (int r = 0; r < d; ++r) cols(r, j) = Fp(s.cols[j][r], p);
        out.push_back(std::move(cols));
    });
    return out;
}

/// Number of F_p-rational points of Gr_e(M) by exhaustive enumeration of
/// echelon subspaces with containment pruning along a topological order.
/// For P/I-labeled inputs the count is also broken down by stratum
/// f_v = dim(U_v intersect I_v).
inline OracleResult count_subreps_fq(const Rep<Fp>& m, const DimVector& e, std::int64_t p,
                                     const OracleOptions& opts = {}) {
    oracle_detail::check_field(p);
    m.validate();
    check_dim_vector(m.quiver, e, "oracle e");
    if (!dim_leq(e, m.dims)) throw dimension_error("oracle: e exceeds dim M");
    oracle_detail::check_budget(m, e, p, opts.budget);
    bool small = true;
    for (int d : m.dims) small = small && d <= 64;
    if (p == 2 && small) {
        oracle_detail::Engine<oracle_detail::F2Policy> eng(m, e, oracle_detail::F2Policy{});
        return eng.count(opts);
    }
    oracle_detail::Engine<oracle_detail::GenPolicy> eng(m, e, oracle_detail::GenPolicy{p});
    return eng.count(opts);
}

/// Materialize every F_p-point as a column basis. Single-threaded.
inline std::vector<SubrepBasis<Fp>> list_subreps_fq(const Rep<Fp>& m, const DimVector& e,
                                                    std::int64_t p,
                                                    const OracleOptions& opts = {}) {
    oracle_detail::check_field(p);
    m.validate();
    check_dim_vector(m.quiver, e, "oracle e");
    if (!dim_leq(e, m.dims)) throw dimension_error("oracle: e exceeds dim M");
    oracle_detail::check_budget(m, e, p, opts.budget);
    oracle_detail::Engine<oracle_detail::GenPolicy> eng(m, e, oracle_detail::GenPolicy{p});
    std::atomic<long long> used{0};
    eng.consumed = &used;
    std::vector<SubrepBasis<Fp>> out;
    std::vector<oracle_detail::Engine<oracle_detail::GenPolicy>::Sp> spaces(
        m.quiver.vertex_count());
    eng.dfs(0, spaces, [&](const auto& sp) {
        SubrepBasis<Fp> u;
        for (int v = 0; v < m.quiver.vertex_count(); ++v) {
            Matrix<Fp> cols(m.dims[v], sp[v].cols.size());
            for (std::size_t j = 0; j < sp[v].cols.size(); ++j)
                for (int r = 0; r < m.dims[v]; ++r) cols(r, j) = Fp(sp[v].cols[j][r], p);
            u.columns.push_back(std::move(cols));
        }
        out.push_back(std::move(u));
    });
    return out;
}

}  // namespace qgdf
