#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/intpoly.hpp"
#include "qgdf/rep.hpp"
#include "qgdf/typea.hpp"

namespace qgdf {

/// Torus fixed point of Gr_e(M): per summand of M, the subset of the
/// summand's support vertices spanned by the point (0-based vertices,
/// sorted).
struct FixedPoint {
    std::vector<std::vector<int>> vertex_sets;  // one per summand of M

    friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
        return a.vertex_sets == b.vertex_sets;
    }
    friend bool operator<(const FixedPoint& a, const FixedPoint& b) {
        return a.vertex_sets < b.vertex_sets;
    }
};

struct CellInfo {
    FixedPoint fixed_point;
    long long cell_dim = 0;
    DimVector stratum;  // empty unless the input carries P/I-labeled summands
    long long tangent_dim = 0;
    bool singular = false;
};

namespace cells_detail {

template <class F>
std::vector<int> thin_support(const Rep<F>& m, const Summand& s) {
    std::vector<int> support;
    for (int v = 0; v < m.quiver.vertex_count(); ++v) {
        if (s.basis[v].size() > 1)
            throw config_error("summand '" + s.label + "' is not thin");
        if (s.basis[v].size() == 1) support.push_back(v);
    }
    return support;
}

/// Arrow indices on which the summand's (1x1) block is nonzero.
template <class F>
std::vector<std::size_t> nonzero_arrows(const Rep<F>& m, const Summand& s) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
        const auto& arr = m.quiver.arrows()[a];
        if (s.basis[arr.source].size() == 1 && s.basis[arr.target].size() == 1 &&
            !is_zero(m.matrices[a](s.basis[arr.target][0], s.basis[arr.source][0])))
            out.push_back(a);
    }
    return out;
}

/// Successor-closed subsets of a thin summand's coefficient quiver,
/// ordered by the bitmask over the (ascending) support.
template <class F>
std::vector<std::vector<int>> closed_subsets(const Rep<F>& m, const Summand& s) {
    std::vector<int> support = thin_support(m, s);
    auto arrows = nonzero_arrows(m, s);
    std::vector<std::pair<int, int>> edges;  // indices into support
    auto pos = [&](int v) {
        return (int)(std::lower_bound(support.begin(), support.end(), v) - support.begin());
    };
    for (auto a : arrows) {
        const auto& arr = m.quiver.arrows()[a];
        edges.push_back({pos(arr.source), pos(arr.target)});
    }
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << support.size()); ++mask) {
        bool closed = true;
        for (const auto& [u, v] : edges)
            if ((mask & (1u << u)) && !(mask & (1u << v))) {
                closed = false;
                break;
            }
        if (!closed) continue;
        std::vector<int> subset;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask & (1u << i)) subset.push_back(support[i]);
        out.push_back(std::move(subset));
    }
    return out;
}

/// Connected pieces (underlying undirected graph of the coefficient quiver)
/// of the given vertex subset of a thin summand, each returned as a thin
/// representation of the ambient quiver with the summand's actual scalars.
template <class F>
std::vector<Rep<F>> pieces(const Rep<F>& m, const Summand& s, const std::vector<int>& subset) {
    auto arrows = nonzero_arrows(m, s);
    std::set<int> in_subset(subset.begin(), subset.end());
    std::map<int, int> comp;  // vertex -> component id
    int next_comp = 0;
    for (int v : subset) comp[v] = next_comp++;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto a : arrows) {
            const auto& arr = m.quiver.arrows()[a];
            if (in_subset.count(arr.source) && in_subset.count(arr.target) &&
                comp[arr.source] != comp[arr.target]) {
                int from = std::max(comp[arr.source], comp[arr.target]);
                int to = std::min(comp[arr.source], comp[arr.target]);
                for (auto& [v, c] : comp)
                    if (c == from) c = to;
                changed = true;
            }
        }
    }
    std::set<int> ids;
    for (auto& [v, c] : comp) ids.insert(c);
    std::vector<Rep<F>> out;
    for (int id : ids) {
        Rep<F> piece{m.quiver, DimVector(m.quiver.vertex_count(), 0), {}, {}};
        for (auto& [v, c] : comp)
            if (c == id) piece.dims[v] = 1;
        for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
            const auto& arr = m.quiver.arrows()[a];
            Matrix<F> mat(piece.dims[arr.target], piece.dims[arr.source]);
            if (piece.dims[arr.source] == 1 && piece.dims[arr.target] == 1)
                mat(0, 0) = m.matrices[a](s.basis[arr.target][0], s.basis[arr.source][0]);
            piece.matrices.push_back(std::move(mat));
        }
        out.push_back(std::move(piece));
    }
    return out;
}

template <class F>
std::vector<int> complement_subset(const Rep<F>& m, const Summand& s,
                                   const std::vector<int>& subset) {
    std::vector<int> support = thin_support(m, s);
    std::vector<int> out;
    std::set_difference(support.begin(), support.end(), subset.begin(), subset.end(),
                        std::back_inserter(out));
    return out;
}

template <class F>
void require_thin_tree(const Rep<F>& m) {
    if (m.summands.empty())
        throw config_error("operation needs a representation with labeled summands");
    if (!m.quiver.is_tree_shaped())
        throw config_error("operation requires a tree-shaped quiver");
    for (const auto& s : m.summands) (void)thin_support(m, s);
}

template <class F>
Rep<F> sum_pieces(const Rep<F>& m, const std::vector<Rep<F>>& parts) {
    Rep<F> acc = Rep<F>::zero(m.quiver);
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

inline bool label_is_injective(const std::string& label) {
    return !label.empty() && label.front() == 'I';
}
inline bool label_is_projective(const std::string& label) {
    return !label.empty() && label.front() == 'P';
}

}  // namespace cells_detail

template <class F>
DimVector fixed_point_dims(const Rep<F>& m, const FixedPoint& fp) {
    DimVector e(m.quiver.vertex_count(), 0);
    for (const auto& set : fp.vertex_sets)
        for (int v : set) ++e[v];
    return e;
}

/// All torus fixed points of Gr_e(M): combinations of successor-closed
/// subsets, one per thin summand, with total dimension vector e.
template <class F>
std::vector<FixedPoint> enumerate_fixed_points(const Rep<F>& m, const DimVector& e) {
    cells_detail::require_thin_tree(m);
    check_dim_vector(m.quiver, e, "enumerate_fixed_points e");
    if (!dim_leq(e, m.dims)) throw dimension_error("e exceeds dim M");
    std::vector<std::vector<std::vector<int>>> options;
    for (const auto& s : m.summands) options.push_back(cells_detail::closed_subsets(m, s));

    std::vector<FixedPoint> out;
    FixedPoint current;
    current.vertex_sets.resize(m.summands.size());
    DimVector remaining = e;
    std::function<void(std::size_t)> rec = [&](std::size_t s_idx) {
        if (s_idx == options.size()) {
            for (int r : remaining)
                if (r != 0) return;
            out.push_back(current);
            return;
        }
        for (const auto& subset : options[s_idx]) {
            bool fits = true;
            for (int v : subset)
                if (remaining[v] == 0) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int v : subset) --remaining[v];
            current.vertex_sets[s_idx] = subset;
            rec(s_idx + 1);
            for (int v : subset) ++remaining[v];
        }
        current.vertex_sets[s_idx].clear();
    };
    rec(0);
    return out;
}

/// Degree assignment satisfying d(L) < d(L') whenever Hom(L,L') != 0 for
/// non-isomorphic summands; isomorphic copies get consecutive degrees with
/// projective-labeled copies before injective-labeled ones.
template <class F>
DegreeAssignment generic_degrees(const Rep<F>& m) {
    cells_detail::require_thin_tree(m);
    std::size_t count = m.summands.size();
    // iso classes of thin summands: same support, same nonzero arrow set
    std::vector<int> cls(count, -1);
    std::vector<std::size_t> class_rep;
    for (std::size_t i = 0; i < count; ++i) {
        auto supp = cells_detail::thin_support(m, m.summands[i]);
        auto arrs = cells_detail::nonzero_arrows(m, m.summands[i]);
        for (std::size_t j = 0; j < class_rep.size(); ++j) {
            auto s2 = cells_detail::thin_support(m, m.summands[class_rep[j]]);
            auto a2 = cells_detail::nonzero_arrows(m, m.summands[class_rep[j]]);
            if (supp == s2 && arrs == a2) {
                cls[i] = (int)j;
                break;
            }
        }
        if (cls[i] < 0) {
            cls[i] = (int)class_rep.size();
            class_rep.push_back(i);
        }
    }
    std::size_t nc = class_rep.size();
    std::vector<Rep<F>> reps;
    for (auto r : class_rep) {
        auto supp = cells_detail::thin_support(m, m.summands[r]);
        auto ps = cells_detail::pieces(m, m.summands[r], supp);
        reps.push_back(cells_detail::sum_pieces(m, ps));
    }
    std::vector<std::set<std::size_t>> succ(nc);
    std::vector<int> indeg(nc, 0);
    for (std::size_t u = 0; u < nc; ++u)
        for (std::size_t v = 0; v < nc; ++v) {
            if (u == v) continue;
            if (hom_ext_dims(reps[u], reps[v]).hom > 0 && succ[u].insert(v).second) ++indeg[v];
        }
    // Kahn with smallest-first tie break
    std::vector<std::size_t> order;
    std::set<std::size_t> ready;
    for (std::size_t c = 0; c < nc; ++c)
        if (indeg[c] == 0) ready.insert(c);
    while (!ready.empty()) {
        std::size_t c = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(c);
        for (auto v : succ[c])
            if (--indeg[v] == 0) ready.insert(v);
    }
    if (order.size() != nc)
        throw config_error("Hom digraph of summands has a cycle; unsupported input");
    DegreeAssignment deg;
    int next = 0;
    for (auto c : order) {
        // copies: projective-labeled first, then declaration order
        std::vector<std::size_t> copies;
        for (std::size_t i = 0; i < count; ++i)
            if (cls[i] == (int)c) copies.push_back(i);
        std::stable_sort(copies.begin(), copies.end(), [&](std::size_t x, std::size_t y) {
            int kx = cells_detail::label_is_injective(m.summands[x].label) ? 1 : 0;
            int ky = cells_detail::label_is_injective(m.summands[y].label) ? 1 : 0;
            return kx < ky;
        });
        for (auto i : copies) deg[m.summands[i].label] = next++;
    }
    return deg;
}

namespace cells_detail {

template <class F>
std::vector<int> summand_degrees(const Rep<F>& m, const DegreeAssignment& deg) {
    std::vector<int> d;
    std::set<int> seen;
    for (const auto& s : m.summands) {
        auto it = deg.find(s.label);
        if (it == deg.end())
            throw input_error("degree assignment missing summand '" + s.label + "'");
        if (!seen.insert(it->second).second)
            throw input_error("degree assignment has duplicate degrees");
        d.push_back(it->second);
    }
    return d;
}

}  // namespace cells_detail

/// Dimension of the attracting cell of L: dim Hom_Q(L, M/L)^+, summed over
/// piece pairs whose ambient summand degrees strictly increase.
template <class F>
long long cell_dim(const Rep<F>& m, const DegreeAssignment& deg, const FixedPoint& fp) {
    cells_detail::require_thin_tree(m);
    if (fp.vertex_sets.size() != m.summands.size())
        throw dimension_error("fixed point does not match summand structure");
    auto degs = cells_detail::summand_degrees(m, deg);
    std::size_t count = m.summands.size();
    std::vector<std::vector<Rep<F>>> sub_pieces(count), quot_pieces(count);
    for (std::size_t s = 0; s < count; ++s) {
        sub_pieces[s] = cells_detail::pieces(m, m.summands[s], fp.vertex_sets[s]);
        quot_pieces[s] = cells_detail::pieces(
            m, m.summands[s], cells_detail::complement_subset(m, m.summands[s], fp.vertex_sets[s]));
    }
    long long total = 0;
    for (std::size_t u = 0; u < count; ++u)
        for (std::size_t v = 0; v < count; ++v) {
            if (degs[v] <= degs[u]) continue;
            for (const auto& x : sub_pieces[u])
                for (const auto& y : quot_pieces[v]) total += hom_ext_dims(x, y).hom;
        }
    return total;
}

/// Cell-generating polynomial: sum over fixed points of q^{cell dim}.
template <class F>
IntPoly cell_polynomial(const Rep<F>& m, const DegreeAssignment& deg, const DimVector& e) {
    IntPoly out;
    for (const auto& fp : enumerate_fixed_points(m, e))
        out += IntPoly::monomial((std::size_t)cell_dim(m, deg, fp));
    return out;
}

/// Stratum of an arrow-stable subspace U in a P/I-labeled M:
/// f_v = dim(U_v  intersect  I_v) via ranks.
template <class F>
DimVector stratum_of(const Rep<F>& m, const SubrepBasis<F>& u) {
    cells_detail::require_thin_tree(m);
    DimVector f(m.quiver.vertex_count(), 0);
    for (int v = 0; v < m.quiver.vertex_count(); ++v) {
        std::vector<std::size_t> inj_idx;
        for (const auto& s : m.summands)
            if (cells_detail::label_is_injective(s.label))
                for (int idx : s.basis[v]) inj_idx.push_back((std::size_t)idx);
        Matrix<F> w(m.dims[v], inj_idx.size());
        for (std::size_t j = 0; j < inj_idx.size(); ++j) w(inj_idx[j], j) = F(1);
        std::size_t ru = u.columns[v].rank();
        std::size_t rw = inj_idx.size();
        std::size_t rsum = u.columns[v].hstack(w).rank();
        f[v] = (int)(ru + rw - rsum);
    }
    return f;
}

/// The lambda -> 0 limit of an arrow-stable subspace: span of the
/// minimal-degree leading terms of a degree-ordered reduced basis.
template <class F>
FixedPoint attracting_fixed_point(const Rep<F>& m, const DegreeAssignment& deg,
                                  const SubrepBasis<F>& u) {
    cells_detail::require_thin_tree(m);
    require_valid_subrep(m, u);
    auto degs = cells_detail::summand_degrees(m, deg);

    // basis index -> owning summand, per vertex
    int n = m.quiver.vertex_count();
    std::vector<std::vector<int>> owner(n);
    for (int v = 0; v < n; ++v) owner[v].assign(m.dims[v], -1);
    for (std::size_t s = 0; s < m.summands.size(); ++s)
        for (int v = 0; v < n; ++v)
            for (int idx : m.summands[s].basis[v]) owner[v][idx] = (int)s;

    FixedPoint fp;
    fp.vertex_sets.resize(m.summands.size());
    for (int v = 0; v < n; ++v) {
        std::vector<int> order(m.dims[v]);
        for (int i = 0; i < m.dims[v]; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return degs[owner[v][a]] < degs[owner[v][b]]; });
        Matrix<F> a(m.dims[v], u.columns[v].cols());
        for (int r = 0; r < m.dims[v]; ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = u.columns[v](order[r], c);
        // column elimination by ascending degree; pivot rows are the limit
        std::vector<bool> used(a.cols(), false);
        std::vector<int> pivot_rows;
        for (int r = 0; r < (int)a.rows() && pivot_rows.size() < a.cols(); ++r) {
            std::size_t col = a.cols();
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (!used[c] && !is_zero(a(r, c))) {
                    col = c;
                    break;
                }
            if (col == a.cols()) continue;
            used[col] = true;
            pivot_rows.push_back(r);
            F inv = F(1) / a(r, col);
            for (int rr = r; rr < (int)a.rows(); ++rr) a(rr, col) *= inv;
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (c == col || is_zero(a(r, c))) continue;
                F factor = a(r, c);
                for (int rr = r; rr < (int)a.rows(); ++rr) a(rr, c) -= factor * a(rr, col);
            }
        }
        if (pivot_rows.size() != u.columns[v].cols())
            throw input_error("attracting limit: dependent columns");
        for (int r : pivot_rows) {
            int idx = order[r];
            fp.vertex_sets[owner[v][idx]].push_back(v);
        }
    }
    for (auto& set : fp.vertex_sets) std::sort(set.begin(), set.end());

    // the limit must itself be a coordinate subrepresentation
    for (std::size_t s = 0; s < m.summands.size(); ++s) {
        auto closed = cells_detail::closed_subsets(m, m.summands[s]);
        if (std::find(closed.begin(), closed.end(), fp.vertex_sets[s]) == closed.end())
            throw invariant_violation("limit is not successor-closed");
    }
    return fp;
}

/// Coordinate basis columns of a fixed point.
template <class F>
SubrepBasis<F> fixed_point_basis(const Rep<F>& m, const FixedPoint& fp) {
    int n = m.quiver.vertex_count();
    std::vector<std::vector<std::size_t>> idx(n);
    for (std::size_t s = 0; s < m.summands.size(); ++s)
        for (int v : fp.vertex_sets[s]) idx[v].push_back((std::size_t)m.summands[s].basis[v][0]);
    SubrepBasis<F> u;
    for (int v = 0; v < n; ++v) {
        std::sort(idx[v].begin(), idx[v].end());
        Matrix<F> cols(m.dims[v], idx[v].size());
        for (std::size_t j = 0; j < idx[v].size(); ++j) cols(idx[v][j], j) = F(1);
        u.columns.push_back(std::move(cols));
    }
    return u;
}

/// Tangent dimension, stratum and singularity flag of a fixed point. For
/// P/I-labeled inputs the Ext-based singularity criterion
/// (Ext^1(L_I, P/L_P) != 0) is computed as well and must agree with the
/// tangent-dimension test.
template <class F>
CellInfo classify_fixed_point(const Rep<F>& m, const DegreeAssignment& deg, const FixedPoint& fp) {
    cells_detail::require_thin_tree(m);
    CellInfo info;
    info.fixed_point = fp;
    info.cell_dim = cell_dim(m, deg, fp);

    std::vector<Rep<F>> sub_parts, quot_parts;
    for (std::size_t s = 0; s < m.summands.size(); ++s) {
        for (auto& p : cells_detail::pieces(m, m.summands[s], fp.vertex_sets[s]))
            sub_parts.push_back(std::move(p));
        for (auto& p : cells_detail::pieces(
                 m, m.summands[s],
                 cells_detail::complement_subset(m, m.summands[s], fp.vertex_sets[s])))
            quot_parts.push_back(std::move(p));
    }
    Rep<F> sub = cells_detail::sum_pieces(m, sub_parts);
    Rep<F> quot = cells_detail::sum_pieces(m, quot_parts);
    info.tangent_dim = hom_ext_dims(sub, quot).hom;

    DimVector e = fixed_point_dims(m, fp);
    info.singular = info.tangent_dim > generic_grass_dim(m.quiver, e, m.dims);

    bool pi_labels = true;
    for (const auto& s : m.summands)
        pi_labels = pi_labels && (cells_detail::label_is_injective(s.label) ||
                                  cells_detail::label_is_projective(s.label));
    if (pi_labels) {
        info.stratum.assign(m.quiver.vertex_count(), 0);
        std::vector<Rep<F>> li_parts, qp_parts;
        for (std::size_t s = 0; s < m.summands.size(); ++s) {
            if (cells_detail::label_is_injective(m.summands[s].label)) {
                for (int v : fp.vertex_sets[s]) ++info.stratum[v];
                for (auto& p : cells_detail::pieces(m, m.summands[s], fp.vertex_sets[s]))
                    li_parts.push_back(std::move(p));
            } else {
                for (auto& p : cells_detail::pieces(
                         m, m.summands[s],
                         cells_detail::complement_subset(m, m.summands[s], fp.vertex_sets[s])))
                    qp_parts.push_back(std::move(p));
            }
        }
        bool ext_singular = hom_ext_dims(cells_detail::sum_pieces(m, li_parts),
                                         cells_detail::sum_pieces(m, qp_parts))
                                .ext != 0;
        if (ext_singular != info.singular)
            throw invariant_violation("singularity criteria disagree at a fixed point");
    }
    return info;
}

}  // namespace qgdf
