#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/matrix.hpp"
#include "qgdf/quiver.hpp"

namespace qgdf {

/// A labeled direct summand: for each vertex, the (0-based) indices of the
/// ambient basis vectors belonging to the summand.
struct Summand {
    std::string label;
    std::vector<std::vector<int>> basis;  // basis[v] = indices at vertex v

    int dim_at(int v) const { return (int)basis[v].size(); }
};

/// Explicit quiver representation over an exact field.
template <class F>
struct Rep {
    Quiver quiver;
    DimVector dims;
    std::vector<Matrix<F>> matrices;  // one (dims[target] x dims[source]) per arrow
    std::vector<Summand> summands;    // optional direct-sum decomposition

    void validate() const {
        check_dim_vector(quiver, dims, "rep dims");
        if (matrices.size() != quiver.arrows().size())
            throw dimension_error("rep: one matrix per arrow expected");
        for (std::size_t a = 0; a < matrices.size(); ++a) {
            const auto& arr = quiver.arrows()[a];
            if ((int)matrices[a].rows() != dims[arr.target] ||
                (int)matrices[a].cols() != dims[arr.source])
                throw dimension_error("rep: matrix shape does not match dims");
        }
        if (!summands.empty()) {
            for (int v = 0; v < quiver.vertex_count(); ++v) {
                std::vector<bool> seen(dims[v], false);
                for (const auto& s : summands) {
                    if ((int)s.basis.size() != quiver.vertex_count())
                        throw dimension_error("summand basis length mismatch");
                    for (int idx : s.basis[v]) {
                        if (idx < 0 || idx >= dims[v] || seen[idx])
                            throw input_error("summand bases must partition each vertex basis");
                        seen[idx] = true;
                    }
                }
                for (bool b : seen)
                    if (!b) throw input_error("summand bases must cover each vertex basis");
            }
        }
    }

    static Rep zero(const Quiver& q) {
        Rep r{q, DimVector(q.vertex_count(), 0), {}, {}};
        for (const auto& a : q.arrows()) {
            (void)a;
            r.matrices.emplace_back(0, 0);
        }
        return r;
    }
};

/// Block-diagonal direct sum; summand lists are concatenated with shifted
/// basis indices. Unlabeled inputs become single anonymous summands only if
/// both sides carry summand data.
template <class F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b) {
    if (!(a.quiver == b.quiver)) throw config_error("direct_sum: different quivers");
    Rep<F> out{a.quiver, dim_add(a.dims, b.dims), {}, {}};
    for (std::size_t k = 0; k < a.matrices.size(); ++k) {
        const auto& arr = a.quiver.arrows()[k];
        Matrix<F> m(out.dims[arr.target], out.dims[arr.source]);
        for (std::size_t i = 0; i < a.matrices[k].rows(); ++i)
            for (std::size_t j = 0; j < a.matrices[k].cols(); ++j)
                m(i, j) = a.matrices[k](i, j);
        for (std::size_t i = 0; i < b.matrices[k].rows(); ++i)
            for (std::size_t j = 0; j < b.matrices[k].cols(); ++j)
                m(a.dims[arr.target] + i, a.dims[arr.source] + j) = b.matrices[k](i, j);
        out.matrices.push_back(std::move(m));
    }
    if (!a.summands.empty() && !b.summands.empty()) {
        out.summands = a.summands;
        for (const auto& s : b.summands) {
            Summand shifted = s;
            for (int v = 0; v < a.quiver.vertex_count(); ++v)
                for (int& idx : shifted.basis[v]) idx += a.dims[v];
            out.summands.push_back(std::move(shifted));
        }
    }
    return out;
}

struct HomExt {
    long long hom = 0;
    long long ext = 0;
};

/// Hom and Ext^1 dimensions between two representations: kernel and cokernel
/// of (f_i) |-> (f_j X_a - Y_a f_i) over all arrows a: i -> j.
template <class F>
HomExt hom_ext_dims(const Rep<F>& x, const Rep<F>& y) {
    if (!(x.quiver == y.quiver)) throw config_error("hom_ext_dims: different quivers");
    const Quiver& q = x.quiver;
    int n = q.vertex_count();

    std::vector<std::size_t> col_offset(n + 1, 0);
    for (int i = 0; i < n; ++i)
        col_offset[i + 1] = col_offset[i] + (std::size_t)x.dims[i] * y.dims[i];
    std::size_t domain = col_offset[n];

    std::vector<std::size_t> row_offset(q.arrows().size() + 1, 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        row_offset[a + 1] = row_offset[a] + (std::size_t)x.dims[arr.source] * y.dims[arr.target];
    }
    std::size_t codomain = row_offset[q.arrows().size()];

    Matrix<F> big(codomain, domain);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        int i = arr.source, j = arr.target;
        const Matrix<F>& xa = x.matrices[a];
        const Matrix<F>& ya = y.matrices[a];
        // rows indexed by (r, c): entry (f_j X_a - Y_a f_i)_{r,c},
        // r in [dims Y_j], c in [dims X_i]; f_v stored row-major (p, q).
        for (int r = 0; r < y.dims[j]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) {
                std::size_t row = row_offset[a] + (std::size_t)r * x.dims[i] + c;
                // + (f_j)_{r,q} (X_a)_{q,c}
                for (int qq = 0; qq < x.dims[j]; ++qq)
                    big(row, col_offset[j] + (std::size_t)r * x.dims[j] + qq) += xa(qq, c);
                // - (Y_a)_{r,p} (f_i)_{p,c}
                for (int p = 0; p < y.dims[i]; ++p)
                    big(row, col_offset[i] + (std::size_t)p * x.dims[i] + c) -= ya(r, p);
            }
    }
    std::size_t rank = big.rank();
    return HomExt{(long long)(domain - rank), (long long)(codomain - rank)};
}

/// Basis of Hom_Q(X, Y), one tuple of per-vertex matrices per column of the
/// kernel of the defining map.
template <class F>
std::vector<std::vector<Matrix<F>>> hom_basis(const Rep<F>& x, const Rep<F>& y) {
    if (!(x.quiver == y.quiver)) throw config_error("hom_basis: different quivers");
    const Quiver& q = x.quiver;
    int n = q.vertex_count();
    std::vector<std::size_t> col_offset(n + 1, 0);
    for (int i = 0; i < n; ++i)
        col_offset[i + 1] = col_offset[i] + (std::size_t)x.dims[i] * y.dims[i];

    std::vector<std::size_t> row_offset(q.arrows().size() + 1, 0);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        row_offset[a + 1] = row_offset[a] + (std::size_t)x.dims[arr.source] * y.dims[arr.target];
    }
    Matrix<F> big(row_offset.back(), col_offset.back());
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        int i = arr.source, j = arr.target;
        for (int r = 0; r < y.dims[j]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) {
                std::size_t row = row_offset[a] + (std::size_t)r * x.dims[i] + c;
                for (int qq = 0; qq < x.dims[j]; ++qq)
                    big(row, col_offset[j] + (std::size_t)r * x.dims[j] + qq) += x.matrices[a](qq, c);
                for (int p = 0; p < y.dims[i]; ++p)
                    big(row, col_offset[i] + (std::size_t)p * x.dims[i] + c) -= y.matrices[a](r, p);
            }
    }
    Matrix<F> ker = big.kernel_basis();
    std::vector<std::vector<Matrix<F>>> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        std::vector<Matrix<F>> maps;
        for (int v = 0; v < n; ++v) {
            Matrix<F> fv(y.dims[v], x.dims[v]);
            for (int p = 0; p < y.dims[v]; ++p)
                for (int c = 0; c < x.dims[v]; ++c)
                    fv(p, c) = ker(col_offset[v] + (std::size_t)p * x.dims[v] + c, k);
            maps.push_back(std::move(fv));
        }
        out.push_back(std::move(maps));
    }
    return out;
}

/// Per-vertex column bases of a candidate subrepresentation.
template <class F>
struct SubrepBasis {
    std::vector<Matrix<F>> columns;  // columns[v]: dims[v] x e_v

    DimVector dim_vector() const {
        DimVector e;
        for (const auto& m : columns) e.push_back((int)m.cols());
        return e;
    }
};

template <class F>
bool columns_independent(const Matrix<F>& m) {
    return m.rank() == m.cols();
}

/// Arrow-stability: M_a(U_i) subset U_j for every arrow, by rank test.
template <class F>
bool is_arrow_stable(const Rep<F>& m, const SubrepBasis<F>& u) {
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
        const auto& arr = m.quiver.arrows()[a];
        Matrix<F> image = m.matrices[a] * u.columns[arr.source];
        const Matrix<F>& target = u.columns[arr.target];
        if (target.hstack(image).rank() != target.rank()) return false;
    }
    return true;
}

template <class F>
void require_valid_subrep(const Rep<F>& m, const SubrepBasis<F>& u) {
    if ((int)u.columns.size() != m.quiver.vertex_count())
        throw dimension_error("subrep basis: wrong number of vertices");
    for (int v = 0; v < m.quiver.vertex_count(); ++v) {
        if ((int)u.columns[v].rows() != m.dims[v])
            throw dimension_error("subrep basis: ambient dimension mismatch");
        if (!columns_independent(u.columns[v]))
            throw input_error("subrep basis: dependent columns");
    }
    if (!is_arrow_stable(m, u)) throw stability_error("subspace is not arrow-stable");
}

/// The subrepresentation U as an abstract representation: induced matrices
/// N_a with U_j N_a = M_a U_i.
template <class F>
Rep<F> subrep_as_rep(const Rep<F>& m, const SubrepBasis<F>& u) {
    require_valid_subrep(m, u);
    Rep<F> out{m.quiver, u.dim_vector(), {}, {}};
    for (std::size_t a = 0; a < m.quiver.arrows().size(); ++a) {
        const auto& arr = m.quiver.arrows()[a];
        Matrix<F> image = m.matrices[a] * u.columns[arr.source];
        out.matrices.push_back(u.columns[arr.target].solve(image));
    }
    return out;
}

/// Quotient M/U on the coordinate complement of the column space of U at
/// each vertex (complement = non-pivot rows after row reduction of U^T).
template <class F>
Rep<F> quotient_rep(const Rep<F>& m, const SubrepBasis<F>& u) {
    require_valid_subrep(m, u);
    const Quiver& q = m.quiver;
    int n = q.vertex_count();

    std::vector<std::vector<std::size_t>> comp(n);
    std::vector<Matrix<F>> full(n);  // [U_v | C_v], invertible
    for (int v = 0; v < n; ++v) {
        Matrix<F> t = u.columns[v].transposed();
        auto pivots = t.rref();  // pivot columns of U^T = pivot rows of col space
        std::vector<bool> is_pivot(m.dims[v], false);
        for (auto p : pivots) is_pivot[p] = true;
        for (int r = 0; r < m.dims[v]; ++r)
            if (!is_pivot[r]) comp[v].push_back(r);
        Matrix<F> c(m.dims[v], comp[v].size());
        for (std::size_t j = 0; j < comp[v].size(); ++j) c(comp[v][j], j) = F(1);
        full[v] = u.columns[v].hstack(c);
    }

    Rep<F> out{q, {}, {}, {}};
    out.dims.resize(n);
    for (int v = 0; v < n; ++v) out.dims[v] = (int)comp[v].size();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        int i = arr.source, j = arr.target;
        Matrix<F> cmat(m.dims[i], comp[i].size());
        for (std::size_t k = 0; k < comp[i].size(); ++k) cmat(comp[i][k], k) = F(1);
        Matrix<F> coords = full[j].solve(m.matrices[a] * cmat);
        std::size_t u_cols = u.columns[j].cols();
        Matrix<F> qa(comp[j].size(), comp[i].size());
        for (std::size_t r = 0; r < comp[j].size(); ++r)
            for (std::size_t c = 0; c < comp[i].size(); ++c) qa(r, c) = coords(u_cols + r, c);
        out.matrices.push_back(std::move(qa));
    }
    return out;
}

/// dim T_U Gr_e(M) = dim Hom_Q(U, M/U).
template <class F>
long long tangent_dim(const Rep<F>& m, const SubrepBasis<F>& u) {
    return hom_ext_dims(subrep_as_rep(m, u), quotient_rep(m, u)).hom;
}

/// Dimension of the stratum of subrepresentations isomorphic to N inside
/// Gr_{dim N}(M): dim Hom(N, M) - dim End(N). May be negative when N does
/// not embed into M; the value is returned as-is.
template <class F>
long long stratum_dim_of_class(const Rep<F>& n, const Rep<F>& m) {
    return hom_ext_dims(n, m).hom - hom_ext_dims(n, n).hom;
}

}  // namespace qgdf
