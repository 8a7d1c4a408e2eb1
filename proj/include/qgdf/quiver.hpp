#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "qgdf/errors.hpp"

namespace qgdf {

/// Arrow of a quiver; vertices are 1-indexed externally, 0-indexed here.
struct Arrow {
    int source = 0;
    int target = 0;
};

using DimVector = std::vector<int>;

/// Finite quiver without oriented cycles.
class Quiver {
public:
    Quiver() = default;
    Quiver(int vertex_count, std::vector<Arrow> arrows)
        : n_(vertex_count), arrows_(std::move(arrows)) {
        if (n_ <= 0) throw input_error("quiver needs at least one vertex");
        for (const auto& a : arrows_) {
            if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
                throw input_error("arrow endpoint out of range");
            if (a.source == a.target) throw input_error("loops are not allowed");
        }
        topo_ = topological_order();
    }

    /// Equioriented A_n: arrows i -> i+1.
    static Quiver type_a(int n) {
        std::vector<Arrow> arrows;
        for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
        return Quiver(n, std::move(arrows));
    }

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<int>& topological_vertices() const { return topo_; }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        if (a.n_ != b.n_ || a.arrows_.size() != b.arrows_.size()) return false;
        for (std::size_t i = 0; i < a.arrows_.size(); ++i)
            if (a.arrows_[i].source != b.arrows_[i].source ||
                a.arrows_[i].target != b.arrows_[i].target)
                return false;
        return true;
    }

    /// Whether the underlying undirected graph is a forest.
    bool is_tree_shaped() const {
        std::vector<int> parent(n_);
        for (int i = 0; i < n_; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : arrows_) {
            int ra = find(a.source), rb = find(a.target);
            if (ra == rb) return false;
            parent[ra] = rb;
        }
        return true;
    }

private:
    std::vector<int> topological_order() const {
        std::vector<int> indeg(n_, 0), order;
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<int> ready;
        for (int i = 0; i < n_; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        while (!ready.empty()) {
            // smallest vertex first, for determinism
            auto it = std::min_element(ready.begin(), ready.end());
            int v = *it;
            ready.erase(it);
            order.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
        }
        if ((int)order.size() != n_) throw input_error("quiver has an oriented cycle");
        return order;
    }

    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<int> topo_;
};

inline void check_dim_vector(const Quiver& q, const DimVector& d, const char* what) {
    if ((int)d.size() != q.vertex_count())
        throw dimension_error(std::string(what) + ": dimension vector length mismatch");
    for (int x : d)
        if (x < 0) throw dimension_error(std::string(what) + ": negative entry");
}

/// Euler form <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
inline long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_dim_vector(q, d, "euler_form lhs");
    check_dim_vector(q, e, "euler_form rhs");
    long long value = 0;
    for (int i = 0; i < q.vertex_count(); ++i) value += (long long)d[i] * e[i];
    for (const auto& a : q.arrows()) value -= (long long)d[a.source] * e[a.target];
    return value;
}

inline DimVector dim_sub(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw dimension_error("dimension vector length mismatch");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline DimVector dim_add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw dimension_error("dimension vector length mismatch");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline bool dim_leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw dimension_error("dimension vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// dim Gr_e(M) for generic M: <e, d-e>  (requires e <= d componentwise).
inline long long generic_grass_dim(const Quiver& q, const DimVector& e, const DimVector& d) {
    if (!dim_leq(e, d)) throw dimension_error("generic_grass_dim: e exceeds d");
    return euler_form(q, e, dim_sub(d, e));
}

}  // namespace qgdf
