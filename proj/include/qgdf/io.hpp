#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgdf/errors.hpp"
#include "qgdf/rep.hpp"

namespace qgdf {

using nlohmann::json;

/// Accepts a JSON integer or a string "p", "-p", "p/q".
inline Rat rational_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(Int(s));
            Int den(s.substr(slash + 1));
            if (den.is_zero()) throw input_error("rational with zero denominator: " + s);
            return Rat(Int(s.substr(0, slash)), den);
        }
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational entry: " + j.dump());
    }
    throw input_error("rational entry must be an integer or a \"p/q\" string");
}

inline json rational_to_json(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    if (den == 1 && num >= INT64_MIN && num <= INT64_MAX)
        return json(num.convert_to<std::int64_t>());
    if (den == 1) return json(num.str());
    return json(num.str() + "/" + den.str());
}

/// Representation file: {"vertices": n, "arrows": [[s,t],...], "dims": [...],
/// "matrices": [[[row],...],...], "summands": [{"label", "basis": {v: [i]}}]}.
/// All vertex numbers and basis indices are 1-based.
inline Rep<Rat> rep_from_json(const json& j) {
    if (!j.is_object()) throw input_error("representation file must be a JSON object");
    for (const char* key : {"vertices", "arrows", "dims", "matrices"})
        if (!j.contains(key))
            throw input_error(std::string("representation file missing \"") + key + "\"");

    int n = 0;
    try {
        n = j.at("vertices").get<int>();
    } catch (const std::exception&) {
        throw input_error("\"vertices\" must be an integer");
    }
    std::vector<Arrow> arrows;
    for (const auto& pair : j.at("arrows")) {
        if (!pair.is_array() || pair.size() != 2)
            throw input_error("each arrow must be a [source, target] pair");
        int s = pair[0].get<int>(), t = pair[1].get<int>();
        if (s < 1 || s > n || t < 1 || t > n)
            throw input_error("arrow endpoint out of range (vertices are 1-based)");
        arrows.push_back({s - 1, t - 1});
    }
    Rep<Rat> rep{Quiver(n, std::move(arrows)), {}, {}, {}};
    for (const auto& d : j.at("dims")) rep.dims.push_back(d.get<int>());
    check_dim_vector(rep.quiver, rep.dims, "rep dims");

    const auto& mats = j.at("matrices");
    if (mats.size() != rep.quiver.arrows().size())
        throw input_error("\"matrices\" must have one entry per arrow");
    for (std::size_t a = 0; a < mats.size(); ++a) {
        const auto& arr = rep.quiver.arrows()[a];
        std::size_t rows = (std::size_t)rep.dims[arr.target];
        std::size_t cols = (std::size_t)rep.dims[arr.source];
        if (mats[a].size() != rows)
            throw input_error("matrix " + std::to_string(a + 1) + " has the wrong row count");
        Matrix<Rat> m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (mats[a][r].size() != cols)
                throw input_error("matrix " + std::to_string(a + 1) + " has a ragged row");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(mats[a][r][c]);
        }
        rep.matrices.push_back(std::move(m));
    }

    if (j.contains("summands")) {
        for (const auto& sj : j.at("summands")) {
            Summand s;
            s.label = sj.at("label").get<std::string>();
            s.basis.assign(n, {});
            for (const auto& [key, indices] : sj.at("basis").items()) {
                int v = 0;
                try {
                    v = std::stoi(key);
                } catch (const std::exception&) {
                    throw input_error("summand basis key must be a vertex number: " + key);
                }
                if (v < 1 || v > n) throw input_error("summand basis vertex out of range");
                for (const auto& idx : indices) {
                    int i = idx.get<int>();
                    if (i < 1) throw input_error("summand basis indices are 1-based");
                    s.basis[v - 1].push_back(i - 1);
                }
            }
            rep.summands.push_back(std::move(s));
        }
    }
    rep.validate();
    return rep;
}

inline json rep_to_json(const Rep<Rat>& rep) {
    rep.validate();
    json j;
    j["vertices"] = rep.quiver.vertex_count();
    j["arrows"] = json::array();
    for (const auto& a : rep.quiver.arrows()) j["arrows"].push_back({a.source + 1, a.target + 1});
    j["dims"] = rep.dims;
    j["matrices"] = json::array();
    for (const auto& m : rep.matrices) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
            rows.push_back(std::move(row));
        }
        j["matrices"].push_back(std::move(rows));
    }
    if (!rep.summands.empty()) {
        j["summands"] = json::array();
        for (const auto& s : rep.summands) {
            json sj;
            sj["label"] = s.label;
            sj["basis"] = json::object();
            for (int v = 0; v < rep.quiver.vertex_count(); ++v) {
                if (s.basis[v].empty()) continue;
                json indices = json::array();
                for (int i : s.basis[v]) indices.push_back(i + 1);
                sj["basis"][std::to_string(v + 1)] = std::move(indices);
            }
            j["summands"].push_back(std::move(sj));
        }
    }
    return j;
}

inline Rep<Rat> read_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open representation file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return rep_from_json(j);
}

/// Subspace file: {"columns": [per vertex, list of columns, each a list of
/// dims[v] rational entries]}. An empty list means the zero subspace there.
inline SubrepBasis<Rat> subrep_from_json(const json& j, const Rep<Rat>& m) {
    if (!j.is_object() || !j.contains("columns"))
        throw input_error("subspace file must be an object with \"columns\"");
    const auto& cols = j.at("columns");
    if ((int)cols.size() != m.quiver.vertex_count())
        throw input_error("\"columns\" must have one entry per vertex");
    SubrepBasis<Rat> u;
    for (int v = 0; v < m.quiver.vertex_count(); ++v) {
        Matrix<Rat> mat((std::size_t)m.dims[v], cols[v].size());
        for (std::size_t c = 0; c < cols[v].size(); ++c) {
            if ((int)cols[v][c].size() != m.dims[v])
                throw input_error("subspace column length must equal the vertex dimension");
            for (int r = 0; r < m.dims[v]; ++r) mat(r, c) = rational_from_json(cols[v][c][r]);
        }
        u.columns.push_back(std::move(mat));
    }
    return u;
}

inline SubrepBasis<Rat> read_subrep_file(const std::string& path, const Rep<Rat>& m) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open subspace file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("invalid JSON in " + path + ": " + e.what());
    }
    return subrep_from_json(j, m);
}

}  // namespace qgdf
