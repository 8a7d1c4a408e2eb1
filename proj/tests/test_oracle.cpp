#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "qgdf/cells.hpp"
#include "qgdf/oracle.hpp"
#include "qgdf/poincare.hpp"
#include "qgdf/typea.hpp"
#include "testutil.hpp"

using namespace qgdf;
using testutil::d4;
using testutil::thin_rep;

namespace {

Rep<Rat> labeled_thin(const Quiver& q, const DimVector& supp, const std::string& label) {
    Rep<Rat> r = thin_rep(q, supp);
    Summand s;
    s.label = label;
    s.basis.assign(q.vertex_count(), {});
    for (int v = 0; v < q.vertex_count(); ++v)
        if (supp[v]) s.basis[v].push_back(0);
    r.summands.push_back(std::move(s));
    return r;
}

/// Gr_{(1,2,1,1)}(I_3 + I_4) on D_4, a projective line.
Rep<Rat> d4_line() {
    return direct_sum(labeled_thin(d4(), {1, 1, 1, 0}, "I3:1"),
                      labeled_thin(d4(), {1, 1, 0, 1}, "I4:1"));
}

std::string key_of(const Matrix<Fp>& m) {
    std::string k;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) k += std::to_string(m(r, c).value()) + ",";
    return k;
}

}  // namespace

TEST_CASE("subspace enumeration over small fields") {
    CHECK(enumerate_subspaces_fq(3, 1, 2).size() == 7);
    CHECK(enumerate_subspaces_fq(4, 2, 2).size() == 35);
    CHECK(enumerate_subspaces_fq(4, 0, 3).size() == 1);
    CHECK(enumerate_subspaces_fq(4, 4, 5).size() == 1);
    CHECK_THROWS_AS(enumerate_subspaces_fq(2, 3, 2), dimension_error);
    CHECK_THROWS_AS(enumerate_subspaces_fq(2, 1, 9), config_error);
    for (int d = 0; d <= 5; ++d)
        for (int k = 0; k <= d; ++k)
            for (std::int64_t p : {2, 3}) {
                auto spaces = enumerate_subspaces_fq(d, k, p);
                CHECK(Int((long long)spaces.size()) == eval_int(q_binomial(d, k), p));
                std::set<std::string> seen;
                for (const auto& s : spaces) {
                    CHECK(s.rank() == (std::size_t)k);
                    CHECK(seen.insert(key_of(s)).second);
                }
            }
}

TEST_CASE("reduce_mod handles rational entries") {
    Rep<Rat> m = thin_rep(Quiver::type_a(2), {1, 1});
    m.matrices[0](0, 0) = Rat(1, 3);
    Rep<Fp> r = reduce_mod(m, 5);
    CHECK(r.matrices[0](0, 0) == Fp(2, 5));  // 3 * 2 = 6 = 1 mod 5
    CHECK_THROWS_AS(reduce_mod(m, 3), config_error);
    CHECK_THROWS_AS(reduce_mod(m, 4), input_error);
}

TEST_CASE("point counts match the Poincare polynomial on a complete flag") {
    PIConfig cfg = PIConfig::complete_flag(2);
    Rep<Fp> m = reduce_mod(build_pi(cfg), 2);
    OracleResult res = count_subreps_fq(m, cfg.dim_p(), 2);
    CHECK(res.total == 25);  // 1 + 2q + 3q^2 + q^3 at q = 2
    CHECK(res.total == eval_int(poincare_x(cfg), 2));
    CHECK(res.candidates > 0);
}

TEST_CASE("trivial dimension vectors") {
    PIConfig cfg = PIConfig::complete_flag(2);
    Rep<Fp> m = reduce_mod(build_pi(cfg), 2);
    DimVector zero(2, 0);
    CHECK(count_subreps_fq(m, zero, 2).total == 1);
    CHECK(count_subreps_fq(m, m.dims, 2).total == 1);
    CHECK_THROWS_AS(count_subreps_fq(m, {4, 4}, 2), dimension_error);
}

TEST_CASE("a projective line on D_4 has q + 1 points") {
    Rep<Rat> m = d4_line();
    DimVector e{1, 2, 1, 1};
    CHECK(count_subreps_fq(reduce_mod(m, 2), e, 2).total == 3);
    CHECK(count_subreps_fq(reduce_mod(m, 3), e, 3).total == 4);
}

TEST_CASE("point counts agree with the cell polynomial on D_4") {
    Rep<Rat> m = d4_line();
    DimVector e{1, 2, 1, 1};
    DegreeAssignment deg = generic_degrees(m);
    IntPoly cells = cell_polynomial(m, deg, e);
    CHECK(cells == IntPoly({1, 1}));
    for (std::int64_t p : {2, 3, 5})
        CHECK(count_subreps_fq(reduce_mod(m, p), e, p).total == eval_int(cells, p));
}

TEST_CASE("per-stratum counts factor through the fibration") {
    PIConfig cfg = PIConfig::complete_flag(2);
    const std::int64_t p = 2;
    Rep<Fp> m = reduce_mod(build_pi(cfg), p);
    DimVector e = cfg.dim_p();
    OracleResult res = count_subreps_fq(m, e, p);
    Int sum = 0;
    for (const auto& [f, c] : res.by_stratum) sum += c;
    CHECK(sum == res.total);
    DimVector di = cfg.dim_i();
    for (int f1 = 0; f1 <= std::min(e[0], di[0]); ++f1)
        for (int f2 = 0; f2 <= std::min(e[1], di[1]); ++f2) {
            DimVector f{f1, f2};
            DimVector g{e[0] - f1, e[1] - f2};
            Int expected = Int(1) << strata_fiber_dim(cfg, f);
            expected *= eval_int(poincare_proj(cfg.a, g), p);
            expected *= eval_int(poincare_inj(cfg.b, f), p);
            auto it = res.by_stratum.find(f);
            Int got = it == res.by_stratum.end() ? Int(0) : it->second;
            CHECK(got == expected);
        }
}

TEST_CASE("listing yields arrow-stable bases consistent with the counts") {
    PIConfig cfg = PIConfig::complete_flag(2);
    const std::int64_t p = 2;
    Rep<Fp> m = reduce_mod(build_pi(cfg), p);
    auto points = list_subreps_fq(m, cfg.dim_p(), p);
    CHECK(points.size() == 25);
    std::map<DimVector, Int> strata;
    for (const auto& u : points) {
        CHECK(is_arrow_stable(m, u));
        strata[stratum_of(m, u)] += 1;
    }
    OracleResult res = count_subreps_fq(m, cfg.dim_p(), p);
    CHECK(strata == res.by_stratum);
}

TEST_CASE("the F_2 fast path agrees with the generic field path") {
    Rep<Rat> m = d4_line();
    DimVector e{1, 2, 1, 1};
    OracleResult counted = count_subreps_fq(reduce_mod(m, 2), e, 2);  // mask engine
    auto listed = list_subreps_fq(reduce_mod(m, 2), e, 2);            // generic engine
    CHECK(counted.total == Int((long long)listed.size()));
}

TEST_CASE("threaded counting matches single-threaded counting") {
    PIConfig cfg = PIConfig::complete_flag(3);
    for (std::int64_t p : {2, 3}) {
        Rep<Fp> m = reduce_mod(build_pi(cfg), p);
        OracleOptions two;
        two.threads = 2;
        OracleResult a = count_subreps_fq(m, cfg.dim_p(), p);
        OracleResult b = count_subreps_fq(m, cfg.dim_p(), p, two);
        CHECK(a.total == b.total);
        CHECK(a.by_stratum == b.by_stratum);
        CHECK(a.total == eval_int(poincare_x(cfg), p));
    }
}

TEST_CASE("the budget guards the raw enumeration size upfront") {
    PIConfig cfg = PIConfig::complete_flag(2);
    Rep<Fp> m = reduce_mod(build_pi(cfg), 2);
    OracleOptions tight;
    tight.budget = 2;
    try {
        count_subreps_fq(m, cfg.dim_p(), 2, tight);
        FAIL("expected a resource error");
    } catch (const resource_error& e) {
        // 7 choices at each of the two vertices
        CHECK(std::string(e.what()).find("49") != std::string::npos);
        CHECK(std::string(e.what()).find("budget 2") != std::string::npos);
    }
    OracleOptions bad;
    bad.budget = 0;
    CHECK_THROWS_AS(count_subreps_fq(m, cfg.dim_p(), 2, bad), input_error);
}

TEST_CASE("field order is restricted to small primes") {
    PIConfig cfg = PIConfig::complete_flag(1);
    Rep<Rat> m = build_pi(cfg);
    CHECK(count_subreps_fq(reduce_mod(m, 7), cfg.dim_p(), 7).total == 8);
    CHECK_THROWS_AS(count_subreps_fq(reduce_mod(m, 7), cfg.dim_p(), 11), config_error);
    CHECK_THROWS_AS(count_subreps_fq(reduce_mod(m, 7), cfg.dim_p(), 9), config_error);
    CHECK_THROWS_AS(list_subreps_fq(reduce_mod(m, 7), cfg.dim_p(), 1), config_error);
}
