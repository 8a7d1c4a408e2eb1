#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "qgdf/errors.hpp"
#include "qgdf/scalar.hpp"

namespace qgdf {

/// Dense integer polynomial in one variable q; coefficients low-to-high.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
    static IntPoly one() { return constant(1); }
    /// q^k
    static IntPoly monomial(std::size_t k) {
        std::vector<Int> c(k + 1, 0);
        c[k] = 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long long degree() const { return (long long)c_.size() - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(c));
    }
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Exact division; throws invariant_violation on a nonzero remainder.
    IntPoly divide_exact(const IntPoly& divisor) const {
        if (divisor.is_zero()) throw invariant_violation("division by zero polynomial");
        if (is_zero()) return IntPoly();
        std::vector<Int> rem = c_;
        std::vector<Int> quot(c_.size(), 0);
        long long dd = divisor.degree();
        const Int& lead = divisor.c_.back();
        for (long long k = degree() - dd; k >= 0; --k) {
            Int num = rem[k + dd];
            if (num.is_zero()) continue;
            if (num % lead != 0)
                throw invariant_violation("polynomial division is not exact");
            Int q = num / lead;
            quot[k] = q;
            for (long long j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
        }
        for (const auto& r : rem)
            if (!r.is_zero()) throw invariant_violation("polynomial division is not exact");
        return IntPoly(std::move(quot));
    }

    /// Horner evaluation at an integer point.
    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            Int a = c_[k];
            if (!first) out << (a > 0 ? " + " : " - ");
            else if (a < 0) out << "-";
            first = false;
            Int mag = abs(a);
            if (k == 0 || mag != 1) out << mag.str();
            if (k >= 1) {
                if (mag != 1) out << "*";
                out << "q";
                if (k >= 2) out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// q-factorial in the cyclotomic-positive normalization
/// prod_{m=1..k} (1 + q + ... + q^{m-1}); ratios of these match the
/// (1-q)-product convention, so q-binomials are unaffected.
inline IntPoly q_factorial(int k) {
    if (k < 0) throw input_error("q_factorial of a negative integer");
    IntPoly out = IntPoly::one();
    for (int m = 1; m <= k; ++m) {
        std::vector<Int> factor(m, 1);
        out *= IntPoly(std::move(factor));
    }
    return out;
}

/// Gaussian binomial; zero when N < M, N < 0 or M < 0.
inline IntPoly q_binomial(int n, int m) {
    if (n < m || n < 0 || m < 0) return IntPoly();
    return q_factorial(n).divide_exact(q_factorial(m) * q_factorial(n - m));
}

inline Int eval_int(const IntPoly& p, const Int& x) { return p.eval(x); }

}  // namespace qgdf
