#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "qgdf/errors.hpp"

namespace qgdf {

// Arbitrary-precision integers and rationals. All rank decisions in the
// library are made over exact fields; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Int& x) { return x.is_zero(); }

/// Residue mod a prime p, with p carried alongside the value.
///
/// A default-constructed Fp is the zero of an unspecified modulus; it adopts
/// the modulus of the other operand on first use, so generic matrix code can
/// write `Fp(0)` without knowing p.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v) : v_(v) {}  // modulus-less integer, normalized on use
    Fp(std::int64_t v, std::int64_t p) : v_(v), p_(p) { normalize(); }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b) { return combine(a, b, a.v_ + b.v_); }
    friend Fp operator-(Fp a, Fp b) { return combine(a, b, a.v_ - b.v_); }
    friend Fp operator*(Fp a, Fp b) { return combine(a, b, a.v_ * b.v_); }
    friend Fp operator/(Fp a, Fp b) {
        std::int64_t p = merged_modulus(a, b);
        if (p == 0) {
            // 1 and -1 are their own inverses over every modulus
            if (b.v_ == 1) return a;
            if (b.v_ == -1) return -a;
            throw config_error("Fp division requires a known modulus");
        }
        b = Fp(b.v_, p);
        if (b.v_ == 0) throw invariant_violation("division by zero in F_p");
        return Fp(a.v_ * inverse(b.v_, p), p);
    }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    friend bool operator==(Fp a, Fp b) {
        std::int64_t p = merged_modulus(a, b);
        if (p == 0) return a.v_ == b.v_;
        return Fp(a.v_, p).v_ == Fp(b.v_, p).v_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
    static std::int64_t merged_modulus(Fp a, Fp b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw config_error("mixed moduli in F_p arithmetic");
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    static Fp combine(Fp a, Fp b, std::int64_t raw) {
        return Fp(raw, merged_modulus(a, b));
    }
    static std::int64_t inverse(std::int64_t a, std::int64_t p) {
        // extended Euclid; p prime
        std::int64_t t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            std::int64_t quot = r / nr;
            t -= quot * nt;
            std::swap(t, nt);
            r -= quot * nr;
            std::swap(r, nr);
        }
        if (r != 1) throw invariant_violation("non-invertible element in F_p");
        return ((t % p) + p) % p;
    }
    void normalize() {
        if (p_ != 0) {
            v_ %= p_;
            if (v_ < 0) v_ += p_;
        }
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

inline bool is_zero(const Fp& x) {
    return x == Fp(0);
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace qgdf
