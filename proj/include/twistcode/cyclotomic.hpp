#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistcode/rational.hpp"

namespace twistcode {

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Canonical form: the smallest conductor N containing the value (never
/// N == 2 mod 4, rationals have N == 1), with coordinates over the power
/// basis {zeta_N^0, ..., zeta_N^{phi(N)-1}} reduced modulo the N-th
/// cyclotomic polynomial. Two equal values always have identical
/// (conductor, coeffs), so exact hashing and equality are structural.
///
/// Values are immutable after construction; all operations are pure.
class Cyclotomic {
public:
    static constexpr long kDefaultConductorCap = 240;

    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(long v) : conductor_(1), coeffs_(1, Rational(v)) {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}

    /// zeta_n^k
    static Cyclotomic root(long n, long k = 1);

    /// Sum of raw terms c * zeta_conductor^exponent, reduced to canonical form.
    static Cyclotomic make(long conductor,
                           const std::vector<std::pair<long, Rational>>& terms);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    bool is_integer() const { return conductor_ == 1 && twistcode::is_integer(coeffs_[0]); }
    /// Requires is_rational().
    const Rational& rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// zeta -> zeta^{-1}; the complex conjugate.
    Cyclotomic conjugate() const;

    /// Field automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
    Cyclotomic galois(long k) const;

    /// Numerical value at zeta_N = exp(2 pi i / N).
    std::complex<double> embed() const;

    std::size_t hash() const;

    /// Literal syntax used by the data files, e.g. "-z5^4-z5", "3/2*z15^8+1".
    std::string to_string() const;
    static Cyclotomic parse(const std::string& text);

    /// Euler phi; exposed because callers size power bases with it.
    static long euler_phi(long n);

    /// Reduction data for one conductor: rows[j] holds the integer
    /// coefficients (length phi) of x^{phi + j} mod Phi_n. Shared registry,
    /// computed once per conductor.
    struct Reduction {
        long n = 1;
        long phi = 1;
        std::vector<std::vector<Integer>> rows;
    };
    static const Reduction& reduction_for(long n);

private:
    Cyclotomic(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    /// Lift to a multiple conductor m (no canonicalization).
    std::vector<Rational> lifted_coeffs(long m) const;

    /// Reduce raw polynomial coefficients (length up to n) mod Phi_n, then
    /// descend to the minimal conductor.
    static Cyclotomic canonical(long n, std::vector<Rational> raw);

    static void check_cap(long n);

    long conductor_;
    std::vector<Rational> coeffs_; // size phi(conductor_)
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& z) {
    return Cyclotomic(r) * z;
}

struct CyclotomicHash {
    std::size_t operator()(const Cyclotomic& z) const { return z.hash(); }
};

} // namespace twistcode
