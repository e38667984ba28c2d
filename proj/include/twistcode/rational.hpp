#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace twistcode {

// Exact arbitrary-precision rationals. Character inner products must come out
// as exact integers, so there is no floating point anywhere on this layer.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    return mpz_get_si(mpq_numref(r.get_mpq_t()));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::size_t hash_value(const Rational& r) {
    // FNV-style limb hash; exact values only, no embedding involved.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    const mpz_srcptr num = mpq_numref(r.get_mpq_t());
    const mpz_srcptr den = mpq_denref(r.get_mpq_t());
    mix(static_cast<std::size_t>(mpz_sgn(num)) + 7);
    for (std::size_t i = 0; i < mpz_size(num); ++i)
        mix(static_cast<std::size_t>(mpz_getlimbn(num, static_cast<mp_size_t>(i))));
    for (std::size_t i = 0; i < mpz_size(den); ++i)
        mix(static_cast<std::size_t>(mpz_getlimbn(den, static_cast<mp_size_t>(i))));
    return h;
}

} // namespace twistcode
