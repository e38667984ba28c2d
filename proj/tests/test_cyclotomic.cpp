#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "twistcode/cyclotomic.hpp"
#include "twistcode/errors.hpp"

using twistcode::Cyclotomic;
using twistcode::Error;
using twistcode::Rational;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::root(n, k); }

// deterministic random values spread over a few conductors
Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
    static const long conductors[] = {1, 3, 4, 5, 8, 12, 15, 20};
    long n = conductors[rng() % 8];
    std::vector<std::pair<long, Rational>> terms;
    const int nt = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nt; ++i) {
        long e = static_cast<long>(rng() % static_cast<unsigned long>(n));
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 3);
        Rational c(num, den);
        c.canonicalize();
        terms.push_back({e, c});
    }
    return Cyclotomic::make(n, terms);
}

} // namespace

TEST_CASE("vanishing sum of fifth roots") {
    auto v = Cyclotomic::make(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(v.is_zero());
    CHECK(v.conductor() == 1);
}

TEST_CASE("zeta4 squared is -1, canonical at conductor 1") {
    auto v = Cyclotomic::make(4, {{2, 1}});
    CHECK(v == Cyclotomic(-1));
    CHECK(v.conductor() == 1);
}

TEST_CASE("golden section embedding") {
    auto v = Cyclotomic::make(5, {{1, 1}, {4, 1}});
    const double expect = 2.0 * std::cos(2.0 * M_PI / 5.0); // 0.6180339887...
    CHECK(std::abs(v.embed().real() - expect) < 1e-12);
    CHECK(std::abs(v.embed().imag()) < 1e-12);
    CHECK(std::abs(v.embed().real() - 0.6180339887) < 1e-9);
}

TEST_CASE("additive inverse cancels") {
    CHECK((z(5) + (-z(5))).is_zero());
}

TEST_CASE("mixed conductor product lands in Q(zeta15)") {
    auto p = z(3) * z(5);
    CHECK(p == z(15, 8));
    CHECK(p.conductor() == 15);
}

TEST_CASE("golden pair product") {
    auto a = Cyclotomic::make(5, {{1, 1}, {4, 1}});
    auto b = Cyclotomic::make(5, {{2, 1}, {3, 1}});
    CHECK(a * b == Cyclotomic(-1));
}

TEST_CASE("conjugation maps exponents to their negatives") {
    CHECK(z(5).conjugate() == z(5, 4));
    auto v = Cyclotomic::make(5, {{4, -1}, {1, -1}}); // -z5^4 - z5, real
    CHECK(v.conjugate() == v);
    CHECK(std::abs(v.embed().imag()) < 1e-15);
}

TEST_CASE("embed of zeta4 is the imaginary unit") {
    auto e = z(4).embed();
    CHECK(std::abs(e.real()) < 1e-15);
    CHECK(std::abs(e.imag() - 1.0) < 1e-15);
}

TEST_CASE("errors: invalid and oversized conductors") {
    CHECK_THROWS_AS(Cyclotomic::make(0, {{0, 1}}), Error);
    CHECK_THROWS_AS(z(7) * z(11) * z(13), Error); // lcm 1001 > 240
}

TEST_CASE("conductor descent finds minimal fields") {
    CHECK(z(15, 5) == z(3));         // zeta15^5 = zeta3
    CHECK(z(6).conductor() == 3);    // Q(zeta6) = Q(zeta3)
    CHECK(z(2) == Cyclotomic(-1));
    CHECK((z(20, 4)).conductor() == 5);
}

TEST_CASE("embedding is a ring homomorphism (random)") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        auto a = random_cyclotomic(rng);
        auto b = random_cyclotomic(rng);
        auto pe = (a * b).embed();
        auto se = (a + b).embed();
        CHECK(std::abs(pe - a.embed() * b.embed()) < 1e-10);
        CHECK(std::abs(se - (a.embed() + b.embed())) < 1e-10);
    }
}

TEST_CASE("canonical form is idempotent and conjugation is an involution") {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 200; ++i) {
        auto a = random_cyclotomic(rng);
        // rebuilding from own coefficients reproduces the value
        std::vector<std::pair<long, Rational>> terms;
        for (std::size_t j = 0; j < a.coeffs().size(); ++j)
            terms.push_back({static_cast<long>(j), a.coeffs()[j]});
        CHECK(Cyclotomic::make(a.conductor(), terms) == a);
        CHECK(a.conjugate().conjugate() == a);
        // |z|^2 is conjugation-fixed and embeds to a nonnegative real
        auto n = a * a.conjugate();
        CHECK(n.conjugate() == n);
        CHECK(n.embed().real() > -1e-12);
        CHECK(std::abs(n.embed().imag()) < 1e-12);
    }
}

TEST_CASE("literal parser round-trips the printer") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 200; ++i) {
        auto a = random_cyclotomic(rng);
        CHECK(Cyclotomic::parse(a.to_string()) == a);
    }
    // forms used by the bundled data files
    CHECK(Cyclotomic::parse("-z5^4-z5") == Cyclotomic::make(5, {{4, -1}, {1, -1}}));
    CHECK(Cyclotomic::parse("3/2*z15^8+1") ==
          Cyclotomic::make(15, {{8, Rational(3, 2)}}) + Cyclotomic(1));
    CHECK(Cyclotomic::parse(" - z5 ^ 4 - z5 ") == Cyclotomic::parse("-z5^4-z5"));
    CHECK(Cyclotomic::parse("1/2*z20^9") == Cyclotomic::make(20, {{9, Rational(1, 2)}}));
    CHECK_THROWS_AS(Cyclotomic::parse(""), Error);
    CHECK_THROWS_AS(Cyclotomic::parse("2*"), Error);
    CHECK_THROWS_AS(Cyclotomic::parse("z5^"), Error);
}

TEST_CASE("galois automorphisms permute roots") {
    CHECK(z(5).galois(2) == z(5, 2));
    auto phi = Cyclotomic::make(5, {{2, -1}, {3, -1}}); // golden ratio
    auto other = phi.galois(2);                         // 1 - phi
    CHECK(phi + other == Cyclotomic(1));
    CHECK_THROWS_AS(z(15).galois(3), Error);
}
