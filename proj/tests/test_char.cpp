#include "doctest.h"

#include <map>
#include <random>

#include "twistcode/char_theory.hpp"
#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"

using namespace twistcode;

namespace {

std::map<std::string, long> as_map(const std::vector<std::pair<std::string, long>>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("2I norm ladder matches the GAP snippet") {
    const auto& b = bundled_group("2I");
    auto f = b.table.by_name("chi2").character;
    auto lam = b.table.by_name("chi3").character;
    CHECK(norm(b.table.by_name("chi1").character) == 1);
    CHECK(norm(lam) == 1);
    CHECK(norm(tensor(lam, f)) == 1);
    CHECK(norm(tensor(lam, power(f, 2))) == 2);
    CHECK(norm(tensor(lam, power(f, 3))) == 6);
}

TEST_CASE("Sigma(360phi) norm ladder matches the GAP snippet") {
    const auto& b = bundled_group("sigma360");
    auto f = b.table.by_name("chi2").character;
    for (const char* lname : {"chi3", "chi4"}) {
        auto lam = b.table.by_name(lname).character;
        CHECK(norm(tensor(lam, f)) == 1);
        CHECK(norm(tensor(lam, power(f, 2))) == 3);
    }
}

TEST_CASE("multiplicities of the code irreps") {
    const auto& b2 = bundled_group("2I");
    auto f = b2.table.by_name("chi2").character;
    auto lam = b2.table.by_name("chi3").character;
    CHECK(integer_inner_product(lam, power(f, 7)) == 1);
    CHECK(integer_inner_product(lam, power(f, 9)) == 8);

    const auto& bs = bundled_group("sigma360");
    auto fs = bs.table.by_name("chi2").character;
    CHECK(integer_inner_product(bs.table.by_name("chi4").character, power(fs, 5)) == 1);
}

TEST_CASE("identity value of a tensor square is the squared degree") {
    const auto& b = bundled_group("2I");
    auto f = b.table.by_name("chi2").character;
    auto sq = tensor(f, conjugate(f));
    CHECK(sq.at_identity() == Cyclotomic(4));
}

TEST_CASE("decompositions against the loaded tables") {
    const auto& b2 = bundled_group("2I");
    auto lam = b2.table.by_name("chi3").character;
    auto dec = as_map(decompose(tensor(lam, conjugate(lam)), b2.table));
    CHECK(dec == std::map<std::string, long>{{"chi1", 1}, {"chi4", 1}});

    auto f = b2.table.by_name("chi2").character;
    long total = 0;
    for (auto& [name, m] : decompose(power(f, 2), b2.table))
        total += m * b2.table.by_name(name).degree;
    CHECK(total == 4);

    const auto& bs = bundled_group("sigma360");
    auto lam3 = bs.table.by_name("chi3").character;
    auto decs = as_map(decompose(tensor(lam3, conjugate(lam3)), bs.table));
    CHECK(decs == std::map<std::string, long>{{"chi1", 1}, {"chi11", 1}});
}

TEST_CASE("characters can move across the inner product") {
    for (const char* gname : {"2I", "sigma360"}) {
        const auto& b = bundled_group(gname);
        auto f = b.fundamental_character();
        auto one = trivial_character(b.group);
        for (int t = 0; t <= 5; ++t) {
            auto ft = power(f, t);
            auto ffbar_t = power(tensor(f, conjugate(f)), t);
            CHECK(inner_product(one, ffbar_t) == inner_product(ft, ft));
        }
    }
}

TEST_CASE("decomposition reconstructs random character products exactly") {
    const auto& b = bundled_group("2I");
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        ClassFunction prod = trivial_character(b.group);
        const int factors = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < factors; ++i) {
            const auto& ir = b.table.irreps()[rng() % b.table.size()];
            prod = tensor(prod, ir.character);
        }
        auto dec = decompose(prod, b.table); // throws unless exact
        long dim = 0;
        for (auto& [name, m] : dec) dim += m * b.table.by_name(name).degree;
        CHECK(Cyclotomic(dim) == prod.at_identity());
    }
}

TEST_CASE("group mismatch is rejected") {
    const auto& a = bundled_group("2I");
    const auto& b = bundled_group("sigma360");
    CHECK_THROWS_AS(inner_product(a.table.by_name("chi1").character,
                                  b.table.by_name("chi1").character),
                    Error);
}

TEST_CASE("class sizes sum to the group order") {
    for (const char* gname : {"2I", "sigma360"}) {
        const auto& g = *bundled_group(gname).group;
        long total = 0;
        for (long s : g.class_sizes()) total += s;
        CHECK(total == g.size());
    }
}
