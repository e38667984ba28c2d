#include "doctest.h"

#include <map>

#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/lie.hpp"

using namespace twistcode;

namespace {

std::map<std::string, long> et_map(int q, int t) {
    std::map<std::string, long> m;
    for (const auto& [r, mult] : decompose_ffstar_power(q, t)) m[r.display_name] = mult;
    return m;
}

std::map<std::string, long> as_map(const std::vector<std::pair<std::string, long>>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("haar norms via hook lengths") {
    CHECK(haar_norm(2, 0) == 1);
    CHECK(haar_norm(2, 1) == 1);
    CHECK(haar_norm(2, 2) == 2);
    CHECK(haar_norm(2, 3) == 5);
    CHECK(haar_norm(2, 4) == 14);
    CHECK(haar_norm(2, 5) == 42);
    CHECK(haar_norm(3, 3) == 6);
}

TEST_CASE("U(2) tensor power decompositions from the paper") {
    CHECK(et_map(2, 1) == std::map<std::string, long>{{"1", 1}, {"3", 1}});
    CHECK(et_map(2, 2) == std::map<std::string, long>{{"1", 2}, {"3", 3}, {"5", 1}});
    CHECK(et_map(2, 3) == std::map<std::string, long>{{"1", 5}, {"3", 9}, {"5", 5}, {"7", 1}});
    // E_t for U(2) is exactly the odd ladder
    for (int t = 1; t <= 6; ++t) {
        auto m = et_map(2, t);
        CHECK(static_cast<int>(m.size()) == t + 1);
        for (int k = 0; k <= t; ++k) CHECK(m.count(std::to_string(2 * k + 1)) == 1);
    }
}

TEST_CASE("U(3) tensor power decompositions from the supplement") {
    CHECK(et_map(3, 1) == std::map<std::string, long>{{"1", 1}, {"8", 1}});
    CHECK(et_map(3, 2) ==
          std::map<std::string, long>{{"1", 2}, {"8", 4}, {"10", 1}, {"10b", 1}, {"27", 1}});
    CHECK(et_map(3, 3) ==
          std::map<std::string, long>{{"1", 6}, {"8", 17}, {"10", 7}, {"10b", 7}, {"27", 9},
                                      {"35", 2}, {"35b", 2}, {"64", 1}});
    CHECK(et_map(3, 4) ==
          std::map<std::string, long>{{"1", 23}, {"8", 80}, {"10", 42}, {"10b", 42},
                                      {"27", 63}, {"28", 2}, {"28b", 2}, {"35", 23},
                                      {"35b", 23}, {"64", 16}, {"81", 3}, {"81b", 3},
                                      {"125", 1}});
}

TEST_CASE("norm identities tie E_t multiplicities to haar norms") {
    for (int q : {2, 3}) {
        // multiplicity of the trivial irrep in E_t is ||F^t||
        for (int t = 0; t <= 4; ++t) {
            long m1 = 0, sumsq = 0;
            for (const auto& [r, m] : decompose_ffstar_power(q, t)) {
                if (r.display_name == "1") m1 = m;
                sumsq += m * m;
            }
            CHECK(m1 == haar_norm(q, t));
            // ||(FF*)^t|| = sum of squared multiplicities = ||F^{2t}||
            if (2 * t <= 6) CHECK(sumsq == haar_norm(q, 2 * t));
        }
    }
}

TEST_CASE("F (x) F* is trivial plus the adjoint") {
    for (int q : {2, 3}) {
        auto e1 = decompose_ffstar_power(q, 1);
        REQUIRE(e1.size() == 2);
        CHECK(e1[0].first.dimension == 1);
        CHECK(e1[1].first.dimension == q * q - 1);
    }
}

TEST_CASE("UIrrep conjugation is an involution with bar-name swap") {
    for (int q : {2, 3})
        for (int t = 1; t <= 4; ++t)
            for (const auto& [r, m] : decompose_ffstar_power(q, t)) {
                auto c = conjugate(r);
                CHECK(conjugate(c) == r);
                CHECK(c.dimension == r.dimension);
                if (q == 3 && r.barred) CHECK(!c.barred);
            }
}

TEST_CASE("exact eigenvalues snap and validate") {
    const auto& b = bundled_group("2I");
    const auto& g = *b.group;
    // identity
    auto e0 = exact_eigenvalues(g, 0);
    CHECK(e0 == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
    // -identity sits alone in the order-2 class
    for (int c = 0; c < g.num_classes(); ++c) {
        if (g.class_order(c) != 2) continue;
        auto em = exact_eigenvalues(g, g.class_reps()[static_cast<std::size_t>(c)]);
        CHECK(em == std::vector<Cyclotomic>{Cyclotomic(-1), Cyclotomic(-1)});
    }
    // the order-5 class with trace z5 + z5^4 has exactly those eigenvalues
    auto golden = Cyclotomic::parse("z5+z5^4");
    for (int c = 0; c < g.num_classes(); ++c) {
        if (g.class_order(c) != 5 || g.class_trace(c) != golden) continue;
        auto e5 = exact_eigenvalues(g, g.class_reps()[static_cast<std::size_t>(c)]);
        CHECK(e5 == std::vector<Cyclotomic>{Cyclotomic::root(5, 1), Cyclotomic::root(5, 4)});
    }
}

TEST_CASE("branching rules reproduce Table S2 rows") {
    const auto& b = bundled_group("2I");
    auto R = [&](int dim) { return make_uirrep(2, {dim - 1, 0}, 0); };
    CHECK(as_map(branch(R(1), b.group, b.table)) == std::map<std::string, long>{{"chi1", 1}});
    CHECK(as_map(branch(R(3), b.group, b.table)) == std::map<std::string, long>{{"chi5", 1}});
    CHECK(as_map(branch(R(7), b.group, b.table)) ==
          std::map<std::string, long>{{"chi4", 1}, {"chi6", 1}});
}

TEST_CASE("branching rules reproduce Table S4 rows") {
    const auto& b = bundled_group("sigma360");
    auto R8 = make_uirrep(3, {2, 1, 0}, -1);
    CHECK(as_map(branch(R8, b.group, b.table)) == std::map<std::string, long>{{"chi10", 1}});
    auto R125 = make_uirrep(3, {8, 4, 0}, -4);
    CHECK(as_map(branch(R125, b.group, b.table)) ==
          std::map<std::string, long>{{"chi1", 1}, {"chi6", 2}, {"chi7", 2}, {"chi10", 3},
                                      {"chi11", 3}, {"chi12", 4}, {"chi15", 2}});
}

TEST_CASE("unsupported ranks are rejected") {
    CHECK_THROWS_AS(decompose_ffstar_power(4, 1), Error);
    CHECK_THROWS_AS(decompose_ffstar_power(2, 7), Error);
}
