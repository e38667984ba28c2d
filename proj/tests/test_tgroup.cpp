#include "doctest.h"

#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/tgroup.hpp"

using namespace twistcode;

TEST_CASE("2I is a unitary 5-group but not a 6-group") {
    const auto& b = bundled_group("2I");
    TGroupChecker chk(b.group, b.fundamental_character());
    CHECK(chk.unitary(0).verdict);
    CHECK(chk.unitary(5).verdict);
    auto r6 = chk.unitary(6);
    CHECK(!r6.verdict);
    // the first violating R in E_6 is the 13 (Supplemental Example 1)
    for (const auto& e : r6.criterion2)
        if (!e.pass) {
            CHECK(e.irrep_name == "13");
            break;
        }
    CHECK(chk.max_t(std::nullopt, "", 6) == 5);
}

TEST_CASE("2I is a chi3-twisted 2-group but not a 3-group") {
    const auto& b = bundled_group("2I");
    TGroupChecker chk(b.group, b.fundamental_character());
    auto lam = b.table.by_name("chi3").character;
    CHECK(chk.twisted(lam, "chi3", 2).verdict);
    auto r3 = chk.twisted(lam, "chi3", 3);
    CHECK(!r3.verdict);
    CHECK(r3.criterion1_lhs == 6);
    CHECK(r3.criterion1_rhs == 5);
    CHECK(chk.max_t(lam, "chi3", 6) == 2);
}

TEST_CASE("Sigma(360phi) is a unitary 3-group and twisted 1-group for chi3 and chi4") {
    const auto& b = bundled_group("sigma360");
    TGroupChecker chk(b.group, b.fundamental_character());
    CHECK(chk.unitary(3).verdict);
    CHECK(!chk.unitary(4).verdict);
    CHECK(chk.max_t(std::nullopt, "", 6) == 3);
    for (const char* lname : {"chi3", "chi4"}) {
        auto lam = b.table.by_name(lname).character;
        CHECK(chk.twisted(lam, lname, 1).verdict);
        CHECK(!chk.twisted(lam, lname, 2).verdict);
        CHECK(chk.max_t(lam, lname, 4) == 1);
    }
}

TEST_CASE("trivial twist reduces to the plain notion") {
    const auto& b = bundled_group("2I");
    TGroupChecker chk(b.group, b.fundamental_character());
    auto one = b.table.by_name("chi1").character;
    for (int t = 1; t <= 6; ++t)
        CHECK(chk.twisted(one, "chi1", t).verdict == chk.unitary(t).verdict);
}

TEST_CASE("monotonicity in t") {
    const auto& b = bundled_group("2I");
    TGroupChecker chk(b.group, b.fundamental_character());
    bool passed_before = true;
    for (int t = 1; t <= 6; ++t) {
        bool v = chk.unitary(t).verdict;
        if (!passed_before) CHECK(!v);
        passed_before = v;
    }
}

TEST_CASE("criterion equivalence is asserted internally for every call") {
    // TGroupChecker::run throws if the two criteria ever disagree, so a sweep
    // over every bundled irrep is itself the property test.
    for (const char* gname : {"2I", "sigma360"}) {
        const auto& b = bundled_group(gname);
        TGroupChecker chk(b.group, b.fundamental_character());
        for (const auto& ir : b.table.irreps())
            for (int t = 1; t <= 3; ++t)
                CHECK_NOTHROW(static_cast<void>(chk.twisted(ir.character, ir.name, t)));
    }
}

TEST_CASE("weight normalization") {
    const auto& b = bundled_group("2I");
    CHECK(weight_check(b.table.by_name("chi1").character) == Rational(1));
    CHECK(weight_check(b.table.by_name("chi3").character) == Rational(1));
    auto reducible = tensor(trivial_character(b.group), b.table.by_name("chi2").character);
    reducible = ClassFunction{b.group, [&] {
        std::vector<Cyclotomic> v;
        auto a = b.table.by_name("chi2").character;
        auto c = b.table.by_name("chi3").character;
        for (std::size_t i = 0; i < a.values.size(); ++i) v.push_back(a.values[i] + c.values[i]);
        return v;
    }()};
    CHECK(weight_check(reducible) == Rational(2));
    TGroupChecker chk(b.group, b.fundamental_character());
    CHECK_THROWS_AS(chk.twisted(reducible, "chi2+chi3", 1), Error);
}

TEST_CASE("t outside the cap is rejected") {
    const auto& b = bundled_group("2I");
    TGroupChecker chk(b.group, b.fundamental_character());
    CHECK_THROWS_AS(chk.unitary(7), Error);
    CHECK_THROWS_AS(chk.max_t(std::nullopt, "", 9), Error);
}
