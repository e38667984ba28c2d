#include "doctest.h"

#include <algorithm>
#include <set>

#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/group.hpp"

using namespace twistcode;

namespace {

CycMatrix identity2() { return CycMatrix::identity(2); }

std::multiset<long> size_multiset(const FiniteMatrixGroup& g) {
    return {g.class_sizes().begin(), g.class_sizes().end()};
}

} // namespace

TEST_CASE("trivial group enumerates to order 1") {
    auto g = FiniteMatrixGroup::enumerate({identity2()});
    CHECK(g.size() == 1);
    CHECK(g.num_classes() == 1);
    CHECK(g.class_sizes()[0] == 1);
    CHECK(g.element_order(0) == 1);
}

TEST_CASE("quaternion group from i,j matrices") {
    CycMatrix mi(2, 2), mj(2, 2);
    mi.at(0, 0) = Cyclotomic::root(4);
    mi.at(1, 1) = Cyclotomic::root(4, 3);
    mj.at(0, 1) = Cyclotomic(1);
    mj.at(1, 0) = Cyclotomic(-1);
    auto g = FiniteMatrixGroup::enumerate({mi, mj});
    CHECK(g.size() == 8);
    CHECK(g.num_classes() == 5);
    // orders: 1, 2, 4, 4, 4
    std::multiset<long> orders;
    for (int c = 0; c < g.num_classes(); ++c) orders.insert(g.class_order(c));
    CHECK(orders == std::multiset<long>{1, 2, 4, 4, 4});
}

TEST_CASE("non-unitary generator is rejected") {
    CycMatrix bad(2, 2);
    bad.at(0, 0) = Cyclotomic(2);
    bad.at(1, 1) = Cyclotomic(1);
    CHECK_THROWS_AS(FiniteMatrixGroup::enumerate({bad}), Error);
}

TEST_CASE("cap exceeded raises a cap error") {
    const auto& b = bundled_group("2I");
    std::vector<CycMatrix> gens;
    for (int i : b.group->generator_indices()) gens.push_back(b.group->element(i).matrix);
    CHECK_THROWS_WITH_AS(static_cast<void>(FiniteMatrixGroup::enumerate(gens, 50)),
                         doctest::Contains("cap"), Error);
}

TEST_CASE("bundled 2I has the paper's class structure") {
    const auto& b = bundled_group("2I");
    const auto& g = *b.group;
    CHECK(g.size() == 120);
    CHECK(g.num_classes() == 9);
    CHECK(size_multiset(g) == std::multiset<long>{1, 12, 12, 20, 30, 20, 12, 1, 12});
    // identity is alone in its class
    CHECK(g.class_sizes()[0] == 1);
    CHECK(g.class_order(0) == 1);
    // each class size divides |G|; orders are constant on classes
    for (int c = 0; c < g.num_classes(); ++c) {
        CHECK(g.size() % g.class_sizes()[static_cast<std::size_t>(c)] == 0);
        const long o = g.class_order(c);
        for (int m : g.classes()[static_cast<std::size_t>(c)]) CHECK(g.element_order(m) == o);
    }
}

TEST_CASE("bundled Sigma(360phi) has the paper's class structure") {
    const auto& b = bundled_group("sigma360");
    const auto& g = *b.group;
    CHECK(g.size() == 1080);
    CHECK(g.num_classes() == 17);
    CHECK(size_multiset(g) ==
          std::multiset<long>{1, 1, 1, 45, 45, 45, 120, 120, 90, 90, 90, 72, 72, 72, 72, 72, 72});
}

TEST_CASE("closure, inverses and products are consistent") {
    const auto& g = *bundled_group("2I").group;
    for (int i : {0, 1, 7, 33, 100}) {
        const int inv = g.inverse(i);
        CHECK(g.product(i, inv) == 0);
        CHECK(g.product(inv, i) == 0);
        CHECK(g.element(i).matrix.is_unitary());
    }
    // conjugation stays inside the class
    for (int i : {5, 42, 77})
        for (int h : {1, 2, 3}) {
            int conj = g.product(g.product(h, i), g.inverse(h));
            CHECK(g.class_of(conj) == g.class_of(i));
        }
}
