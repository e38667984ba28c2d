#include "doctest.h"

#include "twistcode/codes.hpp"
#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"

using namespace twistcode;

namespace {

CodeSpace build_code(const GroupBundle& b, const std::string& lambda, int n,
                     const CodeParams& params = {}) {
    auto rep = twisted_rep_for(b, lambda);
    auto homs = hom_basis(b, rep, n, params);
    REQUIRE(!homs.empty());
    return code_from_hom(homs.front(), b, rep, n, params);
}

} // namespace

TEST_CASE("identity automorphism reproduces the fundamental") {
    const auto& b = bundled_group("2I");
    auto rep = galois_twist_rep(b, "chi2", 1);
    CHECK(rep.automorphism == 1);
    CHECK((rep.mats[0] - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("the chi3 twist of 2I exists and matches the table column") {
    const auto& b = bundled_group("2I");
    auto hits = find_twist_automorphisms(b, "chi3");
    REQUIRE(!hits.empty());
    // zeta5 -> zeta5^2 or its inverse square both send the golden pair across
    for (long k : hits) CHECK((k % 5 == 2 || k % 5 == 3));
    CHECK(hits == std::vector<long>{3, 7, 13, 17});
    CHECK_NOTHROW(static_cast<void>(galois_twist_rep(b, "chi3", hits.front())));
}

TEST_CASE("the chi4 twist of Sigma(360phi) is found by search") {
    const auto& b = bundled_group("sigma360");
    auto hits = find_twist_automorphisms(b, "chi4");
    CHECK(hits == std::vector<long>{2, 8}); // zeta15 -> zeta15^2 or zeta15^8
    auto rep = galois_twist_rep(b, "chi4", hits.front());
    CHECK(rep.dim == 3);
}

TEST_CASE("isotypic projector traces match exact multiplicities") {
    const auto& b = bundled_group("2I");
    auto lam = b.table.by_name("chi3").character;
    auto P7 = isotypic_projector(b, lam, 7);
    CHECK(std::abs(P7.trace().real() - 2.0) < 1e-9);
    auto P9 = isotypic_projector(b, lam, 9);
    CHECK(std::abs(P9.trace().real() - 16.0) < 1e-9);
    // no trivial component inside one copy of an irreducible nontrivial rep
    auto P0 = isotypic_projector(b, b.table.by_name("chi1").character, 1);
    CHECK(P0.norm() < 1e-10);
}

TEST_CASE("hom basis sizes equal the exact multiplicities") {
    const auto& b2 = bundled_group("2I");
    auto rep3 = twisted_rep_for(b2, "chi3");
    CHECK(hom_basis(b2, rep3, 7).size() == 1);
    CHECK(hom_basis(b2, rep3, 9).size() == 8);
    CHECK(hom_basis(b2, rep3, 6).empty()); // chi3 lives only in odd powers

    const auto& bs = bundled_group("sigma360");
    auto rep4 = twisted_rep_for(bs, "chi4");
    CHECK(hom_basis(bs, rep4, 5).size() == 1);
}

TEST_CASE("code_from_hom produces an isometry, stable under scaling") {
    const auto& b = bundled_group("2I");
    auto rep = twisted_rep_for(b, "chi3");
    auto homs = hom_basis(b, rep, 7);
    auto code = code_from_hom(homs.front(), b, rep, 7);
    CHECK(code.isometry.rows() == 128);
    CHECK(code.isometry.cols() == 2);
    CHECK((code.isometry.adjoint() * code.isometry - Eigen::MatrixXcd::Identity(2, 2)).norm() <
          1e-9);
    auto scaled = code_from_hom(3.7 * homs.front(), b, rep, 7);
    CHECK((code.isometry * code.isometry.adjoint() -
           scaled.isometry * scaled.isometry.adjoint())
              .norm() < 1e-9);
    CHECK_THROWS_AS(code_from_hom(0.0 * homs.front(), b, rep, 7), Error);
}

TEST_CASE("7-qubit 2I code: KL at t=2, distance 3, transversal gates") {
    const auto& b = bundled_group("2I");
    auto rep = twisted_rep_for(b, "chi3");
    auto code = build_code(b, "chi3", 7);

    auto kl = kl_check(code, 2);
    CHECK(kl.verdict);
    CHECK(kl.errors_checked == 210);
    CHECK(kl.max_residual < 1e-7);

    auto dist = measure_distance(code, 4);
    CHECK(dist.exact);
    CHECK(dist.d == 3);

    auto tv = transversal_check(code, rep, b);
    CHECK(tv.max_deviation < 1e-8);
    CHECK(tv.max_commutator < 1e-8);

    // weight-0 identity error is degenerate with c_E = 1
    auto id_entry = kl_single(code, ErrorOperator{});
    CHECK(std::abs(id_entry.c_e - std::complex<double>(1.0, 0.0)) < 1e-10);
    CHECK(id_entry.residual < 1e-10);
}

TEST_CASE("5-qutrit Sigma(360phi) chi4 code: KL at t=1, distance 2, transversal") {
    const auto& b = bundled_group("sigma360");
    auto rep = twisted_rep_for(b, "chi4");
    auto code = build_code(b, "chi4", 5);
    CHECK(code.isometry.rows() == 243);
    CHECK(code.isometry.cols() == 3);

    auto kl = kl_check(code, 1);
    CHECK(kl.verdict);
    CHECK(kl.errors_checked == 40);

    auto dist = measure_distance(code, 3);
    CHECK(dist.exact);
    CHECK(dist.d == 2);

    auto tv = transversal_check(code, rep, b);
    CHECK(tv.max_deviation < 1e-8);
    CHECK(tv.max_commutator < 1e-8);
}

TEST_CASE("hom span equals the projector range") {
    const auto& b = bundled_group("2I");
    auto rep = twisted_rep_for(b, "chi3");
    auto homs = hom_basis(b, rep, 7);
    auto P = isotypic_projector(b, b.table.by_name("chi3").character, 7);
    CHECK(projector_hom_angle(P, homs) < 1e-7);
}

TEST_CASE("KL degeneracy: nonzero c_E needs a trivial isotypic component") {
    const auto& b = bundled_group("2I");
    auto code = build_code(b, "chi3", 7);
    for (int w = 1; w <= 2; ++w)
        for_each_error(7, 2, w, [&](const ErrorOperator& e) {
            auto entry = kl_single(code, e);
            if (std::abs(entry.c_e) > 1e-8)
                CHECK(trivial_component_norm(b, e, 7) > 1e-6);
        });
    // single-site Paulis sit entirely in the adjoint isotypic: c_E must vanish
    for_each_error(7, 2, 1, [&](const ErrorOperator& e) {
        CHECK(trivial_component_norm(b, e, 7) < 1e-6);
        CHECK(std::abs(kl_single(code, e).c_e) < 1e-8);
    });
}

TEST_CASE("error enumeration counts the full Pauli basis") {
    long count = 0;
    for_each_error(7, 2, 2, [&](const ErrorOperator&) { ++count; });
    CHECK(count == 189); // C(7,2) * 3^2
    count = 0;
    for_each_error(5, 3, 1, [&](const ErrorOperator&) { ++count; });
    CHECK(count == 40); // 5 * 8
}

TEST_CASE("dimension cap is enforced") {
    const auto& b = bundled_group("sigma360");
    auto rep = twisted_rep_for(b, "chi3");
    CodeParams p;
    p.dim_cap = 2048;
    CHECK_THROWS_AS(hom_basis(b, rep, 7, p), Error); // 3^7 = 2187 > 2048
}

TEST_CASE("JSON exports carry the documented fields") {
    const auto& b = bundled_group("2I");
    auto code = build_code(b, "chi3", 7);
    auto js = code_to_json(code);
    CHECK(js.find("\"schema_version\"") != std::string::npos);
    CHECK(js.find("\"isometry_row_major\"") != std::string::npos);
    auto kl = kl_check(code, 1);
    auto ks = kl_to_json(kl, measure_distance(code, 3));
    CHECK(ks.find("\"distance\": 3") != std::string::npos);
}
