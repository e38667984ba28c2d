#include "twistcode/acceptance.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twistcode/codes.hpp"
#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/tgroup.hpp"

namespace twistcode {

namespace {

using Dec = std::map<std::string, long>;

Dec as_map(const std::vector<std::pair<std::string, long>>& v) { return {v.begin(), v.end()}; }

Dec et_map(int q, int t) {
    Dec m;
    for (const auto& [r, mult] : decompose_ffstar_power(q, t)) m[r.display_name] = mult;
    return m;
}

std::string dec_str(const Dec& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : d) {
        if (!first) os << " ";
        os << k << ":" << v;
        first = false;
    }
    return os.str();
}

struct Runner {
    std::string data_dir;
    std::vector<CriterionResult> results;

    const GroupBundle& g2i() { return bundled_group("2I", data_dir); }
    const GroupBundle& gsigma() { return bundled_group("sigma360", data_dir); }

    void criterion(int id, const std::string& label, const std::function<std::string()>& body) {
        CriterionResult r;
        r.id = id;
        r.label = label;
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error::validation(msg);
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& data_dir) {
    Runner R;
    R.data_dir = data_dir;

    R.criterion(1, "group structure of 2I and Sigma(360phi)", [&] {
        const auto& a = *R.g2i().group;
        require(a.size() == 120, "|2I| != 120");
        std::multiset<long> sa(a.class_sizes().begin(), a.class_sizes().end());
        require(sa == std::multiset<long>{1, 12, 12, 20, 30, 20, 12, 1, 12},
                "2I class sizes mismatch");
        const auto& b = *R.gsigma().group;
        require(b.size() == 1080, "|Sigma(360phi)| != 1080");
        std::multiset<long> sb(b.class_sizes().begin(), b.class_sizes().end());
        require(sb == std::multiset<long>{1, 1, 1, 45, 45, 45, 120, 120, 90, 90, 90,
                                          72, 72, 72, 72, 72, 72},
                "Sigma class sizes mismatch");
        return "|2I|=120 with 9 classes, |Sigma|=1080 with 17 classes";
    });

    R.criterion(2, "2I norm ladder ||chi3 chi2^t|| = 1, 2, 6", [&] {
        const auto& b = R.g2i();
        auto f = b.table.by_name("chi2").character;
        auto lam = b.table.by_name("chi3").character;
        long n1 = norm(tensor(lam, f));
        long n2 = norm(tensor(lam, power(f, 2)));
        long n3 = norm(tensor(lam, power(f, 3)));
        require(n1 == 1 && n2 == 2 && n3 == 6, "got " + std::to_string(n1) + "," +
                                                   std::to_string(n2) + "," + std::to_string(n3));
        return "1, 2, 6 exact";
    });

    R.criterion(3, "Sigma norm ladder for chi3 and chi4", [&] {
        const auto& b = R.gsigma();
        auto f = b.table.by_name("chi2").character;
        for (const char* ln : {"chi3", "chi4"}) {
            auto lam = b.table.by_name(ln).character;
            require(norm(tensor(lam, f)) == 1, std::string(ln) + ": ||lam f|| != 1");
            require(norm(tensor(lam, power(f, 2))) == 3, std::string(ln) + ": ||lam f^2|| != 3");
        }
        return "1, 3 exact for both twists";
    });

    R.criterion(4, "haar norms and E_t multiplicity cross-checks", [&] {
        const long expect2[] = {1, 2, 5, 14, 42};
        for (int t = 1; t <= 5; ++t)
            require(haar_norm(2, t) == expect2[t - 1], "haar_norm(2," + std::to_string(t) + ")");
        require(haar_norm(3, 3) == 6, "haar_norm(3,3) != 6");
        for (int q : {2, 3})
            for (int t = 1; t <= 4; ++t) {
                long m1 = 0, sumsq = 0;
                for (const auto& [r, m] : decompose_ffstar_power(q, t)) {
                    if (r.display_name == "1") m1 = m;
                    sumsq += m * m;
                }
                require(m1 == haar_norm(q, t), "trivial multiplicity of E_t != ||F^t||");
                if (2 * t <= 6)
                    require(sumsq == haar_norm(q, 2 * t), "sum m_R^2 != ||F^{2t}||");
            }
        return "1,2,5,14,42; haar(3,3)=6; m_1(E_t)=||F^t|| and sum m^2=||F^2t||";
    });

    R.criterion(5, "t-group verdicts with both criteria agreeing", [&] {
        const auto& b2 = R.g2i();
        TGroupChecker c2(b2.group, b2.fundamental_character());
        require(c2.unitary(5).verdict, "2I not a unitary 5-group");
        require(!c2.unitary(6).verdict, "2I is not supposed to be a 6-group");
        auto lam = b2.table.by_name("chi3").character;
        require(c2.twisted(lam, "chi3", 2).verdict, "2I not chi3-twisted 2-group");
        require(!c2.twisted(lam, "chi3", 3).verdict, "2I must fail twisted t=3");
        const auto& bs = R.gsigma();
        TGroupChecker cs(bs.group, bs.fundamental_character());
        require(cs.unitary(3).verdict, "Sigma not a unitary 3-group");
        for (const char* ln : {"chi3", "chi4"}) {
            auto l = bs.table.by_name(ln).character;
            require(cs.twisted(l, ln, 1).verdict, std::string(ln) + "-twisted 1-group fails");
            require(!cs.twisted(l, ln, 2).verdict, std::string(ln) + " must fail twisted t=2");
        }
        return "2I: 5-group, chi3-twisted 2-group; Sigma: 3-group, chi3/chi4-twisted 1-group";
    });

    R.criterion(6, "U(q) tensor power decompositions", [&] {
        require(et_map(2, 1) == Dec{{"1", 1}, {"3", 1}}, "E_1 of U(2)");
        require(et_map(2, 2) == Dec{{"1", 2}, {"3", 3}, {"5", 1}}, "E_2 of U(2)");
        require(et_map(2, 3) == Dec{{"1", 5}, {"3", 9}, {"5", 5}, {"7", 1}}, "E_3 of U(2)");
        require(et_map(3, 1) == Dec{{"1", 1}, {"8", 1}}, "E_1 of U(3)");
        require(et_map(3, 2) == Dec{{"1", 2}, {"8", 4}, {"10", 1}, {"10b", 1}, {"27", 1}},
                "E_2 of U(3)");
        require(et_map(3, 3) == Dec{{"1", 6}, {"8", 17}, {"10", 7}, {"10b", 7}, {"27", 9},
                                    {"35", 2}, {"35b", 2}, {"64", 1}},
                "E_3 of U(3)");
        require(et_map(3, 4) == Dec{{"1", 23}, {"8", 80}, {"10", 42}, {"10b", 42}, {"27", 63},
                                    {"28", 2}, {"28b", 2}, {"35", 23}, {"35b", 23}, {"64", 16},
                                    {"81", 3}, {"81b", 3}, {"125", 1}},
                "E_4 of U(3)");
        return "U(2) t=1..3 and U(3) t=1..4 all exact";
    });

    R.criterion(7, "branching tables S2 and S4", [&] {
        const auto& b2 = R.g2i();
        const std::vector<std::pair<int, Dec>> s2 = {
            {1, {{"chi1", 1}}},
            {3, {{"chi5", 1}}},
            {5, {{"chi8", 1}}},
            {7, {{"chi4", 1}, {"chi6", 1}}},
            {9, {{"chi6", 1}, {"chi8", 1}}},
            {11, {{"chi4", 1}, {"chi5", 1}, {"chi8", 1}}},
            {13, {{"chi1", 1}, {"chi5", 1}, {"chi6", 1}, {"chi8", 1}}},
            {15, {{"chi4", 1}, {"chi5", 1}, {"chi6", 1}, {"chi8", 1}}},
            {17, {{"chi4", 1}, {"chi6", 1}, {"chi8", 2}}},
            {19, {{"chi4", 1}, {"chi5", 1}, {"chi6", 2}, {"chi8", 1}}},
            {21, {{"chi1", 1}, {"chi4", 1}, {"chi5", 1}, {"chi6", 1}, {"chi8", 2}}},
        };
        for (const auto& [dim, expect] : s2) {
            auto got = as_map(branch(make_uirrep(2, {dim - 1, 0}, 0), b2.group, b2.table));
            require(got == expect, "S2 row " + std::to_string(dim) + ": got " + dec_str(got));
        }
        const auto& bs = R.gsigma();
        const std::vector<std::tuple<std::vector<long>, long, Dec>> s4 = {
            {{0, 0, 0}, 0, {{"chi1", 1}}},
            {{2, 1, 0}, -1, {{"chi10", 1}}},
            {{3, 0, 0}, -1, {{"chi15", 1}}},
            {{3, 3, 0}, -2, {{"chi15", 1}}},
            {{4, 2, 0}, -2, {{"chi6", 1}, {"chi7", 1}, {"chi11", 1}, {"chi12", 1}}},
            {{5, 1, 0}, -2, {{"chi10", 1}, {"chi11", 1}, {"chi12", 1}, {"chi15", 1}}},
            {{5, 4, 0}, -3, {{"chi10", 1}, {"chi11", 1}, {"chi12", 1}, {"chi15", 1}}},
            {{6, 3, 0}, -3, {{"chi6", 1}, {"chi7", 1}, {"chi10", 1}, {"chi11", 1},
                             {"chi12", 2}, {"chi15", 2}}},
            {{6, 0, 0}, -2, {{"chi1", 1}, {"chi6", 1}, {"chi7", 1}, {"chi10", 1}, {"chi12", 1}}},
            {{6, 6, 0}, -4, {{"chi1", 1}, {"chi6", 1}, {"chi7", 1}, {"chi10", 1}, {"chi12", 1}}},
            {{7, 2, 0}, -3, {{"chi6", 1}, {"chi7", 1}, {"chi10", 2}, {"chi11", 2},
                             {"chi12", 1}, {"chi15", 3}}},
            {{7, 5, 0}, -4, {{"chi6", 1}, {"chi7", 1}, {"chi10", 2}, {"chi11", 2},
                             {"chi12", 1}, {"chi15", 3}}},
            {{8, 4, 0}, -4, {{"chi1", 1}, {"chi6", 2}, {"chi7", 2}, {"chi10", 3}, {"chi11", 3},
                             {"chi12", 4}, {"chi15", 2}}},
        };
        for (const auto& [part, twist, expect] : s4) {
            auto r = make_uirrep(3, part, twist);
            auto got = as_map(branch(r, bs.group, bs.table));
            require(got == expect, "S4 row " + r.display_name + ": got " + dec_str(got));
        }
        return "11 rows of S2 and 13 rows of S4 exact";
    });

    R.criterion(8, "GAP multiplicity tables over n = 1..21", [&] {
        const auto& b2 = R.g2i();
        auto f2 = b2.table.by_name("chi2").character;
        auto l2 = b2.table.by_name("chi3").character;
        const std::map<int, long> expect2 = {{7, 1},   {9, 8},     {11, 44},   {13, 209},
                                             {15, 924}, {17, 3928}, {19, 16321}, {21, 66880}};
        for (int n = 1; n <= 21; ++n) {
            long m = integer_inner_product(l2, power(f2, n));
            auto it = expect2.find(n);
            require(m == (it == expect2.end() ? 0 : it->second),
                    "2I chi3 multiplicity at n=" + std::to_string(n) + " got " + std::to_string(m));
        }
        const auto& bs = R.gsigma();
        auto fs = bs.table.by_name("chi2").character;
        const std::map<int, long> expect3 = {{7, 15}, {10, 477}, {13, 13222},
                                             {16, 358450}, {19, 9684357}};
        const std::map<int, long> expect4 = {{5, 1},      {8, 49},       {11, 1452},
                                             {14, 39754}, {17, 1075727}, {20, 29054667}};
        auto l3 = bs.table.by_name("chi3").character;
        auto l4 = bs.table.by_name("chi4").character;
        for (int n = 1; n <= 21; ++n) {
            long m3 = integer_inner_product(l3, power(fs, n));
            auto it3 = expect3.find(n);
            require(m3 == (it3 == expect3.end() ? 0 : it3->second),
                    "Sigma chi3 multiplicity at n=" + std::to_string(n));
            long m4 = integer_inner_product(l4, power(fs, n));
            auto it4 = expect4.find(n);
            require(m4 == (it4 == expect4.end() ? 0 : it4->second),
                    "Sigma chi4 multiplicity at n=" + std::to_string(n));
        }
        return "all multiplicities exact, including n=20 -> 29054667; zeros elsewhere";
    });

    R.criterion(9, "7-qubit 2I chi3 code: projector, KL, distance 3, transversal", [&] {
        const auto& b = R.g2i();
        CodeParams params;
        auto lam = b.table.by_name("chi3").character;
        auto P = isotypic_projector(b, lam, 7, params);
        require(std::abs(P.trace().real() - 2.0) <= 1e-9, "trace(P) != 2");
        auto rep = twisted_rep_for(b, "chi3");
        auto homs = hom_basis(b, rep, 7, params);
        require(homs.size() == 1, "hom basis size != 1");
        auto code = code_from_hom(homs.front(), b, rep, 7, params);
        require((code.isometry.adjoint() * code.isometry -
                 Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-9,
                "V^dag V != I within 1e-9");
        auto kl = kl_check(code, 2, params);
        require(kl.errors_checked == 210, "expected 210 weight<=2 errors");
        require(kl.verdict && kl.max_residual <= 1e-7, "KL residuals exceed 1e-7");
        auto dist = measure_distance(code, 4, params);
        require(dist.exact && dist.d == 3, "distance != 3");
        auto tv = transversal_check(code, rep, b);
        require(tv.max_deviation < 1e-8, "transversal deviation >= 1e-8");
        std::ostringstream os;
        os << "trace(P)=2, unique code, 210 errors pass (max residual " << kl.max_residual
           << "), d=3, transversal dev " << tv.max_deviation;
        return os.str();
    });

    R.criterion(10, "5-qutrit Sigma chi4 code: KL, distance 2, transversal", [&] {
        const auto& b = R.gsigma();
        CodeParams params;
        auto rep = twisted_rep_for(b, "chi4");
        auto homs = hom_basis(b, rep, 5, params);
        require(homs.size() == 1, "hom basis size != 1");
        auto code = code_from_hom(homs.front(), b, rep, 5, params);
        auto kl = kl_check(code, 1, params);
        require(kl.errors_checked == 40, "expected 40 weight-1 errors");
        require(kl.verdict && kl.max_residual <= 1e-7, "KL residuals exceed 1e-7");
        auto dist = measure_distance(code, 3, params);
        require(dist.exact && dist.d == 2, "distance != 2");
        auto tv = transversal_check(code, rep, b);
        require(tv.max_deviation < 1e-8, "transversal deviation >= 1e-8");
        std::ostringstream os;
        os << "unique code, 40 errors pass, d=2, transversal dev " << tv.max_deviation;
        return os.str();
    });

    R.criterion(11, "9-qubit moduli space: dimension 8, seeds differ, d >= 3", [&] {
        const auto& b = R.g2i();
        auto rep = twisted_rep_for(b, "chi3");
        CodeParams p0;
        p0.seed = 0;
        auto homs = hom_basis(b, rep, 9, p0);
        require(homs.size() == 8, "hom basis size != 8 (CP^7 claim)");
        auto code0 = code_from_hom(homs.front(), b, rep, 9, p0);
        CodeParams p1;
        p1.seed = 1;
        auto homs1 = hom_basis(b, rep, 9, p1);
        auto code1 = code_from_hom(homs1.front(), b, rep, 9, p1);
        const double image_gap = (code0.isometry * code0.isometry.adjoint() -
                                  code1.isometry * code1.isometry.adjoint())
                                     .norm();
        require(image_gap > 1e-6, "seeds 0 and 1 give the same image");
        for (const auto* code : {&code0, &code1}) {
            auto dist = measure_distance(*code, 3);
            require(dist.d >= 3, "moduli point has distance < 3");
        }
        std::ostringstream os;
        os << "dim Hom = 8, image gap " << image_gap << ", both points have d = 3";
        return os.str();
    });

    R.criterion(12, "property suite: criteria equivalence, reconstruction, degeneracy", [&] {
        // Lemma-ladder equivalence across every bundled irrep, t <= 4;
        // TGroupChecker::run throws on any disagreement.
        for (const char* gname : {"2I", "sigma360"}) {
            const auto& b = bundled_group(gname, R.data_dir);
            TGroupChecker chk(b.group, b.fundamental_character());
            for (const auto& ir : b.table.irreps())
                for (int t = 1; t <= 4; ++t)
                    static_cast<void>(chk.twisted(ir.character, ir.name, t));
        }
        // exact reconstruction of 100 random character products
        std::mt19937_64 rng(7777);
        for (int trial = 0; trial < 100; ++trial) {
            const auto& b = (trial % 2 == 0) ? R.g2i() : R.gsigma();
            ClassFunction prod = trivial_character(b.group);
            const int factors = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < factors; ++i)
                prod = tensor(prod, b.table.irreps()[rng() % b.table.size()].character);
            static_cast<void>(decompose(prod, b.table)); // throws unless exact
        }
        // c_E = 0 whenever the error has no trivial isotypic component
        const auto& b2 = R.g2i();
        auto rep2 = twisted_rep_for(b2, "chi3");
        auto code2 = code_from_hom(hom_basis(b2, rep2, 7).front(), b2, rep2, 7);
        long degenerate = 0;
        for (int w = 1; w <= 2; ++w)
            for_each_error(7, 2, w, [&](const ErrorOperator& e) {
                auto entry = kl_single(code2, e);
                if (trivial_component_norm(b2, e, 7) < 1e-6)
                    require(std::abs(entry.c_e) <= 1e-7,
                            "nontrivial-irrep error has c_E != 0: " + e.id());
                else
                    ++degenerate;
            });
        const auto& bs = R.gsigma();
        auto rep4 = twisted_rep_for(bs, "chi4");
        auto code4 = code_from_hom(hom_basis(bs, rep4, 5).front(), bs, rep4, 5);
        for_each_error(5, 3, 1, [&](const ErrorOperator& e) {
            if (trivial_component_norm(bs, e, 5) < 1e-6)
                require(std::abs(kl_single(code4, e).c_e) <= 1e-7,
                        "nontrivial-irrep error has c_E != 0: " + e.id());
        });
        std::ostringstream os;
        os << "criteria agree on all (G, lambda, t<=4); 100 reconstructions exact; "
           << "c_E = 0 off the trivial component (" << degenerate << " degenerate errors)";
        return os.str();
    });

    return R.results;
}

} // namespace twistcode
