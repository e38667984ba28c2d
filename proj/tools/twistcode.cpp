// twistcode: decide (twisted) unitary t-group status for finite matrix
// groups, build the associated quantum codes, and verify them.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "twistcode/acceptance.hpp"
#include "twistcode/codes.hpp"
#include "twistcode/data_io.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/tgroup.hpp"

using namespace twistcode;
using nlohmann::json;

namespace {

// All defaults in one place; every field has a flag and a TWISTCODE_* env var.
struct CliConfig {
    std::string data_dir;
    std::string format = "text";
    std::uint64_t seed = 0;
    long dim_cap = 2048;
    long group_cap = FiniteMatrixGroup::kDefaultCap;
    double tol_kl = 1e-7;
    double tol_transversal = 1e-8;
    double tol_isometry = 1e-9;
    double tol_equivariance = 1e-8;
    std::string out_file;
};

CodeParams code_params(const CliConfig& cfg) {
    CodeParams p;
    p.dim_cap = cfg.dim_cap;
    p.seed = cfg.seed;
    p.tol_kl = cfg.tol_kl;
    p.tol_transversal = cfg.tol_transversal;
    p.tol_isometry = cfg.tol_isometry;
    p.tol_equivariance = cfg.tol_equivariance;
    return p;
}

json alignment_json(const GroupBundle& b) {
    json a = json::array();
    for (int c = 0; c < b.group->num_classes(); ++c)
        a.push_back({{"class", c},
                     {"order", b.group->class_order(c)},
                     {"size", b.group->class_sizes()[static_cast<std::size_t>(c)]},
                     {"trace", b.group->class_trace(c).to_string()},
                     {"table_column", b.class_to_column[static_cast<std::size_t>(c)]}});
    return a;
}

json header_json(const GroupBundle& b) {
    return {{"schema_version", 1},
            {"group", b.group->name()},
            {"order", b.group->size()},
            {"degree", b.group->degree()},
            {"classes", b.group->num_classes()},
            {"fundamental", b.fundamental},
            {"class_alignment", alignment_json(b)}};
}

void print_header(const GroupBundle& b) {
    std::printf("group %s: |G| = %d, degree %d, %d classes, fundamental %s\n",
                b.group->name().c_str(), b.group->size(), b.group->degree(),
                b.group->num_classes(), b.fundamental.c_str());
    std::printf("class -> table column alignment:");
    for (int c = 0; c < b.group->num_classes(); ++c)
        std::printf(" %d->%d", c, b.class_to_column[static_cast<std::size_t>(c)]);
    std::printf("\n");
}

void emit(const CliConfig& cfg, const json& payload) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.out_file.empty()) {
        file.open(cfg.out_file);
        if (!file) throw Error::invalid("cannot open output file " + cfg.out_file);
        os = &file;
    }
    *os << payload.dump(2) << "\n";
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

json tgroup_report_json(const TGroupReport& rep) {
    json c2 = json::array();
    for (const auto& e : rep.criterion2)
        c2.push_back({{"irrep", e.irrep_name},
                      {"multiplicity", e.multiplicity_in_et},
                      {"overlap", e.overlap},
                      {"pass", e.pass}});
    return {{"t", rep.t},
            {"twisted_by", rep.twisted_by ? json(*rep.twisted_by) : json(nullptr)},
            {"criterion1", {{"lhs", rep.criterion1_lhs},
                            {"rhs", rep.criterion1_rhs},
                            {"pass", rep.criterion1_pass}}},
            {"criterion2", std::move(c2)},
            {"verdict", rep.verdict}};
}

void print_tgroup_report(const TGroupReport& rep) {
    std::printf("t = %d%s: ||%sf^t|| = %ld vs ||F^t|| = %ld (%s)\n", rep.t,
                rep.twisted_by ? (" twisted by " + *rep.twisted_by).c_str() : "",
                rep.twisted_by ? "lambda " : "", rep.criterion1_lhs, rep.criterion1_rhs,
                rep.criterion1_pass ? "match" : "mismatch");
    for (const auto& e : rep.criterion2)
        std::printf("  R = %-4s (x%ld in E_t): overlap %ld %s\n", e.irrep_name.c_str(),
                    e.multiplicity_in_et, e.overlap, e.pass ? "ok" : "VIOLATED");
    std::printf("verdict: %s\n", rep.verdict ? "yes" : "no");
}

int run(int argc, char** argv) {
    CLI::App app{"twisted unitary t-groups and their quantum codes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    CliConfig cfg;

    app.add_option("--data-dir", cfg.data_dir, "bundled data directory")
        ->envname("TWISTCODE_DATA_DIR");
    app.add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("TWISTCODE_FORMAT");
    app.add_option("--seed", cfg.seed, "probe seed for code construction")
        ->envname("TWISTCODE_SEED");
    app.add_option("--dim-cap", cfg.dim_cap, "cap on q^n for code spaces")
        ->envname("TWISTCODE_DIM_CAP");
    app.add_option("--group-cap", cfg.group_cap, "cap on group enumeration")
        ->envname("TWISTCODE_GROUP_CAP");
    app.add_option("--tol-kl", cfg.tol_kl, "KL residual tolerance")->envname("TWISTCODE_TOL_KL");
    app.add_option("--tol-transversal", cfg.tol_transversal, "transversal deviation tolerance")
        ->envname("TWISTCODE_TOL_TRANSVERSAL");
    app.add_option("--tol-isometry", cfg.tol_isometry, "isometry tolerance")
        ->envname("TWISTCODE_TOL_ISOMETRY");
    app.add_option("--tol-equivariance", cfg.tol_equivariance, "equivariance tolerance")
        ->envname("TWISTCODE_TOL_EQUIVARIANCE");

    std::string group_name, lambda_name, n_range = "1", partition_text;
    int t_arg = 1;
    long twist_arg = 0;
    int n_arg = 0;
    int distance_cap = 3;
    bool scan_max = false;

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", group_name, "bundled name (2I, sigma360) or group file")
            ->required();
    };

    CLI::App* c_classes = app.add_subcommand("classes", "conjugacy class structure");
    add_group(c_classes);

    CLI::App* c_norms = app.add_subcommand("norms", "||lambda f^t|| ladder");
    add_group(c_norms);
    c_norms->add_option("--lambda", lambda_name, "irrep name (default: trivial)");
    c_norms->add_option("--tmax", t_arg, "largest power")->default_val(3);

    CLI::App* c_tgroup = app.add_subcommand("tgroup", "unitary t-group check");
    add_group(c_tgroup);
    c_tgroup->add_option("--t", t_arg, "level to check")->default_val(1);
    c_tgroup->add_flag("--max", scan_max, "scan for the maximal t");

    CLI::App* c_twisted = app.add_subcommand("twisted", "twisted unitary t-group check");
    add_group(c_twisted);
    c_twisted->add_option("--lambda", lambda_name, "twisting irrep")->required();
    c_twisted->add_option("--t", t_arg, "level to check")->default_val(1);
    c_twisted->add_flag("--max", scan_max, "scan for the maximal t");

    CLI::App* c_mult = app.add_subcommand("multiplicities", "<lambda, f^n> over a range of n");
    add_group(c_mult);
    c_mult->add_option("--lambda", lambda_name, "logical irrep")->required();
    c_mult->add_option("--n", n_range, "n or n range, e.g. 1..13")->required();

    CLI::App* c_branch = app.add_subcommand("branch", "branch U(q) irreps down to G");
    add_group(c_branch);
    c_branch->add_option("--t", t_arg, "branch every R in E_t")->default_val(2);
    c_branch->add_option("--partition", partition_text, "single R, comma separated parts");
    c_branch->add_option("--twist", twist_arg, "det twist for --partition")->default_val(0);

    CLI::App* c_build = app.add_subcommand("build-code", "construct a code space");
    add_group(c_build);
    c_build->add_option("--lambda", lambda_name, "logical irrep")->required();
    c_build->add_option("--n", n_arg, "number of physical qudits")->required();
    c_build->add_option("--out", cfg.out_file, "write the code JSON here");

    CLI::App* c_verify = app.add_subcommand("verify", "build + KL + distance + transversal");
    add_group(c_verify);
    c_verify->add_option("--lambda", lambda_name, "logical irrep")->required();
    c_verify->add_option("--n", n_arg, "number of physical qudits")->required();
    c_verify->add_option("--t", t_arg, "KL weight to certify")->default_val(1);
    c_verify->add_option("--distance-cap", distance_cap, "search cap for the exact distance");
    c_verify->add_option("--out", cfg.out_file, "write the verification JSON here");

    CLI::App* c_repro = app.add_subcommand("reproduce-paper", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);
    const bool as_json = cfg.format == "json";

    if (app.got_subcommand(c_repro)) {
        auto results = run_acceptance(cfg.data_dir);
        int failures = 0;
        if (as_json) {
            json j = {{"schema_version", 1}, {"criteria", json::array()}};
            for (const auto& r : results) {
                j["criteria"].push_back(
                    {{"id", r.id}, {"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
                failures += r.pass ? 0 : 1;
            }
            j["pass"] = failures == 0;
            emit(cfg, j);
        } else {
            for (const auto& r : results) {
                std::printf("[%s] criterion %2d: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.label.c_str());
                std::printf("         %s\n", r.detail.c_str());
                failures += r.pass ? 0 : 1;
            }
        }
        return failures == 0 ? 0 : 1;
    }

    const GroupBundle& bundle = bundled_group(group_name, cfg.data_dir);
    if (!as_json) print_header(bundle);

    if (app.got_subcommand(c_classes)) {
        json rows = json::array();
        for (int c = 0; c < bundle.group->num_classes(); ++c)
            rows.push_back({{"class", c},
                            {"order", bundle.group->class_order(c)},
                            {"size", bundle.group->class_sizes()[static_cast<std::size_t>(c)]},
                            {"trace", bundle.group->class_trace(c).to_string()}});
        if (as_json) {
            emit(cfg, {{"header", header_json(bundle)}, {"classes", rows}});
        } else {
            for (const auto& r : rows)
                std::printf("class %2d: order %2ld size %4ld trace %s\n", r["class"].get<int>(),
                            r["order"].get<long>(), r["size"].get<long>(),
                            r["trace"].get<std::string>().c_str());
        }
        return 0;
    }

    if (app.got_subcommand(c_norms)) {
        auto f = bundle.fundamental_character();
        ClassFunction lam = lambda_name.empty() ? trivial_character(bundle.group)
                                                : bundle.table.by_name(lambda_name).character;
        json rows = json::array();
        for (int t = 1; t <= t_arg; ++t) {
            long v = norm(tensor(lam, power(f, t)));
            rows.push_back({{"t", t}, {"norm", v}});
            if (!as_json)
                std::printf("||%s * f^%d|| = %ld\n",
                            lambda_name.empty() ? "1" : lambda_name.c_str(), t, v);
        }
        if (as_json) emit(cfg, {{"header", header_json(bundle)}, {"norms", rows}});
        return 0;
    }

    if (app.got_subcommand(c_tgroup) || app.got_subcommand(c_twisted)) {
        TGroupChecker chk(bundle.group, bundle.fundamental_character());
        std::optional<ClassFunction> lam;
        if (app.got_subcommand(c_twisted))
            lam = bundle.table.by_name(lambda_name).character;
        if (scan_max) {
            int best = chk.max_t(lam, lambda_name, TGroupChecker::kMaxT);
            if (as_json)
                emit(cfg, {{"header", header_json(bundle)},
                           {"lambda", lambda_name.empty() ? json(nullptr) : json(lambda_name)},
                           {"max_t", best}});
            else
                std::printf("maximal t: %d\n", best);
            return 0;
        }
        TGroupReport rep = lam ? chk.twisted(*lam, lambda_name, t_arg) : chk.unitary(t_arg);
        if (as_json)
            emit(cfg, {{"header", header_json(bundle)}, {"report", tgroup_report_json(rep)}});
        else
            print_tgroup_report(rep);
        return rep.verdict ? 0 : 1;
    }

    if (app.got_subcommand(c_mult)) {
        auto [lo, hi] = parse_range(n_range);
        auto f = bundle.fundamental_character();
        auto lam = bundle.table.by_name(lambda_name).character;
        json rows = json::array();
        for (int n = lo; n <= hi; ++n) {
            long m = integer_inner_product(lam, power(f, n));
            rows.push_back({{"n", n}, {"multiplicity", m}});
            if (!as_json && m > 0) std::printf("n=%d:%ld\n", n, m);
        }
        if (as_json) emit(cfg, {{"header", header_json(bundle)}, {"multiplicities", rows}});
        return 0;
    }

    if (app.got_subcommand(c_branch)) {
        std::vector<UIrrep> targets;
        if (!partition_text.empty()) {
            std::vector<long> part;
            std::stringstream ss(partition_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) part.push_back(std::stol(tok));
            targets.push_back(make_uirrep(bundle.group->degree(), part, twist_arg));
        } else {
            for (const auto& [r, m] : decompose_ffstar_power(bundle.group->degree(), t_arg))
                targets.push_back(r);
        }
        json rows = json::array();
        for (const auto& r : targets) {
            auto dec = branch(r, bundle.group, bundle.table);
            json parts = json::array();
            std::ostringstream line;
            for (const auto& [name, m] : dec) {
                parts.push_back({{"irrep", name}, {"multiplicity", m}});
                if (line.tellp() > 0) line << " + ";
                if (m > 1) line << "(" << m << ")";
                line << name;
            }
            rows.push_back({{"R", r.display_name}, {"dimension", r.dimension},
                            {"branching", parts}});
            if (!as_json) std::printf("%-4s -> %s\n", r.display_name.c_str(), line.str().c_str());
        }
        if (as_json) emit(cfg, {{"header", header_json(bundle)}, {"rows", rows}});
        return 0;
    }

    if (app.got_subcommand(c_build) || app.got_subcommand(c_verify)) {
        CodeParams params = code_params(cfg);
        auto rep = twisted_rep_for(bundle, lambda_name);
        auto homs = hom_basis(bundle, rep, n_arg, params);
        if (homs.empty())
            throw Error::invalid("multiplicity of " + lambda_name + " in f^" +
                                 std::to_string(n_arg) + " is zero; no code exists");
        auto code = code_from_hom(homs.front(), bundle, rep, n_arg, params);

        if (app.got_subcommand(c_build)) {
            if (!as_json && cfg.out_file.empty()) {
                std::printf("code: %d qudits (q=%d), logical dim %ld, lambda %s, seed %llu\n",
                            code.n, code.q, code.logical_dim, code.lambda_name.c_str(),
                            static_cast<unsigned long long>(code.seed));
                std::printf("hom space dimension: %zu (moduli CP^%zu)\n", homs.size(),
                            homs.size() - 1);
            } else {
                std::ostream* os = &std::cout;
                std::ofstream file;
                if (!cfg.out_file.empty()) {
                    file.open(cfg.out_file);
                    if (!file) throw Error::invalid("cannot open " + cfg.out_file);
                    os = &file;
                }
                *os << code_to_json(code) << "\n";
                if (!cfg.out_file.empty())
                    std::printf("wrote code (%d qudits, logical dim %ld) to %s\n", code.n,
                                code.logical_dim, cfg.out_file.c_str());
            }
            return 0;
        }

        auto kl = kl_check(code, t_arg, params);
        auto dist = measure_distance(code, std::max(distance_cap, t_arg + 1), params);
        auto tv = transversal_check(code, rep, bundle);
        const bool pass = kl.verdict && dist.d >= t_arg + 1 &&
                          tv.max_deviation <= cfg.tol_transversal;
        json j = {{"header", header_json(bundle)},
                  {"code", {{"n", code.n}, {"q", code.q}, {"lambda", code.lambda_name},
                            {"logical_dim", code.logical_dim}, {"seed", code.seed},
                            {"hom_dimension", homs.size()}}},
                  {"kl", {{"t", kl.t_checked}, {"errors_checked", kl.errors_checked},
                          {"max_residual", kl.max_residual}, {"verdict", kl.verdict}}},
                  {"distance", dist.d},
                  {"distance_exact", dist.exact},
                  {"transversal", {{"max_deviation", tv.max_deviation},
                                   {"max_commutator", tv.max_commutator},
                                   {"phase_only", tv.phase_only}}},
                  {"verdict", pass ? "pass" : "fail"}};
        if (as_json || !cfg.out_file.empty()) {
            emit(cfg, j);
        } else {
            std::printf("KL t=%d: %ld errors, max residual %.3e, %s\n", kl.t_checked,
                        kl.errors_checked, kl.max_residual, kl.verdict ? "pass" : "FAIL");
            std::printf("distance: %s%d\n", dist.exact ? "" : ">= ", dist.d);
            std::printf("transversal deviation: %.3e (commutator %.3e)\n", tv.max_deviation,
                        tv.max_commutator);
            std::printf("verdict: %s\n", pass ? "pass" : "fail");
        }
        return pass ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind()) {
            case ErrorKind::Parse: return 2;
            case ErrorKind::Validation: return 3;
            case ErrorKind::CapExceeded: return 4;
            case ErrorKind::InternalConsistency: return 5;
            case ErrorKind::Numerical: return 6;
            case ErrorKind::InvalidArgument: return 7;
        }
        return 7;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 7;
    }
}
