#include "twistcode/tgroup.hpp"

#include "twistcode/errors.hpp"

namespace twistcode {

TGroupChecker::TGroupChecker(GroupPtr group, ClassFunction f)
    : group_(group), f_(std::move(f)), cache_(group) {
    if (f_.group != group_) throw Error::invalid("embedding character bound to another group");
    const Cyclotomic& deg = f_.at_identity();
    if (!deg.is_integer() || to_long(deg.rational_value()) != group_->degree())
        throw Error::invalid("f is not the character of the degree-q embedding");
}

TGroupReport TGroupChecker::run(const ClassFunction& weight_char,
                                const std::optional<std::string>& lambda_name, int t) {
    if (t < 0 || t > kMaxT)
        throw Error::invalid("t must lie in [0, " + std::to_string(kMaxT) + "]");
    TGroupReport rep;
    rep.group_name = group_->name();
    rep.t = t;
    rep.twisted_by = lambda_name;

    // criterion 1: ||lambda f^t|| against the Haar-side norm
    ClassFunction lf = tensor(weight_char, power(f_, t));
    rep.criterion1_lhs = norm(lf);
    rep.criterion1_rhs = haar_norm(group_->degree(), t);
    rep.criterion1_pass = rep.criterion1_lhs == rep.criterion1_rhs;

    // criterion 2: <lambda* lambda, R^down> = 0 for every nontrivial R in E_t
    ClassFunction ww = tensor(conjugate(weight_char), weight_char);
    rep.criterion2_pass = true;
    for (const auto& [r, mult] : decompose_ffstar_power(group_->degree(), t)) {
        if (r.dimension == 1 && r.partition == std::vector<long>(r.partition.size(), 0) &&
            r.det_twist == 0)
            continue; // trivial irrep
        CriterionEntry e;
        e.irrep_name = r.display_name;
        e.multiplicity_in_et = mult;
        e.overlap = integer_inner_product(ww, cache_.restricted(r));
        e.pass = e.overlap == 0;
        rep.criterion2_pass = rep.criterion2_pass && e.pass;
        rep.criterion2.push_back(std::move(e));
    }

    if (rep.criterion1_pass != rep.criterion2_pass)
        throw Error::inconsistent(
            "t-group criteria disagree at t=" + std::to_string(t) + " (criterion 1: " +
            std::to_string(rep.criterion1_lhs) + " vs " + std::to_string(rep.criterion1_rhs) +
            ", criterion 2 " + (rep.criterion2_pass ? "pass" : "fail") + ")");
    rep.verdict = rep.criterion1_pass;
    return rep;
}

TGroupReport TGroupChecker::unitary(int t) {
    return run(trivial_character(group_), std::nullopt, t);
}

TGroupReport TGroupChecker::twisted(const ClassFunction& lambda,
                                    const std::string& lambda_name, int t) {
    if (lambda.group != group_) throw Error::invalid("lambda bound to another group");
    if (norm(lambda) != 1)
        throw Error::invalid("lambda must be irreducible (norm 1)");
    TGroupReport rep = run(lambda, lambda_name, t);
    // twisted at t implies plain unitary at t
    if (rep.verdict) {
        TGroupReport plain = unitary(t);
        if (!plain.verdict)
            throw Error::inconsistent("twisted t-group is not a plain unitary t-group");
    }
    return rep;
}

int TGroupChecker::max_t(const std::optional<ClassFunction>& lambda,
                         const std::string& lambda_name, int cap) {
    if (cap > kMaxT) throw Error::invalid("max_t cap must be <= " + std::to_string(kMaxT));
    int best = 0;
    for (int t = 1; t <= cap; ++t) {
        TGroupReport rep = lambda ? twisted(*lambda, lambda_name, t) : unitary(t);
        if (!rep.verdict) break;
        best = t;
    }
    return best;
}

Rational weight_check(const ClassFunction& lambda) {
    const auto& g = *lambda.group;
    Cyclotomic acc;
    for (int c = 0; c < g.num_classes(); ++c)
        acc += Rational(g.class_sizes()[static_cast<std::size_t>(c)]) *
               (lambda.values[static_cast<std::size_t>(c)].conjugate() * lambda.values[static_cast<std::size_t>(c)]);
    Cyclotomic total = Rational(1, g.size()) * acc;
    if (!total.is_rational())
        throw Error::inconsistent("weight sum is not rational");
    return total.rational_value();
}

} // namespace twistcode
