#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcode/char_theory.hpp"
#include "twistcode/lie.hpp"

namespace twistcode {

/// One entry of criterion 2: the overlap <lambda* lambda, R^down> (or
/// <1, R^down> in the untwisted case) for a nontrivial R in E_t.
struct CriterionEntry {
    std::string irrep_name;
    long multiplicity_in_et = 0;
    long overlap = 0;
    bool pass = false;
};

struct TGroupReport {
    std::string group_name;
    int t = 0;
    std::optional<std::string> twisted_by;
    // criterion 1: ||lambda f^t|| == ||F^t||
    long criterion1_lhs = 0;
    long criterion1_rhs = 0;
    bool criterion1_pass = false;
    // criterion 2: all overlaps vanish; never short-circuited so the report
    // names every violating R
    std::vector<CriterionEntry> criterion2;
    bool criterion2_pass = false;
    bool verdict = false;
};

/// Evaluates both Lemma-style criteria for (twisted) unitary t-groups and
/// insists they agree; disagreement is an internal consistency error.
class TGroupChecker {
public:
    static constexpr int kMaxT = 6;

    /// f must be the character of the embedding representation (degree q).
    TGroupChecker(GroupPtr group, ClassFunction f);

    TGroupReport unitary(int t);
    TGroupReport twisted(const ClassFunction& lambda, const std::string& lambda_name, int t);

    /// Largest t <= cap for which the check passes; 0 if t = 1 already fails.
    int max_t(const std::optional<ClassFunction>& lambda,
              const std::string& lambda_name, int cap);

    GroupPtr group() const { return group_; }

private:
    TGroupReport run(const ClassFunction& weight_char,
                     const std::optional<std::string>& lambda_name, int t);

    GroupPtr group_;
    ClassFunction f_;
    BranchCache cache_;
};

/// Sum over the group of W_lambda(g) = |lambda(g)|^2 / |G|, computed
/// class-wise. Equals 1 exactly iff lambda is irreducible.
Rational weight_check(const ClassFunction& lambda);

} // namespace twistcode
