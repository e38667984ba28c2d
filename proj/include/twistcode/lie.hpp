#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistcode/char_theory.hpp"
#include "twistcode/group.hpp"

namespace twistcode {

/// A U(q) irrep label: det^{det_twist} tensor the Schur functor of the
/// partition (normalized so the last part is zero). Display names follow the
/// physics dimension convention, with a trailing "b" marking the conjugate
/// member of a non-self-conjugate pair (the paper's bar).
struct UIrrep {
    std::vector<long> partition; // length q, weakly decreasing, last part 0
    long det_twist = 0;
    long dimension = 0;
    std::string display_name;
    bool barred = false;

    bool operator==(const UIrrep& o) const {
        return partition == o.partition && det_twist == o.det_twist;
    }
};

UIrrep make_uirrep(int q, std::vector<long> partition, long det_twist);
UIrrep conjugate(const UIrrep& r);

/// ||F^t|| for U(q): number of standard Young tableaux squared, summed over
/// partitions of t with at most q rows (hook length formula).
long haar_norm(int q, int t);

/// Isotypic decomposition of (F (x) F*)^{(x) t}: the set E_t with
/// multiplicities. Supported for q in {2,3}, t <= 6.
std::vector<std::pair<UIrrep, long>> decompose_ffstar_power(int q, int t);

/// Exact eigenvalues of a group element as roots of unity zeta_m^k, m the
/// element order. Found by a double-precision solve, snapped, then validated
/// exactly against trace and determinant.
std::vector<Cyclotomic> exact_eigenvalues(const FiniteMatrixGroup& g, int element_index);

/// The class function of R restricted to G: Weyl character (Schur polynomial
/// at the exact class eigenvalues) times det^{det_twist}.
ClassFunction restricted_character(const UIrrep& r, GroupPtr g);

/// Branching R down to G, decomposed against the irreducible table.
std::vector<std::pair<std::string, long>> branch(const UIrrep& r, GroupPtr g,
                                                 const IrrepTable& table);

/// Memoized restriction per group; the t-group checker sweeps many R.
class BranchCache {
public:
    explicit BranchCache(GroupPtr g) : group_(std::move(g)) {}
    const ClassFunction& restricted(const UIrrep& r);
    GroupPtr group() const { return group_; }

private:
    GroupPtr group_;
    std::map<std::pair<std::vector<long>, long>, ClassFunction> cache_;
};

} // namespace twistcode
