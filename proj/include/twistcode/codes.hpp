#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twistcode/data_io.hpp"

namespace twistcode {

/// Tolerances and caps for the float-side code constructions. Character-side
/// work stays exact; every float result here is cross-checked against exact
/// integer invariants (traces, ranks, multiplicities).
struct CodeParams {
    long dim_cap = 2048; // q^n cap; raise to 4096 for 7-qutrit codes
    double tol_isometry = 1e-9;
    double tol_equivariance = 1e-8;
    double tol_kl = 1e-7;
    double tol_transversal = 1e-8;
    std::uint64_t seed = 0;
};

/// The logical irrep lambda realized concretely as a Galois twist of the
/// embedding representation, with per-element matrices.
struct TwistedRep {
    GroupPtr group;
    std::string lambda_name;
    long automorphism = 1; // zeta -> zeta^k applied entrywise
    long dim = 0;
    std::vector<Eigen::MatrixXcd> mats; // indexed like the group elements
};

/// All automorphism exponents k (of the group's ambient conductor) whose
/// entrywise twist of the embedding has character equal to the named row.
std::vector<long> find_twist_automorphisms(const GroupBundle& bundle,
                                           const std::string& lambda_name);

/// Build the twisted representation for one automorphism and validate its
/// character against the named table row, exactly.
TwistedRep galois_twist_rep(const GroupBundle& bundle, const std::string& lambda_name,
                            long automorphism);

/// Smallest valid automorphism; throws a twist-selection error listing the
/// candidates tried when none matches.
TwistedRep twisted_rep_for(const GroupBundle& bundle, const std::string& lambda_name);

/// Embedded q x q matrices of every group element, shared across builders.
const std::vector<Eigen::MatrixXcd>& embedded_elements(const GroupBundle& bundle);

/// Isotypic projector (|lambda|/|G|) sum_g conj(lambda(g)) f(g)^{(x) n} on
/// (C^q)^{(x) n}. Checks Hermiticity, idempotence and the exact trace
/// m_lambda * |lambda| from character theory.
Eigen::MatrixXcd isotypic_projector(const GroupBundle& bundle, const ClassFunction& lambda,
                                    int n, const CodeParams& params = {});

/// Basis of Hom_G(lambda, f^{(x) n}) from seeded random probes averaged over
/// the group; exactly <lambda, f^n> independent maps, each G-equivariant.
std::vector<Eigen::MatrixXcd> hom_basis(const GroupBundle& bundle, const TwistedRep& lambda,
                                        int n, const CodeParams& params = {});

struct CodeSpace {
    int n = 0;
    int q = 0;
    long logical_dim = 0;
    Eigen::MatrixXcd isometry; // q^n x logical_dim, orthonormal columns
    std::string lambda_name;
    std::string group_name;
    std::uint64_t seed = 0;
    long automorphism = 1;
};

/// Orthonormalize the image of one equivariant map into a code space. The
/// scale factor is a scalar by Schur's lemma, so normalization preserves the
/// logical action exactly (a plain QR could twist the columns by phases and
/// break the transversal contract).
CodeSpace code_from_hom(const Eigen::MatrixXcd& T, const GroupBundle& bundle,
                        const TwistedRep& lambda, int n, const CodeParams& params = {});

/// One generalized Pauli error: X^a Z^b on each supported site, no site
/// carrying (0,0).
struct ErrorOperator {
    std::vector<int> sites;
    std::vector<std::pair<int, int>> labels;
    int weight() const { return static_cast<int>(sites.size()); }
    std::string id() const;
};

struct KLEntry {
    std::string error_id;
    int weight = 0;
    std::complex<double> c_e;
    double residual = 0.0;
};

struct KLReport {
    int t_checked = 0;
    bool verdict = false;
    double max_residual = 0.0;
    long errors_checked = 0;
    std::vector<KLEntry> entries;
};

/// Knill-Laflamme check over the spanning generalized-Pauli basis of all
/// weights 1..t. c_E is the least-squares scalar trace(V^dag E V)/|lambda|.
KLReport kl_check(const CodeSpace& code, int t, const CodeParams& params = {});

/// Evaluate one error operator against a code.
KLEntry kl_single(const CodeSpace& code, const ErrorOperator& e);

struct DistanceResult {
    int d = 0;
    bool exact = false; // false: no violation up to cap, d is the bound cap+1
};

/// Smallest weight with a KL violation; d >= cap+1 reported as inexact.
DistanceResult measure_distance(const CodeSpace& code, int cap, const CodeParams& params = {});

struct TransversalReport {
    double max_deviation = 0.0;        // vs lambda(g) exactly
    double max_phase_aligned = 0.0;    // after the best global phase per generator
    double max_commutator = 0.0;       // || [g^{(x)n}, V V^dag] ||
    bool phase_only = false;           // deviation vanishes once phases are aligned
};

/// Checks V^dag g^{(x)n} V = lambda(g) and that g^{(x)n} preserves the code
/// space, for every group generator.
TransversalReport transversal_check(const CodeSpace& code, const TwistedRep& lambda,
                                    const GroupBundle& bundle);

/// Frobenius norm of the projection of E onto the G-trivial isotypic part of
/// the conjugation action on operators, via the tensor-factorized trace form.
double trivial_component_norm(const GroupBundle& bundle, const ErrorOperator& e, int n);

/// Visit every weight-w generalized Pauli error on n qudits.
void for_each_error(int n, int q, int w, const std::function<void(const ErrorOperator&)>& fn);

/// Largest principal angle between the span of the hom images and the range
/// of the isotypic projector.
double projector_hom_angle(const Eigen::MatrixXcd& projector,
                           const std::vector<Eigen::MatrixXcd>& homs);

/// JSON exports (documented schema, versioned).
std::string code_to_json(const CodeSpace& code);
std::string kl_to_json(const KLReport& report, const std::optional<DistanceResult>& distance);

} // namespace twistcode
