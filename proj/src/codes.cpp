#include "twistcode/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// uniform double in [-1, 1), bit-exact across platforms
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

// apply the single-site operator `op` on tensor leg `leg` of M ((q^n) x k)
void apply_leg_inplace(const Eigen::MatrixXcd& op, Eigen::MatrixXcd& M, int leg, int n, int q) {
    const long N = M.rows();
    const long cols = M.cols();
    const long suf = ipow(q, n - leg - 1);
    const long pre = N / (suf * q);
    Eigen::VectorXcd x(q), y(q);
    for (long c = 0; c < cols; ++c)
        for (long a = 0; a < pre; ++a)
            for (long s = 0; s < suf; ++s) {
                const long base = a * q * suf + s;
                for (int d = 0; d < q; ++d) x(d) = M(base + d * suf, c);
                y.noalias() = op * x;
                for (int d = 0; d < q; ++d) M(base + d * suf, c) = y(d);
            }
}

Eigen::MatrixXcd apply_tensor_power(const Eigen::MatrixXcd& g, Eigen::MatrixXcd M, int n, int q) {
    for (int leg = 0; leg < n; ++leg) apply_leg_inplace(g, M, leg, n, q);
    return M;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& g, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd next(out.rows() * g.rows(), out.cols() * g.cols());
        for (long r = 0; r < out.rows(); ++r)
            for (long c = 0; c < out.cols(); ++c)
                next.block(r * g.rows(), c * g.cols(), g.rows(), g.cols()) = out(r, c) * g;
        out.swap(next);
    }
    return out;
}

Eigen::MatrixXcd pauli_site(int q, int a, int b) {
    // X|j> = |j+1 mod q>, Z|j> = w^j |j>
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(q, q);
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / static_cast<double>(q));
    for (int j = 0; j < q; ++j) m((j + a) % q, j) = std::pow(w, b * j);
    return m;
}

void check_dim_cap(int q, int n, const CodeParams& params) {
    if (ipow(q, n) > params.dim_cap)
        throw Error::cap("q^n = " + std::to_string(ipow(q, n)) + " exceeds the dimension cap " +
                         std::to_string(params.dim_cap));
}

long exact_multiplicity(const GroupBundle& bundle, const std::string& lambda_name, int n) {
    auto lam = bundle.table.by_name(lambda_name).character;
    auto f = bundle.fundamental_character();
    return integer_inner_product(lam, power(f, n));
}

} // namespace

const std::vector<Eigen::MatrixXcd>& embedded_elements(const GroupBundle& bundle) {
    static std::mutex mu;
    static std::map<const FiniteMatrixGroup*, std::vector<Eigen::MatrixXcd>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bundle.group.get());
    if (it == cache.end()) {
        std::vector<Eigen::MatrixXcd> mats;
        mats.reserve(static_cast<std::size_t>(bundle.group->size()));
        for (const auto& e : bundle.group->elements()) mats.push_back(e.matrix.embed());
        it = cache.emplace(bundle.group.get(), std::move(mats)).first;
    }
    return it->second;
}

std::vector<long> find_twist_automorphisms(const GroupBundle& bundle,
                                           const std::string& lambda_name) {
    const auto& g = *bundle.group;
    long conductor = 1;
    for (const auto& e : g.elements())
        for (int i = 0; i < g.degree(); ++i)
            for (int j = 0; j < g.degree(); ++j)
                conductor = std::lcm(conductor, e.matrix.at(i, j).conductor());
    const auto& target = bundle.table.by_name(lambda_name).character;
    std::vector<long> hits;
    for (long k = 1; k < conductor || (conductor == 1 && k == 1); ++k) {
        if (std::gcd(k, conductor) != 1) continue;
        bool ok = true;
        for (int c = 0; c < g.num_classes() && ok; ++c)
            ok = g.class_trace(c).galois(k) == target.values[static_cast<std::size_t>(c)];
        if (ok) hits.push_back(k);
        if (conductor == 1) break;
    }
    return hits;
}

TwistedRep galois_twist_rep(const GroupBundle& bundle, const std::string& lambda_name,
                            long automorphism) {
    const auto& g = *bundle.group;
    const auto& target = bundle.table.by_name(lambda_name).character;
    TwistedRep rep;
    rep.group = bundle.group;
    rep.lambda_name = lambda_name;
    rep.automorphism = automorphism;
    rep.dim = bundle.table.by_name(lambda_name).degree;
    rep.mats.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& e : g.elements()) {
        CycMatrix twisted = e.matrix.galois(automorphism);
        // character must match the target column exactly, class by class
        if (twisted.trace() != target.values[static_cast<std::size_t>(g.class_of(e.index))])
            throw Error::validation("twist zeta -> zeta^" + std::to_string(automorphism) +
                                    " does not realize " + lambda_name);
        rep.mats.push_back(twisted.embed());
    }
    return rep;
}

TwistedRep twisted_rep_for(const GroupBundle& bundle, const std::string& lambda_name) {
    auto hits = find_twist_automorphisms(bundle, lambda_name);
    if (hits.empty()) {
        std::ostringstream os;
        os << "no Galois twist of the embedding realizes " << lambda_name
           << "; candidate characters are";
        for (long k : find_twist_automorphisms(bundle, bundle.fundamental))
            os << " zeta->zeta^" << k;
        throw Error::validation(os.str());
    }
    return galois_twist_rep(bundle, lambda_name, hits.front());
}

Eigen::MatrixXcd isotypic_projector(const GroupBundle& bundle, const ClassFunction& lambda,
                                    int n, const CodeParams& params) {
    const auto& g = *bundle.group;
    const int q = g.degree();
    check_dim_cap(q, n, params);
    const long N = ipow(q, n);
    if (lambda.group != bundle.group) throw Error::invalid("lambda bound to another group");
    const Cyclotomic& deg = lambda.at_identity();
    if (!deg.is_integer()) throw Error::invalid("lambda degree is not an integer");
    const double dim_lambda = to_double(deg.rational_value());

    const auto& mats = embedded_elements(bundle);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 0; i < g.size(); ++i) {
        const std::complex<double> w =
            std::conj(lambda.values[static_cast<std::size_t>(g.class_of(i))].embed());
        if (std::abs(w) < 1e-15) continue;
        P.noalias() += w * kron_power(mats[static_cast<std::size_t>(i)], n);
    }
    P *= dim_lambda / static_cast<double>(g.size());

    const double herm = (P - P.adjoint()).norm();
    const double idem = (P * P - P).norm();
    if (herm > 1e-9 || idem > 1e-9)
        throw Error::numerical("isotypic projector fails Hermiticity/idempotence: " +
                               std::to_string(herm) + ", " + std::to_string(idem));
    // exact cross-check: trace(P) = m_lambda * |lambda|
    ClassFunction lam_char = lambda;
    const long m = integer_inner_product(lam_char, power(bundle.fundamental_character(), n));
    const double expect = static_cast<double>(m) * dim_lambda;
    if (std::abs(P.trace().real() - expect) > 1e-6 || std::abs(P.trace().imag()) > 1e-9)
        throw Error::numerical("projector trace " + std::to_string(P.trace().real()) +
                               " disagrees with exact multiplicity " + std::to_string(expect));
    return P;
}

std::vector<Eigen::MatrixXcd> hom_basis(const GroupBundle& bundle, const TwistedRep& lambda,
                                        int n, const CodeParams& params) {
    const auto& g = *bundle.group;
    const int q = g.degree();
    check_dim_cap(q, n, params);
    const long N = ipow(q, n);
    const long k = lambda.dim;
    const long m_target = exact_multiplicity(bundle, lambda.lambda_name, n);

    std::vector<Eigen::MatrixXcd> basis;
    if (m_target == 0) return basis;

    const auto& mats = embedded_elements(bundle);
    std::mt19937_64 rng(params.seed);
    const long budget = std::min<long>(static_cast<long>(k) * N, m_target + 16);
    for (long probe = 0; probe < budget && static_cast<long>(basis.size()) < m_target; ++probe) {
        Eigen::MatrixXcd X(N, k);
        for (long r = 0; r < N; ++r)
            for (long c = 0; c < k; ++c)
                X(r, c) = std::complex<double>(unit_double(rng), unit_double(rng));
        Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(N, k);
        for (int i = 0; i < g.size(); ++i) {
            // f(g)^{(x)n} X lambda(g)^{-1}, averaged over the group
            Eigen::MatrixXcd Y = X * lambda.mats[static_cast<std::size_t>(i)].adjoint();
            T.noalias() += apply_tensor_power(mats[static_cast<std::size_t>(i)], std::move(Y), n, q);
        }
        T /= static_cast<double>(g.size());
        // Gram-Schmidt in map space
        for (const auto& B : basis) {
            const std::complex<double> ip = (B.adjoint() * T).trace();
            T.noalias() -= ip * B;
        }
        const double nr = T.norm();
        if (nr < 1e-8) continue;
        T /= nr;
        // every map must intertwine f^{(x)n} with lambda on the generators
        for (int gi : g.generator_indices()) {
            Eigen::MatrixXcd lhs =
                apply_tensor_power(embedded_elements(bundle)[static_cast<std::size_t>(gi)], T, n, q);
            const double dev = (lhs - T * lambda.mats[static_cast<std::size_t>(gi)]).norm();
            if (dev > params.tol_equivariance)
                throw Error::numerical("hom basis element is not equivariant: " +
                                       std::to_string(dev));
        }
        basis.push_back(std::move(T));
    }
    if (static_cast<long>(basis.size()) != m_target)
        throw Error::numerical("hom basis rank " + std::to_string(basis.size()) +
                               " below the exact multiplicity " + std::to_string(m_target) +
                               " after probe budget");
    return basis;
}

CodeSpace code_from_hom(const Eigen::MatrixXcd& T, const GroupBundle& bundle,
                        const TwistedRep& lambda, int n, const CodeParams& params) {
    if (T.norm() < 1e-12) throw Error::invalid("equivariant map is numerically zero");
    const int q = bundle.group->degree();
    // T^dag T is a scalar by Schur's lemma; a general QR would re-mix the
    // columns and change the logical action.
    Eigen::MatrixXcd S = T.adjoint() * T;
    const double c = S.trace().real() / static_cast<double>(T.cols());
    if ((S - c * Eigen::MatrixXcd::Identity(T.cols(), T.cols())).norm() > 1e-8 * std::abs(c))
        throw Error::numerical("T^dag T is not scalar; map does not land in a single irrep copy");
    CodeSpace code;
    code.n = n;
    code.q = q;
    code.logical_dim = T.cols();
    code.isometry = T / std::sqrt(c);
    code.lambda_name = lambda.lambda_name;
    code.group_name = bundle.group->name();
    code.seed = params.seed;
    code.automorphism = lambda.automorphism;

    const auto& V = code.isometry;
    if ((V.adjoint() * V - Eigen::MatrixXcd::Identity(V.cols(), V.cols())).norm() >
        params.tol_isometry)
        throw Error::numerical("isometry columns are not orthonormal");
    for (int gi : bundle.group->generator_indices()) {
        Eigen::MatrixXcd lhs = apply_tensor_power(
            embedded_elements(bundle)[static_cast<std::size_t>(gi)], V, n, q);
        if ((lhs - V * lambda.mats[static_cast<std::size_t>(gi)]).norm() > params.tol_equivariance)
            throw Error::numerical("code space does not transform in lambda");
    }
    return code;
}

std::string ErrorOperator::id() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (i) os << ";";
        os << "X" << labels[i].first << "Z" << labels[i].second << "@" << sites[i];
    }
    return sites.empty() ? "I" : os.str();
}

void for_each_error(int n, int q, int w,
                    const std::function<void(const ErrorOperator&)>& fn) {
    if (w == 0) {
        fn(ErrorOperator{});
        return;
    }
    const int nlabels = q * q - 1;
    std::vector<int> sites(static_cast<std::size_t>(w));
    std::iota(sites.begin(), sites.end(), 0);
    auto labels_of = [&](int code) {
        ++code; // skip (0,0)
        return std::make_pair(code / q, code % q);
    };
    for (;;) {
        std::vector<int> label_codes(static_cast<std::size_t>(w), 0);
        for (;;) {
            ErrorOperator e;
            e.sites = sites;
            for (int lc : label_codes) e.labels.push_back(labels_of(lc));
            fn(e);
            int pos = w - 1;
            while (pos >= 0 && label_codes[static_cast<std::size_t>(pos)] == nlabels - 1) --pos;
            if (pos < 0) break;
            ++label_codes[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < w; ++j) label_codes[static_cast<std::size_t>(j)] = 0;
        }
        int pos = w - 1;
        while (pos >= 0 && sites[static_cast<std::size_t>(pos)] == n - w + pos) --pos;
        if (pos < 0) break;
        ++sites[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < w; ++j) sites[static_cast<std::size_t>(j)] = sites[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

KLEntry kl_one(const CodeSpace& code, const ErrorOperator& e) {
    const long k = code.logical_dim;
    Eigen::MatrixXcd EV = code.isometry;
    for (std::size_t i = 0; i < e.sites.size(); ++i)
        apply_leg_inplace(pauli_site(code.q, e.labels[i].first, e.labels[i].second), EV,
                          e.sites[i], code.n, code.q);
    Eigen::MatrixXcd M = code.isometry.adjoint() * EV;
    KLEntry entry;
    entry.error_id = e.id();
    entry.weight = e.weight();
    entry.c_e = M.trace() / static_cast<double>(k);
    entry.residual = (M - entry.c_e * Eigen::MatrixXcd::Identity(k, k)).norm();
    return entry;
}

} // namespace

KLEntry kl_single(const CodeSpace& code, const ErrorOperator& e) { return kl_one(code, e); }

KLReport kl_check(const CodeSpace& code, int t, const CodeParams& params) {
    if (t < 1) throw Error::invalid("kl_check requires t >= 1");
    KLReport rep;
    rep.t_checked = t;
    rep.verdict = true;
    for (int w = 1; w <= t; ++w)
        for_each_error(code.n, code.q, w, [&](const ErrorOperator& e) {
            KLEntry entry = kl_one(code, e);
            rep.max_residual = std::max(rep.max_residual, entry.residual);
            rep.verdict = rep.verdict && entry.residual <= params.tol_kl;
            ++rep.errors_checked;
            rep.entries.push_back(std::move(entry));
        });
    return rep;
}

DistanceResult measure_distance(const CodeSpace& code, int cap, const CodeParams& params) {
    if (cap > 4) throw Error::invalid("distance search cap must be <= 4");
    for (int w = 1; w <= cap; ++w) {
        bool violated = false;
        for_each_error(code.n, code.q, w, [&](const ErrorOperator& e) {
            if (violated) return;
            if (kl_one(code, e).residual > params.tol_kl) violated = true;
        });
        if (violated) return {w, true};
    }
    return {cap + 1, false};
}

TransversalReport transversal_check(const CodeSpace& code, const TwistedRep& lambda,
                                    const GroupBundle& bundle) {
    TransversalReport rep;
    const auto& V = code.isometry;
    bool any_phase_fix = false;
    for (int gi : bundle.group->generator_indices()) {
        const auto& g = embedded_elements(bundle)[static_cast<std::size_t>(gi)];
        Eigen::MatrixXcd A = apply_tensor_power(g, V, code.n, code.q);
        Eigen::MatrixXcd M = V.adjoint() * A;
        const Eigen::MatrixXcd& L = lambda.mats[static_cast<std::size_t>(gi)];
        const double dev = (M - L).norm();
        std::complex<double> overlap = (L.adjoint() * M).trace();
        const std::complex<double> phase =
            std::abs(overlap) < 1e-12 ? 1.0 : overlap / std::abs(overlap);
        const double dev_phase = (M - phase * L).norm();
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.max_phase_aligned = std::max(rep.max_phase_aligned, dev_phase);
        if (dev > 1e-8 && dev_phase <= 1e-8) any_phase_fix = true;

        Eigen::MatrixXcd D = apply_tensor_power(g.adjoint(), V, code.n, code.q);
        const double comm = (A * V.adjoint() - V * D.adjoint()).norm();
        rep.max_commutator = std::max(rep.max_commutator, comm);
    }
    rep.phase_only = any_phase_fix;
    return rep;
}

double trivial_component_norm(const GroupBundle& bundle, const ErrorOperator& e, int n) {
    const auto& g = *bundle.group;
    const int q = g.degree();
    const int w = e.weight();
    if (w == 0) return 1.0; // the identity is entirely trivial
    const auto& mats = embedded_elements(bundle);
    // ||Pi_triv E||^2 = (1/|G|) sum_g q^{n-w} prod_i tr(E_i^dag g E_i g^dag),
    // from tr((x)A_i (x)B_i) = prod tr(A_i B_i)
    std::vector<Eigen::MatrixXcd> site_ops;
    for (auto [a, b] : e.labels) site_ops.push_back(pauli_site(q, a, b));
    std::complex<double> acc = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        std::complex<double> term = 1.0;
        for (const auto& op : site_ops)
            term *= (op.adjoint() * mats[static_cast<std::size_t>(i)] * op *
                     mats[static_cast<std::size_t>(i)].adjoint())
                        .trace();
        acc += term;
    }
    double norm2 = (acc.real() / static_cast<double>(g.size())) *
                   std::pow(static_cast<double>(q), n - w);
    norm2 = std::max(norm2, 0.0);
    // relative to ||E|| = q^{n/2}
    return std::sqrt(norm2) / std::pow(static_cast<double>(q), n / 2.0);
}

double projector_hom_angle(const Eigen::MatrixXcd& projector,
                           const std::vector<Eigen::MatrixXcd>& homs) {
    if (homs.empty()) return projector.norm() < 1e-9 ? 0.0 : 1.0;
    const long N = homs.front().rows();
    const long k = homs.front().cols();
    Eigen::MatrixXcd stack(N, static_cast<long>(homs.size()) * k);
    for (std::size_t i = 0; i < homs.size(); ++i)
        stack.block(0, static_cast<long>(i) * k, N, k) = homs[i];
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stack);
    Eigen::MatrixXcd Q1 = Eigen::MatrixXcd(qr.householderQ()) .leftCols(stack.cols());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(projector);
    std::vector<long> range_cols;
    for (long i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 0.5) range_cols.push_back(i);
    if (static_cast<long>(range_cols.size()) != stack.cols())
        throw Error::numerical("projector rank disagrees with the hom-span dimension");
    Eigen::MatrixXcd Q2(N, static_cast<long>(range_cols.size()));
    for (std::size_t i = 0; i < range_cols.size(); ++i)
        Q2.col(static_cast<long>(i)) = es.eigenvectors().col(range_cols[i]);
    // sin of the largest principal angle, well conditioned near zero
    return (Q2 - Q1 * (Q1.adjoint() * Q2)).norm();
}

std::string code_to_json(const CodeSpace& code) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["group"] = code.group_name;
    j["lambda"] = code.lambda_name;
    j["n"] = code.n;
    j["q"] = code.q;
    j["logical_dim"] = code.logical_dim;
    j["seed"] = code.seed;
    j["automorphism"] = code.automorphism;
    nlohmann::json rows = nlohmann::json::array();
    for (long r = 0; r < code.isometry.rows(); ++r)
        for (long c = 0; c < code.isometry.cols(); ++c)
            rows.push_back({code.isometry(r, c).real(), code.isometry(r, c).imag()});
    j["isometry_row_major"] = std::move(rows);
    return j.dump(2);
}

std::string kl_to_json(const KLReport& report, const std::optional<DistanceResult>& distance) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["t_checked"] = report.t_checked;
    j["verdict"] = report.verdict;
    j["max_residual"] = report.max_residual;
    j["errors_checked"] = report.errors_checked;
    if (distance) {
        j["distance"] = distance->d;
        j["distance_exact"] = distance->exact;
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"error", e.error_id},
                           {"weight", e.weight},
                           {"c_e", {e.c_e.real(), e.c_e.imag()}},
                           {"residual", e.residual}});
    j["errors"] = std::move(entries);
    return j.dump(2);
}

} // namespace twistcode
