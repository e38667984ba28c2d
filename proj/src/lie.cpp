#include "twistcode/lie.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

// ---- partitions and hooks ----

std::vector<std::vector<long>> partitions_of(int t, int max_rows) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (long p = std::min<long>(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, t, t);
    return out;
}

long hook_length_tableaux(const std::vector<long>& part) {
    // f_lambda = n! / prod hooks
    long n = std::accumulate(part.begin(), part.end(), 0L);
    std::vector<long> conj(static_cast<std::size_t>(part.empty() ? 0 : part[0]), 0);
    for (long p : part)
        for (long j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    Integer num = 1;
    for (long i = 2; i <= n; ++i) num *= i;
    Integer den = 1;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (long j = 0; j < part[i]; ++j) {
            long hook = (part[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1) + 1;
            den *= hook;
        }
    Integer f = num / den;
    return mpz_get_si(f.get_mpz_t());
}

long hook_content_dimension(int q, const std::vector<long>& part) {
    // dim S_lambda(C^q) = prod (q + j - i) / hook(i,j)
    std::vector<long> conj(static_cast<std::size_t>(part.empty() ? 0 : part[0]), 0);
    for (long p : part)
        for (long j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (long j = 0; j < part[i]; ++j) {
            num *= q + j - static_cast<long>(i);
            long hook = (part[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1) + 1;
            den *= hook;
        }
    Integer d = num / den;
    return mpz_get_si(d.get_mpz_t());
}

// ---- symmetric polynomials over integer coefficients ----

using Monomial = std::vector<long>; // exponent vector, length q
using SymPoly = std::map<Monomial, long>;

SymPoly poly_mul(const SymPoly& a, const SymPoly& b, int q) {
    SymPoly out;
    Monomial m(static_cast<std::size_t>(q));
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            for (int i = 0; i < q; ++i) m[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            out[m] += ca * cb;
            if (out[m] == 0) out.erase(m);
        }
    return out;
}

SymPoly elementary(int q, int k) {
    SymPoly p;
    // sum over k-subsets
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        Monomial m(static_cast<std::size_t>(q), 0);
        for (int i : idx) m[static_cast<std::size_t>(i)] = 1;
        p[m] += 1;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == q - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return p;
}

// complete homogeneous h_k in q variables
SymPoly homogeneous(int q, long k) {
    SymPoly p;
    Monomial m(static_cast<std::size_t>(q), 0);
    auto rec = [&](auto&& self, int var, long remaining) -> void {
        if (var == q - 1) {
            m[static_cast<std::size_t>(var)] = remaining;
            p[m] += 1;
            m[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (long e = 0; e <= remaining; ++e) {
            m[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        m[static_cast<std::size_t>(var)] = 0;
    };
    if (k < 0) return p;
    rec(rec, 0, k);
    return p;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j})
SymPoly schur_poly(int q, const std::vector<long>& part) {
    std::vector<std::vector<SymPoly>> H(static_cast<std::size_t>(q), std::vector<SymPoly>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            long k = (i < static_cast<int>(part.size()) ? part[static_cast<std::size_t>(i)] : 0) - (i + 1) + (j + 1);
            H[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = homogeneous(q, k);
        }
    // permanent-style expansion with signs over q <= 3
    SymPoly det;
    std::vector<int> perm(static_cast<std::size_t>(q));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
        SymPoly term{{Monomial(static_cast<std::size_t>(q), 0), sign}};
        for (int i = 0; i < q; ++i) term = poly_mul(term, H[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], q);
        for (const auto& [m, c] : term) {
            det[m] += c;
            if (det[m] == 0) det.erase(m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::string name_for(int q, const std::vector<long>& part, long dimension, bool* barred_out) {
    bool barred = false;
    if (q == 3) {
        long p = part[0] - part[1];
        long r = part[1] - part[2];
        barred = r > p;
    }
    *barred_out = barred;
    return std::to_string(dimension) + (barred ? "b" : "");
}

} // namespace

UIrrep make_uirrep(int q, std::vector<long> partition, long det_twist) {
    partition.resize(static_cast<std::size_t>(q), 0);
    for (std::size_t i = 0; i + 1 < partition.size(); ++i)
        if (partition[i] < partition[i + 1])
            throw Error::invalid("partition is not weakly decreasing");
    // normalize so the last part is zero
    long base = partition.back();
    if (base != 0) {
        for (auto& p : partition) p -= base;
        det_twist += base;
    }
    UIrrep r;
    r.partition = std::move(partition);
    r.det_twist = det_twist;
    r.dimension = hook_content_dimension(q, r.partition);
    r.display_name = name_for(q, r.partition, r.dimension, &r.barred);
    return r;
}

UIrrep conjugate(const UIrrep& r) {
    const int q = static_cast<int>(r.partition.size());
    std::vector<long> neg(r.partition.rbegin(), r.partition.rend());
    for (auto& p : neg) p = -p;
    long shift = -neg.front();
    for (auto& p : neg) p += shift; // now weakly decreasing, first part max
    return make_uirrep(q, neg, -r.det_twist - shift);
}

long haar_norm(int q, int t) {
    if (q < 2) throw Error::invalid("haar_norm requires q >= 2");
    if (t < 0) throw Error::invalid("haar_norm requires t >= 0");
    long total = 0;
    for (const auto& p : partitions_of(t, q)) {
        long f = hook_length_tableaux(p);
        total += f * f;
    }
    return total == 0 ? 1 : total; // t = 0: empty partition, norm 1
}

std::vector<std::pair<UIrrep, long>> decompose_ffstar_power(int q, int t) {
    if (q != 2 && q != 3)
        throw Error::invalid("decompose_ffstar_power supports q in {2,3}");
    if (t < 0 || t > 6) throw Error::invalid("decompose_ffstar_power supports t <= 6");

    // (F F*)^t twisted by det^t is polynomial: (e_1 e_{q-1})^t
    SymPoly p{{Monomial(static_cast<std::size_t>(q), 0), 1}};
    if (t > 0) {
        SymPoly base = poly_mul(elementary(q, 1), elementary(q, q - 1), q);
        for (int i = 0; i < t; ++i) p = poly_mul(p, base, q);
    }

    std::vector<std::pair<UIrrep, long>> out;
    while (!p.empty()) {
        // leading monomial in lex order is dominant for a symmetric polynomial
        auto it = std::prev(p.end());
        Monomial lead = it->first;
        long coeff = it->second;
        for (std::size_t i = 0; i + 1 < lead.size(); ++i)
            if (lead[i] < lead[i + 1])
                throw Error::inconsistent("leading monomial is not dominant");
        if (coeff <= 0) throw Error::inconsistent("negative multiplicity in E_t extraction");
        SymPoly s = schur_poly(q, lead);
        for (const auto& [m, c] : s) {
            p[m] -= coeff * c;
            if (p[m] == 0) p.erase(m);
        }
        out.push_back({make_uirrep(q, lead, -t), coeff});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.dimension != b.first.dimension) return a.first.dimension < b.first.dimension;
        return a.first.barred < b.first.barred;
    });

    // dimension audit: sum m_R dim(R) = q^{2t}
    long total = 0;
    for (const auto& [r, m] : out) total += m * r.dimension;
    long expect = 1;
    for (int i = 0; i < 2 * t; ++i) expect *= q;
    if (total != expect)
        throw Error::inconsistent("E_t dimensions sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(expect));
    return out;
}

std::vector<Cyclotomic> exact_eigenvalues(const FiniteMatrixGroup& g, int element_index) {
    const CycMatrix& m = g.element(element_index).matrix;
    const long ord = g.element_order(element_index);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.embed(), false);
    std::vector<long> exps;
    for (int i = 0; i < m.rows(); ++i) {
        const std::complex<double> ev = solver.eigenvalues()(i);
        double turns = std::arg(ev) / (2.0 * M_PI) * static_cast<double>(ord);
        long k = std::lround(turns);
        k %= ord;
        if (k < 0) k += ord;
        const double target = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(ord);
        if (std::abs(ev - std::complex<double>(std::cos(target), std::sin(target))) > 1e-6)
            throw Error::numerical("eigenvalue does not snap to a root of unity of order " +
                                   std::to_string(ord));
        exps.push_back(k);
    }
    std::sort(exps.begin(), exps.end());
    std::vector<Cyclotomic> out;
    Cyclotomic sum, prod(1);
    for (long k : exps) {
        out.push_back(Cyclotomic::root(ord, k));
        sum += out.back();
        prod *= out.back();
    }
    if (sum != m.trace() || prod != m.det())
        throw Error::numerical("snapped eigenvalues fail the exact trace/determinant check");
    return out;
}

namespace {

// h_k at exact eigenvalue arguments: h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j)
std::vector<Cyclotomic> homogeneous_at(const std::vector<Cyclotomic>& xs, long kmax) {
    std::vector<Cyclotomic> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = Cyclotomic(1);
    for (const auto& x : xs)
        for (long k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
    return h;
}

Cyclotomic schur_at(const std::vector<long>& part, const std::vector<Cyclotomic>& xs) {
    const int q = static_cast<int>(xs.size());
    long kmax = 0;
    for (int i = 0; i < q; ++i)
        kmax = std::max(kmax, (i < static_cast<int>(part.size()) ? part[static_cast<std::size_t>(i)] : 0) + q - 1);
    auto h = homogeneous_at(xs, kmax);
    auto hval = [&](long k) { return k < 0 ? Cyclotomic(0) : h[static_cast<std::size_t>(k)]; };
    CycMatrix jt(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            jt.at(i, j) = hval((i < static_cast<int>(part.size()) ? part[static_cast<std::size_t>(i)] : 0) - (i + 1) + (j + 1));
    return jt.det();
}

} // namespace

ClassFunction restricted_character(const UIrrep& r, GroupPtr g) {
    if (static_cast<int>(r.partition.size()) != g->degree())
        throw Error::invalid("irrep rank does not match the group degree");
    ClassFunction cf{g, {}};
    cf.values.reserve(static_cast<std::size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c) {
        const int rep = g->class_reps()[static_cast<std::size_t>(c)];
        auto eig = exact_eigenvalues(*g, rep);
        Cyclotomic val = schur_at(r.partition, eig);
        if (r.det_twist != 0) {
            Cyclotomic det(1);
            for (const auto& e : eig) det *= e;
            Cyclotomic twist(1);
            const Cyclotomic base = r.det_twist > 0 ? det : det.conjugate();
            for (long i = 0; i < std::abs(r.det_twist); ++i) twist *= base;
            val *= twist;
        }
        cf.values.push_back(std::move(val));
    }
    if (cf.at_identity() != Cyclotomic(r.dimension))
        throw Error::inconsistent("restricted character has wrong dimension at the identity");
    return cf;
}

std::vector<std::pair<std::string, long>> branch(const UIrrep& r, GroupPtr g,
                                                 const IrrepTable& table) {
    ClassFunction cf = restricted_character(r, g);
    auto dec = decompose(cf, table);
    long total = 0;
    for (const auto& [name, m] : dec) total += m * table.by_name(name).degree;
    if (total != r.dimension)
        throw Error::inconsistent("branching does not preserve dimension for " + r.display_name);
    return dec;
}

const ClassFunction& BranchCache::restricted(const UIrrep& r) {
    auto key = std::make_pair(r.partition, r.det_twist);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, restricted_character(r, group_)).first;
    return it->second;
}

} // namespace twistcode
