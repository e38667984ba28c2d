#include "twistcode/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

// Fixed-conductor working representation for the enumeration hot path:
// every entry is a coefficient vector over the power basis of one common
// conductor, so products reduce with one table and equality is structural
// without per-operation conductor descent.
struct RawContext {
    long n = 1;
    long phi = 1;
    int q = 0;
    const Cyclotomic::Reduction* red = nullptr;
};

using RawMat = std::vector<Rational>; // q*q blocks of phi coefficients

struct RawHash {
    std::size_t operator()(const RawMat& m) const {
        std::size_t h = 1469598103934665603ull;
        for (const auto& r : m) h = (h * 1099511628211ull) ^ hash_value(r);
        return h;
    }
};

RawMat raw_identity(const RawContext& cx) {
    RawMat m(static_cast<std::size_t>(cx.q) * cx.q * cx.phi, Rational(0));
    for (int i = 0; i < cx.q; ++i)
        m[(static_cast<std::size_t>(i) * cx.q + i) * cx.phi] = 1;
    return m;
}

RawMat raw_from_cyc(const RawContext& cx, const CycMatrix& m) {
    RawMat out(static_cast<std::size_t>(cx.q) * cx.q * cx.phi, Rational(0));
    for (int i = 0; i < cx.q; ++i)
        for (int j = 0; j < cx.q; ++j) {
            const Cyclotomic& z = m.at(i, j);
            const long stride = cx.n / z.conductor();
            std::vector<Rational> raw(static_cast<std::size_t>(cx.n), Rational(0));
            for (std::size_t k = 0; k < z.coeffs().size(); ++k)
                if (z.coeffs()[k] != 0) raw[static_cast<std::size_t>(static_cast<long>(k) * stride)] = z.coeffs()[k];
            // reduce to the basis
            std::vector<Rational> basis(static_cast<std::size_t>(cx.phi), Rational(0));
            for (long k = 0; k < cx.n; ++k) {
                if (raw[static_cast<std::size_t>(k)] == 0) continue;
                if (k < cx.phi) {
                    basis[static_cast<std::size_t>(k)] += raw[static_cast<std::size_t>(k)];
                } else {
                    const auto& row = cx.red->rows[static_cast<std::size_t>(k - cx.phi)];
                    for (long t = 0; t < cx.phi; ++t)
                        if (row[static_cast<std::size_t>(t)] != 0)
                            basis[static_cast<std::size_t>(t)] += raw[static_cast<std::size_t>(k)] * Rational(row[static_cast<std::size_t>(t)]);
                }
            }
            std::copy(basis.begin(), basis.end(),
                      out.begin() + (static_cast<std::size_t>(i) * cx.q + j) * cx.phi);
        }
    return out;
}

CycMatrix cyc_from_raw(const RawContext& cx, const RawMat& m) {
    CycMatrix out(cx.q, cx.q);
    for (int i = 0; i < cx.q; ++i)
        for (int j = 0; j < cx.q; ++j) {
            std::vector<std::pair<long, Rational>> terms;
            const std::size_t base = (static_cast<std::size_t>(i) * cx.q + j) * cx.phi;
            for (long k = 0; k < cx.phi; ++k)
                if (m[base + static_cast<std::size_t>(k)] != 0) terms.push_back({k, m[base + static_cast<std::size_t>(k)]});
            out.at(i, j) = Cyclotomic::make(cx.n, terms);
        }
    return out;
}

// c += a * b over the fixed-conductor basis
void raw_entry_mul_add(const RawContext& cx, const Rational* a, const Rational* b,
                       std::vector<Rational>& scratch) {
    for (long i = 0; i < cx.phi; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < cx.phi; ++j)
            if (b[j] != 0) scratch[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
}

RawMat raw_mul(const RawContext& cx, const RawMat& a, const RawMat& b) {
    RawMat out(static_cast<std::size_t>(cx.q) * cx.q * cx.phi, Rational(0));
    std::vector<Rational> scratch;
    for (int i = 0; i < cx.q; ++i)
        for (int j = 0; j < cx.q; ++j) {
            scratch.assign(static_cast<std::size_t>(2 * cx.phi - 1), Rational(0));
            for (int k = 0; k < cx.q; ++k)
                raw_entry_mul_add(cx,
                                  &a[(static_cast<std::size_t>(i) * cx.q + k) * cx.phi],
                                  &b[(static_cast<std::size_t>(k) * cx.q + j) * cx.phi],
                                  scratch);
            Rational* dst = &out[(static_cast<std::size_t>(i) * cx.q + j) * cx.phi];
            for (long t = 0; t < cx.phi; ++t) dst[t] = scratch[static_cast<std::size_t>(t)];
            for (long t = cx.phi; t < 2 * cx.phi - 1; ++t) {
                const Rational& c = scratch[static_cast<std::size_t>(t)];
                if (c == 0) continue;
                const auto& row = cx.red->rows[static_cast<std::size_t>(t - cx.phi)];
                for (long u = 0; u < cx.phi; ++u)
                    if (row[static_cast<std::size_t>(u)] != 0) dst[u] += c * Rational(row[static_cast<std::size_t>(u)]);
            }
        }
    return out;
}

RawMat raw_adjoint(const RawContext& cx, const RawMat& m) {
    RawMat out(static_cast<std::size_t>(cx.q) * cx.q * cx.phi, Rational(0));
    std::vector<Rational> raw(static_cast<std::size_t>(cx.n));
    for (int i = 0; i < cx.q; ++i)
        for (int j = 0; j < cx.q; ++j) {
            const Rational* src = &m[(static_cast<std::size_t>(j) * cx.q + i) * cx.phi];
            std::fill(raw.begin(), raw.end(), Rational(0));
            for (long k = 0; k < cx.phi; ++k)
                if (src[k] != 0) raw[static_cast<std::size_t>((cx.n - k) % cx.n)] += src[k];
            Rational* dst = &out[(static_cast<std::size_t>(i) * cx.q + j) * cx.phi];
            for (long k = 0; k < cx.n; ++k) {
                if (raw[static_cast<std::size_t>(k)] == 0) continue;
                if (k < cx.phi) {
                    dst[k] += raw[static_cast<std::size_t>(k)];
                } else {
                    const auto& row = cx.red->rows[static_cast<std::size_t>(k - cx.phi)];
                    for (long t = 0; t < cx.phi; ++t)
                        if (row[static_cast<std::size_t>(t)] != 0) dst[t] += raw[static_cast<std::size_t>(k)] * Rational(row[static_cast<std::size_t>(t)]);
                }
            }
        }
    return out;
}

} // namespace

struct FiniteMatrixGroup::Lookup {
    std::unordered_map<std::size_t, std::vector<int>> by_hash;
};

FiniteMatrixGroup FiniteMatrixGroup::enumerate(std::vector<CycMatrix> generators,
                                               long cap, std::string name) {
    if (generators.empty()) throw Error::invalid("no generators given");
    if (cap < 1) throw Error::invalid("cap must be >= 1");
    const int q = generators.front().rows();
    long conductor = 1;
    for (const auto& g : generators) {
        if (g.rows() != q || g.cols() != q)
            throw Error::validation("generators must be square of equal degree");
        if (!g.is_unitary())
            throw Error::validation("generator is not exactly unitary: " + g.to_string());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                conductor = std::lcm(conductor, g.at(i, j).conductor());
    }
    if (conductor > Cyclotomic::kDefaultConductorCap)
        throw Error::cap("generator conductor lcm exceeds cap");

    // deterministic generator order
    std::sort(generators.begin(), generators.end(),
              [](const CycMatrix& a, const CycMatrix& b) { return a.to_string() < b.to_string(); });

    RawContext cx;
    cx.n = conductor;
    cx.phi = Cyclotomic::euler_phi(conductor);
    cx.q = q;
    cx.red = &Cyclotomic::reduction_for(conductor);

    std::vector<RawMat> elems;
    std::unordered_map<RawMat, int, RawHash> index;
    auto add = [&](RawMat m) -> std::pair<int, bool> {
        auto it = index.find(m);
        if (it != index.end()) return {it->second, false};
        int id = static_cast<int>(elems.size());
        elems.push_back(m);
        index.emplace(std::move(m), id);
        return {id, true};
    };

    add(raw_identity(cx));
    std::vector<RawMat> raw_gens;
    std::vector<int> gen_ids;
    for (const auto& g : generators) raw_gens.push_back(raw_from_cyc(cx, g));

    std::size_t head = 0;
    while (head < elems.size()) {
        // take a copy: elems may reallocate
        RawMat cur = elems[head];
        ++head;
        for (const auto& g : raw_gens) {
            auto [id, fresh] = add(raw_mul(cx, cur, g));
            (void)id;
            if (fresh && static_cast<long>(elems.size()) > cap)
                throw Error::cap("group closure exceeded cap " + std::to_string(cap));
        }
    }
    for (const auto& g : raw_gens) gen_ids.push_back(index.at(g));

    const int n = static_cast<int>(elems.size());

    // inverses (adjoint of a unitary element)
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto it = index.find(raw_adjoint(cx, elems[static_cast<std::size_t>(i)]));
        if (it == index.end()) throw Error::inconsistent("closure does not contain an inverse");
        inverse[static_cast<std::size_t>(i)] = it->second;
    }

    // element orders by power walk
    std::vector<long> order(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            order[0] = 1;
            continue;
        }
        long k = 1;
        int cur = i;
        while (cur != 0) {
            cur = index.at(raw_mul(cx, elems[static_cast<std::size_t>(cur)], elems[static_cast<std::size_t>(i)]));
            ++k;
            if (k > static_cast<long>(n)) throw Error::inconsistent("element order exceeds group size");
        }
        order[static_cast<std::size_t>(i)] = k;
    }

    // conjugacy classes: orbit closure under conjugation by the generators
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        if (class_of[static_cast<std::size_t>(i)] >= 0) continue;
        const int cid = static_cast<int>(classes.size());
        std::vector<int> orbit{i};
        class_of[static_cast<std::size_t>(i)] = cid;
        for (std::size_t w = 0; w < orbit.size(); ++w) {
            for (std::size_t gi = 0; gi < raw_gens.size(); ++gi) {
                const int g = gen_ids[gi];
                int c = index.at(raw_mul(cx, raw_mul(cx, elems[static_cast<std::size_t>(g)], elems[static_cast<std::size_t>(orbit[w])]),
                                         elems[static_cast<std::size_t>(inverse[static_cast<std::size_t>(g)])]));
                if (class_of[static_cast<std::size_t>(c)] < 0) {
                    class_of[static_cast<std::size_t>(c)] = cid;
                    orbit.push_back(c);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }

    // canonical class order
    FiniteMatrixGroup grp;
    grp.name_ = std::move(name);
    grp.degree_ = q;
    grp.elements_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grp.elements_[static_cast<std::size_t>(i)] = GroupElement{cyc_from_raw(cx, elems[static_cast<std::size_t>(i)]), i};
    grp.generator_indices_ = gen_ids;
    grp.inverse_ = std::move(inverse);
    grp.order_ = std::move(order);

    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<double, double>> emb(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto t = grp.elements_[static_cast<std::size_t>(classes[c].front())].matrix.trace().embed();
        auto rnd = [](double x) { return std::round(x * 1e9) / 1e9; };
        emb[c] = {rnd(t.real()), rnd(t.imag())};
    }
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const auto& ca = classes[static_cast<std::size_t>(a)];
        const auto& cb = classes[static_cast<std::size_t>(b)];
        const long oa = grp.order_[static_cast<std::size_t>(ca.front())];
        const long ob = grp.order_[static_cast<std::size_t>(cb.front())];
        if (oa != ob) return oa < ob;
        if (ca.size() != cb.size()) return ca.size() < cb.size();
        if (emb[static_cast<std::size_t>(a)] != emb[static_cast<std::size_t>(b)]) return emb[static_cast<std::size_t>(a)] < emb[static_cast<std::size_t>(b)];
        return ca.front() < cb.front();
    });
    grp.classes_.reserve(classes.size());
    grp.class_of_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < perm.size(); ++c) {
        auto& members = classes[static_cast<std::size_t>(perm[c])];
        for (int m : members) grp.class_of_[static_cast<std::size_t>(m)] = static_cast<int>(c);
        grp.class_sizes_.push_back(static_cast<long>(members.size()));
        grp.class_reps_.push_back(members.front());
        grp.classes_.push_back(std::move(members));
    }
    for (std::size_t c = 0; c < grp.classes_.size(); ++c)
        grp.class_traces_.push_back(grp.elements_[static_cast<std::size_t>(grp.class_reps_[c])].matrix.trace());

    // structural sanity on the partition
    long total = std::accumulate(grp.class_sizes_.begin(), grp.class_sizes_.end(), 0L);
    if (total != n) throw Error::inconsistent("class sizes do not sum to |G|");
    for (long s : grp.class_sizes_)
        if (n % s != 0) throw Error::inconsistent("class size does not divide |G|");

    grp.lookup_ = std::make_shared<Lookup>();
    for (int i = 0; i < n; ++i)
        grp.lookup_->by_hash[grp.elements_[static_cast<std::size_t>(i)].matrix.hash()].push_back(i);
    return grp;
}

int FiniteMatrixGroup::index_of(const CycMatrix& m) const {
    auto it = lookup_->by_hash.find(m.hash());
    if (it == lookup_->by_hash.end()) return -1;
    for (int i : it->second)
        if (elements_[static_cast<std::size_t>(i)].matrix == m) return i;
    return -1;
}

int FiniteMatrixGroup::product(int a, int b) const {
    int r = index_of(elements_[static_cast<std::size_t>(a)].matrix * elements_[static_cast<std::size_t>(b)].matrix);
    if (r < 0) throw Error::inconsistent("product fell outside the enumerated group");
    return r;
}

} // namespace twistcode
