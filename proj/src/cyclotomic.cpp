#include "twistcode/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Integer polynomial helpers for Phi_n (coefficients stay small at desk scale).
using IPoly = std::vector<Integer>; // c[0] + c[1] x + ...

IPoly xn_minus_1(long n) {
    IPoly p(static_cast<std::size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

// exact division, remainder must vanish
IPoly poly_div(IPoly num, const IPoly& den) {
    IPoly q(num.size() - den.size() + 1, Integer(0));
    const std::size_t dd = den.size() - 1;
    for (std::size_t k = num.size(); k-- > den.size() - 1;) {
        if (k < dd) break;
        Integer c = num[k];
        if (c == 0) continue;
        q[k - dd] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error::inconsistent("cyclotomic polynomial division left a remainder");
    return q;
}

IPoly cyclotomic_poly(long n, std::map<long, IPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IPoly result;
    if (n == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        IPoly p = xn_minus_1(n);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) p = poly_div(std::move(p), cyclotomic_poly(d, cache));
        result = p;
    }
    cache[n] = result;
    return result;
}

} // namespace

long Cyclotomic::euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

const Cyclotomic::Reduction& Cyclotomic::reduction_for(long n) {
    static std::mutex mu;
    static std::map<long, Reduction> registry;
    static std::map<long, IPoly> phi_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;

    Reduction red;
    red.n = n;
    red.phi = euler_phi(n);
    IPoly phi_n = cyclotomic_poly(n, phi_cache);
    // x^phi = -(phi_n minus leading term); higher rows by shift-and-reduce
    const long deg = red.phi;
    const long top = std::max(2 * deg - 2, n - 1);
    std::vector<Integer> cur(static_cast<std::size_t>(deg));
    for (long j = 0; j < deg; ++j) cur[static_cast<std::size_t>(j)] = -phi_n[static_cast<std::size_t>(j)];
    for (long k = deg; k <= top; ++k) {
        red.rows.push_back(cur);
        // multiply by x, reduce the overflowing term with row 0
        Integer lead = cur[static_cast<std::size_t>(deg - 1)];
        for (long j = deg - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
        cur[0] = 0;
        if (lead != 0)
            for (long j = 0; j < deg; ++j) cur[static_cast<std::size_t>(j)] += lead * red.rows[0][static_cast<std::size_t>(j)];
    }
    return registry.emplace(n, std::move(red)).first->second;
}

void Cyclotomic::check_cap(long n) {
    if (n < 1) throw Error::invalid("invalid conductor " + std::to_string(n));
    if (n > kDefaultConductorCap)
        throw Error::cap("conductor " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kDefaultConductorCap));
}

namespace {

// reduce raw coefficients (any length <= n) to the power basis of size phi(n)
std::vector<Rational> reduce_mod_phi(std::vector<Rational> raw,
                                     const Cyclotomic::Reduction& red) {
    const long phi = red.phi;
    std::vector<Rational> out(static_cast<std::size_t>(phi), Rational(0));
    const long len = static_cast<long>(raw.size());
    for (long k = 0; k < std::min(len, phi); ++k) out[static_cast<std::size_t>(k)] = raw[static_cast<std::size_t>(k)];
    for (long k = phi; k < len; ++k) {
        const Rational& c = raw[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const auto& row = red.rows[static_cast<std::size_t>(k - phi)];
        for (long j = 0; j < phi; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) out[static_cast<std::size_t>(j)] += c * Rational(row[static_cast<std::size_t>(j)]);
    }
    return out;
}

// apply zeta -> zeta^k at fixed conductor, raw output length n
std::vector<Rational> galois_raw(long n, long k, const std::vector<Rational>& coeffs) {
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        raw[static_cast<std::size_t>((static_cast<long>(j) * k) % n)] += coeffs[j];
    }
    return raw;
}

// exact solve B x = c (consistent, B full column rank); returns x
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> B,
                                  std::vector<Rational> c, long cols) {
    const long rows = static_cast<long>(B.size());
    std::vector<long> pivot_row(static_cast<std::size_t>(cols), -1);
    long r = 0;
    for (long col = 0; col < cols && r < rows; ++col) {
        long pr = -1;
        for (long i = r; i < rows; ++i)
            if (B[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(B[static_cast<std::size_t>(pr)], B[static_cast<std::size_t>(r)]);
        std::swap(c[static_cast<std::size_t>(pr)], c[static_cast<std::size_t>(r)]);
        const Rational inv = 1 / B[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (long j = col; j < cols; ++j) B[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
        c[static_cast<std::size_t>(r)] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = B[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (long j = col; j < cols; ++j)
                B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * B[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i)] -= f * c[static_cast<std::size_t>(r)];
        }
        pivot_row[static_cast<std::size_t>(col)] = r;
        ++r;
    }
    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    for (long col = 0; col < cols; ++col)
        if (pivot_row[static_cast<std::size_t>(col)] >= 0) x[static_cast<std::size_t>(col)] = c[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(col)])];
    // consistency: rows below rank must be zero
    for (long i = r; i < rows; ++i)
        if (c[static_cast<std::size_t>(i)] != 0)
            throw Error::inconsistent("conductor descent solve is inconsistent");
    return x;
}

} // namespace

Cyclotomic Cyclotomic::canonical(long n, std::vector<Rational> raw) {
    const Reduction& red = reduction_for(n);
    std::vector<Rational> coeffs = reduce_mod_phi(std::move(raw), red);

    // descend to the minimal conductor
    long cur = n;
    for (;;) {
        bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                    [](const Rational& c) { return c == 0; });
        if (all_zero) return Cyclotomic(1, {Rational(0)});
        if (cur == 1) break;
        bool descended = false;
        for (long p : prime_factors(cur)) {
            const long m = cur / p;
            // invariance under every automorphism fixing Q(zeta_m)
            bool fixed = true;
            const Reduction& rc = reduction_for(cur);
            for (long k = 1 + m; k < cur && fixed; k += m) {
                if (std::gcd(k, cur) != 1) continue;
                auto img = reduce_mod_phi(galois_raw(cur, k, coeffs), rc);
                if (img != coeffs) fixed = false;
            }
            if (!fixed) continue;
            // rewrite over the basis of Q(zeta_m): solve B x = coeffs
            const Reduction& rm = reduction_for(m);
            const long stride = cur / m;
            std::vector<std::vector<Rational>> B(
                static_cast<std::size_t>(rc.phi),
                std::vector<Rational>(static_cast<std::size_t>(rm.phi), Rational(0)));
            for (long j = 0; j < rm.phi; ++j) {
                std::vector<Rational> raw_col(static_cast<std::size_t>(cur), Rational(0));
                raw_col[static_cast<std::size_t>((j * stride) % cur)] = 1;
                auto col = reduce_mod_phi(std::move(raw_col), rc);
                for (long i = 0; i < rc.phi; ++i) B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
            }
            coeffs = solve_exact(std::move(B), coeffs, rm.phi);
            cur = m;
            descended = true;
            break;
        }
        if (!descended) break;
    }
    return Cyclotomic(cur, std::move(coeffs));
}

Cyclotomic Cyclotomic::root(long n, long k) {
    return make(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::make(long conductor,
                            const std::vector<std::pair<long, Rational>>& terms) {
    check_cap(conductor);
    std::vector<Rational> raw(static_cast<std::size_t>(conductor), Rational(0));
    for (const auto& [e, c] : terms) {
        long k = e % conductor;
        if (k < 0) k += conductor;
        raw[static_cast<std::size_t>(k)] += c;
    }
    return canonical(conductor, std::move(raw));
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

const Rational& Cyclotomic::rational_value() const {
    if (conductor_ != 1) throw Error::invalid("value is not rational: " + to_string());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return Cyclotomic(conductor_, std::move(c));
}

std::vector<Rational> Cyclotomic::lifted_coeffs(long m) const {
    const long stride = m / conductor_;
    std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) raw[static_cast<std::size_t>(static_cast<long>(j) * stride)] = coeffs_[j];
    return raw;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (conductor_ == o.conductor_) {
        std::vector<Rational> c = coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
        return canonical(conductor_, std::move(c));
    }
    const long m = std::lcm(conductor_, o.conductor_);
    check_cap(m);
    auto a = lifted_coeffs(m);
    auto b = o.lifted_coeffs(m);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return canonical(m, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const long m = std::lcm(conductor_, o.conductor_);
    check_cap(m);
    const Reduction& red = reduction_for(m);
    std::vector<Rational> a = reduce_mod_phi(lifted_coeffs(m), red);
    std::vector<Rational> b = reduce_mod_phi(o.lifted_coeffs(m), red);
    std::vector<Rational> prod(static_cast<std::size_t>(2 * red.phi - 1), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    return canonical(m, std::move(prod));
}

Cyclotomic Cyclotomic::conjugate() const {
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (conductor_ == 1) return *this;
    long kk = k % conductor_;
    if (kk < 0) kk += conductor_;
    if (std::gcd(kk, conductor_) != 1)
        throw Error::invalid("galois exponent " + std::to_string(k) +
                             " is not coprime to conductor " + std::to_string(conductor_));
    return canonical(conductor_, galois_raw(conductor_, kk, coeffs_));
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * M_PI / static_cast<double>(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const double a = step * static_cast<double>(j);
        acc += to_double(coeffs_[j]) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = static_cast<std::size_t>(conductor_) * 0x9E3779B97F4A7C15ull;
    for (const auto& c : coeffs_) h = (h * 1099511628211ull) ^ hash_value(c);
    return h;
}

std::string Cyclotomic::to_string() const {
    if (conductor_ == 1) return twistcode::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational a = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (j == 0) {
            os << twistcode::to_string(a);
        } else {
            if (a != 1) os << twistcode::to_string(a) << "*";
            os << "z" << conductor_;
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

namespace {

struct Lexer {
    std::string s;
    std::size_t i = 0;
    explicit Lexer(std::string text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char next() { return s[i++]; }
    long integer() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw Error::parse("expected digits at position " + std::to_string(start) + " in cyclotomic literal");
        return std::stol(s.substr(start, i - start));
    }
};

} // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
    Lexer lx(text);
    if (lx.done()) throw Error::parse("empty cyclotomic literal");
    Cyclotomic total;
    while (!lx.done()) {
        long sign = 1;
        while (!lx.done() && (lx.peek() == '+' || lx.peek() == '-')) {
            if (lx.next() == '-') sign = -sign;
        }
        if (lx.done()) throw Error::parse("dangling sign in cyclotomic literal '" + text + "'");
        Rational coeff(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            long num = lx.integer();
            long den = 1;
            if (!lx.done() && lx.peek() == '/') {
                lx.next();
                den = lx.integer();
                if (den == 0) throw Error::parse("zero denominator in cyclotomic literal");
            }
            coeff = Rational(sign * num, den);
            coeff.canonicalize();
            have_coeff = true;
        }
        long n = 1, k = 0;
        bool have_root = false;
        if (!lx.done() && (lx.peek() == '*' || lx.peek() == 'z')) {
            if (lx.peek() == '*') {
                lx.next();
                if (lx.done() || lx.peek() != 'z')
                    throw Error::parse("expected root of unity after '*' in '" + text + "'");
            }
            lx.next(); // 'z'
            n = lx.integer();
            k = 1;
            if (!lx.done() && lx.peek() == '^') {
                lx.next();
                k = lx.integer();
            }
            have_root = true;
        }
        if (!have_coeff && !have_root)
            throw Error::parse("unexpected character '" + std::string(1, lx.peek()) +
                               "' in cyclotomic literal '" + text + "'");
        Cyclotomic term = have_root ? Cyclotomic::make(n, {{k, coeff}}) : Cyclotomic(coeff);
        total += term;
    }
    return total;
}

} // namespace twistcode
