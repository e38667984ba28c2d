#include "twistcode/char_theory.hpp"

#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group)
        throw Error::invalid("class functions belong to different groups");
}

} // namespace

ClassFunction trivial_character(GroupPtr g) {
    return {g, std::vector<Cyclotomic>(static_cast<std::size_t>(g->num_classes()), Cyclotomic(1))};
}

ClassFunction embedding_character(GroupPtr g) {
    return {g, g->class_traces()};
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    const auto& g = *a.group;
    Cyclotomic acc;
    for (int c = 0; c < g.num_classes(); ++c) {
        const auto& x = a.values[static_cast<std::size_t>(c)];
        const auto& y = b.values[static_cast<std::size_t>(c)];
        if (x.is_zero() || y.is_zero()) continue;
        acc += Rational(g.class_sizes()[static_cast<std::size_t>(c)]) * (x.conjugate() * y);
    }
    return Rational(1, g.size()) * acc;
}

long integer_inner_product(const ClassFunction& a, const ClassFunction& b) {
    Cyclotomic v = inner_product(a, b);
    if (!v.is_integer())
        throw Error::validation("character inner product is not an integer: " + v.to_string());
    long r = to_long(v.rational_value());
    if (r < 0)
        throw Error::validation("character inner product is negative: " + std::to_string(r));
    return r;
}

long norm(const ClassFunction& a) { return integer_inner_product(a, a); }

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

ClassFunction conjugate(const ClassFunction& a) {
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (const auto& v : a.values) r.values.push_back(v.conjugate());
    return r;
}

ClassFunction power(const ClassFunction& a, long n) {
    if (n < 0) throw Error::invalid("negative character power");
    ClassFunction r = trivial_character(a.group);
    ClassFunction base = a;
    // pointwise square-and-multiply; values are exact so this is just speed
    while (n > 0) {
        if (n & 1) r = tensor(r, base);
        n >>= 1;
        if (n) base = tensor(base, base);
    }
    return r;
}

IrrepTable::IrrepTable(GroupPtr group, std::vector<Irrep> irreps)
    : group_(std::move(group)), irreps_(std::move(irreps)) {
    validate();
}

const Irrep& IrrepTable::by_name(const std::string& name) const {
    for (const auto& ir : irreps_)
        if (ir.name == name) return ir;
    throw Error::invalid("no irrep named '" + name + "' in the table");
}

bool IrrepTable::has(const std::string& name) const {
    for (const auto& ir : irreps_)
        if (ir.name == name) return true;
    return false;
}

void IrrepTable::validate() const {
    if (!group_) throw Error::validation("irrep table has no group");
    long sumsq = 0;
    for (const auto& ir : irreps_) {
        if (ir.character.group != group_)
            throw Error::validation("irrep character bound to the wrong group");
        const Cyclotomic& id = ir.character.at_identity();
        if (!id.is_integer() || to_long(id.rational_value()) != ir.degree || ir.degree <= 0)
            throw Error::validation("irrep '" + ir.name + "' degree disagrees with its identity value");
        sumsq += ir.degree * ir.degree;
    }
    if (sumsq != group_->size())
        throw Error::validation("sum of squared degrees " + std::to_string(sumsq) +
                                " != |G| = " + std::to_string(group_->size()));
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        for (std::size_t j = i; j < irreps_.size(); ++j) {
            Cyclotomic ip = inner_product(irreps_[i].character, irreps_[j].character);
            const Cyclotomic expect = Cyclotomic(i == j ? 1 : 0);
            if (ip != expect)
                throw Error::validation("irreducible characters are not orthonormal: <" +
                                        irreps_[i].name + ", " + irreps_[j].name + "> = " +
                                        ip.to_string());
        }
}

std::vector<std::pair<std::string, long>> decompose(const ClassFunction& a,
                                                    const IrrepTable& table) {
    if (a.group != table.group())
        throw Error::invalid("class function and table belong to different groups");
    std::vector<std::pair<std::string, long>> out;
    std::vector<Cyclotomic> recon(a.values.size(), Cyclotomic(0));
    for (const auto& ir : table.irreps()) {
        Cyclotomic ip = inner_product(ir.character, a);
        if (!ip.is_integer())
            throw Error::validation("multiplicity of " + ir.name +
                                    " is not an integer: " + ip.to_string() +
                                    " (input is not a character of this group)");
        long m = to_long(ip.rational_value());
        if (m < 0)
            throw Error::validation("negative multiplicity of " + ir.name +
                                    " (input is not a character of this group)");
        if (m != 0) {
            out.push_back({ir.name, m});
            for (std::size_t c = 0; c < recon.size(); ++c)
                recon[c] += Rational(m) * ir.character.values[c];
        }
    }
    if (recon != a.values)
        throw Error::validation("decomposition does not reconstruct the input exactly");
    return out;
}

} // namespace twistcode
