#pragma once

#include <string>
#include <vector>

#include "twistcode/cyclotomic.hpp"
#include "twistcode/group.hpp"

namespace twistcode {

/// A function constant on conjugacy classes, stored in the group's canonical
/// class order. Characters are the case where values are traces of a
/// representation; several operations require that and say so.
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_identity() const { return values.front(); }
};

ClassFunction trivial_character(GroupPtr g);
/// Character of the embedding representation: exact traces per class.
ClassFunction embedding_character(GroupPtr g);

/// (1/|G|) sum_c size_c * conj(a_c) * b_c, exact.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

/// Inner product of two characters, which must be a nonnegative integer.
long integer_inner_product(const ClassFunction& a, const ClassFunction& b);

/// <a, a> for a character; 1 iff irreducible. Non-integer values mean the
/// input was not a character and are a hard data error.
long norm(const ClassFunction& a);

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
ClassFunction conjugate(const ClassFunction& a);
ClassFunction power(const ClassFunction& a, long n);

struct Irrep {
    std::string name;
    long degree = 0;
    ClassFunction character;
};

/// The full set of irreducible characters of a group, validated on load:
/// sum of squared degrees equals |G| and the rows are exactly orthonormal.
class IrrepTable {
public:
    IrrepTable() = default;
    IrrepTable(GroupPtr group, std::vector<Irrep> irreps);

    const std::vector<Irrep>& irreps() const { return irreps_; }
    std::size_t size() const { return irreps_.size(); }
    const Irrep& by_name(const std::string& name) const;
    bool has(const std::string& name) const;
    GroupPtr group() const { return group_; }

    void validate() const;

private:
    GroupPtr group_;
    std::vector<Irrep> irreps_;
};

/// Multiplicities m_i = <chi_i, a>; requires exact reconstruction
/// sum m_i chi_i == a, nonnegative integer multiplicities.
std::vector<std::pair<std::string, long>> decompose(const ClassFunction& a,
                                                    const IrrepTable& table);

} // namespace twistcode
