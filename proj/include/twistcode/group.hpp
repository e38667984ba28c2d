#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistcode/matrix.hpp"

namespace twistcode {

struct GroupElement {
    CycMatrix matrix;
    int index = -1;
};

/// A finite subgroup of U(q) enumerated from exact unitary generators.
///
/// Element equality is structural on canonical cyclotomic entries, so closure
/// involves no floating tolerance. Enumeration is breadth-first with the
/// identity first and a deterministic frontier order (generators sorted by
/// their printed form), which makes element indices reproducible.
///
/// Conjugacy classes are ordered canonically by (element order asc, class
/// size asc, embedded trace by real then imaginary part, earliest element
/// index). The last key only breaks ties between classes that agree on all
/// the others (e.g. the two order-3 size-120 classes of Sigma(360phi), which
/// are swapped by an outer automorphism and indistinguishable by any
/// order/size/trace data).
class FiniteMatrixGroup {
public:
    static constexpr long kDefaultCap = 100000;

    static FiniteMatrixGroup enumerate(std::vector<CycMatrix> generators,
                                       long cap = kDefaultCap,
                                       std::string name = "");

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elements_.size()); }

    const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    /// Index of a*b via exact product and hash lookup.
    int product(int a, int b) const;
    /// Index lookup of an exact matrix; -1 when absent.
    int index_of(const CycMatrix& m) const;

    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    long element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
    int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<long>& class_sizes() const { return class_sizes_; }
    const std::vector<int>& class_reps() const { return class_reps_; }
    long class_order(int c) const { return order_[static_cast<std::size_t>(class_reps_[static_cast<std::size_t>(c)])]; }

    /// Exact trace of a class representative (equal across the class).
    const Cyclotomic& class_trace(int c) const { return class_traces_[static_cast<std::size_t>(c)]; }
    const std::vector<Cyclotomic>& class_traces() const { return class_traces_; }

private:
    std::string name_;
    int degree_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<int> generator_indices_;
    std::vector<int> inverse_;
    std::vector<long> order_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<long> class_sizes_;
    std::vector<int> class_reps_;
    std::vector<Cyclotomic> class_traces_;

    struct Lookup;
    std::shared_ptr<Lookup> lookup_;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

} // namespace twistcode
