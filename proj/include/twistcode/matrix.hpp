#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "twistcode/cyclotomic.hpp"

namespace twistcode {

/// Small dense matrix over Q(zeta), row-major. Sized for q <= 3 group
/// generators, never for the q^n code spaces (those are float-side).
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static CycMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Cyclotomic& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    CycMatrix operator*(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const { return a_ == o.a_ && rows_ == o.rows_; }

    CycMatrix adjoint() const; // conjugate transpose
    CycMatrix galois(long k) const;
    Cyclotomic trace() const;
    Cyclotomic det() const; // up to 3x3

    bool is_identity() const;
    bool is_unitary() const; // exact: M M^dagger == I

    Eigen::MatrixXcd embed() const;
    std::string to_string() const; // bracketed literal rows, for diagnostics

    std::size_t hash() const;

private:
    int rows_, cols_;
    std::vector<Cyclotomic> a_;
};

} // namespace twistcode
