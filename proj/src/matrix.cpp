#include "twistcode/matrix.hpp"

#include <sstream>

#include "twistcode/errors.hpp"

namespace twistcode {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw Error::invalid("matrix shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Cyclotomic acc;
            for (int k = 0; k < cols_; ++k) {
                const Cyclotomic& x = at(i, k);
                const Cyclotomic& y = o.at(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                acc += x * y;
            }
            r.at(i, j) = std::move(acc);
        }
    return r;
}

CycMatrix CycMatrix::adjoint() const {
    CycMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conjugate();
    return r;
}

CycMatrix CycMatrix::galois(long k) const {
    CycMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).galois(k);
    return r;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Cyclotomic CycMatrix::det() const {
    if (rows_ != cols_) throw Error::invalid("determinant of non-square matrix");
    switch (rows_) {
        case 1:
            return at(0, 0);
        case 2:
            return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        case 3:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        default:
            throw Error::invalid("determinant supported up to 3x3");
    }
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != Cyclotomic(1)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_unitary() const {
    return rows_ == cols_ && (*this * adjoint()).is_identity();
}

Eigen::MatrixXcd CycMatrix::embed() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).embed();
    return m;
}

std::string CycMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            os << at(i, j).to_string();
            if (j + 1 < cols_) os << ", ";
        }
        os << "]";
        if (i + 1 < rows_) os << ", ";
    }
    os << "]";
    return os.str();
}

std::size_t CycMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(rows_) * 31 + static_cast<std::size_t>(cols_);
    for (const auto& z : a_) h = (h * 1099511628211ull) ^ z.hash();
    return h;
}

} // namespace twistcode
