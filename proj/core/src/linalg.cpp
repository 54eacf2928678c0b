#include "affweyl/linalg.hpp"

#include <cstddef>

namespace affweyl {

RationalVector RationalVector::unit(std::size_t n, std::size_t pos) {
    RationalVector v(n);
    v[pos - 1] = 1;
    return v;
}

bool RationalVector::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
    if (size() != o.size()) throw DimensionMismatch("vector addition with mismatched lengths");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
    if (size() != o.size()) throw DimensionMismatch("vector subtraction with mismatched lengths");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

RationalVector RationalVector::operator-() const {
    RationalVector v(*this);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -v[k];
    return v;
}

Rational inner_product(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner product with mismatched lengths");
    Rational acc = 0;
    for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * v[k];
    return acc;
}

std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ", ";
        s += to_string(v[k]);
    }
    s += ")";
    return s;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product with mismatched shapes");
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product with mismatched shapes");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void RationalMatrix::reflect_right(const RationalVector& root, const RationalVector& dual) {
    // M (I - root dual^T) = M - (M root) dual^T, a rank-one update.
    RationalVector u = apply(root);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (dual[j] == 0) continue;
            at(i, j) -= u[i] * dual[j];
        }
    }
}

std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<RationalVector>& basis,
                                                          const RationalVector& v) {
    const std::size_t r = basis.size();
    const std::size_t n = v.size();
    // Augmented system [basis | v], eliminated by exact Gaussian elimination.
    RationalMatrix m(n, r + 1);
    for (std::size_t j = 0; j < r; ++j) {
        if (basis[j].size() != n) throw DimensionMismatch("basis vector of wrong length");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) m.at(i, r) = v[i];

    std::vector<std::size_t> pivot_row(r, n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m.at(p, col) == 0) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = col; j <= r; ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j <= r; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j <= r; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_row[col] = row;
        ++row;
    }
    // The simple roots are independent, so every column must have pivoted.
    for (std::size_t col = 0; col < r; ++col)
        if (pivot_row[col] == n) return std::nullopt;
    // Consistency: rows without pivots must have zero right-hand side.
    for (std::size_t i = row; i < n; ++i)
        if (m.at(i, r) != 0) return std::nullopt;

    std::vector<Rational> coeffs(r);
    for (std::size_t col = 0; col < r; ++col) coeffs[col] = m.at(pivot_row[col], r);
    return coeffs;
}

} // namespace affweyl
