#pragma once

#include "affweyl/errors.hpp"
#include "affweyl/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace affweyl {

/// Exact-rational coordinate vector in the ambient orthonormal embedding space.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t n) : c_(n) {}
    RationalVector(std::initializer_list<Rational> xs) : c_(xs) {}

    /// e_pos in an n-dimensional space, pos is 1-based as in the tables.
    static RationalVector unit(std::size_t n, std::size_t pos);

    std::size_t size() const { return c_.size(); }
    Rational& operator[](std::size_t k) { return c_[k]; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const;

    RationalVector& operator+=(const RationalVector& o);
    RationalVector& operator-=(const RationalVector& o);
    RationalVector& operator*=(const Rational& s);

    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
    RationalVector operator-() const;

    bool operator==(const RationalVector&) const = default;

    /// Lexicographic order, usable as a map key.
    bool operator<(const RationalVector& o) const { return c_ < o.c_; }

private:
    std::vector<Rational> c_;
};

/// Euclidean scalar product of the Appendix-style orthonormal embedding.
Rational inner_product(const RationalVector& u, const RationalVector& v);

std::string to_string(const RationalVector& v);

/// Small dense exact-rational matrix; only what the Weyl machinery needs.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalVector apply(const RationalVector& v) const;
    RationalMatrix transposed() const;

    /// M <- M * (I - root * dual^T), the matrix of composing a reflection on the right.
    void reflect_right(const RationalVector& root, const RationalVector& dual);

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact coordinates of v in the (independent) basis, or nullopt when v is outside
/// its span. Basis vectors and v share the ambient dimension.
std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<RationalVector>& basis,
                                                          const RationalVector& v);

} // namespace affweyl
