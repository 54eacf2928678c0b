#pragma once

#include "affweyl/root_system.hpp"

#include <vector>

namespace affweyl {

/// Word in fundamental reflections. Letters are simple indices (1..r for classical
/// words, 0..r once affine); the rightmost letter acts first.
struct SimpleWord {
    std::vector<int> letters;

    bool operator==(const SimpleWord&) const = default;
};

/// Removes adjacent equal letters repeatedly (sigma_i^2 = id).
SimpleWord free_cancelled(SimpleWord w);

/// Finite Weyl group element as its exact orthogonal matrix in the ambient basis.
struct FiniteElement {
    RationalMatrix matrix;

    static FiniteElement identity(std::size_t n) { return {RationalMatrix::identity(n)}; }
    RationalVector apply(const RationalVector& v) const { return matrix.apply(v); }

    bool operator==(const FiniteElement&) const = default;
};

/// sigma_alpha(lambda) = lambda - (lambda, alpha^dual) alpha; alpha in +-Delta.
RationalVector reflect(const RootSystem& rs, const RationalVector& alpha, const RationalVector& lambda);

FiniteElement reflection_matrix(const RootSystem& rs, const RationalVector& alpha);

/// Exact product, rightmost letter first; the empty word is the identity.
FiniteElement finite_element_of_word(const RootSystem& rs, const SimpleWord& w);

/// Same, for a list of (not necessarily simple) root reflections.
FiniteElement finite_element_of_roots(const RootSystem& rs, const std::vector<RationalVector>& roots);

/// Decomposes sigma_beta into fundamental reflections: if beta is simple the word is
/// [i]; otherwise recurse on beta - (beta, alpha_i^dual) alpha_i for the smallest
/// simple index with positive pairing. The result has odd length and its matrix equals
/// reflection_matrix(beta); it is not required to be reduced.
SimpleWord decompose_classical(const RootSystem& rs, const RationalVector& beta);

} // namespace affweyl
