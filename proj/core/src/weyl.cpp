#include "affweyl/weyl.hpp"

#include <cstddef>

namespace affweyl {

SimpleWord free_cancelled(SimpleWord w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int letter : w.letters) {
        if (!out.empty() && out.back() == letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return SimpleWord{std::move(out)};
}

RationalVector reflect(const RootSystem& rs, const RationalVector& alpha, const RationalVector& lambda) {
    if (rs.root_sign(alpha) == 0) throw NotARoot("reflect in a non-root");
    if (lambda.size() != alpha.size()) throw DimensionMismatch("weight of wrong dimension");
    RationalVector dual = Rational(2) / inner_product(alpha, alpha) * alpha;
    return lambda - inner_product(lambda, dual) * alpha;
}

FiniteElement reflection_matrix(const RootSystem& rs, const RationalVector& alpha) {
    if (rs.root_sign(alpha) == 0) throw NotARoot("reflection matrix of a non-root");
    const std::size_t n = static_cast<std::size_t>(rs.ambient());
    RationalVector dual = Rational(2) / inner_product(alpha, alpha) * alpha;
    RationalMatrix m = RationalMatrix::identity(n);
    m.reflect_right(alpha, dual);
    return FiniteElement{std::move(m)};
}

FiniteElement finite_element_of_roots(const RootSystem& rs, const std::vector<RationalVector>& roots) {
    const std::size_t n = static_cast<std::size_t>(rs.ambient());
    FiniteElement e = FiniteElement::identity(n);
    for (const auto& alpha : roots) {
        if (rs.root_sign(alpha) == 0) throw NotARoot("word contains a non-root");
        RationalVector dual = Rational(2) / inner_product(alpha, alpha) * alpha;
        e.matrix.reflect_right(alpha, dual);
    }
    return e;
}

FiniteElement finite_element_of_word(const RootSystem& rs, const SimpleWord& w) {
    std::vector<RationalVector> roots;
    roots.reserve(w.letters.size());
    for (int letter : w.letters) roots.push_back(rs.simple_root(letter));
    return finite_element_of_roots(rs, roots);
}

SimpleWord decompose_classical(const RootSystem& rs, const RationalVector& beta) {
    int sign = rs.root_sign(beta);
    if (sign == 0) throw NotARoot("decompose_classical of a non-root");
    RationalVector b = sign < 0 ? -beta : beta; // sigma_{-alpha} = sigma_alpha

    std::vector<int> prefix;
    for (;;) {
        int simple_index = 0;
        for (int i = 1; i <= rs.rank(); ++i)
            if (b == rs.simple_root(i)) {
                simple_index = i;
                break;
            }
        if (simple_index) {
            std::vector<int> letters = prefix;
            letters.push_back(simple_index);
            for (std::size_t k = prefix.size(); k-- > 0;) letters.push_back(prefix[k]);
            return free_cancelled(SimpleWord{std::move(letters)});
        }
        // Smallest simple index with positive pairing; sigma_i(b) stays positive and
        // strictly drops in height, so this terminates.
        int pick = 0;
        for (int i = 1; i <= rs.rank(); ++i) {
            if (inner_product(b, rs.simple_coroot(i)) > 0) {
                pick = i;
                break;
            }
        }
        if (!pick) throw NotARoot("no positive pairing, input was not a root");
        prefix.push_back(pick);
        b -= inner_product(b, rs.simple_coroot(pick)) * rs.simple_root(pick);
    }
}

} // namespace affweyl
