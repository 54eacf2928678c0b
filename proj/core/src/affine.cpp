#include "affweyl/affine.hpp"

#include <algorithm>
#include <cstddef>

namespace affweyl {

Rational affine_scalar_product(const AffineWeight& a, const AffineWeight& b) {
    return inner_product(a.lambda, b.lambda) + a.k * b.m + b.k * a.m;
}

AffineRoot AffineRoot::imaginary(long long n) {
    if (n == 0) throw NotARoot("imaginary affine root requires n != 0");
    return AffineRoot(n);
}

const RationalVector& AffineRoot::alpha() const {
    if (!alpha_) throw ImaginaryRootReflection("imaginary root has no finite part");
    return *alpha_;
}

AffineWeight affine_reflect(const RootSystem& rs, const AffineRoot& root, const AffineWeight& w) {
    if (!root.is_real()) throw ImaginaryRootReflection("no reflection for imaginary roots n delta");
    const RationalVector& alpha = root.alpha();
    if (rs.root_sign(alpha) == 0) throw NotARoot("affine reflection in a non-root");
    if (w.lambda.size() != alpha.size()) throw DimensionMismatch("weight of wrong dimension");

    const Rational n = root.n();
    RationalVector dual = Rational(2) / inner_product(alpha, alpha) * alpha;
    RationalVector lambda_n = w.lambda + n * w.k * dual;
    RationalVector image = lambda_n - inner_product(lambda_n, dual) * alpha;
    // Grade change written without the 1/(2k) of the textbook formula, so k = 0 works.
    Rational m = w.m - n * inner_product(dual, w.lambda) - n * n * w.k * inner_product(dual, dual) / 2;
    return AffineWeight{std::move(image), w.k, std::move(m)};
}

namespace {

void require_coroot_lattice(const RootSystem& rs, const RationalVector& mu) {
    auto coords = rs.coords_in_coroot_basis(mu);
    if (!coords) throw NotInCorootLattice("translation vector outside the coroot span");
    for (const auto& c : *coords)
        if (c.denominator() != 1) throw NotInCorootLattice("translation vector not in the coroot lattice");
}

} // namespace

AffineWeight translate(const RootSystem& rs, const RationalVector& mu, long long power, const AffineWeight& w) {
    require_coroot_lattice(rs, mu);
    if (w.lambda.size() != mu.size()) throw DimensionMismatch("weight of wrong dimension");
    const Rational p = power;
    RationalVector lambda = w.lambda + p * w.k * mu;
    Rational m = w.m - p * inner_product(w.lambda, mu) - p * p * w.k * inner_product(mu, mu) / 2;
    return AffineWeight{std::move(lambda), w.k, std::move(m)};
}

CanonicalAffineElement CanonicalAffineElement::identity(const RootSystem& rs) {
    const std::size_t n = static_cast<std::size_t>(rs.ambient());
    return CanonicalAffineElement{FiniteElement::identity(n), RationalVector(n)};
}

CanonicalAffineElement compose(const CanonicalAffineElement& a, const CanonicalAffineElement& b) {
    // (w1, mu1)(w2, mu2) = (w1 w2, w2^{-1}(mu1) + mu2); w orthogonal, so w^{-1} = w^T.
    return CanonicalAffineElement{FiniteElement{a.w.matrix * b.w.matrix},
                                  b.w.matrix.transposed().apply(a.mu) + b.mu};
}

namespace {

// Appends one reflection token on the right of the running normal form.
void fold_reflection(CanonicalAffineElement& e, const RationalVector& root, const RationalVector& dual,
                     const RationalVector* shift) {
    e.w.matrix.reflect_right(root, dual);
    e.mu -= inner_product(e.mu, dual) * root; // sigma(mu)
    if (shift) e.mu += *shift;
}

} // namespace

CanonicalAffineElement canonical_of_word(const RootSystem& rs, const AffineWord& word) {
    CanonicalAffineElement e = CanonicalAffineElement::identity(rs);
    const RationalVector& theta = rs.theta();
    const RationalVector& theta_dual = rs.theta_dual();
    const RationalVector minus_theta_dual = -theta_dual;

    for (const auto& token : word) {
        if (const auto* s = std::get_if<SimpleAffineTok>(&token)) {
            if (s->index < 0 || s->index > rs.rank()) throw NotARoot("affine letter out of range");
            if (s->index == 0)
                fold_reflection(e, theta, theta_dual, &minus_theta_dual);
            else
                fold_reflection(e, rs.simple_root(s->index), rs.simple_coroot(s->index), nullptr);
        } else if (const auto* named = std::get_if<NamedReflectionTok>(&token)) {
            const RationalVector& root = rs.vector_of(named->label);
            RationalVector dual = Rational(2) / inner_product(root, root) * root;
            fold_reflection(e, root, dual, nullptr);
        } else {
            const auto& t = std::get<TranslationTok>(token);
            if (t.coroot_coeffs.size() != static_cast<std::size_t>(rs.rank()))
                throw DimensionMismatch("translation token with wrong coefficient count");
            RationalVector mu(static_cast<std::size_t>(rs.ambient()));
            for (int i = 1; i <= rs.rank(); ++i)
                mu += Rational(t.coroot_coeffs[static_cast<std::size_t>(i - 1)] * t.power) * rs.simple_coroot(i);
            e.mu += mu;
        }
    }
    return e;
}

CanonicalAffineElement canonical_of_affine_root(const RootSystem& rs, const AffineRoot& root) {
    if (!root.is_real()) throw ImaginaryRootReflection("no reflection for imaginary roots n delta");
    const RationalVector& alpha = root.alpha();
    if (rs.root_sign(alpha) == 0) throw NotARoot("affine reflection in a non-root");
    RationalVector dual = Rational(2) / inner_product(alpha, alpha) * alpha;
    CanonicalAffineElement e = CanonicalAffineElement::identity(rs);
    e.w = reflection_matrix(rs, alpha);
    e.mu = Rational(root.n()) * dual; // sigma_{(alpha,0,n)} = sigma_alpha o t_{alpha^dual}^n
    return e;
}

AffineWeight canonical_action(const RootSystem& rs, const CanonicalAffineElement& e, const AffineWeight& w) {
    if (w.lambda.size() != static_cast<std::size_t>(rs.ambient()))
        throw DimensionMismatch("weight of wrong dimension");
    RationalVector shifted = w.lambda + w.k * e.mu;
    Rational m = w.m - inner_product(w.lambda, e.mu) - w.k * inner_product(e.mu, e.mu) / 2;
    return AffineWeight{e.w.apply(shifted), w.k, std::move(m)};
}

namespace {

NamedReflectionTok named_token(const RootSystem& rs, const RationalVector& root) {
    auto label = lookup_label(rs, root);
    if (!label) throw NotARoot("expected a root while naming a reflection");
    return NamedReflectionTok{label->label, label->negative};
}

// One commuting factor of a translation: either t_{theta^dual} = sigma_0 sigma_theta
// or a lemma word t_{beta^dual} = sigma_0 sigma_{theta-beta} sigma_0 sigma_beta.
struct TranslationAtom {
    bool is_theta = false;
    RationalVector beta; // empty for the theta atom
    bool inverted = false;

    bool same_base(const TranslationAtom& o) const { return is_theta == o.is_theta && beta == o.beta; }
};

std::vector<TranslationAtom> inverted(std::vector<TranslationAtom> atoms) {
    std::reverse(atoms.begin(), atoms.end());
    for (auto& a : atoms) a.inverted = !a.inverted;
    return atoms;
}

// Factorization of t_{beta^dual} per the two-step representation search
// beta^dual = theta^dual - gamma_1^dual [- gamma_2^dual].
std::vector<TranslationAtom> translation_atoms(const RootSystem& rs, const RationalVector& beta, int depth) {
    if (beta == rs.theta()) return {TranslationAtom{true, {}, false}};
    if (inner_product(rs.theta_dual(), beta) == 1) return {TranslationAtom{false, beta, false}};
    if (depth <= 0)
        throw ConstructionFailed("translation representation search exceeded its depth cap");

    RationalVector target = rs.theta_dual() - Rational(2) / inner_product(beta, beta) * beta;
    const auto& positives = rs.positive_roots();
    std::vector<RationalVector> duals;
    duals.reserve(positives.size());
    for (const auto& [label, vec] : positives)
        duals.push_back(Rational(2) / inner_product(vec, vec) * vec);

    for (std::size_t a = 0; a < positives.size(); ++a)
        if (duals[a] == target) {
            auto out = inverted(translation_atoms(rs, positives[a].second, depth - 1));
            out.push_back(TranslationAtom{true, {}, false});
            return out;
        }
    for (std::size_t a = 0; a < positives.size(); ++a)
        for (std::size_t b = a; b < positives.size(); ++b)
            if (duals[a] + duals[b] == target) {
                auto out = inverted(translation_atoms(rs, positives[a].second, depth - 1));
                auto second = inverted(translation_atoms(rs, positives[b].second, depth - 1));
                out.insert(out.end(), second.begin(), second.end());
                out.push_back(TranslationAtom{true, {}, false});
                return out;
            }
    throw ConstructionFailed("no representation with at most two dual positive roots for " +
                             to_string(rs.algebra()));
}

// Translations commute, so opposite factors of the same base cancel.
void cancel_atoms(std::vector<TranslationAtom>& atoms) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < atoms.size() && !changed; ++a)
            for (std::size_t b = 0; b < atoms.size() && !changed; ++b) {
                if (a == b || !atoms[a].same_base(atoms[b])) continue;
                if (atoms[a].inverted == atoms[b].inverted) continue;
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
                atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(std::min(a, b)));
                changed = true;
            }
    }
}

bool same_reflection(const RootSystem& rs, const AffineWordToken& a, const AffineWordToken& b) {
    if (const auto* sa = std::get_if<SimpleAffineTok>(&a)) {
        const auto* sb = std::get_if<SimpleAffineTok>(&b);
        return sb && sa->index == sb->index;
    }
    if (const auto* na = std::get_if<NamedReflectionTok>(&a)) {
        const auto* nb = std::get_if<NamedReflectionTok>(&b);
        if (!nb) return false;
        const RationalVector& va = rs.vector_of(na->label);
        const RationalVector& vb = rs.vector_of(nb->label);
        return va == vb || va == -vb;
    }
    return false;
}

AffineWord cancelled_word(const RootSystem& rs, const AffineWord& in) {
    AffineWord out;
    for (const auto& token : in) {
        if (!out.empty() && !std::holds_alternative<TranslationTok>(token) &&
            same_reflection(rs, out.back(), token))
            out.pop_back();
        else
            out.push_back(token);
    }
    return out;
}

AffineWord emit_atoms(const RootSystem& rs, const std::vector<TranslationAtom>& atoms) {
    AffineWord word;
    for (const auto& atom : atoms) {
        AffineWord piece;
        if (atom.is_theta) {
            piece = {SimpleAffineTok{0}, named_token(rs, rs.theta())};
        } else {
            piece = {SimpleAffineTok{0}, named_token(rs, rs.theta() - atom.beta), SimpleAffineTok{0},
                     named_token(rs, atom.beta)};
        }
        if (atom.inverted) std::reverse(piece.begin(), piece.end());
        word.insert(word.end(), piece.begin(), piece.end());
    }
    return cancelled_word(rs, word);
}

} // namespace

AffineWord lemma_word(const RootSystem& rs, const RationalVector& alpha) {
    if (!rs.is_positive_root(alpha)) throw NotARoot("lemma requires a positive root");
    if (inner_product(rs.theta_dual(), alpha) != 1)
        throw LemmaConditionFailed("lemma requires (theta^dual, alpha) = 1");
    return AffineWord{SimpleAffineTok{0}, named_token(rs, rs.theta() - alpha), SimpleAffineTok{0},
                      named_token(rs, alpha)};
}

AffineWord fundamental_translation_word(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw NotARoot("simple index out of range");
    auto atoms = translation_atoms(rs, rs.simple_root(i), 3);
    cancel_atoms(atoms);
    return emit_atoms(rs, atoms);
}

namespace {

std::vector<int> expand_to_letters(const RootSystem& rs, const AffineWord& word) {
    std::vector<int> letters;
    for (const auto& token : word) {
        if (const auto* s = std::get_if<SimpleAffineTok>(&token)) {
            letters.push_back(s->index);
        } else if (const auto* named = std::get_if<NamedReflectionTok>(&token)) {
            SimpleWord w = decompose_classical(rs, rs.vector_of(named->label));
            letters.insert(letters.end(), w.letters.begin(), w.letters.end());
        } else {
            throw ConstructionFailed("translation token cannot expand to letters directly");
        }
    }
    return letters;
}

} // namespace

SimpleWord decompose_affine(const RootSystem& rs, const AffineRoot& root) {
    if (!root.is_real()) throw ImaginaryRootReflection("no reflection for imaginary roots n delta");
    int sign = rs.root_sign(root.alpha());
    if (sign == 0) throw NotARoot("affine reflection in a non-root");
    RationalVector alpha = sign < 0 ? -root.alpha() : root.alpha();
    const long long power = sign < 0 ? -root.n() : root.n();

    // sigma_{(alpha,0,n)} = sigma_alpha o t_{alpha^dual}^n, and the dual root expands
    // integrally on the dual simple roots.
    std::vector<int> letters = decompose_classical(rs, alpha).letters;
    if (power != 0) {
        std::vector<long long> coeffs = dual_expansion(rs, dual_root(rs, alpha));
        std::vector<int> unit;
        for (int i = 1; i <= rs.rank(); ++i) {
            long long c = coeffs[static_cast<std::size_t>(i - 1)];
            if (c == 0) continue;
            std::vector<int> piece = expand_to_letters(rs, fundamental_translation_word(rs, i));
            for (long long rep = 0; rep < c; ++rep) unit.insert(unit.end(), piece.begin(), piece.end());
        }
        if (power < 0) std::reverse(unit.begin(), unit.end());
        for (long long rep = 0; rep < (power < 0 ? -power : power); ++rep)
            letters.insert(letters.end(), unit.begin(), unit.end());
    }
    return free_cancelled(SimpleWord{std::move(letters)});
}

Rational normalized_level(const RootSystem& rs, const Rational& k) {
    return Rational(2) * k / inner_product(rs.theta(), rs.theta());
}

std::vector<int> theta_pairing_simples(const RootSystem& rs) {
    std::vector<int> out;
    for (int i = 1; i <= rs.rank(); ++i)
        if (inner_product(rs.simple_root(i), rs.theta_dual()) == 1) out.push_back(i);
    return out;
}

} // namespace affweyl
