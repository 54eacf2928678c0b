#pragma once

#include "affweyl/root_system.hpp"
#include "affweyl/weyl.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace affweyl {

/// Affine weight Lambda = (lambda, k, m): finite part, central value, grade.
struct AffineWeight {
    RationalVector lambda;
    Rational k;
    Rational m;

    bool operator==(const AffineWeight&) const = default;
};

/// (Lambda, Lambda') = lambda.lambda' + k m' + k' m.
Rational affine_scalar_product(const AffineWeight& a, const AffineWeight& b);

/// Real affine root (alpha, 0, n) or imaginary n delta = (0, 0, n), n != 0.
class AffineRoot {
public:
    static AffineRoot real(RationalVector alpha, long long n) { return AffineRoot(std::move(alpha), n); }
    static AffineRoot imaginary(long long n);

    bool is_real() const { return alpha_.has_value(); }
    const RationalVector& alpha() const;
    long long n() const { return n_; }

    bool operator==(const AffineRoot&) const = default;

private:
    AffineRoot(RationalVector alpha, long long n) : alpha_(std::move(alpha)), n_(n) {}
    explicit AffineRoot(long long n) : n_(n) {}

    std::optional<RationalVector> alpha_;
    long long n_ = 0;
};

/// sigma_{(alpha,0,n)}(lambda, k, m) = (sigma_alpha(lambda + n k alpha^dual), k, m')
/// with the division-free grade m' = m - n (alpha^dual, lambda)
/// - n^2 k (alpha^dual, alpha^dual) / 2, valid for every k including k = 0.
/// Throws ImaginaryRootReflection for n delta.
AffineWeight affine_reflect(const RootSystem& rs, const AffineRoot& root, const AffineWeight& w);

/// t_mu^power: lambda -> lambda + power k mu with the compensating grade change;
/// mu must lie in the coroot lattice.
AffineWeight translate(const RootSystem& rs, const RationalVector& mu, long long power, const AffineWeight& w);

/// sigma_i, i in 0..r; 0 is the reflection in (-theta, 0, 1).
struct SimpleAffineTok {
    int index = 0;

    bool operator==(const SimpleAffineTok&) const = default;
};

/// sigma of a named classical root; the sign never matters (sigma_{-a} = sigma_a).
struct NamedReflectionTok {
    RootLabel label;
    bool negative = false;

    bool operator==(const NamedReflectionTok&) const = default;
};

/// t_mu^power with mu given by integer coefficients on the dual simple roots.
struct TranslationTok {
    std::vector<long long> coroot_coeffs;
    long long power = 1;

    bool operator==(const TranslationTok&) const = default;
};

using AffineWordToken = std::variant<SimpleAffineTok, NamedReflectionTok, TranslationTok>;
using AffineWord = std::vector<AffineWordToken>;

/// Exact normal form w o t_mu of an affine Weyl group element: finite part w and a
/// coroot-lattice translation mu. This is the equality oracle for words.
struct CanonicalAffineElement {
    FiniteElement w;
    RationalVector mu;

    static CanonicalAffineElement identity(const RootSystem& rs);
    bool operator==(const CanonicalAffineElement&) const = default;
};

/// (w1, mu1) * (w2, mu2) = (w1 w2, w2^{-1}(mu1) + mu2).
CanonicalAffineElement compose(const CanonicalAffineElement& a, const CanonicalAffineElement& b);

/// Normal form of a word, rightmost token acting first; the empty word is the identity.
/// sigma_0 normalizes to (matrix(sigma_theta), -theta^dual).
CanonicalAffineElement canonical_of_word(const RootSystem& rs, const AffineWord& word);

/// Normal form of a single real affine reflection: (matrix(sigma_alpha), n alpha^dual).
CanonicalAffineElement canonical_of_affine_root(const RootSystem& rs, const AffineRoot& root);

/// Evaluates w o t_mu on a weight.
AffineWeight canonical_action(const RootSystem& rs, const CanonicalAffineElement& e, const AffineWeight& w);

/// t_{alpha^dual} = sigma_0 o sigma_{theta-alpha} o sigma_0 o sigma_alpha, for alpha
/// in Delta_+ with (theta^dual, alpha) = 1. Throws LemmaConditionFailed otherwise.
AffineWord lemma_word(const RootSystem& rs, const RationalVector& alpha);

/// A word over {sigma_0, named classical reflections} whose normal form is
/// (identity, alpha_i^dual). Uses the lemma directly when it applies, otherwise the
/// bounded representation search alpha_i^dual = theta^dual - beta_1^dual - beta_2^dual.
AffineWord fundamental_translation_word(const RootSystem& rs, int i);

/// Fully expanded word over sigma_0..sigma_r for any real affine reflection; free
/// cancellation applied. The normal form of the output equals that of the input root.
SimpleWord decompose_affine(const RootSystem& rs, const AffineRoot& root);

/// 2k / theta^2.
Rational normalized_level(const RootSystem& rs, const Rational& k);

/// { i : (alpha_i, theta^dual) = 1 }, ascending.
std::vector<int> theta_pairing_simples(const RootSystem& rs);

} // namespace affweyl
