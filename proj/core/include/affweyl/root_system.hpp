#pragma once

#include "affweyl/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affweyl {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple finite-dimensional algebra: family letter plus rank.
struct AlgebraFamily {
    Family family;
    int rank;

    bool operator==(const AlgebraFamily&) const = default;
};

/// "A3", "B12", "E8", ... Throws ParseError / UnsupportedRank.
AlgebraFamily parse_algebra(std::string_view text);
std::string to_string(const AlgebraFamily& a);

/// A_r r>=1; B_r, C_r r>=2; D_r r>=4; E_6..E_8; F_4; G_2.
bool rank_supported(const AlgebraFamily& a);

/// r for B,C,D,E8,F4; r+1 for A,E7,G2; r+2 for E6.
int ambient_dimension(const AlgebraFamily& a);

enum class LabelKind : std::uint8_t {
    PairMinus,  // alpha_{ij}^- / alpha_{ij}
    PairPlus,   // alpha_{ij}^+
    Diag,       // alpha_{ii}
    SignVector, // alpha_{+-...}
    Simple,     // alpha_i
    Theta,      // theta
};

/// Structured root name mirroring the tables' typeset labels.
struct RootLabel {
    LabelKind kind = LabelKind::Theta;
    int i = 0;
    int j = 0;
    std::vector<std::int8_t> signs; // +1 / -1 per sign slot, SignVector only

    static RootLabel pair_minus(int i, int j) { return {LabelKind::PairMinus, i, j, {}}; }
    static RootLabel pair_plus(int i, int j) { return {LabelKind::PairPlus, i, j, {}}; }
    static RootLabel diag(int i) { return {LabelKind::Diag, i, 0, {}}; }
    static RootLabel sign_vector(std::vector<std::int8_t> s) { return {LabelKind::SignVector, 0, 0, std::move(s)}; }
    static RootLabel simple(int i) { return {LabelKind::Simple, i, 0, {}}; }
    static RootLabel theta() { return {LabelKind::Theta, 0, 0, {}}; }

    bool operator==(const RootLabel&) const = default;
    /// Deterministic order: PairMinus < PairPlus < Diag < SignVector < Simple < Theta,
    /// then indices, then signs with '+' before '-'.
    bool operator<(const RootLabel& o) const;
};

/// A label together with the side of Delta it refers to.
struct SignedLabel {
    RootLabel label;
    bool negative = false;

    bool operator==(const SignedLabel&) const = default;
};

/// Immutable root system with the explicit embedding of the tables. All queries are
/// pure and the object is safe to share across threads after construction.
class RootSystem {
public:
    const AlgebraFamily& algebra() const { return algebra_; }
    int rank() const { return algebra_.rank; }
    int ambient() const { return ambient_; }

    /// 1-based, as everywhere in the tables.
    const RationalVector& simple_root(int i) const;
    const RationalVector& simple_coroot(int i) const;

    /// Positive roots keyed by their canonical table label, sorted by label order.
    const std::vector<std::pair<RootLabel, RationalVector>>& positive_roots() const { return positive_; }

    const RationalVector& theta() const { return theta_; }
    const RationalVector& theta_dual() const { return theta_dual_; }
    const std::vector<long long>& theta_marks() const { return theta_marks_; }

    bool is_positive_root(const RationalVector& v) const;
    /// +1 for v in Delta_+, -1 for -v in Delta_+, 0 otherwise.
    int root_sign(const RationalVector& v) const;

    /// Resolves any label (including the Simple/Theta aliases) to its vector.
    const RationalVector& vector_of(const RootLabel& label) const;

    /// Exact expansion in the simple-root / simple-coroot basis; nullopt outside the span.
    std::optional<std::vector<Rational>> coords_in_simple_basis(const RationalVector& v) const;
    std::optional<std::vector<Rational>> coords_in_coroot_basis(const RationalVector& v) const;

private:
    friend RootSystem build_root_system(const AlgebraFamily& algebra);

    AlgebraFamily algebra_{Family::A, 1};
    int ambient_ = 0;
    std::vector<RationalVector> simple_;
    std::vector<RationalVector> simple_coroot_;
    std::vector<std::pair<RootLabel, RationalVector>> positive_;
    std::map<RationalVector, std::size_t> index_of_vector_;
    RationalVector theta_;
    RationalVector theta_dual_;
    std::vector<long long> theta_marks_;
};

/// Constructs the full embedding of the family. Throws UnsupportedRank.
RootSystem build_root_system(const AlgebraFamily& algebra);

/// 2 alpha / (alpha, alpha); alpha must lie in +-Delta.
RationalVector dual_root(const RootSystem& rs, const RationalVector& alpha);

/// A_ij = (alpha_i^dual, alpha_j), exact integers.
std::vector<std::vector<long long>> cartan_matrix(const RootSystem& rs);

/// Integer coefficients of a root on the simple roots (all of one sign).
std::vector<long long> simple_expansion(const RootSystem& rs, const RationalVector& root);

/// Integer coefficients of a dual root on the dual simple roots.
std::vector<long long> dual_expansion(const RootSystem& rs, const RationalVector& dual);

/// Canonical label of v (Simple(i) for simple roots), negative-flagged for -Delta_+,
/// nullopt when v is not a root. Total function.
std::optional<SignedLabel> lookup_label(const RootSystem& rs, const RationalVector& v);

/// Root text grammar: a[i,j] / a[i,j]+ / a[i,j]- / d[i] / s[+-...] / alpha[i] / theta /
/// c:[c_1,...,c_r]. Throws ParseError (syntax) or NotARoot (well-formed, not in Delta).
SignedLabel parse_root(const RootSystem& rs, std::string_view text);

std::string print_root(const RootSystem& rs, const RootLabel& label);
std::string print_root(const RootSystem& rs, const SignedLabel& label);

} // namespace affweyl
