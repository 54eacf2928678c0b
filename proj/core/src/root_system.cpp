#include "affweyl/root_system.hpp"

#include <algorithm>
#include <cctype>

namespace affweyl {

namespace {

int sign_rank(std::int8_t s) { return s < 0 ? 1 : 0; } // '+' sorts before '-'

} // namespace

bool RootLabel::operator<(const RootLabel& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    if (signs.size() != o.signs.size()) return signs.size() < o.signs.size();
    for (std::size_t k = 0; k < signs.size(); ++k)
        if (signs[k] != o.signs[k]) return sign_rank(signs[k]) < sign_rank(o.signs[k]);
    return false;
}

AlgebraFamily parse_algebra(std::string_view text) {
    if (text.empty()) throw ParseError("empty algebra name", 0);
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c < 'A' || c > 'G') throw ParseError("algebra family must be one of A..G", 0);
    std::size_t pos = 1;
    if (pos >= text.size()) throw ParseError("missing rank", pos);
    int rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rank = rank * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos != text.size() || rank == 0) throw ParseError("malformed rank", pos);
    AlgebraFamily a{static_cast<Family>(c), rank};
    if (!rank_supported(a)) throw UnsupportedRank("unsupported rank for family " + to_string(a));
    return a;
}

std::string to_string(const AlgebraFamily& a) {
    return std::string(1, static_cast<char>(a.family)) + std::to_string(a.rank);
}

bool rank_supported(const AlgebraFamily& a) {
    switch (a.family) {
    case Family::A: return a.rank >= 1;
    case Family::B: return a.rank >= 2;
    case Family::C: return a.rank >= 2;
    case Family::D: return a.rank >= 4;
    case Family::E: return a.rank >= 6 && a.rank <= 8;
    case Family::F: return a.rank == 4;
    case Family::G: return a.rank == 2;
    }
    return false;
}

int ambient_dimension(const AlgebraFamily& a) {
    if (!rank_supported(a)) throw UnsupportedRank("unsupported rank for family " + to_string(a));
    switch (a.family) {
    case Family::A: return a.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::F: return a.rank;
    case Family::E: return a.rank == 6 ? a.rank + 2 : (a.rank == 7 ? a.rank + 1 : a.rank);
    case Family::G: return a.rank + 1;
    }
    return 0;
}

const RationalVector& RootSystem::simple_root(int i) const {
    if (i < 1 || i > rank()) throw NotARoot("simple root index out of range");
    return simple_[static_cast<std::size_t>(i - 1)];
}

const RationalVector& RootSystem::simple_coroot(int i) const {
    if (i < 1 || i > rank()) throw NotARoot("simple coroot index out of range");
    return simple_coroot_[static_cast<std::size_t>(i - 1)];
}

bool RootSystem::is_positive_root(const RationalVector& v) const {
    return index_of_vector_.count(v) != 0;
}

int RootSystem::root_sign(const RationalVector& v) const {
    if (v.size() != static_cast<std::size_t>(ambient_)) return 0;
    if (is_positive_root(v)) return 1;
    if (is_positive_root(-v)) return -1;
    return 0;
}

const RationalVector& RootSystem::vector_of(const RootLabel& label) const {
    if (label.kind == LabelKind::Theta) return theta_;
    if (label.kind == LabelKind::Simple) return simple_root(label.i);
    auto it = std::lower_bound(positive_.begin(), positive_.end(), label,
                               [](const auto& entry, const RootLabel& l) { return entry.first < l; });
    if (it == positive_.end() || !(it->first == label))
        throw NotARoot("no such root label in " + to_string(algebra_));
    return it->second;
}

std::optional<std::vector<Rational>> RootSystem::coords_in_simple_basis(const RationalVector& v) const {
    if (v.size() != static_cast<std::size_t>(ambient_)) throw DimensionMismatch("weight of wrong dimension");
    return coordinates_in_basis(simple_, v);
}

std::optional<std::vector<Rational>> RootSystem::coords_in_coroot_basis(const RationalVector& v) const {
    if (v.size() != static_cast<std::size_t>(ambient_)) throw DimensionMismatch("weight of wrong dimension");
    return coordinates_in_basis(simple_coroot_, v);
}

namespace {

RationalVector half(RationalVector v) {
    v *= Rational(1, 2);
    return v;
}

// Sign patterns of the given width whose minus count satisfies the parity filter:
// 0 = even, 1 = odd, -1 = any. Ordered with '+' before '-'.
std::vector<std::vector<std::int8_t>> sign_patterns(int slots, int parity) {
    std::vector<std::vector<std::int8_t>> out;
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
        int minuses = 0;
        std::vector<std::int8_t> s(static_cast<std::size_t>(slots), 1);
        for (int b = 0; b < slots; ++b)
            if (mask & (1u << b)) {
                s[static_cast<std::size_t>(b)] = -1;
                ++minuses;
            }
        if (parity >= 0 && minuses % 2 != parity) continue;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return sign_rank(a[k]) < sign_rank(b[k]);
        return false;
    });
    return out;
}

RationalVector e(int n, int pos) { return RationalVector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(pos)); }

} // namespace

RootSystem build_root_system(const AlgebraFamily& algebra) {
    if (!rank_supported(algebra)) throw UnsupportedRank("unsupported rank for family " + to_string(algebra));

    RootSystem rs;
    rs.algebra_ = algebra;
    rs.ambient_ = ambient_dimension(algebra);
    const int r = algebra.rank;
    const int n = rs.ambient_;

    auto add = [&rs](RootLabel label, RationalVector v) {
        rs.positive_.emplace_back(std::move(label), std::move(v));
    };

    switch (algebra.family) {
    case Family::A: {
        for (int i = 1; i <= r; ++i) rs.simple_.push_back(e(n, i) - e(n, i + 1));
        for (int i = 1; i <= r + 1; ++i)
            for (int j = i + 1; j <= r + 1; ++j) add(RootLabel::pair_minus(i, j), e(n, i) - e(n, j));
        rs.theta_ = e(n, 1) - e(n, r + 1);
        rs.theta_marks_.assign(static_cast<std::size_t>(r), 1);
        break;
    }
    case Family::B: {
        for (int i = 1; i < r; ++i) rs.simple_.push_back(e(n, i) - e(n, i + 1));
        rs.simple_.push_back(e(n, r));
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                add(RootLabel::pair_minus(i, j), e(n, i) - e(n, j));
                add(RootLabel::pair_plus(i, j), e(n, i) + e(n, j));
            }
        for (int i = 1; i <= r; ++i) add(RootLabel::diag(i), e(n, i));
        rs.theta_ = e(n, 1) + e(n, 2);
        rs.theta_marks_.assign(static_cast<std::size_t>(r), 2);
        rs.theta_marks_[0] = 1;
        break;
    }
    case Family::C: {
        for (int i = 1; i < r; ++i) rs.simple_.push_back(e(n, i) - e(n, i + 1));
        rs.simple_.push_back(Rational(2) * e(n, r));
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                add(RootLabel::pair_minus(i, j), e(n, i) - e(n, j));
                add(RootLabel::pair_plus(i, j), e(n, i) + e(n, j));
            }
        for (int i = 1; i <= r; ++i) add(RootLabel::diag(i), Rational(2) * e(n, i));
        rs.theta_ = Rational(2) * e(n, 1);
        rs.theta_marks_.assign(static_cast<std::size_t>(r), 2);
        rs.theta_marks_[static_cast<std::size_t>(r - 1)] = 1;
        break;
    }
    case Family::D: {
        for (int i = 1; i < r; ++i) rs.simple_.push_back(e(n, i) - e(n, i + 1));
        rs.simple_.push_back(e(n, r - 1) + e(n, r));
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                add(RootLabel::pair_minus(i, j), e(n, i) - e(n, j));
                add(RootLabel::pair_plus(i, j), e(n, i) + e(n, j));
            }
        rs.theta_ = e(n, 1) + e(n, 2);
        rs.theta_marks_.assign(static_cast<std::size_t>(r), 2);
        rs.theta_marks_[0] = 1;
        rs.theta_marks_[static_cast<std::size_t>(r - 2)] = 1;
        rs.theta_marks_[static_cast<std::size_t>(r - 1)] = 1;
        break;
    }
    case Family::E: {
        // Common pieces of the E_6/E_7/E_8 embeddings in R^8.
        const int pair_top = algebra.rank == 6 ? 5 : (algebra.rank == 7 ? 6 : 8);
        const int sv_slots = algebra.rank == 6 ? 5 : (algebra.rank == 7 ? 6 : 7);
        const int sv_parity = algebra.rank == 7 ? 1 : 0;
        const int chain_top = algebra.rank == 6 ? 4 : (algebra.rank == 7 ? 5 : 6);

        for (int i = 1; i <= chain_top; ++i) rs.simple_.push_back(-e(n, i) + e(n, i + 1));
        RationalVector spinor = e(n, 1);
        for (int j = 2; j <= 7; ++j) spinor -= e(n, j);
        spinor += e(n, 8);
        rs.simple_.push_back(half(spinor));
        rs.simple_.push_back(e(n, 1) + e(n, 2));

        for (int i = 1; i <= pair_top; ++i)
            for (int j = i + 1; j <= pair_top; ++j) {
                add(RootLabel::pair_minus(i, j), -e(n, i) + e(n, j));
                add(RootLabel::pair_plus(i, j), e(n, i) + e(n, j));
            }
        if (algebra.rank == 7) add(RootLabel::pair_minus(7, 8), -e(n, 7) + e(n, 8));

        for (auto& s : sign_patterns(sv_slots, sv_parity)) {
            RationalVector v(static_cast<std::size_t>(n));
            for (int t = 1; t <= sv_slots; ++t) v += Rational(s[static_cast<std::size_t>(t - 1)]) * e(n, t);
            if (algebra.rank == 6) v += -e(n, 6) - e(n, 7) + e(n, 8);
            if (algebra.rank == 7) v += -e(n, 7) + e(n, 8);
            if (algebra.rank == 8) v += e(n, 8);
            add(RootLabel::sign_vector(s), half(v));
        }

        if (algebra.rank == 6) {
            RationalVector th = e(n, 1) + e(n, 2) + e(n, 3) + e(n, 4) + e(n, 5) - e(n, 6) - e(n, 7) + e(n, 8);
            rs.theta_ = half(th);
            rs.theta_marks_ = {2, 3, 2, 1, 1, 2};
        } else if (algebra.rank == 7) {
            rs.theta_ = -e(n, 7) + e(n, 8);
            rs.theta_marks_ = {3, 4, 3, 2, 1, 2, 2};
        } else {
            rs.theta_ = e(n, 7) + e(n, 8);
            rs.theta_marks_ = {4, 6, 5, 4, 3, 2, 2, 3};
        }
        break;
    }
    case Family::F: {
        rs.simple_.push_back(half(e(n, 1) - e(n, 2) - e(n, 3) - e(n, 4)));
        rs.simple_.push_back(e(n, 2) - e(n, 3));
        rs.simple_.push_back(e(n, 3) - e(n, 4));
        rs.simple_.push_back(e(n, 4));
        for (auto& s : sign_patterns(3, -1)) {
            RationalVector v = e(n, 1);
            for (int t = 0; t < 3; ++t) v += Rational(s[static_cast<std::size_t>(t)]) * e(n, t + 2);
            add(RootLabel::sign_vector(s), half(v));
        }
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                add(RootLabel::pair_minus(i, j), e(n, i) - e(n, j));
                add(RootLabel::pair_plus(i, j), e(n, i) + e(n, j));
            }
        for (int i = 1; i <= 4; ++i) add(RootLabel::diag(i), e(n, i));
        rs.theta_ = e(n, 1) + e(n, 2);
        rs.theta_marks_ = {2, 2, 3, 4};
        break;
    }
    case Family::G: {
        rs.simple_.push_back(e(n, 1) - e(n, 2));
        rs.simple_.push_back(Rational(-2) * e(n, 1) + e(n, 2) + e(n, 3));
        add(RootLabel::simple(1), rs.simple_[0]);
        add(RootLabel::simple(2), rs.simple_[1]);
        add(RootLabel::pair_minus(1, 3), -e(n, 1) + e(n, 3));
        add(RootLabel::pair_minus(2, 3), -e(n, 2) + e(n, 3));
        add(RootLabel::sign_vector({1, -1, 1}), e(n, 1) - Rational(2) * e(n, 2) + e(n, 3));
        add(RootLabel::sign_vector({-1, -1, 1}), -e(n, 1) - e(n, 2) + Rational(2) * e(n, 3));
        rs.theta_ = -e(n, 1) - e(n, 2) + Rational(2) * e(n, 3);
        rs.theta_marks_ = {3, 2};
        break;
    }
    }

    std::sort(rs.positive_.begin(), rs.positive_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < rs.positive_.size(); ++k)
        rs.index_of_vector_.emplace(rs.positive_[k].second, k);

    for (const auto& alpha : rs.simple_) {
        Rational sq = inner_product(alpha, alpha);
        rs.simple_coroot_.push_back(Rational(2) / sq * alpha);
    }
    rs.theta_dual_ = Rational(2) / inner_product(rs.theta_, rs.theta_) * rs.theta_;
    return rs;
}

RationalVector dual_root(const RootSystem& rs, const RationalVector& alpha) {
    if (rs.root_sign(alpha) == 0) throw NotARoot("dual_root of a non-root");
    return Rational(2) / inner_product(alpha, alpha) * alpha;
}

std::vector<std::vector<long long>> cartan_matrix(const RootSystem& rs) {
    const int r = rs.rank();
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(r), std::vector<long long>(static_cast<std::size_t>(r)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            Rational v = inner_product(rs.simple_coroot(i), rs.simple_root(j));
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = boost::rational_cast<long long>(v);
        }
    return a;
}

namespace {

std::vector<long long> integer_coords(const std::optional<std::vector<Rational>>& coords,
                                      const char* what) {
    if (!coords) throw NotARoot(std::string(what) + ": not in the span");
    std::vector<long long> out;
    out.reserve(coords->size());
    for (const auto& c : *coords) {
        if (c.denominator() != 1) throw NotARoot(std::string(what) + ": non-integer expansion");
        out.push_back(c.numerator());
    }
    return out;
}

} // namespace

std::vector<long long> simple_expansion(const RootSystem& rs, const RationalVector& root) {
    if (rs.root_sign(root) == 0) throw NotARoot("simple_expansion of a non-root");
    return integer_coords(rs.coords_in_simple_basis(root), "simple_expansion");
}

std::vector<long long> dual_expansion(const RootSystem& rs, const RationalVector& dual) {
    auto coords = rs.coords_in_coroot_basis(dual);
    if (!coords) throw NotARoot("dual_expansion: not in the coroot span");
    RationalVector back(static_cast<std::size_t>(rs.ambient()));
    // Reconstruct and confirm this really is the dual of a root.
    for (int i = 1; i <= rs.rank(); ++i) back += (*coords)[static_cast<std::size_t>(i - 1)] * rs.simple_coroot(i);
    Rational sq = inner_product(back, back);
    if (sq == 0) throw NotARoot("dual_expansion of the zero vector");
    RationalVector candidate = Rational(2) / sq * back;
    if (rs.root_sign(candidate) == 0) throw NotARoot("dual_expansion: not the dual of a root");
    return integer_coords(coords, "dual_expansion");
}

std::optional<SignedLabel> lookup_label(const RootSystem& rs, const RationalVector& v) {
    if (v.size() != static_cast<std::size_t>(rs.ambient())) return std::nullopt;
    for (bool negative : {false, true}) {
        RationalVector probe = negative ? -v : v;
        for (int i = 1; i <= rs.rank(); ++i)
            if (probe == rs.simple_root(i)) return SignedLabel{RootLabel::simple(i), negative};
        for (const auto& [label, vec] : rs.positive_roots())
            if (vec == probe) return SignedLabel{label, negative};
    }
    return std::nullopt;
}

} // namespace affweyl
