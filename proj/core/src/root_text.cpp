#include "affweyl/root_system.hpp"

#include <cctype>
#include <string>

namespace affweyl {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    int integer() {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }
    bool eat_word(std::string_view w) {
        if (text.substr(pos, w.size()) != w) return false;
        pos += w.size();
        return true;
    }
};

SignedLabel resolve_vector(const RootSystem& rs, const RationalVector& v, std::size_t pos) {
    auto found = lookup_label(rs, v);
    if (!found) throw NotARoot("coefficients do not give a root of " + to_string(rs.algebra()) +
                               " (offset " + std::to_string(pos) + ")");
    return *found;
}

} // namespace

SignedLabel parse_root(const RootSystem& rs, std::string_view text) {
    Cursor cur{text};
    while (std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;

    RootLabel label;
    bool parsed = false;

    if (cur.eat_word("theta")) {
        label = RootLabel::theta();
        parsed = true;
    } else if (cur.eat_word("alpha[")) {
        int i = cur.integer();
        cur.expect(']');
        label = RootLabel::simple(i);
        parsed = true;
    } else if (cur.eat_word("d[")) {
        int i = cur.integer();
        cur.expect(']');
        label = RootLabel::diag(i);
        parsed = true;
    } else if (cur.eat_word("a[")) {
        int i = cur.integer();
        cur.expect(',');
        int j = cur.integer();
        cur.expect(']');
        if (cur.eat('+'))
            label = RootLabel::pair_plus(i, j);
        else {
            cur.eat('-'); // optional: a[i,j] and a[i,j]- are the same label
            label = RootLabel::pair_minus(i, j);
        }
        parsed = true;
    } else if (cur.eat_word("s[")) {
        std::vector<std::int8_t> signs;
        while (cur.peek() == '+' || cur.peek() == '-') {
            signs.push_back(cur.peek() == '+' ? std::int8_t(1) : std::int8_t(-1));
            ++cur.pos;
        }
        cur.expect(']');
        if (signs.empty()) throw ParseError("empty sign vector", cur.pos);
        label = RootLabel::sign_vector(std::move(signs));
        parsed = true;
    } else if (cur.eat_word("c:[")) {
        RationalVector v(static_cast<std::size_t>(rs.ambient()));
        for (int i = 1; i <= rs.rank(); ++i) {
            if (i > 1) cur.expect(',');
            v += Rational(cur.integer()) * rs.simple_root(i);
        }
        cur.expect(']');
        while (std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
        if (!cur.done()) throw ParseError("trailing characters after root", cur.pos);
        return resolve_vector(rs, v, cur.pos);
    }

    if (!parsed) throw ParseError("expected a root (a[i,j], d[i], s[..], alpha[i], theta, c:[..])", cur.pos);

    while (std::isspace(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (!cur.done()) throw ParseError("trailing characters after root", cur.pos);

    // Structure is fine; now the label must actually name a root of this system.
    const RationalVector& v = rs.vector_of(label); // throws NotARoot
    if (label.kind == LabelKind::Simple || label.kind == LabelKind::Theta)
        return SignedLabel{label, false};
    if (!rs.is_positive_root(v)) throw NotARoot("label not in Delta_+ of " + to_string(rs.algebra()));
    return SignedLabel{label, false};
}

std::string print_root(const RootSystem& rs, const RootLabel& label) {
    switch (label.kind) {
    case LabelKind::Theta: return "theta";
    case LabelKind::Simple: return "alpha[" + std::to_string(label.i) + "]";
    case LabelKind::Diag: return "d[" + std::to_string(label.i) + "]";
    case LabelKind::PairPlus: return "a[" + std::to_string(label.i) + "," + std::to_string(label.j) + "]+";
    case LabelKind::PairMinus: {
        std::string base = "a[" + std::to_string(label.i) + "," + std::to_string(label.j) + "]";
        // The tables write alpha_{ij} without a sign in A_r and G_2.
        Family f = rs.algebra().family;
        if (f == Family::A || f == Family::G) return base;
        return base + "-";
    }
    case LabelKind::SignVector: {
        std::string s = "s[";
        for (auto x : label.signs) s += x > 0 ? '+' : '-';
        s += ']';
        return s;
    }
    }
    return {};
}

std::string print_root(const RootSystem& rs, const SignedLabel& label) {
    std::string s = print_root(rs, label.label);
    return label.negative ? "-" + s : s;
}

} // namespace affweyl
