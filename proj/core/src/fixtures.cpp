#include "affweyl/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace affweyl {

namespace detail {
extern const char* const kTablesText;
}

namespace {

// ---------------------------------------------------------------- expressions

struct Binding {
    std::map<char, long long> vars; // i,j,k,l,m
    long long r = 0;

    long long get(char v) const {
        if (v == 'r') return r;
        auto it = vars.find(v);
        if (it == vars.end()) throw FixtureUnavailable(std::string("unbound fixture variable ") + v);
        return it->second;
    }
};

struct IndexExpr {
    char var = 0; // 0 = constant
    long long offset = 0;

    long long eval(const Binding& b) const { return (var ? b.get(var) : 0) + offset; }
};

bool is_var_char(char c) { return c == 'i' || c == 'j' || c == 'k' || c == 'l' || c == 'm' || c == 'r'; }

struct ExprCursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    long long digits() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw FixtureUnavailable("expected digits in fixture expression: " + std::string(s));
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
        return v;
    }
};

IndexExpr parse_index_expr(ExprCursor& cur, std::vector<char>* vars_seen) {
    cur.skip_ws();
    IndexExpr e;
    bool negative = cur.eat('-');
    if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
        std::string word;
        while (std::isalpha(static_cast<unsigned char>(cur.peek()))) word += cur.s[cur.pos++];
        char v;
        if (word == "rank" || word == "r")
            v = 'r';
        else if (word.size() == 1 && is_var_char(word[0]))
            v = word[0];
        else
            throw FixtureUnavailable("unknown fixture variable: " + word);
        if (negative) throw FixtureUnavailable("negated variable in fixture expression");
        e.var = v;
        if (v != 'r' && vars_seen &&
            std::find(vars_seen->begin(), vars_seen->end(), v) == vars_seen->end())
            vars_seen->push_back(v);
    } else {
        e.offset = cur.digits();
        if (negative) e.offset = -e.offset;
        return e;
    }
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
        bool minus = cur.s[cur.pos] == '-';
        ++cur.pos;
        long long off = cur.digits();
        e.offset = minus ? -off : off;
    }
    return e;
}

IndexExpr parse_index_expr(std::string_view text, std::vector<char>* vars_seen) {
    ExprCursor cur{text};
    IndexExpr e = parse_index_expr(cur, vars_seen);
    cur.skip_ws();
    if (cur.pos != text.size())
        throw FixtureUnavailable("trailing characters in fixture expression: " + std::string(text));
    return e;
}

// ---------------------------------------------------------------- constraints

enum class RelOp { Lt, Le, Gt, Ge, Eq, Ne };

struct CondChain {
    std::vector<IndexExpr> exprs;
    std::vector<RelOp> ops;

    bool eval(const Binding& b) const {
        for (std::size_t k = 0; k < ops.size(); ++k) {
            long long lhs = exprs[k].eval(b);
            long long rhs = exprs[k + 1].eval(b);
            bool ok = false;
            switch (ops[k]) {
            case RelOp::Lt: ok = lhs < rhs; break;
            case RelOp::Le: ok = lhs <= rhs; break;
            case RelOp::Gt: ok = lhs > rhs; break;
            case RelOp::Ge: ok = lhs >= rhs; break;
            case RelOp::Eq: ok = lhs == rhs; break;
            case RelOp::Ne: ok = lhs != rhs; break;
            }
            if (!ok) return false;
        }
        return true;
    }
};

CondChain parse_cond(std::string_view text, std::vector<char>* vars_seen) {
    CondChain chain;
    ExprCursor cur{text};
    chain.exprs.push_back(parse_index_expr(cur, vars_seen));
    for (;;) {
        cur.skip_ws();
        if (cur.pos >= text.size()) break;
        RelOp op;
        if (cur.eat('<'))
            op = cur.eat('=') ? RelOp::Le : RelOp::Lt;
        else if (cur.eat('>'))
            op = cur.eat('=') ? RelOp::Ge : RelOp::Gt;
        else if (cur.eat('!')) {
            if (!cur.eat('=')) throw FixtureUnavailable("malformed constraint: " + std::string(text));
            op = RelOp::Ne;
        } else if (cur.eat('='))
            op = RelOp::Eq;
        else
            throw FixtureUnavailable("malformed constraint: " + std::string(text));
        chain.ops.push_back(op);
        chain.exprs.push_back(parse_index_expr(cur, vars_seen));
    }
    if (chain.ops.empty()) throw FixtureUnavailable("constraint without relation: " + std::string(text));
    return chain;
}

// -------------------------------------------------------------- label patterns

struct SubjectPattern {
    enum class Type { SimpleIdx, Pair, DiagP, SignLit, SignPlus, ThetaP, Pairings, SignsFamily };
    Type type = Type::ThetaP;
    IndexExpr e1, e2;
    int pair_sign = -1; // +1 / -1 for a[i,j]+ / a[i,j](-)
    std::vector<std::int8_t> literal_signs;
    std::vector<IndexExpr> plus_positions;
};

std::vector<std::int8_t> parse_sign_string(std::string_view s) {
    std::vector<std::int8_t> out;
    for (char c : s) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else
            throw FixtureUnavailable("bad sign character in fixture");
    }
    return out;
}

SubjectPattern parse_label_pattern(std::string_view text, std::vector<char>* vars_seen) {
    SubjectPattern p;
    auto inner = [&](std::size_t prefix) {
        std::size_t close = text.rfind(']');
        if (close == std::string_view::npos) throw FixtureUnavailable("missing ] in " + std::string(text));
        return text.substr(prefix, close - prefix);
    };
    if (text == "theta") {
        p.type = SubjectPattern::Type::ThetaP;
    } else if (text == "pairings") {
        p.type = SubjectPattern::Type::Pairings;
    } else if (text == "s") {
        p.type = SubjectPattern::Type::SignsFamily;
    } else if (text.rfind("alpha[", 0) == 0) {
        p.type = SubjectPattern::Type::SimpleIdx;
        p.e1 = parse_index_expr(inner(6), vars_seen);
    } else if (text.rfind("d[", 0) == 0) {
        p.type = SubjectPattern::Type::DiagP;
        p.e1 = parse_index_expr(inner(2), vars_seen);
    } else if (text.rfind("a[", 0) == 0) {
        p.type = SubjectPattern::Type::Pair;
        p.pair_sign = text.back() == '+' ? 1 : -1;
        std::string_view body = inner(2);
        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos) throw FixtureUnavailable("missing , in " + std::string(text));
        p.e1 = parse_index_expr(body.substr(0, comma), vars_seen);
        p.e2 = parse_index_expr(body.substr(comma + 1), vars_seen);
    } else if (text.rfind("s[plus:", 0) == 0) {
        p.type = SubjectPattern::Type::SignPlus;
        std::string_view body = inner(7);
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            std::string_view piece = comma == std::string_view::npos ? body.substr(start)
                                                                     : body.substr(start, comma - start);
            p.plus_positions.push_back(parse_index_expr(piece, vars_seen));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (text.rfind("s[", 0) == 0) {
        p.type = SubjectPattern::Type::SignLit;
        p.literal_signs = parse_sign_string(inner(2));
    } else {
        throw FixtureUnavailable("unrecognized fixture subject: " + std::string(text));
    }
    return p;
}

int sign_slot_count(const AlgebraFamily& a) {
    if (a.family == Family::E) return a.rank == 6 ? 5 : (a.rank == 7 ? 6 : 7);
    if (a.family == Family::F) return 3;
    if (a.family == Family::G) return 3;
    return 0;
}

RootLabel label_of_pattern(const SubjectPattern& p, const Binding& b, const AlgebraFamily& algebra) {
    switch (p.type) {
    case SubjectPattern::Type::ThetaP: return RootLabel::theta();
    case SubjectPattern::Type::SimpleIdx: return RootLabel::simple(static_cast<int>(p.e1.eval(b)));
    case SubjectPattern::Type::DiagP: return RootLabel::diag(static_cast<int>(p.e1.eval(b)));
    case SubjectPattern::Type::Pair: {
        int i = static_cast<int>(p.e1.eval(b));
        int j = static_cast<int>(p.e2.eval(b));
        return p.pair_sign > 0 ? RootLabel::pair_plus(i, j) : RootLabel::pair_minus(i, j);
    }
    case SubjectPattern::Type::SignLit: return RootLabel::sign_vector(p.literal_signs);
    case SubjectPattern::Type::SignPlus: {
        int slots = sign_slot_count(algebra);
        std::vector<std::int8_t> signs(static_cast<std::size_t>(slots), -1);
        for (const auto& e : p.plus_positions) {
            long long pos = e.eval(b);
            if (pos < 1 || pos > slots) throw FixtureUnavailable("sign slot out of range in fixture");
            signs[static_cast<std::size_t>(pos - 1)] = 1;
        }
        return RootLabel::sign_vector(std::move(signs));
    }
    default: throw FixtureUnavailable("fixture subject does not name a root");
    }
}

// ----------------------------------------------------------------- word tokens

struct RunTok {
    enum class Shape { Peak, Valley, Run };
    Shape shape = Shape::Run;
    IndexExpr a, b;
};

struct WordTok {
    enum class Type { Letter, Run, Label };
    Type type = Type::Letter;
    IndexExpr letter;
    RunTok run;
    SubjectPattern label;
};

WordTok parse_word_token(std::string_view text, std::vector<char>* vars_seen) {
    WordTok tok;
    auto run_of = [&](RunTok::Shape shape, std::size_t prefix) {
        std::size_t close = text.rfind(')');
        if (close == std::string_view::npos) throw FixtureUnavailable("missing ) in " + std::string(text));
        std::string_view body = text.substr(prefix, close - prefix);
        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos) throw FixtureUnavailable("missing , in " + std::string(text));
        tok.type = WordTok::Type::Run;
        tok.run.shape = shape;
        tok.run.a = parse_index_expr(body.substr(0, comma), vars_seen);
        tok.run.b = parse_index_expr(body.substr(comma + 1), vars_seen);
    };
    if (text.rfind("peak(", 0) == 0)
        run_of(RunTok::Shape::Peak, 5);
    else if (text.rfind("valley(", 0) == 0)
        run_of(RunTok::Shape::Valley, 7);
    else if (text.rfind("run(", 0) == 0)
        run_of(RunTok::Shape::Run, 4);
    else if (text.rfind("a[", 0) == 0 || text.rfind("d[", 0) == 0 || text.rfind("s[", 0) == 0 ||
             text.rfind("alpha[", 0) == 0 || text == "theta") {
        tok.type = WordTok::Type::Label;
        tok.label = parse_label_pattern(text, vars_seen);
    } else {
        tok.type = WordTok::Type::Letter;
        tok.letter = parse_index_expr(text, vars_seen);
    }
    return tok;
}

void append_run(const RunTok& run, const Binding& b, std::vector<int>& out) {
    long long a = run.a.eval(b);
    long long bb = run.b.eval(b);
    switch (run.shape) {
    case RunTok::Shape::Peak:
        // a, a+1, ..., b, b-1, ..., a
        for (long long x = a; x <= bb; ++x) out.push_back(static_cast<int>(x));
        for (long long x = bb - 1; x >= a; --x) out.push_back(static_cast<int>(x));
        break;
    case RunTok::Shape::Valley:
        // a, a-1, ..., b, b+1, ..., a
        for (long long x = a; x >= bb; --x) out.push_back(static_cast<int>(x));
        for (long long x = bb + 1; x <= a; ++x) out.push_back(static_cast<int>(x));
        break;
    case RunTok::Shape::Run:
        if (a <= bb)
            for (long long x = a; x <= bb; ++x) out.push_back(static_cast<int>(x));
        else
            for (long long x = a; x >= bb; --x) out.push_back(static_cast<int>(x));
        break;
    }
}

// ------------------------------------------------------------- vector formulas

struct VectorTerm {
    long long coeff = 1;
    bool is_signs = false;
    IndexExpr pos;     // e(pos)
    IndexExpr from, to; // signs(from,to)
};

struct VectorExpr {
    std::vector<VectorTerm> terms;
    bool halved = false;
};

VectorExpr parse_vector_expr(std::string_view text, std::vector<char>* vars_seen) {
    VectorExpr expr;
    std::string_view body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.size() < 4 || body.substr(body.size() - 3) != ")/2")
            throw FixtureUnavailable("malformed vector expression: " + std::string(text));
        expr.halved = true;
        body = body.substr(1, body.size() - 4);
    }
    ExprCursor cur{body};
    bool first = true;
    for (;;) {
        cur.skip_ws();
        if (cur.pos >= body.size()) break;
        long long sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (cur.eat('+'))
            sign = 1;
        else if (!first)
            throw FixtureUnavailable("malformed vector expression: " + std::string(text));
        first = false;
        cur.skip_ws();
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) coeff = cur.digits();
        if (body.substr(cur.pos).rfind("signs(", 0) == 0) {
            cur.pos += 6;
            VectorTerm term;
            term.is_signs = true;
            term.coeff = sign * coeff;
            term.from = parse_index_expr(cur, vars_seen);
            if (!cur.eat(',')) throw FixtureUnavailable("malformed signs() term");
            term.to = parse_index_expr(cur, vars_seen);
            if (!cur.eat(')')) throw FixtureUnavailable("malformed signs() term");
            expr.terms.push_back(term);
        } else if (body.substr(cur.pos).rfind("e(", 0) == 0) {
            cur.pos += 2;
            VectorTerm term;
            term.coeff = sign * coeff;
            term.pos = parse_index_expr(cur, vars_seen);
            if (!cur.eat(')')) throw FixtureUnavailable("malformed e() term");
            expr.terms.push_back(term);
        } else {
            throw FixtureUnavailable("malformed vector expression: " + std::string(text));
        }
    }
    if (expr.terms.empty()) throw FixtureUnavailable("empty vector expression: " + std::string(text));
    return expr;
}

RationalVector eval_vector(const VectorExpr& expr, const Binding& b, int ambient,
                           const std::vector<std::int8_t>* signs) {
    RationalVector v(static_cast<std::size_t>(ambient));
    for (const auto& term : expr.terms) {
        if (term.is_signs) {
            if (!signs) throw FixtureUnavailable("signs() outside a sign-family row");
            long long from = term.from.eval(b);
            long long to = term.to.eval(b);
            for (long long t = from; t <= to; ++t) {
                std::size_t slot = static_cast<std::size_t>(t - from);
                if (slot >= signs->size()) throw FixtureUnavailable("signs() range wider than slot count");
                v[static_cast<std::size_t>(t - 1)] += Rational(term.coeff * (*signs)[slot]);
            }
        } else {
            long long pos = term.pos.eval(b);
            if (pos < 1 || pos > ambient) throw FixtureUnavailable("coordinate out of range in fixture");
            v[static_cast<std::size_t>(pos - 1)] += Rational(term.coeff);
        }
    }
    if (expr.halved) v *= Rational(1, 2);
    return v;
}

// ----------------------------------------------------------------- marks lists

struct MarkItem {
    long long value = 0;
    bool fill = false;
};

std::vector<MarkItem> parse_marks(std::string_view text) {
    std::vector<MarkItem> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        MarkItem item;
        if (piece.rfind("fill(", 0) == 0) {
            item.fill = true;
            ExprCursor cur{piece.substr(5)};
            item.value = cur.digits();
        } else {
            ExprCursor cur{piece};
            item.value = cur.digits();
        }
        items.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

std::vector<long long> eval_marks(const std::vector<MarkItem>& items, int rank) {
    long long fixed = 0;
    for (const auto& it : items)
        if (!it.fill) ++fixed;
    std::vector<long long> out;
    for (const auto& it : items) {
        if (it.fill) {
            for (long long k = 0; k < rank - fixed; ++k) out.push_back(it.value);
        } else {
            out.push_back(it.value);
        }
    }
    if (static_cast<int>(out.size()) != rank)
        throw FixtureUnavailable("marks list does not cover the rank");
    return out;
}

// ------------------------------------------------------------------ row store

struct ParsedRow {
    FixtureRow meta;
    std::vector<CondChain> conds;
    SubjectPattern subject;
    std::vector<WordTok> word;
    VectorExpr value;
    bool has_value = false;
    std::vector<IndexExpr> value_list; // table 3 index lists
    std::vector<MarkItem> marks;
    int slots = 0;
    int parity = -2; // 0 even, 1 odd, -1 any
    std::string kind;
    std::vector<char> vars;
};

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) out.push_back(s.substr(start, pos - start));
    }
    return out;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    // Word/value payloads: tokens separated by " , "; label-internal commas carry no spaces.
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t sep = s.find(" , ", start);
        std::string_view piece = sep == std::string_view::npos ? s.substr(start) : s.substr(start, sep - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        if (!piece.empty()) out.push_back(piece);
        if (sep == std::string_view::npos) break;
        start = sep + 3;
    }
    return out;
}

ParsedRow parse_row(std::string_view line, int id) {
    ParsedRow row;
    row.meta.id = id;
    row.meta.source = std::string(line);

    std::string_view left = line;
    std::string_view payload;
    bool payload_is_word = false;
    for (std::string_view key : {std::string_view(" word="), std::string_view(" value=")}) {
        std::size_t at = line.find(key);
        if (at != std::string_view::npos) {
            left = line.substr(0, at);
            payload = line.substr(at + key.size());
            payload_is_word = key == " word=";
            break;
        }
    }

    bool have_subject = false;
    for (std::string_view field : split_ws(left)) {
        std::size_t eq = field.find('=');
        std::string_view key = eq == std::string_view::npos ? std::string_view() : field.substr(0, eq);
        std::string_view val = eq == std::string_view::npos ? std::string_view() : field.substr(eq + 1);
        if (key == "table") {
            row.meta.table = static_cast<int>(parse_index_expr(val, nullptr).offset);
        } else if (key == "algebra") {
            row.meta.family = static_cast<Family>(val[0]);
            row.meta.fixed_rank = val.size() > 1 ? val[1] - '0' : 0;
        } else if (key == "kind") {
            row.kind = std::string(val);
        } else if (key == "subject") {
            row.subject = parse_label_pattern(val, &row.vars);
            row.meta.subject = std::string(val);
            have_subject = true;
        } else if (key == "slots") {
            row.slots = static_cast<int>(parse_index_expr(val, nullptr).offset);
            row.meta.slots = std::string(val);
        } else if (key == "parity") {
            row.parity = val == "even" ? 0 : (val == "odd" ? 1 : -1);
            row.meta.parity = std::string(val);
        } else if (key == "marks") {
            row.marks = parse_marks(val);
            row.meta.marks = std::string(val);
        } else {
            row.conds.push_back(parse_cond(field, &row.vars));
            row.meta.conds.push_back(std::string(field));
        }
    }
    if (!have_subject) throw FixtureUnavailable("fixture row without subject: " + std::string(line));
    if (row.meta.table == 0) throw FixtureUnavailable("fixture row without table: " + std::string(line));

    row.meta.payload_key = payload_is_word ? "word" : "value";
    row.meta.payload = std::string(payload);
    if (payload_is_word) {
        for (std::string_view tok : split_tokens(payload)) row.word.push_back(parse_word_token(tok, &row.vars));
    } else if (row.meta.table == 3) {
        for (std::string_view tok : split_tokens(payload)) row.value_list.push_back(parse_index_expr(tok, &row.vars));
    } else if (!payload.empty()) {
        row.value = parse_vector_expr(payload, &row.vars);
        row.has_value = true;
    }
    std::sort(row.vars.begin(), row.vars.end());
    return row;
}

const std::vector<ParsedRow>& parsed_rows() {
    static const std::vector<ParsedRow> rows = [] {
        std::vector<ParsedRow> out;
        std::istringstream in(detail::kTablesText);
        std::string line;
        int id = 0;
        while (std::getline(in, line)) {
            std::string_view sv(line);
            while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
            if (sv.empty() || sv.front() == '#') continue;
            out.push_back(parse_row(sv, id++));
        }
        return out;
    }();
    return rows;
}

bool row_applies(const ParsedRow& row, const AlgebraFamily& algebra) {
    if (row.meta.family != algebra.family) return false;
    if (row.meta.fixed_rank != 0 && row.meta.fixed_rank != algebra.rank) return false;
    return true;
}

void for_each_binding(const ParsedRow& row, int rank, const std::function<void(const Binding&)>& fn) {
    Binding b;
    b.r = rank;
    const long long domain = rank + 2;
    std::function<void(std::size_t)> recurse = [&](std::size_t which) {
        if (which == row.vars.size()) {
            for (const auto& cond : row.conds)
                if (!cond.eval(b)) return;
            fn(b);
            return;
        }
        for (long long v = 1; v <= domain; ++v) {
            b.vars[row.vars[which]] = v;
            recurse(which + 1);
        }
    };
    recurse(0);
}

AffineWord affine_word_of(const ParsedRow& row, const Binding& b, const RootSystem& rs) {
    AffineWord word;
    for (const auto& tok : row.word) {
        switch (tok.type) {
        case WordTok::Type::Letter: {
            long long letter = tok.letter.eval(b);
            if (letter != 0) throw FixtureUnavailable("unexpected classical letter in a translation row");
            word.push_back(SimpleAffineTok{0});
            break;
        }
        case WordTok::Type::Label:
            word.push_back(NamedReflectionTok{label_of_pattern(tok.label, b, rs.algebra())});
            break;
        case WordTok::Type::Run: throw FixtureUnavailable("letter run in a translation row");
        }
    }
    return word;
}

std::vector<ClassicalToken> classical_word_of(const ParsedRow& row, const Binding& b, const RootSystem& rs) {
    std::vector<ClassicalToken> word;
    for (const auto& tok : row.word) {
        switch (tok.type) {
        case WordTok::Type::Letter:
            word.emplace_back(static_cast<int>(tok.letter.eval(b)));
            break;
        case WordTok::Type::Run: {
            std::vector<int> letters;
            append_run(tok.run, b, letters);
            for (int l : letters) word.emplace_back(l);
            break;
        }
        case WordTok::Type::Label:
            word.emplace_back(label_of_pattern(tok.label, b, rs.algebra()));
            break;
        }
    }
    return word;
}

std::vector<std::vector<std::int8_t>> enumerate_signs(int slots, int parity) {
    std::vector<std::vector<std::int8_t>> out;
    for (unsigned mask = 0; mask < (1u << slots); ++mask) {
        int minuses = 0;
        std::vector<std::int8_t> s(static_cast<std::size_t>(slots), 1);
        for (int t = 0; t < slots; ++t)
            if (mask & (1u << t)) {
                s[static_cast<std::size_t>(t)] = -1;
                ++minuses;
            }
        if (parity >= 0 && minuses % 2 != parity) continue;
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

const std::vector<FixtureRow>& fixture_rows() {
    static const std::vector<FixtureRow> rows = [] {
        std::vector<FixtureRow> out;
        for (const auto& row : parsed_rows()) out.push_back(row.meta);
        return out;
    }();
    return rows;
}

std::vector<const FixtureRow*> fixture_rows_for(int table) {
    std::vector<const FixtureRow*> out;
    for (const auto& row : fixture_rows())
        if (row.table == table) out.push_back(&row);
    return out;
}

int fixture_row_count(int table) { return static_cast<int>(fixture_rows_for(table).size()); }

std::vector<TranslationFixture> translation_fixtures(const RootSystem& rs) {
    std::vector<TranslationFixture> out;
    for (const auto& row : parsed_rows()) {
        if ((row.meta.table != 1 && row.meta.table != 2) || !row_applies(row, rs.algebra())) continue;
        for_each_binding(row, rs.rank(), [&](const Binding& b) {
            if (row.subject.type != SubjectPattern::Type::SimpleIdx)
                throw FixtureUnavailable("translation row subject must be a simple root");
            int i = static_cast<int>(row.subject.e1.eval(b));
            out.push_back(TranslationFixture{i, affine_word_of(row, b, rs), row.meta.id});
        });
    }
    return out;
}

AffineWord fixture_translation_word(const RootSystem& rs, int i) {
    for (auto& fixture : translation_fixtures(rs))
        if (fixture.simple_index == i) return std::move(fixture.word);
    throw FixtureUnavailable("no fundamental-translation table row for alpha_" + std::to_string(i) +
                             " in " + to_string(rs.algebra()));
}

std::vector<ClassicalFixture> classical_fixtures(const RootSystem& rs) {
    std::vector<ClassicalFixture> out;
    for (const auto& row : parsed_rows()) {
        if (row.meta.table < 4 || row.meta.table > 6 || !row_applies(row, rs.algebra())) continue;
        for_each_binding(row, rs.rank(), [&](const Binding& b) {
            RootLabel subject = label_of_pattern(row.subject, b, rs.algebra());
            out.push_back(ClassicalFixture{std::move(subject), classical_word_of(row, b, rs), row.meta.id});
        });
    }
    return out;
}

namespace {

void expand_classical(const RootSystem& rs, const std::vector<ClassicalFixture>& fixtures,
                      const RationalVector& root, std::vector<int>& letters, int depth) {
    if (depth <= 0) throw FixtureUnavailable("cyclic fixture dependency");
    for (int i = 1; i <= rs.rank(); ++i)
        if (root == rs.simple_root(i)) {
            letters.push_back(i);
            return;
        }
    for (const auto& fixture : fixtures) {
        if (rs.vector_of(fixture.subject) != root) continue;
        for (const auto& tok : fixture.word) {
            if (const int* letter = std::get_if<int>(&tok))
                letters.push_back(*letter);
            else
                expand_classical(rs, fixtures, rs.vector_of(std::get<RootLabel>(tok)), letters, depth - 1);
        }
        return;
    }
    throw FixtureUnavailable("no classical table row covers this root in " + to_string(rs.algebra()));
}

} // namespace

SimpleWord classical_fixture_word(const RootSystem& rs, const RootLabel& label) {
    return classical_fixture_word(rs, label, classical_fixtures(rs));
}

SimpleWord classical_fixture_word(const RootSystem& rs, const RootLabel& label,
                                  const std::vector<ClassicalFixture>& fixtures) {
    std::vector<int> letters;
    expand_classical(rs, fixtures, rs.vector_of(label), letters, 32);
    return free_cancelled(SimpleWord{std::move(letters)});
}

std::vector<int> table3_fixture(const RootSystem& rs) {
    for (const auto& row : parsed_rows()) {
        if (row.meta.table != 3 || !row_applies(row, rs.algebra())) continue;
        std::vector<int> out;
        bool matched = false;
        for_each_binding(row, rs.rank(), [&](const Binding& b) {
            matched = true;
            for (const auto& e : row.value_list) out.push_back(static_cast<int>(e.eval(b)));
        });
        if (matched) {
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw FixtureUnavailable("no Table 3 row for " + to_string(rs.algebra()));
}

std::vector<RootDatum> rootsystem_fixtures(const RootSystem& rs) {
    std::vector<RootDatum> out;
    for (const auto& row : parsed_rows()) {
        if (row.meta.table < 7 || row.meta.table > 9 || !row_applies(row, rs.algebra())) continue;
        if (row.kind == "signs") {
            Binding b;
            b.r = rs.rank();
            for (auto& signs : enumerate_signs(row.slots, row.parity)) {
                RootDatum datum;
                datum.kind = RootDatum::Kind::PositiveRoot;
                datum.label = RootLabel::sign_vector(signs);
                datum.vec = eval_vector(row.value, b, rs.ambient(), &signs);
                datum.row_id = row.meta.id;
                out.push_back(std::move(datum));
            }
            continue;
        }
        for_each_binding(row, rs.rank(), [&](const Binding& b) {
            RootDatum datum;
            datum.row_id = row.meta.id;
            datum.vec = eval_vector(row.value, b, rs.ambient(), nullptr);
            if (row.kind == "simple") {
                datum.kind = RootDatum::Kind::SimpleRoot;
                datum.simple_index = static_cast<int>(row.subject.e1.eval(b));
            } else if (row.kind == "theta") {
                datum.kind = RootDatum::Kind::Theta;
                datum.marks = eval_marks(row.marks, rs.rank());
            } else {
                datum.kind = RootDatum::Kind::PositiveRoot;
                datum.label = label_of_pattern(row.subject, b, rs.algebra());
            }
            out.push_back(std::move(datum));
        });
    }
    return out;
}

std::string fixture_markdown(std::optional<int> table) {
    std::string out;
    int current = 0;
    for (const auto& row : fixture_rows()) {
        if (table && row.table != *table) continue;
        if (row.table != current) {
            current = row.table;
            out += "\n## Table " + std::to_string(current) + "\n\n";
            out += "| algebra | constraints | subject | " + std::string(current <= 6 ? "word" : "value") +
                   " |\n|---|---|---|---|\n";
        }
        std::string conds;
        for (const auto& c : row.conds) {
            if (!conds.empty()) conds += "; ";
            conds += c;
        }
        std::string payload = row.payload;
        if (!row.marks.empty()) payload = "marks=" + row.marks + "  " + payload;
        out += "| " + std::string(1, static_cast<char>(row.family)) +
               (row.fixed_rank ? std::to_string(row.fixed_rank) : std::string("_r")) + " | " +
               (conds.empty() ? "-" : conds) + " | " + row.subject + " | " + payload + " |\n";
    }
    return out;
}

} // namespace affweyl
