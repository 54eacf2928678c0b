#include "cli.hpp"

#include "affweyl/affine.hpp"
#include "affweyl/fixtures.hpp"
#include "affweyl/root_system.hpp"
#include "affweyl/serialize.hpp"
#include "affweyl/verify.hpp"
#include "affweyl/weyl.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace affweyl::cli {

namespace {

using nlohmann::json;

std::string error_code(const Error& e) {
    if (dynamic_cast<const NotARoot*>(&e)) return "not-a-root";
    if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
    if (dynamic_cast<const UnsupportedRank*>(&e)) return "unsupported-rank";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
    if (dynamic_cast<const NotInCorootLattice*>(&e)) return "not-in-coroot-lattice";
    if (dynamic_cast<const ImaginaryRootReflection*>(&e)) return "imaginary-root-reflection";
    if (dynamic_cast<const LemmaConditionFailed*>(&e)) return "lemma-condition-failed";
    if (dynamic_cast<const ConstructionFailed*>(&e)) return "construction-failed";
    if (dynamic_cast<const FixtureUnavailable*>(&e)) return "fixture-unavailable";
    return "error";
}

struct CommonOpts {
    std::string algebra;
    std::string format = "text";
};

void add_format(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

json word_json_obj(const SimpleWord& w) {
    return json{{"letters", w.letters}, {"order", "right-to-left"}};
}

std::string letters_text(const SimpleWord& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w.letters[k]);
    }
    s += "]";
    return s;
}

// Default rank set for whole-suite verification.
std::vector<AlgebraFamily> default_algebras() {
    std::vector<AlgebraFamily> out;
    for (int r = 1; r <= 6; ++r) out.push_back({Family::A, r});
    for (int r = 3; r <= 6; ++r) out.push_back({Family::B, r});
    for (int r = 2; r <= 6; ++r) out.push_back({Family::C, r});
    for (int r = 4; r <= 6; ++r) out.push_back({Family::D, r});
    out.push_back({Family::E, 6});
    out.push_back({Family::E, 7});
    out.push_back({Family::E, 8});
    out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

int cmd_roots(const CommonOpts& opts, std::ostream& out) {
    RootSystem rs = build_root_system(parse_algebra(opts.algebra));
    if (opts.format == "json") {
        json roots = json::array();
        for (const auto& [label, vec] : rs.positive_roots()) {
            json coords = json::array();
            for (std::size_t k = 0; k < vec.size(); ++k) coords.push_back(to_string(vec[k]));
            roots.push_back(json{{"label", print_root(rs, label)}, {"coords", coords}});
        }
        json theta_coords = json::array();
        for (std::size_t k = 0; k < rs.theta().size(); ++k) theta_coords.push_back(to_string(rs.theta()[k]));
        json j{{"algebra", to_string(rs.algebra())},
               {"ambient_dimension", rs.ambient()},
               {"count", rs.positive_roots().size()},
               {"positive_roots", roots},
               {"theta", json{{"coords", theta_coords}, {"marks", rs.theta_marks()}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "Delta_+ of " << to_string(rs.algebra()) << " (" << rs.positive_roots().size()
            << " roots, ambient dimension " << rs.ambient() << ")\n";
        for (const auto& [label, vec] : rs.positive_roots())
            out << "  " << print_root(rs, label) << "  " << to_string(vec) << "\n";
        out << "theta = " << to_string(rs.theta()) << ", marks (";
        for (std::size_t k = 0; k < rs.theta_marks().size(); ++k)
            out << (k ? "," : "") << rs.theta_marks()[k];
        out << ")\n";
    }
    return 0;
}

int cmd_classical(const CommonOpts& opts, const std::string& root_text, std::ostream& out) {
    RootSystem rs = build_root_system(parse_algebra(opts.algebra));
    SignedLabel label = parse_root(rs, root_text);
    const RationalVector& v = rs.vector_of(label.label);
    SimpleWord word = decompose_classical(rs, label.negative ? -v : v);
    if (opts.format == "json") {
        json j{{"algebra", to_string(rs.algebra())},
               {"root", print_root(rs, label)},
               {"word", word_json_obj(word)}};
        out << j.dump(2) << "\n";
    } else {
        out << "sigma_{" << print_root(rs, label) << "} = word " << letters_text(word) << "\n";
    }
    return 0;
}

int cmd_decompose(const CommonOpts& opts, const std::string& root_text, long long n, bool negative,
                  std::ostream& out) {
    RootSystem rs = build_root_system(parse_algebra(opts.algebra));
    SignedLabel label = parse_root(rs, root_text);
    bool neg = label.negative != negative;
    const RationalVector& v = rs.vector_of(label.label);
    AffineRoot root = AffineRoot::real(neg ? -v : v, n);

    SimpleWord word = decompose_affine(rs, root);
    AffineWord tokens;
    for (int letter : word.letters) tokens.push_back(SimpleAffineTok{letter});
    bool verified = canonical_of_word(rs, tokens) == canonical_of_affine_root(rs, root);
    if (!verified)
        throw ConstructionFailed("decomposition failed the canonical-form check; refusing to print it");

    if (opts.format == "json") {
        json j{{"algebra", to_string(rs.algebra())},
               {"root", (neg ? "-" : "") + print_root(rs, label.label)},
               {"n", n},
               {"word", word_json_obj(word)},
               {"verified", true}};
        out << j.dump(2) << "\n";
    } else {
        out << "sigma_{(" << (neg ? "-" : "") << print_root(rs, label.label) << ",0," << n << ")} = word "
            << letters_text(word) << ", verified true\n";
    }
    return 0;
}

int print_report(const VerificationReport& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_to_json(report) << "\n";
    } else {
        out << to_string(report.algebra) << ": " << report.total_instances << " instances, "
            << report.total_failures << " failures ("
            << static_cast<int>(report.elapsed_seconds * 1000) << " ms)\n";
        for (const auto& row : report.rows)
            for (const auto& failure : row.failures)
                out << "  FAIL table " << row.table << " [" << row.subject << "]: " << failure << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, std::ostream& out) {
    if (!opts.algebra.empty())
        return print_report(verify_all(parse_algebra(opts.algebra)), opts.format, out);
    int rc = 0;
    for (const auto& algebra : default_algebras())
        rc |= print_report(verify_all(algebra), opts.format, out);
    return rc;
}

int cmd_pairings(const CommonOpts& opts, std::ostream& out) {
    RootSystem rs = build_root_system(parse_algebra(opts.algebra));
    std::vector<int> indices = theta_pairing_simples(rs);
    if (opts.format == "json") {
        json j{{"algebra", to_string(rs.algebra())}, {"indices", indices}};
        out << j.dump(2) << "\n";
    } else {
        out << "simple roots of " << to_string(rs.algebra()) << " with (alpha_i, theta^dual) = 1:";
        for (int i : indices) out << " alpha[" << i << "]";
        out << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact root systems and affine Weyl reflection decompositions"};
    app.require_subcommand(1);

    CommonOpts roots_opts, classical_opts, decompose_opts, verify_opts, pairings_opts;
    std::string classical_root, decompose_root;
    long long decompose_n = 0;
    bool decompose_negative = false;
    int emit_table = 0;
    std::string emit_format = "text";

    auto* roots = app.add_subcommand("roots", "List Delta_+ with labels and coordinates");
    roots->add_option("--algebra", roots_opts.algebra, "Algebra, e.g. A3 or E8")->required();
    add_format(roots, roots_opts);

    auto* classical = app.add_subcommand("classical", "Decompose a classical Weyl reflection");
    classical->add_option("--algebra", classical_opts.algebra)->required();
    classical->add_option("--root", classical_root, "Root in the a[i,j]/d[i]/s[..]/alpha[i]/theta grammar")
        ->required();
    add_format(classical, classical_opts);

    auto* decompose = app.add_subcommand("decompose", "Decompose an affine Weyl reflection sigma_{(a,0,n)}");
    decompose->add_option("--algebra", decompose_opts.algebra)->required();
    decompose->add_option("--root", decompose_root)->required();
    decompose->add_option("--n", decompose_n, "Grade of the affine root")->capture_default_str();
    decompose->add_flag("--negative", decompose_negative, "Use -root instead of root");
    add_format(decompose, decompose_opts);

    auto* verify = app.add_subcommand("verify", "Re-derive and check every applicable table row");
    verify->add_option("--algebra", verify_opts.algebra, "One algebra; omit for the default rank set");
    add_format(verify, verify_opts);

    auto* pairings = app.add_subcommand("pairings", "Simple roots with (alpha_i, theta^dual) = 1");
    pairings->add_option("--algebra", pairings_opts.algebra)->required();
    add_format(pairings, pairings_opts);

    auto* emit = app.add_subcommand("tables-emit", "Print the stored table fixtures as markdown");
    emit->add_option("--table", emit_table, "Restrict to one table (1..9)")->check(CLI::Range(1, 9));

    std::vector<const char*> argv;
    argv.push_back("affweyl");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e, out, err);
            return 0;
        }
        err << "error (usage): " << e.what() << "\n";
        return 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(roots_opts, out);
        if (classical->parsed()) return cmd_classical(classical_opts, classical_root, out);
        if (decompose->parsed())
            return cmd_decompose(decompose_opts, decompose_root, decompose_n, decompose_negative, out);
        if (verify->parsed()) return cmd_verify(verify_opts, out);
        if (pairings->parsed()) return cmd_pairings(pairings_opts, out);
        if (emit->parsed()) {
            out << fixture_markdown(emit_table ? std::optional<int>(emit_table) : std::nullopt);
            return 0;
        }
    } catch (const Error& e) {
        err << "error (" << error_code(e) << "): " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace affweyl::cli
