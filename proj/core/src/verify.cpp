#include "affweyl/verify.hpp"

#include "affweyl/affine.hpp"
#include "affweyl/weyl.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace affweyl {

namespace {

RowResult& row_for(std::map<int, RowResult>& rows, int table, int row_id, const std::string& subject) {
    auto [it, inserted] = rows.try_emplace(row_id);
    if (inserted) {
        it->second.table = table;
        it->second.row_id = row_id;
        it->second.subject = subject;
    }
    return it->second;
}

void record(RowResult& row, bool ok, const std::string& detail) {
    ++row.instances;
    if (!ok) {
        ++row.failed;
        row.failures.push_back(detail);
    }
}

} // namespace

VerificationReport verify_all(const AlgebraFamily& algebra) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.algebra = algebra;

    RootSystem rs = build_root_system(algebra);
    std::map<int, RowResult> rows;

    // Tables 1-2: each fundamental-translation word must normalize to (id, alpha_i^dual).
    for (const auto& fixture : translation_fixtures(rs)) {
        const FixtureRow& meta = fixture_rows()[static_cast<std::size_t>(fixture.row_id)];
        RowResult& row = row_for(rows, meta.table, fixture.row_id, meta.subject);
        CanonicalAffineElement got = canonical_of_word(rs, fixture.word);
        CanonicalAffineElement want = CanonicalAffineElement::identity(rs);
        want.mu = rs.simple_coroot(fixture.simple_index);
        record(row, got == want,
               "t_{alpha_" + std::to_string(fixture.simple_index) + "^dual} word does not normalize to its coroot");
    }

    // Table 3.
    try {
        std::vector<int> expected = table3_fixture(rs);
        const auto t3_rows = fixture_rows_for(3);
        int row_id = -3;
        for (const auto* r : t3_rows)
            if (r->family == algebra.family && (r->fixed_rank == 0 || r->fixed_rank == algebra.rank))
                row_id = r->id;
        RowResult& row = row_for(rows, 3, row_id, "pairings");
        record(row, expected == theta_pairing_simples(rs), "Table 3 set mismatch");
    } catch (const FixtureUnavailable&) {
        // No Table 3 row in range (A_1): nothing to check.
    }

    // Tables 4-6: each classical word, fully expanded, must equal its reflection.
    const auto fixtures = classical_fixtures(rs);
    for (const auto& fixture : fixtures) {
        const FixtureRow& meta = fixture_rows()[static_cast<std::size_t>(fixture.row_id)];
        RowResult& row = row_for(rows, meta.table, fixture.row_id, meta.subject);
        const RationalVector& root = rs.vector_of(fixture.subject);
        SimpleWord word = classical_fixture_word(rs, fixture.subject, fixtures);
        bool ok = finite_element_of_word(rs, word) == reflection_matrix(rs, root);
        record(row, ok, "sigma_{" + print_root(rs, fixture.subject) + "} word does not equal its reflection");
    }

    // Tables 7-9: structural data against build_root_system, plus exact coverage.
    std::set<RationalVector> covered;
    bool coverage_duplicate = false;
    int structural_row_id = -1;
    int structural_table = 7 + (algebra.family == Family::E ? 1 : (algebra.family == Family::F || algebra.family == Family::G ? 2 : 0));
    for (const auto& datum : rootsystem_fixtures(rs)) {
        const FixtureRow& meta = fixture_rows()[static_cast<std::size_t>(datum.row_id)];
        RowResult& row = row_for(rows, meta.table, datum.row_id, meta.subject);
        structural_row_id = datum.row_id;
        switch (datum.kind) {
        case RootDatum::Kind::SimpleRoot:
            record(row, rs.simple_root(datum.simple_index) == datum.vec,
                   "simple root alpha_" + std::to_string(datum.simple_index) + " mismatch");
            break;
        case RootDatum::Kind::PositiveRoot: {
            bool ok = rs.is_positive_root(datum.vec);
            if (ok) {
                try {
                    ok = rs.vector_of(datum.label) == datum.vec;
                } catch (const NotARoot&) {
                    ok = false;
                }
            }
            if (!covered.insert(datum.vec).second) coverage_duplicate = true;
            record(row, ok, "positive root " + print_root(rs, datum.label) + " mismatch");
            break;
        }
        case RootDatum::Kind::Theta: {
            bool ok = rs.theta() == datum.vec && rs.theta_marks() == datum.marks;
            if (ok) {
                // The mark row is also the expansion of theta on the simple roots.
                ok = simple_expansion(rs, rs.theta()) == datum.marks;
            }
            record(row, ok, "theta row mismatch");
            break;
        }
        }
    }
    if (structural_row_id >= 0) {
        RowResult& row = row_for(rows, structural_table, -2, "coverage");
        std::set<RationalVector> actual;
        for (const auto& [label, vec] : rs.positive_roots()) actual.insert(vec);
        record(row, !coverage_duplicate && covered == actual,
               "table root families do not enumerate Delta_+ exactly once");
    }

    for (auto& [id, row] : rows) {
        report.total_instances += row.instances;
        report.total_failures += row.failed;
        report.rows.push_back(std::move(row));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace affweyl
