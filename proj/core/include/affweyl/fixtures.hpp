#pragma once

#include "affweyl/affine.hpp"
#include "affweyl/root_system.hpp"
#include "affweyl/weyl.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace affweyl {

/// One transcribed table row: a parametric record in the fixture text format
/// `table=4 algebra=B 1<=i<j<=r subject=a[i,j]- word=peak(i,j-1)`.
struct FixtureRow {
    int table = 0;
    Family family = Family::A;
    int fixed_rank = 0; // 0 for rank-parametric families (A..D)
    std::vector<std::string> conds;
    std::string subject;
    std::string payload_key;  // word / value / marks+value / pairing list
    std::string payload;
    std::string slots;        // sign-family rows of tables 8-9
    std::string parity;       // even / odd / any
    std::string marks;        // theta rows of tables 7-9
    int id = 0;               // stable row id (line order)
    std::string source;       // the raw line
};

/// Parsed, validated fixture store for Tables 1-9 (singleton over the embedded text).
const std::vector<FixtureRow>& fixture_rows();

/// Rows of one table, in file order.
std::vector<const FixtureRow*> fixture_rows_for(int table);

/// Number of rows stored for a table (audited against the paper in the tests).
int fixture_row_count(int table);

/// Classical word token: a fundamental reflection letter or a named reflection that
/// expands through another table row.
using ClassicalToken = std::variant<int, RootLabel>;

struct TranslationFixture {
    int simple_index = 0;
    AffineWord word;
    int row_id = 0;
};

struct ClassicalFixture {
    RootLabel subject;
    std::vector<ClassicalToken> word;
    int row_id = 0;
};

/// All Table 1-2 instances applicable to this algebra.
std::vector<TranslationFixture> translation_fixtures(const RootSystem& rs);

/// The literal table word for t_{alpha_i^dual}. Throws FixtureUnavailable outside the
/// table's validity range (e.g. A_1, B_2 rows the paper does not cover).
AffineWord fixture_translation_word(const RootSystem& rs, int i);

/// All Table 4-6 instances applicable to this algebra.
std::vector<ClassicalFixture> classical_fixtures(const RootSystem& rs);

/// The literal table word for sigma at this label, with nested named reflections
/// recursively expanded to simple letters. Simple roots expand to their own letter.
SimpleWord classical_fixture_word(const RootSystem& rs, const RootLabel& label);

/// Same, against a prebuilt instance list (verification expands many labels).
SimpleWord classical_fixture_word(const RootSystem& rs, const RootLabel& label,
                                  const std::vector<ClassicalFixture>& fixtures);

/// Table 3 row: the simple indices with (alpha_i, theta^dual) = 1.
std::vector<int> table3_fixture(const RootSystem& rs);

/// One structural datum of Tables 7-9.
struct RootDatum {
    enum class Kind { SimpleRoot, PositiveRoot, Theta };
    Kind kind = Kind::PositiveRoot;
    int simple_index = 0;           // SimpleRoot rows
    RootLabel label;                // PositiveRoot rows
    RationalVector vec;
    std::vector<long long> marks;   // Theta rows
    int row_id = 0;
};

/// All Table 7-9 instances for this algebra (sign-family rows fully enumerated).
std::vector<RootDatum> rootsystem_fixtures(const RootSystem& rs);

/// Markdown rendering of the stored fixtures, optionally restricted to one table.
std::string fixture_markdown(std::optional<int> table);

} // namespace affweyl
