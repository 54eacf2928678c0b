#include "affweyl/serialize.hpp"

#include "json.hpp"

namespace affweyl {

using nlohmann::json;

namespace {

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as \"p/q\"", 0);
}

json vector_json(const RationalVector& v) {
    json arr = json::array();
    for (std::size_t k = 0; k < v.size(); ++k) arr.push_back(rational_json(v[k]));
    return arr;
}

RationalVector vector_from(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coordinate array", 0);
    RationalVector v(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) v[k] = rational_from(j[k]);
    return v;
}

} // namespace

std::string word_to_json(const SimpleWord& w) {
    json j;
    j["letters"] = w.letters;
    j["order"] = "right-to-left";
    return j.dump();
}

SimpleWord word_from_json(std::string_view text) {
    json j = json::parse(text);
    SimpleWord w;
    for (const auto& x : j.at("letters")) w.letters.push_back(x.get<int>());
    if (j.contains("order") && j["order"] != "right-to-left")
        throw ParseError("unsupported word order", 0);
    return w;
}

std::string weight_to_json(const AffineWeight& w) {
    json j;
    j["lambda"] = vector_json(w.lambda);
    j["k"] = rational_json(w.k);
    j["m"] = rational_json(w.m);
    return j.dump();
}

AffineWeight weight_from_json(std::string_view text) {
    json j = json::parse(text);
    return AffineWeight{vector_from(j.at("lambda")), rational_from(j.at("k")), rational_from(j.at("m"))};
}

std::string affine_root_to_json(const RootSystem& rs, const AffineRoot& root) {
    json j;
    if (!root.is_real()) {
        j["imaginary"] = true;
        j["n"] = root.n();
        return j.dump();
    }
    auto label = lookup_label(rs, root.alpha());
    if (label && !label->negative)
        j["alpha"] = print_root(rs, label->label);
    else
        j["alpha"] = vector_json(root.alpha());
    j["n"] = root.n();
    return j.dump();
}

AffineRoot affine_root_from_json(const RootSystem& rs, std::string_view text) {
    json j = json::parse(text);
    long long n = j.at("n").get<long long>();
    if (j.value("imaginary", false)) return AffineRoot::imaginary(n);
    const json& alpha = j.at("alpha");
    if (alpha.is_string()) {
        SignedLabel label = parse_root(rs, alpha.get<std::string>());
        RationalVector v = rs.vector_of(label.label);
        return AffineRoot::real(label.negative ? -v : v, n);
    }
    return AffineRoot::real(vector_from(alpha), n);
}

std::string report_to_json(const VerificationReport& report) {
    json j;
    j["algebra"] = to_string(report.algebra);
    j["total_instances"] = report.total_instances;
    j["total_failures"] = report.total_failures;
    j["all_passed"] = report.all_passed();
    j["elapsed_seconds"] = report.elapsed_seconds;
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["table"] = row.table;
        r["row"] = row.row_id;
        r["subject"] = row.subject;
        r["instances"] = row.instances;
        r["failed"] = row.failed;
        if (!row.failures.empty()) r["failures"] = row.failures;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

} // namespace affweyl
