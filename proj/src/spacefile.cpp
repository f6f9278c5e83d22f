#include "ctrace/spacefile.hpp"

#include "ctrace/errors.hpp"

#include <fstream>
#include <sstream>

namespace ctrace::spaces {

namespace {

using nlohmann::json;

int parse_degree_key(const std::string& key) {
    try {
        std::size_t used = 0;
        const int degree = std::stoi(key, &used);
        if (used != key.size())
            throw ParseError("degree key is not an integer: \"" + key + "\"");
        return degree;
    } catch (const std::invalid_argument&) {
        throw ParseError("degree key is not an integer: \"" + key + "\"");
    } catch (const std::out_of_range&) {
        throw ParseError("degree key out of range: \"" + key + "\"");
    }
}

std::string vertex_label(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw ParseError("vertex labels must be strings or integers");
}

CohomologyProfile load_complex(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("facets"))
        throw ParseError("\"complex\" needs \"vertices\" and \"facets\"");
    if (!doc["vertices"].is_array() || !doc["facets"].is_array())
        throw ParseError("\"vertices\" and \"facets\" must be arrays");

    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"])
        vertices.push_back(vertex_label(v));

    std::vector<Simplex> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_array())
            throw ParseError("each facet must be an array of vertex labels");
        Simplex facet;
        for (const auto& v : f)
            facet.push_back(vertex_label(v));
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex(std::move(vertices), std::move(facets)).cohomology();
}

CohomologyProfile load_profile(const json& doc) {
    if (!doc.is_object())
        throw ParseError("\"profile\" must be an object mapping degrees to label arrays");
    std::map<int, std::vector<std::string>> entries;
    for (const auto& [key, value] : doc.items()) {
        const int degree = parse_degree_key(key);
        if (!value.is_array())
            throw ParseError("profile entry for degree " + key + " must be an array of labels");
        std::vector<std::string> labels;
        for (const auto& l : value) {
            if (!l.is_string())
                throw ParseError("profile labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        entries[degree] = std::move(labels);
    }
    return CohomologyProfile("profile", std::move(entries));
}

CohomologyProfile load_builtin(const json& doc) {
    if (!doc["builtin"].is_string())
        throw ParseError("\"builtin\" must be a string");
    const std::string name = doc["builtin"].get<std::string>();
    const json params = doc.value("params", json::array());
    if (!params.is_array())
        throw ParseError("\"params\" must be an array");

    if (params.empty())
        return builtin_space(name);

    // Integer params: rebuild the expression. Space params: recurse.
    bool all_ints = true;
    for (const auto& p : params)
        all_ints = all_ints && p.is_number_integer();
    if (all_ints) {
        std::ostringstream expr;
        expr << name << "(";
        for (std::size_t i = 0; i < params.size(); ++i)
            expr << (i ? "," : "") << params[i].get<long long>();
        expr << ")";
        return builtin_space(expr.str());
    }

    if (name != "product")
        throw ParseError("only \"product\" takes space-valued params");
    if (params.size() != 2)
        throw InputError("product takes exactly two space parameters");
    return kunneth(load_space(params[0]), load_space(params[1]));
}

} // namespace

CohomologyProfile load_space(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ParseError("space description must be a JSON object");
    const int kinds = static_cast<int>(doc.contains("complex")) +
                      static_cast<int>(doc.contains("profile")) +
                      static_cast<int>(doc.contains("builtin"));
    if (kinds != 1)
        throw ParseError(
            "space description needs exactly one of \"complex\", \"profile\", \"builtin\"");
    if (doc.contains("complex"))
        return load_complex(doc["complex"]);
    if (doc.contains("profile"))
        return load_profile(doc["profile"]);
    return load_builtin(doc);
}

CohomologyProfile load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read space file \"" + path + "\"");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
    }
    return load_space(doc);
}

CohomologyEndomorphism load_endomorphism(const nlohmann::json& doc,
                                         const CohomologyProfile& space) {
    if (!doc.is_object() || !doc.contains("degree_blocks") || !doc["degree_blocks"].is_object())
        throw ParseError("endomorphism description needs a \"degree_blocks\" object");

    CohomologyEndomorphism raw;
    for (const auto& [key, rows] : doc["degree_blocks"].items()) {
        const int degree = parse_degree_key(key);
        if (!rows.is_array())
            throw ParseError("block at degree " + key + " must be an array of rows");
        std::vector<qlinalg::QVector> matrix_rows;
        for (const auto& row : rows) {
            if (!row.is_array())
                throw ParseError("block rows must be arrays");
            qlinalg::QVector r;
            for (const auto& entry : row) {
                if (entry.is_number_integer())
                    r.emplace_back(qlinalg::Rational(entry.get<long>()));
                else if (entry.is_string())
                    r.push_back(qlinalg::Rational::parse(entry.get<std::string>()));
                else
                    throw ParseError("matrix entries must be integers or \"p/q\" strings");
            }
            matrix_rows.push_back(std::move(r));
        }
        raw.blocks.emplace(degree, qlinalg::QMatrix::from_rows(matrix_rows));
    }
    return validate_endomorphism(space, raw);
}

CohomologyEndomorphism load_endomorphism_file(const std::string& path,
                                              const CohomologyProfile& space) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read endomorphism file \"" + path + "\"");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in \"" + path + "\": " + e.what());
    }
    return load_endomorphism(doc, space);
}

} // namespace ctrace::spaces
