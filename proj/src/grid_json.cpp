#include "trigrid/grid_json.hpp"

#include <json.hpp>

#include <vector>

namespace trigrid {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_value(const ordered_json& j, int r, int d, int e) {
    const std::string where =
        "triangle (" + std::to_string(r) + "," + std::to_string(d) + ") edge " + std::to_string(e);
    if (!j.is_string()) throw GridParseError("grid JSON: " + where + ": expected \"p/q\" string");
    Rational v;
    try {
        v = Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& ex) {
        throw GridParseError("grid JSON: " + where + ": " + ex.what());
    }
    if (!v.is_positive())
        throw GridParseError("grid JSON: " + where + ": value " + v.to_string() +
                             " is not strictly positive");
    return v;
}

}  // namespace

std::string serialize(const Grid& g) {
    ordered_json out;
    out["n"] = g.n();
    if (g.provenance()) {
        out["original_n"] = g.provenance()->original_n;
        out["reductions"] = g.provenance()->reductions;
    } else {
        out["original_n"] = nullptr;
        out["reductions"] = 0;
    }
    ordered_json triangles = ordered_json::array();
    for (const TriRef t : all_triangles(g.n())) {
        const PreType& p = g.pretype(t);
        ordered_json jt;
        jt["r"] = t.r;
        jt["d"] = t.d;
        jt["edges"] = {p.left.to_string(), p.right.to_string(), p.base.to_string()};
        triangles.push_back(std::move(jt));
    }
    out["triangles"] = std::move(triangles);
    return out.dump(2) + "\n";
}

Grid deserialize(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw GridParseError(std::string("grid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw GridParseError("grid JSON: missing integer field \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw GridParseError("grid JSON: n must be >= 1, got " + std::to_string(n));
    if (!j.contains("triangles") || !j["triangles"].is_array())
        throw GridParseError("grid JSON: missing array field \"triangles\"");

    const int count = n * (n + 1) / 2;
    std::vector<PreType> labels(count);
    std::vector<bool> seen(count, false);
    for (const auto& jt : j["triangles"]) {
        if (!jt.is_object() || !jt.contains("r") || !jt.contains("d") || !jt.contains("edges"))
            throw GridParseError("grid JSON: triangle entry missing r/d/edges");
        if (!jt["r"].is_number_integer() || !jt["d"].is_number_integer())
            throw GridParseError("grid JSON: triangle r/d must be integers");
        const int r = jt["r"].get<int>();
        const int d = jt["d"].get<int>();
        if (d < 1 || r < d || r > n)
            throw GridParseError("grid JSON: triangle (" + std::to_string(r) + "," + std::to_string(d) +
                                 ") outside " + std::to_string(n) + "-row grid");
        const auto& edges = jt["edges"];
        if (!edges.is_array() || edges.size() != 3)
            throw GridParseError("grid JSON: triangle (" + std::to_string(r) + "," + std::to_string(d) +
                                 "): \"edges\" must list exactly left, right, base");
        const int idx = r * (r - 1) / 2 + d - 1;
        if (seen[idx])
            throw GridParseError("grid JSON: duplicate triangle (" + std::to_string(r) + "," +
                                 std::to_string(d) + ")");
        seen[idx] = true;
        labels[idx] = PreType{parse_value(edges[0], r, d, 1), parse_value(edges[1], r, d, 2),
                              parse_value(edges[2], r, d, 3)};
    }
    for (int r = 1, idx = 0; r <= n; ++r)
        for (int d = 1; d <= r; ++d, ++idx)
            if (!seen[idx])
                throw GridParseError("grid JSON: missing triangle (" + std::to_string(r) + "," +
                                     std::to_string(d) + ")");

    std::optional<Grid::Provenance> prov;
    if (j.contains("original_n") && !j["original_n"].is_null()) {
        if (!j["original_n"].is_number_integer())
            throw GridParseError("grid JSON: \"original_n\" must be an integer or null");
        if (j.contains("reductions") && !j["reductions"].is_number_integer())
            throw GridParseError("grid JSON: \"reductions\" must be an integer");
        const int reductions = j.value("reductions", 0);
        prov = Grid::Provenance{j["original_n"].get<int>(), reductions};
    }
    return Grid(n, std::move(labels), prov);
}

}  // namespace trigrid
