#include "pushtasep/io.hpp"

namespace pushtasep {

using nlohmann::json;

json matrix_to_json(const SparseMatrix<Rational>& m, json meta) {
    json j = std::move(meta);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (const auto& [key, v] : m.entries())
        entries.push_back(json::array({key.first, key.second, rational_str(v)}));
    j["entries"] = std::move(entries);
    return j;
}

json matrix_to_json(const SparseMatrix<PolyZ>& m, json meta) {
    json j = std::move(meta);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["poly"] = true;
    json entries = json::array();
    for (const auto& [key, p] : m.entries())
        entries.push_back(json::array({key.first, key.second, p.coeff_strings()}));
    j["entries"] = std::move(entries);
    return j;
}

SparseMatrix<Rational> matrix_from_json(const json& j) {
    SparseMatrix<Rational> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries"))
        m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
              parse_rational(e.at(2).get<std::string>()));
    return m;
}

SparseMatrix<PolyZ> poly_matrix_from_json(const json& j) {
    SparseMatrix<PolyZ> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        std::vector<Rational> coeffs;
        for (const auto& c : e.at(2)) coeffs.push_back(parse_rational(c.get<std::string>()));
        m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), PolyZ(std::move(coeffs)));
    }
    return m;
}

json vector_to_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_str(r));
    return a;
}

RationalVector vector_from_json(const json& j) {
    RationalVector v;
    for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
    return v;
}

}  // namespace pushtasep
