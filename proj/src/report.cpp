#include "refcox/report.hpp"

#include <cstdio>
#include <fstream>

namespace refcox {

Json poset_to_json(const Poset& p) {
    Json j;
    j["elements"] = p.labels();
    Json rels = Json::array();
    auto h = p.hasse();
    for (auto [a, b] : h.arrows)
        rels.push_back(Json::array({p.labels()[static_cast<size_t>(a)], p.labels()[static_cast<size_t>(b)]}));
    j["relations"] = std::move(rels);
    return j;
}

Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("relations"))
        throw input_error("poset file needs \"elements\" and \"relations\" fields");
    std::vector<std::string> labels;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw input_error("poset elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
            throw input_error("poset relations must be [a, b] label pairs");
        pairs.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return Poset::from_relations(std::move(labels), pairs);
}

namespace {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error("expected an integer or a decimal string");
}

} // namespace

Json cartan_to_json(const CartanAlgebra& a) {
    Json j;
    j["labels"] = a.labels();
    Json m = Json::array();
    for (const auto& row : a.matrix()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(int_to_json(v));
        m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    return j;
}

CartanAlgebra cartan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("matrix"))
        throw input_error("cartan file needs \"labels\" and \"matrix\" fields");
    std::vector<std::string> labels;
    for (const auto& e : j.at("labels")) labels.push_back(e.get<std::string>());
    std::vector<std::vector<Int>> matrix;
    for (const auto& row : j.at("matrix")) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(int_from_json(v));
        matrix.push_back(std::move(r));
    }
    return CartanAlgebra(std::move(labels), std::move(matrix));
}

Json poly_to_json(const IntPoly& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(int_to_json(c));
    return j;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("polynomial JSON form must be a coefficient array");
    std::vector<Int> coeffs;
    for (const auto& v : j) coeffs.push_back(int_from_json(v));
    return IntPoly(std::move(coeffs));
}

std::string format_measure(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", value);
    return buf;
}

Json mahler_to_json(const MahlerResult& m) {
    Json j;
    j["measure"] = format_measure(m.measure);
    j["exact_one"] = m.exact_one;
    Json roots = Json::array();
    for (const auto& z : m.roots_outside_unit)
        roots.push_back(Json::array({z.real(), z.imag()}));
    j["roots_outside_unit"] = std::move(roots);
    j["residual_bound"] = m.residual_bound;
    return j;
}

Json profile_to_json(const CyclotomicProfile& p) {
    Json factors = Json::object();
    for (auto [n, mult] : p.factors) factors[std::to_string(n)] = mult;
    Json j;
    j["factors"] = std::move(factors);
    j["remainder"] = p.remainder.str();
    return j;
}

Json certificate_to_json(const ClassCCertificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert) {
        Json step;
        step["down"] = s.down_set;
        step["up"] = s.up_set;
        step["runs"] = s.atilde_runs;
        steps.push_back(std::move(step));
    }
    return Json{{"steps", std::move(steps)}};
}

ClassCCertificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("steps"))
        throw input_error("certificate file needs a \"steps\" field");
    ClassCCertificate cert;
    for (const auto& s : j.at("steps")) {
        ClassCStep step;
        if (s.contains("down"))
            for (const auto& l : s.at("down")) step.down_set.push_back(l.get<std::string>());
        if (s.contains("up"))
            for (const auto& l : s.at("up")) step.up_set.push_back(l.get<std::string>());
        if (!s.contains("runs")) throw input_error("certificate step needs a \"runs\" field");
        for (const auto& r : s.at("runs")) step.atilde_runs.push_back(r.get<int>());
        cert.push_back(std::move(step));
    }
    return cert;
}

Json tower_to_json(const TowerReport& report) {
    Json levels = Json::array();
    for (const auto& level : report.levels) {
        Json l;
        l["label"] = level.label;
        l["phi"] = level.phi.str();
        l["degree"] = level.phi.deg();
        l["q"] = level.q.str();
        l["mahler"] = mahler_to_json(level.mahler);
        levels.push_back(std::move(l));
    }
    Json j;
    j["levels"] = std::move(levels);
    j["degree_ok"] = report.degree_ok;
    j["recurrence_ok"] = report.recurrence_ok;
    j["sturm0_ok"] = report.sturm0_ok;
    j["interlacing_ok"] = report.interlacing_ok;
    return j;
}

std::string tower_to_csv(const TowerReport& report) {
    std::string out = "level,degree,mahler,exact_one,degree_ok,recurrence_ok,sturm0_ok,interlacing_ok\n";
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (const auto& level : report.levels) {
        out += level.label + "," + std::to_string(level.phi.deg()) + "," +
               format_measure(level.mahler.measure) + "," + flag(level.mahler.exact_one) + "," +
               flag(report.degree_ok) + "," + flag(report.recurrence_ok) + "," +
               flag(report.sturm0_ok) + "," + flag(report.interlacing_ok) + "\n";
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error("cannot parse \"" + path + "\": " + e.what());
    }
}

} // namespace refcox
