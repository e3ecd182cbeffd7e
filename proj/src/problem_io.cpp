#include "truncmean/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace truncmean {

namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw std::invalid_argument(where + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw std::invalid_argument(where + " must be finite");
    return x;
}

Vector parse_vector(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) {
        throw std::invalid_argument(where + " must be a non-empty array");
    }
    Vector out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[static_cast<Index>(i)] = finite_number(v[i], where + " entry");
    }
    return out;
}

Matrix parse_matrix(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) {
        throw std::invalid_argument(where + " must be a non-empty array of rows");
    }
    const auto n = v.size();
    Matrix out(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_array() || v[i].size() != n) {
            throw std::invalid_argument(where + " must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            out(static_cast<Index>(i), static_cast<Index>(j)) =
                finite_number(v[i][j], where + " entry");
        }
    }
    return out;
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

nlohmann::json problem_to_json(const Problem& problem) {
    problem.validate();
    json doc;
    doc["mu"] = vector_to_json(problem.mu);
    if (problem.sigma) doc["sigma"] = matrix_to_json(*problem.sigma);
    if (problem.sigma_inv) doc["sigma_inv"] = matrix_to_json(*problem.sigma_inv);
    if (problem.expcorr) {
        doc["expcorr"] = {{"n", problem.expcorr->n}, {"rho", problem.expcorr->rho}};
    }
    json bounds = json::array();
    for (const auto& b : problem.bounds) {
        bounds.push_back({{"side", b.side == BoundSide::Left ? "left" : "right"},
                          {"cut", b.cut}});
    }
    doc["bounds"] = bounds;
    return doc;
}

Problem problem_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("problem document must be a JSON object");
    if (!doc.contains("mu")) throw std::invalid_argument("problem document is missing \"mu\"");
    if (!doc.contains("bounds")) {
        throw std::invalid_argument("problem document is missing \"bounds\"");
    }

    Problem p;
    p.mu = parse_vector(doc.at("mu"), "\"mu\"");
    if (doc.contains("sigma")) p.sigma = parse_matrix(doc.at("sigma"), "\"sigma\"");
    if (doc.contains("sigma_inv")) p.sigma_inv = parse_matrix(doc.at("sigma_inv"), "\"sigma_inv\"");
    if (doc.contains("expcorr")) {
        const auto& e = doc.at("expcorr");
        if (!e.is_object() || !e.contains("n") || !e.contains("rho")) {
            throw std::invalid_argument("\"expcorr\" must be an object with \"n\" and \"rho\"");
        }
        if (!e.at("n").is_number_integer()) {
            throw std::invalid_argument("\"expcorr\" \"n\" must be an integer");
        }
        ExpCorrSpec spec;
        spec.n = e.at("n").get<Index>();
        spec.rho = finite_number(e.at("rho"), "\"expcorr\" \"rho\"");
        p.expcorr = spec;
    }

    const auto& bounds = doc.at("bounds");
    if (!bounds.is_array()) throw std::invalid_argument("\"bounds\" must be an array");
    for (const auto& b : bounds) {
        if (!b.is_object() || !b.contains("side") || !b.contains("cut")) {
            throw std::invalid_argument("each bound needs \"side\" and \"cut\"");
        }
        const std::string side = b.at("side").get<std::string>();
        TruncationBound tb;
        if (side == "left") {
            tb.side = BoundSide::Left;
        } else if (side == "right") {
            tb.side = BoundSide::Right;
        } else {
            throw std::invalid_argument("bound \"side\" must be \"left\" or \"right\"");
        }
        tb.cut = finite_number(b.at("cut"), "bound \"cut\"");
        p.bounds.push_back(tb);
    }
    p.validate();
    return p;
}

Problem read_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file: " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
    }
    return problem_from_json(doc);
}

void write_problem_file(const std::filesystem::path& path, const Problem& problem) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path.string());
    out << problem_to_json(problem).dump(2) << "\n";
}

}  // namespace truncmean
