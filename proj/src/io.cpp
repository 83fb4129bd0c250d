#include "qig/io.hpp"

#include "qig/spectra.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qig {

using nlohmann::json;

namespace {

Complex parse_entry(const json& cell) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw ParseError("matrix entries must be [re, im] pairs of numbers");
    return Complex(cell[0].get<double>(), cell[1].get<double>());
}

} // namespace

MatrixDocument parse_matrix_document(const json& j, double tol) {
    if (!j.is_object()) throw ParseError("document is not a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("document is missing the integer field \"n\"");
    const auto n = j["n"].get<Eigen::Index>();
    if (n < 2) throw ParseError("dimension must be at least 2");
    if (!j.contains("matrix") || !j["matrix"].is_array()
        || j["matrix"].size() != static_cast<std::size_t>(n))
        throw ParseError("field \"matrix\" must be an array of n rows");
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = j["matrix"][static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("each matrix row must hold n entries");
        for (Eigen::Index k = 0; k < n; ++k)
            m(i, k) = parse_entry(row[static_cast<std::size_t>(k)]);
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol * (1.0 + max_abs(m))) {
        std::ostringstream os;
        os << "NotHermitian: asymmetry " << defect << " exceeds tolerance " << tol;
        throw ParseError(os.str());
    }
    return MatrixDocument{n, std::move(m)};
}

MatrixDocument read_matrix_document(const std::string& path, double tol) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
    return parse_matrix_document(j, tol);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.rows()}, {"matrix", std::move(rows)}};
}

json report_to_json(const CheckReport& report) {
    return json{{"name", report.name},
                {"residual", report.residual},
                {"tolerance", report.tolerance},
                {"passed", report.passed},
                {"metadata", report.metadata}};
}

std::string format_scalar(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

} // namespace qig
