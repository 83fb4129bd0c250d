#pragma once

#include "qig/numcheck.hpp"
#include "qig/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace qig {

/// Raised for malformed input documents: bad JSON, wrong shape, entries that
/// are not [re, im] pairs, or matrices that fail the hermiticity check.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A square complex matrix document: {"n": ..., "matrix": [[[re, im], ...]]}.
struct MatrixDocument {
    Eigen::Index n = 0;
    Matrix matrix;
};

MatrixDocument parse_matrix_document(const nlohmann::json& j, double tol = 1e-10);

/// Reads a document from a file path, or from standard input for "-".
MatrixDocument read_matrix_document(const std::string& path, double tol = 1e-10);

nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json report_to_json(const CheckReport& report);

/// Scalar formatted with the given number of significant digits.
std::string format_scalar(double value, int significant = 15);

} // namespace qig
