#pragma once

#include <stdexcept>
#include <string>

namespace qig {

/// Base class for all contract violations reported by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error("NotHermitian: " + what) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& what) : Error("NotPositiveDefinite: " + what) {}
};

class NonPositiveArgument : public Error {
public:
    explicit NonPositiveArgument(const std::string& what) : Error("NonPositiveArgument: " + what) {}
};

class TraceNotOne : public Error {
public:
    explicit TraceNotOne(const std::string& what) : Error("TraceNotOne: " + what) {}
};

class Degenerate : public Error {
public:
    explicit Degenerate(const std::string& what) : Error("Degenerate: " + what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch: " + what) {}
};

class NotCentered : public Error {
public:
    explicit NotCentered(const std::string& what) : Error("NotCentered: " + what) {}
};

class NotTraceless : public Error {
public:
    explicit NotTraceless(const std::string& what) : Error("NotTraceless: " + what) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("OutOfRange: " + what) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange: " + what) {}
};

} // namespace qig
