#pragma once

#include <stdexcept>
#include <string>

namespace twistkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& var)
        : Error("no value assigned to variable '" + var + "'") {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

struct UndeclaredCoordinate : Error {
    explicit UndeclaredCoordinate(const std::string& var)
        : Error("coefficient references undeclared coordinate '" + var + "'") {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct NotIntegrable : Error {
    explicit NotIntegrable(const std::string& msg) : Error(msg) {}
};

struct IncompatibleMetric : Error {
    explicit IncompatibleMetric(const std::string& msg) : Error(msg) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& msg) : Error(msg) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& msg) : Error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), column(col_) {}
};

}  // namespace twistkit
