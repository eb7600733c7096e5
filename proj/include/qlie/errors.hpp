#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgument : std::runtime_error {
    explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAtPoint : std::runtime_error {
    explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSymbol : std::runtime_error {
    explicit UnknownSymbol(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownIndex : std::runtime_error {
    explicit UnknownIndex(const std::string& what) : std::runtime_error(what) {}
};

struct NoSuchRep : std::runtime_error {
    explicit NoSuchRep(const std::string& what) : std::runtime_error(what) {}
};

struct CoproductUnavailable : std::runtime_error {
    explicit CoproductUnavailable(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeExceeded : std::runtime_error {
    explicit DegreeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct DeviationFileError : std::runtime_error {
    explicit DeviationFileError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlie
