#pragma once

#include <stdexcept>
#include <string>

namespace conescale {

/// Error categories mirrored by the C API status codes.
enum class ErrorCode {
    Dimension,
    Domain,
    NotInterior,
    Numerical,
    Parse,
    RangeInclusion,
    Template,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(ErrorCode::Dimension, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct NotInteriorError : Error {
    explicit NotInteriorError(const std::string& what) : Error(ErrorCode::NotInterior, what) {}
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(ErrorCode::Numerical, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct RangeInclusionError : Error {
    explicit RangeInclusionError(const std::string& what) : Error(ErrorCode::RangeInclusion, what) {}
};

struct TemplateError : Error {
    explicit TemplateError(const std::string& what) : Error(ErrorCode::Template, what) {}
};

}  // namespace conescale
