#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarent {

// Root of every library exception.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument: negative density, set outside the space, nonpositive scale.
class DomainError : public Error {
public:
    using Error::Error;
};

// Reference density vanishes where the measured density does not.
class AbsoluteContinuityError : public Error {
public:
    AbsoluteContinuityError(const std::string& what, double where)
        : Error(what), point_(where) {}
    double point() const noexcept { return point_; }

private:
    double point_;
};

// A density w.r.t. its reference exceeds 1 beyond tolerance.
class NotInformationMeasureError : public Error {
public:
    NotInformationMeasureError(const std::string& what, double sup_value)
        : Error(what), sup_(sup_value) {}
    double observed_sup() const noexcept { return sup_; }

private:
    double sup_;
};

// Zero (or otherwise unusable) total mass.
class DegenerateMeasureError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}
    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// A continuous translation moved a set outside the group's window.
class WindowOverflowError : public Error {
public:
    using Error::Error;
};

class UnsupportedOperationError : public Error {
public:
    using Error::Error;
};

class StepSizeError : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

// Syntax error in a DSL expression, set literal, or group descriptor.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Runtime failure evaluating a DSL expression (log of nonpositive, x/0, ...).
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, std::string subexpression, double x)
        : Error(what), subexpression_(std::move(subexpression)), x_(x) {}
    const std::string& subexpression() const noexcept { return subexpression_; }
    double x() const noexcept { return x_; }

private:
    std::string subexpression_;
    double x_;
};

}  // namespace haarent
