#pragma once

#include <stdexcept>
#include <string>

namespace pquad {

/// Invalid argument values (out-of-range parameters, unknown names, bad pairs).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A function value came out non-finite at a sample point.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& msg, double point)
        : std::runtime_error(msg), point_(point) {}
    double point() const noexcept { return point_; }

private:
    double point_;
};

/// The adaptive integrator hit its depth limit; carries the worst subinterval.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& msg, double sub_a, double sub_b)
        : std::runtime_error(msg), sub_a_(sub_a), sub_b_(sub_b) {}
    double sub_a() const noexcept { return sub_a_; }
    double sub_b() const noexcept { return sub_b_; }

private:
    double sub_a_;
    double sub_b_;
};

/// A bound was requested on an interval outside the function's certified domain.
class CertificationError : public std::invalid_argument {
public:
    explicit CertificationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Real-valued operation left its domain (e.g. even root of a negative radicand).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace pquad
