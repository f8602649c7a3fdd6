#pragma once

#include <stdexcept>
#include <string>

namespace hzeta {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidLambda : Error {
    explicit InvalidLambda(const std::string& w) : Error(w) {}
};
struct NonHyperbolic : Error {
    explicit NonHyperbolic(const std::string& w) : Error(w) {}
};
struct BranchCut : Error {
    explicit BranchCut(const std::string& w) : Error(w) {}
};
struct PoleInClosure : Error {
    explicit PoleInClosure(const std::string& w) : Error(w) {}
};
// Carries the failing condition name and its margin.
struct InclusionViolated : Error {
    std::string condition;
    double margin;
    InclusionViolated(const std::string& cond, double m)
        : Error("inclusion violated: " + cond + " (margin " + std::to_string(m) + ")"),
          condition(cond), margin(m) {}
};
struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& w) : Error(w) {}
};
struct BadDomain : Error {
    explicit BadDomain(const std::string& w) : Error(w) {}
};
struct PoleOfContinuation : Error {
    explicit PoleOfContinuation(const std::string& w) : Error(w) {}
};
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w) : Error(w) {}
};
struct InadmissibleWord : Error {
    explicit InadmissibleWord(const std::string& w) : Error(w) {}
};
struct NotBracketed : Error {
    explicit NotBracketed(const std::string& w) : Error(w) {}
};
struct SpectralRadiusExceeded : Error {
    explicit SpectralRadiusExceeded(const std::string& w) : Error(w) {}
};
struct BoundaryTooClose : Error {
    explicit BoundaryTooClose(const std::string& w) : Error(w) {}
};
struct WindingNotIntegral : Error {
    explicit WindingNotIntegral(const std::string& w) : Error(w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(w) {}
};

} // namespace hzeta
