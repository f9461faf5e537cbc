#ifndef FRAGASYM_ERRORS_HPP
#define FRAGASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fragasym {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct BracketError : std::runtime_error {
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

struct RootBracketError : std::runtime_error {
    explicit RootBracketError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingTailError : std::runtime_error {
    explicit MissingTailError(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionHError : std::runtime_error {
    explicit ConditionHError(const std::string& what) : std::runtime_error(what) {}
};

struct StabilityError : std::runtime_error {
    explicit StabilityError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractionError : std::runtime_error {
    explicit ContractionError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fragasym

#endif
