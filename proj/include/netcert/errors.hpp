#pragma once

#include <stdexcept>
#include <string>

namespace netcert {

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidOperand : std::invalid_argument {
    explicit InvalidOperand(const std::string& what) : std::invalid_argument(what) {}
};

struct CapacityExceeded : std::runtime_error {
    explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateRealization : std::runtime_error {
    explicit DegenerateRealization(const std::string& what) : std::runtime_error(what) {}
};

struct NotApplicable : std::runtime_error {
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netcert
