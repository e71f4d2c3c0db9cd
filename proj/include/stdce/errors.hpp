// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace stdce {

/// Invalid physical parameter or geometry (non-positive frequency, wrong
/// geometry variant, out-of-range velocity, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A quadrature or truncation failed to reach its tolerance.
class NumericalError : public std::runtime_error {
  public:
    NumericalError(const std::string& what, std::string diagnostics = {})
        : std::runtime_error(what), diagnostics_(std::move(diagnostics))
    {
    }

    const std::string& diagnostics() const noexcept { return diagnostics_; }

  private:
    std::string diagnostics_;
};

/// Requested computation exceeds the size the routine is meant for.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace stdce
