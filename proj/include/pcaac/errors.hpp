// SPDX-FileCopyrightText: 2026 pcaac contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PCAAC_ERRORS_HPP
#define PCAAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcaac {

/// File could not be opened, read, or written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File content violates the expected format (message carries line numbers
/// where applicable).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller broke an API precondition.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

/// Numerical routine failed to converge or produced invalid output.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pcaac

#endif
