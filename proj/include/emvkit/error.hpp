#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace emvkit {

/// Error with a machine-readable code and a witness payload, mirrored
/// verbatim into CLI error reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, nlohmann::json witness = nlohmann::json::object())
        : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

    const std::string& code() const noexcept { return code_; }
    const nlohmann::json& witness() const noexcept { return witness_; }

private:
    std::string code_;
    nlohmann::json witness_;
};

}  // namespace emvkit
