#pragma once

#include <stdexcept>
#include <string>

namespace csl {

/// Raised when an enumeration would exceed its configured resource cap.
/// `resume_token` describes the first unprocessed frontier element so a rerun
/// with a higher cap (or a resumed run) can pick up where this one stopped.
class resource_cap_error : public std::runtime_error {
public:
    resource_cap_error(const std::string& what, std::string resume_token)
        : std::runtime_error(what), resume_token_(std::move(resume_token)) {}

    const std::string& resume_token() const { return resume_token_; }

private:
    std::string resume_token_;
};

} // namespace csl
