#pragma once

#include <string>
#include <vector>

#include "recsizer/config.hpp"

namespace recsizer {

enum class IssueCode {
    NegativeRate,
    BuyBelowSell,
    SocEfficiencyInvalid,
    SocBoundsInverted,
    NonPositiveValue,
    NegativeValue,
    SingleParticipantRec,
    SeriesLengthMismatch,
    SeriesInvalid,
    NonIntegerInvalid,
};

const char* to_string(IssueCode code);

struct ValidationIssue {
    IssueCode code;
    std::string field;
    std::string message;
};

struct ValidationResult {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Checks every invariant of every config field and enumerates all
/// violations rather than stopping at the first one.
ValidationResult validate_config(const RECConfig& config);

/// Returns the config unchanged when valid, otherwise throws DomainError
/// carrying the full issue summary.
const RECConfig& validated(const RECConfig& config);

} // namespace recsizer
