#pragma once

// Verification suites: each runs one invariant over a deterministic corpus
// and produces a JSON report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace omegapow
{

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportFormat = "omegapow-report/1";

struct SuiteParams
{
    std::optional<std::uint64_t> bound;
    std::uint64_t seed = 1;
    std::optional<std::string> rtree; // "full", "diag" or a file; absent runs both built-ins
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> jmax;
    std::optional<std::uint64_t> samples;
    bool timing = false;
};

struct Counterexample
{
    std::string input;
    std::string expected;
    std::string got;
};

enum class Verdict
{
    pass,
    fail,
    inconclusive
};

std::string_view to_string(Verdict v) noexcept;

struct SuiteReport
{
    std::string suite;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::uint64_t cases_total = 0;
    std::uint64_t cases_failed = 0;
    std::uint64_t cases_inconclusive = 0;
    double inconclusive_threshold = 0.05;
    std::vector<Counterexample> counterexamples; // the first few failures in corpus order
    std::optional<std::uint64_t> runtime_ms;

    Verdict verdict() const;
};

const std::vector<std::string>& suite_names();

/// Throws omegapow::error for an unknown suite or invalid parameters.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

nlohmann::ordered_json report_to_json(const SuiteReport& report);

} // namespace omegapow
