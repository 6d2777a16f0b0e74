#pragma once

#include "qdet/gaussian_rational.hpp"
#include "qdet/param_point.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdet {

/// One side-by-side comparison produced by a check. A check passes when
/// every equality it produces holds exactly.
struct Equality {
    std::string label;
    GQ lhs;
    GQ rhs;
};

using Evaluator = std::vector<Equality> (*)(long n, const ParamPoint& p);

enum class CheckMode { identity, evidence };

/// Length of a list slot as a function of n: sq*n^2 + lin*n + con.
/// `used == false` means the slot is not drawn.
struct SizeRule {
    bool used = false;
    long sq = 0;
    long lin = 0;
    long con = 0;
    std::size_t at(long n) const { return static_cast<std::size_t>(sq * n * n + lin * n + con); }
};

struct CheckInfo {
    std::string_view id;
    std::string_view title;
    // What is compared, in words and formulas. Shown by `explain`.
    std::string_view recipe;
    // What the size parameter n means for this check.
    std::string_view n_meaning;
    unsigned slots = 0;
    CheckMode mode = CheckMode::identity;
    long n_default_min = 1;
    long n_default_max = 6;
    // Smallest n for which the check is defined.
    long n_floor = 1;
    SizeRule k_tuple;
    SizeRule x_list;
    SizeRule extra;
    Evaluator evaluate = nullptr;
};

const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(std::string_view id);

enum class CheckStatus { pass, fail, evidence_pass, evidence_fail, skipped_degenerate };

std::string_view status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    long n = 0;
    long trial = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> point;
    CheckStatus status = CheckStatus::skipped_degenerate;
    // Populated on every non-pass outcome.
    std::string lhs;
    std::string rhs;
    // Failing equality label, pole location, or rejection reason.
    std::string detail;
};

/// No admissible point found after this many consecutive rejections.
inline constexpr int kMaxRejections = 1000;

class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic in (check, n, seed, trial). Draws every slot the check
/// reads and rejects until a dry-run evaluation meets no pole. Throws
/// DegenerateError after kMaxRejections rejections and std::invalid_argument
/// for an unknown id.
ParamPoint sample_point(std::string_view check_id, long n, std::uint64_t seed, long trial);

/// Evaluates the check at a given point. A pole during evaluation gives
/// skipped_degenerate with its location in `detail`.
CheckResult run_check(std::string_view check_id, long n, const ParamPoint& point);

struct NRange {
    long lo = 0;
    long hi = 0;
};

struct SuiteOptions {
    std::vector<std::string> check_ids;
    // Unset means each check's default range.
    std::optional<NRange> n_range;
    long trials = 5;
    std::uint64_t seed = 42;
    bool parallel = true;
};

struct Summary {
    long pass = 0;
    long fail = 0;
    long evidence_pass = 0;
    long evidence_fail = 0;
    long skipped = 0;
    friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
    std::uint64_t seed = 0;
    std::optional<std::string> started;
    Summary summary;
    std::vector<CheckResult> results;
};

/// Runs the cross product (check, n, trial), ordered by registry position of
/// the check as listed, then n, then trial. Throws std::invalid_argument for
/// an empty or unknown check list, an empty n range or trials < 1.
Report run_suite(const SuiteOptions& options);

/// True iff no identity check failed. Evidence outcomes are ignored.
bool suite_passed(const Report& report);

inline constexpr std::string_view kReportVersion = "1";

std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace qdet
