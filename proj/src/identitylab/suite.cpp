#include "qdet/errors.hpp"
#include "qdet/identitylab.hpp"
#include "sampler.hpp"

#include <exception>
#include <stdexcept>
#include <string>

namespace qdet {

namespace {

CheckResult judge(const CheckInfo& info, long n, const ParamPoint& point, const std::vector<Equality>& equalities) {
    CheckResult res;
    res.id = std::string(info.id);
    res.n = n;
    res.point = point.fields(info.slots);
    const bool evidence = info.mode == CheckMode::evidence;
    res.status = evidence ? CheckStatus::evidence_pass : CheckStatus::pass;
    for (const auto& eq : equalities) {
        if (eq.lhs == eq.rhs) continue;
        res.status = evidence ? CheckStatus::evidence_fail : CheckStatus::fail;
        res.lhs = eq.lhs.to_string();
        res.rhs = eq.rhs.to_string();
        res.detail = eq.label;
        break;
    }
    if (res.status == CheckStatus::evidence_pass && !equalities.empty()) {
        // Evidence results always carry their witness values.
        res.lhs = equalities.front().lhs.to_string();
        res.rhs = equalities.front().rhs.to_string();
        res.detail = equalities.front().label;
    }
    return res;
}

CheckResult skipped(const CheckInfo& info, long n, std::string detail) {
    CheckResult res;
    res.id = std::string(info.id);
    res.n = n;
    res.status = CheckStatus::skipped_degenerate;
    res.detail = std::move(detail);
    return res;
}

CheckResult run_one(const CheckInfo& info, long n, std::uint64_t seed, long trial) {
    CheckResult res;
    if (n < info.n_floor) {
        res = skipped(info, n, "n below the check's domain (n >= " + std::to_string(info.n_floor) + ")");
    } else {
        try {
            SampledPoint sp = sample_and_evaluate(info, n, seed, trial);
            res = judge(info, n, sp.point, sp.equalities);
        } catch (const DegenerateError& e) {
            res = skipped(info, n, e.what());
        }
    }
    res.trial = trial;
    res.seed = seed;
    return res;
}

}  // namespace

CheckResult run_check(std::string_view check_id, long n, const ParamPoint& point) {
    const CheckInfo* info = find_check(check_id);
    if (info == nullptr) throw std::invalid_argument("unknown check id: " + std::string(check_id));
    if (n < info->n_floor) return skipped(*info, n, "n below the check's domain");
    try {
        return judge(*info, n, point, info->evaluate(n, point));
    } catch (const Error& e) {
        CheckResult res = skipped(*info, n, e.what());
        res.point = point.fields(info->slots);
        return res;
    }
}

Report run_suite(const SuiteOptions& options) {
    if (options.check_ids.empty()) throw std::invalid_argument("no checks selected");
    if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (options.n_range && options.n_range->lo > options.n_range->hi) throw std::invalid_argument("empty n range");

    std::vector<const CheckInfo*> checks;
    for (const auto& id : options.check_ids) {
        const CheckInfo* info = find_check(id);
        if (info == nullptr) throw std::invalid_argument("unknown check id: " + id);
        checks.push_back(info);
    }

    struct Item {
        const CheckInfo* info;
        long n;
        long trial;
    };
    std::vector<Item> items;
    for (const CheckInfo* info : checks) {
        const long lo = options.n_range ? options.n_range->lo : info->n_default_min;
        const long hi = options.n_range ? options.n_range->hi : info->n_default_max;
        for (long n = lo; n <= hi; ++n)
            for (long t = 0; t < options.trials; ++t) items.push_back({info, n, t});
    }

    Report report;
    report.seed = options.seed;
    report.results.resize(items.size());
    const auto count = static_cast<long>(items.size());

    if (options.parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            try {
                const Item& it = items[i];
                report.results[i] = run_one(*it.info, it.n, options.seed, it.trial);
            } catch (...) {
#pragma omp critical(qdet_suite_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (long i = 0; i < count; ++i) {
            const Item& it = items[i];
            report.results[i] = run_one(*it.info, it.n, options.seed, it.trial);
        }
    }

    for (const auto& r : report.results) {
        switch (r.status) {
            case CheckStatus::pass: ++report.summary.pass; break;
            case CheckStatus::fail: ++report.summary.fail; break;
            case CheckStatus::evidence_pass: ++report.summary.evidence_pass; break;
            case CheckStatus::evidence_fail: ++report.summary.evidence_fail; break;
            case CheckStatus::skipped_degenerate: ++report.summary.skipped; break;
        }
    }
    return report;
}

bool suite_passed(const Report& report) { return report.summary.fail == 0; }

}  // namespace qdet
