#pragma once

#include "qdet/identitylab.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qdet {

struct SampledPoint {
    ParamPoint point;
    // The dry-run evaluation that admitted the point.
    std::vector<Equality> equalities;
};

std::uint64_t point_stream_seed(std::string_view check_id, long n, std::uint64_t seed, long trial);

/// Rejection sampling with the admitting evaluation kept, so a suite run
/// evaluates each point once.
SampledPoint sample_and_evaluate(const CheckInfo& info, long n, std::uint64_t seed, long trial);

}  // namespace qdet
