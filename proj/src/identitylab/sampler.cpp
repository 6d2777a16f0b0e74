#include "sampler.hpp"

#include "qdet/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdet {

namespace {

// splitmix64 step; also used to mix the seed components.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Own generator and bounded draws so the stream does not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31U);
    }

    // Uniform in [lo, hi] by rejection.
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return lo + static_cast<long>(v % span);
    }

private:
    std::uint64_t state_;
};

GQ draw_rational(Rng& rng) {
    long num = rng.uniform(-9, 8);
    if (num >= 0) ++num;  // skip zero
    const long den = rng.uniform(1, 9);
    return GQ::fraction(num, den);
}

std::vector<long> draw_rows(Rng& rng, std::size_t count) {
    constexpr long kMaxRow = 12;
    if (count > static_cast<std::size_t>(kMaxRow)) throw std::invalid_argument("row tuple longer than 12");
    std::array<long, kMaxRow> pool{};
    std::iota(pool.begin(), pool.end(), 1L);
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(static_cast<long>(i), kMaxRow - 1));
        std::swap(pool[i], pool[j]);
    }
    return {pool.begin(), pool.begin() + static_cast<long>(count)};
}

bool all_distinct(const std::vector<GQ>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) return false;
    return true;
}

ParamPoint draw_point(const CheckInfo& info, long n, Rng& rng) {
    ParamPoint p;
    const unsigned s = info.slots;
    if (s & kSlotKappa) p.kappa = draw_rational(rng);
    if (s & kSlotAlpha) p.alpha = draw_rational(rng);
    if (s & kSlotBeta) p.beta = draw_rational(rng);
    if (s & kSlotGamma) p.gamma = draw_rational(rng);
    if (s & kSlotR) p.r = rng.uniform(-2, 3);
    if (s & kSlotDelta) p.delta = draw_rational(rng);
    if (s & kSlotX) p.x = draw_rational(rng);
    if (s & kSlotSHalf) p.s_half = draw_rational(rng);
    if (s & kSlotTHalf) p.t_half = draw_rational(rng);
    if (s & kSlotClassical) {
        p.alpha_c = draw_rational(rng);
        p.beta_c = draw_rational(rng);
        p.gamma_c = draw_rational(rng);
    }
    if (info.k_tuple.used) p.k_tuple = draw_rows(rng, info.k_tuple.at(n));
    if (info.x_list.used)
        for (std::size_t i = 0; i < info.x_list.at(n); ++i) p.x_list.push_back(draw_rational(rng));
    if (info.extra.used)
        for (std::size_t i = 0; i < info.extra.at(n); ++i) p.extra.push_back(draw_rational(rng));
    return p;
}

// Structural requirements that do not need an evaluation.
const char* structural_rejection(const ParamPoint& p, unsigned slots) {
    if ((slots & kSlotKappa) != 0U && (p.kappa.is_one() || (-p.kappa).is_one())) return "kappa in {1, -1}";
    if (!all_distinct(p.x_list)) return "repeated xList entry";
    return nullptr;
}

}  // namespace

std::uint64_t point_stream_seed(std::string_view check_id, long n, std::uint64_t seed, long trial) {
    std::uint64_t h = mix(fnv1a(check_id));
    h = mix(h ^ seed);
    h = mix(h ^ static_cast<std::uint64_t>(n));
    h = mix(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

SampledPoint sample_and_evaluate(const CheckInfo& info, long n, std::uint64_t seed, long trial) {
    Rng rng(point_stream_seed(info.id, n, seed, trial));
    std::string last_reason;
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        ParamPoint p = draw_point(info, n, rng);
        if (const char* why = structural_rejection(p, info.slots)) {
            last_reason = why;
            continue;
        }
        try {
            auto equalities = info.evaluate(n, p);
            return {std::move(p), std::move(equalities)};
        } catch (const Error& e) {
            last_reason = e.what();
        }
    }
    throw DegenerateError("no admissible point after " + std::to_string(kMaxRejections) +
                          " rejections; last: " + last_reason);
}

ParamPoint sample_point(std::string_view check_id, long n, std::uint64_t seed, long trial) {
    const CheckInfo* info = find_check(check_id);
    if (info == nullptr) throw std::invalid_argument("unknown check id: " + std::string(check_id));
    return sample_and_evaluate(*info, n, seed, trial).point;
}

}  // namespace qdet
