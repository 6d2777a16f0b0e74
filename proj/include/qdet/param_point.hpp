#pragma once

#include "qdet/gaussian_rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdet {

/// One sampled parameter point. Square roots are carried explicitly:
/// q = kappa^2, a = alpha^2, b = beta^2, c = gamma^2, so every half-integer
/// power in an identity becomes an integer power of a root.
struct ParamPoint {
    GQ kappa{2};
    GQ alpha{1};
    GQ beta{1};
    GQ gamma{1};
    long r = 0;
    std::optional<GQ> delta;
    std::optional<GQ> x;
    std::vector<long> k_tuple;
    std::vector<GQ> x_list;
    std::optional<GQ> s_half;
    std::optional<GQ> t_half;
    // Plain rational parameters of the classical (q = 1) determinants.
    std::optional<GQ> alpha_c;
    std::optional<GQ> beta_c;
    std::optional<GQ> gamma_c;
    // Free generic parameters for checks that need more than the named
    // slots (contiguous relations, raw matrix entries, ...).
    std::vector<GQ> extra;

    GQ q() const { return kappa * kappa; }
    GQ a() const { return alpha * alpha; }
    GQ b() const { return beta * beta; }
    GQ c() const { return gamma * gamma; }

    /// Named, canonical string form of every populated slot, in a fixed order.
    std::vector<std::pair<std::string, std::string>> fields(unsigned slot_mask) const;
    std::string format(unsigned slot_mask) const;
};

/// Slot bits, used by the registry to say which fields a check reads.
enum SlotBits : unsigned {
    kSlotKappa = 1U << 0,
    kSlotAlpha = 1U << 1,
    kSlotBeta = 1U << 2,
    kSlotGamma = 1U << 3,
    kSlotR = 1U << 4,
    kSlotDelta = 1U << 5,
    kSlotX = 1U << 6,
    kSlotKTuple = 1U << 7,
    kSlotXList = 1U << 8,
    kSlotSHalf = 1U << 9,
    kSlotTHalf = 1U << 10,
    kSlotClassical = 1U << 11,
    kSlotExtra = 1U << 12,
};

inline constexpr unsigned kSlotsRoots = kSlotKappa | kSlotAlpha | kSlotBeta | kSlotGamma;

/// Human-readable slot names for a mask, e.g. "kappa, alpha, r".
std::string describe_slots(unsigned slot_mask);

}  // namespace qdet
