#include "qdet/param_point.hpp"

#include <string>

namespace qdet {

namespace {

template <typename T>
std::string list_string(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += ',';
        if constexpr (std::is_same_v<T, GQ>) out += xs[i].to_string();
        else out += std::to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> ParamPoint::fields(unsigned mask) const {
    std::vector<std::pair<std::string, std::string>> out;
    auto opt = [&](const char* name, const std::optional<GQ>& v) {
        if (v) out.emplace_back(name, v->to_string());
    };
    if (mask & kSlotKappa) out.emplace_back("kappa", kappa.to_string());
    if (mask & kSlotAlpha) out.emplace_back("alpha", alpha.to_string());
    if (mask & kSlotBeta) out.emplace_back("beta", beta.to_string());
    if (mask & kSlotGamma) out.emplace_back("gamma", gamma.to_string());
    if (mask & kSlotR) out.emplace_back("r", std::to_string(r));
    if (mask & kSlotDelta) opt("delta", delta);
    if (mask & kSlotX) opt("x", x);
    if ((mask & kSlotKTuple) != 0U) out.emplace_back("kTuple", list_string(k_tuple));
    if ((mask & kSlotXList) != 0U) out.emplace_back("xList", list_string(x_list));
    if (mask & kSlotSHalf) opt("sHalf", s_half);
    if (mask & kSlotTHalf) opt("tHalf", t_half);
    if (mask & kSlotClassical) {
        opt("alphaC", alpha_c);
        opt("betaC", beta_c);
        opt("gammaC", gamma_c);
    }
    if ((mask & kSlotExtra) != 0U) out.emplace_back("extra", list_string(extra));
    return out;
}

std::string ParamPoint::format(unsigned mask) const {
    std::string out;
    for (const auto& [name, value] : fields(mask)) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += value;
    }
    return out;
}

std::string describe_slots(unsigned mask) {
    static constexpr std::pair<unsigned, const char*> kNames[] = {
        {kSlotKappa, "kappa"},   {kSlotAlpha, "alpha"},   {kSlotBeta, "beta"},     {kSlotGamma, "gamma"},
        {kSlotR, "r"},           {kSlotDelta, "delta"},   {kSlotX, "x"},           {kSlotKTuple, "kTuple"},
        {kSlotXList, "xList"},   {kSlotSHalf, "sHalf"},   {kSlotTHalf, "tHalf"},   {kSlotClassical, "alphaC, betaC, gammaC"},
        {kSlotExtra, "extra"},
    };
    std::string out;
    for (const auto& [bit, name] : kNames) {
        if ((mask & bit) == 0U) continue;
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

}  // namespace qdet
