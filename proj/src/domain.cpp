#include "hrs/domain.hpp"

#include <cmath>

namespace hrs {

std::string_view label_name(AccuracyLabel label) {
    switch (label) {
        case AccuracyLabel::Acceptable: return "acceptable";
        case AccuracyLabel::Marginal: return "marginal";
        case AccuracyLabel::Unacceptable: return "unacceptable";
        case AccuracyLabel::WarmingUp: return "warming_up";
    }
    return "unknown";
}

std::string_view label_color(AccuracyLabel label) {
    switch (label) {
        case AccuracyLabel::Acceptable: return "green";
        case AccuracyLabel::Marginal: return "yellow";
        case AccuracyLabel::Unacceptable: return "orange";
        case AccuracyLabel::WarmingUp: return "gray";
    }
    return "unknown";
}

void validate(const FilterThresholds& th) {
    if (!(th.tau_a > 0.0) || !std::isfinite(th.tau_a) || !std::isfinite(th.tau_b)) {
        throw Error("filter thresholds must be finite and positive (tau_a=" +
                    std::to_string(th.tau_a) + ", tau_b=" + std::to_string(th.tau_b) + ")");
    }
    if (!(th.tau_a < th.tau_b)) {
        throw Error("filter thresholds must satisfy tau_a < tau_b (tau_a=" +
                    std::to_string(th.tau_a) + ", tau_b=" + std::to_string(th.tau_b) + ")");
    }
}

SyncedSample make_synced_sample(Timestamp ts, double hr_ppg, double hr_ecg) {
    if (!std::isfinite(hr_ppg) || !std::isfinite(hr_ecg) || hr_ppg <= 0.0 || hr_ecg <= 0.0) {
        throw Error("HR values must be finite and positive (hr_ppg=" + std::to_string(hr_ppg) +
                    ", hr_ecg=" + std::to_string(hr_ecg) + ")");
    }
    return SyncedSample{ts, hr_ppg, hr_ecg, std::abs(hr_ppg - hr_ecg)};
}

}  // namespace hrs
