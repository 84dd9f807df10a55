#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrs {

/// All pipeline failures surface as hrs::Error with a human-readable message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Integer UTC seconds. Sampling is fixed at 1 Hz; sub-second alignment is out of scope.
using Timestamp = std::int64_t;

struct HrSample {
    Timestamp timestamp = 0;
    double hr_bpm = 0.0;
};

/// One sensor's recording for one subject. Timestamps strictly increase;
/// spacing > 1 s is a gap and is meaningful (gaps are never interpolated).
struct HrSeries {
    std::string sensor_id;
    std::string subject_id;
    std::vector<HrSample> samples;
};

struct SyncedSample {
    Timestamp timestamp = 0;
    double hr_ppg = 0.0;
    double hr_ecg = 0.0;
    double diff_true = 0.0;  // |hr_ppg - hr_ecg|
};

/// Time-aligned (PPG, ECG) pairs for one subject. Only timestamps present in
/// both source series after lag correction appear.
struct SyncedSeries {
    std::string subject_id;
    int applied_lag_s = 0;
    std::vector<SyncedSample> samples;
};

/// The last k PPG readings (oldest first) of consecutive 1 Hz samples ending
/// at end_timestamp, labeled with the true error at the window end.
struct Window {
    Timestamp end_timestamp = 0;
    std::vector<double> ppg_values;
    double label_diff_true = 0.0;
    std::string subject_id;
};

/// WarmingUp is the streaming start-up state before k samples accumulate;
/// the other three are the user-facing traffic-light tiers.
enum class AccuracyLabel { Acceptable, Marginal, Unacceptable, WarmingUp };

std::string_view label_name(AccuracyLabel label);   // "acceptable", "marginal", ...
std::string_view label_color(AccuracyLabel label);  // "green", "yellow", "orange", "gray"

struct FilterThresholds {
    double tau_a = 20.0;
    double tau_b = 34.0;
};

/// Throws unless 0 < tau_a < tau_b.
void validate(const FilterThresholds& th);

/// diff_true = |hr_ppg - hr_ecg|. Rejects non-finite or non-positive HR values.
SyncedSample make_synced_sample(Timestamp ts, double hr_ppg, double hr_ecg);

}  // namespace hrs
