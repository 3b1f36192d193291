#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aml/config.hpp"
#include "aml/types.hpp"

namespace aml {

enum class RingPattern { chain, fan_in, fan_out, mixed };

// Generation is a pure function of this config: equal configs give
// bit-identical transaction streams on every platform.
struct SynthConfig {
    uint64_t seed = 42;
    int n_accounts = 10000;
    double external_fraction = 0.3;
    int n_days = 180;
    double background_rate = 0.055;  // mean legitimate txns / account / day
    double amount_log_mean = 4.0;
    double amount_log_sd = 1.2;
    int n_rings = 20;
    int ring_size = 5;
    RingPattern ring_pattern = RingPattern::mixed;
    int ring_activity_days = 10;
    double target_alert_fp_rate = 0.97;

    static SynthConfig from_config(KeyValueConfig& cfg, const std::string& prefix = "synth.");
    void validate() const;  // throws UsageError
};

struct RuleSet {
    std::optional<double> amount_threshold;           // alert if amount >= threshold
    std::optional<int> velocity_threshold;            // alert a sender's day with >= N sends
    std::optional<std::pair<double, double>> structuring_band;  // >= 2 same-day sends in [lo, hi]

    bool any_enabled() const {
        return amount_threshold || velocity_threshold || structuring_band;
    }
};

// Deterministic synthetic transaction stream: lognormal background traffic
// between uniformly random pairs (at least one endpoint internal) plus
// planted laundering rings firing their full typology on each active day.
// Ring transactions are the suspicious ones.
std::vector<Transaction> generate_dataset(const SynthConfig& config);

// Transactions matching >= 1 rule, plus every suspicious transaction
// regardless of rules (the triage model only ever sees alerted events).
std::vector<Transaction> apply_rules(const std::vector<Transaction>& txns, const RuleSet& rules);

// Picks amount_threshold (velocity and structuring rules fixed) so the
// alerted subset's false-positive share lands within +-2 p.p. of
// config.target_alert_fp_rate. Throws DataError reporting the achieved rate
// when the target is unattainable.
RuleSet tune_rules(const std::vector<Transaction>& txns, const SynthConfig& config);

// Share of alerted transactions that are legitimate.
double alerted_fp_share(const std::vector<Transaction>& alerted);

}  // namespace aml
