#include "aml/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "aml/csv.hpp"
#include "aml/errors.hpp"
#include "aml/rng.hpp"

namespace aml {

namespace {

// Day 0 of every synthetic dataset.
const int64_t kBaseEpochDay = days_from_civil(2024, 1, 1);

// Probit values of the 90th and 99th percentiles: ring amounts live in the
// upper-but-not-extreme tail of the background lognormal, emulating
// structuring just below round review thresholds.
constexpr double kRingZLow = 1.2815515655446004;
constexpr double kRingZHigh = 2.3263478740408408;

std::string account_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "A%06d", index);
    return buf;
}

RingPattern resolve_pattern(RingPattern configured, uint64_t seed, int ring_index) {
    if (configured != RingPattern::mixed) return configured;
    Rng rng(seed, {hash_str("ring_pattern"), static_cast<uint64_t>(ring_index)});
    switch (rng.next_below(3)) {
        case 0: return RingPattern::chain;
        case 1: return RingPattern::fan_in;
        default: return RingPattern::fan_out;
    }
}

}  // namespace

SynthConfig SynthConfig::from_config(KeyValueConfig& cfg, const std::string& prefix) {
    SynthConfig c;
    c.n_accounts = static_cast<int>(cfg.get_int(prefix + "n_accounts", c.n_accounts));
    c.external_fraction = cfg.get_double(prefix + "external_fraction", c.external_fraction);
    c.n_days = static_cast<int>(cfg.get_int(prefix + "n_days", c.n_days));
    c.background_rate = cfg.get_double(prefix + "background_rate", c.background_rate);
    c.amount_log_mean = cfg.get_double(prefix + "amount_log_mean", c.amount_log_mean);
    c.amount_log_sd = cfg.get_double(prefix + "amount_log_sd", c.amount_log_sd);
    c.n_rings = static_cast<int>(cfg.get_int(prefix + "n_rings", c.n_rings));
    c.ring_size = static_cast<int>(cfg.get_int(prefix + "ring_size", c.ring_size));
    c.ring_activity_days =
        static_cast<int>(cfg.get_int(prefix + "ring_activity_days", c.ring_activity_days));
    c.target_alert_fp_rate =
        cfg.get_double(prefix + "target_alert_fp_rate", c.target_alert_fp_rate);
    const std::string pattern = cfg.get_string(prefix + "ring_pattern", "mixed");
    if (pattern == "chain")
        c.ring_pattern = RingPattern::chain;
    else if (pattern == "fan_in")
        c.ring_pattern = RingPattern::fan_in;
    else if (pattern == "fan_out")
        c.ring_pattern = RingPattern::fan_out;
    else if (pattern == "mixed")
        c.ring_pattern = RingPattern::mixed;
    else
        throw UsageError("invalid " + prefix + "ring_pattern: '" + pattern + "'");
    return c;
}

void SynthConfig::validate() const {
    if (n_accounts < 2) throw UsageError("synth: n_accounts must be >= 2");
    if (external_fraction < 0.0 || external_fraction > 1.0)
        throw UsageError("synth: external_fraction must be in [0,1]");
    if (n_days < 1) throw UsageError("synth: n_days must be >= 1");
    if (background_rate < 0.0) throw UsageError("synth: background_rate must be >= 0");
    if (n_rings < 0) throw UsageError("synth: n_rings must be >= 0");
    if (n_rings > 0) {
        if (ring_size < 2) throw UsageError("synth: ring_size must be >= 2");
        if (ring_size > n_accounts)
            throw UsageError("synth: ring_size exceeds n_accounts");
        if (ring_activity_days < 1 || ring_activity_days > n_days)
            throw UsageError("synth: ring_activity_days must be in [1, n_days]");
    }
    if (target_alert_fp_rate < 0.0 || target_alert_fp_rate > 1.0)
        throw UsageError("synth: target_alert_fp_rate must be in [0,1]");
}

std::vector<Transaction> generate_dataset(const SynthConfig& config) {
    config.validate();
    const uint64_t seed = config.seed;
    const int n = config.n_accounts;

    std::vector<AccountType> types(n);
    std::vector<int> internals;
    {
        Rng rng(seed, {hash_str("types")});
        for (int i = 0; i < n; ++i) {
            types[i] = rng.next_double() < config.external_fraction ? AccountType::external
                                                                    : AccountType::internal;
            if (types[i] == AccountType::internal) internals.push_back(i);
        }
    }
    if (internals.empty()) throw DataError("synth: no internal accounts generated");

    // Ring membership: disjoint groups drawn from a seeded partial shuffle
    // of the internal accounts.
    const int members_needed = config.n_rings * config.ring_size;
    if (members_needed > static_cast<int>(internals.size()))
        throw DataError("synth: rings need " + std::to_string(members_needed) +
                        " internal accounts, only " + std::to_string(internals.size()) +
                        " available");
    {
        Rng rng(seed, {hash_str("rings")});
        for (int i = 0; i < members_needed; ++i) {
            const size_t j = i + rng.next_below(internals.size() - i);
            std::swap(internals[i], internals[j]);
        }
    }

    struct Pending {
        EpochSeconds ts;
        uint64_t seq;
        int sender;
        int receiver;
        double amount;
        bool suspicious;
    };
    std::vector<Pending> pending;
    uint64_t seq = 0;

    // Background traffic, one stream per (day, account) so per-day
    // generation could run in parallel without changing output.
    for (int day = 0; day < config.n_days; ++day) {
        const EpochSeconds day_start = (kBaseEpochDay + day) * kSecondsPerDay;
        for (int a = 0; a < n; ++a) {
            Rng rng(seed, {hash_str("bg"), static_cast<uint64_t>(day), static_cast<uint64_t>(a)});
            const uint32_t count =
                config.background_rate > 0.0 ? rng.poisson(config.background_rate) : 0;
            for (uint32_t k = 0; k < count; ++k) {
                int receiver;
                if (types[a] == AccountType::external) {
                    receiver = internals[rng.next_below(internals.size())];
                } else {
                    receiver = static_cast<int>(rng.next_below(n - 1));
                    if (receiver >= a) ++receiver;
                }
                const double amount = rng.lognormal(config.amount_log_mean, config.amount_log_sd);
                const EpochSeconds ts = day_start + static_cast<EpochSeconds>(rng.next_below(kSecondsPerDay));
                pending.push_back({ts, seq++, a, receiver, amount, false});
            }
        }

        // Ring activity: the full typology fires on each active day.
        for (int r = 0; r < config.n_rings; ++r) {
            Rng start_rng(seed, {hash_str("ring_start"), static_cast<uint64_t>(r)});
            const int span = config.n_days - config.ring_activity_days;
            const int start = span > 0 ? static_cast<int>(start_rng.next_below(span + 1)) : 0;
            if (day < start || day >= start + config.ring_activity_days) continue;

            const RingPattern pattern = resolve_pattern(config.ring_pattern, seed, r);
            const int* members = internals.data() + r * config.ring_size;
            Rng rng(seed, {hash_str("ring_day"), static_cast<uint64_t>(r), static_cast<uint64_t>(day)});
            for (int e = 0; e + 1 < config.ring_size; ++e) {
                int sender, receiver;
                switch (pattern) {
                    case RingPattern::chain:
                        sender = members[e];
                        receiver = members[e + 1];
                        break;
                    case RingPattern::fan_in:
                        sender = members[e + 1];
                        receiver = members[0];
                        break;
                    default:  // fan_out
                        sender = members[0];
                        receiver = members[e + 1];
                        break;
                }
                const double z = rng.uniform(kRingZLow, kRingZHigh);
                const double amount = std::exp(config.amount_log_mean + config.amount_log_sd * z);
                const EpochSeconds ts = day_start + static_cast<EpochSeconds>(rng.next_below(kSecondsPerDay));
                pending.push_back({ts, seq++, sender, receiver, amount, true});
            }
        }
    }

    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
        if (a.ts != b.ts) return a.ts < b.ts;
        return a.seq < b.seq;
    });

    std::vector<Transaction> txns;
    txns.reserve(pending.size());
    char id[16];
    for (size_t i = 0; i < pending.size(); ++i) {
        const Pending& p = pending[i];
        std::snprintf(id, sizeof(id), "T%08zu", i);
        Transaction t;
        t.txn_id = id;
        t.timestamp = p.ts;
        t.sender_id = account_name(p.sender);
        t.receiver_id = account_name(p.receiver);
        // Round to cents; keeps CSV round-trips exact and amounts money-like.
        t.amount = std::max(0.01, std::round(p.amount * 100.0) / 100.0);
        t.sender_type = types[p.sender];
        t.receiver_type = types[p.receiver];
        t.suspicious = p.suspicious;
        txns.push_back(std::move(t));
    }
    return txns;
}

std::vector<Transaction> apply_rules(const std::vector<Transaction>& txns, const RuleSet& rules) {
    if (!rules.any_enabled()) throw UsageError("apply_rules: at least one rule must be enabled");

    // Per (sender, day): send count and in-band send count.
    std::map<std::pair<std::string, int64_t>, std::pair<int, int>> sender_day;
    if (rules.velocity_threshold || rules.structuring_band) {
        for (const auto& t : txns) {
            auto& entry = sender_day[{t.sender_id, epoch_day(t.timestamp)}];
            entry.first += 1;
            if (rules.structuring_band && t.amount >= rules.structuring_band->first &&
                t.amount <= rules.structuring_band->second)
                entry.second += 1;
        }
    }

    std::vector<Transaction> alerted;
    for (const auto& t : txns) {
        bool hit = t.suspicious;  // suspicious events are always alerted
        if (!hit && rules.amount_threshold) hit = t.amount >= *rules.amount_threshold;
        if (!hit && (rules.velocity_threshold || rules.structuring_band)) {
            const auto& entry = sender_day[{t.sender_id, epoch_day(t.timestamp)}];
            if (rules.velocity_threshold && entry.first >= *rules.velocity_threshold) hit = true;
            if (!hit && rules.structuring_band && entry.second >= 2 &&
                t.amount >= rules.structuring_band->first &&
                t.amount <= rules.structuring_band->second)
                hit = true;
        }
        if (hit) alerted.push_back(t);
    }
    return alerted;
}

double alerted_fp_share(const std::vector<Transaction>& alerted) {
    if (alerted.empty()) return 0.0;
    size_t legit = 0;
    for (const auto& t : alerted)
        if (!t.suspicious) ++legit;
    return static_cast<double>(legit) / static_cast<double>(alerted.size());
}

RuleSet tune_rules(const std::vector<Transaction>& txns, const SynthConfig& config) {
    RuleSet rules;
    rules.velocity_threshold = 8;
    const double band_lo = std::exp(config.amount_log_mean + config.amount_log_sd * kRingZLow);
    const double band_hi = std::exp(config.amount_log_mean + config.amount_log_sd * kRingZHigh);
    rules.structuring_band = {band_lo, band_hi};

    std::vector<double> legit_amounts;
    legit_amounts.reserve(txns.size());
    for (const auto& t : txns)
        if (!t.suspicious) legit_amounts.push_back(t.amount);
    std::sort(legit_amounts.begin(), legit_amounts.end());
    if (legit_amounts.empty()) throw DataError("tune_rules: no legitimate transactions");

    const double target = config.target_alert_fp_rate;
    auto share_at = [&](double threshold) {
        RuleSet probe = rules;
        probe.amount_threshold = threshold;
        return alerted_fp_share(apply_rules(txns, probe));
    };

    // Share is non-increasing as the threshold index rises (fewer legit
    // alerts); bisect over candidate thresholds = distinct legit amounts.
    size_t lo = 0, hi = legit_amounts.size() - 1;
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        if (share_at(legit_amounts[mid]) > target)
            lo = mid + 1;
        else
            hi = mid;
    }
    double best_threshold = legit_amounts[lo];
    double best_err = std::abs(share_at(best_threshold) - target);
    if (lo > 0) {
        const double err = std::abs(share_at(legit_amounts[lo - 1]) - target);
        if (err < best_err) {
            best_threshold = legit_amounts[lo - 1];
            best_err = err;
        }
    }
    rules.amount_threshold = best_threshold;

    const double achieved = share_at(best_threshold);
    if (std::abs(achieved - target) > 0.02)
        throw DataError("tune_rules: cannot reach target alert FP rate " + format_double(target) +
                        ", closest achievable is " + format_double(achieved));
    return rules;
}

}  // namespace aml
