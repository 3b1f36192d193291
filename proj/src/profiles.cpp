#include "aml/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "aml/errors.hpp"

namespace aml {

namespace {

const char* direction_name(Direction d) { return d == Direction::sent ? "sent" : "recv"; }

const char* agg_name(ProfileAgg a) {
    switch (a) {
        case ProfileAgg::sum: return "sum";
        case ProfileAgg::mean: return "mean";
        case ProfileAgg::min: return "min";
        case ProfileAgg::max: return "max";
        default: return "count";
    }
}

constexpr int kWindows[] = {1, 7, 14, 30, 60};
constexpr ProfileAgg kAggs[] = {ProfileAgg::sum, ProfileAgg::mean, ProfileAgg::min,
                                ProfileAgg::max, ProfileAgg::count};
constexpr Direction kDirections[] = {Direction::sent, Direction::received};

}  // namespace

std::string ProfileSpec::column_name() const {
    std::string base = std::string("prof_") + direction_name(direction) + "_" + agg_name(agg);
    if (!comparison) return base + "_" + std::to_string(window_days) + "d";
    return base + "_" + std::to_string(window_days) + "d_vs_" +
           std::to_string(comparison->other_window_days) + "d_" +
           (comparison->op == CompareOp::ratio ? "ratio" : "diff");
}

std::vector<ProfileSpec> default_profile_specs() {
    std::vector<ProfileSpec> specs;
    for (Direction dir : kDirections)
        for (int w : kWindows)
            for (ProfileAgg agg : kAggs) specs.push_back({dir, w, agg, std::nullopt});
    for (Direction dir : kDirections)
        for (ProfileAgg agg : kAggs)
            for (size_t i = 0; i < std::size(kWindows); ++i)
                for (size_t j = i + 1; j < std::size(kWindows); ++j)
                    for (CompareOp op : {CompareOp::ratio, CompareOp::difference})
                        specs.push_back({dir, kWindows[i], agg,
                                         ProfileSpec::Comparison{kWindows[j], op}});
    return specs;
}

double cross_window_ratio(double short_value, double long_value) {
    if (long_value != 0.0) return short_value / long_value;
    if (short_value == 0.0) return 1.0;
    return short_value > 0.0 ? 1e6 : -1e6;
}

FeatureFrame compute_profiles(const std::vector<AccountDayRecord>& records,
                              const std::vector<ProfileSpec>& specs) {
    FeatureFrame frame;
    frame.account_ids.reserve(records.size());
    frame.days.reserve(records.size());
    frame.labels.reserve(records.size());
    for (const auto& rec : records) {
        frame.account_ids.push_back(rec.account_id);
        frame.days.push_back(rec.day);
        frame.labels.push_back(rec.suspicious ? 1 : 0);
    }

    std::vector<const ProfileSpec*> base_specs;
    for (const auto& s : specs)
        if (!s.comparison) base_specs.push_back(&s);
    if (base_specs.empty()) return frame;

    // Rows grouped per account, day-ascending (records arrive sorted by
    // (day, account)).
    std::map<std::string, std::vector<size_t>> by_account;
    for (size_t r = 0; r < records.size(); ++r)
        by_account[records[r].account_id].push_back(r);

    std::vector<std::vector<double>> values(base_specs.size(),
                                            std::vector<double>(records.size(), 0.0));

    struct WindowStats {
        double sum = 0.0, mn = 0.0, mx = 0.0;
        long txn_count = 0;
        long active_days = 0;
    };

    for (const auto& [account, rows] : by_account) {
        // One window start pointer per distinct window length.
        std::map<int, size_t> window_start;
        for (const auto* spec : base_specs) window_start.emplace(spec->window_days, 0);

        for (size_t i = 0; i < rows.size(); ++i) {
            const int eval_day = records[rows[i]].day;
            for (auto& [window, start] : window_start) {
                while (records[rows[start]].day <= eval_day - window) ++start;
                WindowStats stats[2];  // per direction
                for (size_t k = start; k <= i; ++k) {
                    const AccountDayRecord& rec = records[rows[k]];
                    const double totals[2] = {rec.total_sent, rec.total_received};
                    const int counts[2] = {rec.sent_count, rec.received_count};
                    for (int d = 0; d < 2; ++d) {
                        if (counts[d] == 0) continue;
                        WindowStats& st = stats[d];
                        if (st.active_days == 0) {
                            st.mn = st.mx = totals[d];
                        } else {
                            st.mn = std::min(st.mn, totals[d]);
                            st.mx = std::max(st.mx, totals[d]);
                        }
                        st.sum += totals[d];
                        st.txn_count += counts[d];
                        st.active_days += 1;
                    }
                }
                for (size_t s = 0; s < base_specs.size(); ++s) {
                    const ProfileSpec& spec = *base_specs[s];
                    if (spec.window_days != window) continue;
                    const WindowStats& st = stats[spec.direction == Direction::sent ? 0 : 1];
                    double v = 0.0;
                    if (st.active_days > 0) {
                        switch (spec.agg) {
                            case ProfileAgg::sum: v = st.sum; break;
                            case ProfileAgg::mean: v = st.sum / static_cast<double>(st.active_days); break;
                            case ProfileAgg::min: v = st.mn; break;
                            case ProfileAgg::max: v = st.mx; break;
                            case ProfileAgg::count: v = static_cast<double>(st.txn_count); break;
                        }
                    }
                    values[s][rows[i]] = v;
                }
            }
        }
    }

    for (size_t s = 0; s < base_specs.size(); ++s)
        frame.add_column(base_specs[s]->column_name(), FeatureTag::profile, std::move(values[s]));
    return frame;
}

void compute_cross_window(FeatureFrame& frame, const std::vector<ProfileSpec>& specs) {
    for (const auto& spec : specs) {
        if (!spec.comparison) continue;
        ProfileSpec short_spec{spec.direction, spec.window_days, spec.agg, std::nullopt};
        ProfileSpec long_spec{spec.direction, spec.comparison->other_window_days, spec.agg,
                              std::nullopt};
        const int si = frame.column_index(short_spec.column_name());
        const int li = frame.column_index(long_spec.column_name());
        if (si < 0 || li < 0)
            throw DataError("cross-window spec '" + spec.column_name() +
                            "' needs base columns for both windows");
        const auto& shorter = frame.cols[si];
        const auto& longer = frame.cols[li];
        std::vector<double> out(frame.n_rows());
        if (spec.comparison->op == CompareOp::ratio) {
            for (size_t r = 0; r < out.size(); ++r)
                out[r] = cross_window_ratio(shorter[r], longer[r]);
        } else {
            for (size_t r = 0; r < out.size(); ++r) out[r] = shorter[r] - longer[r];
        }
        frame.add_column(spec.column_name(), FeatureTag::profile, std::move(out));
    }
}

}  // namespace aml
