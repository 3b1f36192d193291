#include "aml/ingest.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "aml/csv.hpp"
#include "aml/errors.hpp"

namespace aml {

const std::vector<std::string> kTransactionsCsvHeader = {
    "txn_id", "timestamp", "sender_id", "receiver_id",
    "amount", "sender_type", "receiver_type", "label"};

namespace {

AccountType parse_account_type(const std::string& s, const std::string& where) {
    if (s == "internal") return AccountType::internal;
    if (s == "external") return AccountType::external;
    throw DataError(where + ": account type must be 'internal' or 'external', got '" + s + "'");
}

const char* type_name(AccountType t) {
    return t == AccountType::internal ? "internal" : "external";
}

void note_account_type(std::unordered_map<std::string, AccountType>& types,
                       const std::string& id, AccountType t, const std::string& where) {
    auto [it, inserted] = types.emplace(id, t);
    if (!inserted && it->second != t)
        throw DataError(where + ": account '" + id + "' changes type from " +
                        type_name(it->second) + " to " + type_name(t));
}

}  // namespace

std::vector<Transaction> parse_transactions(const std::string& path) {
    CsvReader reader(path);
    reader.expect_header(kTransactionsCsvHeader);

    std::vector<Transaction> txns;
    std::unordered_set<std::string> seen_ids;
    std::unordered_map<std::string, AccountType> types;
    std::vector<std::string> f;
    while (reader.next_row(f)) {
        const std::string where = path + ":" + std::to_string(reader.line_number());
        Transaction t;
        t.txn_id = f[0];
        if (t.txn_id.empty()) throw DataError(where + ": empty txn_id");
        if (!seen_ids.insert(t.txn_id).second)
            throw DataError(where + ": duplicate txn_id '" + t.txn_id + "'");
        try {
            t.timestamp = parse_rfc3339(f[1]);
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
        t.sender_id = f[2];
        t.receiver_id = f[3];
        if (t.sender_id.empty() || t.receiver_id.empty())
            throw DataError(where + ": empty account id");
        if (t.sender_id == t.receiver_id)
            throw DataError(where + ": sender and receiver are the same account");
        t.amount = parse_double(f[4], where + " amount");
        if (!(t.amount > 0.0)) throw DataError(where + ": amount must be positive");
        t.sender_type = parse_account_type(f[5], where);
        t.receiver_type = parse_account_type(f[6], where);
        if (t.sender_type == AccountType::external && t.receiver_type == AccountType::external)
            throw DataError(where + ": at least one endpoint must be internal");
        if (f[7] == "1")
            t.suspicious = true;
        else if (f[7] == "0")
            t.suspicious = false;
        else
            throw DataError(where + ": label must be 0 or 1, got '" + f[7] + "'");
        note_account_type(types, t.sender_id, t.sender_type, where);
        note_account_type(types, t.receiver_id, t.receiver_type, where);
        txns.push_back(std::move(t));
    }
    std::stable_sort(txns.begin(), txns.end(), [](const Transaction& a, const Transaction& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.txn_id < b.txn_id;
    });
    return txns;
}

void write_transactions_csv(const std::string& path, const std::vector<Transaction>& txns) {
    CsvWriter writer(path, kTransactionsCsvHeader);
    for (const auto& t : txns) {
        writer.write_row({t.txn_id, format_rfc3339(t.timestamp), t.sender_id, t.receiver_id,
                          format_double(t.amount), type_name(t.sender_type),
                          type_name(t.receiver_type), t.suspicious ? "1" : "0"});
    }
    writer.close();
}

std::vector<AccountDayRecord> aggregate_daily(const std::vector<Transaction>& txns) {
    if (txns.empty()) return {};
    const int64_t base_day = epoch_day(txns.front().timestamp);

    // Ordered map keys make the output order (day, account_id) canonical.
    std::map<std::pair<int, std::string>, AccountDayRecord> agg;
    auto touch = [&](const std::string& id, AccountType type, int day) -> AccountDayRecord& {
        auto& rec = agg[{day, id}];
        if (rec.account_id.empty()) {
            rec.account_id = id;
            rec.day = day;
            rec.account_type = type;
        }
        return rec;
    };
    for (const auto& t : txns) {
        const int day = static_cast<int>(epoch_day(t.timestamp) - base_day);
        auto& s = touch(t.sender_id, t.sender_type, day);
        s.total_sent += t.amount;
        s.sent_count += 1;
        s.counterparties.insert(t.receiver_id);
        auto& r = touch(t.receiver_id, t.receiver_type, day);
        r.total_received += t.amount;
        r.received_count += 1;
        r.counterparties.insert(t.sender_id);
    }
    std::vector<AccountDayRecord> out;
    out.reserve(agg.size());
    for (auto& [key, rec] : agg) out.push_back(std::move(rec));
    return out;
}

void infer_account_labels(const std::vector<Transaction>& txns,
                          std::vector<AccountDayRecord>& records) {
    if (txns.empty()) return;
    const int64_t base_day = epoch_day(txns.front().timestamp);
    std::unordered_set<std::string> suspicious;  // "id@day"
    for (const auto& t : txns) {
        if (!t.suspicious) continue;
        const int day = static_cast<int>(epoch_day(t.timestamp) - base_day);
        suspicious.insert(t.sender_id + "@" + std::to_string(day));
        suspicious.insert(t.receiver_id + "@" + std::to_string(day));
    }
    for (auto& rec : records)
        rec.suspicious = rec.suspicious ||
                         suspicious.count(rec.account_id + "@" + std::to_string(rec.day)) != 0;
}

DatasetSplit temporal_split(const std::vector<AccountDayRecord>& records,
                            double train_frac, double val_frac, double test_frac) {
    (void)test_frac;
    // Distinct days with activity, ascending, plus cumulative record counts.
    std::map<int, size_t> per_day;
    for (const auto& rec : records) per_day[rec.day] += 1;
    if (per_day.size() < 4)
        throw DataError("temporal_split: need records on >= 4 distinct days, have " +
                        std::to_string(per_day.size()));
    std::vector<int> days;
    std::vector<size_t> cum;  // records on days[0..i]
    size_t running = 0;
    for (const auto& [day, count] : per_day) {
        days.push_back(day);
        running += count;
        cum.push_back(running);
    }
    const double total = static_cast<double>(running);
    const double t1 = train_frac * total;
    const double t2 = (train_frac + val_frac) * total;

    // Exhaustive search over boundary pairs: train = days[0..i], val =
    // days[i+1..j], test = days[j+1..]. All three must be non-empty.
    const size_t n = days.size();
    size_t best_i = 0, best_j = 1;
    double best_cost = -1.0;
    for (size_t i = 0; i + 2 < n; ++i) {
        for (size_t j = i + 1; j + 1 < n; ++j) {
            const double cost = std::abs(static_cast<double>(cum[i]) - t1) +
                                std::abs(static_cast<double>(cum[j]) - t2);
            if (best_cost < 0.0 || cost < best_cost) {
                best_cost = cost;
                best_i = i;
                best_j = j;
            }
        }
    }

    DatasetSplit split;
    split.train_days = {days.front(), days[best_i] + 1};
    split.val_days = {days[best_i] + 1, days[best_j] + 1};
    split.test_days = {days[best_j] + 1, days.back() + 1};

    // Halve the training events the same way; degenerate single-day train
    // leaves half 1 empty (callers needing halves reject that).
    const double half = static_cast<double>(cum[best_i]) / 2.0;
    size_t best_h = 0;
    double best_hcost = -1.0;
    for (size_t h = 0; h < best_i; ++h) {
        const double cost = std::abs(static_cast<double>(cum[h]) - half);
        if (best_hcost < 0.0 || cost < best_hcost) {
            best_hcost = cost;
            best_h = h;
        }
    }
    split.train_half_boundary = best_i == 0 ? days.front() : days[best_h] + 1;
    return split;
}

Dataset build_dataset(std::vector<Transaction> txns) {
    Dataset ds;
    ds.txns = std::move(txns);
    ds.records = aggregate_daily(ds.txns);
    infer_account_labels(ds.txns, ds.records);

    std::set<std::string> ids;
    for (const auto& t : ds.txns) {
        ids.insert(t.sender_id);
        ids.insert(t.receiver_id);
    }
    ds.accounts.assign(ids.begin(), ids.end());
    ds.account_index.reserve(ds.accounts.size());
    for (uint32_t i = 0; i < ds.accounts.size(); ++i) ds.account_index[ds.accounts[i]] = i;
    ds.account_types.assign(ds.accounts.size(), AccountType::internal);
    for (const auto& t : ds.txns) {
        ds.account_types[ds.account_index[t.sender_id]] = t.sender_type;
        ds.account_types[ds.account_index[t.receiver_id]] = t.receiver_type;
    }
    if (!ds.txns.empty()) {
        ds.base_epoch_day = epoch_day(ds.txns.front().timestamp);
        int max_day = 0;
        for (const auto& t : ds.txns) max_day = std::max(max_day, ds.day_of(t));
        ds.n_days = max_day + 1;
    }
    return ds;
}

void write_records_csv(const std::string& path, const std::vector<AccountDayRecord>& records) {
    CsvWriter writer(path, {"account_id", "day", "account_type", "total_sent", "total_received",
                            "sent_count", "received_count", "n_counterparties", "label"});
    for (const auto& r : records) {
        writer.write_row({r.account_id, std::to_string(r.day),
                          r.account_type == AccountType::internal ? "internal" : "external",
                          format_double(r.total_sent), format_double(r.total_received),
                          std::to_string(r.sent_count), std::to_string(r.received_count),
                          std::to_string(r.counterparties.size()), r.suspicious ? "1" : "0"});
    }
    writer.close();
}

}  // namespace aml
