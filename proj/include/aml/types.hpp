#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "aml/timeutil.hpp"

namespace aml {

enum class AccountType : uint8_t { external = 0, internal = 1 };

struct Transaction {
    std::string txn_id;
    EpochSeconds timestamp = 0;
    std::string sender_id;
    std::string receiver_id;
    double amount = 0.0;
    AccountType sender_type = AccountType::internal;
    AccountType receiver_type = AccountType::internal;
    bool suspicious = false;
};

// Per-(account, day) aggregation of a time-ordered transaction stream.
// Exists only for days with activity.
struct AccountDayRecord {
    std::string account_id;
    int day = 0;  // whole days since the earliest transaction's calendar date
    AccountType account_type = AccountType::internal;
    double total_sent = 0.0;
    double total_received = 0.0;
    int sent_count = 0;
    int received_count = 0;
    std::set<std::string> counterparties;
    bool suspicious = false;
};

// Half-open day range [begin, end).
struct DayRange {
    int begin = 0;
    int end = 0;
    bool contains(int day) const { return day >= begin && day < end; }
    bool empty() const { return begin >= end; }
};

struct DatasetSplit {
    DayRange train_days;
    DayRange val_days;
    DayRange test_days;
    // First day of the second training half; half 1 = [train.begin, boundary).
    int train_half_boundary = 0;
};

// Interned view over transactions + daily records: account ids mapped to
// dense indices in lexicographic id order, so any iteration by index is
// deterministic.
struct Dataset {
    std::vector<Transaction> txns;           // time-ordered
    std::vector<AccountDayRecord> records;   // sorted by (day, account_id)
    std::vector<std::string> accounts;       // index -> id, sorted
    std::unordered_map<std::string, uint32_t> account_index;
    std::vector<AccountType> account_types;  // by account index
    int64_t base_epoch_day = 0;              // calendar anchor of day 0
    int n_days = 0;

    uint32_t index_of(const std::string& id) const { return account_index.at(id); }
    int day_of(const Transaction& t) const {
        return static_cast<int>(epoch_day(t.timestamp) - base_epoch_day);
    }
};

}  // namespace aml
