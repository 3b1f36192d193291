#pragma once

#include <string>
#include <vector>

#include "aml/types.hpp"

namespace aml {

// Exact transactions CSV schema (header required).
extern const std::vector<std::string> kTransactionsCsvHeader;

// Reads and validates a transactions CSV. Rows are returned in timestamp
// order, ties broken by txn_id. Throws DataError naming the line and field
// for malformed rows, duplicate txn ids, non-positive amounts,
// self-transfers, external-to-external transfers, and accounts whose type
// flips between rows.
std::vector<Transaction> parse_transactions(const std::string& path);

void write_transactions_csv(const std::string& path, const std::vector<Transaction>& txns);

// One record per (account, day) with activity; labels left legitimate.
// Transactions must be time-ordered.
std::vector<AccountDayRecord> aggregate_daily(const std::vector<Transaction>& txns);

// Sets record.suspicious = true iff some suspicious transaction touches the
// account that day.
void infer_account_labels(const std::vector<Transaction>& txns,
                          std::vector<AccountDayRecord>& records);

// Chooses split boundaries at day granularity so cumulative record counts
// are closest to the requested fractions: exhaustive search over boundary
// pairs minimizing |cum(d1) - f1*N| + |cum(d2) - (f1+f2)*N| subject to all
// three splits being non-empty; ties prefer earlier boundaries. The train
// half boundary minimizes |cum - N_train/2| the same way.
DatasetSplit temporal_split(const std::vector<AccountDayRecord>& records,
                            double train_frac = 0.6, double val_frac = 0.1,
                            double test_frac = 0.3);

// Aggregation, labeling and interning in one step (records sorted by
// (day, account_id)).
Dataset build_dataset(std::vector<Transaction> txns);

// Account-day records as CSV for inspection.
void write_records_csv(const std::string& path, const std::vector<AccountDayRecord>& records);

}  // namespace aml
