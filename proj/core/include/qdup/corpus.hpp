#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdup {

struct QuestionPair {
    std::int64_t pair_id = 0;
    std::int64_t qid1 = 0;
    std::int64_t qid2 = 0;
    std::string text1;
    std::string text2;
    int label = 0;  // 0 or 1
};

struct LoadReport {
    std::int64_t rows_read = 0;     // data rows seen (header excluded)
    std::int64_t rows_kept = 0;
    std::int64_t rows_skipped = 0;
    double duplicate_fraction = 0.0;
    bool header_detected = false;

    std::string to_text() const;
};

struct LoadResult {
    std::vector<QuestionPair> pairs;
    LoadReport report;
};

struct DatasetSplit {
    std::vector<QuestionPair> train;
    std::vector<QuestionPair> validation;
    std::vector<QuestionPair> test;
};

struct PartitionFiles {
    std::optional<std::string> train_ids;
    std::optional<std::string> val_ids;
    std::optional<std::string> test_ids;

    bool any() const { return train_ids || val_ids || test_ids; }
};

// Reads the tab-separated question-pair file. Expected columns:
// id, qid1, qid2, question1, question2, is_duplicate. A header line is
// detected by a non-numeric first field. Malformed rows (wrong field count,
// non-binary label, empty question text) are counted and skipped.
// Throws IoError if the file is unreadable, FormatError if no valid row.
LoadResult load_tsv(const std::string& path);

// Splits pairs into train/validation/test. When id files are given,
// membership follows them exactly (unknown pair_id -> ConsistencyError).
// Otherwise a Fisher-Yates shuffle seeded with `seed` assigns the first
// val_n pairs to validation, the next test_n to test, rest to train.
DatasetSplit partition(const std::vector<QuestionPair>& pairs, std::size_t val_n,
                       std::size_t test_n, std::uint64_t seed,
                       const PartitionFiles& files = {});

}  // namespace qdup
