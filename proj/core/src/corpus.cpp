#include "qdup/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qdup/errors.hpp"
#include "qdup/rng.hpp"

namespace qdup {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

bool parse_i64(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> read_id_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open partition file: " + path);
    std::vector<std::int64_t> ids;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        std::int64_t id;
        if (!parse_i64(t, id)) throw FormatError("bad pair_id '" + t + "' in " + path);
        ids.push_back(id);
    }
    return ids;
}

}  // namespace

std::string LoadReport::to_text() const {
    std::ostringstream os;
    os << "rows_read=" << rows_read << "\n"
       << "rows_kept=" << rows_kept << "\n"
       << "rows_skipped=" << rows_skipped << "\n"
       << "duplicate_fraction=" << duplicate_fraction << "\n"
       << "header_detected=" << (header_detected ? "yes" : "no") << "\n";
    return os.str();
}

LoadResult load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file: " + path);

    LoadResult result;
    std::string line;
    bool first = true;
    std::int64_t duplicates = 0;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_tabs(line);

        if (first) {
            first = false;
            std::int64_t probe;
            if (!fields.empty() && !parse_i64(fields[0], probe)) {
                result.report.header_detected = true;
                continue;  // header consumed, not a data row
            }
        }

        result.report.rows_read++;

        // Rows with embedded unescaped tabs come out with the wrong arity.
        if (fields.size() != 6) {
            result.report.rows_skipped++;
            continue;
        }
        QuestionPair p;
        if (!parse_i64(fields[0], p.pair_id) || !parse_i64(fields[1], p.qid1) ||
            !parse_i64(fields[2], p.qid2)) {
            result.report.rows_skipped++;
            continue;
        }
        p.text1 = trim(fields[3]);
        p.text2 = trim(fields[4]);
        const std::string& lab = fields[5];
        if (lab != "0" && lab != "1") {
            result.report.rows_skipped++;
            continue;
        }
        if (p.text1.empty() || p.text2.empty()) {
            result.report.rows_skipped++;
            continue;
        }
        p.label = lab == "1" ? 1 : 0;
        duplicates += p.label;
        result.pairs.push_back(std::move(p));
        result.report.rows_kept++;
    }

    if (result.pairs.empty()) throw FormatError("no valid rows in " + path);
    result.report.duplicate_fraction =
        static_cast<double>(duplicates) / static_cast<double>(result.pairs.size());
    return result;
}

DatasetSplit partition(const std::vector<QuestionPair>& pairs, std::size_t val_n,
                       std::size_t test_n, std::uint64_t seed, const PartitionFiles& files) {
    DatasetSplit split;

    if (files.any()) {
        std::unordered_map<std::int64_t, const QuestionPair*> by_id;
        by_id.reserve(pairs.size());
        for (const auto& p : pairs) by_id.emplace(p.pair_id, &p);

        auto take = [&](const std::string& path, std::vector<QuestionPair>& out,
                        std::unordered_set<std::int64_t>& claimed) {
            for (std::int64_t id : read_id_file(path)) {
                auto it = by_id.find(id);
                if (it == by_id.end())
                    throw ConsistencyError("partition file " + path +
                                           " references unknown pair_id " + std::to_string(id));
                if (!claimed.insert(id).second)
                    throw ConsistencyError("pair_id " + std::to_string(id) +
                                           " assigned to more than one split");
                out.push_back(*it->second);
            }
        };

        std::unordered_set<std::int64_t> claimed;
        if (files.val_ids) take(*files.val_ids, split.validation, claimed);
        if (files.test_ids) take(*files.test_ids, split.test, claimed);
        if (files.train_ids) {
            take(*files.train_ids, split.train, claimed);
        } else {
            for (const auto& p : pairs)
                if (!claimed.count(p.pair_id)) split.train.push_back(p);
        }
        return split;
    }

    if (val_n + test_n >= pairs.size())
        throw ConfigError("val_n + test_n must be smaller than the dataset (" +
                          std::to_string(pairs.size()) + " pairs)");

    std::vector<std::size_t> order(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    for (std::size_t i = 0; i < order.size(); ++i) {
        const QuestionPair& p = pairs[order[i]];
        if (i < val_n)
            split.validation.push_back(p);
        else if (i < val_n + test_n)
            split.test.push_back(p);
        else
            split.train.push_back(p);
    }
    return split;
}

}  // namespace qdup
