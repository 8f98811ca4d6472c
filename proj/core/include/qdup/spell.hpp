#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qdup/textprep.hpp"

namespace qdup {

// Plain Levenshtein distance (insert/delete/substitute, no transposition).
std::size_t levenshtein(const std::string& a, const std::string& b);

struct SpellCandidate {
    std::string term;
    std::size_t distance = 0;
    std::int64_t frequency = 0;
};

// Symmetric-delete dictionary: every dictionary term is indexed under all of
// its <=max_edit character-deletion variants. A query shares a variant with
// every term within Levenshtein distance max_edit; candidates are verified
// with the true distance before being reported.
class SpellIndex {
public:
    SpellIndex() = default;

    bool empty() const { return frequencies_.empty(); }
    std::size_t max_edit() const { return max_edit_; }

    bool is_term(const std::string& token) const { return frequencies_.count(token) > 0; }
    std::int64_t frequency_of(const std::string& term) const;
    const std::unordered_map<std::string, std::int64_t>& dictionary() const {
        return frequencies_;
    }

    // All dictionary terms within max_edit of token, verified distances.
    std::vector<SpellCandidate> lookup(const std::string& token) const;

    // Best candidate under (distance asc, frequency desc, term asc), or
    // nullopt when nothing is within max_edit.
    std::optional<SpellCandidate> best(const std::string& token) const;

private:
    friend SpellIndex build_spell_index(const std::unordered_map<std::string, std::int64_t>&,
                                        std::size_t);
    std::unordered_map<std::string, std::int64_t> frequencies_;
    std::unordered_map<std::string, std::vector<std::string>> deletes_;
    std::size_t max_edit_ = 2;
};

SpellIndex build_spell_index(const std::unordered_map<std::string, std::int64_t>& dictionary,
                             std::size_t max_edit = 2);

// All distinct strings reachable from word by deleting up to max_deletes
// characters (the word itself included).
std::unordered_set<std::string> delete_variants(const std::string& word,
                                                std::size_t max_deletes);

// Splits word into >=2 dictionary terms maximizing the sum of log
// frequencies (ties: fewer parts, then lexicographically smaller sequence).
// Empty result means no full-coverage split exists.
std::optional<TokenSequence> segment(const std::string& word, const SpellIndex& index);

// Known tokens pass through; unknown tokens get the best correction within
// max_edit, then a segmentation attempt, and are kept verbatim as a last
// resort. Never returns an empty sequence.
enum class CorrectionKind { Known, Corrected, Segmented, KeptVerbatim };

struct CorrectionResult {
    TokenSequence tokens;
    CorrectionKind kind = CorrectionKind::Known;
};

CorrectionResult correct_token(const std::string& token, const Vocabulary& known,
                               const SpellIndex& index);

}  // namespace qdup
