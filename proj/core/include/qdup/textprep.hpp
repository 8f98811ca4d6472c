#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace qdup {

struct QuestionPair;
class SpellIndex;

// Tokens are lowercase [a-z0-9]+ strings; sequences are clipped to 40.
using TokenSequence = std::vector<std::string>;

inline constexpr std::size_t kMaxTokens = 40;

// Lowercases and replaces every non-alphanumeric character with a space,
// then collapses space runs. Output alphabet: [a-z0-9 ]. Idempotent.
std::string normalize(const std::string& text);

// Whitespace split of already-normalized text.
TokenSequence tokenize(const std::string& normalized);

// Keeps the first max_len tokens.
TokenSequence clip(TokenSequence seq, std::size_t max_len = kMaxTokens);

// Token <-> id maps. Id 0 is padding, id 1 the OOV sentinel; real tokens
// start at id 2. Build once, read from any thread afterwards.
class Vocabulary {
public:
    static constexpr int kPadId = 0;
    static constexpr int kOovId = 1;

    Vocabulary();

    int add(const std::string& token);  // inserts or bumps count, returns id
    int add(const std::string& token, std::int64_t count);

    int id_of(const std::string& token) const;  // kOovId when absent
    bool contains(const std::string& token) const;
    const std::string& token_of(int id) const;
    std::int64_t count_of(const std::string& token) const;  // 0 when absent

    int size() const { return static_cast<int>(id_to_token_.size()); }
    int distinct_tokens() const { return size() - 2; }

    // Tokens in id order (reserved ids excluded).
    const std::vector<std::string>& tokens() const { return id_to_token_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    // `term count` per line, id order. Round-trips through load().
    void save(const std::string& path) const;
    static Vocabulary load(const std::string& path);

private:
    std::unordered_map<std::string, int> token_to_id_;
    std::vector<std::string> id_to_token_;
    std::vector<std::int64_t> counts_;
};

// Ids assigned in first-occurrence order; no frequency cutoff.
Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus);

struct PrepReport {
    std::int64_t tokens_seen = 0;
    std::int64_t tokens_known = 0;
    std::int64_t tokens_corrected = 0;
    std::int64_t tokens_segmented = 0;
    std::int64_t tokens_kept_verbatim = 0;
    std::int64_t pairs_rejected = 0;

    std::string to_text() const;
};

struct PreprocessedPair {
    std::int64_t pair_id = 0;
    int label = 0;
    TokenSequence tokens1;
    TokenSequence tokens2;
};

// Spell-correction context: the "known" check runs against the pretrained
// embedding vocabulary; candidates come from the symmetric-delete index.
// With spell == nullptr the correction step is skipped entirely.
struct SpellContext {
    const Vocabulary* known = nullptr;
    const SpellIndex* spell = nullptr;
};

// normalize -> tokenize -> per-token correction -> clip(40) on both texts.
// Returns false (and bumps pairs_rejected) when either side ends up empty.
bool preprocess_pair(const QuestionPair& pair, const SpellContext& ctx,
                     PreprocessedPair& out, PrepReport& report);

}  // namespace qdup
