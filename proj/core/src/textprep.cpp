#include "qdup/textprep.hpp"

#include <fstream>
#include <sstream>

#include "qdup/corpus.hpp"
#include "qdup/errors.hpp"
#include "qdup/spell.hpp"

namespace qdup {

std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        char lc = 0;
        if (c >= 'a' && c <= 'z')
            lc = static_cast<char>(c);
        else if (c >= 'A' && c <= 'Z')
            lc = static_cast<char>(c - 'A' + 'a');
        else if (c >= '0' && c <= '9')
            lc = static_cast<char>(c);

        if (lc == 0) {
            pending_space = true;  // replaced by a space, runs collapse
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(lc);
    }
    return out;
}

TokenSequence tokenize(const std::string& normalized) {
    TokenSequence tokens;
    std::size_t start = 0;
    while (start < normalized.size()) {
        std::size_t space = normalized.find(' ', start);
        if (space == std::string::npos) space = normalized.size();
        if (space > start) tokens.push_back(normalized.substr(start, space - start));
        start = space + 1;
    }
    return tokens;
}

TokenSequence clip(TokenSequence seq, std::size_t max_len) {
    if (seq.size() > max_len) seq.resize(max_len);
    return seq;
}

Vocabulary::Vocabulary() {
    id_to_token_.resize(2);  // pad, oov
    counts_.resize(2, 0);
}

int Vocabulary::add(const std::string& token) { return add(token, 1); }

int Vocabulary::add(const std::string& token, std::int64_t count) {
    auto it = token_to_id_.find(token);
    if (it != token_to_id_.end()) {
        counts_[static_cast<std::size_t>(it->second)] += count;
        return it->second;
    }
    int id = static_cast<int>(id_to_token_.size());
    token_to_id_.emplace(token, id);
    id_to_token_.push_back(token);
    counts_.push_back(count);
    return id;
}

int Vocabulary::id_of(const std::string& token) const {
    auto it = token_to_id_.find(token);
    return it == token_to_id_.end() ? kOovId : it->second;
}

bool Vocabulary::contains(const std::string& token) const {
    return token_to_id_.count(token) > 0;
}

const std::string& Vocabulary::token_of(int id) const {
    return id_to_token_.at(static_cast<std::size_t>(id));
}

std::int64_t Vocabulary::count_of(const std::string& token) const {
    auto it = token_to_id_.find(token);
    return it == token_to_id_.end() ? 0 : counts_[static_cast<std::size_t>(it->second)];
}

void Vocabulary::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write vocabulary file: " + path);
    for (int id = 2; id < size(); ++id)
        out << id_to_token_[static_cast<std::size_t>(id)] << ' '
            << counts_[static_cast<std::size_t>(id)] << '\n';
}

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vocabulary file: " + path);
    Vocabulary vocab;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string token;
        std::int64_t count = 0;
        if (!(is >> token >> count)) throw FormatError("bad vocabulary line: " + line);
        vocab.add(token, count);
    }
    return vocab;
}

Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus) {
    if (corpus.empty()) throw ConfigError("cannot build a vocabulary from an empty corpus");
    Vocabulary vocab;
    for (const auto& seq : corpus)
        for (const auto& token : seq) vocab.add(token);
    return vocab;
}

std::string PrepReport::to_text() const {
    std::ostringstream os;
    os << "tokens_seen=" << tokens_seen << "\n"
       << "tokens_known=" << tokens_known << "\n"
       << "tokens_corrected=" << tokens_corrected << "\n"
       << "tokens_segmented=" << tokens_segmented << "\n"
       << "tokens_kept_verbatim=" << tokens_kept_verbatim << "\n"
       << "pairs_rejected=" << pairs_rejected << "\n";
    return os.str();
}

namespace {

TokenSequence prepare_text(const std::string& text, const SpellContext& ctx,
                           PrepReport& report) {
    TokenSequence raw = tokenize(normalize(text));
    if (!ctx.spell || !ctx.known) {
        report.tokens_seen += static_cast<std::int64_t>(raw.size());
        return clip(std::move(raw));
    }

    TokenSequence corrected;
    corrected.reserve(raw.size());
    for (const auto& token : raw) {
        report.tokens_seen++;
        CorrectionResult r = correct_token(token, *ctx.known, *ctx.spell);
        switch (r.kind) {
            case CorrectionKind::Known: report.tokens_known++; break;
            case CorrectionKind::Corrected: report.tokens_corrected++; break;
            case CorrectionKind::Segmented: report.tokens_segmented++; break;
            case CorrectionKind::KeptVerbatim: report.tokens_kept_verbatim++; break;
        }
        corrected.insert(corrected.end(), r.tokens.begin(), r.tokens.end());
    }
    return clip(std::move(corrected));
}

}  // namespace

bool preprocess_pair(const QuestionPair& pair, const SpellContext& ctx,
                     PreprocessedPair& out, PrepReport& report) {
    out.pair_id = pair.pair_id;
    out.label = pair.label;
    out.tokens1 = prepare_text(pair.text1, ctx, report);
    out.tokens2 = prepare_text(pair.text2, ctx, report);
    if (out.tokens1.empty() || out.tokens2.empty()) {
        report.pairs_rejected++;
        return false;
    }
    return true;
}

}  // namespace qdup
