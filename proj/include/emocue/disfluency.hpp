#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "emocue/markup.hpp"

namespace emocue {

struct StutterToken {
    std::size_t pos = 0; // offset of the prefix within the clean string
    std::string prefix;  // 1-3 letters, case-insensitive prefix of word
    std::string word;    // letters with embedded apostrophes
};

// Scans clean text for prefix-hyphen-word tokens ("m-my", "r-recently").
// A token must start at a non-letter boundary; "well-known" never matches
// because "well" is 4 letters and is not a prefix of "known" anyway.
inline std::vector<StutterToken> find_stutter_tokens(std::string_view clean) {
    using detail::ascii_lower;
    using detail::is_ascii_letter;
    std::vector<StutterToken> out;
    const std::size_t n = clean.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_ascii_letter(clean[i])) { ++i; continue; }
        if (i > 0 && is_ascii_letter(clean[i - 1])) { ++i; continue; }
        std::size_t j = i;
        while (j < n && is_ascii_letter(clean[j])) ++j;
        const std::size_t plen = j - i;
        if (plen >= 1 && plen <= 3 && j < n && clean[j] == '-' && j + 1 < n &&
            is_ascii_letter(clean[j + 1])) {
            std::size_t k = j + 1;
            while (k < n) {
                if (is_ascii_letter(clean[k])) { ++k; continue; }
                if (clean[k] == '\'' && k + 1 < n && is_ascii_letter(clean[k + 1])) { k += 2; continue; }
                break;
            }
            const std::string_view word = clean.substr(j + 1, k - j - 1);
            if (word.size() >= plen) {
                bool match = true;
                for (std::size_t t = 0; t < plen; ++t) {
                    if (ascii_lower(clean[i + t]) != ascii_lower(word[t])) { match = false; break; }
                }
                if (match) {
                    out.push_back({i, std::string(clean.substr(i, plen)), std::string(word)});
                    i = k;
                    continue;
                }
            }
        }
        i = j;
    }
    return out;
}

enum class StutterApproach { FullRepeat, PartialRepeat, RestartRepeat };

struct StutterConfig {
    int n = 4;                         // words shorter than this repeat whole
    int fragment_len = 3;              // PartialRepeat fragment size
    std::string restart_filler = "um"; // RestartRepeat interjection
};

struct StutterRewrite {
    StutterToken original;
    StutterApproach approach = StutterApproach::FullRepeat;
    std::string text;
};

inline StutterRewrite rewrite_stutter_as(const StutterToken& token, StutterApproach approach,
                                         const StutterConfig& cfg = {}) {
    StutterRewrite rw;
    rw.original = token;
    rw.approach = approach;
    switch (approach) {
        case StutterApproach::FullRepeat:
            rw.text = token.word + " " + token.word;
            break;
        case StutterApproach::PartialRepeat:
            rw.text = token.word.substr(0, static_cast<std::size_t>(cfg.fragment_len)) + " " + token.word;
            break;
        case StutterApproach::RestartRepeat:
            rw.text = token.word + "... " + cfg.restart_filler + "... " + token.word;
            break;
    }
    return rw;
}

// Short words always FullRepeat without consuming randomness; long words draw
// one bit per token. Masking the raw engine output keeps the draw sequence
// identical across platforms, unlike the distribution adapters.
inline StutterRewrite rewrite_stutter(const StutterToken& token, const StutterConfig& cfg,
                                      std::mt19937_64& rng) {
    if (token.word.size() < static_cast<std::size_t>(cfg.n))
        return rewrite_stutter_as(token, StutterApproach::FullRepeat, cfg);
    const auto approach =
        (rng() & 1u) == 0 ? StutterApproach::PartialRepeat : StutterApproach::RestartRepeat;
    return rewrite_stutter_as(token, approach, cfg);
}

// Replaces every stutter token in the clean string, left to right.
inline std::string apply_stutter_rewrites(std::string_view clean, const StutterConfig& cfg,
                                          std::mt19937_64& rng) {
    const auto tokens = find_stutter_tokens(clean);
    if (tokens.empty()) return std::string(clean);
    std::string out;
    out.reserve(clean.size() + tokens.size() * 8);
    std::size_t cursor = 0;
    for (const auto& tok : tokens) {
        out.append(clean.substr(cursor, tok.pos - cursor));
        out.append(rewrite_stutter(tok, cfg, rng).text);
        cursor = tok.pos + tok.prefix.size() + 1 + tok.word.size();
    }
    out.append(clean.substr(cursor));
    return out;
}

struct InterjectionPlan {
    std::string text;
    double stretch = 1.3;
    int pause_ms = 200;
};

inline InterjectionPlan plan_interjection(std::string filler, double stretch = 1.3,
                                          int pause_ms = 200) {
    if (filler.empty()) throw Error("plan_interjection: empty filler");
    if (stretch < 1.0) throw Error("plan_interjection: stretch must be >= 1.0");
    if (pause_ms < 0) throw Error("plan_interjection: negative pause");
    return {std::move(filler), stretch, pause_ms};
}

} // namespace emocue
