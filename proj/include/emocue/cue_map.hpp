#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emocue/embedding.hpp"
#include "emocue/errors.hpp"

#include <json.hpp>

namespace emocue {

struct IntensityScale {
    // exactly three (word, rank) pairs covering {0, 1, 2}
    std::vector<std::pair<std::string, int>> references = {
        {"softly", 0}, {"moderately", 1}, {"heavily", 2}};
    int default_rank = 1;
};

inline void validate_scale(const IntensityScale& scale, const EmbeddingTable& table) {
    if (scale.references.size() != 3)
        throw ConfigError("intensity scale needs exactly 3 references");
    std::set<int> ranks;
    for (const auto& [word, rank] : scale.references) {
        ranks.insert(rank);
        if (!table.find(word))
            throw ConfigError("intensity reference '" + word + "' missing from embeddings");
    }
    if (ranks != std::set<int>{0, 1, 2})
        throw ConfigError("intensity references must cover ranks {0,1,2}");
    if (scale.default_rank < 0 || scale.default_rank > 2)
        throw ConfigError("default_rank must be in {0,1,2}");
}

// Rank of the reference with maximum cosine similarity to the phrase mean;
// default rank for empty/OOV phrases; ties go to the lower rank.
inline int rank_intensity(const std::vector<std::string>& cue_words, const IntensityScale& scale,
                          const EmbeddingTable& table) {
    const auto e = embed_phrase(cue_words, table);
    if (!e) return scale.default_rank;

    std::vector<std::pair<int, const std::string*>> by_rank;
    for (const auto& [word, rank] : scale.references) by_rank.emplace_back(rank, &word);
    std::sort(by_rank.begin(), by_rank.end());

    int best_rank = scale.default_rank;
    double best_sim = 0.0;
    bool have = false;
    for (const auto& [rank, word] : by_rank) {
        const auto* rv = table.find(*word);
        if (!rv) throw ConfigError("intensity reference '" + *word + "' missing from embeddings");
        double sim;
        try {
            sim = cosine_similarity(*e, *rv);
        } catch (const ZeroVector&) {
            return scale.default_rank;
        }
        if (!have || sim > best_sim) {
            have = true;
            best_sim = sim;
            best_rank = rank;
        }
    }
    return best_rank;
}

struct CueManifest {
    int sample_rate = 16000;
    std::map<std::pair<std::string, int>, std::string> entries; // (emotion, rank) -> asset path
    std::pair<std::string, int> default_entry;

    std::set<std::string> emotions() const {
        std::set<std::string> out;
        for (const auto& [key, _] : entries) out.insert(key.first);
        return out;
    }

    static CueManifest from_json(const nlohmann::json& j) {
        CueManifest m;
        try {
            m.sample_rate = j.at("sample_rate").get<int>();
            m.default_entry = {j.at("default").at("emotion").get<std::string>(),
                               j.at("default").at("rank").get<int>()};
            for (const auto& e : j.at("entries")) {
                m.entries[{e.at("emotion").get<std::string>(), e.at("rank").get<int>()}] =
                    e.at("path").get<std::string>();
            }
        } catch (const nlohmann::json::exception& ex) {
            throw ConfigError(std::string("manifest: ") + ex.what());
        }
        if (m.entries.empty()) throw ConfigError("manifest has no entries");
        if (!m.entries.count(m.default_entry))
            throw ConfigError("manifest default entry not among entries");
        return m;
    }
};

enum class CueProvenance { Exact, HallucinatedNearest, Default };

inline const char* provenance_name(CueProvenance p) {
    switch (p) {
        case CueProvenance::Exact: return "exact";
        case CueProvenance::HallucinatedNearest: return "hallucinated-nearest";
        case CueProvenance::Default: return "default";
    }
    return "?";
}

struct ResolvedCue {
    std::string emotion_head;
    int rank = 1;
    std::string asset;
    CueProvenance provenance = CueProvenance::Default;
};

namespace detail {

// Nearest available rank for the emotion, lower rank preferred on distance ties.
inline std::string asset_for(const CueManifest& m, const std::string& emotion, int rank) {
    auto exact = m.entries.find({emotion, rank});
    if (exact != m.entries.end()) return exact->second;
    int best_rank = -1;
    for (const auto& [key, _] : m.entries) {
        if (key.first != emotion) continue;
        if (best_rank < 0 || std::abs(key.second - rank) < std::abs(best_rank - rank) ||
            (std::abs(key.second - rank) == std::abs(best_rank - rank) && key.second < best_rank))
            best_rank = key.second;
    }
    if (best_rank < 0) throw ConfigError("manifest has no asset for emotion '" + emotion + "'");
    return m.entries.at({emotion, best_rank});
}

} // namespace detail

// Total resolution: exact head match, else nearest manifest emotion by cosine
// of the full cue phrase, else the manifest default. Ties break toward the
// lexicographically smaller emotion so results never depend on map iteration.
inline ResolvedCue resolve_cue(std::string_view cue_phrase, const CueManifest& manifest,
                               const IntensityScale& scale, const EmbeddingTable& table) {
    if (manifest.entries.empty()) throw ManifestEmpty("manifest has no entries");

    const auto tokens = tokenize_phrase(cue_phrase);
    ResolvedCue out;

    if (tokens.empty()) {
        out.emotion_head = manifest.default_entry.first;
        out.rank = scale.default_rank;
        out.provenance = CueProvenance::Default;
        out.asset = detail::asset_for(manifest, out.emotion_head, out.rank);
        return out;
    }

    const std::string& head = tokens.front();
    const std::vector<std::string> intensity_words(tokens.begin() + 1, tokens.end());
    const auto emotions = manifest.emotions();

    if (emotions.count(head)) {
        out.emotion_head = head;
        out.provenance = CueProvenance::Exact;
    } else {
        const auto e = embed_phrase(tokens, table);
        bool resolved = false;
        if (e) {
            double best_sim = 0.0;
            for (const auto& emotion : emotions) { // std::set: lexicographic order
                const auto* ev = table.find(emotion);
                if (!ev) continue;
                double sim;
                try {
                    sim = cosine_similarity(*e, *ev);
                } catch (const ZeroVector&) {
                    continue;
                }
                if (!resolved || sim > best_sim) {
                    resolved = true;
                    best_sim = sim;
                    out.emotion_head = emotion;
                }
            }
        }
        if (resolved) {
            out.provenance = CueProvenance::HallucinatedNearest;
        } else {
            out.emotion_head = manifest.default_entry.first;
            out.provenance = CueProvenance::Default;
        }
    }

    out.rank = rank_intensity(intensity_words, scale, table);
    out.asset = detail::asset_for(manifest, out.emotion_head, out.rank);
    return out;
}

} // namespace emocue
