#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emocue/cue_map.hpp"
#include "emocue/disfluency.hpp"
#include "emocue/errors.hpp"
#include "emocue/markup.hpp"
#include "emocue/tts.hpp"

#include <json.hpp>

namespace emocue {

struct ChatConfig {
    std::string endpoint; // empty = no live chat model configured
    std::string auth_env;
};

struct ConversationConfig {
    int inter_turn_gap_ms = 1000;
    int t_init = 3;
    int t_latest = 4;
};

struct Config {
    // audio
    int canonical_rate = 16000;
    double normalize_peak = 0.89;
    // pauses and splices
    int pause_ms = 600;
    int splice_gap_ms = 0;
    // disfluencies
    StutterConfig stutter;
    double interjection_stretch = 1.3;
    int interjection_pause_ms = 200;
    // parser
    std::vector<std::string> interjections = default_interjection_lexicon();
    bool lenient = false;
    // rng
    std::uint64_t seed = 0;
    // intensity
    IntensityScale scale;
    // data files (resolved against the config file's directory on load)
    std::filesystem::path manifest_path = "manifest.json";
    std::filesystem::path embeddings_path = "embeddings.txt";
    // backends
    std::vector<BackendDescriptor> backends = {BackendDescriptor{}};
    std::string backend = "stub";
    // chat + conversation
    ChatConfig chat;
    ConversationConfig conversation;

    const BackendDescriptor& find_backend(const std::string& name) const {
        for (const auto& b : backends)
            if (b.name == name) return b;
        throw ConfigError("no backend named '" + name + "'");
    }
};

namespace detail {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

inline void read_path_if(const nlohmann::json& j, const char* key, std::filesystem::path& out) {
    if (j.contains(key)) out = j.at(key).get<std::string>();
}

} // namespace detail

inline Config config_from_json(const nlohmann::json& j) {
    using detail::read_if;
    Config cfg;
    try {
        if (j.contains("audio")) {
            read_if(j["audio"], "canonical_rate", cfg.canonical_rate);
            read_if(j["audio"], "normalize_peak", cfg.normalize_peak);
        }
        if (j.contains("pause")) read_if(j["pause"], "pause_ms", cfg.pause_ms);
        if (j.contains("splice")) read_if(j["splice"], "gap_ms", cfg.splice_gap_ms);
        if (j.contains("stutter")) {
            read_if(j["stutter"], "n", cfg.stutter.n);
            read_if(j["stutter"], "fragment_len", cfg.stutter.fragment_len);
            read_if(j["stutter"], "restart_filler", cfg.stutter.restart_filler);
        }
        if (j.contains("interjection")) {
            read_if(j["interjection"], "stretch", cfg.interjection_stretch);
            read_if(j["interjection"], "pause_ms", cfg.interjection_pause_ms);
        }
        if (j.contains("parser")) {
            read_if(j["parser"], "interjections", cfg.interjections);
            read_if(j["parser"], "lenient", cfg.lenient);
        }
        if (j.contains("rng")) read_if(j["rng"], "seed", cfg.seed);
        if (j.contains("intensity")) {
            const auto& in = j["intensity"];
            if (in.contains("references")) {
                cfg.scale.references.clear();
                for (const auto& r : in["references"])
                    cfg.scale.references.emplace_back(r.at(0).get<std::string>(), r.at(1).get<int>());
            }
            read_if(in, "default_rank", cfg.scale.default_rank);
        }
        if (j.contains("paths")) {
            detail::read_path_if(j["paths"], "manifest", cfg.manifest_path);
            detail::read_path_if(j["paths"], "embeddings", cfg.embeddings_path);
        }
        if (j.contains("backends")) {
            cfg.backends.clear();
            for (const auto& b : j["backends"]) {
                BackendDescriptor d;
                read_if(b, "name", d.name);
                std::string kind = "stub";
                read_if(b, "kind", kind);
                if (kind == "stub") {
                    d.kind = BackendDescriptor::Kind::Stub;
                    read_if(b, "ms_per_char", d.stub.ms_per_char);
                    read_if(b, "freq", d.stub.freq);
                    read_if(b, "amplitude", d.stub.amplitude);
                    read_if(b, "rate", d.stub.rate);
                } else if (kind == "http") {
                    d.kind = BackendDescriptor::Kind::Http;
                    read_if(b, "url", d.http.url);
                    read_if(b, "voice", d.http.voice);
                    read_if(b, "auth_env", d.http.auth_env);
                    read_if(b, "timeout_ms", d.http.timeout_ms);
                    if (d.http.url.empty())
                        throw ConfigError("http backend '" + d.name + "' needs a url");
                } else {
                    throw ConfigError("unknown backend kind: " + kind);
                }
                cfg.backends.push_back(std::move(d));
            }
        }
        read_if(j, "backend", cfg.backend);
        if (j.contains("chat")) {
            read_if(j["chat"], "endpoint", cfg.chat.endpoint);
            read_if(j["chat"], "auth_env", cfg.chat.auth_env);
        }
        if (j.contains("conversation")) {
            read_if(j["conversation"], "inter_turn_gap_ms", cfg.conversation.inter_turn_gap_ms);
            read_if(j["conversation"], "t_init", cfg.conversation.t_init);
            read_if(j["conversation"], "t_latest", cfg.conversation.t_latest);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (cfg.canonical_rate <= 0) throw ConfigError("audio.canonical_rate must be positive");
    if (cfg.pause_ms < 0 || cfg.splice_gap_ms < 0 || cfg.interjection_pause_ms < 0)
        throw ConfigError("durations must be non-negative");
    if (cfg.interjection_stretch < 1.0) throw ConfigError("interjection.stretch must be >= 1.0");
    if (cfg.stutter.n < 1 || cfg.stutter.fragment_len < 1)
        throw ConfigError("stutter thresholds must be positive");
    if (cfg.backends.empty()) throw ConfigError("at least one backend required");
    if (cfg.conversation.t_init < 0 || cfg.conversation.t_latest < 1)
        throw ConfigError("conversation thresholds invalid");
    return cfg;
}

// Relative manifest/embeddings paths are resolved against the config file's
// own directory so a data bundle stays relocatable.
inline Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    Config cfg = config_from_json(j);
    const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    if (cfg.manifest_path.is_relative()) cfg.manifest_path = base / cfg.manifest_path;
    if (cfg.embeddings_path.is_relative()) cfg.embeddings_path = base / cfg.embeddings_path;
    return cfg;
}

inline nlohmann::json default_config_json() {
    return nlohmann::json{
        {"audio", {{"canonical_rate", 16000}, {"normalize_peak", 0.89}}},
        {"pause", {{"pause_ms", 600}}},
        {"splice", {{"gap_ms", 0}}},
        {"stutter", {{"n", 4}, {"fragment_len", 3}, {"restart_filler", "um"}}},
        {"interjection", {{"stretch", 1.3}, {"pause_ms", 200}}},
        {"parser",
         {{"interjections", default_interjection_lexicon()}, {"lenient", false}}},
        {"rng", {{"seed", 0}}},
        {"intensity",
         {{"references",
           nlohmann::json::array({nlohmann::json::array({"softly", 0}),
                                  nlohmann::json::array({"moderately", 1}),
                                  nlohmann::json::array({"heavily", 2})})},
          {"default_rank", 1}}},
        {"paths", {{"manifest", "manifest.json"}, {"embeddings", "embeddings.txt"}}},
        {"backends", nlohmann::json::array({nlohmann::json{{"name", "stub"},
                                                           {"kind", "stub"},
                                                           {"ms_per_char", 60},
                                                           {"freq", 220},
                                                           {"amplitude", 0.3},
                                                           {"rate", 16000}},
                                            nlohmann::json{{"name", "stub-slow"},
                                                           {"kind", "stub"},
                                                           {"ms_per_char", 90},
                                                           {"freq", 165},
                                                           {"amplitude", 0.3},
                                                           {"rate", 22050}}})},
        {"backend", "stub"},
        {"chat", {{"endpoint", ""}, {"auth_env", ""}}},
        {"conversation", {{"inter_turn_gap_ms", 1000}, {"t_init", 3}, {"t_latest", 4}}},
    };
}

} // namespace emocue
