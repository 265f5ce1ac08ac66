#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emocue/audio.hpp"
#include "emocue/config.hpp"
#include "emocue/cue_map.hpp"
#include "emocue/disfluency.hpp"
#include "emocue/embedding.hpp"
#include "emocue/errors.hpp"
#include "emocue/markup.hpp"
#include "emocue/tts.hpp"

#include <json.hpp>

namespace emocue {

// Manifest plus its decoded assets; every asset is validated at load time.
struct CueLibrary {
    CueManifest manifest;
    std::map<std::string, AudioBuffer> assets; // manifest path -> decoded audio

    static CueLibrary load(const std::filesystem::path& manifest_path) {
        std::ifstream in(manifest_path, std::ios::binary);
        if (!in) throw IoError("cannot open manifest: " + manifest_path.string());
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(manifest_path.string() + ": " + e.what());
        }
        CueLibrary lib;
        lib.manifest = CueManifest::from_json(j);
        const auto base = manifest_path.has_parent_path() ? manifest_path.parent_path()
                                                          : std::filesystem::path(".");
        for (const auto& [key, rel] : lib.manifest.entries) {
            if (lib.assets.count(rel)) continue;
            const auto path = std::filesystem::path(rel).is_relative()
                                  ? base / rel
                                  : std::filesystem::path(rel);
            std::ifstream wav(path, std::ios::binary);
            if (!wav) throw IoError("cannot open asset: " + path.string());
            std::ostringstream bytes;
            bytes << wav.rdbuf();
            try {
                lib.assets[rel] = decode_wav(bytes.str());
            } catch (const Error& e) {
                throw ConfigError("asset " + path.string() + ": " + e.what());
            }
        }
        return lib;
    }
};

struct TracePiece {
    int i = 0;            // piece index in emit order
    std::string kind;     // clean | cue | interjection | pause | gap
    std::string detail;   // rewritten text, asset path, filler, or duration
    long samples = 0;
    std::string backend;  // backend name, "asset", or "none"
};

struct SynthesisTrace {
    std::vector<TracePiece> pieces;

    long total_samples() const {
        long total = 0;
        for (const auto& p : pieces) total += p.samples;
        return total;
    }

    std::string to_jsonl() const {
        std::string out;
        for (const auto& p : pieces) {
            nlohmann::json j = {{"i", p.i},
                                {"kind", p.kind},
                                {"detail", p.detail},
                                {"samples", p.samples},
                                {"backend", p.backend}};
            out += j.dump() + "\n";
        }
        return out;
    }
};

// Everything synthesize_utterance needs, loaded once and reused across turns.
struct PipelineContext {
    Config cfg;
    BackendDescriptor backend;
    CueLibrary library;
    EmbeddingTable table;

    static PipelineContext from_config(Config cfg, const std::string& backend_name = "") {
        PipelineContext ctx;
        ctx.backend = cfg.find_backend(backend_name.empty() ? cfg.backend : backend_name);
        ctx.library = CueLibrary::load(cfg.manifest_path);
        ctx.table = EmbeddingTable::load(cfg.embeddings_path.string());
        validate_scale(cfg.scale, ctx.table);
        ctx.cfg = std::move(cfg);
        return ctx;
    }
};

struct UtteranceResult {
    AudioBuffer audio;
    SynthesisTrace trace;
};

// The segment compiler: parse, resolve, rewrite, synthesize, assemble.
// Blank clean segments stay in the parse but emit no audio. One RNG per
// utterance drives the stutter approach draws in reading order.
inline UtteranceResult synthesize_utterance(const std::string& text, const PipelineContext& ctx) {
    const auto& cfg = ctx.cfg;
    const auto parsed = parse_utterance(text, cfg.interjections, cfg.lenient);
    std::mt19937_64 rng(cfg.seed);

    UtteranceResult result;
    std::vector<AudioBuffer> pieces;
    auto emit = [&](AudioBuffer buf, std::string kind, std::string detail, std::string backend) {
        TracePiece piece;
        piece.i = static_cast<int>(pieces.size());
        piece.kind = std::move(kind);
        piece.detail = std::move(detail);
        piece.samples = static_cast<long>(buf.samples.size());
        piece.backend = std::move(backend);
        result.trace.pieces.push_back(std::move(piece));
        pieces.push_back(std::move(buf));
    };

    for (std::size_t si = 0; si < parsed.segments.size(); ++si) {
        const auto& seg = parsed.segments[si];
        try {
            switch (seg.kind) {
                case SegmentKind::Clean: {
                    const std::string rewritten =
                        apply_stutter_rewrites(seg.payload, cfg.stutter, rng);
                    if (detail::trim_ws(rewritten).empty()) break; // blank: parse keeps it, audio skips it
                    auto audio = synthesize_with_retry(
                                     {rewritten, "", cfg.canonical_rate}, ctx.backend)
                                     .audio;
                    emit(resample(audio, cfg.canonical_rate), "clean", rewritten,
                         ctx.backend.name);
                    break;
                }
                case SegmentKind::EmotionCue: {
                    const auto resolved =
                        resolve_cue(seg.payload, ctx.library.manifest, cfg.scale, ctx.table);
                    const auto& asset = ctx.library.assets.at(resolved.asset);
                    emit(resample(asset, cfg.canonical_rate), "cue", resolved.asset, "asset");
                    break;
                }
                case SegmentKind::Interjection: {
                    const auto plan = plan_interjection(seg.payload, cfg.interjection_stretch,
                                                        cfg.interjection_pause_ms);
                    auto audio =
                        synthesize_with_retry({plan.text, "", cfg.canonical_rate}, ctx.backend)
                            .audio;
                    audio = time_stretch(resample(audio, cfg.canonical_rate), plan.stretch);
                    auto piece = concat({std::move(audio),
                                         silence(plan.pause_ms, cfg.canonical_rate)});
                    emit(std::move(piece), "interjection", plan.text, ctx.backend.name);
                    break;
                }
                case SegmentKind::Pause: {
                    emit(silence(cfg.pause_ms, cfg.canonical_rate), "pause",
                         std::string(static_cast<std::size_t>(seg.pause_dots), '.'), "none");
                    break;
                }
                case SegmentKind::Stutter:
                    break; // never produced by parse_utterance
            }
        } catch (const Error& e) {
            throw Error("segment " + std::to_string(si) + " (" +
                        segment_kind_name(seg.kind) + "): " + e.what());
        }
    }

    if (cfg.splice_gap_ms > 0 && pieces.size() > 1) {
        std::vector<AudioBuffer> gapped;
        SynthesisTrace gapped_trace;
        const auto gap = silence(cfg.splice_gap_ms, cfg.canonical_rate);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (i > 0) {
                TracePiece piece;
                piece.i = static_cast<int>(gapped.size());
                piece.kind = "gap";
                piece.detail = std::to_string(cfg.splice_gap_ms) + "ms";
                piece.samples = static_cast<long>(gap.samples.size());
                piece.backend = "none";
                gapped_trace.pieces.push_back(piece);
                gapped.push_back(gap);
            }
            TracePiece piece = result.trace.pieces[i];
            piece.i = static_cast<int>(gapped.size());
            gapped_trace.pieces.push_back(std::move(piece));
            gapped.push_back(std::move(pieces[i]));
        }
        pieces = std::move(gapped);
        result.trace = std::move(gapped_trace);
    }

    AudioBuffer assembled = pieces.empty() ? AudioBuffer{cfg.canonical_rate, {}} : concat(pieces);
    assembled.sample_rate = cfg.canonical_rate;
    result.audio = normalize_peak(assembled, cfg.normalize_peak);
    return result;
}

struct TurnSynthesis {
    bool ok = false;
    AudioBuffer audio;
    SynthesisTrace trace;
    std::string error;
};

struct ConversationSynthesis {
    std::vector<TurnSynthesis> turns;
    AudioBuffer combined; // successful turns joined with inter-turn gaps
    std::size_t failures = 0;
};

// Per-turn errors are collected, not fatal; the combined waveform joins the
// successful turns with the configured gap.
inline ConversationSynthesis synthesize_conversation(const std::vector<std::string>& turns,
                                                     const PipelineContext& ctx) {
    ConversationSynthesis out;
    out.turns.reserve(turns.size());
    for (const auto& text : turns) {
        TurnSynthesis turn;
        try {
            auto r = synthesize_utterance(text, ctx);
            turn.ok = true;
            turn.audio = std::move(r.audio);
            turn.trace = std::move(r.trace);
        } catch (const Error& e) {
            turn.error = e.what();
            ++out.failures;
        }
        out.turns.push_back(std::move(turn));
    }

    std::vector<AudioBuffer> pieces;
    const auto gap = silence(ctx.cfg.conversation.inter_turn_gap_ms, ctx.cfg.canonical_rate);
    for (const auto& turn : out.turns) {
        if (!turn.ok) continue;
        if (!pieces.empty()) pieces.push_back(gap);
        pieces.push_back(turn.audio);
    }
    out.combined = pieces.empty() ? AudioBuffer{ctx.cfg.canonical_rate, {}} : concat(pieces);
    return out;
}

} // namespace emocue
