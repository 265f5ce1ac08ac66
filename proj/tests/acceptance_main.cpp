// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Builds a throwaway data bundle so every check is hermetic.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "emocue/assets.hpp"
#include "emocue/audio.hpp"
#include "emocue/config.hpp"
#include "emocue/cue_map.hpp"
#include "emocue/disfluency.hpp"
#include "emocue/embedding.hpp"
#include "emocue/markup.hpp"
#include "emocue/memory.hpp"
#include "emocue/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string label;
    long limit_ms;
    std::function<void()> run; // throws std::runtime_error on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream ss;
        ss << what << ": got " << got << ", want " << want;
        throw Failure(ss.str());
    }
}

std::string read_bytes(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw Failure("cannot read " + p.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Independent codepoint counter (continuation bytes don't count).
std::size_t codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    auto ws = [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    };
    while (b < e && ws(s[b])) ++b;
    while (e > b && ws(s[e - 1])) --e;
    return s.substr(b, e - b);
}

// Analytic duration oracle for an utterance under the 60 ms/char 16 kHz stub:
// re-derives piece lengths from first principles, sharing only the parser and
// the stutter scanner with the code under test.
struct DurationOracle {
    long total = 0;
    long pieces = 0;
};

DurationOracle expected_duration(const std::string& text, std::uint64_t seed) {
    constexpr long kPerChar = 960;       // 60 ms/char at 16 kHz
    constexpr long kAssetLen = 8000;     // 500 ms signature assets
    constexpr long kPauseLen = 9600;     // 600 ms
    constexpr long kFillerTail = 3200;   // 200 ms after a stretched filler

    const auto parsed = emocue::parse_utterance(text);
    std::mt19937_64 rng(seed);
    DurationOracle out;

    for (const auto& seg : parsed.segments) {
        switch (seg.kind) {
            case emocue::SegmentKind::Clean: {
                std::string rewritten;
                std::size_t cursor = 0;
                for (const auto& tok : emocue::find_stutter_tokens(seg.payload)) {
                    rewritten += seg.payload.substr(cursor, tok.pos - cursor);
                    if (tok.word.size() < 4) {
                        rewritten += tok.word + " " + tok.word;
                    } else if ((rng() & 1u) == 0) {
                        rewritten += tok.word.substr(0, 3) + " " + tok.word;
                    } else {
                        rewritten += tok.word + "... um... " + tok.word;
                    }
                    cursor = tok.pos + tok.prefix.size() + 1 + tok.word.size();
                }
                rewritten += seg.payload.substr(cursor);
                const std::string spoken = trim(rewritten);
                if (spoken.empty()) break;
                out.total += static_cast<long>(codepoints(spoken)) * kPerChar;
                out.pieces += 1;
                break;
            }
            case emocue::SegmentKind::EmotionCue:
                out.total += kAssetLen;
                out.pieces += 1;
                break;
            case emocue::SegmentKind::Interjection: {
                const long base = static_cast<long>(codepoints(seg.payload)) * kPerChar;
                out.total += std::llround(static_cast<double>(base) * 1.3) + kFillerTail;
                out.pieces += 1;
                break;
            }
            case emocue::SegmentKind::Pause:
                out.total += kPauseLen;
                out.pieces += 1;
                break;
            case emocue::SegmentKind::Stutter:
                break;
        }
    }
    return out;
}

int run_command(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -2;
}

} // namespace

int main() {
    fs::path bundle;
    {
        std::random_device rd;
        bundle = fs::temp_directory_path() / ("emocue_accept_" + std::to_string(rd()));
    }
    emocue::write_default_assets(bundle);
    const auto ctx =
        emocue::PipelineContext::from_config(emocue::load_config(bundle / "config.json"));

    std::vector<Criterion> criteria;

    criteria.push_back({"parser produces the golden clean and disfluency lists", 1000, [&] {
        const auto p = emocue::parse_utterance(
            "  *cries softly*  Um, trying to, you know... but it's... it's hard.");
        const std::vector<std::string> clean = {"  ", "  ", ", trying to, you know",
                                                " but it's", " it's hard."};
        const std::vector<std::string> disf = {"cries softly", "Um", "...", "..."};
        require(p.clean_texts() == clean, "clean text list mismatch");
        require(p.disfluencies() == disf, "disfluency list mismatch");
    }});

    criteria.push_back({"stutter rewrites match the golden strings", 1000, [&] {
        using emocue::StutterApproach;
        const emocue::StutterToken my{0, "m", "my"};
        const emocue::StutterToken recently{0, "r", "recently"};
        require_eq(emocue::rewrite_stutter_as(my, StutterApproach::FullRepeat).text,
                   std::string("my my"), "whole-word repeat");
        require_eq(emocue::rewrite_stutter_as(recently, StutterApproach::PartialRepeat).text,
                   std::string("rec recently"), "fragment repeat");
        require_eq(emocue::rewrite_stutter_as(recently, StutterApproach::RestartRepeat).text,
                   std::string("recently... um... recently"), "restart repeat");
    }});

    criteria.push_back({"1000 generated annotated strings reconstruct byte-exactly", 5000, [&] {
        std::mt19937_64 rng(424242);
        const std::vector<std::string> words = {"so", "I", "went", "it's", "hard",
                                                "fine", "really", "y-yeah", "w-well", "okay"};
        const std::vector<std::string> cues = {"*sighs*", "*cries softly*", "*looks down*",
                                               "*nods slowly*", "*bangs fist*"};
        const std::vector<std::string> fillers = {"um", "Uh", "you know", "right", "I mean"};
        const std::vector<std::string> pauses = {"...", "....", ".....", "\xE2\x80\xA6"};
        auto pick = [&](const std::vector<std::string>& v) { return v[rng() % v.size()]; };
        for (int iter = 0; iter < 1000; ++iter) {
            std::string text;
            const int n = 1 + static_cast<int>(rng() % 10);
            for (int i = 0; i < n; ++i) {
                switch (rng() % 5) {
                    case 0: text += pick(cues); break;
                    case 1: text += pick(fillers); break;
                    case 2: text += pick(pauses); break;
                    case 3: text += pick(words); break;
                    default: text += " " + pick(words) + (rng() % 2 ? ", " : ". "); break;
                }
                if (rng() % 3 == 0) text += " ";
            }
            const auto p = emocue::parse_utterance(text);
            if (emocue::reconstruct(p) != text)
                throw Failure("reconstruction mismatch for: " + text);
            std::size_t at = 0;
            for (const auto& s : p.segments) {
                if (s.start != at) throw Failure("segment spans do not partition: " + text);
                at = s.end;
            }
            if (at != text.size()) throw Failure("segments do not cover the source: " + text);
        }
    }});

    criteria.push_back({"synthesized lengths match the analytic duration oracle", 10000, [&] {
        using emocue::Regime;
        std::size_t checked = 0;
        for (Regime regime : {Regime::Neutral, Regime::Moderate, Regime::Extreme}) {
            for (const auto& line : emocue::demo_assistant_lines(regime)) {
                const auto expect = expected_duration(line, ctx.cfg.seed);
                const auto r = emocue::synthesize_utterance(line, ctx);
                const long got = static_cast<long>(r.audio.samples.size());
                const long tol = expect.pieces > 0 ? expect.pieces - 1 : 0;
                if (std::labs(got - expect.total) > tol) {
                    std::ostringstream ss;
                    ss << "line '" << line.substr(0, 40) << "...': got " << got << ", want "
                       << expect.total << " (+/-" << tol << ")";
                    throw Failure(ss.str());
                }
                require_eq(static_cast<long>(r.trace.pieces.size()), expect.pieces,
                           "piece count for '" + line.substr(0, 40) + "'");
                ++checked;
            }
        }
        require_eq(checked, static_cast<std::size_t>(18), "demo corpus size");
    }});

    criteria.push_back({"fixed-seed synthesis is byte-identical across runs", 5000, [&] {
        const fs::path in = bundle / "det_input.txt";
        {
            std::ofstream f(in, std::ios::binary);
            f << "  *cries softly*  Um, w-well, r-really trying, you know... but "
                 "it's... it's h-hard.";
        }
        const std::string cli = EMOCUE_CLI_PATH;
        auto cmd = [&](const std::string& out, const std::string& trace) {
            return "\"" + cli + "\" synth --config \"" + (bundle / "config.json").string() +
                   "\" --seed 7 --in \"" + in.string() + "\" --out \"" +
                   (bundle / out).string() + "\" --trace \"" + (bundle / trace).string() +
                   "\" > /dev/null 2>&1";
        };
        require_eq(run_command(cmd("det_a.wav", "det_a.jsonl")), 0, "first run exit code");
        require_eq(run_command(cmd("det_b.wav", "det_b.jsonl")), 0, "second run exit code");
        require(read_bytes(bundle / "det_a.wav") == read_bytes(bundle / "det_b.wav"),
                "wav outputs differ between identical runs");
        require(read_bytes(bundle / "det_a.jsonl") == read_bytes(bundle / "det_b.jsonl"),
                "traces differ between identical runs");
        require(read_bytes(bundle / "det_a.wav").size() > 44, "wav output is empty");
    }});

    criteria.push_back({"intensity ranking: identity, range, scale invariance", 2000, [&] {
        const auto& table = ctx.table;
        const emocue::IntensityScale scale;
        for (const auto& [word, rank] : scale.references) {
            const auto* v = table.find(word);
            require(v != nullptr, "reference in vocabulary: " + word);
            const double self = emocue::cosine_similarity(*v, *v);
            require(std::abs(self - 1.0) <= 1e-12, "self-similarity of " + word);
            require_eq(emocue::rank_intensity({word}, scale, table), rank,
                       "self-rank of " + word);
        }

        std::vector<std::string> vocab;
        for (const auto& [token, _] : table.entries) vocab.push_back(token);
        std::sort(vocab.begin(), vocab.end());

        emocue::EmbeddingTable scaled = table;
        for (auto& [_, vec] : scaled.entries)
            for (auto& x : vec) x *= 4.0; // power of two: bit-exact cosine

        std::mt19937_64 rng(99);
        for (int i = 0; i < 200; ++i) {
            std::vector<std::string> phrase;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < len; ++k) {
                if (rng() % 5 == 0)
                    phrase.push_back("zz" + std::to_string(rng() % 100));
                else
                    phrase.push_back(vocab[rng() % vocab.size()]);
            }
            const int rank = emocue::rank_intensity(phrase, scale, table);
            require(rank >= 0 && rank <= 2, "rank out of range");
            require_eq(emocue::rank_intensity(phrase, scale, scaled), rank,
                       "rank changed under rescaling");

            std::string cue;
            for (const auto& w : phrase) cue += (cue.empty() ? "" : " ") + w;
            const auto a = emocue::resolve_cue(cue, ctx.library.manifest, scale, table);
            const auto b = emocue::resolve_cue(cue, ctx.library.manifest, scale, scaled);
            require(a.emotion_head == b.emotion_head && a.rank == b.rank,
                    "cue resolution changed under rescaling");
        }
    }});

    criteria.push_back({"memory window: exact payload shape and fifo eviction", 5000, [&] {
        auto state = emocue::init_conversation("sys {{BACKGROUND}}", "bg", 3, 4, "acc");
        for (int i = 1; i <= 10; ++i)
            emocue::record_exchange(state, "u" + std::to_string(i), "a" + std::to_string(i));
        const auto payload = emocue::build_payload(state, "new input");
        require_eq(payload.size(), static_cast<std::size_t>(16), "payload length");
        require(payload.front().role == emocue::Role::System, "system message first");
        const std::vector<std::string> users = {"u1", "u2", "u3", "u7", "u8", "u9", "u10"};
        for (std::size_t i = 0; i < users.size(); ++i) {
            require_eq(payload[1 + 2 * i].content, users[i], "user slot " + std::to_string(i));
            require_eq(payload[2 + 2 * i].content, "a" + users[i].substr(1),
                       "assistant slot " + std::to_string(i));
        }
        require_eq(payload.back().content, std::string("new input"), "trailing user input");

        std::mt19937_64 rng(31337);
        for (int run = 0; run < 1000; ++run) {
            const std::size_t t_init = rng() % 6;
            const std::size_t t_latest = 1 + rng() % 6;
            auto s = emocue::init_conversation("s", "b", t_init, t_latest, "fuzz");
            const int total = static_cast<int>(rng() % 30);
            for (int k = 1; k <= total; ++k) {
                emocue::record_exchange(s, "u" + std::to_string(k), "a" + std::to_string(k));
                const auto kk = static_cast<std::size_t>(k);
                const std::size_t init_n = std::min(kk, t_init);
                const std::size_t latest_n = std::min(kk - init_n, t_latest);
                require_eq(s.initial.size(), init_n, "initial size");
                require_eq(s.latest.size(), latest_n, "latest size");
                for (std::size_t i = 0; i < init_n; ++i)
                    require_eq(s.initial[i].user, "u" + std::to_string(i + 1), "initial order");
                for (std::size_t i = 0; i < latest_n; ++i)
                    require_eq(s.latest[i].user,
                               "u" + std::to_string(kk - latest_n + i + 1), "fifo order");
            }
        }
    }});

    criteria.push_back({"scripted conversation: verbatim transcript, all turns synthesized",
                        10000, [&] {
        using emocue::Regime;
        const auto& users = emocue::demo_user_lines();
        const auto& assistants = emocue::demo_assistant_lines(Regime::Neutral);
        emocue::ScriptedChatClient client(assistants);
        auto state = emocue::init_conversation(
            emocue::regime_template(Regime::Neutral), emocue::kDemoBackground, 3, 4, "acc8");
        const auto transcript = emocue::run_scripted_conversation(users, client, state);
        require_eq(transcript.size(), users.size(), "transcript length");
        for (std::size_t i = 0; i < transcript.size(); ++i) {
            require(!transcript[i].failed, "turn " + std::to_string(i) + " failed");
            require_eq(transcript[i].user, users[i], "user line " + std::to_string(i));
            require_eq(transcript[i].assistant, assistants[i],
                       "assistant line " + std::to_string(i));
        }

        const auto synth = emocue::synthesize_conversation(assistants, ctx);
        require_eq(synth.failures, static_cast<std::size_t>(0), "synthesis failures");
        require_eq(synth.turns.size(), static_cast<std::size_t>(6), "turn count");

        long expected = 0, tol = 0;
        for (const auto& line : assistants) {
            const auto d = expected_duration(line, ctx.cfg.seed);
            expected += d.total;
            tol += d.pieces > 0 ? d.pieces - 1 : 0;
        }
        const long gap = 16000; // 1000 ms between turns
        expected += 5 * gap;
        const long got = static_cast<long>(synth.combined.samples.size());
        if (std::labs(got - expected) > tol) {
            std::ostringstream ss;
            ss << "combined length: got " << got << ", want " << expected << " (+/-" << tol
               << ")";
            throw Failure(ss.str());
        }
    }});

    criteria.push_back({"wav codec round-trips 100 canonical files byte-exactly", 5000, [&] {
        std::mt19937_64 rng(55555);
        const std::vector<int> rates = {8000, 16000, 22050, 44100};
        for (int i = 0; i < 100; ++i) {
            emocue::AudioBuffer buf;
            buf.sample_rate = rates[static_cast<std::size_t>(rng() % rates.size())];
            std::size_t n;
            if (i == 0) {
                n = 0; // empty data chunk
            } else if (i == 1) {
                buf.samples = {32767.0 / 32768.0, -1.0, 0.0, 32767.0 / 32768.0, -1.0};
                n = buf.samples.size();
            } else {
                n = 1 + rng() % 300;
                buf.samples.reserve(n);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto v = static_cast<std::int16_t>(rng() & 0xFFFF);
                    buf.samples.push_back(v / 32768.0);
                }
            }
            const auto bytes = emocue::encode_wav(buf);
            const auto back = emocue::decode_wav(bytes);
            require_eq(back.samples.size(), buf.samples.size(), "sample count");
            require(back.sample_rate == buf.sample_rate, "sample rate");
            require(back.samples == buf.samples, "decoded samples are not identical");
            require(emocue::encode_wav(back) == bytes, "re-encoded bytes differ");
        }
    }});

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        bool ok = error.empty();
        if (ok && ms >= c.limit_ms) {
            ok = false;
            error = "exceeded " + std::to_string(c.limit_ms) + " ms limit";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.label << "  ["
                  << ms << " ms / " << c.limit_ms << " ms]";
        if (!ok) std::cout << "  -- " << error;
        std::cout << "\n";
        if (!ok) ++failures;
    }

    std::error_code ec;
    fs::remove_all(bundle, ec);

    if (failures == 0) {
        std::cout << "all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
}
