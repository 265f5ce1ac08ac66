#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "emocue/audio.hpp"
#include "emocue/config.hpp"
#include "emocue/embeddings_data.hpp"
#include "emocue/errors.hpp"
#include "emocue/memory.hpp"

#include <json.hpp>

namespace emocue {

// Character-persona prompt templates, one per regime. The neutral and moderate
// templates carry a {{BACKGROUND}} slot; the extreme one is slotless.
inline constexpr const char* kNeutralPrompt =
    "This is the background of the roleplay, follow it diligently: Behave like you are a "
    "character called Pastor Zimmerman and the user is your nurse whom you have come to visit. "
    "{{BACKGROUND}}";

inline constexpr const char* kModeratePrompt =
    "This is the background of the roleplay, follow it diligently: In this roleplay, embody "
    "Pastor Zimmerman, a deeply sad and anxious individual who communicates with some amount of "
    "emotional and action tags, such as [*cries*, *laughs*, *sighs heavily*, *cries heavily*, "
    "*sighs*, *bangs head*, *smiles*], utilizes some human-like filler words like [uh, um, you "
    "know, I mean, like, right], and occasionally repeats some words to simulate stuttering. "
    "{{BACKGROUND}}";

inline constexpr const char* kExtremePrompt =
    "This is the background of the roleplay, follow it diligently: In this roleplay, embody "
    "Pastor Zimmerman, a deeply sad and anxious individual who communicates with extreme amounts "
    "of emotional and action tags, such as [*cries*, *laughs*, *sighs heavily*, *cries heavily*, "
    "*sighs*, *bangs head*, *smiles*], utilizes some human-like filler words like [uh, um, you "
    "know, I mean, like, right], and occasionally repeats some words to simulate stuttering.";

inline const char* regime_template(Regime r) {
    switch (r) {
        case Regime::Neutral: return kNeutralPrompt;
        case Regime::Moderate: return kModeratePrompt;
        case Regime::Extreme: return kExtremePrompt;
    }
    return kNeutralPrompt;
}

// Demo character background for the shipped scripts.
inline constexpr const char* kDemoBackground =
    "Pastor Zimmerman is a retired pastor in his late sixties. He recently had a nodule removed "
    "from his throat, a complication his doctor linked to years of heavy drinking. His wife has "
    "Alzheimer's disease and her condition is deteriorating; their son is away, busy with his "
    "PhD, and cannot help much. Zimmerman describes drinking as his way of coping. He is soft "
    "spoken, ashamed of his drinking, and becomes emotional when his wife is mentioned.";

// Scripted demo dialogue: six nurse inputs and the matching virtual-patient
// replies for each regime.
inline const std::vector<std::string>& demo_user_lines() {
    static const std::vector<std::string> lines = {
        "Hi, I am your nurse Rohan, and I will be helping you today",
        "could you please let me know why are you here today?",
        "I am so sorry to hear that, may I ask if you have cut down on your drinking now?",
        "I am so sorry Zimmerman, may I know why are you not able to cut down on your drinking?",
        "Could you please tell me more about that? I am here to help",
        "Please calm down Zimmerman, I am here to help, please tell me your problems in details",
    };
    return lines;
}

inline const std::vector<std::string>& demo_assistant_lines(Regime r) {
    static const std::vector<std::string> neutral = {
        "Hello, Rohan.",
        "Had a nodule removed, related to drinking.",
        "Trying, but struggling.",
        "It's my coping mechanism for my wife's Alzheimer's.",
        "Her good and bad days affect me greatly.",
        "My son's busy with PhD, can't help much. Wife deteriorating. That's why I drink.",
    };
    static const std::vector<std::string> moderate = {
        "*sighs* Hello, Rohan.",
        "*cries softly* Uh, r-recently had a, um, nodule removed...",
        "*looks down* I, uh, y-yeah...I'm trying",
        "*sighs heavily* It...uh...helps me cope.",
        "*sobs* M-My wife ... she has Alzheimer ... it's ... just too hard to handle.",
        "*sighs* I've been drowning my worries in alcohol. Got so bad, um, my health suffered. "
        "Not p-proud.",
    };
    static const std::vector<std::string> extreme = {
        "*sighs heavily* Hello, um, Nurse Rohan... *nods slowly*",
        "*nods, clears throat* Uh, had a, um, nodule removed...drinking...drinking a lot, I "
        "mean... *looks away*",
        "*shakes head slightly* Uh, n-no...I um, haven't yet...you know... *sighs heavily*",
        "*sobs quietly* U-uh, wife ... Alzheimer's ... helps me cope ... *sniffles*",
        "*bites lip, struggles* W-wife, y-you know...bad days...they're um, really bad. *sighs* "
        "My son... um, he, uh, he helps but... PhD, you know... busy. *flags with his hands*.",
        "*cries heavily* Wife sick, son busy, I...drink...to cope... *bursts into tears*",
    };
    switch (r) {
        case Regime::Neutral: return neutral;
        case Regime::Moderate: return moderate;
        case Regime::Extreme: return extreme;
    }
    return neutral;
}

inline const std::array<const char*, 5>& manifest_emotions() {
    static const std::array<const char*, 5> emotions = {"bangs", "cries", "laughs", "sighs",
                                                        "smiles"};
    return emotions;
}

namespace detail {

constexpr double kPi = 3.14159265358979323846;

// Deterministic signature waveforms so the repository needs no recorded audio.
// Each emotion gets a distinct synthesis recipe; rank raises pitch and level.
inline AudioBuffer make_signature_asset(const std::string& emotion, int rank, int rate) {
    AudioBuffer buf;
    buf.sample_rate = rate;
    const auto n = static_cast<std::size_t>((static_cast<std::int64_t>(500) * rate + 500) / 1000);
    buf.samples.resize(n);
    const double amp = 0.5 + 0.15 * rank;
    const auto nd = static_cast<double>(n);

    if (emotion == "bangs") {
        // decaying noise burst
        std::uint64_t s = 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(rank);
        for (std::size_t i = 0; i < n; ++i) {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            const double noise = (static_cast<double>(s >> 11) / 9007199254740992.0) * 2.0 - 1.0;
            const double env = (1.0 - i / nd);
            buf.samples[i] = amp * noise * env * env;
        }
        return buf;
    }

    const double base = emotion == "cries"    ? 392.0
                        : emotion == "laughs" ? 523.0
                        : emotion == "sighs"  ? 196.0
                                              : 660.0; // smiles and anything else
    const double freq = base * (1.0 + 0.25 * rank);
    double phase = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = i / static_cast<double>(rate);
        double f = freq;
        double gain = 1.0;
        if (emotion == "sighs") f = freq * (1.0 - 0.5 * (i / nd)); // downward glide
        if (emotion == "cries") f = freq * (1.0 + 0.04 * std::sin(2.0 * kPi * 5.0 * t)); // vibrato
        if (emotion == "laughs") gain = 0.55 + 0.45 * std::sin(2.0 * kPi * 8.0 * t);     // tremolo
        phase += 2.0 * kPi * f / rate;
        buf.samples[i] = amp * gain * std::sin(phase) * (1.0 - i / nd);
    }
    return buf;
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
    }
    std::filesystem::rename(tmp, path);
}

} // namespace detail

inline nlohmann::json default_manifest_json() {
    nlohmann::json entries = nlohmann::json::array();
    for (const char* emotion : manifest_emotions())
        for (int rank = 0; rank <= 2; ++rank)
            entries.push_back({{"emotion", emotion},
                               {"rank", rank},
                               {"path", std::string("assets/") + emotion + "_" +
                                            std::to_string(rank) + ".wav"}});
    return nlohmann::json{{"sample_rate", 16000},
                          {"default", {{"emotion", "sighs"}, {"rank", 1}}},
                          {"entries", entries}};
}

// Writes a complete, relocatable data bundle: embeddings, manifest + signature
// assets, prompt templates, demo scripts, an annotated corpus, and a config.
inline void write_default_assets(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "assets");
    fs::create_directories(dir / "prompts");
    fs::create_directories(dir / "scripts");
    fs::create_directories(dir / "corpus");

    detail::write_file_atomic(dir / "embeddings.txt", kEmbeddingsText);
    detail::write_file_atomic(dir / "manifest.json", default_manifest_json().dump(2) + "\n");
    detail::write_file_atomic(dir / "config.json", default_config_json().dump(2) + "\n");
    detail::write_file_atomic(dir / "background.txt", std::string(kDemoBackground) + "\n");

    for (const char* emotion : manifest_emotions()) {
        for (int rank = 0; rank <= 2; ++rank) {
            const auto buf = detail::make_signature_asset(emotion, rank, 16000);
            detail::write_file_atomic(dir / "assets" /
                                          (std::string(emotion) + "_" + std::to_string(rank) + ".wav"),
                                      encode_wav(buf));
        }
    }

    detail::write_file_atomic(dir / "prompts" / "neutral.txt", std::string(kNeutralPrompt) + "\n");
    detail::write_file_atomic(dir / "prompts" / "moderate.txt", std::string(kModeratePrompt) + "\n");
    detail::write_file_atomic(dir / "prompts" / "extreme.txt", std::string(kExtremePrompt) + "\n");

    auto write_lines = [&](const fs::path& path, const std::vector<std::string>& lines) {
        std::string joined;
        for (const auto& l : lines) joined += l + "\n";
        detail::write_file_atomic(path, joined);
    };
    write_lines(dir / "scripts" / "user_lines.txt", demo_user_lines());
    for (Regime r : {Regime::Neutral, Regime::Moderate, Regime::Extreme})
        write_lines(dir / "scripts" / (std::string(regime_name(r)) + "_assistant.txt"),
                    demo_assistant_lines(r));

    for (Regime r : {Regime::Neutral, Regime::Moderate, Regime::Extreme}) {
        const auto& lines = demo_assistant_lines(r);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            detail::write_file_atomic(dir / "corpus" /
                                          (std::string(regime_name(r)) + "_" +
                                           std::to_string(i + 1) + ".txt"),
                                      lines[i] + "\n");
        }
    }
}

} // namespace emocue
