// emocue: compiles emotion- and disfluency-annotated text into speech.
//
// Subcommands:
//   parse       segment annotated text into clean/cue/interjection/pause spans
//   synth       synthesize one annotated utterance to a WAV file
//   converse    run a scripted conversation through memory + synthesis
//   compare     run backends over a corpus and emit an objective report
//   make-assets write the default data bundle (embeddings, manifest, assets...)

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emocue/assets.hpp"
#include "emocue/config.hpp"
#include "emocue/errors.hpp"
#include "emocue/markup.hpp"
#include "emocue/memory.hpp"
#include "emocue/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1; // backend/IO/runtime failure
constexpr int kExitInput = 2;   // bad input or parse error

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw emocue::IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw emocue::IoError("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw emocue::IoError("cannot write " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
    }
    fs::rename(tmp, path);
}

// Strips one trailing newline so a one-line utterance file round-trips.
std::string read_utterance(const fs::path& path) {
    std::string text = read_file(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

json parsed_to_json(const emocue::ParsedUtterance& parsed) {
    json segments = json::array();
    for (const auto& seg : parsed.segments) {
        json s = {{"kind", emocue::segment_kind_name(seg.kind)},
                  {"start", seg.start},
                  {"end", seg.end}};
        if (seg.kind == emocue::SegmentKind::Pause)
            s["payload"] = std::string(static_cast<std::size_t>(seg.pause_dots), '.');
        else
            s["payload"] = seg.payload;
        segments.push_back(std::move(s));
    }
    return json{{"source", parsed.source},
                {"segments", segments},
                {"clean", parsed.clean_texts()},
                {"disfluencies", parsed.disfluencies()}};
}

struct CommonOpts {
    std::string config_path;
    std::string backend;
    std::optional<std::uint64_t> seed;

    emocue::Config load() const {
        emocue::Config cfg =
            config_path.empty() ? emocue::Config{} : emocue::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (!backend.empty()) cfg.backend = backend;
        return cfg;
    }
};

int require_input(const std::string& in_path, const std::string& text_arg) {
    if (in_path.empty() && text_arg.empty()) {
        std::cerr << "need --in FILE or --text STR\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_parse(const std::string& in_path, const std::string& text_arg,
              const std::string& out_path, bool lenient, const CommonOpts& common) {
    if (int rc = require_input(in_path, text_arg)) return rc;
    emocue::Config cfg = common.load();
    const std::string text = !in_path.empty() ? read_utterance(in_path) : text_arg;
    emocue::ParsedUtterance parsed;
    try {
        parsed = emocue::parse_utterance(text, cfg.interjections, lenient || cfg.lenient);
    } catch (const emocue::UnbalancedAsterisk& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    }
    const std::string doc = parsed_to_json(parsed).dump(2) + "\n";
    if (out_path.empty())
        std::cout << doc;
    else
        write_file_atomic(out_path, doc);
    return kExitOk;
}

int cmd_synth(const std::string& in_path, const std::string& text_arg, const std::string& out_path,
              const std::string& trace_path, const CommonOpts& common) {
    if (int rc = require_input(in_path, text_arg)) return rc;
    const auto ctx = emocue::PipelineContext::from_config(common.load());
    const std::string text = !in_path.empty() ? read_utterance(in_path) : text_arg;
    emocue::UtteranceResult result;
    try {
        result = emocue::synthesize_utterance(text, ctx);
    } catch (const emocue::UnbalancedAsterisk& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    }
    write_file_atomic(out_path, emocue::encode_wav(result.audio));
    if (!trace_path.empty()) write_file_atomic(trace_path, result.trace.to_jsonl());
    std::cout << out_path << ": " << result.audio.samples.size() << " samples @ "
              << result.audio.sample_rate << " Hz, " << result.trace.pieces.size() << " pieces\n";
    return kExitOk;
}

int cmd_converse(const std::string& script_path, const std::string& regime_name,
                 const std::string& llm, const std::string& out_dir, int t_init, int t_latest,
                 const CommonOpts& common) {
    emocue::Config cfg = common.load();
    if (t_init >= 0) cfg.conversation.t_init = t_init;
    if (t_latest >= 1) cfg.conversation.t_latest = t_latest;
    const auto ctx = emocue::PipelineContext::from_config(std::move(cfg));

    const auto regime = emocue::regime_from_name(regime_name);
    const auto user_lines = read_lines(script_path);

    std::unique_ptr<emocue::ChatClient> client;
    if (llm.rfind("stub:", 0) == 0) {
        client = std::make_unique<emocue::ScriptedChatClient>(read_lines(llm.substr(5)));
    } else if (llm == "stub") {
        client = std::make_unique<emocue::ScriptedChatClient>(
            emocue::demo_assistant_lines(regime));
    } else {
        throw emocue::ConfigError("unsupported --llm value: " + llm +
                                  " (use stub or stub:FILE)");
    }

    auto state = emocue::init_conversation(
        emocue::regime_template(regime), emocue::kDemoBackground,
        static_cast<std::size_t>(ctx.cfg.conversation.t_init),
        static_cast<std::size_t>(ctx.cfg.conversation.t_latest),
        std::string(emocue::regime_name(regime)) + "_" + ctx.backend.name);
    const auto transcript = emocue::run_scripted_conversation(user_lines, *client, state);

    std::vector<std::string> assistant_lines;
    for (const auto& turn : transcript)
        if (!turn.failed) assistant_lines.push_back(turn.assistant);
    const auto synth = emocue::synthesize_conversation(assistant_lines, ctx);

    const fs::path dir(out_dir);
    fs::create_directories(dir);
    const std::string stem = std::string(emocue::regime_name(regime)) + "_" + ctx.backend.name;
    std::size_t wav_index = 0;
    json turns = json::array();
    for (const auto& turn : transcript) {
        json t = {{"user", turn.user}, {"failed", turn.failed}};
        if (turn.failed) {
            t["error"] = turn.error;
        } else {
            t["assistant"] = turn.assistant;
            const auto& ts = synth.turns.at(wav_index);
            if (ts.ok) {
                const auto wav_name = stem + "_turn" + std::to_string(wav_index + 1) + ".wav";
                write_file_atomic(dir / wav_name, emocue::encode_wav(ts.audio));
                t["wav"] = wav_name;
                t["samples"] = ts.audio.samples.size();
            } else {
                t["failed"] = true;
                t["error"] = ts.error;
            }
            ++wav_index;
        }
        turns.push_back(std::move(t));
    }
    write_file_atomic(dir / (stem + "_combined.wav"), emocue::encode_wav(synth.combined));
    const json doc = {{"regime", emocue::regime_name(regime)},
                      {"backend", ctx.backend.name},
                      {"turns", turns},
                      {"combined_samples", synth.combined.samples.size()}};
    write_file_atomic(dir / (stem + "_transcript.json"), doc.dump(2) + "\n");
    emocue::save_conversation(state, dir / "conversations");

    std::cout << stem << ": " << assistant_lines.size() << " turns, combined "
              << synth.combined.samples.size() << " samples";
    const std::size_t synth_failures = synth.failures + (transcript.size() - assistant_lines.size());
    if (synth_failures > 0) {
        std::cout << ", " << synth_failures << " failed\n";
        return kExitRuntime;
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_compare(const std::string& backends_csv, const std::string& corpus_dir,
                const std::string& report_path, const CommonOpts& common) {
    emocue::Config cfg = common.load();

    std::vector<std::string> backend_names;
    {
        std::stringstream ss(backends_csv);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) backend_names.push_back(name);
    }
    if (backend_names.empty()) throw emocue::ConfigError("--backends needs at least one name");

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw emocue::ConfigError("corpus has no .txt utterances: " + corpus_dir);

    json rows = json::array();
    json aggregates = json::array();
    for (const auto& name : backend_names) {
        const auto ctx = emocue::PipelineContext::from_config(cfg, name);
        long total_ms = 0, total_pieces = 0;
        std::size_t failures = 0;
        for (const auto& file : files) {
            json row = {{"backend", name}, {"utterance", file.filename().string()}};
            try {
                const auto result =
                    emocue::synthesize_utterance(read_utterance(file), ctx);
                const long ms = static_cast<long>(std::llround(
                    1000.0 * static_cast<double>(result.audio.samples.size()) /
                    result.audio.sample_rate));
                long pauses = 0;
                for (const auto& p : result.trace.pieces)
                    if (p.kind == "pause") ++pauses;
                row["pieces"] = result.trace.pieces.size();
                row["duration_ms"] = ms;
                row["splices"] =
                    result.trace.pieces.empty() ? 0 : result.trace.pieces.size() - 1;
                row["pauses"] = pauses;
                row["failed"] = false;
                total_ms += ms;
                total_pieces += static_cast<long>(result.trace.pieces.size());
            } catch (const emocue::Error& e) {
                row["failed"] = true;
                row["error"] = e.what();
                ++failures;
            }
            rows.push_back(std::move(row));
        }
        aggregates.push_back({{"backend", name},
                              {"utterances", files.size()},
                              {"total_duration_ms", total_ms},
                              {"total_pieces", total_pieces},
                              {"failures", failures}});
    }

    const json report = {{"rows", rows}, {"aggregates", aggregates}};
    const std::string doc = report.dump(2) + "\n";
    if (report_path.empty())
        std::cout << doc;
    else
        write_file_atomic(report_path, doc);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"emotion/disfluency annotated-text speech compiler"};
    app.require_subcommand(1);

    CommonOpts common;

    std::string in_path, text_arg, out_path, trace_path;
    bool lenient = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", common.config_path, "config JSON file");
        cmd->add_option("--backend", common.backend, "backend name from config");
        cmd->add_option("--seed", common.seed, "RNG seed override");
    };

    auto* parse = app.add_subcommand("parse", "segment annotated text");
    parse->add_option("--in", in_path, "utterance file");
    parse->add_option("--text", text_arg, "utterance literal");
    parse->add_option("--out", out_path, "output JSON path (default stdout)");
    parse->add_flag("--lenient", lenient, "treat unmatched asterisks as literal text");
    add_common(parse);

    auto* synth = app.add_subcommand("synth", "synthesize one utterance");
    synth->add_option("--in", in_path, "utterance file");
    synth->add_option("--text", text_arg, "utterance literal");
    synth->add_option("--out", out_path, "output WAV path")->required();
    synth->add_option("--trace", trace_path, "trace JSONL path");
    add_common(synth);

    std::string script_path, regime = "moderate", llm = "stub", out_dir = "out";
    int t_init = -1, t_latest = 0;
    auto* converse = app.add_subcommand("converse", "run a scripted conversation");
    converse->add_option("--script", script_path, "user lines, one per line")->required();
    converse->add_option("--regime", regime, "neutral|moderate|extreme");
    converse->add_option("--llm", llm, "stub (regime demo lines) or stub:FILE");
    converse->add_option("--out-dir", out_dir, "output directory");
    converse->add_option("--t-init", t_init, "initial-memory pair capacity");
    converse->add_option("--t-latest", t_latest, "latest-memory pair capacity");
    add_common(converse);

    std::string backends_csv, corpus_dir, report_path;
    auto* compare = app.add_subcommand("compare", "run backends over a corpus");
    compare->add_option("--backends", backends_csv, "comma-separated backend names")->required();
    compare->add_option("--corpus", corpus_dir, "directory of .txt utterances")->required();
    compare->add_option("--report", report_path, "report JSON path (default stdout)");
    add_common(compare);

    std::string assets_dir;
    auto* make_assets = app.add_subcommand("make-assets", "write the default data bundle");
    make_assets->add_option("--out", assets_dir, "target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (parse->parsed()) return cmd_parse(in_path, text_arg, out_path, lenient, common);
        if (synth->parsed()) return cmd_synth(in_path, text_arg, out_path, trace_path, common);
        if (converse->parsed())
            return cmd_converse(script_path, regime, llm, out_dir, t_init, t_latest, common);
        if (compare->parsed()) return cmd_compare(backends_csv, corpus_dir, report_path, common);
        if (make_assets->parsed()) {
            emocue::write_default_assets(assets_dir);
            std::cout << "wrote data bundle to " << assets_dir << "\n";
            return kExitOk;
        }
    } catch (const emocue::UnbalancedAsterisk& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const emocue::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInput;
    } catch (const emocue::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const emocue::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitInput;
}
