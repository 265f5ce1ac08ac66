#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "emocue/errors.hpp"

#include <json.hpp>

namespace emocue {

enum class Role { System, User, Assistant };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::System: return "system";
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
    }
    return "?";
}

inline Role role_from_name(const std::string& s) {
    if (s == "system") return Role::System;
    if (s == "user") return Role::User;
    if (s == "assistant") return Role::Assistant;
    throw ConfigError("unknown role: " + s);
}

struct Message {
    Role role = Role::User;
    std::string content;
};

struct ExchangePair {
    std::string user, assistant;
};

enum class Regime { Neutral, Moderate, Extreme };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Neutral: return "neutral";
        case Regime::Moderate: return "moderate";
        case Regime::Extreme: return "extreme";
    }
    return "?";
}

inline Regime regime_from_name(const std::string& s) {
    if (s == "neutral") return Regime::Neutral;
    if (s == "moderate") return Regime::Moderate;
    if (s == "extreme") return Regime::Extreme;
    throw ConfigError("unknown regime: " + s);
}

// Substitutes the background slot when the template has one; templates without
// a slot ship verbatim.
inline std::string render_template(std::string tmpl, const std::string& background) {
    static constexpr std::string_view kSlot = "{{BACKGROUND}}";
    const auto at = tmpl.find(kSlot);
    if (at != std::string::npos) tmpl.replace(at, kSlot.size(), background);
    return tmpl;
}

// Three-tier conversation memory: an immutable system background, the first
// t_init exchange pairs kept forever, and a FIFO window of the latest t_latest
// pairs. Thresholds count pairs, not messages.
struct MemoryState {
    std::string background;
    std::vector<ExchangePair> initial;
    std::deque<ExchangePair> latest;
    std::size_t t_init = 3;
    std::size_t t_latest = 4;
    std::string conversation_id = "default";
};

inline MemoryState init_conversation(const std::string& template_text,
                                     const std::string& background_text, std::size_t t_init,
                                     std::size_t t_latest, std::string conversation_id = "default") {
    if (t_latest < 1) throw ConfigError("t_latest must be >= 1");
    MemoryState state;
    state.background = render_template(template_text, background_text);
    state.t_init = t_init;
    state.t_latest = t_latest;
    state.conversation_id = std::move(conversation_id);
    return state;
}

inline void record_exchange(MemoryState& state, const std::string& user_text,
                            const std::string& assistant_text) {
    if (user_text.empty() || assistant_text.empty())
        throw Error("record_exchange: empty message");
    if (state.initial.size() < state.t_init) {
        state.initial.push_back({user_text, assistant_text});
        return;
    }
    state.latest.push_back({user_text, assistant_text});
    while (state.latest.size() > state.t_latest) state.latest.pop_front();
}

inline std::vector<Message> build_payload(const MemoryState& state,
                                          const std::string& new_user_input) {
    std::vector<Message> out;
    out.reserve(2 + 2 * (state.initial.size() + state.latest.size()));
    out.push_back({Role::System, state.background});
    for (const auto& p : state.initial) {
        out.push_back({Role::User, p.user});
        out.push_back({Role::Assistant, p.assistant});
    }
    for (const auto& p : state.latest) {
        out.push_back({Role::User, p.user});
        out.push_back({Role::Assistant, p.assistant});
    }
    out.push_back({Role::User, new_user_input});
    return out;
}

// Chat-model client: request is the ordered payload, response one assistant
// message.
class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual Message complete(const std::vector<Message>& payload) = 0;
};

// Returns pre-scripted assistant lines in order; the test double and the
// offline demo driver.
class ScriptedChatClient : public ChatClient {
public:
    explicit ScriptedChatClient(std::vector<std::string> lines) : lines_(std::move(lines)) {}

    Message complete(const std::vector<Message>&) override {
        if (next_ >= lines_.size()) throw BackendUnavailable("scripted chat client exhausted");
        return {Role::Assistant, lines_[next_++]};
    }

private:
    std::vector<std::string> lines_;
    std::size_t next_ = 0;
};

struct TranscriptTurn {
    std::string user;
    std::string assistant; // empty when failed
    bool failed = false;
    std::string error;
};

// Drives a full scripted conversation through the memory state machine.
// Client failures mark the turn and skip recording; later turns still run.
inline std::vector<TranscriptTurn> run_scripted_conversation(
    const std::vector<std::string>& user_lines, ChatClient& client, MemoryState& state) {
    std::vector<TranscriptTurn> transcript;
    transcript.reserve(user_lines.size());
    for (const auto& user : user_lines) {
        TranscriptTurn turn;
        turn.user = user;
        try {
            const auto payload = build_payload(state, user);
            const Message reply = client.complete(payload);
            turn.assistant = reply.content;
            record_exchange(state, user, reply.content);
        } catch (const Error& e) {
            turn.failed = true;
            turn.error = e.what();
        }
        transcript.push_back(std::move(turn));
    }
    return transcript;
}

namespace detail {

// Single-writer guard per conversation file (POSIX flock).
class FileLock {
public:
    explicit FileLock(const std::filesystem::path& path) {
        fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ < 0) throw IoError("cannot open lock file: " + path.string());
        if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
            ::close(fd_);
            fd_ = -1;
            throw IoError("conversation is locked by another writer: " + path.string());
        }
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

} // namespace detail

// JSONL store: one line per message, tagged with its memory slot.
inline void save_conversation(const MemoryState& state, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto path = dir / (state.conversation_id + ".jsonl");
    detail::FileLock lock(dir / (state.conversation_id + ".lock"));

    const auto ts = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    std::ostringstream out;
    auto line = [&](const char* slot, const char* role, const std::string& content) {
        nlohmann::json j = {{"slot", slot}, {"role", role}, {"content", content}, {"ts", ts}};
        out << j.dump() << "\n";
    };
    line("background", "system", state.background);
    for (const auto& p : state.initial) {
        line("initial", "user", p.user);
        line("initial", "assistant", p.assistant);
    }
    for (const auto& p : state.latest) {
        line("latest", "user", p.user);
        line("latest", "assistant", p.assistant);
    }

    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp);
        f << out.str();
    }
    std::filesystem::rename(tmp, path);
}

inline MemoryState load_conversation(const std::filesystem::path& dir,
                                     const std::string& conversation_id, std::size_t t_init,
                                     std::size_t t_latest) {
    const auto path = dir / (conversation_id + ".jsonl");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open conversation: " + path.string());

    MemoryState state;
    state.t_init = t_init;
    state.t_latest = t_latest;
    state.conversation_id = conversation_id;

    std::string slot_user_slot; // slot of a pending user message
    std::string pending_user;
    bool have_user = false;
    std::string linebuf;
    std::size_t line_no = 0;
    while (std::getline(in, linebuf)) {
        ++line_no;
        if (linebuf.empty()) continue;
        std::string slot, role, content;
        try {
            const nlohmann::json j = nlohmann::json::parse(linebuf);
            slot = j.at("slot").get<std::string>();
            role = j.at("role").get<std::string>();
            content = j.at("content").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (slot == "background") {
            state.background = content;
            continue;
        }
        if (role == "user") {
            pending_user = content;
            slot_user_slot = slot;
            have_user = true;
            continue;
        }
        if (role == "assistant") {
            if (!have_user)
                throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                                  ": assistant message without preceding user message");
            have_user = false;
            if (slot_user_slot == "initial" && state.initial.size() < t_init) {
                state.initial.push_back({pending_user, content});
            } else {
                state.latest.push_back({pending_user, content});
                while (state.latest.size() > t_latest) state.latest.pop_front();
            }
        }
    }
    return state;
}

} // namespace emocue
