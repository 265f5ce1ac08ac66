#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "emocue/errors.hpp"
#include "emocue/textutil.hpp"

namespace emocue {

enum class SegmentKind { Clean, EmotionCue, Interjection, Stutter, Pause };

inline const char* segment_kind_name(SegmentKind k) {
    switch (k) {
        case SegmentKind::Clean: return "clean";
        case SegmentKind::EmotionCue: return "cue";
        case SegmentKind::Interjection: return "interjection";
        case SegmentKind::Stutter: return "stutter";
        case SegmentKind::Pause: return "pause";
    }
    return "?";
}

struct Segment {
    SegmentKind kind = SegmentKind::Clean;
    std::size_t start = 0; // [start, end) into the source text
    std::size_t end = 0;
    std::string payload;   // Clean: verbatim text; EmotionCue: phrase without
                           // asterisks; Interjection: filler as written
    int pause_dots = 0;    // Pause only
    std::string stutter_prefix, stutter_word; // Stutter only; parse_utterance
                                              // never emits this kind (stutters
                                              // stay embedded in Clean spans)
};

struct ParsedUtterance {
    std::string source;
    std::vector<Segment> segments;

    std::vector<std::string> clean_texts() const {
        std::vector<std::string> out;
        for (const auto& s : segments)
            if (s.kind == SegmentKind::Clean) out.push_back(s.payload);
        return out;
    }

    std::vector<std::string> disfluencies() const {
        std::vector<std::string> out;
        for (const auto& s : segments) {
            switch (s.kind) {
                case SegmentKind::Clean: break;
                case SegmentKind::Pause: out.push_back(std::string(static_cast<std::size_t>(s.pause_dots), '.')); break;
                default: out.push_back(s.payload); break;
            }
        }
        return out;
    }
};

inline std::vector<std::string> default_interjection_lexicon() {
    return {"uh", "um", "you know", "I mean", "like", "right"};
}

namespace detail {

// U+2026 horizontal ellipsis, UTF-8 E2 80 A6.
inline bool is_ellipsis_at(std::string_view s, std::size_t p) {
    return p + 3 <= s.size() && static_cast<unsigned char>(s[p]) == 0xE2 &&
           static_cast<unsigned char>(s[p + 1]) == 0x80 &&
           static_cast<unsigned char>(s[p + 2]) == 0xA6;
}

// Longest case-insensitive lexicon match at p with a word boundary after it
// (next char is not a letter). Returns matched length, 0 if none.
inline std::size_t match_interjection(std::string_view s, std::size_t p,
                                      const std::vector<std::string>& lexicon) {
    std::size_t best = 0;
    for (const auto& entry : lexicon) {
        if (entry.empty() || entry.size() > s.size() - p || entry.size() <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < entry.size(); ++i) {
            if (ascii_lower(s[p + i]) != ascii_lower(entry[i])) { ok = false; break; }
        }
        if (!ok) continue;
        const std::size_t after = p + entry.size();
        if (after < s.size() && is_ascii_letter(s[after])) continue;
        best = entry.size();
    }
    return best;
}

} // namespace detail

// Lossless segmentation: spans partition the source, concatenation of spans
// reproduces it byte-for-byte. Interjections are pulled out only at the start
// of the utterance or right after a cue/pause; an intervening whitespace run
// becomes its own Clean segment. Mid-sentence fillers stay in Clean text.
inline ParsedUtterance parse_utterance(std::string_view text,
                                       const std::vector<std::string>& lexicon = default_interjection_lexicon(),
                                       bool lenient = false) {
    using namespace detail;
    ParsedUtterance out;
    out.source.assign(text);

    const std::size_t n = text.size();
    std::size_t clean_begin = 0;
    std::size_t pos = 0;
    bool at_boundary = true; // utterance start / just closed a cue or pause

    auto flush_clean = [&](std::size_t upto) {
        if (upto > clean_begin) {
            Segment seg;
            seg.kind = SegmentKind::Clean;
            seg.start = clean_begin;
            seg.end = upto;
            seg.payload.assign(text.substr(clean_begin, upto - clean_begin));
            out.segments.push_back(seg);
        }
    };

    while (pos < n) {
        if (at_boundary) {
            at_boundary = false;
            std::size_t w = pos;
            while (w < n && is_ws(text[w])) ++w;
            const std::size_t len = w < n ? match_interjection(text, w, lexicon) : 0;
            if (len > 0) {
                flush_clean(w);
                Segment seg;
                seg.kind = SegmentKind::Interjection;
                seg.start = w;
                seg.end = w + len;
                seg.payload.assign(text.substr(w, len));
                out.segments.push_back(seg);
                pos = w + len;
                clean_begin = pos;
                continue;
            }
        }
        const char c = text[pos];
        if (c == '*') {
            const std::size_t close = text.find('*', pos + 1);
            if (close == std::string_view::npos) {
                if (!lenient) throw UnbalancedAsterisk(pos);
                ++pos; // literal asterisk stays in the clean run
                continue;
            }
            flush_clean(pos);
            Segment seg;
            seg.kind = SegmentKind::EmotionCue;
            seg.start = pos;
            seg.end = close + 1;
            seg.payload.assign(text.substr(pos + 1, close - pos - 1));
            out.segments.push_back(seg);
            pos = close + 1;
            clean_begin = pos;
            at_boundary = true;
            continue;
        }
        if (c == '.') {
            std::size_t run = pos;
            while (run < n && text[run] == '.') ++run;
            if (run - pos >= 3) {
                flush_clean(pos);
                Segment seg;
                seg.kind = SegmentKind::Pause;
                seg.start = pos;
                seg.end = run;
                seg.pause_dots = static_cast<int>(run - pos);
                out.segments.push_back(seg);
                pos = run;
                clean_begin = pos;
                at_boundary = true;
                continue;
            }
            pos = run;
            continue;
        }
        if (is_ellipsis_at(text, pos)) {
            flush_clean(pos);
            Segment seg;
            seg.kind = SegmentKind::Pause;
            seg.start = pos;
            seg.end = pos + 3;
            seg.pause_dots = 3;
            out.segments.push_back(seg);
            pos += 3;
            clean_begin = pos;
            at_boundary = true;
            continue;
        }
        ++pos;
    }
    flush_clean(n);
    return out;
}

inline std::string reconstruct(const ParsedUtterance& parsed) {
    std::string out;
    out.reserve(parsed.source.size());
    for (const auto& s : parsed.segments)
        out.append(parsed.source, s.start, s.end - s.start);
    return out;
}

} // namespace emocue
