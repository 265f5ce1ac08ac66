#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "emocue/errors.hpp"
#include "emocue/markup.hpp"

using emocue::parse_utterance;
using emocue::SegmentKind;

namespace {

std::vector<SegmentKind> kinds_of(const emocue::ParsedUtterance& p) {
    std::vector<SegmentKind> out;
    for (const auto& s : p.segments) out.push_back(s.kind);
    return out;
}

} // namespace

TEST_CASE("annotated utterance segments into the golden clean/disfluency lists") {
    const std::string text =
        "  *cries softly*  Um, trying to, you know... but it's... it's hard.";
    const auto p = parse_utterance(text);

    CHECK(p.clean_texts() == std::vector<std::string>{
              "  ", "  ", ", trying to, you know", " but it's", " it's hard."});
    CHECK(p.disfluencies() == std::vector<std::string>{"cries softly", "Um", "...", "..."});

    REQUIRE(p.segments.size() == 9);
    CHECK(kinds_of(p) == std::vector<SegmentKind>{
              SegmentKind::Clean, SegmentKind::EmotionCue, SegmentKind::Clean,
              SegmentKind::Interjection, SegmentKind::Clean, SegmentKind::Pause,
              SegmentKind::Clean, SegmentKind::Pause, SegmentKind::Clean});

    // Spans partition the source.
    std::size_t expect_start = 0;
    for (const auto& s : p.segments) {
        CHECK(s.start == expect_start);
        CHECK(s.end > s.start);
        expect_start = s.end;
    }
    CHECK(expect_start == text.size());
    CHECK(emocue::reconstruct(p) == text);
}

TEST_CASE("cue keeps inner phrase, stutters stay embedded in clean spans") {
    const auto p = parse_utterance("*sighs* I, uh, y-yeah...I'm trying");
    REQUIRE(p.segments.size() == 4);
    CHECK(p.segments[0].kind == SegmentKind::EmotionCue);
    CHECK(p.segments[0].payload == "sighs");
    CHECK(p.segments[1].kind == SegmentKind::Clean);
    CHECK(p.segments[1].payload == " I, uh, y-yeah");
    CHECK(p.segments[2].kind == SegmentKind::Pause);
    CHECK(p.segments[2].pause_dots == 3);
    CHECK(p.segments[3].kind == SegmentKind::Clean);
    CHECK(p.segments[3].payload == "I'm trying");
}

TEST_CASE("interjections are pulled out only at eligible boundaries") {
    SECTION("utterance start") {
        const auto p = parse_utterance("Um, well");
        REQUIRE(p.segments.size() == 2);
        CHECK(p.segments[0].kind == SegmentKind::Interjection);
        CHECK(p.segments[0].payload == "Um");
        CHECK(p.segments[1].payload == ", well");
    }
    SECTION("right after a pause with no whitespace") {
        const auto p = parse_utterance("It...uh...helps");
        REQUIRE(p.segments.size() == 5);
        CHECK(kinds_of(p) == std::vector<SegmentKind>{
                  SegmentKind::Clean, SegmentKind::Pause, SegmentKind::Interjection,
                  SegmentKind::Pause, SegmentKind::Clean});
        CHECK(p.segments[2].payload == "uh");
    }
    SECTION("after a pause with whitespace: the run becomes its own clean segment") {
        const auto p = parse_utterance("You know... right");
        REQUIRE(p.segments.size() == 4);
        CHECK(kinds_of(p) == std::vector<SegmentKind>{
                  SegmentKind::Interjection, SegmentKind::Pause, SegmentKind::Clean,
                  SegmentKind::Interjection});
        CHECK(p.segments[0].payload == "You know");
        CHECK(p.segments[2].payload == " ");
        CHECK(p.segments[3].payload == "right");
    }
    SECTION("mid-sentence fillers stay in the clean text") {
        const auto p = parse_utterance("He said, um, maybe");
        CHECK(p.segments.size() == 1);
        CHECK(p.segments[0].payload == "He said, um, maybe");
    }
    SECTION("no second interjection directly after one") {
        const auto p = parse_utterance("um uh what");
        REQUIRE(p.segments.size() == 2);
        CHECK(p.segments[0].kind == SegmentKind::Interjection);
        CHECK(p.segments[1].kind == SegmentKind::Clean);
        CHECK(p.segments[1].payload == " uh what");
    }
    SECTION("word boundary required") {
        const auto p = parse_utterance("umbrella time");
        CHECK(p.segments.size() == 1);
        CHECK(p.segments[0].kind == SegmentKind::Clean);
    }
    SECTION("longest lexicon match wins") {
        const auto p = parse_utterance("you know what");
        CHECK(p.segments[0].kind == SegmentKind::Interjection);
        CHECK(p.segments[0].payload == "you know");
    }
    SECTION("hyphenated onset is not a filler") {
        const auto p = parse_utterance("U-uh, sure");
        CHECK(p.segments.size() == 1);
        CHECK(p.segments[0].kind == SegmentKind::Clean);
    }
}

TEST_CASE("pause forms: three or more dots, or a single ellipsis character") {
    SECTION("dot run length is preserved") {
        const auto p = parse_utterance("so....yes");
        REQUIRE(p.segments.size() == 3);
        CHECK(p.segments[1].kind == SegmentKind::Pause);
        CHECK(p.segments[1].pause_dots == 4);
        CHECK(p.disfluencies() == std::vector<std::string>{"...."});
    }
    SECTION("two dots are clean text") {
        const auto p = parse_utterance("so..yes");
        CHECK(p.segments.size() == 1);
    }
    SECTION("unicode ellipsis counts as three dots") {
        const auto p = parse_utterance("wait\xE2\x80\xA6 what");
        REQUIRE(p.segments.size() == 3);
        CHECK(p.segments[1].kind == SegmentKind::Pause);
        CHECK(p.segments[1].pause_dots == 3);
        CHECK(p.segments[1].end - p.segments[1].start == 3);
        CHECK(p.disfluencies() == std::vector<std::string>{"..."});
        CHECK(emocue::reconstruct(p) == "wait\xE2\x80\xA6 what");
    }
}

TEST_CASE("unbalanced asterisk: strict throws with position, lenient keeps it literal") {
    try {
        parse_utterance("oops *sighs");
        FAIL("expected UnbalancedAsterisk");
    } catch (const emocue::UnbalancedAsterisk& e) {
        CHECK(e.position == 5);
    }
    const auto p = parse_utterance("oops *sighs", emocue::default_interjection_lexicon(), true);
    CHECK(p.segments.size() == 1);
    CHECK(p.segments[0].payload == "oops *sighs");
}

TEST_CASE("empty input parses to zero segments") {
    const auto p = parse_utterance("");
    CHECK(p.segments.empty());
    CHECK(emocue::reconstruct(p).empty());
}

TEST_CASE("generated annotated strings reconstruct byte-exactly") {
    std::mt19937_64 rng(20240815);
    const std::vector<std::string> words = {"so", "I", "went", "there", "it's",
                                            "hard", "fine", "really", "y-yeah", "w-well"};
    const std::vector<std::string> cues = {"*sighs*", "*cries softly*", "*looks down*",
                                           "*shakes head slightly*"};
    const std::vector<std::string> fillers = {"um", "Uh", "you know", "right"};
    const std::vector<std::string> pauses = {"...", "....", "\xE2\x80\xA6"};

    auto pick = [&](const std::vector<std::string>& v) {
        return v[rng() % v.size()];
    };

    for (int iter = 0; iter < 300; ++iter) {
        std::string text;
        const int pieces = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < pieces; ++i) {
            switch (rng() % 5) {
                case 0: text += pick(cues); break;
                case 1: text += pick(fillers); break;
                case 2: text += pick(pauses); break;
                case 3: text += pick(words); break;
                default: text += " " + pick(words) + (rng() % 2 ? ", " : " "); break;
            }
            if (rng() % 3 == 0) text += " ";
        }
        const auto p = parse_utterance(text);
        REQUIRE(emocue::reconstruct(p) == text);
        std::size_t expect_start = 0;
        for (const auto& s : p.segments) {
            REQUIRE(s.start == expect_start);
            expect_start = s.end;
        }
        REQUIRE(expect_start == text.size());
    }
}
