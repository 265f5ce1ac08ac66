#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "emocue/disfluency.hpp"
#include "emocue/errors.hpp"

using emocue::find_stutter_tokens;
using emocue::StutterApproach;
using emocue::StutterConfig;
using emocue::StutterToken;

TEST_CASE("stutter tokens are found with offsets, prefixes and words") {
    const auto tokens = find_stutter_tokens("I-I, uh, r-recently");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].pos == 0);
    CHECK(tokens[0].prefix == "I");
    CHECK(tokens[0].word == "I");
    CHECK(tokens[1].pos == 9);
    CHECK(tokens[1].prefix == "r");
    CHECK(tokens[1].word == "recently");
}

TEST_CASE("stutter token edge cases") {
    SECTION("case-insensitive prefix match") {
        const auto t = find_stutter_tokens("W-what now");
        REQUIRE(t.size() == 1);
        CHECK(t[0].prefix == "W");
        CHECK(t[0].word == "what");
    }
    SECTION("multi-letter prefix") {
        const auto t = find_stutter_tokens("wha-what");
        REQUIRE(t.size() == 1);
        CHECK(t[0].prefix == "wha");
    }
    SECTION("prefix longer than three letters is not a stutter") {
        CHECK(find_stutter_tokens("what-whatever").empty());
        CHECK(find_stutter_tokens("well-known").empty());
    }
    SECTION("prefix must actually start the word") {
        CHECK(find_stutter_tokens("ab-cd").empty());
    }
    SECTION("word may contain embedded apostrophes") {
        const auto t = find_stutter_tokens("d-don't worry");
        REQUIRE(t.size() == 1);
        CHECK(t[0].word == "don't");
    }
    SECTION("word must be at least as long as the prefix") {
        CHECK(find_stutter_tokens("re-r").empty());
    }
    SECTION("token must start at a non-letter boundary") {
        CHECK(find_stutter_tokens("xre-rex").empty());
    }
    SECTION("no tokens in plain text") {
        CHECK(find_stutter_tokens("nothing to see here").empty());
    }
}

TEST_CASE("forced rewrite approaches match the golden strings") {
    const StutterToken my{0, "m", "my"};
    const StutterToken recently{0, "r", "recently"};
    CHECK(emocue::rewrite_stutter_as(my, StutterApproach::FullRepeat).text == "my my");
    CHECK(emocue::rewrite_stutter_as(recently, StutterApproach::PartialRepeat).text ==
          "rec recently");
    CHECK(emocue::rewrite_stutter_as(recently, StutterApproach::RestartRepeat).text ==
          "recently... um... recently");
}

TEST_CASE("short words repeat whole without consuming randomness") {
    StutterConfig cfg;
    std::mt19937_64 a(7), b(7);
    const StutterToken tok{0, "m", "my"};
    const auto rw = emocue::rewrite_stutter(tok, cfg, a);
    CHECK(rw.approach == StutterApproach::FullRepeat);
    CHECK(rw.text == "my my");
    CHECK(a() == b()); // no draw happened
}

TEST_CASE("long words draw one bit to pick partial vs restart") {
    StutterConfig cfg;
    const StutterToken tok{0, "r", "recently"};
    std::mt19937_64 probe(99);
    const bool partial = (probe() & 1u) == 0;
    std::mt19937_64 rng(99);
    const auto rw = emocue::rewrite_stutter(tok, cfg, rng);
    if (partial) {
        CHECK(rw.approach == StutterApproach::PartialRepeat);
        CHECK(rw.text == "rec recently");
    } else {
        CHECK(rw.approach == StutterApproach::RestartRepeat);
        CHECK(rw.text == "recently... um... recently");
    }
    // both branches are reachable across seeds
    bool saw_partial = false, saw_restart = false;
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        std::mt19937_64 r(seed);
        const auto w = emocue::rewrite_stutter(tok, cfg, r);
        (w.approach == StutterApproach::PartialRepeat ? saw_partial : saw_restart) = true;
    }
    CHECK(saw_partial);
    CHECK(saw_restart);
}

TEST_CASE("rewriting splices the clean string left to right") {
    StutterConfig cfg;
    SECTION("only short tokens: fully deterministic") {
        std::mt19937_64 rng(1);
        CHECK(emocue::apply_stutter_rewrites("I-I did it, s-so there", cfg, rng) ==
              "I I did it, so so there");
        CHECK(rng() == std::mt19937_64(1)()); // still no draws
    }
    SECTION("surrounding text is preserved verbatim") {
        std::mt19937_64 rng(5);
        const auto out = emocue::apply_stutter_rewrites("well, m-my friend!", cfg, rng);
        CHECK(out == "well, my my friend!");
    }
    SECTION("same seed gives the same rewrite") {
        std::mt19937_64 a(42), b(42);
        const std::string text = "r-recently I w-worked and t-tried";
        CHECK(emocue::apply_stutter_rewrites(text, cfg, a) ==
              emocue::apply_stutter_rewrites(text, cfg, b));
    }
    SECTION("no tokens returns the input unchanged") {
        std::mt19937_64 rng(3);
        CHECK(emocue::apply_stutter_rewrites("plain words", cfg, rng) == "plain words");
    }
}

TEST_CASE("interjection plans validate their parameters") {
    const auto plan = emocue::plan_interjection("uh");
    CHECK(plan.text == "uh");
    CHECK(plan.stretch == 1.3);
    CHECK(plan.pause_ms == 200);
    CHECK_THROWS_AS(emocue::plan_interjection(""), emocue::Error);
    CHECK_THROWS_AS(emocue::plan_interjection("uh", 0.9), emocue::Error);
    CHECK_THROWS_AS(emocue::plan_interjection("uh", 1.3, -1), emocue::Error);
}
