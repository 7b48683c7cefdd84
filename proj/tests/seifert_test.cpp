#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "twobridge/seifert.hpp"
#include "twobridge/words.hpp"

using namespace twobridge;

namespace {

std::string fast_of(const char* word) {
    RunWord w = RunWord::parse(word);
    AlternatingDiagram d = to_alternating(w);
    return orientation_string(orient_fast(w, d));
}

int circles_of(const RunWord& w) { return seifert_state(w).circle_count; }

}  // namespace

TEST_CASE("fast orientations from the position rules") {
    CHECK(fast_of("+--+") == "HHH");
    CHECK(fast_of("+-+-") == "HVVH");
    CHECK(fast_of("+-++--+") == "HVVHH");
    CHECK(fast_of("+--+--+") == "HHHHH");
}

TEST_CASE("oracle traversal agrees with the fast rules everywhere") {
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            AlternatingDiagram d = to_alternating(w);
            CHECK(orient_fast(w, d) == orient_oracle(d));
        }
}

TEST_CASE("two of the three strands enter oriented rightward") {
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            TraversalResult t = orient_oracle_trace(to_alternating(w));
            int rightward = 0;
            for (int dir : t.left_edge_direction) rightward += dir > 0 ? 1 : 0;
            CHECK(rightward == 2);
        }
}

TEST_CASE("circle counts at the anchors") {
    CHECK(circles_of(RunWord::parse("+--+")) == 2);
    CHECK(circles_of(RunWord::parse("+-+-")) == 3);
    CHECK(circles_of(RunWord::parse("+--+--+")) == 2);
    CHECK(circles_of(RunWord::parse("+-++--+")) == 4);
}

TEST_CASE("genus from the circle count") {
    CHECK(genus(RunWord::parse("+--+")) == 1);     // trefoil
    CHECK(genus(RunWord::parse("+-+-")) == 1);     // figure eight
    CHECK(genus(RunWord::parse("+--+--+")) == 2);  // (2,5) torus knot
}

TEST_CASE("parity, positivity, and observed circle bounds") {
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            int s = circles_of(w);
            CHECK((1 + c - s) % 2 == 0);
            CHECK(genus(w) >= 1);
            CHECK(s >= 2);
            CHECK(s <= c + 1);
        }
}

TEST_CASE("s and genus are invariant under the reversal involution") {
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            RunWord partner = w.orbit_partner();
            CHECK(circles_of(w) == circles_of(partner));
            CHECK(genus(w) == genus(partner));
        }
}

TEST_CASE("tail replacement changes the circle count by the case's delta") {
    for (int c = 5; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            CaseTag tag = classify_case(w);
            if (tag != CaseTag::case3 && tag != CaseTag::case4) continue;
            int delta = circles_of(w) - circles_of(reduce_tail(w));
            CHECK(delta == (tag == CaseTag::case3 ? 0 : 2));
        }
}

TEST_CASE("mismatched inputs are rejected") {
    RunWord w = RunWord::parse("+--+");
    RunWord other = RunWord::parse("+-+-");
    AlternatingDiagram d = to_alternating(w);
    CHECK_THROWS_AS(orient_fast(other, d), std::invalid_argument);
    std::vector<CrossingOrientation> short_orientations(2, CrossingOrientation::horizontal);
    CHECK_THROWS_AS(seifert_circles(d, short_orientations), std::invalid_argument);
}

TEST_CASE("oracle requires a well-formed single-component closure") {
    AlternatingDiagram d = to_alternating(RunWord::parse("+-+-"));
    d.right_closure = RightClosure::bottom_exit;  // contradicts the final s2inv
    CHECK_THROWS_AS(orient_oracle(d), std::invalid_argument);
}
