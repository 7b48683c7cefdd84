#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "twobridge/words.hpp"

using namespace twobridge;

namespace {

RunWord rw(std::initializer_list<std::uint8_t> runs) {
    return RunWord(std::vector<std::uint8_t>(runs));
}

std::vector<std::string> symbol_list(int c) {
    std::vector<std::string> out;
    for (const RunWord& w : enumerate_words(c)) out.push_back(w.to_symbols());
    return out;
}

// the definition straight from the symbols, as an independent cross-check
bool palindromic_by_symbols(const RunWord& w) {
    std::string s = w.to_symbols();
    std::string rev(s.rbegin(), s.rend());
    if (w.crossing_number() % 2 == 1) return s == rev;
    for (char& ch : rev) ch = ch == '+' ? '-' : '+';
    return s == rev;
}

}  // namespace

TEST_CASE("word validation names the violated condition") {
    CHECK_NOTHROW(rw({1, 2, 1}));
    CHECK_THROWS_WITH_AS(RunWord::parse("+-+"), "length 3 != 1 (mod 3)",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(RunWord::parse("+---+"),
                         "run length 3 > 2 (runs must have length 1 or 2)",
                         std::invalid_argument);
    CHECK_THROWS_AS(RunWord::parse("-++-"), std::invalid_argument);   // starts with '-'
    CHECK_THROWS_AS(RunWord::parse("++-+"), std::invalid_argument);   // first run double
    CHECK_THROWS_AS(RunWord::parse("+"), std::invalid_argument);      // c < 3
    CHECK_THROWS_AS(RunWord::parse("+*-+"), std::invalid_argument);   // bad symbol
    CHECK_THROWS_AS(rw({1, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rw({2, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("symbol expansion") {
    CHECK(rw({1, 2, 1}).to_symbols() == "+--+");
    CHECK(rw({1, 1, 2, 2, 1}).to_symbols() == "+-++--+");
    CHECK(rw({1, 1, 1, 1}).to_symbols() == "+-+-");
    CHECK(rw({1, 2, 1}).symbol_length() == 4);
    CHECK(rw({1, 1, 2, 2, 1}).runs_string() == "1,1,2,2,1");
}

TEST_CASE("parsing accepts symbols, run lists, and the unicode minus") {
    CHECK(RunWord::parse("+-++--+") == rw({1, 1, 2, 2, 1}));
    CHECK(RunWord::parse("1,1,2,2,1") == rw({1, 1, 2, 2, 1}));
    CHECK(RunWord::parse("+−−+") == rw({1, 2, 1}));
    for (int c = 3; c <= 10; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            CHECK(RunWord::parse(w.to_symbols()) == w);
            CHECK(RunWord::parse(w.runs_string()) == w);
        }
}

TEST_CASE("enumeration matches the known small sets") {
    CHECK(symbol_list(3) == std::vector<std::string>{"+--+"});
    CHECK(symbol_list(4) == std::vector<std::string>{"+-+-"});
    CHECK(symbol_list(5) == std::vector<std::string>{"+-++--+", "+--+--+", "+--++-+"});
    CHECK(enumerate_words(6).size() == 5);
    CHECK(enumerate_words(7).size() == 11);
    CHECK_THROWS_AS(enumerate_words(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_words(limits::max_enumeration_c + 1), std::invalid_argument);
}

TEST_CASE("enumeration is strictly lexicographic and duplicate-free") {
    for (int c = 3; c <= 12; ++c) {
        std::vector<RunWord> words = enumerate_words(c);
        for (std::size_t i = 1; i < words.size(); ++i)
            CHECK(words[i - 1] < words[i]);
    }
}

TEST_CASE("jacobsthal numbers") {
    CHECK(jacobsthal(0) == BigInt(0));
    CHECK(jacobsthal(1) == BigInt(1));
    CHECK(jacobsthal(5) == BigInt(11));
    CHECK(jacobsthal(10) == BigInt(341));
    CHECK_THROWS_AS(jacobsthal(-1), std::invalid_argument);
    for (int n = 2; n <= 64; ++n)
        CHECK(jacobsthal(n) == jacobsthal(n - 1) + BigInt(2) * jacobsthal(n - 2));
}

TEST_CASE("word counts: closed form equals enumeration") {
    CHECK(count_words(6) == BigInt(5));
    CHECK(count_words(7) == BigInt(11));
    CHECK(count_words(12) == BigInt(341));
    CHECK_THROWS_AS(count_words(2), std::invalid_argument);
    for (int c = 3; c <= 14; ++c) {
        CHECK(BigInt(static_cast<long long>(enumerate_words(c).size())) == count_words(c));
        CHECK(count_words(c) == jacobsthal(c - 2));
    }
    for (int c = 5; c <= 18; ++c)
        CHECK(count_words(c) == count_words(c - 1) + BigInt(2) * count_words(c - 2));
}

TEST_CASE("palindromic enumeration and counts") {
    CHECK(enumerate_palindromic(3).at(0).to_symbols() == "+--+");
    CHECK(enumerate_palindromic(7).size() == 3);
    CHECK(enumerate_palindromic(9).size() == 5);
    CHECK(count_palindromic(5) == BigInt(1));
    CHECK(count_palindromic(6) == BigInt(1));
    CHECK(count_palindromic(9) == BigInt(5));
    CHECK(count_palindromic(10) == BigInt(5));
    for (int c = 3; c <= 24; ++c)
        CHECK(BigInt(static_cast<long long>(enumerate_palindromic(c).size())) ==
              count_palindromic(c));
    for (int c = 7; c <= 24; ++c)
        CHECK(count_palindromic(c) ==
              count_palindromic(c - 2) + BigInt(2) * count_palindromic(c - 4));
    // direct generation equals the filter of T(c), word for word
    for (int c = 3; c <= 18; ++c) {
        std::vector<RunWord> filtered;
        for (const RunWord& w : enumerate_words(c))
            if (w.is_palindromic_type()) filtered.push_back(w);
        CHECK(filtered == enumerate_palindromic(c));
    }
}

TEST_CASE("palindromic type agrees with the symbol-level definition") {
    CHECK(RunWord::parse("+--+--+").is_palindromic_type());
    CHECK(RunWord::parse("+-+-").is_palindromic_type());
    CHECK_FALSE(RunWord::parse("+--++-+").is_palindromic_type());
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c))
            CHECK(w.is_palindromic_type() == palindromic_by_symbols(w));
}

TEST_CASE("reversal involutions respect parity") {
    CHECK(rw({1, 2, 2, 1, 1}).reversed() == rw({1, 1, 2, 2, 1}));
    CHECK(rw({1, 1, 1, 1}).mirror_reversed() == rw({1, 1, 1, 1}));
    CHECK(rw({1, 2, 1}).reversed() == rw({1, 2, 1}));
    CHECK_THROWS_AS(rw({1, 1, 1, 1}).reversed(), std::invalid_argument);
    CHECK_THROWS_AS(rw({1, 2, 1}).mirror_reversed(), std::invalid_argument);
    for (int c = 3; c <= 12; ++c)
        for (const RunWord& w : enumerate_words(c)) {
            CHECK(w.orbit_partner().orbit_partner() == w);
            CHECK(w.is_palindromic_type() == (w.orbit_partner() == w));
        }
}

TEST_CASE("ernst-sumners count") {
    CHECK(ernst_sumners_count(3) == BigInt(1));
    CHECK(ernst_sumners_count(6) == BigInt(3));
    CHECK(ernst_sumners_count(12) == BigInt(176));
    CHECK_THROWS_AS(ernst_sumners_count(2), std::invalid_argument);
    for (int c = 3; c <= 18; ++c)
        CHECK(BigInt(2) * ernst_sumners_count(c) == count_words(c) + count_palindromic(c));
}

TEST_CASE("knot classes partition T(c)") {
    std::vector<KnotClass> k3 = knot_classes(3);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].representative == rw({1, 2, 1}));
    CHECK(k3[0].orbit_size == 1);
    CHECK(k3[0].palindromic);

    std::vector<KnotClass> k5 = knot_classes(5);
    REQUIRE(k5.size() == 2);
    CHECK(k5[0].representative == rw({1, 1, 2, 2, 1}));
    CHECK(k5[0].orbit_size == 2);
    CHECK_FALSE(k5[0].palindromic);
    CHECK(k5[1].representative == rw({1, 2, 1, 2, 1}));
    CHECK(k5[1].orbit_size == 1);

    CHECK(knot_classes(7).size() == 7);
    for (int c = 3; c <= 14; ++c) {
        std::vector<KnotClass> classes = knot_classes(c);
        CHECK(BigInt(static_cast<long long>(classes.size())) == ernst_sumners_count(c));
        long long words_covered = 0;
        for (const KnotClass& k : classes) {
            CHECK(k.palindromic == (k.orbit_size == 1));
            CHECK(k.palindromic == k.representative.is_palindromic_type());
            words_covered += k.orbit_size;
        }
        CHECK(BigInt(words_covered) == count_words(c));
    }
}

TEST_CASE("case classification") {
    CHECK(classify_case(rw({1, 2, 2, 1, 1})) == CaseTag::case4);
    CHECK(classify_case(rw({1, 1, 2, 2, 1})) == CaseTag::case2);
    CHECK(classify_case(rw({1, 2, 1, 2, 1})) == CaseTag::case3);
    CHECK_THROWS_AS(classify_case(rw({1, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(classify_case(rw({1, 1, 1, 1})), std::invalid_argument);

    // census identities against the tallies
    for (int c = 6; c <= 14; ++c) {
        std::array<long long, 4> tally{0, 0, 0, 0};
        for (const RunWord& w : enumerate_words(c))
            tally[static_cast<std::size_t>(static_cast<int>(classify_case(w)) - 1)]++;
        CHECK(BigInt(tally[0]) == BigInt(2) * count_words(c - 3));
        CHECK(BigInt(tally[1]) == count_words(c - 2));
        CHECK(BigInt(tally[2]) == count_words(c - 2));
        CHECK(BigInt(tally[3]) == count_words(c - 2));
    }
}

TEST_CASE("tail reduction follows the four replacement rules") {
    // the c = 6 pairings
    CHECK(reduce_tail(RunWord::parse("+-+-++-")) == RunWord::parse("+-+-"));     // case 3
    CHECK(reduce_tail(RunWord::parse("+-+--+-")) == RunWord::parse("+-+-"));     // case 4
    CHECK(reduce_tail(RunWord::parse("+--++--++-")) == RunWord::parse("+--++-+"));  // case 2
    CHECK(reduce_tail(RunWord::parse("+-++-+-")) == RunWord::parse("+-++--+"));  // case 1
    // a c = 7 pairing ending in case 1: "+-+-+-+" -> "+-+-++-"
    CHECK(reduce_tail(RunWord::parse("+-+-+-+")) == RunWord::parse("+-+-++-"));
    // c = 5
    CHECK(reduce_tail(rw({1, 1, 2, 2, 1})) == rw({1, 1, 1, 1}));
    CHECK(reduce_tail(rw({1, 2, 1, 2, 1})) == rw({1, 2, 1}));
    CHECK(reduce_tail(rw({1, 2, 2, 1, 1})) == rw({1, 2, 1}));
    CHECK_THROWS_AS(reduce_tail(rw({1, 2, 1})), std::invalid_argument);
}

TEST_CASE("tail reduction bijections") {
    for (int c = 5; c <= 16; ++c) {
        std::vector<RunWord> case3, case4, case12;
        for (const RunWord& w : enumerate_words(c)) {
            RunWord red = reduce_tail(w);
            switch (classify_case(w)) {
                case CaseTag::case3: case3.push_back(red); break;
                case CaseTag::case4: case4.push_back(red); break;
                default:
                    CHECK(red.crossing_number() == c - 1);
                    case12.push_back(red);
                    break;
            }
        }
        std::sort(case3.begin(), case3.end());
        std::sort(case4.begin(), case4.end());
        std::sort(case12.begin(), case12.end());
        CHECK(case3 == enumerate_words(c - 2));
        CHECK(case4 == enumerate_words(c - 2));
        CHECK(case12 == enumerate_words(c - 1));  // cases 1 and 2 partition T(c-1)
    }
}
