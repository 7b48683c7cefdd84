// Billiard-table words for 2-bridge knots.
//
// A word is a string over {+,-} that alternates in runs of length 1 or 2,
// starts and ends with a run of length 1, and whose total length is 1 mod 3.
// We store only the run-length sequence e_1..e_c; the symbols are implicit
// (run i is '+' for odd i, '-' for even i), and c — the number of runs — is
// the crossing number of the alternating diagram the word encodes.
//
// T(c) is the set of all such words with c runs. Every 2-bridge knot with
// crossing number c is represented by exactly two words of T(c) (a word and
// its reversal, mirrored when c is even), except palindromic-type words,
// which represent their knot alone. Reversal at the symbol level is plain
// run-sequence reversal for both parities, because the alternating signs
// re-anchor themselves on the leading '+'.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/limits.hpp"

namespace twobridge {

class RunWord {
public:
    explicit RunWord(std::vector<std::uint8_t> runs) : runs_(std::move(runs)) {
        if (runs_.size() < static_cast<std::size_t>(limits::min_crossing_number))
            throw std::invalid_argument("word must have at least 3 runs (crossing number >= 3)");
        int total = 0;
        for (std::uint8_t r : runs_) {
            if (r != 1 && r != 2)
                throw std::invalid_argument("run length " + std::to_string(int(r)) +
                                            " > 2 (runs must have length 1 or 2)");
            total += r;
        }
        if (runs_.front() != 1 || runs_.back() != 1)
            throw std::invalid_argument("first and last runs must be single symbols");
        if (total % 3 != 1)
            throw std::invalid_argument("length " + std::to_string(total) +
                                        " != 1 (mod 3)");
    }

    // Parses either a symbol string ("+-++--+", ASCII '-' or U+2212) or a
    // comma-separated run sequence ("1,1,2,2,1").
    static RunWord parse(std::string_view text) {
        if (text.find(',') != std::string_view::npos) return from_runs_string(text);
        return from_symbols(text);
    }

    static RunWord from_symbols(std::string_view word) {
        std::string normalized = normalize_symbols(word);
        if (normalized.empty()) throw std::invalid_argument("empty word");
        if (normalized.front() != '+') throw std::invalid_argument("word must start with '+'");
        std::vector<std::uint8_t> runs;
        char expect = '+';
        std::size_t i = 0;
        while (i < normalized.size()) {
            if (normalized[i] != expect)
                throw std::invalid_argument("symbols must alternate in runs; unexpected '" +
                                            std::string(1, normalized[i]) + "' at position " +
                                            std::to_string(i + 1));
            std::size_t j = i;
            while (j < normalized.size() && normalized[j] == expect) ++j;
            std::size_t len = j - i;
            if (len > 2)
                throw std::invalid_argument("run length " + std::to_string(len) +
                                            " > 2 (runs must have length 1 or 2)");
            runs.push_back(static_cast<std::uint8_t>(len));
            expect = expect == '+' ? '-' : '+';
            i = j;
        }
        return RunWord(std::move(runs));
    }

    static RunWord from_runs_string(std::string_view text) {
        std::vector<std::uint8_t> runs;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            if (tok.empty()) throw std::invalid_argument("empty run entry in run list");
            if (tok.size() != 1 || tok[0] < '0' || tok[0] > '9')
                throw std::invalid_argument("run entry '" + std::string(tok) +
                                            "' is not a digit");
            runs.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return RunWord(std::move(runs));
    }

    int crossing_number() const { return static_cast<int>(runs_.size()); }

    int symbol_length() const {
        int total = 0;
        for (std::uint8_t r : runs_) total += r;
        return total;
    }

    const std::vector<std::uint8_t>& runs() const { return runs_; }

    std::string to_symbols() const {
        std::string out;
        out.reserve(static_cast<std::size_t>(symbol_length()));
        for (std::size_t i = 0; i < runs_.size(); ++i)
            out.append(runs_[i], i % 2 == 0 ? '+' : '-');
        return out;
    }

    std::string runs_string() const {
        std::string out;
        for (std::size_t i = 0; i < runs_.size(); ++i) {
            if (i) out.push_back(',');
            out.push_back(static_cast<char>('0' + runs_[i]));
        }
        return out;
    }

    // w = r(w) (odd c) or w = rbar(w) (even c); both reduce to the run
    // sequence being a palindrome.
    bool is_palindromic_type() const {
        return std::equal(runs_.begin(), runs_.end(), runs_.rbegin());
    }

    // r(w): symbol reversal. A valid T(c) word again only when c is odd;
    // for even c the result would start with '-', which we reject rather
    // than silently renormalize.
    RunWord reversed() const {
        if (crossing_number() % 2 == 0)
            throw std::invalid_argument("reverse of an even-c word starts with '-'; "
                                        "use mirror_reversed");
        return RunWord(reversed_runs());
    }

    // rbar(w): symbol reversal plus sign flip. Valid only when c is even.
    RunWord mirror_reversed() const {
        if (crossing_number() % 2 == 1)
            throw std::invalid_argument("mirror-reverse of an odd-c word starts with '-'; "
                                        "use reversed");
        return RunWord(reversed_runs());
    }

    // The parity-correct involution pairing the two words of a knot.
    RunWord orbit_partner() const {
        return RunWord(reversed_runs());
    }

    friend bool operator==(const RunWord&, const RunWord&) = default;
    friend std::strong_ordering operator<=>(const RunWord& a, const RunWord& b) {
        return a.runs_ <=> b.runs_;
    }

private:
    std::vector<std::uint8_t> runs_;

    std::vector<std::uint8_t> reversed_runs() const {
        return std::vector<std::uint8_t>(runs_.rbegin(), runs_.rend());
    }

    // accepts ASCII '-' and the UTF-8 minus sign U+2212 (0xE2 0x88 0x92)
    static std::string normalize_symbols(std::string_view word) {
        std::string out;
        out.reserve(word.size());
        for (std::size_t i = 0; i < word.size();) {
            unsigned char ch = static_cast<unsigned char>(word[i]);
            if (ch == 0xE2 && i + 2 < word.size() &&
                static_cast<unsigned char>(word[i + 1]) == 0x88 &&
                static_cast<unsigned char>(word[i + 2]) == 0x92) {
                out.push_back('-');
                i += 3;
            } else if (ch == '+' || ch == '-') {
                out.push_back(static_cast<char>(ch));
                ++i;
            } else {
                throw std::invalid_argument("invalid symbol '" + std::string(1, word[i]) +
                                            "' (want '+' or '-')");
            }
        }
        return out;
    }
};

namespace detail {

inline void check_enumeration_range(int c, int cap, const char* what) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument(std::string(what) + ": crossing number must be >= 3");
    if (c > cap)
        throw std::invalid_argument(std::string(what) + ": crossing number " +
                                    std::to_string(c) + " exceeds the configured cap " +
                                    std::to_string(cap));
}

}  // namespace detail

// Visits every word of T(c) in lexicographic order of its run sequence.
// The middle runs e_2..e_{c-1} sweep a binary counter (most significant
// first, 1 before 2); the total-length condition is sum == 1 mod 3, i.e.
// (c + popcount) == 1 mod 3 since each double adds one to the base sum c.
template <typename F>
void for_each_word(int c, F&& visit) {
    detail::check_enumeration_range(c, limits::max_enumeration_c, "for_each_word");
    const int m = c - 2;
    std::vector<std::uint8_t> runs(static_cast<std::size_t>(c), 1);
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << m); ++v) {
        if ((c + std::popcount(v)) % 3 != 1) continue;
        for (int k = 0; k < m; ++k)
            runs[static_cast<std::size_t>(k) + 1] =
                static_cast<std::uint8_t>(1 + ((v >> (m - 1 - k)) & 1));
        visit(RunWord(runs));
    }
}

inline std::vector<RunWord> enumerate_words(int c) {
    std::vector<RunWord> out;
    for_each_word(c, [&](const RunWord& w) { out.push_back(w); });
    return out;
}

// Visits T_p(c) in lexicographic order, generated directly from the free
// half of the run sequence: e_1 = 1 fixed, e_2..e_i free, the rest mirrored
// (c = 2i or 2i+1; odd c also has a middle run forced by the mod-3 length
// condition). Cost O(2^{c/2}) rather than filtering T(c).
template <typename F>
void for_each_palindromic(int c, F&& visit) {
    detail::check_enumeration_range(c, limits::max_palindromic_c, "for_each_palindromic");
    const int half = c / 2;          // i
    const int m = half - 1;          // free slots e_2..e_i
    const bool odd = c % 2 != 0;
    std::vector<std::uint8_t> runs(static_cast<std::size_t>(c), 1);
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << m); ++v) {
        int half_sum = half + std::popcount(v);
        if (odd) {
            int middle = 0;
            if ((2 * half_sum + 1) % 3 == 1) middle = 1;
            else if ((2 * half_sum + 2) % 3 == 1) middle = 2;
            else continue;
            runs[static_cast<std::size_t>(half)] = static_cast<std::uint8_t>(middle);
        } else {
            if ((2 * half_sum) % 3 != 1) continue;
        }
        for (int k = 0; k < m; ++k) {
            std::uint8_t len = static_cast<std::uint8_t>(1 + ((v >> (m - 1 - k)) & 1));
            runs[static_cast<std::size_t>(k) + 1] = len;
            runs[static_cast<std::size_t>(c - 2 - k)] = len;
        }
        visit(RunWord(runs));
    }
}

inline std::vector<RunWord> enumerate_palindromic(int c) {
    std::vector<RunWord> out;
    for_each_palindromic(c, [&](const RunWord& w) { out.push_back(w); });
    return out;
}

// Jacobsthal numbers: J(n) = J(n-1) + 2 J(n-2), J(0) = 0, J(1) = 1,
// closed form (2^n - (-1)^n) / 3.
inline BigInt jacobsthal(int n) {
    if (n < 0) throw std::invalid_argument("jacobsthal: n must be >= 0");
    BigInt numerator = BigInt::pow2(static_cast<unsigned>(n)) - BigInt(n % 2 == 0 ? 1 : -1);
    return exact_div(numerator, BigInt(3), "Jacobsthal closed form");
}

// |T(c)| = J(c-2), no enumeration.
inline BigInt count_words(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("count_words: crossing number must be >= 3");
    return jacobsthal(c - 2);
}

// |T_p(c)| = J((c-2)/2) for even c, J((c-1)/2) for odd c.
inline BigInt count_palindromic(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("count_palindromic: crossing number must be >= 3");
    return jacobsthal(c % 2 == 0 ? (c - 2) / 2 : (c - 1) / 2);
}

// Number of 2-bridge knots with c crossings, chiral pairs counted once.
// Four branches by c mod 4; always equals (|T(c)| + |T_p(c)|) / 2.
inline BigInt ernst_sumners_count(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("ernst_sumners_count: crossing number must be >= 3");
    BigInt main = BigInt::pow2(static_cast<unsigned>(c - 3));
    BigInt half = BigInt::pow2(static_cast<unsigned>(c % 2 == 0 ? (c - 4) / 2 : (c - 3) / 2));
    BigInt numerator = main + half;
    if (c % 4 == 2) numerator = numerator - BigInt(1);
    if (c % 4 == 3) numerator = numerator + BigInt(1);
    return exact_div(numerator, BigInt(3), "Ernst-Sumners count");
}

// The two runs before the final single symbol decide the tail case:
// (1,1) -> 1, (2,2) -> 2, (1,2) -> 3, (2,1) -> 4. These partition T(c).
enum class CaseTag { case1 = 1, case2 = 2, case3 = 3, case4 = 4 };

inline const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::case1: return "1";
        case CaseTag::case2: return "2";
        case CaseTag::case3: return "3";
        case CaseTag::case4: return "4";
    }
    return "?";
}

inline CaseTag classify_case(const RunWord& w) {
    int c = w.crossing_number();
    if (c < 5)
        throw std::invalid_argument("classify_case: needs crossing number >= 5 "
                                    "(penultimate runs must not overlap the first run)");
    int a = w.runs()[static_cast<std::size_t>(c - 3)];
    int b = w.runs()[static_cast<std::size_t>(c - 2)];
    if (a == 1 && b == 1) return CaseTag::case1;
    if (a == 2 && b == 2) return CaseTag::case2;
    if (a == 1 && b == 2) return CaseTag::case3;
    return CaseTag::case4;
}

// Tail replacement rules, by case of the final three runs (the last run is
// always a single):
//   case 1: (1,1,1) -> (2,1)   crossing number c-1
//   case 2: (2,2,1) -> (1,1)   crossing number c-1
//   case 3: (1,2,1) -> (1)     crossing number c-2
//   case 4: (2,1,1) -> (1)     crossing number c-2
// Each rule keeps the symbol length fixed mod 3, so the result is again a
// valid word. Restricted to case 3 (resp. case 4) the map is a bijection
// onto T(c-2).
inline RunWord reduce_tail(const RunWord& w) {
    CaseTag tag = classify_case(w);  // also rejects c < 5
    std::vector<std::uint8_t> head(w.runs().begin(), w.runs().end() - 3);
    switch (tag) {
        case CaseTag::case1: head.push_back(2); head.push_back(1); break;
        case CaseTag::case2: head.push_back(1); head.push_back(1); break;
        case CaseTag::case3:
        case CaseTag::case4: head.push_back(1); break;
    }
    return RunWord(std::move(head));
}

struct KnotClass {
    RunWord representative;  // lexicographically smaller word of the orbit
    int orbit_size;          // 1 (palindromic type) or 2
    bool palindromic;
};

// Partitions T(c) into orbits of the parity-correct involution; one class
// per 2-bridge knot. Emitted in lexicographic order of the representative.
inline std::vector<KnotClass> knot_classes(int c) {
    std::vector<KnotClass> out;
    for_each_word(c, [&](const RunWord& w) {
        const auto& runs = w.runs();
        // keep w only if it is <= its reversal, so each orbit emits once
        if (std::lexicographical_compare(runs.rbegin(), runs.rend(),
                                         runs.begin(), runs.end()))
            return;
        bool pal = w.is_palindromic_type();
        out.push_back(KnotClass{w, pal ? 1 : 2, pal});
    });
    return out;
}

}  // namespace twobridge
