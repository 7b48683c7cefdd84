// Per-crossing-number aggregates and the closed forms they must match.
//
// s(c) / s_p(c) are the total Seifert circle counts over T(c) / T_p(c).
// With k = |K_c| knots, the exact averages are
//   avg_seifert = (s(c) + s_p(c)) / (2k)
//   avg_genus   = (1 + c) / 2 - (s(c) + s_p(c)) / (4k) = c/4 + 1/12 + eps(c),
// where eps(c) is an explicit rational depending on c mod 4 that vanishes
// as c grows.

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "twobridge/bigint.hpp"
#include "twobridge/limits.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/seifert.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

struct CrossingStats {
    int c = 0;
    BigInt t;                                  // |T(c)|, tallied by enumeration
    BigInt t_p;                                // |T_p(c)|
    BigInt knot_count;                         // (t + t_p) / 2
    BigInt s_total;                            // Seifert circles over T(c)
    BigInt s_p_total;                          // Seifert circles over T_p(c)
    std::array<BigInt, 4> case_word_counts;    // t_1..t_4 (zero for c < 5)
    std::array<BigInt, 4> case_seifert_totals; // s_1..s_4 (zero for c < 5)
    Rational avg_seifert;
    Rational avg_genus;
    Rational epsilon;
};

// s(c) = ((3c+5) 2^{c-3} + (-1)^c (5-3c)) / 9, exactly.
inline BigInt s_closed_form(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("s_closed_form: crossing number must be >= 3");
    BigInt numerator = BigInt(3 * c + 5) * BigInt::pow2(static_cast<unsigned>(c - 3)) +
                       BigInt(c % 2 == 0 ? 5 - 3 * c : 3 * c - 5);
    return exact_div(numerator, BigInt(9), "s(c) closed form");
}

// s_p(c): ((3c+1) 2^{(c-3)/2} + (-1)^{(c-1)/2} (1-3c)) / 9 for odd c,
//         ((3c+4) 2^{(c-4)/2} + (-1)^{(c-2)/2} (1-3c)) / 9 for even c.
inline BigInt sp_closed_form(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("sp_closed_form: crossing number must be >= 3");
    BigInt numerator;
    if (c % 2 == 1) {
        int sign = ((c - 1) / 2) % 2 == 0 ? 1 : -1;
        numerator = BigInt(3 * c + 1) * BigInt::pow2(static_cast<unsigned>((c - 3) / 2)) +
                    BigInt(sign * (1 - 3 * c));
    } else {
        int sign = ((c - 2) / 2) % 2 == 0 ? 1 : -1;
        numerator = BigInt(3 * c + 4) * BigInt::pow2(static_cast<unsigned>((c - 4) / 2)) +
                    BigInt(sign * (1 - 3 * c));
    }
    return exact_div(numerator, BigInt(9), "s_p(c) closed form");
}

// The exact correction term in avg_genus = c/4 + 1/12 + eps(c), by c mod 4.
inline Rational epsilon(int c) {
    if (c < limits::min_crossing_number)
        throw std::invalid_argument("epsilon: crossing number must be >= 3");
    switch (c % 4) {
        case 0:
            return Rational(BigInt::pow2(static_cast<unsigned>((c - 4) / 2)) - BigInt(4),
                            BigInt(12) * (BigInt::pow2(static_cast<unsigned>(c - 3)) +
                                          BigInt::pow2(static_cast<unsigned>((c - 4) / 2))));
        case 1:
            return Rational(BigInt(1),
                            BigInt(3) * BigInt::pow2(static_cast<unsigned>((c - 3) / 2)));
        case 2:
            return Rational(BigInt::pow2(static_cast<unsigned>((c - 4) / 2)) + BigInt(3 * c - 11),
                            BigInt(12) * (BigInt::pow2(static_cast<unsigned>(c - 3)) +
                                          BigInt::pow2(static_cast<unsigned>((c - 4) / 2)) -
                                          BigInt(1)));
        default:
            return Rational(BigInt::pow2(static_cast<unsigned>((c + 1) / 2)) + BigInt(11 - 3 * c),
                            BigInt(12) * (BigInt::pow2(static_cast<unsigned>(c - 3)) +
                                          BigInt::pow2(static_cast<unsigned>((c - 3) / 2)) +
                                          BigInt(1)));
    }
}

// Full enumeration of T(c) and T_p(c) with Seifert circle counts per word.
// Per-word work is pure and order-independent; the sums are associative.
// TODO: fan the enumeration out over run-sequence prefixes if the caps in
// limits.hpp ever need to move past c ~ 26.
inline CrossingStats aggregate(int c) {
    detail::check_enumeration_range(c, limits::max_enumeration_c, "aggregate");
    CrossingStats st;
    st.c = c;

    long long t = 0, s_total = 0;
    std::array<long long, 4> case_counts{0, 0, 0, 0};
    std::array<long long, 4> case_seifert{0, 0, 0, 0};
    for_each_word(c, [&](const RunWord& w) {
        ++t;
        int s = seifert_state(w).circle_count;
        s_total += s;
        if (c >= 5) {
            int k = static_cast<int>(classify_case(w)) - 1;
            case_counts[static_cast<std::size_t>(k)] += 1;
            case_seifert[static_cast<std::size_t>(k)] += s;
        }
    });

    long long t_p = 0, s_p_total = 0;
    for_each_palindromic(c, [&](const RunWord& w) {
        ++t_p;
        s_p_total += seifert_state(w).circle_count;
    });

    st.t = BigInt(t);
    st.t_p = BigInt(t_p);
    st.knot_count = exact_div(st.t + st.t_p, BigInt(2), "knot count (t + t_p)/2");
    st.s_total = BigInt(s_total);
    st.s_p_total = BigInt(s_p_total);
    for (std::size_t i = 0; i < 4; ++i) {
        st.case_word_counts[i] = BigInt(case_counts[i]);
        st.case_seifert_totals[i] = BigInt(case_seifert[i]);
    }

    Rational circles_sum = Rational(st.s_total + st.s_p_total);
    Rational knots = Rational(st.knot_count);
    st.avg_seifert = circles_sum / (Rational(2) * knots);
    st.avg_genus = Rational(1 + c, 2) - circles_sum / (Rational(4) * knots);
    st.epsilon = epsilon(c);
    return st;
}

// Average genus straight from its definition: one genus per knot class,
// summed and divided by the class count. Kept deliberately separate from
// the Seifert-total route in aggregate() so the two can confirm each other.
inline Rational avg_genus_by_knot_sum(int c) {
    long long genus_sum = 0, classes = 0;
    for (const KnotClass& k : knot_classes(c)) {
        genus_sum += genus(k.representative);
        ++classes;
    }
    return Rational(genus_sum, classes);
}

}  // namespace twobridge
