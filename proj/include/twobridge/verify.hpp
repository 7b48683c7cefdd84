// The identity suite: every recursion, closed form, census and structural
// property the library relies on, run over a crossing-number range and
// reported check by check with the first counterexample found.
//
// Everything enumerable is compared against its closed form in exact
// arithmetic; a failure anywhere is an implementation bug, so the report is
// wired for CI (one line per identity, nonzero exit upstream).

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "twobridge/stats.hpp"

namespace twobridge {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample, empty when passed
};

struct VerifyReport {
    int c_min = 0;
    int c_max = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& ch : checks)
            if (!ch.passed) return false;
        return true;
    }
};

namespace detail {

inline void fail(CheckResult& check, const std::string& detail) {
    if (!check.passed) return;  // keep the first counterexample
    check.passed = false;
    check.detail = detail;
}

inline std::string at_c(int c) { return "c = " + std::to_string(c); }

inline std::string at_word(int c, const RunWord& w, const std::string& extra = "") {
    std::string s = at_c(c) + ", word " + w.to_symbols();
    if (!extra.empty()) s += " (" + extra + ")";
    return s;
}

// One streaming pass over T(c) plus one over T_p(c), gathering every tally
// and per-word check the identity suite needs.
struct PassTallies {
    int c = 0;
    long long t = 0;
    long long t_p_direct = 0;
    long long t_p_in_full = 0;
    long long knot_class_count = 0;
    long long s_total = 0;
    long long s_p_total = 0;
    long long genus_sum = 0;  // over class representatives
    std::array<long long, 4> case_counts{0, 0, 0, 0};
    std::vector<std::vector<std::uint8_t>> case3_reduced;
    std::vector<std::vector<std::uint8_t>> case4_reduced;
};

struct PerWordChecks {
    CheckResult* oracle = nullptr;
    CheckResult* left_edge = nullptr;
    CheckResult* trace = nullptr;
    CheckResult* parity = nullptr;
    CheckResult* orbit = nullptr;
    CheckResult* deltas = nullptr;
    CheckResult* reduction = nullptr;
    CheckResult* involution = nullptr;
    CheckResult* palindromic = nullptr;
};

inline PassTallies run_pass(int c, const PerWordChecks& into) {
    PassTallies out;
    out.c = c;
    for_each_word(c, [&](const RunWord& w) {
        ++out.t;
        AlternatingDiagram d = to_alternating(w);

        if (trace_component_count(d) != 1)
            fail(*into.trace, at_word(c, w, "traces to more than one component"));

        std::vector<CrossingOrientation> fast = orient_fast(w, d);
        TraversalResult oracle = orient_oracle_trace(d);
        if (fast != oracle.orientations)
            fail(*into.oracle, at_word(c, w, "fast " + orientation_string(fast) +
                                                 " vs oracle " +
                                                 orientation_string(oracle.orientations)));
        int rightward = 0;
        for (int dir : oracle.left_edge_direction) rightward += dir > 0 ? 1 : 0;
        if (rightward != 2)
            fail(*into.left_edge,
                 at_word(c, w, std::to_string(rightward) + " strands point rightward"));

        int s = seifert_circles(d, fast).circle_count;
        out.s_total += s;
        if ((1 + c - s) % 2 != 0 || (1 + c - s) / 2 < 1)
            fail(*into.parity, at_word(c, w, "s = " + std::to_string(s)));

        RunWord partner = w.orbit_partner();
        if (partner.orbit_partner() != w)
            fail(*into.involution, at_word(c, w, "involution is not an involution"));
        if (w.is_palindromic_type() != (partner == w))
            fail(*into.involution, at_word(c, w, "palindromic flag and orbit size disagree"));
        if (w.is_palindromic_type()) ++out.t_p_in_full;

        int partner_s = seifert_state(partner).circle_count;
        if (partner_s != s)
            fail(*into.orbit, at_word(c, w, "s " + std::to_string(s) + " vs partner " +
                                                std::to_string(partner_s)));

        const auto& runs = w.runs();
        if (!std::lexicographical_compare(runs.rbegin(), runs.rend(), runs.begin(),
                                          runs.end())) {
            // w is its orbit's representative
            ++out.knot_class_count;
            out.genus_sum += (1 + c - s) / 2;
        }

        if (c >= 5) {
            CaseTag tag = classify_case(w);
            out.case_counts[static_cast<std::size_t>(static_cast<int>(tag) - 1)] += 1;
            try {
                RunWord reduced = reduce_tail(w);
                int expected_c = (tag == CaseTag::case1 || tag == CaseTag::case2) ? c - 1
                                                                                  : c - 2;
                if (reduced.crossing_number() != expected_c)
                    fail(*into.reduction,
                         at_word(c, w, "reduced to crossing number " +
                                           std::to_string(reduced.crossing_number())));
                if (tag == CaseTag::case3 || tag == CaseTag::case4) {
                    int reduced_s = seifert_state(reduced).circle_count;
                    int expected_delta = tag == CaseTag::case3 ? 0 : 2;
                    if (s - reduced_s != expected_delta)
                        fail(*into.deltas,
                             at_word(c, w, "case " + std::string(case_name(tag)) + " delta " +
                                               std::to_string(s - reduced_s)));
                    (tag == CaseTag::case3 ? out.case3_reduced : out.case4_reduced)
                        .push_back(reduced.runs());
                }
            } catch (const std::exception& e) {
                fail(*into.reduction, at_word(c, w, e.what()));
            }
        }
    });

    for_each_palindromic(c, [&](const RunWord& w) {
        ++out.t_p_direct;
        if (!w.is_palindromic_type())
            fail(*into.palindromic, at_word(c, w, "direct enumeration emitted a "
                                                  "non-palindromic word"));
        out.s_p_total += seifert_state(w).circle_count;
    });
    return out;
}

}  // namespace detail

inline VerifyReport verify_all(int c_min, int c_max) {
    detail::check_enumeration_range(c_min, limits::max_enumeration_c, "verify_all");
    detail::check_enumeration_range(c_max, limits::max_enumeration_c, "verify_all");
    if (c_min > c_max) throw std::invalid_argument("verify_all: c_min > c_max");

    VerifyReport report;
    report.c_min = c_min;
    report.c_max = c_max;
    auto& checks = report.checks;
    checks.reserve(21);
    auto add = [&](const char* name) -> CheckResult& {
        checks.push_back(CheckResult{name, true, ""});
        return checks.back();
    };

    CheckResult& word_count = add("word count matches closed form t(c)");
    CheckResult& word_recursion = add("word count recursion t(c) = t(c-1) + 2t(c-2)");
    CheckResult& pal_count = add("palindromic count matches closed form t_p(c)");
    CheckResult& pal_recursion = add("palindromic count recursion t_p(c) = t_p(c-2) + 2t_p(c-4)");
    CheckResult& pal_consistency = add("palindromic direct enumeration matches filter of T(c)");
    CheckResult& knot_count = add("knot class count matches Ernst-Sumners and (t + t_p)/2");
    CheckResult& census = add("case census t1 = 2t(c-3), t2 = t3 = t4 = t(c-2)");
    CheckResult& reduction = add("tail reduction validity");
    CheckResult& bijection = add("case 3/4 reductions biject onto T(c-2)");
    CheckResult& involution = add("reversal involution and palindromic orbit sizes");
    CheckResult& oracle = add("orient_fast == orient_oracle");
    CheckResult& left_edge = add("two of three left-edge strands oriented rightward");
    CheckResult& trace = add("every word traces to a single component");
    CheckResult& parity = add("1 + c - s even and genus >= 1");
    CheckResult& orbit = add("s invariant under the reversal involution");
    CheckResult& deltas = add("case 3/4 Seifert deltas (0 / +2)");
    CheckResult& s_closed = add("Seifert total matches closed form s(c)");
    CheckResult& s_recursion = add("Seifert recursion s(c) = s(c-1) + 2s(c-2) + 3t(c-2)");
    CheckResult& sp_closed = add("palindromic Seifert total matches closed form s_p(c)");
    CheckResult& sp_recursion =
        add("palindromic Seifert recursion s_p(c) = s_p(c-2) + 2s_p(c-4) + 6t_p(c-4)");
    CheckResult& avg = add("average genus equals c/4 + 1/12 + eps(c) by both routes");
    CheckResult& decay = add("epsilon decay bound eps(c)^2 < 2^(10-c)");

    detail::PerWordChecks per_word;
    per_word.oracle = &oracle;
    per_word.left_edge = &left_edge;
    per_word.trace = &trace;
    per_word.parity = &parity;
    per_word.orbit = &orbit;
    per_word.deltas = &deltas;
    per_word.reduction = &reduction;
    per_word.involution = &involution;
    per_word.palindromic = &pal_consistency;

    for (int c = c_min; c <= c_max; ++c) {
        detail::PassTallies tallies = detail::run_pass(c, per_word);

        if (BigInt(tallies.t) != count_words(c))
            detail::fail(word_count, detail::at_c(c) + ": enumerated " +
                                         std::to_string(tallies.t) + ", closed form " +
                                         count_words(c).to_string());
        if (c >= 5 && count_words(c) != count_words(c - 1) + BigInt(2) * count_words(c - 2))
            detail::fail(word_recursion, detail::at_c(c));

        if (BigInt(tallies.t_p_direct) != count_palindromic(c))
            detail::fail(pal_count, detail::at_c(c) + ": enumerated " +
                                        std::to_string(tallies.t_p_direct) + ", closed form " +
                                        count_palindromic(c).to_string());
        if (c >= 7 &&
            count_palindromic(c) !=
                count_palindromic(c - 2) + BigInt(2) * count_palindromic(c - 4))
            detail::fail(pal_recursion, detail::at_c(c));
        if (tallies.t_p_direct != tallies.t_p_in_full)
            detail::fail(pal_consistency,
                         detail::at_c(c) + ": direct " + std::to_string(tallies.t_p_direct) +
                             ", filtered " + std::to_string(tallies.t_p_in_full));

        BigInt expected_classes = ernst_sumners_count(c);
        if (BigInt(tallies.knot_class_count) != expected_classes ||
            BigInt(2) * expected_classes != BigInt(tallies.t + tallies.t_p_direct))
            detail::fail(knot_count, detail::at_c(c) + ": orbits " +
                                         std::to_string(tallies.knot_class_count) +
                                         ", Ernst-Sumners " + expected_classes.to_string());

        if (c >= 6) {
            if (BigInt(tallies.case_counts[0]) != BigInt(2) * count_words(c - 3))
                detail::fail(census, detail::at_c(c) + ": t1 = " +
                                         std::to_string(tallies.case_counts[0]));
            for (std::size_t k = 1; k < 4; ++k)
                if (BigInt(tallies.case_counts[k]) != count_words(c - 2))
                    detail::fail(census,
                                 detail::at_c(c) + ": t" + std::to_string(k + 1) + " = " +
                                     std::to_string(tallies.case_counts[k]));
        }

        if (c >= 5) {
            std::vector<std::vector<std::uint8_t>> expected;
            for_each_word(c - 2, [&](const RunWord& w) { expected.push_back(w.runs()); });
            for (auto* reduced : {&tallies.case3_reduced, &tallies.case4_reduced}) {
                std::sort(reduced->begin(), reduced->end());
                if (*reduced != expected)
                    detail::fail(bijection,
                                 detail::at_c(c) + ": reductions are not exactly T(c-2)");
            }
        }

        if (BigInt(tallies.s_total) != s_closed_form(c))
            detail::fail(s_closed, detail::at_c(c) + ": enumerated " +
                                       std::to_string(tallies.s_total) + ", closed form " +
                                       s_closed_form(c).to_string());
        if (c >= 5 && s_closed_form(c) != s_closed_form(c - 1) + BigInt(2) * s_closed_form(c - 2) +
                          BigInt(3) * count_words(c - 2))
            detail::fail(s_recursion, detail::at_c(c));

        if (BigInt(tallies.s_p_total) != sp_closed_form(c))
            detail::fail(sp_closed, detail::at_c(c) + ": enumerated " +
                                        std::to_string(tallies.s_p_total) + ", closed form " +
                                        sp_closed_form(c).to_string());
        if (c >= 7 &&
            sp_closed_form(c) != sp_closed_form(c - 2) + BigInt(2) * sp_closed_form(c - 4) +
                                     BigInt(6) * count_palindromic(c - 4))
            detail::fail(sp_recursion, detail::at_c(c));

        Rational knots(tallies.t + tallies.t_p_direct, 2);
        Rational s_route = Rational(1 + c, 2) -
                           Rational(BigInt(tallies.s_total + tallies.s_p_total)) /
                               (Rational(4) * knots);
        Rational class_route(BigInt(tallies.genus_sum), BigInt(tallies.knot_class_count));
        Rational theorem = Rational(c, 4) + Rational(1, 12) + epsilon(c);
        if (s_route != theorem || class_route != theorem)
            detail::fail(avg, detail::at_c(c) + ": s-route " + s_route.to_string() +
                                  ", class-route " + class_route.to_string() + ", theorem " +
                                  theorem.to_string());

        Rational eps = epsilon(c);
        Rational bound = c >= 10 ? Rational(BigInt(1), BigInt::pow2(static_cast<unsigned>(c - 10)))
                                 : Rational(BigInt::pow2(static_cast<unsigned>(10 - c)));
        if (!(eps * eps < bound))
            detail::fail(decay, detail::at_c(c) + ": eps = " + eps.to_string());
    }

    return report;
}

}  // namespace twobridge
