// Command-line front end: enumerate words, inspect a single word, aggregate
// per-c statistics, and run the identity verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twobridge/diagram.hpp"
#include "twobridge/limits.hpp"
#include "twobridge/seifert.hpp"
#include "twobridge/stats.hpp"
#include "twobridge/verify.hpp"
#include "twobridge/words.hpp"

namespace {

using nlohmann::json;
using namespace twobridge;

struct WordRecord {
    std::string word;
    int c;
    int length;
    int s;
    int genus;
    int case_tag;  // 0 when undefined (c < 5)
    bool palindromic;
};

WordRecord make_record(const RunWord& w) {
    WordRecord rec;
    rec.word = w.to_symbols();
    rec.c = w.crossing_number();
    rec.length = w.symbol_length();
    rec.s = seifert_state(w).circle_count;
    rec.genus = (1 + rec.c - rec.s) / 2;
    rec.case_tag = rec.c >= 5 ? static_cast<int>(classify_case(w)) : 0;
    rec.palindromic = w.is_palindromic_type();
    return rec;
}

void print_record_csv_row(const WordRecord& rec) {
    std::cout << rec.word << ',' << rec.c << ',' << rec.length << ',' << rec.s << ','
              << rec.genus << ',' << (rec.case_tag ? std::to_string(rec.case_tag) : "-") << ','
              << (rec.palindromic ? "true" : "false") << '\n';
}

json record_to_json(const WordRecord& rec) {
    json j;
    j["word"] = rec.word;
    j["c"] = rec.c;
    j["length"] = rec.length;
    j["s"] = rec.s;
    j["genus"] = rec.genus;
    if (rec.case_tag)
        j["case"] = rec.case_tag;
    else
        j["case"] = nullptr;
    j["palindromic"] = rec.palindromic;
    return j;
}

int cmd_enumerate(int c, bool palindromic, const std::string& format) {
    std::vector<RunWord> words =
        palindromic ? enumerate_palindromic(c) : enumerate_words(c);
    if (format == "json") {
        json arr = json::array();
        for (const RunWord& w : words) arr.push_back(record_to_json(make_record(w)));
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << "word,c,length,s,genus,case,palindromic\n";
        for (const RunWord& w : words) print_record_csv_row(make_record(w));
    }
    return 0;
}

int cmd_word(const std::string& text, const std::string& format) {
    RunWord w = RunWord::parse(text);
    AlternatingDiagram d = to_alternating(w);
    std::vector<CrossingOrientation> orientations = orient_fast(w, d);
    SeifertState state = seifert_circles(d, orientations);
    WordRecord rec = make_record(w);

    if (format == "json") {
        json j = record_to_json(rec);
        j["runs"] = w.runs_string();
        json gens = json::array();
        for (const DiagramCrossing& cr : d.crossings) gens.push_back(generator_name(cr.gen));
        j["generators"] = gens;
        j["right_closure"] = right_closure_name(d.right_closure);
        j["orientations"] = orientation_string(state.orientations);
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    std::cout << "word:          " << rec.word << '\n'
              << "runs:          " << w.runs_string() << '\n'
              << "crossings:     " << rec.c << '\n'
              << "length:        " << rec.length << '\n';
    std::cout << "generators:    ";
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
        std::cout << (i ? "," : "") << generator_name(d.crossings[i].gen);
    std::cout << '\n'
              << "right closure: " << right_closure_name(d.right_closure) << '\n'
              << "orientations:  " << orientation_string(state.orientations) << '\n'
              << "seifert circles: " << state.circle_count << '\n'
              << "genus:         " << rec.genus << '\n'
              << "case:          " << (rec.case_tag ? std::to_string(rec.case_tag) : "-") << '\n'
              << "palindromic:   " << (rec.palindromic ? "true" : "false") << '\n';
    return 0;
}

json stats_to_json(const CrossingStats& st) {
    json j;
    j["c"] = st.c;
    j["t"] = st.t.to_int64();
    j["t_p"] = st.t_p.to_int64();
    j["knots"] = st.knot_count.to_int64();
    j["s_total"] = st.s_total.to_int64();
    j["s_p_total"] = st.s_p_total.to_int64();
    for (std::size_t k = 0; k < 4; ++k) {
        std::string n = std::to_string(k + 1);
        j["t" + n] = st.case_word_counts[k].to_int64();
        j["s" + n + "_total"] = st.case_seifert_totals[k].to_int64();
    }
    j["avg_seifert"] = st.avg_seifert.to_string();
    j["avg_genus"] = st.avg_genus.to_string();
    j["epsilon"] = st.epsilon.to_string();
    return j;
}

int cmd_stats(int c_min, int c_max, const std::string& format) {
    if (c_min < limits::min_crossing_number || c_min > c_max)
        throw std::invalid_argument("stats: need 3 <= min <= max");
    if (format == "json") {
        json arr = json::array();
        for (int c = c_min; c <= c_max; ++c) arr.push_back(stats_to_json(aggregate(c)));
        std::cout << arr.dump(2) << '\n';
        return 0;
    }
    std::cout << "c,t,t_p,knots,s_total,s_p_total,avg_seifert,avg_genus,epsilon\n";
    for (int c = c_min; c <= c_max; ++c) {
        CrossingStats st = aggregate(c);
        std::cout << st.c << ',' << st.t << ',' << st.t_p << ',' << st.knot_count << ','
                  << st.s_total << ',' << st.s_p_total << ',' << st.avg_seifert << ','
                  << st.avg_genus << ',' << st.epsilon << '\n';
    }
    return 0;
}

int cmd_verify(int c_min, int c_max, const std::string& format) {
    if (c_min < limits::min_crossing_number || c_min > c_max)
        throw std::invalid_argument("verify: need 3 <= min <= max");
    VerifyReport report = verify_all(c_min, c_max);
    if (format == "json") {
        json j;
        j["c_min"] = report.c_min;
        j["c_max"] = report.c_max;
        j["all_passed"] = report.all_passed();
        json arr = json::array();
        for (const CheckResult& ch : report.checks) {
            json e;
            e["name"] = ch.name;
            e["passed"] = ch.passed;
            e["detail"] = ch.detail;
            arr.push_back(e);
        }
        j["checks"] = arr;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "verifying identities for c in [" << report.c_min << ", " << report.c_max
                  << "]\n";
        for (const CheckResult& ch : report.checks) {
            std::cout << ch.name << ": " << (ch.passed ? "PASS" : "FAIL");
            if (!ch.passed) std::cout << "  [" << ch.detail << "]";
            std::cout << '\n';
        }
        std::cout << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-bridge knot enumeration, Seifert genus, and exact statistics"};
    app.require_subcommand(1);

    int enum_c = 0;
    bool enum_palindromic = false;
    std::string enum_format = "csv";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list the words for one crossing number");
    enumerate->add_option("-c,--crossings", enum_c, "crossing number")->required();
    enumerate->add_flag("--palindromic", enum_palindromic, "palindromic-type words only");
    enumerate->add_option("--format", enum_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string word_text;
    std::string word_format = "text";
    CLI::App* word = app.add_subcommand("word", "inspect a single word");
    word->add_option("word", word_text, "symbol string (+-++--+) or run list (1,1,2,2,1)")
        ->required();
    word->add_option("--format", word_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int stats_min = limits::min_crossing_number;
    int stats_max = 8;
    std::string stats_format = "csv";
    CLI::App* stats = app.add_subcommand("stats", "aggregate statistics per crossing number");
    stats->add_option("--min", stats_min, "smallest crossing number");
    stats->add_option("--max", stats_max, "largest crossing number");
    stats->add_option("--format", stats_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    int verify_min = limits::default_verify_min;
    int verify_max = limits::default_verify_max;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--min", verify_min, "smallest crossing number");
    verify->add_option("--max", verify_max, "largest crossing number");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(enum_c, enum_palindromic, enum_format);
        if (app.got_subcommand(word)) return cmd_word(word_text, word_format);
        if (app.got_subcommand(stats)) return cmd_stats(stats_min, stats_max, stats_format);
        return cmd_verify(verify_min, verify_max, verify_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
