// Alternating plat diagrams built from billiard words.
//
// Layout convention (fixed throughout the library):
//   - three horizontal strand rows, 1 = bottom, 2 = middle, 3 = top;
//   - c crossings left to right, one per run; s1 acts on rows (1,2),
//     s2inv on rows (2,3);
//   - left edge: the knot enters at row 1, a cap joins rows 2-3;
//   - right edge: if the last crossing is s1, the open end exits at row 1
//     and a cap joins rows 2-3; if it is s2inv, the open end exits at row 3
//     and a cap joins rows 1-2;
//   - an undrawn outer arc joins the two open ends.
//
// Run -> crossing map: a single '+' or a double '--' becomes s1; a double
// '++' or a single '-' becomes s2inv.

#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "twobridge/words.hpp"

namespace twobridge {

enum class Generator { s1, s2inv };

inline const char* generator_name(Generator g) { return g == Generator::s1 ? "s1" : "s2i"; }

// row index of the lower of the two strands a crossing swaps
inline int lower_row(Generator g) { return g == Generator::s1 ? 1 : 2; }

enum class RightClosure { bottom_exit, top_exit };

inline const char* right_closure_name(RightClosure rc) {
    return rc == RightClosure::bottom_exit ? "bottom-exit" : "top-exit";
}

struct DiagramCrossing {
    Generator gen;
    int run_index;   // 0-based index of the run this crossing came from
    int run_length;  // 1 or 2
};

struct AlternatingDiagram {
    std::vector<DiagramCrossing> crossings;
    RightClosure right_closure;

    int crossing_number() const { return static_cast<int>(crossings.size()); }
};

inline AlternatingDiagram to_alternating(const RunWord& w) {
    AlternatingDiagram d;
    const auto& runs = w.runs();
    d.crossings.reserve(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        bool plus = i % 2 == 0;
        bool single = runs[i] == 1;
        Generator g = (plus == single) ? Generator::s1 : Generator::s2inv;
        d.crossings.push_back(DiagramCrossing{g, static_cast<int>(i), int(runs[i])});
    }
    d.right_closure = d.crossings.back().gen == Generator::s1 ? RightClosure::bottom_exit
                                                              : RightClosure::top_exit;
    return d;
}

struct RunPosition {
    int start;   // 1-based position of the run's first symbol in the word
    int length;  // 1 or 2
};

inline std::vector<RunPosition> run_positions(const RunWord& w) {
    std::vector<RunPosition> out;
    out.reserve(w.runs().size());
    int pos = 1;
    for (std::uint8_t r : w.runs()) {
        out.push_back(RunPosition{pos, int(r)});
        pos += r;
    }
    return out;
}

namespace detail {

// rows of the right-edge cap and the right open end
struct RightEdge {
    int cap_low, cap_high, open_row;
};

inline RightEdge right_edge(const AlternatingDiagram& d) {
    if (d.crossings.empty())
        throw std::invalid_argument("malformed closure: diagram has no crossings");
    Generator last = d.crossings.back().gen;
    RightClosure expected = last == Generator::s1 ? RightClosure::bottom_exit
                                                  : RightClosure::top_exit;
    if (d.right_closure != expected)
        throw std::invalid_argument("malformed closure: right closure does not match "
                                    "the final crossing");
    return last == Generator::s1 ? RightEdge{2, 3, 1} : RightEdge{1, 2, 3};
}

// Segment ids: segment (row, gap) is the horizontal arc of `row` between
// crossings `gap` and `gap+1` (gap 0 left of the first crossing, gap c right
// of the last). Numbered left to right, bottom to top, so downstream
// summaries are reproducible.
inline int segment_id(int row, int gap) { return gap * 3 + (row - 1); }

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }
    int component_count() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

// Number of closed curves when the diagram is traced through its crossings
// (strands pass straight through a crossing, they do not merge), caps, and
// the outer arc. Equals 1 exactly when the diagram closes to a knot.
inline int trace_component_count(const AlternatingDiagram& d) {
    detail::RightEdge right = detail::right_edge(d);
    const int c = d.crossing_number();
    detail::UnionFind uf(3 * (c + 1));
    for (int i = 0; i < c; ++i) {
        int a = lower_row(d.crossings[static_cast<std::size_t>(i)].gen);
        int third = 6 - a - (a + 1);
        uf.unite(detail::segment_id(a, i), detail::segment_id(a + 1, i + 1));
        uf.unite(detail::segment_id(a + 1, i), detail::segment_id(a, i + 1));
        uf.unite(detail::segment_id(third, i), detail::segment_id(third, i + 1));
    }
    uf.unite(detail::segment_id(2, 0), detail::segment_id(3, 0));                 // left cap
    uf.unite(detail::segment_id(right.cap_low, c), detail::segment_id(right.cap_high, c));
    uf.unite(detail::segment_id(1, 0), detail::segment_id(right.open_row, c));    // outer arc
    return uf.component_count();
}

}  // namespace twobridge
