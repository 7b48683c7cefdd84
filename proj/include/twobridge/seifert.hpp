// Seifert's algorithm on the alternating plat diagrams.
//
// Two independent ways to orient the crossings:
//   - orient_fast reads the orientation off the word: a crossing from a
//     single symbol at 1-based position p is horizontal iff p == 1 mod 3; a
//     crossing from a double at positions (p, p+1) is horizontal iff
//     p == 2 mod 3; everything else is vertical.
//   - orient_oracle traverses the knot from first principles, assigning a
//     direction to every arc segment; a crossing is horizontal iff its two
//     passes run the same horizontal direction, vertical iff they oppose.
// Divergence between the two is a bug by definition, never a tie to break.
//
// Oriented smoothing: a horizontal crossing is replaced by two arcs that
// stay in their rows; a vertical crossing joins its two left ends and its
// two right ends. Circles are counted by union-find over the arc segments.
// Genus of the word's knot: g = (1 + c - s) / 2, always a nonnegative
// integer here.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "twobridge/diagram.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

enum class CrossingOrientation { horizontal, vertical };

inline char orientation_letter(CrossingOrientation o) {
    return o == CrossingOrientation::horizontal ? 'H' : 'V';
}

inline std::string orientation_string(const std::vector<CrossingOrientation>& seq) {
    std::string out;
    out.reserve(seq.size());
    for (CrossingOrientation o : seq) out.push_back(orientation_letter(o));
    return out;
}

// Fast path: the mod-3 position rules applied per run.
inline std::vector<CrossingOrientation> orient_fast(const RunWord& w,
                                                    const AlternatingDiagram& d) {
    if (d.crossing_number() != w.crossing_number())
        throw std::invalid_argument("orient_fast: diagram does not match word");
    std::vector<RunPosition> positions = run_positions(w);
    std::vector<CrossingOrientation> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (d.crossings[i].run_length != positions[i].length)
            throw std::invalid_argument("orient_fast: diagram does not match word");
        bool horizontal = positions[i].length == 1 ? positions[i].start % 3 == 1
                                                   : positions[i].start % 3 == 2;
        out.push_back(horizontal ? CrossingOrientation::horizontal
                                 : CrossingOrientation::vertical);
    }
    return out;
}

struct TraversalResult {
    std::vector<CrossingOrientation> orientations;
    // direction of the left-edge segment in each row (index 0 = bottom row),
    // +1 rightward / -1 leftward, under the canonical orientation that
    // enters the diagram at the bottom left
    std::array<int, 3> left_edge_direction;
};

namespace detail {

inline void record_pass(std::vector<std::array<int, 2>>& passes, std::vector<int>& pass_count,
                        int crossing, int dir) {
    int& count = pass_count[static_cast<std::size_t>(crossing)];
    if (count >= 2)
        throw std::logic_error("orient_oracle: crossing " + std::to_string(crossing) +
                               " passed more than twice");
    passes[static_cast<std::size_t>(crossing)][static_cast<std::size_t>(count++)] = dir;
}

}  // namespace detail

// Ground-truth orientation: walk the single knot component and classify
// each crossing by the horizontal directions of its two passes.
inline TraversalResult orient_oracle_trace(const AlternatingDiagram& d) {
    detail::RightEdge right = detail::right_edge(d);
    if (trace_component_count(d) != 1)
        throw std::invalid_argument("orient_oracle: diagram does not trace to a single "
                                    "component");
    const int c = d.crossing_number();

    // per crossing, horizontal direction of each of the two strands through it
    std::vector<std::array<int, 2>> passes(static_cast<std::size_t>(c), {0, 0});
    std::vector<int> pass_count(static_cast<std::size_t>(c), 0);
    std::array<int, 3> left_dirs{0, 0, 0};

    int row = 1, gap = 0, dir = +1;  // enter at bottom left, heading right
    do {
        if (gap == 0) left_dirs[static_cast<std::size_t>(row - 1)] = dir;
        if (dir > 0) {
            if (gap == c) {
                if (row == right.open_row) {
                    row = 1;       // outer arc back to the bottom-left entry
                    gap = 0;
                } else {
                    row = right.cap_low + right.cap_high - row;
                    dir = -1;
                }
            } else {
                int i = gap;  // crossing between gap and gap+1
                int a = lower_row(d.crossings[static_cast<std::size_t>(i)].gen);
                if (row == a || row == a + 1) {
                    detail::record_pass(passes, pass_count, i, dir);
                    row = row == a ? a + 1 : a;
                }
                ++gap;
            }
        } else {
            if (gap == 0) {
                if (row == 1) {
                    row = right.open_row;  // outer arc, traversed backwards
                    gap = c;
                } else {
                    row = 5 - row;  // left cap joins rows 2 and 3
                    dir = +1;
                }
            } else {
                int i = gap - 1;
                int a = lower_row(d.crossings[static_cast<std::size_t>(i)].gen);
                if (row == a || row == a + 1) {
                    detail::record_pass(passes, pass_count, i, dir);
                    row = row == a ? a + 1 : a;
                }
                --gap;
            }
        }
    } while (!(row == 1 && gap == 0 && dir == +1));

    TraversalResult result;
    result.left_edge_direction = left_dirs;
    result.orientations.reserve(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
        if (pass_count[static_cast<std::size_t>(i)] != 2)
            throw std::logic_error("orient_oracle: crossing " + std::to_string(i) +
                                   " was not crossed exactly twice");
        auto [d1, d2] = passes[static_cast<std::size_t>(i)];
        result.orientations.push_back(d1 == d2 ? CrossingOrientation::horizontal
                                               : CrossingOrientation::vertical);
    }
    return result;
}

inline std::vector<CrossingOrientation> orient_oracle(const AlternatingDiagram& d) {
    return orient_oracle_trace(d).orientations;
}

struct SeifertState {
    std::vector<CrossingOrientation> orientations;
    int circle_count;
};

inline SeifertState seifert_circles(const AlternatingDiagram& d,
                                    std::vector<CrossingOrientation> orientations) {
    detail::RightEdge right = detail::right_edge(d);
    const int c = d.crossing_number();
    if (static_cast<int>(orientations.size()) != c)
        throw std::invalid_argument("seifert_circles: orientation data does not cover "
                                    "every crossing");
    detail::UnionFind uf(3 * (c + 1));
    for (int i = 0; i < c; ++i) {
        int a = lower_row(d.crossings[static_cast<std::size_t>(i)].gen);
        int third = 6 - a - (a + 1);
        uf.unite(detail::segment_id(third, i), detail::segment_id(third, i + 1));
        if (orientations[static_cast<std::size_t>(i)] == CrossingOrientation::horizontal) {
            uf.unite(detail::segment_id(a, i), detail::segment_id(a, i + 1));
            uf.unite(detail::segment_id(a + 1, i), detail::segment_id(a + 1, i + 1));
        } else {
            uf.unite(detail::segment_id(a, i), detail::segment_id(a + 1, i));
            uf.unite(detail::segment_id(a, i + 1), detail::segment_id(a + 1, i + 1));
        }
    }
    uf.unite(detail::segment_id(2, 0), detail::segment_id(3, 0));
    uf.unite(detail::segment_id(right.cap_low, c), detail::segment_id(right.cap_high, c));
    uf.unite(detail::segment_id(1, 0), detail::segment_id(right.open_row, c));

    SeifertState state{std::move(orientations), uf.component_count()};
    if (state.circle_count < 1 || state.circle_count > c + 2)
        throw std::logic_error("seifert_circles: circle count " +
                               std::to_string(state.circle_count) + " out of bounds for c = " +
                               std::to_string(c));
    return state;
}

// End-to-end fast path: word -> diagram -> orientations -> circles.
inline SeifertState seifert_state(const RunWord& w) {
    AlternatingDiagram d = to_alternating(w);
    return seifert_circles(d, orient_fast(w, d));
}

inline int genus(const RunWord& w) {
    int c = w.crossing_number();
    int s = seifert_state(w).circle_count;
    if ((1 + c - s) % 2 != 0)
        throw std::logic_error("genus: 1 + c - s is odd for word " + w.to_symbols() +
                               " (s = " + std::to_string(s) + ")");
    return (1 + c - s) / 2;
}

}  // namespace twobridge
