#ifndef RTILDE_DIAGRAMS_HPP
#define RTILDE_DIAGRAMS_HPP

#include "rtilde/coxeter.hpp"
#include "rtilde/lightleaves.hpp"

#include <string>
#include <vector>

namespace rtilde {

struct Point {
    double x;
    double y;
};

/// Explicit planar geometry of a light leaf: colored strands in a strip,
/// dot-terminated stubs, and 2m-valent vertex records.
struct SGraph {
    struct Strand {
        int color;  // generator index
        std::vector<Point> path;
    };
    struct Vertex {
        int s;
        int t;
        int order;  // m_st; the vertex is 2m-valent
        Point position;
    };

    Word bottom;
    Word top;
    double height = 1.0;
    std::vector<Strand> strands;
    std::vector<Point> dots;
    std::vector<Vertex> vertices;
};

/// Replays the leaf steps bottom-to-top into concrete geometry.
SGraph leaf_to_sgraph(const CoxeterSystem& sys, const LightLeaf& leaf);

/// Deterministic SVG 1.1 document.
std::string sgraph_to_svg(const SGraph& g);

/// ASCII sketch: `.` dots, `|` strands, `(` `)` arcs, `X` high-valent vertices.
std::string sgraph_to_text(const SGraph& g);

/// Reads the boundary words back off the geometry (for round-trip checks).
Word bottom_word_of(const SGraph& g);
Word top_word_of(const SGraph& g);

}  // namespace rtilde

#endif
