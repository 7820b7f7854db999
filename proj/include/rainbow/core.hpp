#ifndef RAINBOW_CORE_HPP
#define RAINBOW_CORE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rainbow {

// An undirected edge, stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    static Edge canonical(int a, int b);

    bool operator==(const Edge &other) const { return u == other.u && v == other.v; }
    bool operator<(const Edge &other) const {
        return u != other.u ? u < other.u : v < other.v;
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge &e) const {
        return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(e.u) << 32) |
                                          static_cast<std::uint32_t>(e.v));
    }
};

enum class ClassKind { single, matching2, triangle, other };

std::string to_string(ClassKind kind);
ClassKind kind_from_string(std::string_view name);

// One color class: an edge set plus its structural kind.
struct ColorClass {
    int id = 0;
    std::vector<Edge> edges;  // sorted canonically
    ClassKind kind = ClassKind::other;
};

// Classify a nonempty edge set: single edge, size-2 matching, triangle, or other.
ClassKind classify_class(const std::vector<Edge> &edges);

// An n-vertex graph whose edge set is partitioned into color classes.
// Immutable after construction; all operations on it are read-only.
struct ColoredGraph {
    int n = 0;
    std::vector<ColorClass> classes;

    // Derived lookups, filled by build_colored_graph.
    std::unordered_map<Edge, int, EdgeHash> edge_color;
    std::vector<std::vector<std::pair<int, int>>> adj;  // per vertex: (neighbor, color), neighbor ascending

    int class_count() const { return static_cast<int>(classes.size()); }
    int edge_count() const { return static_cast<int>(edge_color.size()); }

    // Color id of an edge, or -1 if the edge is not in the graph.
    int color_of(int a, int b) const;
};

// Validate and build. Vertices must lie in [0, n); classes must be nonempty,
// duplicate-free and pairwise disjoint. Throws std::invalid_argument naming the
// offending class id otherwise.
ColoredGraph build_colored_graph(int n, const std::vector<std::vector<Edge>> &classes);

// A cycle together with its edge-color certificate.
struct CycleResult {
    std::vector<int> vertices;                 // cyclic sequence, all distinct
    std::vector<std::pair<Edge, int>> edges;   // (edge, color id) per consecutive pair
    int length = 0;                            // == vertices.size() >= 3
    bool rainbow = false;                      // all color ids distinct
};

// Resolve a cyclic vertex sequence against g: checks that every consecutive
// pair (wrapping) is an edge, records colors and sets the rainbow flag.
// Throws std::invalid_argument on a repeated vertex or missing edge.
CycleResult is_rainbow_cycle(const ColoredGraph &g, const std::vector<int> &vertices);

// Rotate/reflect a cyclic sequence into canonical form: minimum vertex first,
// then toward the smaller of its two neighbors.
std::vector<int> canonical_cycle(const std::vector<int> &vertices);

// Instance file format (line-based text, '#' starts a comment line):
//   n <int> m <int>
//   <kind> <edgecount> u1 v1 u2 v2 ...     (m such lines)
ColoredGraph parse_instance(std::string_view text);
std::string serialize_instance(const ColoredGraph &g);

}  // namespace rainbow

#endif
