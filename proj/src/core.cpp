#include "rainbow/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbow {

Edge Edge::canonical(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::single: return "single";
        case ClassKind::matching2: return "matching2";
        case ClassKind::triangle: return "triangle";
        case ClassKind::other: return "other";
    }
    return "other";
}

ClassKind kind_from_string(std::string_view name) {
    if (name == "single") return ClassKind::single;
    if (name == "matching2") return ClassKind::matching2;
    if (name == "triangle") return ClassKind::triangle;
    if (name == "other") return ClassKind::other;
    throw std::invalid_argument("unknown class kind '" + std::string(name) + "'");
}

ClassKind classify_class(const std::vector<Edge> &edges) {
    if (edges.empty()) throw std::invalid_argument("empty edge set has no kind");
    if (edges.size() == 1) return ClassKind::single;
    if (edges.size() == 2) {
        const Edge &a = edges[0], &b = edges[1];
        bool disjoint = a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
        return disjoint ? ClassKind::matching2 : ClassKind::other;
    }
    if (edges.size() == 3) {
        std::set<int> verts;
        for (const Edge &e : edges) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        // Three distinct edges on exactly three vertices are necessarily the
        // three pairs, i.e. a triangle.
        if (verts.size() == 3) return ClassKind::triangle;
    }
    return ClassKind::other;
}

int ColoredGraph::color_of(int a, int b) const {
    auto it = edge_color.find(Edge::canonical(a, b));
    return it == edge_color.end() ? -1 : it->second;
}

ColoredGraph build_colored_graph(int n, const std::vector<std::vector<Edge>> &classes) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    ColoredGraph g;
    g.n = n;
    g.classes.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string where = "class " + std::to_string(i);
        if (classes[i].empty()) throw std::invalid_argument(where + ": empty class");
        ColorClass cc;
        cc.id = static_cast<int>(i);
        cc.edges = classes[i];
        for (Edge &e : cc.edges) {
            if (e.u == e.v)
                throw std::invalid_argument(where + ": self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n)
                throw std::invalid_argument(where + ": vertex out of range in edge (" +
                                            std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        std::sort(cc.edges.begin(), cc.edges.end());
        for (std::size_t j = 1; j < cc.edges.size(); ++j)
            if (cc.edges[j] == cc.edges[j - 1])
                throw std::invalid_argument(where + ": duplicate edge (" +
                                            std::to_string(cc.edges[j].u) + "," +
                                            std::to_string(cc.edges[j].v) + ")");
        for (const Edge &e : cc.edges) {
            auto [it, inserted] = g.edge_color.emplace(e, cc.id);
            if (!inserted)
                throw std::invalid_argument(where + ": edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") overlaps class " +
                                            std::to_string(it->second));
        }
        cc.kind = classify_class(cc.edges);
        g.classes.push_back(std::move(cc));
    }
    g.adj.assign(n, {});
    for (const ColorClass &cc : g.classes) {
        for (const Edge &e : cc.edges) {
            g.adj[e.u].emplace_back(e.v, cc.id);
            g.adj[e.v].emplace_back(e.u, cc.id);
        }
    }
    for (auto &nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

CycleResult is_rainbow_cycle(const ColoredGraph &g, const std::vector<int> &vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("repeated vertex " + std::to_string(v));
    }
    CycleResult result;
    result.vertices = vertices;
    result.length = static_cast<int>(vertices.size());
    std::set<int> colors;
    bool rainbow = true;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int a = vertices[i];
        int b = vertices[(i + 1) % vertices.size()];
        int color = g.color_of(a, b);
        if (color < 0)
            throw std::invalid_argument("missing edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        result.edges.emplace_back(Edge::canonical(a, b), color);
        if (!colors.insert(color).second) rainbow = false;
    }
    result.rainbow = rainbow;
    return result;
}

std::vector<int> canonical_cycle(const std::vector<int> &vertices) {
    const std::size_t k = vertices.size();
    std::size_t pos = std::min_element(vertices.begin(), vertices.end()) - vertices.begin();
    std::vector<int> fwd(k), rev(k);
    for (std::size_t i = 0; i < k; ++i) {
        fwd[i] = vertices[(pos + i) % k];
        rev[i] = vertices[(pos + k - i) % k];
    }
    return fwd <= rev ? fwd : rev;
}

namespace {

int required_edge_count(ClassKind kind) {
    switch (kind) {
        case ClassKind::single: return 1;
        case ClassKind::matching2: return 2;
        case ClassKind::triangle: return 3;
        case ClassKind::other: return -1;  // any count >= 1
    }
    return -1;
}

}  // namespace

ColoredGraph parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1, m = -1;
    std::vector<std::vector<Edge>> classes;
    std::vector<ClassKind> declared;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!header_seen) {
            std::string mtok;
            if (tok != "n" || !(ls >> n) || !(ls >> mtok) || mtok != "m" || !(ls >> m) || m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": malformed header, expected 'n <int> m <int>'");
            header_seen = true;
            continue;
        }
        ClassKind kind = kind_from_string(tok);
        int count = 0;
        if (!(ls >> count) || count < 1)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge count");
        int want = required_edge_count(kind);
        if (want > 0 && count != want)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": kind '" + tok +
                                        "' requires " + std::to_string(want) + " edges, got " +
                                        std::to_string(count));
        std::vector<Edge> edges;
        for (int i = 0; i < count; ++i) {
            int a, b;
            if (!(ls >> a >> b))
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected " + std::to_string(count) + " edges");
            if (a == b)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop at vertex " +
                                            std::to_string(a));
            edges.push_back(Edge::canonical(a, b));
        }
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        classes.push_back(std::move(edges));
        declared.push_back(kind);
    }
    if (!header_seen) throw std::invalid_argument("missing header line 'n <int> m <int>'");
    if (static_cast<int>(classes.size()) != m)
        throw std::invalid_argument("header declares m=" + std::to_string(m) + " but " +
                                    std::to_string(classes.size()) + " class lines found");
    ColoredGraph g = build_colored_graph(n, classes);
    for (int i = 0; i < g.class_count(); ++i)
        if (g.classes[i].kind != declared[i])
            throw std::invalid_argument("class " + std::to_string(i) + ": declared '" +
                                        to_string(declared[i]) + "' but edges form '" +
                                        to_string(g.classes[i].kind) + "'");
    return g;
}

std::string serialize_instance(const ColoredGraph &g) {
    std::ostringstream out;
    out << "n " << g.n << " m " << g.class_count() << "\n";
    for (const ColorClass &cc : g.classes) {
        out << to_string(cc.kind) << " " << cc.edges.size();
        for (const Edge &e : cc.edges) out << " " << e.u << " " << e.v;
        out << "\n";
    }
    return out.str();
}

}  // namespace rainbow
