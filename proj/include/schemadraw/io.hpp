#pragma once

#include <schemadraw/map.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace schemadraw {

// Text format for an embedded graph:
//
//   graph <vertex-count> <edge-count>
//   e <edge-id> <u> <v>          one line per edge, ids 0..E-1
//   r <v> <edge-id> ...          counterclockwise rotation of v, as edge ids
//
// '#' starts a comment, blank lines are skipped. Edge lines must precede the
// rotations that mention them only logically; physically any order is fine.
// Loop edges cannot be written in this format because a rotation entry could
// not tell the two darts of the loop apart.

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

inline int parse_int(const std::string& tok, int line_no, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw Error("line " + std::to_string(line_no) + ": expected " + what + ", got '" +
                    tok + "'");
    }
    if (pos != tok.size() || value < 0)
        throw Error("line " + std::to_string(line_no) + ": expected " + what + ", got '" +
                    tok + "'");
    return value;
}

} // namespace detail

inline CombinatorialMap parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int vcount = -1, ecount = -1;
    struct EdgeDecl {
        int u = -1, v = -1, line = 0;
        bool used_at_u = false, used_at_v = false;
    };
    std::vector<EdgeDecl> edges;
    std::vector<std::vector<int>> edge_rotations;
    std::vector<int> rotation_line;
    int edges_seen = 0, rotations_seen = 0;

    struct Pending {
        int v;
        std::vector<int> edge_ids;
        int line;
    };
    std::vector<Pending> pending;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];
        if (kind == "graph") {
            if (vcount >= 0) throw Error("line " + std::to_string(line_no) + ": duplicate header");
            if (toks.size() != 3)
                throw Error("line " + std::to_string(line_no) + ": header must be 'graph V E'");
            vcount = detail::parse_int(toks[1], line_no, "vertex count");
            ecount = detail::parse_int(toks[2], line_no, "edge count");
            if (vcount < 1 || ecount < 1)
                throw Error("line " + std::to_string(line_no) +
                            ": graph needs at least one vertex and one edge");
            edges.assign(ecount, EdgeDecl{});
            edge_rotations.assign(vcount, {});
            rotation_line.assign(vcount, 0);
        } else if (kind == "e") {
            if (vcount < 0) throw Error("line " + std::to_string(line_no) + ": header missing");
            if (toks.size() != 4)
                throw Error("line " + std::to_string(line_no) + ": edge line must be 'e id u v'");
            int id = detail::parse_int(toks[1], line_no, "edge id");
            int u = detail::parse_int(toks[2], line_no, "vertex id");
            int v = detail::parse_int(toks[3], line_no, "vertex id");
            if (id >= ecount)
                throw Error("line " + std::to_string(line_no) + ": edge id " + std::to_string(id) +
                            " out of range");
            if (u >= vcount || v >= vcount)
                throw Error("line " + std::to_string(line_no) + ": vertex id out of range");
            if (u == v)
                throw Error("line " + std::to_string(line_no) + ": loop edges are not supported");
            if (edges[id].u >= 0)
                throw Error("line " + std::to_string(line_no) + ": edge " + std::to_string(id) +
                            " declared twice");
            edges[id] = EdgeDecl{u, v, line_no, false, false};
            ++edges_seen;
        } else if (kind == "r") {
            if (vcount < 0) throw Error("line " + std::to_string(line_no) + ": header missing");
            if (toks.size() < 3)
                throw Error("line " + std::to_string(line_no) +
                            ": rotation needs a vertex and at least one edge");
            Pending p;
            p.line = line_no;
            p.v = detail::parse_int(toks[1], line_no, "vertex id");
            if (p.v >= vcount)
                throw Error("line " + std::to_string(line_no) + ": vertex id out of range");
            if (rotation_line[p.v] != 0)
                throw Error("line " + std::to_string(line_no) + ": rotation of vertex " +
                            std::to_string(p.v) + " given twice (first on line " +
                            std::to_string(rotation_line[p.v]) + ")");
            rotation_line[p.v] = line_no;
            for (std::size_t i = 2; i < toks.size(); ++i)
                p.edge_ids.push_back(detail::parse_int(toks[i], line_no, "edge id"));
            pending.push_back(std::move(p));
            ++rotations_seen;
        } else {
            throw Error("line " + std::to_string(line_no) + ": unknown directive '" + kind + "'");
        }
    }

    if (vcount < 0) throw Error("missing 'graph V E' header");
    if (edges_seen != ecount)
        throw Error("declared " + std::to_string(ecount) + " edges but found " +
                    std::to_string(edges_seen));
    if (rotations_seen != vcount)
        throw Error("declared " + std::to_string(vcount) + " vertices but found " +
                    std::to_string(rotations_seen) + " rotations");

    // Resolve edge ids to darts: edge e contributes dart 2e at u, 2e+1 at v.
    std::vector<std::vector<int>> rotations(vcount);
    for (const auto& p : pending) {
        for (int id : p.edge_ids) {
            if (id >= ecount)
                throw Error("line " + std::to_string(p.line) + ": edge id " + std::to_string(id) +
                            " out of range");
            EdgeDecl& e = edges[id];
            if (p.v == e.u && !e.used_at_u) {
                e.used_at_u = true;
                rotations[p.v].push_back(2 * id);
            } else if (p.v == e.v && !e.used_at_v) {
                e.used_at_v = true;
                rotations[p.v].push_back(2 * id + 1);
            } else if (p.v == e.u || p.v == e.v) {
                throw Error("line " + std::to_string(p.line) + ": edge " + std::to_string(id) +
                            " listed twice at vertex " + std::to_string(p.v));
            } else {
                throw Error("line " + std::to_string(p.line) + ": edge " + std::to_string(id) +
                            " is not incident to vertex " + std::to_string(p.v));
            }
        }
    }
    for (int id = 0; id < ecount; ++id) {
        if (edges[id].u < 0) throw Error("edge " + std::to_string(id) + " never declared");
        if (!edges[id].used_at_u || !edges[id].used_at_v)
            throw Error("edge " + std::to_string(id) +
                        " must appear in the rotation of both endpoints");
    }
    return build_map(vcount, rotations);
}

// Canonical text form; parse(serialize(m)) reproduces m dart for dart, and
// serializing again is byte identical.
inline std::string serialize_graph(const CombinatorialMap& m) {
    std::ostringstream out;
    out << "graph " << m.vertex_count << ' ' << m.edge_count() << '\n';
    for (int e = 0; e < m.edge_count(); ++e) {
        int u = m.vertex_of[2 * e];
        int v = m.vertex_of[2 * e + 1];
        if (u == v) throw Error("serialize_graph: loop edges are not supported");
        out << "e " << e << ' ' << u << ' ' << v << '\n';
    }
    for (int v = 0; v < m.vertex_count; ++v) {
        out << "r " << v;
        for (int d : m.rotation(v)) out << ' ' << edge_of(d);
        out << '\n';
    }
    return out.str();
}

} // namespace schemadraw
