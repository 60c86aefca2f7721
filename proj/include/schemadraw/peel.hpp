#pragma once

#include <schemadraw/map.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

namespace schemadraw {

// A system of 2g closed walks through a common basepoint whose union cuts
// the surface into a disk. Cycles are stored as dart walks in the input map
// and may share edges (a shared stretch is cut open once and walked along
// the rim by every cycle using it). tree/leftover fields are diagnostics of
// the tree-cotree decomposition the construction starts from.
struct PolygonalSchema {
    int basepoint = -1;
    std::vector<std::vector<int>> cycles;
    bool chord_free = false;
    std::vector<int> tree_parent_dart;
    std::vector<int> leftover_edges;
};

// One of the 4g boundary paths of the cut-open disk. Side j starts where
// cycle `cycle` first runs along edges it alone contributed to the cut
// (forward copy) or where that stretch ends (reversed copy). When cycles
// share only the basepoint, each side is a full copy of its cycle.
struct CutSide {
    int cycle = -1;
    bool reversed = false;
    std::vector<int> darts;
    std::vector<int> vertices;
    std::vector<int> edges;
};

// The cut-open surface: a planar map whose external face is the polygon
// formed by the 4g sides. vertex_origin/edge_origin map copies back to the
// input map.
struct CutResult {
    CombinatorialMap star;
    FaceSet faces;
    int external_face = -1;
    std::vector<CutSide> sides;
    std::vector<int> vertex_origin;
    std::vector<int> edge_origin;
    int basepoint = -1;
    int genus = 0;
};

namespace detail {

// The surface sliced open along a set of edges. Every cut edge is doubled;
// a vertex with k cut darts splits into k copies, one per rotation sector
// between consecutive cut darts. The copy whose sector starts at the first
// cut dart in rotation order keeps the original vertex id. Cutting along a
// set is order-free, which makes schemas with shared edges well defined.
struct SubCut {
    const CombinatorialMap* input = nullptr;
    CombinatorialMap map;
    std::vector<int> orig_vertex;
    std::vector<int> orig_edge;
    std::vector<char> cut_edge;
    std::vector<char> wall;
    std::vector<char> boundary_vtx;
    FaceSet faces;
    std::vector<int> wall_faces;

    // Dart of the input map corresponding to dart d of the cut map.
    int image_dart(int d) const {
        int e = orig_edge[edge_of(d)];
        int u = orig_vertex[map.tail(d)];
        int g_dart = (input->vertex_of[2 * e] == u) ? 2 * e : 2 * e + 1;
        if (input->vertex_of[g_dart] != u ||
            input->vertex_of[alpha(g_dart)] != orig_vertex[map.head(d)])
            throw Error("cut: dart image mismatch, state is corrupt");
        return g_dart;
    }
};

inline SubCut cut_subgraph(const CombinatorialMap& g, const std::vector<char>& cut) {
    if (static_cast<int>(cut.size()) != g.edge_count())
        throw Error("cut: edge flag vector has the wrong size");
    const int E = g.edge_count();
    SubCut s;
    s.input = &g;
    s.cut_edge = cut;

    std::vector<int> twin(E, -1);
    int extra = 0;
    for (int e = 0; e < E; ++e)
        if (cut[e]) twin[e] = E + extra++;
    if (extra == 0) throw Error("cut: no edges selected");

    CombinatorialMap& m = s.map;
    m.vertex_count = g.vertex_count;
    m.sigma = g.sigma;
    m.vertex_of = g.vertex_of;
    m.sigma.resize(2 * (E + extra), -1);
    m.vertex_of.resize(2 * (E + extra), -1);
    s.orig_edge.resize(E + extra);
    for (int e = 0; e < E; ++e) s.orig_edge[e] = e;
    for (int e = 0; e < E; ++e)
        if (cut[e]) s.orig_edge[twin[e]] = e;
    s.orig_vertex.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) s.orig_vertex[v] = v;
    s.boundary_vtx.assign(g.vertex_count, 0);

    // The new copy of a cut dart sits on its counterclockwise flank; the
    // original dart keeps the clockwise flank. Both ends of each copy then
    // lie on one geometric bank of the slit.
    auto ccw_stub = [&](int c) { return (c % 2 == 0) ? 2 * twin[edge_of(c)] : c; };
    auto cw_stub = [&](int c) { return (c % 2 == 0) ? c : 2 * twin[edge_of(c)] + 1; };

    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> rot = g.rotation(v);
        std::vector<int> cut_pos;
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (cut[edge_of(rot[i])]) cut_pos.push_back(static_cast<int>(i));
        if (cut_pos.empty()) continue;
        s.boundary_vtx[v] = 1;
        const int k = static_cast<int>(cut_pos.size());
        for (int sct = 0; sct < k; ++sct) {
            int id = v;
            if (sct > 0) {
                id = m.vertex_count++;
                s.orig_vertex.push_back(v);
                s.boundary_vtx.push_back(1);
            }
            std::vector<int> sector;
            sector.push_back(ccw_stub(rot[cut_pos[sct]]));
            for (int i = cut_pos[sct] + 1;; ++i) {
                int idx = i % static_cast<int>(rot.size());
                if (idx == cut_pos[(sct + 1) % k]) break;
                sector.push_back(rot[idx]);
            }
            sector.push_back(cw_stub(rot[cut_pos[(sct + 1) % k]]));
            for (std::size_t i = 0; i < sector.size(); ++i) {
                m.sigma[sector[i]] = sector[(i + 1) % sector.size()];
                m.vertex_of[sector[i]] = id;
            }
        }
    }

    check_permutation_tables(m);
    fill_derived_tables(m);
    s.faces = trace_faces(m);

    s.wall.assign(m.dart_count(), 0);
    for (int e = 0; e < E; ++e)
        if (cut[e]) {
            s.wall[2 * e + 1] = 1;
            s.wall[2 * twin[e]] = 1;
        }
    std::vector<char> wall_face(s.faces.count(), 0);
    for (int d = 0; d < m.dart_count(); ++d)
        if (s.wall[d]) wall_face[s.faces.face_of[d]] = 1;
    for (int f = 0; f < s.faces.count(); ++f) {
        if (!wall_face[f]) continue;
        for (int d : s.faces.faces[f])
            if (!s.wall[d])
                throw Error("cut: slit wall face is only partially marked, surgery bug");
        s.wall_faces.push_back(f);
    }
    return s;
}

inline std::vector<char> edges_of_cycles(const CombinatorialMap& g,
                                         const std::vector<std::vector<int>>& cycles) {
    std::vector<char> cut(g.edge_count(), 0);
    for (const auto& cyc : cycles)
        for (int d : cyc) {
            if (d < 0 || d >= g.dart_count()) throw Error("schema: dart id out of range");
            cut[edge_of(d)] = 1;
        }
    return cut;
}

inline void check_cycle_walk(const CombinatorialMap& g, const std::vector<int>& cyc, int p) {
    if (cyc.empty()) throw Error("schema: empty cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int d = cyc[i];
        if (d < 0 || d >= g.dart_count()) throw Error("schema: dart id out of range");
        if (i > 0 && g.tail(d) != g.head(cyc[i - 1]))
            throw Error("schema: cycle darts do not chain");
    }
    if (g.tail(cyc.front()) != p || g.head(cyc.back()) != p)
        throw Error("schema: cycle does not start and end at the basepoint");
}

} // namespace detail

// Cuts the map open along the union of the schema cycles and extracts the
// resulting disk with its 4g-sided external face.
inline CutResult cut_along(const CombinatorialMap& g, const PolygonalSchema& schema) {
    if (!is_simple(g)) throw Error("cut_along: input map must be simple");
    int gen = genus(g);
    if (gen == 0) throw Error("cut_along: the map is already planar, nothing to cut");
    if (static_cast<int>(schema.cycles.size()) != 2 * gen)
        throw Error("cut_along: schema must have exactly 2g cycles");
    int p = schema.basepoint;
    if (p < 0 || p >= g.vertex_count) throw Error("cut_along: basepoint out of range");
    for (const auto& cyc : schema.cycles) detail::check_cycle_walk(g, cyc, p);

    // Each cycle must contribute at least one edge of its own; the first
    // and last such edge delimit its two sides on the polygon.
    struct Fresh {
        int first_dart = -1;
        int last_dart = -1;
    };
    std::vector<Fresh> fresh(schema.cycles.size());
    {
        std::vector<char> seen(g.edge_count(), 0);
        for (std::size_t i = 0; i < schema.cycles.size(); ++i) {
            for (int d : schema.cycles[i]) {
                if (seen[edge_of(d)]) continue;
                seen[edge_of(d)] = 1;
                if (fresh[i].first_dart < 0) fresh[i].first_dart = d;
                fresh[i].last_dart = d;
            }
            if (fresh[i].first_dart < 0)
                throw Error("cut_along: cycle " + std::to_string(i + 1) +
                            " adds no new edge to the cut graph");
        }
    }

    detail::SubCut cut = detail::cut_subgraph(g, detail::edges_of_cycles(g, schema.cycles));
    if (!is_connected(cut.map))
        throw Error("cut_along: schema does not cut the surface to a disk "
                    "(the cut separates it)");
    if (genus(cut.map) != 0)
        throw Error("cut_along: schema does not cut the surface to a disk "
                    "(genus left over)");
    if (cut.wall_faces.size() != 1)
        throw Error("cut_along: schema does not cut the surface to a disk "
                    "(boundary is not a single face)");

    CutResult r;
    r.basepoint = p;
    r.genus = gen;
    r.star = cut.map;
    r.vertex_origin = cut.orig_vertex;
    r.edge_origin = cut.orig_edge;
    r.faces = cut.faces;
    r.external_face = cut.wall_faces.front();

    // Each boundary dart walks one bank of one cut edge; over the whole
    // polygon the two banks of every cut edge appear exactly once each, so
    // the image darts identify boundary darts uniquely.
    const std::vector<int>& orbit = r.faces.faces[r.external_face];
    std::map<int, std::pair<int, bool>> delims;
    for (std::size_t i = 0; i < schema.cycles.size(); ++i) {
        delims[fresh[i].first_dart] = {static_cast<int>(i), false};
        delims[alpha(fresh[i].last_dart)] = {static_cast<int>(i), true};
    }
    const int n = static_cast<int>(orbit.size());
    std::vector<int> image(n);
    for (int j = 0; j < n; ++j) image[j] = cut.image_dart(orbit[j]);
    int start = -1;
    for (int j = 0; j < n; ++j)
        if (delims.count(image[j]) && (start < 0 || orbit[j] < orbit[start])) start = j;
    if (start < 0)
        throw Error("cut_along: no side delimiter found on the boundary, cut is corrupt");

    for (int j = 0; j < n;) {
        auto it = delims.find(image[(start + j) % n]);
        if (it == delims.end())
            throw Error("cut_along: side does not begin at a delimiter, cut is corrupt");
        CutSide side;
        side.cycle = it->second.first;
        side.reversed = it->second.second;
        do {
            int d = orbit[(start + j) % n];
            side.darts.push_back(d);
            side.vertices.push_back(r.star.tail(d));
            side.edges.push_back(edge_of(d));
            ++j;
        } while (j < n && !delims.count(image[(start + j) % n]));
        side.vertices.push_back(r.star.head(side.darts.back()));
        r.sides.push_back(std::move(side));
    }
    if (static_cast<int>(r.sides.size()) != 4 * gen)
        throw Error("cut_along: expected " + std::to_string(4 * gen) + " sides, got " +
                    std::to_string(r.sides.size()));
    return r;
}

// Edges of the cut map joining two non-consecutive vertices of side i.
// Side edges join consecutive vertices, so they are never reported.
inline std::vector<int> find_chords(const CutResult& cut, int side_index) {
    if (side_index < 0 || side_index >= static_cast<int>(cut.sides.size()))
        throw Error("find_chords: side index out of range");
    const CutSide& side = cut.sides[side_index];
    std::vector<int> pos(cut.star.vertex_count, -1);
    for (std::size_t i = 0; i < side.vertices.size(); ++i)
        pos[side.vertices[i]] = static_cast<int>(i);
    std::vector<int> chords;
    for (int e = 0; e < cut.star.edge_count(); ++e) {
        int a = pos[cut.star.vertex_of[2 * e]];
        int b = pos[cut.star.vertex_of[2 * e + 1]];
        if (a >= 0 && b >= 0 && std::abs(a - b) >= 2) chords.push_back(e);
    }
    return chords;
}

namespace detail {

// Breadth-first tree from a root moving only along flagged edges.
struct EdgeSetTree {
    std::vector<int> par;
    std::vector<int> dist;
};

inline EdgeSetTree edge_set_tree(const CombinatorialMap& g, const std::vector<char>& flags,
                                 int root) {
    EdgeSetTree t;
    t.par.assign(g.vertex_count, -1);
    t.dist.assign(g.vertex_count, -1);
    std::queue<int> q;
    t.dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.rotation(v)) {
            if (!flags[edge_of(d)]) continue;
            int w = g.head(d);
            if (t.dist[w] >= 0) continue;
            t.dist[w] = t.dist[v] + 1;
            t.par[w] = d;
            q.push(w);
        }
    }
    return t;
}

// Walk from the tree root down to `to` as forward darts.
inline std::vector<int> tree_walk(const CombinatorialMap& g, const std::vector<int>& par,
                                  int to) {
    std::vector<int> walk;
    for (int v = to; par[v] >= 0; v = g.tail(par[v])) walk.push_back(par[v]);
    std::reverse(walk.begin(), walk.end());
    return walk;
}

inline std::vector<int> image_walk(const SubCut& s, const std::vector<int>& walk) {
    std::vector<int> out;
    out.reserve(walk.size());
    for (int d : walk) out.push_back(s.image_dart(d));
    return out;
}

inline std::vector<int> reverse_walk(const std::vector<int>& walk) {
    std::vector<int> out;
    out.reserve(walk.size());
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) out.push_back(alpha(*it));
    return out;
}

} // namespace detail

// Builds a polygonal schema through the basepoint from a tree-cotree
// partition: a spanning tree rooted at the basepoint, a spanning cotree of
// the dual over the remaining edges, and one cycle per leftover edge that
// walks down the tree to the edge, across it, and back up the tree. Unused
// tree stretches appear on the cut boundary as immediately cancelling
// bank pairs, so the union always cuts the surface to a disk.
inline PolygonalSchema tree_cotree_schema(const CombinatorialMap& g, int basepoint) {
    if (!is_simple(g)) throw Error("tree_cotree_schema: input map must be simple");
    if (!is_connected(g)) throw Error("tree_cotree_schema: input map must be connected");
    int gen = genus(g);
    if (gen == 0)
        throw Error("tree_cotree_schema: the map is planar (genus 0), nothing to peel");
    int p = basepoint;
    if (p < 0 || p >= g.vertex_count) throw Error("tree_cotree_schema: basepoint out of range");

    detail::EdgeSetTree tree =
        detail::edge_set_tree(g, std::vector<char>(g.edge_count(), 1), p);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int v = 0; v < g.vertex_count; ++v)
        if (tree.par[v] >= 0) in_tree[edge_of(tree.par[v])] = 1;

    std::vector<int> leftover;
    {
        FaceSet fs = trace_faces(g);
        std::vector<char> face_seen(fs.count(), 0);
        std::vector<char> in_cotree(g.edge_count(), 0);
        std::queue<int> q;
        face_seen[0] = 1;
        q.push(0);
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int d : fs.faces[f]) {
                int e = edge_of(d);
                if (in_tree[e] || in_cotree[e]) continue;
                int other = fs.face_of[alpha(d)];
                if (face_seen[other]) continue;
                face_seen[other] = 1;
                in_cotree[e] = 1;
                q.push(other);
            }
        }
        for (int e = 0; e < g.edge_count(); ++e)
            if (!in_tree[e] && !in_cotree[e]) leftover.push_back(e);
        if (static_cast<int>(leftover.size()) != 2 * gen)
            throw Error("tree_cotree_schema: leftover edge count is not 2g, map corrupt");
    }

    std::vector<std::vector<int>> cycles;
    for (int e : leftover) {
        int d = 2 * e;
        std::vector<int> cyc = detail::tree_walk(g, tree.par, g.tail(d));
        cyc.push_back(d);
        std::vector<int> back =
            detail::reverse_walk(detail::tree_walk(g, tree.par, g.head(d)));
        cyc.insert(cyc.end(), back.begin(), back.end());
        cycles.push_back(std::move(cyc));
    }

    PolygonalSchema schema;
    schema.basepoint = p;
    schema.cycles = std::move(cycles);
    schema.tree_parent_dart = std::move(tree.par);
    schema.leftover_edges = std::move(leftover);

    cut_along(g, schema);
    return schema;
}

// Rewrites each cycle as a shortest closed walk through the basepoint that
// still cuts the surface to a disk. Cycle i is refined on the surface piece
// obtained by cutting along the other cycles only: the replacement walks
// from the basepoint along already cut edges, dives across the piece, and
// returns along cut edges. On a cylinder piece a dive between the two
// boundary circles is always valid; on other pieces every candidate is
// verified by recutting. The final cut verifies chord-freeness.
inline PolygonalSchema chord_free_refine(const CombinatorialMap& g,
                                         const PolygonalSchema& schema) {
    int gen = genus(g);
    if (static_cast<int>(schema.cycles.size()) != 2 * gen)
        throw Error("chord_free_refine: schema must have exactly 2g cycles");
    PolygonalSchema out = schema;
    const int p = schema.basepoint;

    for (std::size_t i = 0; i < out.cycles.size(); ++i) {
        std::vector<std::vector<int>> others;
        for (std::size_t j = 0; j < out.cycles.size(); ++j)
            if (j != i) others.push_back(out.cycles[j]);
        std::vector<char> kept = detail::edges_of_cycles(g, others);
        bool exclusive = false;
        for (int d : out.cycles[i])
            if (!kept[edge_of(d)]) exclusive = true;
        if (!exclusive) continue;

        detail::SubCut piece = detail::cut_subgraph(g, kept);
        const CombinatorialMap& m = piece.map;
        if (!is_connected(m))
            throw Error("chord_free_refine: regluing one cycle disconnected the cut, "
                        "schema invalid");
        const bool cylinder = genus(m) == 0 && piece.wall_faces.size() == 2;

        detail::EdgeSetTree rim = detail::edge_set_tree(g, kept, p);
        std::vector<int> circle(m.vertex_count, -1);
        for (int f : piece.wall_faces)
            for (int d : piece.faces.faces[f]) circle[m.tail(d)] = f;

        // Shortest rim+dive+rim replacements: Dijkstra over the piece,
        // seeded at every boundary copy with its rim distance from the
        // basepoint. On non-cylinder pieces the dive may pass through
        // further boundary copies.
        std::vector<long long> dist(m.vertex_count, -1);
        std::vector<int> par(m.vertex_count, -1), root(m.vertex_count, -1);
        std::priority_queue<std::pair<long long, int>,
                            std::vector<std::pair<long long, int>>, std::greater<>>
            pq;
        for (int v = 0; v < m.vertex_count; ++v)
            if (piece.boundary_vtx[v]) {
                int under = piece.orig_vertex[v];
                if (rim.dist[under] < 0)
                    throw Error("chord_free_refine: cut graph is disconnected, "
                                "schema invalid");
                dist[v] = rim.dist[under];
                root[v] = v;
                pq.emplace(dist[v], v);
            }
        while (!pq.empty()) {
            auto [dv, v] = pq.top();
            pq.pop();
            if (dv != dist[v]) continue;
            for (int d : m.rotation(v)) {
                if (piece.cut_edge[piece.orig_edge[edge_of(d)]]) continue;
                int w = m.head(d);
                if (cylinder && piece.boundary_vtx[w]) continue;
                if (dist[w] >= 0 && dist[w] <= dv + 1) continue;
                dist[w] = dv + 1;
                par[w] = d;
                root[w] = root[v];
                pq.emplace(dist[w], w);
            }
        }

        std::vector<std::pair<long long, int>> meets;
        for (int d = 0; d < m.dart_count(); d += 2) {
            if (piece.cut_edge[piece.orig_edge[edge_of(d)]]) continue;
            int x = m.tail(d), y = m.head(d);
            if (dist[x] < 0 || dist[y] < 0) continue;
            if (par[x] == alpha(d) || par[y] == d) continue;
            if (cylinder && circle[root[x]] == circle[root[y]]) continue;
            meets.emplace_back(dist[x] + dist[y] + 1, d);
        }
        std::sort(meets.begin(), meets.end());

        bool done = false;
        for (auto [total, d] : meets) {
            std::vector<int> walk = detail::tree_walk(m, par, m.tail(d));
            walk.push_back(d);
            std::vector<int> back = detail::reverse_walk(detail::tree_walk(m, par, m.head(d)));
            walk.insert(walk.end(), back.begin(), back.end());
            std::vector<int> dive = detail::image_walk(piece, walk);
            if (!cylinder) {
                std::vector<char> next = kept;
                for (int dd : dive) next[edge_of(dd)] = 1;
                detail::SubCut trial = detail::cut_subgraph(g, next);
                if (!is_connected(trial.map) || genus(trial.map) != 0 ||
                    trial.wall_faces.size() != 1)
                    continue;
            }
            std::vector<int> cyc = detail::tree_walk(g, rim.par, g.tail(dive.front()));
            cyc.insert(cyc.end(), dive.begin(), dive.end());
            std::vector<int> suffix =
                detail::reverse_walk(detail::tree_walk(g, rim.par, g.head(dive.back())));
            cyc.insert(cyc.end(), suffix.begin(), suffix.end());
            out.cycles[i] = std::move(cyc);
            done = true;
            break;
        }
        if (!done)
            throw Error("chord_free_refine: no replacement cycle rebuilds the disk");
    }

    CutResult check = cut_along(g, out);
    for (std::size_t i = 0; i < check.sides.size(); ++i)
        if (!find_chords(check, static_cast<int>(i)).empty())
            throw Error("chord_free_refine: a refined side still has a chord");
    out.chord_free = true;
    return out;
}

} // namespace schemadraw
