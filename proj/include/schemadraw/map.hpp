#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemadraw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Darts are the half-edges of an embedded graph. Edge e owns darts 2e and
// 2e+1; alpha swaps them. Dart d leaves vertex_of[d] and points at its
// opposite end.
inline int alpha(int d) { return d ^ 1; }
inline int edge_of(int d) { return d >> 1; }

// An orientable embedded graph given as a rotation system. sigma[d] is the
// next dart counterclockwise around the origin vertex of d. Faces are the
// orbits of phi(d) = sigma[alpha(d)]; the orbit of d walks the face lying to
// the right of d. In a planar embedding with counterclockwise rotations this
// traces every bounded face clockwise and the outer face counterclockwise.
struct CombinatorialMap {
    int vertex_count = 0;
    std::vector<int> sigma;
    std::vector<int> sigma_inv;
    std::vector<int> vertex_of;
    std::vector<int> vertex_dart;

    int dart_count() const { return static_cast<int>(sigma.size()); }
    int edge_count() const { return static_cast<int>(sigma.size()) / 2; }
    int phi(int d) const { return sigma[d ^ 1]; }
    int phi_inv(int d) const { return sigma_inv[d] ^ 1; }
    int tail(int d) const { return vertex_of[d]; }
    int head(int d) const { return vertex_of[d ^ 1]; }

    int degree(int v) const {
        int first = vertex_dart[v];
        if (first < 0) return 0;
        int deg = 0;
        int d = first;
        do {
            ++deg;
            d = sigma[d];
        } while (d != first);
        return deg;
    }

    // Darts leaving v in counterclockwise order, starting at vertex_dart[v].
    std::vector<int> rotation(int v) const {
        std::vector<int> out;
        int first = vertex_dart[v];
        if (first < 0) return out;
        int d = first;
        do {
            out.push_back(d);
            d = sigma[d];
        } while (d != first);
        return out;
    }
};

namespace detail {

inline void check_permutation_tables(const CombinatorialMap& m) {
    const std::size_t n = m.sigma.size();
    if (n % 2 != 0) throw Error("map: dart count must be even");
    if (n == 0) throw Error("map: must have at least one edge");
    if (m.vertex_of.size() != n) throw Error("map: vertex_of size mismatch");
    if (m.vertex_count <= 0) throw Error("map: vertex count must be positive");

    std::vector<char> seen(n, 0);
    for (std::size_t d = 0; d < n; ++d) {
        int s = m.sigma[d];
        if (s < 0 || static_cast<std::size_t>(s) >= n)
            throw Error("map: sigma value out of range");
        if (seen[s]) throw Error("map: sigma is not a permutation");
        seen[s] = 1;
        int v = m.vertex_of[d];
        if (v < 0 || v >= m.vertex_count)
            throw Error("map: vertex id out of range");
        if (m.vertex_of[s] != v)
            throw Error("map: sigma moves a dart to another vertex");
    }

    // Each vertex must carry exactly one sigma cycle.
    std::vector<char> visited(n, 0);
    std::vector<char> vertex_seen(m.vertex_count, 0);
    int cycles = 0;
    for (std::size_t d0 = 0; d0 < n; ++d0) {
        if (visited[d0]) continue;
        ++cycles;
        int v = m.vertex_of[d0];
        if (vertex_seen[v])
            throw Error("map: rotation of a vertex is split into several cycles");
        vertex_seen[v] = 1;
        int d = static_cast<int>(d0);
        do {
            visited[d] = 1;
            d = m.sigma[d];
        } while (d != static_cast<int>(d0));
    }
    for (int v = 0; v < m.vertex_count; ++v)
        if (!vertex_seen[v]) throw Error("map: vertex " + std::to_string(v) + " has no darts");
    (void)cycles;
}

inline void fill_derived_tables(CombinatorialMap& m) {
    const std::size_t n = m.sigma.size();
    m.sigma_inv.assign(n, -1);
    for (std::size_t d = 0; d < n; ++d) m.sigma_inv[m.sigma[d]] = static_cast<int>(d);
    m.vertex_dart.assign(m.vertex_count, -1);
    for (std::size_t d = 0; d < n; ++d) {
        int v = m.vertex_of[d];
        if (m.vertex_dart[v] < 0 || m.vertex_dart[v] > static_cast<int>(d))
            m.vertex_dart[v] = static_cast<int>(d);
    }
}

} // namespace detail

// Builds a map from a full rotation system: rotations[v] lists the darts
// leaving v in counterclockwise order. Every dart 0..2E-1 must appear
// exactly once across all rotations.
inline CombinatorialMap build_map(int vertex_count,
                                  const std::vector<std::vector<int>>& rotations) {
    if (vertex_count <= 0) throw Error("map: vertex count must be positive");
    if (static_cast<int>(rotations.size()) != vertex_count)
        throw Error("map: one rotation per vertex required");
    std::size_t n = 0;
    for (const auto& rot : rotations) n += rot.size();
    if (n == 0 || n % 2 != 0) throw Error("map: dart count must be even and positive");

    CombinatorialMap m;
    m.vertex_count = vertex_count;
    m.sigma.assign(n, -1);
    m.vertex_of.assign(n, -1);
    for (int v = 0; v < vertex_count; ++v) {
        const auto& rot = rotations[v];
        if (rot.empty()) throw Error("map: vertex " + std::to_string(v) + " has no darts");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || static_cast<std::size_t>(d) >= n)
                throw Error("map: dart id out of range in rotation");
            if (m.vertex_of[d] != -1)
                throw Error("map: dart " + std::to_string(d) + " listed twice");
            m.vertex_of[d] = v;
            m.sigma[d] = rot[(i + 1) % rot.size()];
        }
    }
    detail::check_permutation_tables(m);
    detail::fill_derived_tables(m);
    return m;
}

// Builds a map directly from permutation tables (used for duals and surgery
// results, where rotations are already expressed dart-wise).
inline CombinatorialMap build_map_from_sigma(int vertex_count, std::vector<int> sigma,
                                             std::vector<int> vertex_of) {
    CombinatorialMap m;
    m.vertex_count = vertex_count;
    m.sigma = std::move(sigma);
    m.vertex_of = std::move(vertex_of);
    detail::check_permutation_tables(m);
    detail::fill_derived_tables(m);
    return m;
}

// Faces of the map: orbits of phi, each listed from its smallest dart.
struct FaceSet {
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;

    int count() const { return static_cast<int>(faces.size()); }
};

inline FaceSet trace_faces(const CombinatorialMap& m) {
    FaceSet fs;
    fs.face_of.assign(m.dart_count(), -1);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (fs.face_of[d0] >= 0) continue;
        int id = fs.count();
        std::vector<int> orbit;
        int d = d0;
        do {
            fs.face_of[d] = id;
            orbit.push_back(d);
            d = m.phi(d);
        } while (d != d0);
        fs.faces.push_back(std::move(orbit));
    }
    return fs;
}

inline bool is_connected(const CombinatorialMap& m) {
    if (m.vertex_count == 0) return false;
    std::vector<char> seen(m.vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : m.rotation(v)) {
            int w = m.head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == m.vertex_count;
}

// Genus of the closed orientable surface the map lives on, via Euler's
// formula V - E + F = 2 - 2g. Only defined for connected maps.
inline int genus(const CombinatorialMap& m) {
    if (!is_connected(m)) throw Error("genus: map is not connected");
    int f = trace_faces(m).count();
    int chi = m.vertex_count - m.edge_count() + f;
    if ((2 - chi) % 2 != 0) throw Error("genus: odd Euler defect, map is corrupt");
    int g = (2 - chi) / 2;
    if (g < 0) throw Error("genus: negative genus, map is corrupt");
    return g;
}

// Dual map on the same darts: vertices are the faces of m, and the rotation
// around a face is the phi order. Applying dual twice restores sigma exactly.
inline CombinatorialMap dual(const CombinatorialMap& m) {
    FaceSet fs = trace_faces(m);
    CombinatorialMap d;
    d.vertex_count = fs.count();
    d.sigma.resize(m.dart_count());
    d.vertex_of = fs.face_of;
    for (int dart = 0; dart < m.dart_count(); ++dart) d.sigma[dart] = m.phi(dart);
    detail::check_permutation_tables(d);
    detail::fill_derived_tables(d);
    return d;
}

// Inserts a new edge across the face to the right of dart_from, joining
// tail(dart_from) to tail(dart_to). Both darts must lie on one phi orbit.
// The new edge splits that face in two; dart 2e of the new edge e leaves
// tail(dart_from). Derived tables are kept up to date. Returns e.
inline int add_edge_in_face(CombinatorialMap& m, int dart_from, int dart_to) {
    if (dart_from == dart_to) throw Error("add_edge_in_face: darts must differ");
    int prev_from = -1, prev_to = -1;
    int d = dart_from;
    bool found_to = false;
    do {
        int nxt = m.phi(d);
        if (nxt == dart_from) prev_from = d;
        if (nxt == dart_to) {
            prev_to = d;
            found_to = true;
        }
        d = nxt;
    } while (d != dart_from);
    if (!found_to) throw Error("add_edge_in_face: darts lie on different faces");

    int x = m.dart_count();
    int y = x + 1;
    m.sigma.push_back(-1);
    m.sigma.push_back(-1);
    m.sigma_inv.push_back(-1);
    m.sigma_inv.push_back(-1);
    m.vertex_of.push_back(m.tail(dart_from));
    m.vertex_of.push_back(m.tail(dart_to));

    m.sigma[alpha(prev_from)] = x;
    m.sigma[x] = dart_from;
    m.sigma[alpha(prev_to)] = y;
    m.sigma[y] = dart_to;
    m.sigma_inv[x] = alpha(prev_from);
    m.sigma_inv[dart_from] = x;
    m.sigma_inv[y] = alpha(prev_to);
    m.sigma_inv[dart_to] = y;
    return edge_of(x);
}

// The embedded subgraph induced by a vertex subset, with index maps back to
// the parent. Rotations are the parent rotations filtered to kept darts.
struct InducedMap {
    CombinatorialMap map;
    std::vector<int> vertex_origin;
    std::vector<int> edge_origin;
    std::vector<int> vertex_image;
    std::vector<int> edge_image;
};

inline InducedMap induced_submap(const CombinatorialMap& g, const std::vector<char>& keep) {
    if (static_cast<int>(keep.size()) != g.vertex_count)
        throw Error("induced: keep flag vector has the wrong size");
    InducedMap out;
    out.vertex_image.assign(g.vertex_count, -1);
    out.edge_image.assign(g.edge_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (!keep[v]) continue;
        out.vertex_image[v] = static_cast<int>(out.vertex_origin.size());
        out.vertex_origin.push_back(v);
    }
    if (out.vertex_origin.empty()) throw Error("induced: no vertices kept");
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!keep[g.vertex_of[2 * e]] || !keep[g.vertex_of[2 * e + 1]]) continue;
        out.edge_image[e] = static_cast<int>(out.edge_origin.size());
        out.edge_origin.push_back(e);
    }
    std::vector<std::vector<int>> rotations(out.vertex_origin.size());
    for (std::size_t i = 0; i < out.vertex_origin.size(); ++i) {
        for (int d : g.rotation(out.vertex_origin[i])) {
            int e = out.edge_image[edge_of(d)];
            if (e < 0) continue;
            rotations[i].push_back(2 * e + (d % 2));
        }
        if (rotations[i].empty())
            throw Error("induced: a kept vertex has no kept neighbors");
    }
    out.map = build_map(static_cast<int>(out.vertex_origin.size()), rotations);
    return out;
}

// True if the map has no loops and no parallel edges.
inline bool is_simple(const CombinatorialMap& m) {
    std::vector<std::pair<int, int>> ends;
    ends.reserve(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        int u = m.vertex_of[2 * e];
        int v = m.vertex_of[2 * e + 1];
        if (u == v) return false;
        ends.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

} // namespace schemadraw
