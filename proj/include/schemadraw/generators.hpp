#pragma once

#include <schemadraw/map.hpp>
#include <schemadraw/rng.hpp>

#include <set>
#include <utility>
#include <vector>

namespace schemadraw {

// Quadrangulated flat torus with rows*cols vertices. Vertex (i,j) has id
// cols*i + j, an east edge 2v and a north edge 2v+1; rotations run east,
// north, west, south. Sides below 3 would create parallel edges.
inline CombinatorialMap torus_grid(int rows, int cols) {
    if (rows < 3 || cols < 3) throw Error("torus_grid: rows and cols must be at least 3");
    int n = rows * cols;
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = cols * i + j;
            int west = cols * i + (j + cols - 1) % cols;
            int south = cols * ((i + rows - 1) % rows) + j;
            rot[v] = {4 * v, 4 * v + 2, 4 * west + 1, 4 * south + 3};
        }
    return build_map(n, rot);
}

namespace detail {

// Planar grid with edge ids recorded per vertex, so faces can be addressed
// by their lower-left corner.
struct PlanarGridIndex {
    int rows = 0, cols = 0;
    std::vector<int> east, north;

    int vertex(int i, int j) const { return cols * i + j; }
    int east_dart(int i, int j) const { return 2 * east[vertex(i, j)]; }
};

inline PlanarGridIndex planar_grid_index(int rows, int cols) {
    PlanarGridIndex gi;
    gi.rows = rows;
    gi.cols = cols;
    gi.east.assign(rows * cols, -1);
    gi.north.assign(rows * cols, -1);
    int next = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = gi.vertex(i, j);
            if (j + 1 < cols) gi.east[v] = next++;
            if (i + 1 < rows) gi.north[v] = next++;
        }
    return gi;
}

inline CombinatorialMap planar_grid_from_index(const PlanarGridIndex& gi) {
    int n = gi.rows * gi.cols;
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < gi.rows; ++i)
        for (int j = 0; j < gi.cols; ++j) {
            int v = gi.vertex(i, j);
            std::vector<int>& r = rot[v];
            if (gi.east[v] >= 0) r.push_back(2 * gi.east[v]);
            if (gi.north[v] >= 0) r.push_back(2 * gi.north[v]);
            if (j > 0) r.push_back(2 * gi.east[gi.vertex(i, j - 1)] + 1);
            if (i > 0) r.push_back(2 * gi.north[gi.vertex(i - 1, j)] + 1);
        }
    return build_map(n, rot);
}

// Glues a handle between two vertex-disjoint quad faces given as phi orbits.
// Corner i of face a is joined to corner (4-i)%4 of face b; the reversed
// matching turns the two squares into a tube of four new quads, dropping the
// Euler characteristic by exactly 2.
inline void add_tube(CombinatorialMap& m, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != 4 || b.size() != 4) throw Error("add_tube: faces must be quads");
    int base = m.dart_count();
    for (int i = 0; i < 4; ++i) {
        int j = (4 - i) % 4;
        m.sigma.push_back(-1);
        m.sigma.push_back(-1);
        m.sigma_inv.push_back(-1);
        m.sigma_inv.push_back(-1);
        m.vertex_of.push_back(m.tail(a[i]));
        m.vertex_of.push_back(m.tail(b[j]));
    }
    for (int i = 0; i < 4; ++i) {
        int j = (4 - i) % 4;
        int x = base + 2 * i;
        int y = x + 1;
        int pa = alpha(a[(i + 3) % 4]);
        int pb = alpha(b[(j + 3) % 4]);
        m.sigma[pa] = x;
        m.sigma[x] = a[i];
        m.sigma[pb] = y;
        m.sigma[y] = b[j];
        m.sigma_inv[x] = pa;
        m.sigma_inv[a[i]] = x;
        m.sigma_inv[y] = pb;
        m.sigma_inv[b[j]] = y;
    }
}

} // namespace detail

// Square planar grid (genus 0) with rows*cols vertices.
inline CombinatorialMap planar_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw Error("planar_grid: rows and cols must be at least 2");
    return detail::planar_grid_from_index(detail::planar_grid_index(rows, cols));
}

// Connected sum of g handles over a size x size planar grid: each handle is
// a tube glued between two disjoint quad faces. The resulting genus is
// checked before returning.
inline CombinatorialMap genus_g_grid(int g, int size) {
    if (g < 0) throw Error("genus_g_grid: genus must be nonnegative");
    if (g == 0) {
        if (size < 2) throw Error("genus_g_grid: size must be at least 2");
        CombinatorialMap m = planar_grid(size, size);
        if (genus(m) != 0) throw Error("genus_g_grid: construction failure");
        return m;
    }
    int min_size = std::max(4, 2 * g);
    if (size < min_size)
        throw Error("genus_g_grid: size must be at least " + std::to_string(min_size) +
                    " for genus " + std::to_string(g));
    auto gi = detail::planar_grid_index(size, size);
    CombinatorialMap m = detail::planar_grid_from_index(gi);
    FaceSet fs = trace_faces(m);
    auto face_orbit = [&](int i, int j) {
        // Quad with corners (i,j)..(i+1,j+1) lies right of the west dart
        // along its bottom edge.
        const auto& f = fs.faces[fs.face_of[alpha(gi.east_dart(i, j))]];
        if (f.size() != 4) throw Error("genus_g_grid: construction failure");
        return f;
    };
    for (int t = 0; t < g; ++t) detail::add_tube(m, face_orbit(0, 2 * t), face_orbit(2, 2 * t));
    detail::check_permutation_tables(m);
    detail::fill_derived_tables(m);
    if (!is_simple(m) || !is_connected(m) || genus(m) != g)
        throw Error("genus_g_grid: construction failure");
    return m;
}

// Random connected simple graph with a uniformly shuffled rotation at every
// vertex. The genus is whatever the rotations induce. Deterministic in seed.
inline CombinatorialMap random_rotation(int n, int m_edges, std::uint32_t seed) {
    if (n < 2) throw Error("random_rotation: need at least two vertices");
    if (m_edges < n - 1) throw Error("random_rotation: too few edges to stay connected");
    if (static_cast<long long>(m_edges) > static_cast<long long>(n) * (n - 1) / 2)
        throw Error("random_rotation: too many edges for a simple graph");
    Rng rng(seed);
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m_edges);
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(static_cast<std::uint32_t>(v)));
        used.insert({u, v});
        edges.emplace_back(u, v);
    }
    while (static_cast<int>(edges.size()) < m_edges) {
        int a = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        int b = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        if (a == b) continue;
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        if (!used.insert(key).second) continue;
        edges.push_back(key);
    }
    std::vector<std::vector<int>> rot(n);
    for (int e = 0; e < m_edges; ++e) {
        rot[edges[e].first].push_back(2 * e);
        rot[edges[e].second].push_back(2 * e + 1);
    }
    for (auto& r : rot) rng.shuffle(r);
    return build_map(n, rot);
}

// Torus grid with one random diagonal per quad face: a triangulated map of
// genus 1 with rows*cols vertices. Deterministic in seed.
inline CombinatorialMap torus_triangulation(int rows, int cols, std::uint32_t seed) {
    CombinatorialMap m = torus_grid(rows, cols);
    Rng rng(seed);
    FaceSet fs = trace_faces(m);
    for (const auto& f : fs.faces) {
        if (f.size() != 4) throw Error("torus_triangulation: construction failure");
        if (rng.coin())
            add_edge_in_face(m, f[0], f[2]);
        else
            add_edge_in_face(m, f[1], f[3]);
    }
    if (!is_simple(m)) throw Error("torus_triangulation: diagonals collide, grid too small");
    if (genus(m) != 1) throw Error("torus_triangulation: construction failure");
    return m;
}

} // namespace schemadraw
