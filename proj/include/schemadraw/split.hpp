#pragma once

#include <schemadraw/map.hpp>

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace schemadraw {

// A planar map with extra diagonals making every face a triangle except the
// designated external face. Dart and edge ids of the input survive; added
// edges are appended, so dropping them restores the input exactly.
struct Triangulation {
    CombinatorialMap map;
    std::vector<int> added_edges;
    int external_dart = -1;
};

// Partition of a triangulated disk into two vertex sets by removing a strip
// of faces between two boundary walls. cut_edges are the removed edges
// joining the two sides, dual_path lists the strip faces from the left wall
// toward the right, u_cycle is the outer cycle of the strip, and upper_path
// is the path of part-2 vertices along which the strip attaches from above.
struct SplitPartition {
    std::vector<char> in_v2;
    std::vector<int> cut_edges;
    std::vector<int> dual_path;
    std::vector<int> u_cycle;
    std::vector<int> upper_path;
};

namespace detail {

inline std::set<std::pair<int, int>> edge_pair_set(const CombinatorialMap& g) {
    std::set<std::pair<int, int>> have;
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.vertex_of[2 * e];
        int v = g.vertex_of[2 * e + 1];
        have.emplace(std::min(u, v), std::max(u, v));
    }
    return have;
}

} // namespace detail

// Adds diagonals until every face except the one containing external_dart
// is a triangle. Diagonals are chosen by ear cutting, skipping any corner
// whose diagonal would duplicate an existing edge, close a loop, or join
// two non-adjacent vertices of one protected path (so a chord-free
// boundary path stays chord-free through triangulation).
inline Triangulation triangulate_interior(const CombinatorialMap& g, int external_dart,
                                          const std::vector<std::vector<int>>& protect = {}) {
    if (external_dart < 0 || external_dart >= g.dart_count())
        throw Error("triangulate: external dart out of range");
    if (genus(g) != 0) throw Error("triangulate: map must be planar");

    std::vector<std::vector<std::pair<int, int>>> member(g.vertex_count);
    for (std::size_t p = 0; p < protect.size(); ++p)
        for (std::size_t i = 0; i < protect[p].size(); ++i) {
            int v = protect[p][i];
            if (v < 0 || v >= g.vertex_count)
                throw Error("triangulate: protected path vertex out of range");
            member[v].emplace_back(static_cast<int>(p), static_cast<int>(i));
        }
    auto would_chord = [&](int a, int c) {
        for (auto [p, i] : member[a])
            for (auto [q, j] : member[c])
                if (p == q && std::abs(i - j) >= 2) return true;
        return false;
    };

    Triangulation t;
    t.map = g;
    t.external_dart = external_dart;
    auto have = detail::edge_pair_set(g);

    for (;;) {
        FaceSet fs = trace_faces(t.map);
        int ext = fs.face_of[external_dart];
        int target = -1;
        for (int f = 0; f < fs.count(); ++f) {
            if (f == ext || fs.faces[f].size() <= 3) continue;
            target = f;
            break;
        }
        if (target < 0) break;

        std::vector<int> walk = fs.faces[target];
        while (walk.size() > 3) {
            const int k = static_cast<int>(walk.size());
            int cut = -1;
            for (int j = 0; j < k; ++j) {
                int a = t.map.tail(walk[(j + k - 1) % k]);
                int c = t.map.tail(walk[(j + 1) % k]);
                if (a == c) continue;
                if (have.count({std::min(a, c), std::max(a, c)})) continue;
                if (would_chord(a, c)) continue;
                cut = j;
                break;
            }
            if (cut < 0) throw Error("triangulate: a face admits no safe diagonal");
            int prev = walk[(cut + k - 1) % k];
            int next = walk[(cut + 1) % k];
            int e = add_edge_in_face(t.map, prev, next);
            t.added_edges.push_back(e);
            int a = t.map.vertex_of[2 * e];
            int c = t.map.vertex_of[2 * e + 1];
            have.emplace(std::min(a, c), std::max(a, c));
            walk[(cut + k - 1) % k] = 2 * e;
            walk.erase(walk.begin() + cut);
        }
    }
    return t;
}

namespace detail {

inline void require_internally_triangulated(const FaceSet& fs, int external_face) {
    for (int f = 0; f < fs.count(); ++f)
        if (f != external_face && fs.faces[f].size() != 3)
            throw Error("split: the map must be triangulated except for the external face");
}

// Connected components of the graph after deleting the cut edges.
inline std::vector<int> side_of_vertices(const CombinatorialMap& g,
                                         const std::vector<char>& removed) {
    std::vector<int> comp(g.vertex_count, -1);
    int next = 0;
    for (int v0 = 0; v0 < g.vertex_count; ++v0) {
        if (comp[v0] >= 0) continue;
        comp[v0] = next;
        std::queue<int> q;
        q.push(v0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int d : g.rotation(v)) {
                if (removed[edge_of(d)]) continue;
                int w = g.head(d);
                if (comp[w] < 0) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    if (next != 2) throw Error("split: removing the strip does not leave exactly two parts");
    return comp;
}

// Condition audit for the removed strip: its faces must tile an outerplane
// graph whose external face is a simple cycle covering all strip vertices.
// Returns that cycle in parent vertex ids.
inline std::vector<int> strip_boundary(const CombinatorialMap& g, const FaceSet& fs,
                                       const std::vector<int>& dual_path) {
    std::vector<char> strip_dart(g.dart_count(), 0);
    std::vector<char> in_strip(g.edge_count(), 0);
    for (int f : dual_path)
        for (int d : fs.faces[f]) {
            strip_dart[d] = 1;
            in_strip[edge_of(d)] = 1;
        }
    std::vector<char> keep_vertex(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_strip[e]) {
            keep_vertex[g.vertex_of[2 * e]] = 1;
            keep_vertex[g.vertex_of[2 * e + 1]] = 1;
        }

    std::vector<int> vmap(g.vertex_count, -1), vback;
    for (int v = 0; v < g.vertex_count; ++v)
        if (keep_vertex[v]) {
            vmap[v] = static_cast<int>(vback.size());
            vback.push_back(v);
        }
    std::vector<int> emap(g.edge_count(), -1), eback;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_strip[e]) {
            emap[e] = static_cast<int>(eback.size());
            eback.push_back(e);
        }
    std::vector<std::vector<int>> rotations(vback.size());
    for (std::size_t i = 0; i < vback.size(); ++i)
        for (int d : g.rotation(vback[i]))
            if (in_strip[edge_of(d)]) rotations[i].push_back(2 * emap[edge_of(d)] + (d % 2));
    CombinatorialMap u = build_map(static_cast<int>(vback.size()), rotations);

    FaceSet ufs = trace_faces(u);
    if (ufs.count() != static_cast<int>(dual_path.size()) + 1)
        throw Error("split: the removed strip is not an outerplane chain");
    int outer = -1;
    for (int f = 0; f < ufs.count(); ++f) {
        bool is_strip_face = true;
        for (int d : ufs.faces[f]) {
            int gd = 2 * eback[edge_of(d)] + (d % 2);
            if (!strip_dart[gd]) is_strip_face = false;
        }
        if (ufs.faces[f].size() != 3) is_strip_face = false;
        if (is_strip_face) continue;
        if (outer >= 0) throw Error("split: the removed strip is not an outerplane chain");
        outer = f;
    }
    if (outer < 0) throw Error("split: the removed strip is not an outerplane chain");

    std::vector<char> seen(u.vertex_count, 0);
    std::vector<int> cycle;
    for (int d : ufs.faces[outer]) {
        int v = u.tail(d);
        if (seen[v]) throw Error("split: the strip boundary repeats a vertex");
        seen[v] = 1;
        cycle.push_back(vback[v]);
    }
    if (static_cast<int>(cycle.size()) != u.vertex_count)
        throw Error("split: a strip vertex is buried off the strip boundary");
    return cycle;
}

// Faces off the strip must sit wholly on one side of the partition.
inline void check_faces_one_sided(const CombinatorialMap& g, const FaceSet& fs,
                                  int external_face, const std::vector<char>& on_path,
                                  const std::vector<char>& in_v2) {
    for (int f = 0; f < fs.count(); ++f) {
        if (f == external_face || on_path[f]) continue;
        bool any1 = false, any2 = false;
        for (int d : fs.faces[f]) (in_v2[g.tail(d)] ? any2 : any1) = true;
        if (any1 && any2) throw Error("split: a face straddles the partition off the strip");
    }
}

inline void check_on_external(const CombinatorialMap& g, const FaceSet& fs, int external_face,
                              int dart) {
    if (dart < 0 || dart >= g.dart_count()) throw Error("split: dart out of range");
    if (fs.face_of[dart] != external_face) throw Error("split: dart is not on the external face");
}

inline std::vector<int> wall_vertices(const CombinatorialMap& g, const std::vector<int>& darts) {
    if (darts.empty()) throw Error("split: a wall path is empty");
    std::vector<int> verts;
    verts.push_back(g.tail(darts[0]));
    for (std::size_t i = 0; i < darts.size(); ++i) {
        if (g.tail(darts[i]) != verts.back())
            throw Error("split: wall path darts do not chain");
        verts.push_back(g.head(darts[i]));
    }
    return verts;
}

inline void check_wall_chord_free(const CombinatorialMap& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.vertex_count, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (pos[verts[i]] >= 0) throw Error("split: a wall path repeats a vertex");
        pos[verts[i]] = static_cast<int>(i);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = pos[g.vertex_of[2 * e]];
        int b = pos[g.vertex_of[2 * e + 1]];
        if (a >= 0 && b >= 0 && std::abs(a - b) >= 2)
            throw Error("split: a wall path has a chord");
    }
}

inline void check_wall_prefix_split(const std::vector<char>& in_v2,
                                    const std::vector<int>& verts) {
    int switches = 0;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (in_v2[verts[i]] != in_v2[verts[i + 1]]) ++switches;
    if (switches != 1) throw Error("split: a wall path fragments across the partition");
}

// Each side of a wall may carry exactly one vertex adjacent to the other
// part, and those two vertices must be the wall's switch pair; lemma
// condition audited after partitioning.
inline void check_wall_attachment(const CombinatorialMap& g, const std::vector<char>& in_v2,
                                  const std::vector<int>& verts) {
    int lo = -1, hi = -1;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        bool cross = false;
        for (int d : g.rotation(v))
            if (in_v2[g.head(d)] != in_v2[v]) cross = true;
        if (!cross) continue;
        int& slot = in_v2[v] ? hi : lo;
        if (slot >= 0) throw Error("split: a wall path must have exactly one attachment vertex");
        slot = static_cast<int>(i);
    }
    if (lo < 0 || hi < 0 || std::abs(lo - hi) != 1)
        throw Error("split: a wall path must have exactly one attachment vertex");
}

// The external orbit of the disk, cut by the two walls into four arcs:
// left wall (bottom corner first), top arc, right wall (top corner first),
// bottom arc. Corners belong to a wall and its adjacent arc alike. fan[v]
// lists the darts leaving a boundary vertex from its outgoing orbit dart
// around to the incoming one; interior edges sit strictly between.
struct DiskFrame {
    std::vector<int> orbit;
    std::vector<int> lverts, rverts;
    std::vector<int> top, bottom;
    std::vector<char> on_lwall, on_rwall, on_top, on_bottom, on_orbit;
    std::vector<int> lrank, rrank;
    std::vector<std::vector<int>> fan;
};

inline DiskFrame disk_frame(const CombinatorialMap& g, const FaceSet& fs, int external_face,
                            const std::vector<int>& left, const std::vector<int>& right) {
    DiskFrame F;
    F.orbit = fs.faces[external_face];
    const int m = static_cast<int>(F.orbit.size());
    const int n = g.vertex_count;

    std::vector<int> dart_pos(g.dart_count(), -1);
    F.on_orbit.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        int v = g.tail(F.orbit[i]);
        if (F.on_orbit[v]) throw Error("split: the external face must be a simple cycle");
        F.on_orbit[v] = 1;
        dart_pos[F.orbit[i]] = i;
    }

    F.lverts = wall_vertices(g, left);
    F.rverts = wall_vertices(g, right);
    std::vector<char> owned(m, 0);
    for (const std::vector<int>* wall : {&left, &right})
        for (std::size_t i = 0; i < wall->size(); ++i) {
            int p = dart_pos[(*wall)[i]];
            if (owned[p]) throw Error("split: the walls overlap");
            owned[p] = 1;
            if (i > 0 && p != (dart_pos[(*wall)[i - 1]] + 1) % m)
                throw Error("split: wall path darts do not chain");
        }

    F.top.push_back(F.lverts.back());
    for (int q = (dart_pos[left.back()] + 1) % m; q != dart_pos[right.front()]; q = (q + 1) % m) {
        if (owned[q]) throw Error("split: the walls overlap");
        F.top.push_back(g.head(F.orbit[q]));
    }
    if (F.top.back() != F.rverts.front()) throw Error("split: the walls overlap");

    F.bottom.push_back(F.rverts.back());
    for (int q = (dart_pos[right.back()] + 1) % m; q != dart_pos[left.front()]; q = (q + 1) % m) {
        if (owned[q]) throw Error("split: the walls overlap");
        F.bottom.push_back(g.head(F.orbit[q]));
    }
    if (F.bottom.back() != F.lverts.front()) throw Error("split: the walls overlap");

    F.on_lwall.assign(n, 0);
    F.on_rwall.assign(n, 0);
    F.on_top.assign(n, 0);
    F.on_bottom.assign(n, 0);
    F.lrank.assign(n, -1);
    F.rrank.assign(n, -1);
    for (std::size_t i = 0; i < F.lverts.size(); ++i) {
        F.on_lwall[F.lverts[i]] = 1;
        F.lrank[F.lverts[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < F.rverts.size(); ++i) {
        F.on_rwall[F.rverts[i]] = 1;
        F.rrank[F.rverts[i]] = static_cast<int>(i);
    }
    for (int v : F.top) F.on_top[v] = 1;
    for (int v : F.bottom) F.on_bottom[v] = 1;

    F.fan.assign(n, {});
    for (int i = 0; i < m; ++i) {
        int v = g.tail(F.orbit[i]);
        int d = F.orbit[i];
        const int deg = g.degree(v);
        for (int s = 0; s < deg; ++s) {
            F.fan[v].push_back(d);
            d = g.sigma[d];
        }
    }
    return F;
}

// Splits a triangulated disk between two chord-free wall paths given as
// chained dart runs on the external orbit. The partition is encoded by a
// separating path of part-2 vertices joining the walls above the base:
// part 2 is everything the top arc reaches without stepping past the path,
// part 1 the rest. The path starts as a breadth-first route and is then
// straightened vertex by vertex: wherever a vertex meets the other part in
// more fan runs than its boundary role allows, the path is rerouted along
// that vertex's fan (hugging it or its far side) or reanchored down the
// wall. One repair is applied per pass; the pass count is capped, and the
// final partition is audited against the stated strip conditions.
inline SplitPartition split_between(const CombinatorialMap& g, const FaceSet& fs,
                                    int external_face, const std::vector<int>& left,
                                    const std::vector<int>& right) {
    for (int d : left) check_on_external(g, fs, external_face, d);
    for (int d : right) check_on_external(g, fs, external_face, d);
    require_internally_triangulated(fs, external_face);
    if (!is_simple(g)) throw Error("split: the map must be simple");
    for (const std::vector<int>* wall : {&left, &right})
        for (int d : *wall)
            if (fs.face_of[alpha(d)] == external_face)
                throw Error("split: the wall edge is a bridge");

    DiskFrame F = disk_frame(g, fs, external_face, left, right);
    check_wall_chord_free(g, F.lverts);
    check_wall_chord_free(g, F.rverts);

    const int n = g.vertex_count;
    std::vector<int> pi;
    if (F.lverts.back() == F.rverts.front()) {
        pi = {F.lverts.back()};
    } else {
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0), is_target(n, 0);
        for (std::size_t i = 0; i + 1 < F.rverts.size(); ++i) is_target[F.rverts[i]] = 1;
        std::queue<int> q;
        int found = -1;
        for (std::size_t i = 1; i < F.lverts.size() && found < 0; ++i) {
            int s = F.lverts[i];
            if (is_target[s]) found = s;
            seen[s] = 1;
            q.push(s);
        }
        while (!q.empty() && found < 0) {
            int u = q.front();
            q.pop();
            for (int d : g.rotation(u)) {
                int w = g.head(d);
                if (seen[w]) continue;
                if (is_target[w]) {
                    parent[w] = u;
                    found = w;
                    break;
                }
                if (F.on_bottom[w] || F.on_lwall[w] || F.on_rwall[w]) continue;
                seen[w] = 1;
                parent[w] = u;
                q.push(w);
            }
        }
        if (found < 0) throw Error("split: no separating path exists");
        for (int v = found; v >= 0; v = parent[v]) pi.push_back(v);
        std::reverse(pi.begin(), pi.end());
    }

    std::vector<char> in_v2(n, 0), on_pi(n, 0);
    std::vector<int> pi_index(n, -1);

    auto truncate_to_walls = [&](std::vector<int>& np) {
        int lo = -1, hi = -1;
        for (int i = 0; i < static_cast<int>(np.size()); ++i)
            if (F.on_lwall[np[i]]) lo = i;
        for (int i = static_cast<int>(np.size()) - 1; i >= 0; --i)
            if (F.on_rwall[np[i]]) hi = i;
        if (lo < 0 || hi < 0 || lo > hi) return false;
        if (lo > 0 || hi + 1 < static_cast<int>(np.size()))
            np = std::vector<int>(np.begin() + lo, np.begin() + hi + 1);
        return true;
    };

    auto apply_reanchor = [&](int w) {
        bool leftside = F.on_lwall[w] != 0;
        int pick = -1;
        for (int d : F.fan[w]) {
            int h = g.head(d);
            if (!on_pi[h]) continue;
            int idx = pi_index[h];
            pick = (pick < 0) ? idx : (leftside ? std::max(pick, idx) : std::min(pick, idx));
        }
        if (pick < 0) return false;
        std::vector<int> np;
        if (leftside) {
            np.push_back(w);
            np.insert(np.end(), pi.begin() + pick, pi.end());
        } else {
            np.assign(pi.begin(), pi.begin() + pick + 1);
            np.push_back(w);
        }
        if (!truncate_to_walls(np) || np == pi) return false;
        pi = std::move(np);
        return true;
    };

    auto apply_hug = [&](int w, bool complement) {
        const bool boundary = F.on_orbit[w] != 0;
        std::vector<int> fl = boundary ? F.fan[w] : g.rotation(w);
        const int deg = static_cast<int>(fl.size());
        std::vector<int> ipos;
        for (int p = 0; p < deg; ++p)
            if (on_pi[g.head(fl[p])]) ipos.push_back(p);
        const int t = static_cast<int>(ipos.size());
        if (t < 2) return false;

        auto monotone = [&](const std::vector<int>& order) {
            bool inc = true, dec = true;
            for (int q = 1; q < t; ++q) {
                int prev = pi_index[g.head(fl[order[q - 1]])];
                int cur = pi_index[g.head(fl[order[q]])];
                if (cur < prev) inc = false;
                if (cur > prev) dec = false;
            }
            return inc || dec;
        };

        std::vector<int> order;
        if (boundary) {
            if (!monotone(ipos)) return false;
            order = ipos;
        } else {
            for (int c = 0; c < t && order.empty(); ++c) {
                std::vector<int> cand(t);
                for (int q = 0; q < t; ++q) cand[q] = ipos[(c + q) % t];
                if (monotone(cand)) order = cand;
            }
            if (order.empty()) return false;
        }

        std::vector<int> walk;
        if (!complement) {
            for (int p = order.front();; p = (p + 1) % deg) {
                walk.push_back(g.head(fl[p]));
                if (p == order.back()) break;
            }
        } else {
            for (int p = order.back();; p = (p + 1) % deg) {
                walk.push_back(g.head(fl[p]));
                if (p == order.front()) break;
            }
        }
        if (pi_index[walk.front()] > pi_index[walk.back()])
            std::reverse(walk.begin(), walk.end());
        int i = pi_index[walk.front()], j = pi_index[walk.back()];
        if (i < 0 || j < 0 || i >= j) return false;
        for (std::size_t q = 1; q + 1 < walk.size(); ++q) {
            int mid = walk[q];
            if (F.on_bottom[mid]) return false;
            if (on_pi[mid] && (pi_index[mid] <= i || pi_index[mid] >= j)) return false;
        }

        std::vector<int> np(pi.begin(), pi.begin() + i + 1);
        np.insert(np.end(), walk.begin() + 1, walk.end());
        np.insert(np.end(), pi.begin() + j + 1, pi.end());
        std::vector<char> dup(n, 0);
        for (int v : np) {
            if (dup[v]) return false;
            dup[v] = 1;
        }
        if (!truncate_to_walls(np) || np == pi) return false;
        pi = std::move(np);
        return true;
    };

    enum { kReanchor = 0, kHug = 1, kComplement = 2 };
    struct Flag {
        int prio, vertex, kind;
        bool operator<(const Flag& o) const {
            return prio != o.prio ? prio < o.prio : vertex < o.vertex;
        }
    };

    const long long cap = 4LL * n * n + 64;
    for (long long round = 0;; ++round) {
        if (round > cap) throw Error("split: strip straightening failed to converge");

        std::fill(on_pi.begin(), on_pi.end(), 0);
        std::fill(pi_index.begin(), pi_index.end(), -1);
        for (std::size_t i = 0; i < pi.size(); ++i) {
            if (on_pi[pi[i]]) throw Error("split: the separating path repeats a vertex");
            on_pi[pi[i]] = 1;
            pi_index[pi[i]] = static_cast<int>(i);
        }
        if (!F.on_lwall[pi.front()] || !F.on_rwall[pi.back()])
            throw Error("split: the separating path tangles the walls");
        const int ka = F.lrank[pi.front()];
        const int kb = F.rrank[pi.back()];
        if (ka < 1 || kb > static_cast<int>(F.rverts.size()) - 2)
            throw Error("split: the separating path touches the base");
        const int va = pi.front(), vb = pi.back();
        const int la = F.lverts[ka - 1], ra = F.rverts[kb + 1];

        std::fill(in_v2.begin(), in_v2.end(), 0);
        for (int v : pi) in_v2[v] = 1;
        {
            std::queue<int> q;
            for (int v : F.top)
                if (!in_v2[v]) {
                    in_v2[v] = 1;
                    q.push(v);
                }
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int d : g.rotation(u)) {
                    int w = g.head(d);
                    if (!in_v2[w]) {
                        in_v2[w] = 1;
                        q.push(w);
                    }
                }
            }
        }

        std::vector<Flag> flags;
        for (int v = 0; v < n; ++v) {
            const bool boundary = F.on_orbit[v] != 0;
            std::vector<int> fl = boundary ? F.fan[v] : g.rotation(v);
            const bool cyclic = !boundary;
            const int deg = static_cast<int>(fl.size());
            auto runs_of = [&](bool want) {
                int runs = 0;
                for (int i = 0; i < deg; ++i) {
                    bool cur = (in_v2[g.head(fl[i])] != 0) == want;
                    bool prev = i > 0 ? (in_v2[g.head(fl[i - 1])] != 0) == want
                                      : (cyclic && (in_v2[g.head(fl[deg - 1])] != 0) == want);
                    if (cur && !prev) ++runs;
                }
                if (cyclic && runs == 0 && deg > 0 && (in_v2[g.head(fl[0])] != 0)) runs = want ? 1 : 0;
                if (cyclic && runs == 0 && deg > 0 && !(in_v2[g.head(fl[0])] != 0)) runs = want ? 0 : 1;
                return runs;
            };

            if (!in_v2[v]) {
                int r2 = runs_of(true);
                int alive = 0;
                for (int d : fl) alive += !in_v2[g.head(d)];
                if ((F.on_lwall[v] || F.on_rwall[v]) && !F.on_bottom[v]) {
                    bool at_switch = (v == la && ka >= 2) || (v == ra && kb + 2 <= static_cast<int>(F.rverts.size()) - 1);
                    int limit = at_switch ? 1 : 0;
                    bool whisker = at_switch && alive <= 1;
                    if (r2 > limit || whisker) flags.push_back({0, v, kReanchor});
                } else if (F.on_bottom[v]) {
                    bool cornered = (v == F.lverts.front() && ka >= 2) ||
                                    (v == F.rverts.back() && kb + 2 <= static_cast<int>(F.rverts.size()) - 1);
                    if (r2 > (cornered ? 0 : 1)) flags.push_back({1, v, kHug});
                } else {
                    if (alive <= 1) flags.push_back({3, v, kComplement});
                    else if (r2 > 1) flags.push_back({4, v, kHug});
                }
            } else {
                int r1 = runs_of(false);
                if (!on_pi[v]) {
                    if (r1 > 0) throw Error("split: partition invariant broken");
                    continue;
                }
                if (v == va || v == vb) {
                    if (r1 > 1) flags.push_back({0, v, kHug});
                } else if (F.on_lwall[v] || F.on_rwall[v]) {
                    throw Error("split: the separating path tangles the walls");
                } else if (F.on_bottom[v]) {
                    throw Error("split: the separating path touches the base");
                } else if (F.on_top[v]) {
                    bool corner = (v == F.top.front() || v == F.top.back());
                    if (r1 > (corner ? 0 : 1)) flags.push_back({2, v, kHug});
                } else {
                    if (r1 > 1) flags.push_back({2, v, kHug});
                }
            }
        }

        if (flags.empty()) break;
        std::sort(flags.begin(), flags.end());
        bool applied = false;
        for (const Flag& f : flags) {
            if (f.kind == kReanchor ? apply_reanchor(f.vertex)
                                    : apply_hug(f.vertex, f.kind == kComplement)) {
                applied = true;
                break;
            }
        }
        if (!applied) throw Error("split: strip straightening failed to converge");
    }

    std::vector<int> cut;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_v2[g.vertex_of[2 * e]] != in_v2[g.vertex_of[2 * e + 1]]) cut.push_back(e);

    std::vector<char> on_path(fs.count(), 0);
    std::vector<std::pair<int, int>> keyed;
    for (int f = 0; f < fs.count(); ++f) {
        if (f == external_face) continue;
        bool any1 = false, any2 = false;
        int key = INT_MAX;
        for (int d : fs.faces[f]) {
            int v = g.tail(d);
            (in_v2[v] ? any2 : any1) = true;
            if (pi_index[v] >= 0) key = std::min(key, pi_index[v]);
        }
        if (!any1 || !any2) continue;
        if (key == INT_MAX) throw Error("split: partition invariant broken");
        on_path[f] = 1;
        keyed.emplace_back(key, f);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> strip;
    for (auto& [key, f] : keyed) strip.push_back(f);

    std::vector<char> removed(g.edge_count(), 0);
    for (int e : cut) removed[e] = 1;
    std::vector<int> comp = side_of_vertices(g, removed);
    for (int v = 0; v < n; ++v)
        if ((comp[v] == comp[F.lverts.front()]) == (in_v2[v] != 0))
            throw Error("split: a half is disconnected");

    check_faces_one_sided(g, fs, external_face, on_path, in_v2);
    check_wall_prefix_split(in_v2, F.lverts);
    check_wall_prefix_split(in_v2, F.rverts);
    check_wall_attachment(g, in_v2, F.lverts);
    check_wall_attachment(g, in_v2, F.rverts);

    SplitPartition out;
    out.in_v2 = in_v2;
    out.cut_edges = std::move(cut);
    out.dual_path = std::move(strip);
    out.u_cycle = strip_boundary(g, fs, out.dual_path);
    out.upper_path = std::move(pi);
    return out;
}

} // namespace detail

// Splits a triangulated disk through two external edges, given by their
// darts on the external face orbit. The side containing the tail of dart_l
// is reported as part 1; the head of dart_r lands there too, the other two
// endpoints in part 2. The edges may share a vertex, in which case the
// strip degenerates to the fan around the shared corner.
inline SplitPartition split_two_edges(const CombinatorialMap& g, const FaceSet& fs,
                                      int external_face, int dart_l, int dart_r) {
    detail::check_on_external(g, fs, external_face, dart_l);
    detail::check_on_external(g, fs, external_face, dart_r);
    if (edge_of(dart_l) == edge_of(dart_r)) throw Error("split: the two edges must differ");

    SplitPartition out = detail::split_between(g, fs, external_face, {dart_l}, {dart_r});
    if (out.in_v2[g.tail(dart_l)] || !out.in_v2[g.head(dart_l)] || out.in_v2[g.head(dart_r)] ||
        !out.in_v2[g.tail(dart_r)])
        throw Error("split: endpoints landed on unexpected sides");
    return out;
}

// Splits a triangulated disk between two vertex-disjoint chord-free wall
// paths on the external face, each given as a chained dart sequence along
// the external orbit. The strip runs from the left wall to the right wall;
// each wall splits into a prefix in one part and a suffix in the other,
// attached to the strip at its switch pair only.
inline SplitPartition split_two_paths(const CombinatorialMap& g, const FaceSet& fs,
                                      int external_face, const std::vector<int>& left,
                                      const std::vector<int>& right) {
    std::vector<int> lverts = detail::wall_vertices(g, left);
    std::vector<int> rverts = detail::wall_vertices(g, right);
    {
        std::vector<char> on_left(g.vertex_count, 0);
        for (int v : lverts) on_left[v] = 1;
        for (int v : rverts)
            if (on_left[v]) throw Error("split: the paths must not share a vertex");
    }
    return detail::split_between(g, fs, external_face, left, right);
}

} // namespace schemadraw
