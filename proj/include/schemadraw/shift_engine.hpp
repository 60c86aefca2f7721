#pragma once

#include <schemadraw/map.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace schemadraw {

// Incremental grid placement by the shift method. Vertices enter left to
// right along a bottom base line, then one at a time on top of the current
// envelope, each insertion shifting parts of the drawing right to keep new
// edges visible. Every placed vertex keeps x+y even, so slope +-1 lines
// from envelope vertices always cross at lattice points; wall insertions
// therefore shift by two units, not one.
class ShiftEngine {
public:
    enum class Insert { middle, wall_left, wall_right };

    explicit ShiftEngine(int vertex_count)
        : x(vertex_count, 0), y(vertex_count, 0), placed_(vertex_count, 0),
          env_pos_(vertex_count, -1), bag_(vertex_count) {}

    // first_gap_extra widens the gap between the first two base vertices; it
    // must be even so the lattice parity of the contour survives.
    void place_base(const std::vector<int>& base, long long first_gap_extra = 0) {
        if (!env_.empty()) throw Error("shift: the base is already placed");
        if (base.size() < 2) throw Error("shift: the base needs at least two vertices");
        if (first_gap_extra < 0 || first_gap_extra % 2 != 0)
            throw Error("shift: base padding must be even and nonnegative");
        for (std::size_t i = 0; i < base.size(); ++i) {
            int v = base[i];
            check_new(v);
            x[v] = 2 * static_cast<long long>(i) + (i > 0 ? first_gap_extra : 0);
            y[v] = 0;
            placed_[v] = 1;
            bag_[v] = {v};
            env_.push_back(v);
        }
        reindex();
    }

    // The classic start: the third vertex of a fully triangulated graph sits
    // between the base pair without any shift.
    void place_first(int v) {
        if (env_.size() != 2) throw Error("shift: the first vertex needs a two-vertex base");
        check_new(v);
        int a = env_[0], b = env_[1];
        x[v] = (x[a] + x[b]) / 2;
        y[v] = (x[b] - x[a]) / 2;
        placed_[v] = 1;
        bag_[v] = {v};
        env_.insert(env_.begin() + 1, v);
        reindex();
    }

    void insert(int v, const std::vector<int>& placed_neighbors, Insert kind) {
        check_new(v);
        if (placed_neighbors.size() < 2)
            throw Error("shift: a vertex must attach to at least two placed vertices");
        int l = static_cast<int>(env_.size()), r = -1;
        for (int w : placed_neighbors) {
            if (w < 0 || w >= static_cast<int>(placed_.size()) || !placed_[w] || env_pos_[w] < 0)
                throw Error("shift: insertion fan is not a contour run");
            l = std::min(l, env_pos_[w]);
            r = std::max(r, env_pos_[w]);
        }
        if (r - l + 1 != static_cast<int>(placed_neighbors.size()))
            throw Error("shift: insertion fan is not a contour run");

        const int end = static_cast<int>(env_.size());
        if (kind == Insert::middle) {
            for (int i = l + 1; i < r; ++i) shift_bag(env_[i], 1);
            for (int i = r; i < end; ++i) shift_bag(env_[i], 2);
        } else if (kind == Insert::wall_right) {
            for (int i = l + 1; i < end; ++i) shift_bag(env_[i], 2);
        } else {
            for (int i = r; i < end; ++i) shift_bag(env_[i], 2);
        }

        int a = env_[l], b = env_[r];
        if (kind == Insert::middle) {
            long long sx = x[a] + x[b] + y[b] - y[a];
            long long sy = x[b] - x[a] + y[a] + y[b];
            if (sx % 2 != 0 || sy % 2 != 0) throw Error("shift: parity broken");
            x[v] = sx / 2;
            y[v] = sy / 2;
            if (!(x[a] < x[v] && x[v] < x[b]))
                throw Error("shift: the peak escapes its span");
        } else if (kind == Insert::wall_right) {
            x[v] = x[b];
            y[v] = y[a] + (x[v] - x[a]);
            if (x[v] <= x[a] || y[v] <= y[b]) throw Error("shift: wall insertion needs room");
        } else {
            x[v] = x[a];
            y[v] = y[b] + (x[b] - x[v]);
            if (x[v] >= x[b] || y[v] <= y[a]) throw Error("shift: wall insertion needs room");
        }
        for (int i = l + 1; i < r; ++i) {
            int w = env_[i];
            bool under_left = y[w] < y[a] + (x[w] - x[a]);
            bool under_right = y[w] < y[b] + (x[b] - x[w]);
            bool ok = (kind == Insert::middle && under_left && under_right) ||
                      (kind == Insert::wall_right && under_left) ||
                      (kind == Insert::wall_left && under_right);
            if (!ok) throw Error("shift: a covered vertex blocks the insertion");
        }

        placed_[v] = 1;
        bag_[v] = {v};
        for (int i = l + 1; i < r; ++i) {
            int w = env_[i];
            bag_[v].insert(bag_[v].end(), bag_[w].begin(), bag_[w].end());
            bag_[w].clear();
        }
        env_.erase(env_.begin() + l + 1, env_.begin() + r);
        env_.insert(env_.begin() + l + 1, v);
        reindex();
    }

    bool placed(int v) const { return placed_[v] != 0; }
    const std::vector<int>& envelope() const { return env_; }

    std::vector<long long> x, y;

private:
    void check_new(int v) {
        if (v < 0 || v >= static_cast<int>(placed_.size()))
            throw Error("shift: vertex out of range");
        if (placed_[v]) throw Error("shift: vertex placed twice");
    }

    void shift_bag(int w, long long d) {
        for (int u : bag_[w]) x[u] += d;
    }

    void reindex() {
        std::fill(env_pos_.begin(), env_pos_.end(), -1);
        for (std::size_t i = 0; i < env_.size(); ++i) env_pos_[env_[i]] = static_cast<int>(i);
    }

    std::vector<char> placed_;
    std::vector<int> env_pos_;
    std::vector<std::vector<int>> bag_;
    std::vector<int> env_;
};

namespace detail {

// The external face as a vertex cycle; every vertex must appear once.
inline std::vector<int> simple_external_cycle(const CombinatorialMap& g, const FaceSet& fs,
                                              int external_face) {
    std::vector<int> cyc;
    std::vector<char> seen(g.vertex_count, 0);
    for (int d : fs.faces[external_face]) {
        int v = g.tail(d);
        if (seen[v]) throw Error("canonical: the external face is not a simple cycle");
        seen[v] = 1;
        cyc.push_back(v);
    }
    return cyc;
}

} // namespace detail

// Removal order of an internally triangulated disk, reversed into an
// insertion order that starts with the given boundary path. A vertex leaves
// only from the upper envelope, never from the base, never from inside a
// wall (walls shed strictly top-down), and only when it has no edge to a
// non-adjacent envelope vertex. Covered base vertices resurface on the
// envelope when their covering vertex leaves.
inline std::vector<int> canonical_order_from_path(const CombinatorialMap& g, const FaceSet& fs,
                                                  int external_face,
                                                  const std::vector<int>& base,
                                                  const std::vector<int>& left_wall = {},
                                                  const std::vector<int>& right_wall = {}) {
    if (base.size() < 2) throw Error("canonical: the base needs at least two vertices");
    std::vector<int> cyc = detail::simple_external_cycle(g, fs, external_face);
    const int m = static_cast<int>(cyc.size());
    const int t = static_cast<int>(base.size()) - 1;
    if (t + 1 > m) throw Error("canonical: the base is not a boundary path");

    int i0 = -1;
    for (int i = 0; i < m; ++i)
        if (cyc[i] == base[0]) i0 = i;
    if (i0 < 0) throw Error("canonical: the base is not a boundary path");
    int dir = 0;
    auto matches = [&](int d) {
        for (int j = 0; j <= t; ++j)
            if (cyc[((i0 + d * j) % m + m) % m] != base[j]) return false;
        return true;
    };
    if (matches(1))
        dir = 1;
    else if (matches(-1))
        dir = -1;
    else
        throw Error("canonical: the base is not a boundary path");

    std::vector<char> in_base(g.vertex_count, 0);
    std::vector<int> base_pos(g.vertex_count, -1);
    for (std::size_t j = 0; j < base.size(); ++j) {
        in_base[base[j]] = 1;
        base_pos[base[j]] = static_cast<int>(j);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int pa = base_pos[g.vertex_of[2 * e]];
        int pb = base_pos[g.vertex_of[2 * e + 1]];
        if (pa >= 0 && pb >= 0 && std::abs(pa - pb) >= 2)
            throw Error("canonical: the base path has a chord");
    }

    // Envelope walked from base.front() the long way round to base.back().
    std::vector<int> env;
    for (int s = 0; s <= m - t; ++s) env.push_back(cyc[((i0 - dir * s) % m + m) % m]);

    std::vector<int> env_prev(g.vertex_count, -1), env_next(g.vertex_count, -1);
    std::vector<char> on_env(g.vertex_count, 0);
    for (std::size_t i = 0; i < env.size(); ++i) {
        on_env[env[i]] = 1;
        if (i > 0) env_prev[env[i]] = env[i - 1];
        if (i + 1 < env.size()) env_next[env[i]] = env[i + 1];
    }

    std::vector<int> wall_side(g.vertex_count, -1), wall_rank(g.vertex_count, -1);
    const std::vector<int>* walls[2] = {&left_wall, &right_wall};
    int wall_top[2];
    for (int s = 0; s < 2; ++s) {
        wall_top[s] = static_cast<int>(walls[s]->size()) - 1;
        for (std::size_t j = 0; j < walls[s]->size(); ++j) {
            int v = (*walls[s])[j];
            if (v < 0 || v >= g.vertex_count || in_base[v] || wall_side[v] >= 0)
                throw Error("canonical: malformed wall list");
            wall_side[v] = s;
            wall_rank[v] = static_cast<int>(j);
        }
    }

    std::vector<char> alive(g.vertex_count, 1);
    auto removable = [&](int v) {
        if (!alive[v] || !on_env[v] || in_base[v]) return false;
        if (wall_side[v] >= 0 && wall_rank[v] != wall_top[wall_side[v]]) return false;
        for (int d : g.rotation(v)) {
            int w = g.head(d);
            if (alive[w] && on_env[w] && w != env_prev[v] && w != env_next[v]) return false;
        }
        return true;
    };

    std::set<int> cand;
    for (int v : env)
        if (removable(v)) cand.insert(v);

    std::vector<int> removed;
    int to_remove = g.vertex_count - static_cast<int>(base.size());
    while (static_cast<int>(removed.size()) < to_remove) {
        if (cand.empty()) throw Error("canonical: no removable vertex");
        int v = *cand.begin();
        cand.erase(cand.begin());
        if (!removable(v)) continue;

        std::vector<int> live;
        for (int d : g.rotation(v))
            if (alive[g.head(d)]) live.push_back(g.head(d));
        const int q = static_cast<int>(live.size());
        int at_prev = -1, at_next = -1;
        for (int i = 0; i < q; ++i) {
            if (live[i] == env_prev[v]) at_prev = i;
            if (live[i] == env_next[v]) at_next = i;
        }
        if (at_prev < 0 || at_next < 0)
            throw Error("canonical: a removed vertex leaves a broken contour");
        std::vector<int> fan;
        if ((at_prev + 1) % q == at_next || q == 2) {
            for (int i = at_next; i != at_prev; i = (i + 1) % q) fan.push_back(live[i]);
            fan.push_back(live[at_prev]);
            std::reverse(fan.begin(), fan.end());
        } else if ((at_next + 1) % q == at_prev) {
            for (int i = at_prev; i != at_next; i = (i + 1) % q) fan.push_back(live[i]);
            fan.push_back(live[at_next]);
        } else {
            throw Error("canonical: a removed vertex leaves a broken contour");
        }
        for (std::size_t i = 1; i + 1 < fan.size(); ++i)
            if (on_env[fan[i]])
                throw Error("canonical: a removed vertex leaves a broken contour");

        alive[v] = 0;
        on_env[v] = 0;
        for (std::size_t i = 0; i + 1 < fan.size(); ++i) {
            env_next[fan[i]] = fan[i + 1];
            env_prev[fan[i + 1]] = fan[i];
        }
        for (std::size_t i = 1; i + 1 < fan.size(); ++i) on_env[fan[i]] = 1;
        if (wall_side[v] >= 0) --wall_top[wall_side[v]];
        removed.push_back(v);

        std::set<int> touched(fan.begin(), fan.end());
        for (int w : live) touched.insert(w);
        for (int w : fan)
            for (int d : g.rotation(w))
                if (alive[g.head(d)]) touched.insert(g.head(d));
        for (int w : touched) {
            if (removable(w))
                cand.insert(w);
            else
                cand.erase(w);
        }
    }

    std::vector<int> order = base;
    order.insert(order.end(), removed.rbegin(), removed.rend());
    return order;
}

// A finished placement: coordinates, the insertion order used, and the
// final envelope from the base's left corner to its right corner.
struct DiskLayout {
    std::vector<long long> x, y;
    std::vector<int> order;
    std::vector<int> envelope;
};

namespace detail {

// Core placement for a disk whose boundary walk is a simple cycle. Walls
// list strictly-above-base vertices bottom up. A graph that is only the
// base path goes straight onto the line.
inline DiskLayout layout_simple_disk(const CombinatorialMap& g, const FaceSet& fs,
                                     int external_face, const std::vector<int>& base,
                                     const std::vector<int>& left_wall,
                                     const std::vector<int>& right_wall,
                                     long long first_gap_extra = 0) {
    DiskLayout out;
    if (static_cast<int>(base.size()) == g.vertex_count) {
        if (!left_wall.empty() || !right_wall.empty())
            throw Error("layout: walls cannot exist without an interior");
        if (g.edge_count() == static_cast<int>(base.size()) - 1) {
            out.x.assign(g.vertex_count, 0);
            out.y.assign(g.vertex_count, 0);
            for (std::size_t i = 0; i < base.size(); ++i)
                out.x[base[i]] = 2 * static_cast<long long>(i) + (i > 0 ? first_gap_extra : 0);
            out.order = base;
            out.envelope = base;
            return out;
        }
    }

    out.order =
        canonical_order_from_path(g, fs, external_face, base, left_wall, right_wall);
    std::vector<int> kind(g.vertex_count, 0);
    for (int v : left_wall) kind[v] = 1;
    for (int v : right_wall) kind[v] = 2;

    ShiftEngine eng(g.vertex_count);
    eng.place_base(base, first_gap_extra);
    for (std::size_t i = base.size(); i < out.order.size(); ++i) {
        int v = out.order[i];
        std::vector<int> nbrs;
        for (int d : g.rotation(v))
            if (eng.placed(g.head(d))) nbrs.push_back(g.head(d));
        ShiftEngine::Insert ins = ShiftEngine::Insert::middle;
        if (kind[v] == 1) ins = ShiftEngine::Insert::wall_left;
        if (kind[v] == 2) ins = ShiftEngine::Insert::wall_right;
        eng.insert(v, nbrs, ins);
    }
    out.x = eng.x;
    out.y = eng.y;
    out.envelope = eng.envelope();
    return out;
}

// Submap spanned by a set of internal faces: keeps exactly the edges those
// faces use and the vertices those edges touch.
struct LobeMap {
    CombinatorialMap map;
    std::vector<int> vertex_origin;
    std::vector<int> vertex_image;
    std::vector<int> edge_image;
};

inline LobeMap lobe_submap(const CombinatorialMap& g, const std::vector<char>& keep_edge) {
    LobeMap out;
    out.vertex_image.assign(g.vertex_count, -1);
    out.edge_image.assign(g.edge_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int d : g.rotation(v))
            if (keep_edge[d >> 1] && out.vertex_image[v] < 0) {
                out.vertex_image[v] = static_cast<int>(out.vertex_origin.size());
                out.vertex_origin.push_back(v);
            }
    int next_edge = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep_edge[e]) out.edge_image[e] = next_edge++;
    std::vector<std::vector<int>> rot(out.vertex_origin.size());
    for (std::size_t sv = 0; sv < out.vertex_origin.size(); ++sv)
        for (int d : g.rotation(out.vertex_origin[sv]))
            if (keep_edge[d >> 1]) rot[sv].push_back(2 * out.edge_image[d >> 1] + (d & 1));
    out.map = build_map(static_cast<int>(out.vertex_origin.size()), rot);
    return out;
}

}  // namespace detail

// Lays out an internally triangulated disk above its base path, keeping
// left and right wall vertices vertically above the base corners. Walls
// list strictly-above-base vertices bottom up. The boundary walk may pinch
// at base vertices; each lobe between pinch points is laid out on its own
// base run and the lobes line up along the base, with bare base edges
// spanned at the standard two-unit gap.
inline DiskLayout layout_disk(const CombinatorialMap& g, const FaceSet& fs, int external_face,
                              const std::vector<int>& base, const std::vector<int>& left_wall,
                              const std::vector<int>& right_wall, long long first_gap_extra = 0) {
    if (static_cast<int>(base.size()) == g.vertex_count)
        return detail::layout_simple_disk(g, fs, external_face, base, left_wall, right_wall,
                                          first_gap_extra);

    const std::vector<int>& walk = fs.faces[external_face];
    std::vector<int> occ(g.vertex_count, 0);
    for (int d : walk) ++occ[g.tail(d)];
    std::vector<char> on_base(g.vertex_count, 0);
    std::vector<int> base_pos(g.vertex_count, -1);
    for (std::size_t i = 0; i < base.size(); ++i) {
        on_base[base[i]] = 1;
        base_pos[base[i]] = static_cast<int>(i);
    }
    bool pinched = false;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (occ[v] > 2 || (occ[v] == 2 && !on_base[v]))
            throw Error("layout: the boundary pinches off the base line");
        if (occ[v] == 2) pinched = true;
    }
    if (!pinched)
        return detail::layout_simple_disk(g, fs, external_face, base, left_wall, right_wall,
                                          first_gap_extra);

    if (first_gap_extra < 0 || first_gap_extra % 2 != 0)
        throw Error("shift: base padding must be even and nonnegative");

    std::vector<int> lobe_of_face(fs.count(), -1);
    int lobe_count = 0;
    for (int f0 = 0; f0 < fs.count(); ++f0) {
        if (f0 == external_face || lobe_of_face[f0] >= 0) continue;
        lobe_of_face[f0] = lobe_count;
        std::vector<int> queue = {f0};
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (int d : fs.faces[f]) {
                int other = fs.face_of[d ^ 1];
                if (other == external_face || lobe_of_face[other] >= 0) continue;
                lobe_of_face[other] = lobe_count;
                queue.push_back(other);
            }
        }
        ++lobe_count;
    }

    std::vector<std::vector<char>> lobe_edge(lobe_count,
                                             std::vector<char>(g.edge_count(), 0));
    std::vector<std::vector<char>> lobe_vert(lobe_count,
                                             std::vector<char>(g.vertex_count, 0));
    for (int f = 0; f < fs.count(); ++f) {
        if (f == external_face) continue;
        int L = lobe_of_face[f];
        for (int d : fs.faces[f]) {
            lobe_edge[L][d >> 1] = 1;
            lobe_vert[L][g.tail(d)] = 1;
        }
    }

    for (int v = 0; v < g.vertex_count; ++v) {
        if (on_base[v]) continue;
        int hits = 0;
        for (int L = 0; L < lobe_count; ++L) hits += lobe_vert[L][v];
        if (hits == 0) throw Error("layout: a vertex sits outside every lobe");
        if (hits > 1) throw Error("layout: lobes share an off-base vertex");
    }

    std::vector<int> lobe_lo(lobe_count), lobe_hi(lobe_count);
    std::vector<int> start_lobe(base.size(), -1);
    for (int L = 0; L < lobe_count; ++L) {
        int lo = static_cast<int>(base.size()), hi = -1, cnt = 0;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (lobe_vert[L][base[i]]) {
                lo = std::min(lo, static_cast<int>(i));
                hi = std::max(hi, static_cast<int>(i));
                ++cnt;
            }
        if (cnt == 0) throw Error("layout: a lobe floats off the base");
        if (cnt == 1) throw Error("layout: a lobe covers no base edge");
        if (hi - lo + 1 != cnt || start_lobe[lo] >= 0)
            throw Error("layout: the base decomposition is inconsistent");
        lobe_lo[L] = lo;
        lobe_hi[L] = hi;
        start_lobe[lo] = L;
    }

    struct Segment {
        int lobe;
        int lo, hi;
    };
    std::vector<Segment> segs;
    int used = 0;
    {
        int pos = 0;
        const int last = static_cast<int>(base.size()) - 1;
        while (pos < last) {
            if (start_lobe[pos] >= 0) {
                int L = start_lobe[pos];
                segs.push_back({L, pos, lobe_hi[L]});
                pos = lobe_hi[L];
                ++used;
            } else {
                int dart = -1;
                for (int d : g.rotation(base[pos]))
                    if (g.head(d) == base[pos + 1]) dart = d;
                if (dart < 0 || fs.face_of[dart] != external_face ||
                    fs.face_of[dart ^ 1] != external_face)
                    throw Error("layout: the base decomposition is inconsistent");
                segs.push_back({-1, pos, pos + 1});
                ++pos;
            }
        }
    }
    if (used != lobe_count) throw Error("layout: the base decomposition is inconsistent");

    if (!left_wall.empty()) {
        int L = segs.front().lobe;
        for (int v : left_wall)
            if (L < 0 || !lobe_vert[L][v])
                throw Error("layout: the left wall leaves the first lobe");
    }
    if (!right_wall.empty()) {
        int L = segs.back().lobe;
        for (int v : right_wall)
            if (L < 0 || !lobe_vert[L][v])
                throw Error("layout: the right wall leaves the last lobe");
    }

    DiskLayout out;
    out.x.assign(g.vertex_count, 0);
    out.y.assign(g.vertex_count, 0);
    out.order = base;
    out.envelope.push_back(base.front());
    long long cursor = 0;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        const Segment& seg = segs[s];
        long long pad = (s == 0) ? first_gap_extra : 0;
        if (seg.lobe < 0) {
            cursor += 2 + pad;
            out.x[base[seg.hi]] = cursor;
            out.envelope.push_back(base[seg.hi]);
            continue;
        }
        detail::LobeMap sub = detail::lobe_submap(g, lobe_edge[seg.lobe]);
        if (sub.map.edge_count() == g.edge_count())
            throw Error("layout: the boundary pinches off the base line");
        FaceSet sub_fs = trace_faces(sub.map);
        int seam = -1;
        for (int d : g.rotation(base[seg.lo]))
            if (g.head(d) == base[seg.lo + 1] && lobe_edge[seg.lobe][d >> 1] &&
                fs.face_of[d] == external_face)
                seam = d;
        if (seam < 0)
            for (int d : g.rotation(base[seg.lo]))
                if (g.head(d) == base[seg.lo + 1] && lobe_edge[seg.lobe][d >> 1] &&
                    fs.face_of[d ^ 1] == external_face)
                    seam = d ^ 1;
        if (seam < 0) throw Error("layout: the base decomposition is inconsistent");
        int sub_ext = sub_fs.face_of[2 * sub.edge_image[seam >> 1] + (seam & 1)];
        std::vector<int> sub_base;
        for (int i = seg.lo; i <= seg.hi; ++i) sub_base.push_back(sub.vertex_image[base[i]]);
        std::vector<int> sub_lwall, sub_rwall;
        if (s == 0)
            for (int v : left_wall) sub_lwall.push_back(sub.vertex_image[v]);
        if (s + 1 == segs.size())
            for (int v : right_wall) sub_rwall.push_back(sub.vertex_image[v]);
        DiskLayout part =
            layout_disk(sub.map, sub_fs, sub_ext, sub_base, sub_lwall, sub_rwall, pad);
        for (int sv = 0; sv < sub.map.vertex_count; ++sv) {
            int v = sub.vertex_origin[sv];
            out.x[v] = part.x[sv] + cursor;
            out.y[v] = part.y[sv];
        }
        for (std::size_t i = sub_base.size(); i < part.order.size(); ++i)
            out.order.push_back(sub.vertex_origin[part.order[i]]);
        for (std::size_t i = 1; i < part.envelope.size(); ++i)
            out.envelope.push_back(sub.vertex_origin[part.envelope[i]]);
        cursor = out.x[base[seg.hi]];
    }
    return out;
}

// Classic shift-method drawing of a fully triangulated planar map on the
// (2n-4) x (n-2) grid. outer_dart names the external face; the drawing
// rests on that dart's edge.
inline DiskLayout dpp_classic(const CombinatorialMap& g, int outer_dart) {
    if (outer_dart < 0 || outer_dart >= g.dart_count())
        throw Error("dpp: outer dart out of range");
    if (genus(g) != 0) throw Error("dpp: map must be planar");
    FaceSet fs = trace_faces(g);
    int ext = fs.face_of[outer_dart];
    for (int f = 0; f < fs.count(); ++f)
        if (fs.faces[f].size() != 3)
            throw Error("dpp: the map must be fully triangulated");
    if (g.vertex_count == 3) {
        DiskLayout out;
        out.order = {g.tail(outer_dart), g.head(outer_dart)};
        ShiftEngine eng(3);
        eng.place_base(out.order);
        for (int v = 0; v < 3; ++v)
            if (v != out.order[0] && v != out.order[1]) {
                eng.place_first(v);
                out.order.push_back(v);
            }
        out.x = eng.x;
        out.y = eng.y;
        out.envelope = eng.envelope();
        return out;
    }

    DiskLayout out;
    std::vector<int> base = {g.tail(outer_dart), g.head(outer_dart)};
    out.order = canonical_order_from_path(g, fs, ext, base);

    ShiftEngine eng(g.vertex_count);
    eng.place_base(base);
    eng.place_first(out.order[2]);
    for (std::size_t i = 3; i < out.order.size(); ++i) {
        int v = out.order[i];
        std::vector<int> nbrs;
        for (int d : g.rotation(v))
            if (eng.placed(g.head(d))) nbrs.push_back(g.head(d));
        eng.insert(v, nbrs, ShiftEngine::Insert::middle);
    }
    out.x = eng.x;
    out.y = eng.y;
    out.envelope = eng.envelope();
    return out;
}

} // namespace schemadraw
