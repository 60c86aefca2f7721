#pragma once

#include <schemadraw/map.hpp>
#include <schemadraw/peel.hpp>
#include <schemadraw/shift_engine.hpp>
#include <schemadraw/split.hpp>
#include <schemadraw/verify.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace schemadraw {

namespace detail {

// The four (super-)sides of the schema polygon in boundary order: top,
// right, bottom, left. For genus one these are the four sides themselves;
// for higher genus the right and left entries concatenate 2g-1 consecutive
// sides each, so the quadrilateral machinery applies unchanged.
struct FrameSides {
    std::array<std::vector<int>, 4> darts;
    std::array<std::vector<int>, 4> vertices;
};

inline FrameSides merged_frame_sides(const CutResult& cut) {
    const int total = static_cast<int>(cut.sides.size());
    if (total < 4 || total % 4 != 0) throw Error("frame: the cut must have 4g sides");
    const int g = total / 4;
    const std::array<std::pair<int, int>, 4> group = {
        {{0, 1}, {1, 2 * g}, {2 * g, 2 * g + 1}, {2 * g + 1, 4 * g}}};
    FrameSides out;
    for (int s = 0; s < 4; ++s) {
        for (int i = group[s].first; i < group[s].second; ++i) {
            const CutSide& side = cut.sides[i];
            if (!out.vertices[s].empty() && side.vertices.front() != out.vertices[s].back())
                throw Error("frame: sides do not chain");
            out.darts[s].insert(out.darts[s].end(), side.darts.begin(), side.darts.end());
            const std::size_t skip = out.vertices[s].empty() ? 0 : 1;
            out.vertices[s].insert(out.vertices[s].end(), side.vertices.begin() + skip,
                                   side.vertices.end());
        }
    }
    return out;
}

// Dart of the induced submap matching a parent dart; the submap preserves
// dart parity per edge, so only the edge id needs translating.
inline int half_dart(const InducedMap& ind, int dart) {
    const int e = ind.edge_image[edge_of(dart)];
    if (e < 0) throw Error("frame: a side edge crossed the partition");
    return 2 * e + (dart & 1);
}

// One drawn half of the split disk, addressable by parent vertex ids.
// la and ra are the stitch anchors: the wall tops, or the base corners
// where a wall is empty.
struct HalfLayout {
    InducedMap ind;
    DiskLayout lay;
    int la = -1, ra = -1;

    long long x(int v) const { return lay.x[ind.vertex_image[v]]; }
    long long y(int v) const { return lay.y[ind.vertex_image[v]]; }
};

inline HalfLayout build_half(const CombinatorialMap& tm, const std::vector<char>& keep,
                             const std::vector<int>& base, const std::vector<int>& lwall,
                             const std::vector<int>& rwall, int side_dart, long long pad) {
    HalfLayout h;
    h.ind = induced_submap(tm, keep);
    auto img = [&](const std::vector<int>& vs) {
        std::vector<int> ids;
        ids.reserve(vs.size());
        for (int v : vs) {
            const int i = h.ind.vertex_image[v];
            if (i < 0) throw Error("frame: side bookkeeping crossed the partition");
            ids.push_back(i);
        }
        return ids;
    };
    FaceSet fs = trace_faces(h.ind.map);
    const int ext_face = fs.face_of[half_dart(h.ind, side_dart)];
    h.lay = layout_disk(h.ind.map, fs, ext_face, img(base), img(lwall), img(rwall), pad);
    h.la = lwall.empty() ? base.front() : lwall.back();
    h.ra = rwall.empty() ? base.back() : rwall.back();
    return h;
}

// Whether some envelope vertex between the anchors reaches the apex of the
// two unit-slope lines through them. Two apexes meeting at one lattice
// point would put two vertices on the same spot, so the stitch then lifts
// the upper half one extra row.
inline bool hull_attained(const HalfLayout& h) {
    const int ia = h.ind.vertex_image[h.la];
    const int ib = h.ind.vertex_image[h.ra];
    const long long xa = h.lay.x[ia], ya = h.lay.y[ia];
    const long long xb = h.lay.x[ib], yb = h.lay.y[ib];
    bool in_range = false;
    for (int v : h.lay.envelope) {
        if (v == ia) in_range = true;
        if (in_range && h.lay.y[v] == ya + (h.lay.x[v] - xa) &&
            h.lay.y[v] == yb + (xb - h.lay.x[v]))
            return true;
        if (v == ib && in_range) break;
    }
    return false;
}

// Draws the cut-open disk inside a rectangle whose horizontal sides carry
// the top and bottom polygon sides and whose vertical sides carry the left
// and right ones. The disk is triangulated, split between the two vertical
// sides, each half is laid out above its horizontal side with the vertical
// stretches as plumb walls, and the top half is flipped and lifted until
// the severed strip edges reconnect without crossings. Added triangulation
// edges are dropped from the result; the frame list is left for the caller.
inline GridDrawing draw_frame(const CombinatorialMap& star, int external_dart,
                              const FrameSides& S) {
    for (int s = 0; s < 4; ++s) {
        std::vector<int> posn(star.vertex_count, -1);
        for (std::size_t i = 0; i < S.vertices[s].size(); ++i)
            posn[S.vertices[s][i]] = static_cast<int>(i);
        for (int e = 0; e < star.edge_count(); ++e) {
            const int a = posn[star.vertex_of[2 * e]];
            const int b = posn[star.vertex_of[2 * e + 1]];
            if (a >= 0 && b >= 0 && std::abs(a - b) >= 2)
                throw Error("frame: a side has a chord");
        }
    }

    Triangulation tri = triangulate_interior(
        star, external_dart, {S.vertices[0], S.vertices[1], S.vertices[2], S.vertices[3]});
    const CombinatorialMap& tm = tri.map;
    FaceSet fs = trace_faces(tm);
    const int ext = fs.face_of[external_dart];

    SplitPartition part = split_two_paths(tm, fs, ext, S.darts[3], S.darts[1]);
    for (int v : S.vertices[2])
        if (part.in_v2[v]) throw Error("frame: the split strayed off the horizontal sides");
    for (int v : S.vertices[0])
        if (!part.in_v2[v]) throw Error("frame: the split strayed off the horizontal sides");

    const std::vector<int>& P1 = S.vertices[0];
    const std::vector<int>& P2 = S.vertices[1];
    const std::vector<int>& P3 = S.vertices[2];
    const std::vector<int>& P4 = S.vertices[3];

    // Bottom half: bottom side as base, read right to left so its first
    // vertex sits at the origin under the left wall. Top half: top side as
    // base in boundary order; it is drawn upward and flipped later.
    std::vector<int> base1(P3.rbegin(), P3.rend());
    std::vector<int> base2 = P1;
    std::vector<int> lw1, rw1, lw2, rw2;
    for (std::size_t j = 1; j + 1 < P4.size() && !part.in_v2[P4[j]]; ++j) lw1.push_back(P4[j]);
    for (int j = static_cast<int>(P2.size()) - 2; j > 0 && !part.in_v2[P2[j]]; --j)
        rw1.push_back(P2[j]);
    for (int j = static_cast<int>(P4.size()) - 2; j > 0 && part.in_v2[P4[j]]; --j)
        lw2.push_back(P4[j]);
    for (std::size_t j = 1; j + 1 < P2.size() && part.in_v2[P2[j]]; ++j) rw2.push_back(P2[j]);
    if (lw1.size() + lw2.size() + 2 != P4.size() || rw1.size() + rw2.size() + 2 != P2.size())
        throw Error("frame: wall bookkeeping broke");

    std::vector<char> keep1(tm.vertex_count), keep2(tm.vertex_count);
    for (int v = 0; v < tm.vertex_count; ++v) {
        keep1[v] = !part.in_v2[v];
        keep2[v] = part.in_v2[v];
    }

    HalfLayout h1 = build_half(tm, keep1, base1, lw1, rw1, S.darts[2].front(), 0);
    HalfLayout h2 = build_half(tm, keep2, base2, lw2, rw2, S.darts[0].front(), 0);
    const long long w1 = h1.x(base1.back());
    const long long w2 = h2.x(base2.back());
    if (w1 < w2) h1 = build_half(tm, keep1, base1, lw1, rw1, S.darts[2].front(), w2 - w1);
    if (w2 < w1) h2 = build_half(tm, keep2, base2, lw2, rw2, S.darts[0].front(), w1 - w2);
    if (h1.x(base1.back()) != h2.x(base2.back()))
        throw Error("frame: width equalization failed");

    // Lift the flipped top half until its hull apex sits on or above the
    // bottom half's. That separates the two point sets; the reconnected
    // strip edges are then checked exactly and the lift grows until they
    // clear, which in practice happens immediately.
    auto hull_sum = [](const HalfLayout& h) {
        return h.y(h.la) + h.y(h.ra) + (h.x(h.ra) - h.x(h.la));
    };
    const long long total = hull_sum(h1) + hull_sum(h2);
    long long lift = (total % 2 != 0)
                         ? (total + 1) / 2
                         : total / 2 + ((hull_attained(h1) && hull_attained(h2)) ? 1 : 0);

    std::vector<char> is_cut(star.edge_count(), 0);
    for (int e : part.cut_edges)
        if (e < star.edge_count()) is_cut[e] = 1;

    auto compose = [&](long long up) {
        GridDrawing d;
        d.vertex_count = star.vertex_count;
        d.pos.resize(star.vertex_count);
        for (int v = 0; v < star.vertex_count; ++v)
            d.pos[v] = part.in_v2[v] ? Point<long long>{h2.x(v), up - h2.y(v)}
                                     : Point<long long>{h1.x(v), h1.y(v)};
        d.edges.reserve(star.edge_count());
        for (int e = 0; e < star.edge_count(); ++e)
            d.edges.push_back({star.vertex_of[2 * e], star.vertex_of[2 * e + 1]});
        return d;
    };

    GridDrawing d = compose(lift);
    long long step = 2;
    for (int rounds = 0;; ++rounds) {
        auto conflicts = check_crossings(d);
        if (conflicts.empty()) break;
        for (const auto& c : conflicts)
            if (!is_cut[c.first.edge] && !is_cut[c.second.edge])
                throw Error("frame: a half is not plane");
        if (rounds >= 48) throw Error("frame: the halves resist separation");
        lift += step;
        step *= 2;
        d = compose(lift);
    }

    const auto extent = measure_grid(d);
    d.width = extent.width;
    d.height = extent.height;
    return d;
}

} // namespace detail

// Draws a genus-one cut inside a rectangle: the two copies of the first
// schema cycle become the top and bottom boundary lines, the two copies of
// the second become the vertical sides. Every side must be chord-free.
inline GridDrawing draw_toroidal(const CutResult& cut) {
    if (cut.sides.size() != 4) throw Error("frame: the cut must have four sides");
    for (int s = 0; s < 4; ++s)
        if (!find_chords(cut, s).empty())
            throw Error("frame: a side has a chord, refine the schema first");
    detail::FrameSides S = detail::merged_frame_sides(cut);
    const int ext_dart = cut.faces.faces[cut.external_face].front();
    GridDrawing d = detail::draw_frame(cut.star, ext_dart, S);
    for (const CutSide& side : cut.sides) d.frame.push_back(side.vertices);
    return d;
}

// A chord subdivided in two: the original edge id keeps the half at its
// first endpoint, half_edge is the new half, vertex is the temporary
// degree-two vertex between them that later becomes a bend point.
struct BendVertex {
    int edge = -1;
    int half_edge = -1;
    int vertex = -1;
};

struct BendInsertion {
    CutResult cut;
    std::vector<BendVertex> bends;
};

// Subdivides every chord of the external face with one temporary vertex
// and fans the two faces flanking each subdivided edge into triangles from
// the new vertex, so no later triangulation can recreate the chord. The
// boundary of an embedded disk admits at most k-3 chords for a k-gon, so
// at most k-3 vertices appear. Without chords the cut passes through
// untouched.
inline BendInsertion insert_bend_vertices(const CutResult& cut) {
    const CombinatorialMap& g0 = cut.star;
    std::vector<int> cyc = detail::simple_external_cycle(g0, cut.faces, cut.external_face);
    const int m = static_cast<int>(cyc.size());
    std::vector<int> pos(g0.vertex_count, -1);
    for (int i = 0; i < m; ++i) pos[cyc[i]] = i;

    std::vector<int> chords;
    for (int e = 0; e < g0.edge_count(); ++e) {
        const int a = pos[g0.vertex_of[2 * e]];
        const int b = pos[g0.vertex_of[2 * e + 1]];
        if (a < 0 || b < 0) continue;
        const int diff = std::abs(a - b);
        if (diff >= 2 && diff <= m - 2) chords.push_back(e);
    }

    BendInsertion out;
    if (chords.empty()) {
        out.cut = cut;
        return out;
    }
    if (static_cast<int>(chords.size()) > m - 3)
        throw Error("bend: more chords than an outerplanar boundary admits");

    const int n0 = g0.vertex_count;
    const int E0 = g0.edge_count();
    const int C = static_cast<int>(chords.size());
    std::vector<int> sig(2 * (E0 + C), -1), inv(2 * (E0 + C), -1), vof(2 * (E0 + C), -1);
    std::copy(g0.sigma.begin(), g0.sigma.end(), sig.begin());
    std::copy(g0.sigma_inv.begin(), g0.sigma_inv.end(), inv.begin());
    std::copy(g0.vertex_of.begin(), g0.vertex_of.end(), vof.begin());
    for (int c = 0; c < C; ++c) {
        const int z = n0 + c;
        const int dwu = 2 * chords[c] + 1; // keeps heading to u, but now from z
        const int dzw = 2 * (E0 + c);      // z toward w
        const int dwz = dzw + 1;           // w toward z, takes dwu's slot at w
        const int w = vof[dwu];
        const int nxt = sig[dwu];
        const int prv = inv[dwu];
        if (prv == dwu) {
            sig[dwz] = dwz;
            inv[dwz] = dwz;
        } else {
            sig[prv] = dwz;
            inv[dwz] = prv;
            sig[dwz] = nxt;
            inv[nxt] = dwz;
        }
        sig[dwu] = dzw;
        inv[dzw] = dwu;
        sig[dzw] = dwu;
        inv[dwu] = dzw;
        vof[dwu] = z;
        vof[dzw] = z;
        vof[dwz] = w;
        out.bends.push_back({chords[c], E0 + c, z});
    }

    CombinatorialMap g1 = build_map_from_sigma(n0 + C, std::move(sig), std::move(vof));
    for (int c = 0; c < C; ++c) {
        for (int dz : {2 * chords[c] + 1, 2 * (E0 + c)}) {
            for (;;) {
                std::vector<int> orbit;
                int d = dz;
                do {
                    orbit.push_back(d);
                    d = g1.phi(d);
                } while (d != dz);
                if (orbit.size() <= 3) break;
                const int e = add_edge_in_face(g1, dz, orbit[2]);
                dz = 2 * e;
            }
        }
    }

    const int old_ext_dart = cut.faces.faces[cut.external_face].front();
    out.cut.star = std::move(g1);
    out.cut.faces = trace_faces(out.cut.star);
    out.cut.external_face = out.cut.faces.face_of[old_ext_dart];
    out.cut.sides = cut.sides;
    out.cut.vertex_origin = cut.vertex_origin;
    out.cut.vertex_origin.resize(n0 + C, -1);
    out.cut.edge_origin = cut.edge_origin;
    out.cut.edge_origin.resize(out.cut.star.edge_count(), -1);
    for (int c = 0; c < C; ++c) out.cut.edge_origin[E0 + c] = cut.edge_origin[chords[c]];
    out.cut.basepoint = cut.basepoint;
    out.cut.genus = cut.genus;
    return out;
}

// Draws a genus g >= 2 cut with a straight polygon frame: the 4g sides map
// onto the four sides of a rectangle, with 2g-1 consecutive sides sharing
// each vertical line. Chords of the external face are subdivided first;
// the temporary vertices come back as bend points, at most k-3 of them for
// a k-gon boundary. A four-sided cut delegates to the toroidal drawing.
inline GridDrawing draw_peel_and_bend(const CutResult& cut) {
    if (cut.sides.size() == 4) return draw_toroidal(cut);
    const int nsides = static_cast<int>(cut.sides.size());
    if (nsides < 8 || nsides % 4 != 0) throw Error("bend: the cut must have 4g sides");
    for (int s = 0; s < nsides; ++s)
        if (!find_chords(cut, s).empty())
            throw Error("bend: a side has a chord, refine the schema first");

    BendInsertion ins = insert_bend_vertices(cut);
    detail::FrameSides S = detail::merged_frame_sides(ins.cut);
    const int ext_dart = ins.cut.faces.faces[ins.cut.external_face].front();
    GridDrawing sub = detail::draw_frame(ins.cut.star, ext_dart, S);

    GridDrawing d;
    d.vertex_count = cut.star.vertex_count;
    d.pos.assign(sub.pos.begin(), sub.pos.begin() + d.vertex_count);
    d.edges.reserve(cut.star.edge_count());
    for (int e = 0; e < cut.star.edge_count(); ++e)
        d.edges.push_back({cut.star.vertex_of[2 * e], cut.star.vertex_of[2 * e + 1]});
    d.bend.assign(d.edges.size(), std::nullopt);
    for (const BendVertex& b : ins.bends) d.bend[b.edge] = sub.pos[b.vertex];
    for (const CutSide& side : cut.sides) d.frame.push_back(side.vertices);
    const auto extent = measure_grid(d);
    d.width = extent.width;
    d.height = extent.height;
    return d;
}

} // namespace schemadraw
