#pragma once

#include <schemadraw/map.hpp>
#include <schemadraw/rational.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace schemadraw {

// A planar point with coordinates of type T.
template <class T>
struct Point {
    T x{};
    T y{};

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// A straight-line drawing of a graph, with at most one bend per edge.
// Vertex v sits at pos[v]; edge e runs straight between its endpoints
// unless bend[e] holds a point, in which case it is drawn as two segments
// through that point. frame lists the boundary side paths as vertex id
// sequences. width and height are filled in by the producing engine.
template <class T>
struct Drawing {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<Point<T>> pos;
    std::vector<std::optional<Point<T>>> bend;
    std::vector<std::vector<int>> frame;
    T width{};
    T height{};
};

// Integer lattice drawings, exact rational drawings, floating drawings.
using GridDrawing = Drawing<long long>;
using ExactDrawing = Drawing<BigRational>;
using RealDrawing = Drawing<double>;

// One straight piece of a drawn edge: part 0 is the whole edge, or the half
// before the bend; part 1 is the half after the bend.
struct SegmentRef {
    int edge = -1;
    int part = 0;

    friend bool operator==(const SegmentRef& a, const SegmentRef& b) {
        return a.edge == b.edge && a.part == b.part;
    }
};

// Verdicts for integer and rational drawings are exact. Floating drawings
// are judged with a tolerance scaled by the coordinate magnitude and their
// reports carry exact = false.
template <class T>
constexpr bool exact_coordinates() {
    return true;
}
template <>
constexpr bool exact_coordinates<double>() {
    return false;
}

namespace detail {

inline int sign_i128(__int128 v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

// Sign of the cross product (b - a) x (c - a). Large integer coordinates
// fall back to arbitrary precision so the predicate can never overflow.
inline int orient_sign(const Point<long long>& a, const Point<long long>& b,
                       const Point<long long>& c, double) {
    constexpr long long lim = 1LL << 61;
    auto small = [](long long v) { return v < lim && v > -lim; };
    if (small(a.x) && small(a.y) && small(b.x) && small(b.y) && small(c.x) && small(c.y)) {
        __int128 cr = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                      static_cast<__int128>(b.y - a.y) * (c.x - a.x);
        return sign_i128(cr);
    }
    BigInt cr = (BigInt(b.x) - a.x) * (BigInt(c.y) - a.y) -
                (BigInt(b.y) - a.y) * (BigInt(c.x) - a.x);
    return sign_of(cr);
}

inline int orient_sign(const Point<BigRational>& a, const Point<BigRational>& b,
                       const Point<BigRational>& c, double) {
    BigRational cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cr.sign();
}

inline int orient_sign(const Point<double>& a, const Point<double>& b,
                       const Point<double>& c, double tol) {
    double cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (std::abs(cr) <= tol) return 0;
    return cr > 0 ? 1 : -1;
}

// Sign of the dot product (b - a) . (q - p), used for order along a carrier.
inline int dot_sign(const Point<long long>& a, const Point<long long>& b,
                    const Point<long long>& p, const Point<long long>& q, double) {
    constexpr long long lim = 1LL << 61;
    auto small = [](long long v) { return v < lim && v > -lim; };
    if (small(a.x) && small(a.y) && small(b.x) && small(b.y) && small(p.x) && small(p.y) &&
        small(q.x) && small(q.y)) {
        __int128 d = static_cast<__int128>(b.x - a.x) * (q.x - p.x) +
                     static_cast<__int128>(b.y - a.y) * (q.y - p.y);
        return sign_i128(d);
    }
    BigInt d = (BigInt(b.x) - a.x) * (BigInt(q.x) - p.x) +
               (BigInt(b.y) - a.y) * (BigInt(q.y) - p.y);
    return sign_of(d);
}

inline int dot_sign(const Point<BigRational>& a, const Point<BigRational>& b,
                    const Point<BigRational>& p, const Point<BigRational>& q, double) {
    BigRational d = (b.x - a.x) * (q.x - p.x) + (b.y - a.y) * (q.y - p.y);
    return d.sign();
}

inline int dot_sign(const Point<double>& a, const Point<double>& b, const Point<double>& p,
                    const Point<double>& q, double tol) {
    double d = (b.x - a.x) * (q.x - p.x) + (b.y - a.y) * (q.y - p.y);
    if (std::abs(d) <= tol) return 0;
    return d > 0 ? 1 : -1;
}

template <class T>
bool lex_less(const Point<T>& p, const Point<T>& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

inline double approx_coord(long long v) { return static_cast<double>(v); }
inline double approx_coord(double v) { return v; }
inline double approx_coord(const BigRational& v) { return to_double(v); }

// Order along the dominant axis of four roughly collinear points. A plain
// x-then-y order misjudges near-vertical floating segments whose x values
// jitter by an ulp; picking the wider axis keeps the 1D interval logic
// sound, and along an exactly common carrier either order is monotone.
template <class T>
bool carrier_less(const Point<T>& p, const Point<T>& q, bool x_major) {
    if (x_major) return lex_less(p, q);
    if (p.y != q.y) return p.y < q.y;
    return p.x < q.x;
}

template <class T>
double coordinate_span(const Drawing<T>&) {
    return 0.0;
}

inline double coordinate_span(const Drawing<double>& d) {
    double m = 1.0;
    for (const auto& p : d.pos) m = std::max({m, std::abs(p.x), std::abs(p.y)});
    for (const auto& b : d.bend)
        if (b) m = std::max({m, std::abs(b->x), std::abs(b->y)});
    return m;
}

// Area-scale tolerance for sign predicates; zero for exact coordinates.
template <class T>
double verify_tolerance(const Drawing<T>& d) {
    if (exact_coordinates<T>()) return 0.0;
    double m = coordinate_span(d);
    return 1e-12 * m * m;
}

// Bounding box padding for the pair prefilter; zero for exact coordinates.
template <class T>
T bbox_pad(const Drawing<T>&) {
    return T{};
}

inline double bbox_pad(const Drawing<double>& d) {
    return 1e-12 * coordinate_span(d);
}

template <class T>
void check_finite(const Drawing<T>&) {}

inline void check_finite(const Drawing<double>& d) {
    for (const auto& p : d.pos)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error("verify: non-finite coordinate");
    for (const auto& b : d.bend)
        if (b && (!std::isfinite(b->x) || !std::isfinite(b->y)))
            throw Error("verify: non-finite coordinate");
}

template <class T>
void validate_drawing(const Drawing<T>& d) {
    if (static_cast<int>(d.pos.size()) != d.vertex_count)
        throw Error("verify: coordinate table has the wrong size");
    if (!d.bend.empty() && d.bend.size() != d.edges.size())
        throw Error("verify: bend table has the wrong size");
    for (const auto& e : d.edges)
        if (e[0] < 0 || e[0] >= d.vertex_count || e[1] < 0 || e[1] >= d.vertex_count)
            throw Error("verify: edge endpoint out of range");
    for (const auto& side : d.frame) {
        if (side.size() < 2) throw Error("verify: a frame side has fewer than two vertices");
        for (int v : side)
            if (v < 0 || v >= d.vertex_count)
                throw Error("verify: frame vertex out of range");
    }
    check_finite(d);
}

// A drawn segment with its endpoint identities. Bend points get synthetic
// ids past the vertex range so the two halves of one edge may meet at the
// bend, while contacts between different edges there still count.
template <class T>
struct Seg {
    Point<T> a, b;
    int aid = -1, bid = -1;
    SegmentRef ref;
    T lox{}, hix{}, loy{}, hiy{};
};

template <class T>
std::vector<Seg<T>> collect_segments(const Drawing<T>& d, const T& pad) {
    std::vector<Seg<T>> segs;
    segs.reserve(d.edges.size() + 4);
    auto push = [&](const Point<T>& a, const Point<T>& b, int aid, int bid, int edge, int part) {
        Seg<T> s;
        s.a = a;
        s.b = b;
        s.aid = aid;
        s.bid = bid;
        s.ref = SegmentRef{edge, part};
        s.lox = std::min(a.x, b.x) - pad;
        s.hix = std::max(a.x, b.x) + pad;
        s.loy = std::min(a.y, b.y) - pad;
        s.hiy = std::max(a.y, b.y) + pad;
        segs.push_back(std::move(s));
    };
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        int u = d.edges[e][0];
        int v = d.edges[e][1];
        if (e < d.bend.size() && d.bend[e]) {
            int bid = d.vertex_count + static_cast<int>(e);
            push(d.pos[u], *d.bend[e], u, bid, static_cast<int>(e), 0);
            push(*d.bend[e], d.pos[v], bid, v, static_cast<int>(e), 1);
        } else {
            push(d.pos[u], d.pos[v], u, v, static_cast<int>(e), 0);
        }
    }
    return segs;
}

// True if the two segments meet anywhere other than a single shared
// endpoint with matching identity. Collinear overlap of positive length
// always counts, as does an endpoint lying inside the other segment.
template <class T>
bool segments_conflict(const Seg<T>& s, const Seg<T>& t, double tol) {
    int o1 = orient_sign(s.a, s.b, t.a, tol);
    int o2 = orient_sign(s.a, s.b, t.b, tol);
    int o3 = orient_sign(t.a, t.b, s.a, tol);
    int o4 = orient_sign(t.a, t.b, s.b, tol);
    if (o1 * o2 > 0 || o3 * o4 > 0) return false;

    auto id_at = [](const Seg<T>& g, const Point<T>& p) {
        if (p == g.a) return g.aid;
        if (p == g.b) return g.bid;
        return -1;
    };

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        const Point<T>& smin = lex_less(s.a, s.b) ? s.a : s.b;
        const Point<T>& smax = lex_less(s.a, s.b) ? s.b : s.a;
        const Point<T>& tmin = lex_less(t.a, t.b) ? t.a : t.b;
        const Point<T>& tmax = lex_less(t.a, t.b) ? t.b : t.a;
        const Point<T>& lo = lex_less(smin, tmin) ? tmin : smin;
        const Point<T>& hi = lex_less(smax, tmax) ? smax : tmax;
        if (lex_less(hi, lo)) return false;
        if (lo != hi) return true;
        int sid = id_at(s, lo);
        int tid = id_at(t, lo);
        if (sid < 0 || tid < 0) return true;
        return sid != tid;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;

    Point<T> p;
    if (o1 == 0)
        p = t.a;
    else if (o2 == 0)
        p = t.b;
    else if (o3 == 0)
        p = s.a;
    else
        p = s.b;
    int sid = id_at(s, p);
    int tid = id_at(t, p);
    if (sid < 0 || tid < 0) return true;
    return sid != tid;
}

} // namespace detail

// Every pair of drawn segments that meets outside a shared endpoint. Empty
// exactly when the drawing is plane (under the tolerance, for doubles).
template <class T>
std::vector<std::pair<SegmentRef, SegmentRef>> check_crossings(const Drawing<T>& d) {
    detail::validate_drawing(d);
    double tol = detail::verify_tolerance(d);
    auto segs = detail::collect_segments(d, detail::bbox_pad(d));
    std::vector<std::pair<SegmentRef, SegmentRef>> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            if (s.hix < t.lox || t.hix < s.lox || s.hiy < t.loy || t.hiy < s.loy) continue;
            if (detail::segments_conflict(s, t, tol)) out.emplace_back(s.ref, t.ref);
        }
    }
    return out;
}

struct SideFlags {
    bool collinear = false;
    bool monotone = false;
};

// frame verdicts: per side, whether all its vertices sit on the carrier
// segment through its endpoints and advance strictly along it. rectangle
// holds when 4 sides alternate horizontal and vertical and close up.
struct FrameReport {
    std::vector<SideFlags> sides;
    bool all_ok = false;
    bool rectangle = false;
};

namespace detail {

template <class T>
bool frame_is_rectangle(const Drawing<T>& d) {
    if (d.frame.size() != 4) return false;
    for (int i = 0; i < 4; ++i) {
        const auto& cur = d.frame[i];
        const auto& nxt = d.frame[(i + 1) % 4];
        if (d.pos[cur.back()] != d.pos[nxt.front()]) return false;
    }
    auto horizontal = [&](const std::vector<int>& side) {
        for (int v : side)
            if (d.pos[v].y != d.pos[side.front()].y) return false;
        return true;
    };
    auto vertical = [&](const std::vector<int>& side) {
        for (int v : side)
            if (d.pos[v].x != d.pos[side.front()].x) return false;
        return true;
    };
    for (int offset = 0; offset < 2; ++offset) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            ok = ((i + offset) % 2 == 0) ? horizontal(d.frame[i]) : vertical(d.frame[i]);
        if (!ok) continue;
        const auto& h0 = d.frame[offset == 0 ? 0 : 1];
        const auto& h1 = d.frame[offset == 0 ? 2 : 3];
        const auto& v0 = d.frame[offset == 0 ? 1 : 0];
        const auto& v1 = d.frame[offset == 0 ? 3 : 2];
        if (d.pos[h0.front()].y == d.pos[h1.front()].y) continue;
        if (d.pos[v0.front()].x == d.pos[v1.front()].x) continue;
        return true;
    }
    return false;
}

} // namespace detail

template <class T>
FrameReport check_frame(const Drawing<T>& d) {
    detail::validate_drawing(d);
    double tol = detail::verify_tolerance(d);
    FrameReport r;
    r.all_ok = !d.frame.empty();
    for (const auto& side : d.frame) {
        SideFlags f;
        const Point<T>& first = d.pos[side.front()];
        const Point<T>& last = d.pos[side.back()];
        f.collinear = true;
        for (int v : side)
            if (detail::orient_sign(first, last, d.pos[v], tol) != 0) f.collinear = false;
        f.monotone = first != last;
        for (std::size_t i = 0; f.monotone && i + 1 < side.size(); ++i)
            if (detail::dot_sign(d.pos[side[i]], d.pos[side[i + 1]], first, last, tol) <= 0)
                f.monotone = false;
        if (!(f.collinear && f.monotone)) r.all_ok = false;
        r.sides.push_back(f);
    }
    r.rectangle = detail::frame_is_rectangle(d);
    return r;
}

template <class T>
struct GridExtent {
    T width{};
    T height{};
    int bend_count = 0;
};

// Exact bounding box over vertices and bend points, plus the bend count.
template <class T>
GridExtent<T> measure_grid(const Drawing<T>& d) {
    detail::validate_drawing(d);
    GridExtent<T> g;
    if (d.pos.empty()) return g;
    T lox = d.pos[0].x, hix = d.pos[0].x, loy = d.pos[0].y, hiy = d.pos[0].y;
    auto widen = [&](const Point<T>& p) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    };
    for (const auto& p : d.pos) widen(p);
    for (const auto& b : d.bend) {
        if (!b) continue;
        widen(*b);
        ++g.bend_count;
    }
    g.width = hix - lox;
    g.height = hiy - loy;
    return g;
}

template <class T>
struct VerificationReport {
    std::vector<std::pair<SegmentRef, SegmentRef>> crossings;
    FrameReport frame;
    T width{};
    T height{};
    int bend_count = 0;
    bool exact = false;
    double max_residual = 0;
};

template <class T>
VerificationReport<T> verify_drawing(const Drawing<T>& d) {
    VerificationReport<T> r;
    r.crossings = check_crossings(d);
    r.frame = check_frame(d);
    auto ext = measure_grid(d);
    r.width = ext.width;
    r.height = ext.height;
    r.bend_count = ext.bend_count;
    r.exact = exact_coordinates<T>();
    return r;
}

} // namespace schemadraw
