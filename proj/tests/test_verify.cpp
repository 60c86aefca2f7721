#include <catch2/catch_amalgamated.hpp>

#include <schemadraw/rng.hpp>
#include <schemadraw/verify.hpp>

#include <limits>
#include <utility>
#include <vector>

using namespace schemadraw;

namespace {

template <typename Fn>
std::string error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

GridDrawing grid(std::vector<std::pair<long long, long long>> pts,
                 std::vector<std::array<int, 2>> edges) {
    GridDrawing d;
    d.vertex_count = static_cast<int>(pts.size());
    for (auto [x, y] : pts) d.pos.push_back({x, y});
    d.edges = std::move(edges);
    return d;
}

template <class T>
Drawing<T> convert(const GridDrawing& g) {
    Drawing<T> d;
    d.vertex_count = g.vertex_count;
    d.edges = g.edges;
    for (const auto& p : g.pos) d.pos.push_back({T(p.x), T(p.y)});
    for (const auto& b : g.bend) {
        if (b)
            d.bend.push_back(Point<T>{T(b->x), T(b->y)});
        else
            d.bend.push_back(std::nullopt);
    }
    d.frame = g.frame;
    return d;
}

// Independent verdict for one segment pair: solve the parametric
// intersection exactly over rationals and classify the contact set.
struct RatSeg {
    Point<BigRational> a, b;
    int aid, bid;
};

bool reference_conflict(const RatSeg& s, const RatSeg& t) {
    BigRational rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    BigRational qx = t.b.x - t.a.x, qy = t.b.y - t.a.y;
    BigRational den = rx * qy - ry * qx;
    BigRational wx = t.a.x - s.a.x, wy = t.a.y - s.a.y;
    if (den != 0) {
        BigRational u = (wx * qy - wy * qx) / den;
        BigRational v = (wx * ry - wy * rx) / den;
        if (u < 0 || u > 1 || v < 0 || v > 1) return false;
        bool s_end = (u == 0 || u == 1);
        bool t_end = (v == 0 || v == 1);
        if (!s_end || !t_end) return true;
        int sid = (u == 0) ? s.aid : s.bid;
        int tid = (v == 0) ? t.aid : t.bid;
        return sid != tid;
    }
    if (wx * ry - wy * rx != 0) return false;
    auto param = [&](const Point<BigRational>& p) -> BigRational {
        if (rx != 0) return (p.x - s.a.x) / rx;
        return (p.y - s.a.y) / ry;
    };
    BigRational u0 = param(t.a), u1 = param(t.b);
    if (u1 < u0) std::swap(u0, u1);
    BigRational lo = u0 < 0 ? BigRational(0) : u0;
    BigRational hi = u1 > 1 ? BigRational(1) : u1;
    if (lo > hi) return false;
    if (lo < hi) return true;
    bool s_end = (lo == 0 || lo == 1);
    bool t_end = (lo == u0 || lo == u1);
    if (!s_end || !t_end) return true;
    int sid = (lo == 0) ? s.aid : s.bid;
    int tid;
    if (param(t.a) == lo)
        tid = t.aid;
    else
        tid = t.bid;
    return sid != tid;
}

} // namespace

TEST_CASE("segments meeting only at shared vertices do not cross") {
    GridDrawing hat = grid({{0, 0}, {1, 1}, {2, 0}}, {{0, 1}, {1, 2}});
    CHECK(check_crossings(hat).empty());

    GridDrawing triangle = grid({{0, 0}, {4, 0}, {2, 3}}, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(check_crossings(triangle).empty());

    GridDrawing chain = grid({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}});
    CHECK(check_crossings(chain).empty());
}

TEST_CASE("an x configuration is a single crossing") {
    GridDrawing x = grid({{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 1}, {2, 3}});
    auto hits = check_crossings(x);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].first == SegmentRef{0, 0});
    CHECK(hits[0].second == SegmentRef{1, 0});

    auto real_hits = check_crossings(convert<double>(x));
    CHECK(real_hits.size() == 1);
    CHECK_FALSE(verify_drawing(convert<double>(x)).exact);
    CHECK(verify_drawing(x).exact);
}

TEST_CASE("touching and overlapping segments count as crossings") {
    GridDrawing tee = grid({{0, 0}, {4, 0}, {2, 0}, {2, 3}}, {{0, 1}, {2, 3}});
    CHECK(check_crossings(tee).size() == 1);

    GridDrawing overlap = grid({{0, 0}, {3, 0}, {1, 0}, {5, 0}}, {{0, 1}, {2, 3}});
    CHECK(check_crossings(overlap).size() == 1);

    GridDrawing contained = grid({{0, 0}, {5, 0}, {1, 0}, {2, 0}}, {{0, 1}, {2, 3}});
    CHECK(check_crossings(contained).size() == 1);

    GridDrawing twins = grid({{0, 0}, {2, 0}, {2, 0}, {4, 0}}, {{0, 1}, {2, 3}});
    CHECK(check_crossings(twins).size() == 1);

    GridDrawing apart = grid({{0, 0}, {1, 0}, {3, 0}, {5, 0}}, {{0, 1}, {2, 3}});
    CHECK(check_crossings(apart).empty());
}

TEST_CASE("bent edges verify as two segments around the bend point") {
    GridDrawing d = grid({{0, 0}, {4, 0}, {0, 3}, {4, 3}}, {{0, 1}, {2, 3}});
    d.bend.resize(2);
    d.bend[0] = Point<long long>{2, 2};
    CHECK(check_crossings(d).empty());
    CHECK(measure_grid(d).bend_count == 1);

    GridDrawing low = grid({{0, 0}, {4, 0}, {0, 1}, {4, 1}}, {{0, 1}, {2, 3}});
    low.bend.resize(2);
    low.bend[0] = Point<long long>{2, 2};
    auto hits = check_crossings(low);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].first == SegmentRef{0, 0});
    CHECK(hits[1].first == SegmentRef{0, 1});
    CHECK(hits[0].second == SegmentRef{1, 0});

    GridDrawing fold = grid({{0, 0}, {2, 0}}, {{0, 1}});
    fold.bend.resize(1);
    fold.bend[0] = Point<long long>{3, 0};
    auto self = check_crossings(fold);
    REQUIRE(self.size() == 1);
    CHECK(self[0].first == SegmentRef{0, 0});
    CHECK(self[0].second == SegmentRef{0, 1});
}

TEST_CASE("a planar embedding drawn straight passes and a bad one fails") {
    GridDrawing good = grid({{0, 0}, {6, 0}, {3, 5}, {3, 2}},
                            {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(check_crossings(good).empty());

    GridDrawing bad = grid({{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                           {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    CHECK(check_crossings(bad).size() == 1);
}

TEST_CASE("frame sides are checked for collinearity and path order") {
    GridDrawing d = grid({{0, 2}, {1, 2}, {3, 2}, {3, 1}, {3, 0}, {1, 0}, {0, 0}, {0, 1}}, {});
    d.frame = {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}};
    FrameReport r = check_frame(d);
    REQUIRE(r.sides.size() == 4);
    for (const auto& f : r.sides) {
        CHECK(f.collinear);
        CHECK(f.monotone);
    }
    CHECK(r.all_ok);
    CHECK(r.rectangle);

    GridDrawing zig = grid({{0, 0}, {2, 0}, {1, 0}, {4, 0}}, {});
    zig.frame = {{0, 1, 2, 3}, {0, 3}};
    FrameReport zr = check_frame(zig);
    CHECK(zr.sides[0].collinear);
    CHECK_FALSE(zr.sides[0].monotone);
    CHECK(zr.sides[1].collinear);
    CHECK(zr.sides[1].monotone);
    CHECK_FALSE(zr.all_ok);
    CHECK_FALSE(zr.rectangle);

    GridDrawing bent = grid({{0, 0}, {1, 1}, {2, 0}}, {});
    bent.frame = {{0, 1, 2}};
    FrameReport br = check_frame(bent);
    CHECK_FALSE(br.sides[0].collinear);
    CHECK(br.sides[0].monotone);

    GridDrawing tiny = grid({{0, 0}, {1, 1}}, {});
    tiny.frame = {{0, 1}};
    CHECK(check_frame(tiny).all_ok);

    GridDrawing stub = grid({{0, 0}}, {});
    stub.frame = {{0}};
    CHECK(error_of([&] { check_frame(stub); }) ==
          "verify: a frame side has fewer than two vertices");
}

TEST_CASE("a rectangle frame is recognized in either orientation") {
    GridDrawing d = grid({{0, 0}, {0, 3}, {5, 3}, {5, 0}}, {});
    d.frame = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(check_frame(d).rectangle);

    d.frame = {{1, 2}, {2, 3}, {3, 0}, {0, 1}};
    CHECK(check_frame(d).rectangle);

    d.frame = {{0, 1}, {1, 2}, {2, 3}, {3, 2}};
    CHECK_FALSE(check_frame(d).rectangle);

    GridDrawing slanted = grid({{0, 0}, {1, 3}, {5, 3}, {5, 0}}, {});
    slanted.frame = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK_FALSE(check_frame(slanted).rectangle);
}

TEST_CASE("grid extents measure the bounding box and bends") {
    GridDrawing tri = grid({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}});
    auto ext = measure_grid(tri);
    CHECK(ext.width == 1);
    CHECK(ext.height == 1);
    CHECK(ext.bend_count == 0);

    GridDrawing d = grid({{0, 0}, {4, 0}}, {{0, 1}});
    d.bend.resize(1);
    d.bend[0] = Point<long long>{2, 7};
    auto bext = measure_grid(d);
    CHECK(bext.width == 4);
    CHECK(bext.height == 7);
    CHECK(bext.bend_count == 1);

    auto report = verify_drawing(tri);
    CHECK(report.crossings.empty());
    CHECK(report.width == 1);
    CHECK(report.height == 1);
    CHECK(report.bend_count == 0);
    CHECK(report.exact);
}

TEST_CASE("rational coordinates are judged exactly where doubles blur") {
    ExactDrawing x;
    x.vertex_count = 4;
    x.pos = {{BigRational(0), BigRational(0)},
             {BigRational(1), BigRational(1)},
             {BigRational(1), BigRational(0)},
             {BigRational(0), BigRational(1)}};
    x.edges = {{0, 1}, {2, 3}};
    CHECK(check_crossings(x).size() == 1);

    BigRational third(1, 3);
    BigRational tiny(1, BigInt("1000000000000000000000000000000000000000"));
    ExactDrawing side;
    side.vertex_count = 3;
    side.pos = {{BigRational(0), BigRational(0)},
                {third, third + tiny},
                {BigRational(1), BigRational(1)}};
    side.frame = {{0, 1, 2}};
    CHECK_FALSE(check_frame(side).sides[0].collinear);

    RealDrawing blurred;
    blurred.vertex_count = 3;
    blurred.pos = {{0.0, 0.0}, {1.0 / 3.0, 1.0 / 3.0 + 1e-30}, {1.0, 1.0}};
    blurred.frame = {{0, 1, 2}};
    CHECK(check_frame(blurred).sides[0].collinear);
}

TEST_CASE("non-finite and malformed drawings are rejected") {
    RealDrawing bad;
    bad.vertex_count = 2;
    bad.pos = {{0.0, 0.0}, {std::numeric_limits<double>::infinity(), 0.0}};
    bad.edges = {{0, 1}};
    CHECK(error_of([&] { check_crossings(bad); }) == "verify: non-finite coordinate");

    GridDrawing short_pos = grid({{0, 0}}, {});
    short_pos.vertex_count = 2;
    CHECK(error_of([&] { check_crossings(short_pos); }) ==
          "verify: coordinate table has the wrong size");

    GridDrawing bad_edge = grid({{0, 0}, {1, 0}}, {{0, 2}});
    CHECK(error_of([&] { check_crossings(bad_edge); }) == "verify: edge endpoint out of range");

    GridDrawing bad_bend = grid({{0, 0}, {1, 0}}, {{0, 1}});
    bad_bend.bend.resize(3);
    CHECK(error_of([&] { check_crossings(bad_bend); }) == "verify: bend table has the wrong size");

    GridDrawing bad_frame = grid({{0, 0}, {1, 0}}, {{0, 1}});
    bad_frame.frame = {{0, 5}};
    CHECK(error_of([&] { check_frame(bad_frame); }) == "verify: frame vertex out of range");
}

TEST_CASE("pairwise verdicts agree with an independent rational solver") {
    Rng rng(2026);
    int conflicts = 0;
    for (int round = 0; round < 400; ++round) {
        std::vector<std::pair<long long, long long>> pts;
        for (int i = 0; i < 4; ++i)
            pts.emplace_back(rng.below(7), rng.below(7));
        GridDrawing d = grid(pts, {{0, 1}, {2, 3}});
        if (pts[0] == pts[1] || pts[2] == pts[3]) continue;

        RatSeg s{{BigRational(pts[0].first), BigRational(pts[0].second)},
                 {BigRational(pts[1].first), BigRational(pts[1].second)},
                 0,
                 1};
        RatSeg t{{BigRational(pts[2].first), BigRational(pts[2].second)},
                 {BigRational(pts[3].first), BigRational(pts[3].second)},
                 2,
                 3};
        bool expected = reference_conflict(s, t);
        bool got = !check_crossings(d).empty();
        REQUIRE(got == expected);
        if (got) ++conflicts;

        GridDrawing shared = d;
        shared.edges = {{0, 1}, {0, 3}};
        RatSeg t2{s.a, t.b, 0, 3};
        bool expected2 = reference_conflict(s, t2);
        bool got2 = !check_crossings(shared).empty();
        REQUIRE(got2 == expected2);
    }
    CHECK(conflicts > 40);
}
