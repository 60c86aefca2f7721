#include <catch2/catch_amalgamated.hpp>

#include <schemadraw/generators.hpp>
#include <schemadraw/shift_engine.hpp>
#include <schemadraw/split.hpp>
#include <schemadraw/verify.hpp>

#include <algorithm>
#include <string>
#include <vector>

using namespace schemadraw;

namespace {

template <class Fn>
std::string error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

CombinatorialMap cycle_map(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {2 * i, 2 * ((i + n - 1) % n) + 1};
    return build_map(n, rot);
}

GridDrawing to_drawing(const CombinatorialMap& g, const std::vector<long long>& x,
                       const std::vector<long long>& y) {
    GridDrawing d;
    d.vertex_count = g.vertex_count;
    for (int e = 0; e < g.edge_count(); ++e)
        d.edges.push_back({g.vertex_of[2 * e], g.vertex_of[2 * e + 1]});
    for (int v = 0; v < g.vertex_count; ++v)
        d.pos.push_back({x[v], y[v]});
    return d;
}

CombinatorialMap k4_map() {
    return build_map(4, {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {7, 9, 11}});
}

CombinatorialMap octahedron_map() {
    return build_map(6, {{0, 5, 12, 14},
                         {1, 16, 18, 2},
                         {3, 20, 22, 4},
                         {6, 13, 23, 11},
                         {7, 8, 17, 15},
                         {9, 10, 21, 19}});
}

} // namespace

TEST_CASE("classic layout of the triangle") {
    CombinatorialMap g = cycle_map(3);
    DiskLayout lay = dpp_classic(g, 1);
    REQUIRE(lay.order == std::vector<int>{1, 0, 2});
    CHECK(lay.x[1] == 0);
    CHECK(lay.y[1] == 0);
    CHECK(lay.x[0] == 2);
    CHECK(lay.y[0] == 0);
    CHECK(lay.x[2] == 1);
    CHECK(lay.y[2] == 1);
    auto ext = measure_grid(to_drawing(g, lay.x, lay.y));
    CHECK(ext.width == 2);
    CHECK(ext.height == 1);
}

TEST_CASE("classic layout of K4 fills the four by two grid") {
    CombinatorialMap g = k4_map();
    REQUIRE(genus(g) == 0);
    FaceSet fs = trace_faces(g);
    REQUIRE(fs.count() == 4);
    for (int f = 0; f < fs.count(); ++f) REQUIRE(fs.faces[f].size() == 3);

    DiskLayout lay = dpp_classic(g, 1);
    REQUIRE(lay.order == std::vector<int>{1, 0, 2, 3});
    CHECK(lay.x[1] == 0);
    CHECK(lay.y[1] == 0);
    CHECK(lay.x[0] == 4);
    CHECK(lay.y[0] == 0);
    CHECK(lay.x[2] == 2);
    CHECK(lay.y[2] == 1);
    CHECK(lay.x[3] == 2);
    CHECK(lay.y[3] == 2);

    GridDrawing d = to_drawing(g, lay.x, lay.y);
    CHECK(check_crossings(d).empty());
    auto ext = measure_grid(d);
    CHECK(ext.width == 2 * 4 - 4);
    CHECK(ext.height == 4 - 2);
}

TEST_CASE("classic layout of the octahedron fills the eight by four grid") {
    CombinatorialMap g = octahedron_map();
    REQUIRE(genus(g) == 0);
    REQUIRE(trace_faces(g).count() == 8);

    DiskLayout lay = dpp_classic(g, 1);
    REQUIRE(lay.order == std::vector<int>{1, 0, 4, 5, 3, 2});
    std::vector<std::pair<long long, long long>> want = {
        {8, 0}, {0, 0}, {4, 4}, {4, 3}, {5, 1}, {3, 2}};
    for (int v = 0; v < 6; ++v) {
        CHECK(lay.x[v] == want[v].first);
        CHECK(lay.y[v] == want[v].second);
    }

    GridDrawing d = to_drawing(g, lay.x, lay.y);
    CHECK(check_crossings(d).empty());
    auto ext = measure_grid(d);
    CHECK(ext.width == 2 * 6 - 4);
    CHECK(ext.height == 6 - 2);

    DiskLayout again = dpp_classic(g, 1);
    CHECK(again.x == lay.x);
    CHECK(again.y == lay.y);
}

TEST_CASE("wall layouts keep walls vertical on hand instances") {
    SECTION("one wall vertex per side") {
        CombinatorialMap g =
            build_map(5, {{0, 9, 10}, {1, 12, 2}, {3, 4}, {7, 8}, {5, 13, 11, 6}});
        REQUIRE(genus(g) == 0);
        FaceSet fs = trace_faces(g);
        REQUIRE(fs.count() == 4);

        DiskLayout lay = layout_disk(g, fs, fs.face_of[1], {0, 1}, {3}, {2});
        REQUIRE(lay.order == std::vector<int>{0, 1, 4, 3, 2});
        std::vector<std::pair<long long, long long>> want = {
            {0, 0}, {8, 0}, {8, 6}, {0, 6}, {4, 2}};
        for (int v = 0; v < 5; ++v) {
            CHECK(lay.x[v] == want[v].first);
            CHECK(lay.y[v] == want[v].second);
        }
        CHECK(check_crossings(to_drawing(g, lay.x, lay.y)).empty());
    }

    SECTION("a two vertex right wall rises bottom up") {
        CombinatorialMap g =
            build_map(5, {{0, 9}, {1, 10, 2}, {3, 12, 4}, {5, 6}, {7, 13, 11, 8}});
        REQUIRE(genus(g) == 0);
        FaceSet fs = trace_faces(g);
        REQUIRE(fs.count() == 4);

        DiskLayout lay = layout_disk(g, fs, fs.face_of[1], {0, 1}, {}, {2, 3});
        REQUIRE(lay.order == std::vector<int>{0, 1, 4, 2, 3});
        std::vector<std::pair<long long, long long>> want = {
            {0, 0}, {8, 0}, {8, 6}, {8, 8}, {2, 2}};
        for (int v = 0; v < 5; ++v) {
            CHECK(lay.x[v] == want[v].first);
            CHECK(lay.y[v] == want[v].second);
        }
        CHECK(lay.x[1] == lay.x[2]);
        CHECK(lay.x[2] == lay.x[3]);
        CHECK(lay.y[1] < lay.y[2]);
        CHECK(lay.y[2] < lay.y[3]);
        CHECK(check_crossings(to_drawing(g, lay.x, lay.y)).empty());
    }
}

TEST_CASE("grid disks lay out with vertical walls and no crossings") {
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 4}, {4, 5}}) {
        CAPTURE(rows, cols);
        CombinatorialMap g = planar_grid(rows, cols);
        auto gi = detail::planar_grid_index(rows, cols);

        std::vector<int> bottom, top, left, right;
        for (int j = 0; j < cols; ++j) bottom.push_back(gi.vertex(0, j));
        for (int j = 0; j < cols; ++j) top.push_back(gi.vertex(rows - 1, j));
        for (int i = 0; i < rows; ++i) left.push_back(gi.vertex(i, 0));
        for (int i = 0; i < rows; ++i) right.push_back(gi.vertex(i, cols - 1));

        FaceSet fs0 = trace_faces(g);
        int outer = 0;
        for (int f = 0; f < fs0.count(); ++f)
            if (fs0.faces[f].size() > fs0.faces[outer].size()) outer = f;
        int outer_dart = fs0.faces[outer].front();

        Triangulation t = triangulate_interior(g, outer_dart, {bottom, top, left, right});
        FaceSet fs = trace_faces(t.map);

        std::vector<int> lwall(left.begin() + 1, left.end());
        std::vector<int> rwall(right.begin() + 1, right.end());
        DiskLayout lay = layout_disk(t.map, fs, fs.face_of[outer_dart], bottom, lwall, rwall);

        for (std::size_t j = 0; j < bottom.size(); ++j) {
            CHECK(lay.y[bottom[j]] == 0);
            if (j > 0) CHECK(lay.x[bottom[j - 1]] < lay.x[bottom[j]]);
        }
        for (std::size_t i = 1; i < left.size(); ++i) {
            CHECK(lay.x[left[i]] == lay.x[left[0]]);
            CHECK(lay.y[left[i - 1]] < lay.y[left[i]]);
        }
        for (std::size_t i = 1; i < right.size(); ++i) {
            CHECK(lay.x[right[i]] == lay.x[right[0]]);
            CHECK(lay.y[right[i - 1]] < lay.y[right[i]]);
        }

        GridDrawing d = to_drawing(t.map, lay.x, lay.y);
        CHECK(check_crossings(d).empty());
        auto ext = measure_grid(d);
        CHECK(ext.width <= 2 * t.map.vertex_count);

        DiskLayout again = layout_disk(t.map, fs, fs.face_of[outer_dart], bottom, lwall, rwall);
        CHECK(again.x == lay.x);
        CHECK(again.y == lay.y);
    }
}

TEST_CASE("canonical order rejections") {
    SECTION("a chord inside the base") {
        CombinatorialMap sq = cycle_map(4);
        Triangulation t = triangulate_interior(sq, 0);
        FaceSet fs = trace_faces(t.map);
        int diag_a = t.map.vertex_of[2 * 4], diag_b = t.map.vertex_of[2 * 4 + 1];
        std::vector<int> base = {diag_a, (diag_a + diag_b) / 2, diag_b};
        if (std::abs(diag_a - diag_b) != 2) base = {diag_a, diag_b};
        CHECK(error_of([&] {
                  canonical_order_from_path(t.map, fs, fs.face_of[0], base);
              }) == "canonical: the base path has a chord");
    }
    SECTION("base not along the boundary") {
        CombinatorialMap sq = cycle_map(4);
        Triangulation t = triangulate_interior(sq, 0);
        FaceSet fs = trace_faces(t.map);
        CHECK(error_of([&] {
                  canonical_order_from_path(t.map, fs, fs.face_of[0], {0, 2});
              }) == "canonical: the base is not a boundary path");
    }
    SECTION("pinched external walk") {
        CombinatorialMap path = build_map(3, {{0}, {1, 2}, {3}});
        FaceSet fs = trace_faces(path);
        CHECK(error_of([&] {
                  canonical_order_from_path(path, fs, 0, {0, 1});
              }) == "canonical: the external face is not a simple cycle");
    }
    SECTION("a square interior cannot shed its top") {
        CombinatorialMap sq = cycle_map(4);
        FaceSet fs = trace_faces(sq);
        CHECK(error_of([&] {
                  canonical_order_from_path(sq, fs, fs.face_of[1], {0, 1});
              }) == "canonical: a removed vertex leaves a broken contour");
    }
}

TEST_CASE("shift engine rejections") {
    SECTION("fan must be one contour run") {
        ShiftEngine eng(5);
        eng.place_base({0, 1, 2});
        CHECK(error_of([&] { eng.insert(3, {0, 2}, ShiftEngine::Insert::middle); }) ==
              "shift: insertion fan is not a contour run");
        CHECK(error_of([&] { eng.insert(4, {0}, ShiftEngine::Insert::middle); }) ==
              "shift: a vertex must attach to at least two placed vertices");
    }
    SECTION("classic first vertex needs an edge base") {
        ShiftEngine eng(4);
        eng.place_base({0, 1, 2});
        CHECK(error_of([&] { eng.place_first(3); }) ==
              "shift: the first vertex needs a two-vertex base");
    }
    SECTION("base placed once") {
        ShiftEngine eng(4);
        eng.place_base({0, 1});
        CHECK(error_of([&] { eng.place_base({2, 3}); }) == "shift: the base is already placed");
        CHECK(error_of([&] { eng.insert(0, {0, 1}, ShiftEngine::Insert::middle); }) ==
              "shift: vertex placed twice");
    }
    SECTION("walls cannot hang off a bare base") {
        CombinatorialMap g = cycle_map(3);
        FaceSet fs = trace_faces(g);
        CHECK(error_of([&] { layout_disk(g, fs, fs.face_of[1], {0, 1, 2}, {1}, {}); }) ==
              "layout: walls cannot exist without an interior");
    }
}

TEST_CASE("classic layout rejections") {
    CombinatorialMap sq = cycle_map(4);
    CHECK(error_of([&] { dpp_classic(sq, 0); }) == "dpp: the map must be fully triangulated");
    CombinatorialMap torus = torus_grid(3, 3);
    CHECK(error_of([&] { dpp_classic(torus, 0); }) == "dpp: map must be planar");
    CombinatorialMap tri = cycle_map(3);
    CHECK(error_of([&] { dpp_classic(tri, 99); }) == "dpp: outer dart out of range");
}
