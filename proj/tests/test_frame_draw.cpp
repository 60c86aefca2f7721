#include <schemadraw/frame_draw.hpp>
#include <schemadraw/generators.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace {

using namespace schemadraw;

template <class Fn>
std::string error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

CutResult clean_cut(const CombinatorialMap& g, int basepoint = 0) {
    PolygonalSchema schema = tree_cotree_schema(g, basepoint);
    PolygonalSchema refined = chord_free_refine(g, schema);
    return cut_along(g, refined);
}

long long frame_width_cap(const CutResult& cut) {
    return 2LL * cut.star.vertex_count;
}

void require_rectangle_drawing(const CutResult& cut, const GridDrawing& d) {
    REQUIRE(check_crossings(d).empty());
    FrameReport fr = check_frame(d);
    REQUIRE(fr.all_ok);
    REQUIRE(fr.rectangle);
    REQUIRE(d.frame.size() == 4);
    const long long n = cut.star.vertex_count;
    REQUIRE(d.width <= 2 * n);
    REQUIRE(d.height <= 2 * n * n);
    REQUIRE(measure_grid(d).bend_count == 0);
}

int external_chord_count(const CutResult& cut) {
    std::vector<int> cyc =
        detail::simple_external_cycle(cut.star, cut.faces, cut.external_face);
    const int m = static_cast<int>(cyc.size());
    std::vector<int> pos(cut.star.vertex_count, -1);
    for (int i = 0; i < m; ++i) pos[cyc[i]] = i;
    int count = 0;
    for (int e = 0; e < cut.star.edge_count(); ++e) {
        const int a = pos[cut.star.vertex_of[2 * e]];
        const int b = pos[cut.star.vertex_of[2 * e + 1]];
        if (a < 0 || b < 0) continue;
        const int diff = std::abs(a - b);
        if (diff >= 2 && diff <= m - 2) ++count;
    }
    return count;
}

int boundary_edge_count(const CutResult& cut) {
    int k = 0;
    for (const CutSide& side : cut.sides) k += static_cast<int>(side.edges.size());
    return k;
}

} // namespace

TEST_CASE("the three by three torus grid draws inside a rectangle frame",
          "[frame_draw]") {
    CombinatorialMap g = torus_grid(3, 3);
    CutResult cut = clean_cut(g);
    GridDrawing d = draw_toroidal(cut);

    require_rectangle_drawing(cut, d);
    REQUIRE(d.width == 22);
    REQUIRE(d.height == 40);
    REQUIRE(d.edges.size() == static_cast<std::size_t>(cut.star.edge_count()));

    GridDrawing again = draw_toroidal(cut);
    REQUIRE(again.pos == d.pos);
}

TEST_CASE("torus grids of mixed proportions keep the frame invariants",
          "[frame_draw]") {
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{{3, 4}, {4, 4}, {4, 5}, {5, 3}}) {
        CombinatorialMap g = torus_grid(rows, cols);
        CutResult cut = clean_cut(g);
        GridDrawing d = draw_toroidal(cut);
        require_rectangle_drawing(cut, d);
    }
}

TEST_CASE("random toroidal triangulations draw cleanly", "[frame_draw]") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        CombinatorialMap g = torus_triangulation(4, 4, seed);
        CutResult cut = clean_cut(g);
        GridDrawing d = draw_toroidal(cut);
        require_rectangle_drawing(cut, d);
    }
}

TEST_CASE("a single edge bottom side still draws as a rectangle", "[frame_draw]") {
    bool found = false;
    for (unsigned seed = 1; seed <= 200 && !found; ++seed) {
        CombinatorialMap g = torus_triangulation(3, 3, seed);
        for (int bp = 0; bp < g.vertex_count && !found; ++bp) {
            CutResult cut;
            try {
                cut = clean_cut(g, bp);
            } catch (const Error&) {
                continue;
            }
            if (cut.sides[2].edges.size() != 1) continue;
            found = true;
            GridDrawing d = draw_toroidal(cut);
            require_rectangle_drawing(cut, d);
        }
    }
    REQUIRE(found);
}

TEST_CASE("the toroidal drawing rejects bad cuts", "[frame_draw]") {
    CombinatorialMap g2 = genus_g_grid(2, 4);
    CutResult high = clean_cut(g2);
    REQUIRE(error_of([&] { draw_toroidal(high); }) == "frame: the cut must have four sides");

    bool found = false;
    for (unsigned seed = 1; seed <= 40 && !found; ++seed) {
        CombinatorialMap g = torus_triangulation(4, 4, seed);
        PolygonalSchema schema = tree_cotree_schema(g, 0);
        CutResult raw = cut_along(g, schema);
        bool chordful = false;
        for (int s = 0; s < 4; ++s)
            if (!find_chords(raw, s).empty()) chordful = true;
        if (!chordful) continue;
        found = true;
        REQUIRE(error_of([&] { draw_toroidal(raw); }) ==
                "frame: a side has a chord, refine the schema first");
    }
    REQUIRE(found);
}

TEST_CASE("chord subdivision leaves a chord free boundary", "[frame_draw]") {
    int with_chords = 0;
    for (int size : {4, 5}) {
        CombinatorialMap g = genus_g_grid(2, size);
        CutResult cut = clean_cut(g);
        const int before = external_chord_count(cut);
        BendInsertion ins = insert_bend_vertices(cut);

        if (before == 0) {
            REQUIRE(ins.bends.empty());
            REQUIRE(ins.cut.star.vertex_count == cut.star.vertex_count);
            REQUIRE(ins.cut.star.edge_count() == cut.star.edge_count());
            continue;
        }
        ++with_chords;
        REQUIRE(static_cast<int>(ins.bends.size()) == before);
        REQUIRE(static_cast<int>(ins.bends.size()) <= boundary_edge_count(cut) - 3);
        REQUIRE(external_chord_count(ins.cut) == 0);
        REQUIRE(genus(ins.cut.star) == 0);
        REQUIRE(ins.cut.star.vertex_count == cut.star.vertex_count + before);
        for (const BendVertex& b : ins.bends) {
            REQUIRE(ins.cut.star.degree(b.vertex) >= 2);
            REQUIRE(ins.cut.edge_origin[b.half_edge] == cut.edge_origin[b.edge]);
        }
        for (std::size_t s = 0; s < cut.sides.size(); ++s)
            REQUIRE(ins.cut.sides[s].vertices == cut.sides[s].vertices);
    }
    REQUIRE(with_chords >= 1);
}

TEST_CASE("genus two cuts draw with straight sides and few bends", "[frame_draw]") {
    for (int size : {4, 5}) {
        CombinatorialMap g = genus_g_grid(2, size);
        CutResult cut = clean_cut(g);
        GridDrawing d = draw_peel_and_bend(cut);

        REQUIRE(check_crossings(d).empty());
        REQUIRE(d.frame.size() == 8);
        FrameReport fr = check_frame(d);
        REQUIRE(fr.all_ok);
        const auto extent = measure_grid(d);
        REQUIRE(extent.bend_count <= boundary_edge_count(cut) - 3);
        const long long n = cut.star.vertex_count + extent.bend_count;
        REQUIRE(d.width <= 2 * n);
        REQUIRE(d.height <= 2 * n * n);
    }
}

TEST_CASE("peel and bend delegates the four sided case", "[frame_draw]") {
    CombinatorialMap g = torus_grid(3, 4);
    CutResult cut = clean_cut(g);
    GridDrawing via_bend = draw_peel_and_bend(cut);
    GridDrawing direct = draw_toroidal(cut);
    REQUIRE(via_bend.pos == direct.pos);
    REQUIRE(via_bend.frame == direct.frame);
}
