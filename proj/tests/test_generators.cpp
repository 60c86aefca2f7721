#include <catch2/catch_amalgamated.hpp>

#include <schemadraw/generators.hpp>
#include <schemadraw/io.hpp>

using namespace schemadraw;

TEST_CASE("torus grid matches the hand-built 3x3 rotations") {
    // Independently derived fixture: east/north edges per vertex, rotations
    // east, north, west, south.
    std::vector<std::vector<int>> rot(9);
    auto id = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int v = id(i, j);
            rot[v] = {4 * v, 4 * v + 2, 4 * id(i, j - 1) + 1, 4 * id(i - 1, j) + 3};
        }
    CombinatorialMap expect = build_map(9, rot);
    CombinatorialMap m = torus_grid(3, 3);
    CHECK(m.sigma == expect.sigma);
    CHECK(m.vertex_of == expect.vertex_of);
}

TEST_CASE("torus grids are quadrangulated genus 1 surfaces") {
    for (auto [r, c] : {std::pair{3, 3}, {3, 7}, {5, 4}, {6, 6}}) {
        CombinatorialMap m = torus_grid(r, c);
        CAPTURE(r, c);
        CHECK(m.vertex_count == r * c);
        CHECK(m.edge_count() == 2 * r * c);
        CHECK(genus(m) == 1);
        CHECK(is_simple(m));
        FaceSet fs = trace_faces(m);
        CHECK(fs.count() == r * c);
        for (const auto& f : fs.faces) CHECK(f.size() == 4);
    }
    CHECK_THROWS_AS(torus_grid(2, 5), Error);
}

TEST_CASE("planar grids are genus 0 with one outer face") {
    CombinatorialMap m = planar_grid(4, 5);
    CHECK(m.vertex_count == 20);
    CHECK(m.edge_count() == 31);
    CHECK(genus(m) == 0);
    CHECK(is_simple(m));
    FaceSet fs = trace_faces(m);
    REQUIRE(fs.count() == 13);
    int quads = 0, outer = 0;
    for (const auto& f : fs.faces) {
        if (f.size() == 4) ++quads;
        if (f.size() == 14) ++outer;
    }
    CHECK(quads == 12);
    CHECK(outer == 1);
}

TEST_CASE("handle construction reaches every requested genus") {
    CHECK(genus(genus_g_grid(2, 4)) == 2);
    for (int g = 0; g <= 5; ++g) {
        int size = std::max({4, 2 * g});
        CombinatorialMap m = genus_g_grid(g, size);
        CAPTURE(g);
        CHECK(genus(m) == g);
        CHECK(is_simple(m));
        CHECK(is_connected(m));
    }
    CHECK_THROWS_AS(genus_g_grid(3, 5), Error);
    CHECK_THROWS_AS(genus_g_grid(-1, 10), Error);
    CHECK_THROWS_AS(genus_g_grid(0, 1), Error);
}

TEST_CASE("random rotations are connected, simple and seed stable") {
    CombinatorialMap a = random_rotation(10, 20, 1);
    CombinatorialMap b = random_rotation(10, 20, 1);
    CHECK(serialize_graph(a) == serialize_graph(b));
    CHECK(a.vertex_count == 10);
    CHECK(a.edge_count() == 20);
    CHECK(is_connected(a));
    CHECK(is_simple(a));
    int g = genus(a);
    CHECK(g >= 0);
    CHECK(g <= 5);

    CombinatorialMap c = random_rotation(10, 20, 2);
    CHECK(serialize_graph(a) != serialize_graph(c));

    CHECK_THROWS_AS(random_rotation(10, 8, 1), Error);
    CHECK_THROWS_AS(random_rotation(5, 11, 1), Error);
    CHECK_THROWS_AS(random_rotation(1, 1, 1), Error);
}

TEST_CASE("torus triangulations are seed stable triangle meshes") {
    CombinatorialMap m = torus_triangulation(4, 5, 7);
    CHECK(m.vertex_count == 20);
    CHECK(m.edge_count() == 60);
    CHECK(genus(m) == 1);
    CHECK(is_simple(m));
    FaceSet fs = trace_faces(m);
    REQUIRE(fs.count() == 40);
    for (const auto& f : fs.faces) CHECK(f.size() == 3);
    CHECK(serialize_graph(torus_triangulation(4, 5, 7)) == serialize_graph(m));
    CHECK(serialize_graph(torus_triangulation(4, 5, 8)) != serialize_graph(m));
}
