#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "matchstick/plane_graph.hpp"

using namespace matchstick;

namespace {

PlaneGraph triangle() {
    return PlaneGraph::from_rotation_system({{1, 2}, {2, 0}, {0, 1}}, {1, 0});
}

PlaneGraph cycle(int m) {
    std::vector<std::vector<VertexId>> rot(m);
    for (int v = 0; v < m; ++v) rot[v] = {(v + 1) % m, (v + m - 1) % m};
    return PlaneGraph::from_rotation_system(std::move(rot), {0, 1});
}

// Rhombus with its short diagonal: two triangles glued along an edge.
PlaneGraph double_triangle() {
    // 0-(1,0) 1-(1,1)... vertices 0,1 on the diagonal, apexes 2 and 3
    return PlaneGraph::from_rotation_system(
        {{2, 1, 3}, {3, 0, 2}, {1, 0}, {0, 1}}, {2, 0});
}

PlaneGraph octahedron() {
    // antipodal pairs (0,5), (1,4), (2,3); equator 1,2,4,3
    std::vector<std::vector<VertexId>> rot = {
        {1, 2, 4, 3},  // 0
        {0, 3, 5, 2},  // 1
        {0, 1, 5, 4},  // 2
        {0, 4, 5, 1},  // 3
        {0, 2, 5, 3},  // 4
        {1, 3, 4, 2},  // 5
    };
    return PlaneGraph::from_rotation_system(std::move(rot), {0, 1});
}

}  // namespace

TEST_CASE("triangle rotation system traces two faces") {
    PlaneGraph g = triangle();
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
    CHECK(g.outer_face().size() == 3);
}

TEST_CASE("five-cycle has two faces of size five") {
    PlaneGraph g = cycle(5);
    CHECK(g.face_count() == 2);
    for (const Face& f : g.faces()) CHECK(f.size() == 5);
}

TEST_CASE("asymmetric rotation is rejected") {
    // 1 lists 0 but 0 does not list 1
    CHECK_THROWS_WITH_AS(
        PlaneGraph::from_rotation_system({{2}, {2, 0}, {0, 1}}, {1, 0}),
        doctest::Contains("lists"), GraphError);
}

TEST_CASE("disconnected and toroidal inputs are rejected") {
    CHECK_THROWS_AS(PlaneGraph::from_rotation_system(
                        {{1}, {0}, {3}, {2}}, {0, 1}),
                    GraphError);
    // K4 with all-identical rotations is not planar as drawn
    bool threw = false;
    try {
        PlaneGraph::from_rotation_system(
            {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, {0, 1});
    } catch (const GraphError& e) {
        threw = e.kind() == GraphErrorKind::NonzeroGenus;
    }
    CHECK(threw);
}

TEST_CASE("face profile of the triangle") {
    FaceProfile p = face_profile(triangle());
    CHECK(p.n == 3);
    CHECK(p.k == 3);
    CHECK(p.tau == 6);
    CHECK(p.census_at(3) == 2);
    // 8 - tau = sum (4-i) A_i
    CHECK(8 - p.tau == (4 - 3) * p.census_at(3));
}

TEST_CASE("face profile of cycles matches the deficiency formula") {
    for (int m = 3; m <= 9; ++m) {
        FaceProfile p = face_profile(cycle(m));
        CHECK(p.tau == 2 * m);
        CHECK(p.census_at(m) == 2);
        CHECK(p.n == p.faces - 2 + p.tau / 2);
    }
}

TEST_CASE("connectivity levels") {
    // two triangles sharing one vertex -> 1
    std::vector<std::vector<VertexId>> bowtie = {
        {1, 2}, {2, 0}, {3, 4, 0, 1}, {4, 2}, {2, 3}};
    PlaneGraph b = PlaneGraph::from_rotation_system(std::move(bowtie), {0, 1});
    CHECK(connectivity_level(b) == 1);

    CHECK(connectivity_level(double_triangle()) == 2);
    CHECK(connectivity_level(octahedron()) == 3);
    CHECK_THROWS_AS(connectivity_level(PlaneGraph::single_vertex()), GraphError);
}

TEST_CASE("quadrangle decomposition") {
    SUBCASE("triangle-only graph is empty") {
        CHECK(quadrangle_decomposition(triangle()).components.empty());
        CHECK(quadrangle_decomposition(octahedron()).components.empty());
    }
    SUBCASE("outer quadrangle counts in the census but not the decomposition") {
        // double triangle: the outer face is a 4-gon; A_4 includes it, the
        // decomposition of drawn quadrangles does not
        PlaneGraph g = double_triangle();
        FaceProfile p = face_profile(g);
        CHECK(p.census_at(4) == 1);
        CHECK(quadrangle_decomposition(g).components.empty());
    }
    SUBCASE("a single inner quadrangle") {
        PlaneGraph g = cycle(4);
        QuadDecomposition qd = quadrangle_decomposition(g);
        // only the bounded face counts; the unbounded walk is not a quadrangle
        REQUIRE(qd.components.size() == 1);
        CHECK(qd.components[0].q == 1);
        CHECK(qd.components[0].boundary_length == 4);
        CHECK(qd.components[0].simply_connected);
    }
    SUBCASE("2x2 block of quadrangles") {
        // 3x3 grid patch
        std::vector<std::vector<VertexId>> rot(9);
        auto id = [](int r, int c) { return 3 * r + c; };
        // build adjacency grid, rotations by compass order E,N,W,S (ccw)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                std::vector<VertexId> nb;
                if (c + 1 < 3) nb.push_back(id(r, c + 1));
                if (r + 1 < 3) nb.push_back(id(r + 1, c));
                if (c - 1 >= 0) nb.push_back(id(r, c - 1));
                if (r - 1 >= 0) nb.push_back(id(r - 1, c));
                rot[id(r, c)] = nb;
            }
        PlaneGraph g = PlaneGraph::from_rotation_system(std::move(rot), {1, 0});
        FaceProfile p = face_profile(g);
        REQUIRE(p.census_at(4) == 4);
        QuadDecomposition qd = quadrangle_decomposition(g);
        REQUIRE(qd.components.size() == 1);
        CHECK(qd.components[0].q == 4);
        CHECK(qd.components[0].boundary_length == 8);
    }
}

TEST_CASE("canonical code invariances") {
    std::mt19937 rng(7);
    PlaneGraph g = double_triangle();
    CanonicalCode base = canonical_code(g);

    SUBCASE("relabeling") {
        std::vector<VertexId> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 30; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_code(g.relabeled(perm)) == base);
        }
    }
    SUBCASE("reflection") { CHECK(canonical_code(g.mirrored()) == base); }
    SUBCASE("two differently labeled triangles agree") {
        PlaneGraph t1 = triangle();
        PlaneGraph t2 = t1.relabeled({2, 0, 1});
        CHECK(canonical_code(t1) == canonical_code(t2));
    }
    SUBCASE("distinct graphs differ") {
        CHECK(canonical_code(triangle()) != canonical_code(cycle(4)));
        CHECK(canonical_code(cycle(4)) != base);
    }
    SUBCASE("round trip through decode") {
        PlaneGraph back = decode_canonical(base);
        CHECK(canonical_code(back) == base);
        CHECK(back.n() == g.n());
        CHECK(face_profile(back).tau == face_profile(g).tau);
    }
}

TEST_CASE("outer face choice distinguishes plane graphs") {
    // double triangle rooted at its outer quadrilateral vs. rooted at an
    // inner triangle: the second is not a valid outer face for the same
    // combinatorics, and codes must differ.
    PlaneGraph a = double_triangle();
    PlaneGraph b = PlaneGraph::from_rotation_system(
        {{2, 1, 3}, {3, 0, 2}, {1, 0}, {0, 1}}, {0, 1});
    CHECK(face_profile(a).k != face_profile(b).k);
    CHECK(canonical_code(a) != canonical_code(b));
}
