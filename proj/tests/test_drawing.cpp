#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>

#include "fixtures.hpp"
#include "onepl/drawing.hpp"
#include "oracles.hpp"

using namespace onepl;

TEST_CASE("validate accepts the pyramidal K4") {
    auto d = fixtures::k4_pyramidal();
    CHECK(d.real_count() == 4);
    CHECK(d.planar_count() == 5);
    CHECK(d.segment_count() == 8);
    CHECK(trace_faces(d).count() == 5);
}

TEST_CASE("validate rejects an edge crossed twice") {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {1, 2}};
    d.crossings = {{4, 5}, {4, 3}};
    d.rotation.assign(6, {});
    CHECK_THROWS_WITH_AS(validate_drawing(d), "edge 4 crossed twice", Error);
}

TEST_CASE("validate rejects adjacent edges crossing") {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {1, 2}};
    d.crossings = {{4, 0}};  // (0,3) and (0,1) share vertex 0
    d.rotation.assign(5, {});
    CHECK_THROWS_AS(validate_drawing(d), Error);
    try {
        validate_drawing(d);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("adjacent edges") != std::string::npos);
    }
}

TEST_CASE("validate rejects a non-alternating crossing") {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {1, 2}};
    d.crossings = {{4, 5}};
    // swapped neighbors 2 and 0 at the crossing vertex
    d.rotation = {{1, 4, 2}, {3, 4, 0}, {3, 0, 4}, {2, 4, 1}, {3, 0, 2, 1}};
    CHECK_THROWS_WITH_AS(validate_drawing(d), "crossing 4 not alternating", Error);
}

TEST_CASE("validate rejects asymmetric rotations") {
    DrawingData d;
    d.n = 3;
    d.edges = {{0, 1}, {0, 2}, {1, 2}};
    d.rotation = {{1, 2}, {2, 0}, {0, 0}};
    CHECK_THROWS_AS(validate_drawing(d), Error);
    try {
        validate_drawing(d);
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("vertex 2") != std::string::npos);
    }
}

TEST_CASE("validate rejects a disconnected planarization") {
    DrawingData d;
    d.n = 6;
    d.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    d.rotation = {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}};
    CHECK_THROWS_AS(validate_drawing(d), Error);
    try {
        validate_drawing(d);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("disconnected planarization") != std::string::npos);
    }
}

TEST_CASE("validate rejects a toroidal rotation system") {
    // K4 with one rotation reversed embeds on the torus, not the sphere
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    d.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 2, 1}};
    CHECK_THROWS_AS(validate_drawing(d), Error);
    try {
        validate_drawing(d);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("Euler") != std::string::npos);
    }
}

TEST_CASE("trace_faces on the K4 drawings") {
    auto tetra = trace_faces(fixtures::k4_tetrahedral());
    CHECK(tetra.count() == 4);
    CHECK(tetra.f3 == 4);
    CHECK(tetra.t3 == 4);
    CHECK(tetra.max_degree == 3);
    for (const auto& f : tetra.faces) CHECK_FALSE(f.crossed);

    auto pyr = trace_faces(fixtures::k4_pyramidal());
    CHECK(pyr.count() == 5);
    CHECK(pyr.f3 == 4);
    CHECK(pyr.f4 == 1);
    CHECK(pyr.t3 == 0);
    int crossed = 0;
    for (const auto& f : pyr.faces) crossed += f.crossed ? 1 : 0;
    CHECK(crossed == 4);
}

TEST_CASE("trace_faces on the kite-augmented cube") {
    auto census = trace_faces(fixtures::kite_cube());
    CHECK(census.count() == 24);
    CHECK(census.f3 == 24);
    CHECK(census.t3 == 0);
    for (const auto& f : census.faces) {
        CHECK(f.degree() == 3);
        CHECK(f.crossed);
    }
}

TEST_CASE("face-walk double counting and Euler across the corpus") {
    for (const auto& d : fixtures::full_drawing_corpus()) {
        auto census = trace_faces(d);
        CHECK(census.segment_sum == 2 * d.segment_count());
        CHECK(d.planar_count() - d.segment_count() + census.count() == 2);
    }
}

TEST_CASE("minimum degree stays below eight across the corpus") {
    for (const auto& d : fixtures::full_drawing_corpus()) CHECK(d.base.min_degree() <= 7);
}

TEST_CASE("skeleton of the kite-augmented cube is the cube") {
    auto sk = skeleton(fixtures::kite_cube());
    CHECK(sk.graph.n == 8);
    CHECK(sk.graph.edge_count() == 12);
    CHECK(sk.f3 == 0);
    CHECK(sk.f4 == 6);
    CHECK(sk.connected);
    CHECK(sk.faces_3_or_4);
    for (auto [u, v] : sk.graph.edges) CHECK(std::popcount(unsigned(u ^ v)) == 1);
}

TEST_CASE("skeleton of crossing-free drawings is the drawing itself") {
    auto d = fixtures::k4_tetrahedral();
    auto sk = skeleton(d);
    CHECK(sk.graph == d.base);
    CHECK(sk.f3 == 4);
    CHECK(sk.f4 == 0);
}

TEST_CASE("skeleton of the K5 drawing is the wheel W4") {
    auto sk = skeleton(fixtures::k5_drawing());
    CHECK(sk.graph.n == 5);
    CHECK(sk.graph.edge_count() == 8);
    CHECK(sk.f3 == 4);
    CHECK(sk.f4 == 1);
}

TEST_CASE("skeleton edges are exactly the uncrossed edges") {
    for (const auto& d : fixtures::full_drawing_corpus()) {
        auto sk = skeleton(d);
        std::set<std::pair<int, int>> expected;
        for (int e = 0; e < d.base.edge_count(); ++e)
            if (!d.edge_crossed(e)) expected.insert(d.base.edges[e]);
        std::set<std::pair<int, int>> got(sk.graph.edges.begin(), sk.graph.edges.end());
        CHECK(got == expected);
    }
}

TEST_CASE("disconnected skeleton is flagged, not rejected") {
    auto d = fixtures::split_skeleton();
    auto sk = skeleton(d);
    CHECK_FALSE(sk.connected);
    CHECK_FALSE(sk.euler_checked);
    CHECK(sk.graph.edge_count() == 6);
}

TEST_CASE("t3 of a rich drawing equals f3 of its skeleton") {
    std::vector<OnePlaneDrawing> rich_cases{fixtures::kite_cube(), fixtures::k5_drawing(),
                                            fixtures::k6_prism_drawing(),
                                            kite_augment(gen_octagonal_cylinder(0)),
                                            fixtures::k4_tetrahedral()};
    for (const auto& d : rich_cases) {
        auto sk = skeleton(d);
        REQUIRE(sk.faces_3_or_4);
        CHECK(trace_faces(d).t3 == sk.f3);
    }
}

TEST_CASE("is_triangulated") {
    CHECK(is_triangulated(fixtures::kite_cube()));
    CHECK(is_triangulated(fixtures::k4_tetrahedral()));
    CHECK_FALSE(is_triangulated(fixtures::k4_pyramidal()));
}

TEST_CASE("biedl_check on triangulated drawings") {
    auto tetra = biedl_check(fixtures::k4_tetrahedral());
    CHECK(tetra.lhs == 6);
    CHECK(tetra.rhs == 6);  // 4*4 - 8 - 4/2
    CHECK(tetra.verdict == Verdict::Verified);

    auto cube = biedl_check(fixtures::kite_cube());
    CHECK(cube.lhs == 24);
    CHECK(cube.rhs == 24);  // 4*8 - 8 - 0
    CHECK(cube.verdict == Verdict::Verified);

    auto prism = biedl_check(fixtures::k6_prism_drawing());
    CHECK(prism.lhs == 15);
    CHECK(prism.rhs == 15);  // 4*6 - 8 - 2/2
    CHECK(prism.verdict == Verdict::Verified);

    auto oct = biedl_check(kite_augment(gen_octagonal_cylinder(0)));
    CHECK(oct.lhs == 84);
    CHECK(oct.rhs == 84);  // 4*24 - 8 - 8/2
    CHECK(oct.verdict == Verdict::Verified);
}

TEST_CASE("biedl_check reports both sides under an unmet hypothesis") {
    auto r = biedl_check(fixtures::k4_pyramidal());
    CHECK(r.verdict == Verdict::Vacuous);
    CHECK(r.lhs == 6);
    CHECK(r.hypotheses.size() == 1);
    CHECK(r.hypotheses[0].status == HypStatus::Unmet);
}

TEST_CASE("make_plane_map rejects inconsistent rotations") {
    auto g = fixtures::cycle_graph(4);
    CHECK_THROWS_AS(make_plane_map(g, {{1, 3}, {0, 2}, {1, 3}, {0, 1}}), Error);
}

TEST_CASE("single vertex map has one face") {
    auto m = make_plane_map(build_graph(1, {}), {{}});
    CHECK(m.faces.count() == 1);
    CHECK(m.connected);
}
