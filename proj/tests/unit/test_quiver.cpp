#include "preproj/quiver.hpp"

#include <doctest.h>

using namespace preproj;

TEST_CASE("type T quiver shape") {
    for (int n = 1; n <= 5; ++n) {
        Quiver q = make_type_t(n);
        CHECK(q.num_vertices() == n);
        CHECK(q.coxeter_number() == 2 * n + 1);
        CHECK(q.arrows().size() == static_cast<std::size_t>(n));
        REQUIRE(q.loop_vertex());
        CHECK(*q.loop_vertex() == n - 1);
        DoubledQuiver d = double_quiver(q);
        CHECK(d.num_arrows() == 2 * (n - 1) + 1);
        REQUIRE(d.loop_arrow());
        CHECK(d.arrow(*d.loop_arrow()).star == *d.loop_arrow());
    }
}

TEST_CASE("type A quiver shape") {
    for (int m = 2; m <= 6; ++m) {
        Quiver q = make_type_a(m);
        CHECK(q.coxeter_number() == m + 1);
        CHECK(!q.loop_vertex());
        DoubledQuiver d = double_quiver(q);
        CHECK(d.num_arrows() == 2 * (m - 1));
        CHECK(!d.loop_arrow());
    }
}

TEST_CASE("adjacency matrices") {
    IntMatrix t3 = adjacency(make_type_t(3));
    CHECK(t3 == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(adjacency_signed_diagonal(make_type_t(3)) == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, -1}});
    CHECK(adjacency(make_type_a(3)) == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
}

TEST_CASE("doubled arrows are paired by star with opposite signs") {
    DoubledQuiver d = double_quiver(make_type_t(4));
    for (const auto& a : d.arrows()) {
        const Arrow& s = d.arrow(a.star);
        CHECK(s.star == a.id);
        CHECK(s.source == a.target);
        CHECK(s.target == a.source);
        if (!a.loop) CHECK(s.eps == -a.eps);
    }
    for (int i = 1; i < 4; ++i) {
        const Arrow& a = d.arrow(d.forward_arrow(i));
        CHECK(a.source == i - 1);
        CHECK(a.target == i);
        CHECK(d.left(a.id) == i);
        CHECK(d.right(a.id) == i - 1);
    }
    CHECK_THROWS(d.forward_arrow(4));
}
