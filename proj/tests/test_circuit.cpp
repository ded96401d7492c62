#include <random>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "ladderlab/circuit.hpp"
#include "ladderlab/component.hpp"
#include "ladderlab/error.hpp"

using namespace ladderlab;

TEST_CASE("component constructor validates kind and value") {
    const component r = resistor(2.0);
    CHECK(r.kind() == component_kind::resistor);
    CHECK(r.value() == 2.0);
    const component l = inertance(0.5);
    CHECK(l.kind() == component_kind::inertance);
    CHECK(l.value() == 0.5);

    CHECK_THROWS_MATCHES(resistor(-1.0), domain_error,
                         Catch::Matchers::Message("non-positive component value"));
    CHECK_THROWS_AS(resistor(0.0), domain_error);
    CHECK_THROWS_AS(inertance(-2.5), domain_error);
    CHECK_THROWS_MATCHES(inertance(std::numeric_limits<double>::infinity()), domain_error,
                         Catch::Matchers::Message("non-finite component value"));
    CHECK_THROWS_AS(resistor(std::numeric_limits<double>::quiet_NaN()), domain_error);
}

TEST_CASE("leaf circuits have weight one") {
    const circuit c = circuit::leaf(resistor(2.0));
    CHECK(c.is_leaf());
    CHECK(c.kind() == circuit_kind::leaf);
    CHECK(c.weight() == 1);
    CHECK(c.element() == resistor(2.0));
    CHECK(c.children().empty());
}

TEST_CASE("compose builds flattened junctions") {
    const circuit d1 = compose(circuit_kind::parallel,
                               {circuit::leaf(inertance(1.0)), circuit::leaf(resistor(1.0))});
    CHECK(d1.kind() == circuit_kind::parallel);
    CHECK(d1.children().size() == 2);
    CHECK(d1.weight() == 2);

    // Nested series flatten into a single three-leaf series node.
    const circuit nested = compose(
        circuit_kind::series,
        {circuit::leaf(resistor(1.0)),
         compose(circuit_kind::series,
                 {circuit::leaf(resistor(1.0)), circuit::leaf(resistor(1.0))})});
    CHECK(nested.kind() == circuit_kind::series);
    CHECK(nested.children().size() == 3);
    CHECK(nested.weight() == 3);
    for (const circuit& child : nested.children()) CHECK(child.is_leaf());

    // Parallel under series is preserved, series under series is not.
    const circuit mixed = compose(circuit_kind::series, {circuit::leaf(inertance(1.0)), d1});
    CHECK(mixed.children().size() == 2);
    CHECK(mixed.children()[1].kind() == circuit_kind::parallel);
}

TEST_CASE("compose rejects short part lists and leaf kinds") {
    CHECK_THROWS_AS(compose(circuit_kind::parallel, {circuit::leaf(resistor(1.0))}), arity_error);
    CHECK_THROWS_AS(compose(circuit_kind::series, {}), arity_error);
    CHECK_THROWS_AS(compose(circuit_kind::leaf,
                            {circuit::leaf(resistor(1.0)), circuit::leaf(resistor(2.0))}),
                    kind_error);
}

TEST_CASE("graft roots a component over a parallel bundle") {
    const circuit single = graft(inertance(1.0), {circuit::leaf(resistor(1.0))});
    CHECK(single.kind() == circuit_kind::series);
    REQUIRE(single.children().size() == 2);
    CHECK(single.children()[0] == circuit::leaf(inertance(1.0)));
    CHECK(single.children()[1] == circuit::leaf(resistor(1.0)));

    const circuit two =
        graft(inertance(1.0), {circuit::leaf(resistor(1.0)), circuit::leaf(inertance(2.0))});
    CHECK(two.kind() == circuit_kind::series);
    REQUIRE(two.children().size() == 2);
    CHECK(two.children()[0] == circuit::leaf(inertance(1.0)));
    CHECK(two.children()[1].kind() == circuit_kind::parallel);
    CHECK(two.children()[1].children().size() == 2);

    CHECK_THROWS_AS(graft(inertance(1.0), {}), arity_error);
}

TEST_CASE("build_ladder_forest produces the recursive ladder shape") {
    const std::vector<std::pair<component, component>> one{{inertance(1.0), resistor(1.0)}};
    const circuit d1 = build_ladder_forest(std::span<const std::pair<component, component>>(one));
    CHECK(d1 == compose(circuit_kind::parallel,
                        {circuit::leaf(inertance(1.0)), circuit::leaf(resistor(1.0))}));

    const std::vector<std::pair<component, component>> two{{inertance(1.0), resistor(1.0)},
                                                           {inertance(2.0), resistor(2.0)}};
    const circuit d2 = build_ladder_forest(std::span<const std::pair<component, component>>(two));
    // Expected shape: Parallel(Series(L1, Parallel(L2, R2)), R1).
    const circuit expected = compose(
        circuit_kind::parallel,
        {compose(circuit_kind::series,
                 {circuit::leaf(inertance(1.0)),
                  compose(circuit_kind::parallel,
                          {circuit::leaf(inertance(2.0)), circuit::leaf(resistor(2.0))})}),
         circuit::leaf(resistor(1.0))});
    CHECK(d2 == expected);

    const std::vector<ladder_stage> five{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};
    CHECK(build_ladder_forest(std::span<const ladder_stage>(five)).weight() == 10);
}

TEST_CASE("build_ladder_forest validates stages") {
    CHECK_THROWS_AS(build_ladder_forest(std::span<const ladder_stage>{}), arity_error);
    const std::vector<std::pair<component, component>> swapped{{resistor(1.0), inertance(1.0)}};
    CHECK_THROWS_AS(
        build_ladder_forest(std::span<const std::pair<component, component>>(swapped)),
        kind_error);
    const std::vector<ladder_stage> bad{{1.0, -1.0}};
    CHECK_THROWS_AS(build_ladder_forest(std::span<const ladder_stage>(bad)), domain_error);
}

TEST_CASE("ladder weight is twice the stage count for depths 1..50") {
    std::mt19937 rng(11001);
    for (std::size_t n = 1; n <= 50; ++n) {
        const std::vector<ladder_stage> stages = testgen::random_stages(rng, n);
        CHECK(build_ladder_forest(std::span<const ladder_stage>(stages)).weight() == 2 * n);
    }
}

TEST_CASE("ladder equals its graft-and-compose construction for depths 1..10") {
    // The ladder D_n can be built inside-out with graft alone: the innermost
    // tree roots a_(n-1) over (a_n | b_n), each outer tree roots a_k over
    // (T_(k+1) | b_(k+1)), and the top level is T_1 | b_1.
    std::mt19937 rng(11002);
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::vector<ladder_stage> stages = testgen::random_stages(rng, n);
        const circuit ladder = build_ladder_forest(std::span<const ladder_stage>(stages));

        circuit top = circuit::leaf(inertance(stages.back().inertance));
        if (n >= 2) {
            circuit tree = graft(inertance(stages[n - 2].inertance),
                                 {circuit::leaf(inertance(stages[n - 1].inertance)),
                                  circuit::leaf(resistor(stages[n - 1].resistance))});
            for (std::size_t k = n - 2; k-- > 0;) {
                tree = graft(inertance(stages[k].inertance),
                             {std::move(tree), circuit::leaf(resistor(stages[k + 1].resistance))});
            }
            top = std::move(tree);
        }
        const circuit grafted = compose(circuit_kind::parallel,
                                        {std::move(top), circuit::leaf(resistor(stages[0].resistance))});
        CHECK(ladder == grafted);
        CHECK(canonicalize(ladder) == grafted);
    }
}

TEST_CASE("canonicalize is the identity on constructed circuits") {
    std::mt19937 rng(11003);
    for (int trial = 0; trial < 50; ++trial) {
        const circuit c = testgen::random_circuit(rng, 1 + rng() % 16);
        const circuit once = canonicalize(c);
        CHECK(once == c);
        CHECK(canonicalize(once) == once);
    }
}

TEST_CASE("equality is structural and order-sensitive") {
    const circuit a = compose(circuit_kind::parallel,
                              {circuit::leaf(resistor(1.0)), circuit::leaf(inertance(1.0))});
    const circuit b = compose(circuit_kind::parallel,
                              {circuit::leaf(inertance(1.0)), circuit::leaf(resistor(1.0))});
    CHECK(a == a);
    CHECK(a != b);
    const circuit a_copy = a;
    CHECK(a_copy == a);
    CHECK(circuit::leaf(resistor(1.0)) != circuit::leaf(resistor(2.0)));
    CHECK(circuit::leaf(resistor(1.0)) != circuit::leaf(inertance(1.0)));
}
