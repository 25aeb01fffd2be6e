#include <doctest.h>

#include "oracles.hpp"

#include <rrlab/errors.hpp>
#include <rrlab/named_graphs.hpp>
#include <rrlab/oracle_harness.hpp>
#include <rrlab/recognition.hpp>

using namespace rrlab;

namespace
{
    auto c5_plus_chord() -> Graph
    {
        return GraphBuilder(named::cycle(5)).add_edge(0, 2).build();
    }

    // Every witness on a negative verdict must re-validate.
    void check_certificate(const Graph & g, const ClassCertificate & cert)
    {
        REQUIRE(cert.verdict != cert.witness.has_value());
        if (cert.witness)
            REQUIRE(validate_witness(g, *cert.witness));
    }
}

TEST_CASE("find hole")
{
    auto c5 = find_hole(named::cycle(5), 5, Parity::odd);
    REQUIRE(c5);
    CHECK(c5->length() == 5);
    CHECK(is_hole(named::cycle(5), c5->vertices));
    CHECK_FALSE(find_hole(named::complete(4), 4).has_value());
    CHECK_FALSE(find_hole(named::cycle(6), 5, Parity::odd).has_value());
    CHECK(find_hole(named::cycle(6), 5, Parity::even).has_value());
    CHECK(find_hole(named::cycle(4)).has_value());
    CHECK_THROWS_AS(find_hole(named::cycle(5), 3), InputError);

    SUBCASE("agrees with induced-cycle enumeration on random graphs")
    {
        RandomGraphStream stream(4, 9, 0.45, 11);
        for (int k = 0; k < 2000; ++k) {
            auto g = stream.next();
            auto sizes = oracle::hole_sizes(oracle::matrix_of(g));
            for (int min_len : {4, 5, 6}) {
                for (auto parity : {Parity::any, Parity::odd, Parity::even}) {
                    bool expected = false;
                    for (auto s : sizes)
                        if (s >= min_len
                            && (parity == Parity::any || (s % 2 == 1) == (parity == Parity::odd)))
                            expected = true;
                    auto hole = find_hole(g, min_len, parity);
                    REQUIRE(hole.has_value() == expected);
                    if (hole)
                        REQUIRE(is_hole(g, hole->vertices));
                }
            }
        }
    }
}

TEST_CASE("long antiholes")
{
    auto co_c6 = complement(named::cycle(6));
    auto a6 = find_long_antihole(co_c6);
    REQUIRE(a6);
    CHECK(a6->length() == 6);
    CHECK(is_antihole(co_c6, a6->vertices));
    CHECK_FALSE(find_long_antihole(named::path(4)).has_value());
    auto c5 = find_long_antihole(named::cycle(5));
    REQUIRE(c5);
    CHECK(c5->length() == 5);
}

TEST_CASE("weakly chordal")
{
    CHECK(is_weakly_chordal(named::path(4)).verdict);

    auto c6 = is_weakly_chordal(named::cycle(6));
    CHECK_FALSE(c6.verdict);
    REQUIRE(c6.witness);
    CHECK(witness_name(*c6.witness) == "hole[6]");

    auto co_c7 = complement(named::cycle(7));
    auto anti = is_weakly_chordal(co_c7);
    CHECK_FALSE(anti.verdict);
    REQUIRE(anti.witness);
    CHECK(witness_name(*anti.witness) == "antihole[7]");
    CHECK(validate_witness(co_c7, *anti.witness));

    // C5 is reported through its hole first.
    CHECK(witness_name(*is_weakly_chordal(named::cycle(5)).witness) == "hole[5]");

    SUBCASE("agrees with the induced-subgraph oracle on every graph up to 6 vertices")
    {
        for (int n = 0; n <= 6; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next()) {
                auto cert = is_weakly_chordal(*g);
                check_certificate(*g, cert);
                REQUIRE(cert.verdict == oracle::weakly_chordal(*g));
            }
        }
    }

    SUBCASE("oracle agreement and class relations on 10^4 random graphs, 7 to 10 vertices")
    {
        RandomGraphStream stream(7, 10, 0.5, 20240601);
        int weakly_chordal = 0;
        for (int k = 0; k < 10000; ++k) {
            auto g = stream.next();
            auto cert = is_weakly_chordal(g);
            check_certificate(g, cert);
            REQUIRE(cert.verdict == oracle::weakly_chordal(g));
            REQUIRE(is_weakly_chordal(complement(g)).verdict == cert.verdict);
            if (cert.verdict) {
                ++weakly_chordal;
                REQUIRE(is_berge(g).verdict);
            }
            auto berge = is_berge(g);
            check_certificate(g, berge);
            if (berge.verdict)
                REQUIRE(is_odd_hole_free(g).verdict);
        }
        CHECK(weakly_chordal > 100);
    }
}

TEST_CASE("Berge and odd-hole-free")
{
    CHECK_FALSE(is_berge(named::cycle(5)).verdict);
    CHECK(is_berge(named::cycle(6)).verdict);
    CHECK(is_berge(named::complete(5)).verdict);
    CHECK_FALSE(is_berge(complement(named::cycle(7))).verdict);

    auto c7 = is_odd_hole_free(named::cycle(7));
    CHECK_FALSE(c7.verdict);
    CHECK(witness_name(*c7.witness) == "hole[7]");
    CHECK(is_odd_hole_free(Graph::from_edges(6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {0, 5}})).verdict);
    CHECK(is_odd_hole_free(named::cycle(4)).verdict);

    for (int n = 0; n <= 6; ++n) {
        LabeledGraphEnumerator all(n);
        while (auto g = all.next()) {
            REQUIRE(is_berge(*g).verdict == oracle::berge(*g));
            REQUIRE(is_odd_hole_free(*g).verdict == oracle::odd_hole_free(*g));
        }
    }
}

TEST_CASE("Meyniel")
{
    auto c5 = is_meyniel(named::cycle(5));
    CHECK_FALSE(c5.verdict);
    REQUIRE(c5.witness);
    CHECK(std::get<ChordedCycle>(*c5.witness).chords == 0);

    CHECK(is_meyniel(named::complete(4)).verdict);
    CHECK(is_meyniel(named::complete(7)).verdict);

    auto chorded = c5_plus_chord();
    auto one = is_meyniel(chorded);
    CHECK_FALSE(one.verdict);
    REQUIRE(one.witness);
    CHECK(std::get<ChordedCycle>(*one.witness).chords == 1);
    CHECK(validate_witness(chorded, *one.witness));

    SUBCASE("agrees with the Hamiltonian-subset oracle")
    {
        for (int n = 0; n <= 6; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next()) {
                auto cert = is_meyniel(*g);
                check_certificate(*g, cert);
                REQUIRE(cert.verdict == oracle::meyniel(*g));
            }
        }
        RandomGraphStream stream(7, 8, 0.6, 5);
        for (int k = 0; k < 1500; ++k) {
            auto g = stream.next();
            auto cert = is_meyniel(g);
            check_certificate(g, cert);
            REQUIRE(cert.verdict == oracle::meyniel(g));
            if (cert.verdict)
                REQUIRE(is_odd_hole_free(g).verdict);
        }
    }
}

TEST_CASE("terminal shapes")
{
    CHECK(is_complete(named::complete(1)));
    CHECK(is_complete(named::complete(4)));
    CHECK(is_complete(named::edgeless(0)));
    CHECK_FALSE(is_complete(named::path(3)));

    CHECK(is_complement_of_perfect_matching(named::cycle(4)));
    CHECK(is_complement_of_perfect_matching(named::edgeless(2)));
    CHECK(is_complement_of_perfect_matching(complement(named::matching(3))));
    CHECK_FALSE(is_complement_of_perfect_matching(named::complete(4)));
    CHECK_FALSE(is_complement_of_perfect_matching(named::edgeless(0)));
    CHECK_FALSE(is_complement_of_perfect_matching(named::edgeless(3)));
}

TEST_CASE("induced P3 search order")
{
    auto p3 = find_induced_p3(named::path(4));
    REQUIRE(p3);
    CHECK(p3->a == 0);
    CHECK(p3->center == 1);
    CHECK(p3->c == 2);
    CHECK_FALSE(find_induced_p3(named::disjoint_union(named::complete(3), named::complete(2))).has_value());
}
