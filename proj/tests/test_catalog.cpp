#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "helpers.hpp"

using namespace fano;
using namespace fano::test;

#ifndef FANO_DATA_DIR
#define FANO_DATA_DIR "data"
#endif

TEST_CASE("instantiate: documented examples") {
    Cubic fl2 = instantiate("G(3,3,3)xG(3,3,2)", {{"lambda", fe(2)}});
    Poly expected = pterm(3, 0, 0, 0, 0, fe(1)) + pterm(0, 3, 0, 0, 0, fe(1)) +
                    pterm(0, 0, 3, 0, 0, fe(1)) + pterm(1, 1, 1, 0, 0, fe(-6)) +
                    pterm(0, 0, 0, 3, 0, fe(1)) + pterm(0, 0, 0, 0, 3, fe(1));
    CHECK(fl2.form() == expected);

    CHECK(instantiate("G(3,3,5)").form() == fermat().form());
    CHECK(instantiate("fermat").form() == fermat().form());

    CHECK_THROWS_AS(instantiate("G(3,3,3)xG(3,3,2)", {{"lambda", fe(1)}}), DomainError);
    CHECK_THROWS_AS(instantiate("g333-g332", {{"lambda", W()}}), DomainError);  // w^3 = 1
    CHECK_THROWS_AS(instantiate("fermat", {{"lambda", fe(1)}}), DomainError);  // no params
    CHECK_THROWS_AS(instantiate("nonsense"), DomainError);
}

TEST_CASE("g332-g332 family admissibility") {
    CHECK_NOTHROW(instantiate("g332-g332", {{"a", fe(2)}, {"b", fe(1)}}));
    CHECK_THROWS_AS(instantiate("g332-g332", {{"a", fe(-1)}}), DomainError);  // a^3 = -1
    CHECK_THROWS_AS(instantiate("g332-g332", {{"b", -W()}}), DomainError);    // b^3 = -1
    CHECK_THROWS_AS(instantiate("g332-g332", {{"a", fe(1)}, {"b", fe(-1)}}), DomainError);
}

TEST_CASE("every pinned sample passes its smoothness falsifier") {
    for (const FamilySpec& spec : catalog()) {
        Cubic f = instantiate_pinned(spec.slug);
        auto witness = singular_scan(f, spec.validation_prime, 1);
        CHECK_MESSAGE(!witness.has_value(), spec.slug);
    }
}

TEST_CASE("pinned samples with bad reduction at 7 are caught by the falsifier") {
    // These cubics are smooth over Q(w) but singular mod 7; the catalog pins
    // a different validation prime for them.
    CHECK(singular_scan(instantiate_pinned("g333-g332"), 7, 1).has_value());
    CHECK(singular_scan(instantiate_pinned("s4"), 7, 1).has_value());
    CHECK(singular_scan(instantiate_pinned("s4"), 13, 1).has_value());
}

TEST_CASE("expected intersection rule on labels") {
    CHECK(expected_intersection("E[1,2]^1", "E[3,4]^w") == 1);
    CHECK(expected_intersection("E[1,2]^1", "E[1,2]^w") == 0);
    CHECK(expected_intersection("E[1,2]^1", "E[2,3]^1") == 0);
    CHECK(expected_intersection("E[3]", "E[1,2]^w2") == 1);
    CHECK(expected_intersection("E[3]", "E[2,3]^1") == 0);
    CHECK_THROWS_AS(expected_intersection("E#1", "E[1,2]^1"), DomainError);
}

TEST_CASE("catalog data files match the builders") {
    for (const FamilySpec& spec : catalog()) {
        std::string path = std::string(FANO_DATA_DIR) + "/catalog/" + spec.slug + ".cubic";
        Cubic from_file = parse_cubic_file(path);
        CHECK_MESSAGE(from_file.form() == instantiate_pinned(spec.slug).form(), spec.slug);
    }
}

TEST_CASE("pinned digests identify exactly the catalog samples") {
    CHECK(pinned_digests().size() == catalog().size());
    CHECK(is_pinned_digest(cubic_digest(instantiate_pinned("fermat"))));
    CHECK(is_pinned_digest(cubic_digest(instantiate_pinned("pair"))));
    CHECK_FALSE(is_pinned_digest(
        cubic_digest(instantiate("g333-g332", {{"lambda", fe(5)}}))));
}

TEST_CASE("expected vertex lists match the table counts") {
    for (const FamilySpec& spec : catalog()) {
        CHECK(static_cast<int>(spec.expected_vertices.size()) == spec.expected_n);
        auto row = classify(spec.expected_n, spec.expected_order);
        REQUIRE_MESSAGE(row.has_value(), spec.slug);
        CHECK(row->label == spec.id);
    }
}
