#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace fano;
using namespace fano::test;

namespace {

std::vector<Mat5> reflections_of(const Cubic& f) {
    std::vector<Mat5> out;
    for (const VertexRecord& v : saturate(f, default_candidates()))
        out.push_back(v.reflection);
    return out;
}

}  // namespace

TEST_CASE("classification table shape") {
    const auto& table = classification_table();
    CHECK(table.size() == 10);
    std::vector<std::int64_t> orders;
    for (const auto& row : table) orders.push_back(row.order);
    std::sort(orders.begin(), orders.end());
    CHECK(std::adjacent_find(orders.begin(), orders.end()) == orders.end());  // distinct

    // G(m,p,n) sanity: |G(3,3,5)| = (3/3) 3^4 5! and |G(3,3,3)x G(3,3,2)| =
    // ((3/3) 3^2 3!) ((3/3) 3 2!).
    CHECK(81 * 120 == 9720);
    CHECK((9 * 6) * (3 * 2) == 324);
}

TEST_CASE("closure of small generator sets") {
    Mat5 r = Mat5::Identity();
    r(0, 0) = fe(-1);
    GroupClosure single = closure({r});
    CHECK(single.elements.size() == 2);
    CHECK(single.generator_count == 1);
    CHECK(reflection_census(single.elements) == 1);

    GroupClosure dup = closure({r, r});
    CHECK(dup.elements.size() == 2);
    CHECK(dup.generator_count == 1);

    GroupClosure trivial = closure({});
    CHECK(trivial.elements.size() == 1);
    CHECK(reflection_census(trivial.elements) == 0);
}

TEST_CASE("closure of two braiding reflections is S3") {
    // Swaps (1 2) and (2 3) braid.
    Mat5 s12 = Mat5::Identity(), s23 = Mat5::Identity();
    s12(0, 0) = s12(1, 1) = fe(0);
    s12(0, 1) = s12(1, 0) = fe(1);
    s23(1, 1) = s23(2, 2) = fe(0);
    s23(1, 2) = s23(2, 1) = fe(1);
    GroupClosure g = closure({s12, s23});
    CHECK(g.elements.size() == 6);
    CHECK(reflection_census(g.elements) == 3);
    CHECK(pair_order(s12, s23) == 3);
    CHECK(pair_order(s12, s12) == 1);
}

TEST_CASE("closure caps runaway groups") {
    Mat5 s12 = Mat5::Identity(), s23 = Mat5::Identity();
    s12(0, 0) = s12(1, 1) = fe(0);
    s12(0, 1) = s12(1, 0) = fe(1);
    s23(1, 1) = s23(2, 2) = fe(0);
    s23(1, 2) = s23(2, 1) = fe(1);
    CHECK_THROWS_AS(closure({s12, s23}, 3), CapExceeded);

    // An infinite (unipotent) group must hit any cap instead of looping.
    Mat5 shear = Mat5::Identity();
    shear(0, 1) = fe(1);
    CHECK_THROWS_AS(closure({shear}, 100), CapExceeded);
}

TEST_CASE("catalog group orders and censuses") {
    GroupClosure g332 = closure(reflections_of(instantiate_pinned("g332")));
    CHECK(g332.elements.size() == 6);
    CHECK(reflection_census(g332.elements) == 3);  // m n(n-1)/2 with m=3, n=2

    GroupClosure fl = closure(reflections_of(instantiate_pinned("g333-g332")));
    CHECK(fl.elements.size() == 324);
    CHECK(reflection_census(fl.elements) == 12);

    GroupClosure s5 = closure(reflections_of(instantiate_pinned("s5")));
    CHECK(s5.elements.size() == 120);
    CHECK(reflection_census(s5.elements) == 10);  // m n(n-1)/2 with m=1, n=5
}

TEST_CASE("pair order equals 3 minus the intersection number") {
    Cubic f = fermat();
    std::vector<VertexRecord> vertices = saturate(f, default_candidates());
    std::vector<CurveRecord> curves = label_curves(f, vertices);
    auto find = [&](const std::string& label) -> const VertexRecord& {
        for (const auto& c : curves)
            if (c.label == label) return c.vertex;
        throw DomainError(label);
    };
    const VertexRecord& e12 = find("E[1,2]^1");
    const VertexRecord& e34 = find("E[3,4]^1");
    const VertexRecord& e13 = find("E[1,3]^1");
    CHECK(pair_order(e12.reflection, e34.reflection) == 2);  // disjoint indices meet
    CHECK(pair_order(e12.reflection, e13.reflection) == 3);  // shared index: disjoint curves
    CHECK(line_in_cubic(f, e12.point, e34.point));
    CHECK_FALSE(line_in_cubic(f, e12.point, e13.point));
}

TEST_CASE("pair order rejects non-vertex input") {
    // A rotation of order 4 is not a product of two curve reflections.
    Mat5 rot = Mat5::Identity();
    rot(0, 0) = rot(1, 1) = fe(0);
    rot(0, 1) = fe(-1);
    rot(1, 0) = fe(1);
    CHECK_THROWS_AS(pair_order(rot, Mat5::Identity()), InvariantViolation);
}

TEST_CASE("classification lookup") {
    auto row = classify(30, 9720);
    REQUIRE(row.has_value());
    CHECK(row->label == "G(3,3,5)");
    CHECK(classify(6, 36)->label == "G(3,3,2)xG(3,3,2)");
    CHECK(classify(6, 24)->label == "S4");  // order separates equal curve counts
    CHECK(classify(0, 1)->label == "trivial");
    CHECK_FALSE(classify(7, 100).has_value());
    CHECK_FALSE(classify(5, 24).has_value());  // right order, wrong count
}

TEST_CASE("character check") {
    Cubic f = fermat();
    Mat5 neg1 = Mat5::Identity();
    neg1(0, 0) = fe(-1);
    CHECK_FALSE(character_check(f, {neg1}));  // (-x1)^3 flips the first cube
    CHECK(character_check(f, {Mat5::Identity()}));

    GroupClosure g = closure(reflections_of(instantiate_pinned("g332-g332")));
    CHECK(character_check(instantiate_pinned("g332-g332"), g.elements));
}

TEST_CASE("closure is generator-order independent") {
    std::vector<Mat5> gens = reflections_of(instantiate_pinned("g332-single"));
    GroupClosure forward = closure(gens);
    std::reverse(gens.begin(), gens.end());
    GroupClosure backward = closure(gens);
    REQUIRE(forward.elements.size() == backward.elements.size());
    // Set equality via canonical hashing.
    auto key_set = [](const std::vector<Mat5>& elems) {
        std::vector<std::size_t> keys;
        for (const Mat5& m : elems) keys.push_back(hash_matrix(m));
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    CHECK(key_set(forward.elements) == key_set(backward.elements));
}

TEST_CASE("no three pairwise-commuting curve reflections") {
    for (const char* slug : {"fermat", "s5", "g332-g332", "g333-g332"}) {
        Cubic f = slug == std::string("fermat") ? fermat() : instantiate_pinned(slug);
        std::vector<Mat5> refl = reflections_of(f);
        for (std::size_t a = 0; a < refl.size(); ++a)
            for (std::size_t b = a + 1; b < refl.size(); ++b) {
                if (pair_order(refl[a], refl[b]) != 2) continue;
                for (std::size_t c = b + 1; c < refl.size(); ++c) {
                    bool all_commute = pair_order(refl[a], refl[c]) == 2 &&
                                       pair_order(refl[b], refl[c]) == 2;
                    CHECK_FALSE(all_commute);
                }
            }
    }
}
