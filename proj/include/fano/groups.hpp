#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

struct GroupSummary {
    std::int64_t order = 1;
    int reflection_count = 0;   // elements g with g^2 = Id and rank(g - Id) = 1
    int generator_count = 0;    // distinct generators supplied
    bool character_trivial = true;  // F∘g = F for every element
};

/// One row of the configuration classification: the group, the number of
/// curves, the group order, and whether the group acts irreducibly.  The ten
/// orders are pairwise distinct, so the order determines the row.
struct ClassRow {
    std::string label;
    int n_s;
    std::int64_t order;
    bool irreducible;
};

const std::array<ClassRow, 10>& classification_table();

struct GroupClosure {
    std::vector<Mat5> elements;  // contains the identity; insertion order
    int generator_count = 0;
};

/// Breadth-first product closure of the generated matrix group, with
/// structural hashing for exact dedup.  Throws CapExceeded when the element
/// count passes `cap` (the group is then too large, or not finite).
GroupClosure closure(const std::vector<Mat5>& generators, std::size_t cap = 20000);

/// Number of order-2 reflections in the element set.
int reflection_census(const std::vector<Mat5>& elements);

/// Smallest k >= 1 with (r1 r2)^k = Id, for two order-2 reflections of the
/// same cubic; always 1, 2 or 3.  Throws InvariantViolation past 3.
int pair_order(const Mat5& r1, const Mat5& r2);

/// Table lookup by group order, cross-checked against the curve count;
/// nullopt means "unclassified".
std::optional<ClassRow> classify(int n_s, std::int64_t order);

/// True iff F∘g = F for every element of the set.
bool character_check(const Cubic& f, const std::vector<Mat5>& elements);

GroupSummary make_summary(const GroupClosure& c, bool character_trivial);

}  // namespace fano
