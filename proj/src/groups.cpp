#include "fano/groups.hpp"

#include <unordered_map>

namespace fano {

const std::array<ClassRow, 10>& classification_table() {
    static const std::array<ClassRow, 10> table = {{
        {"trivial", 0, 1, true},
        {"[]2", 1, 2, true},
        {"G(3,3,2)", 3, 6, true},
        {"S4", 6, 24, true},
        {"S5", 10, 120, true},
        {"G(3,3,5)", 30, 9720, true},
        {"[]2x[]2", 2, 4, false},
        {"G(3,3,2)x[]2", 4, 12, false},
        {"G(3,3,2)xG(3,3,2)", 6, 36, false},
        {"G(3,3,3)xG(3,3,2)", 12, 324, false},
    }};
    return table;
}

namespace {

class MatrixSet {
public:
    // Returns the index; inserts when the matrix is new.
    std::pair<std::size_t, bool> find_or_insert(const Mat5& m, std::vector<Mat5>& store) {
        std::size_t h = hash_matrix(m);
        auto range = buckets_.equal_range(h);
        for (auto it = range.first; it != range.second; ++it)
            if (matrix_equal(store[it->second], m)) return {it->second, false};
        store.push_back(m);
        std::size_t idx = store.size() - 1;
        buckets_.emplace(h, idx);
        return {idx, true};
    }

private:
    std::unordered_multimap<std::size_t, std::size_t> buckets_;
};

}  // namespace

GroupClosure closure(const std::vector<Mat5>& generators, std::size_t cap) {
    GroupClosure out;
    MatrixSet seen;

    std::vector<Mat5> gens;
    for (const Mat5& g : generators) {
        bool dup = false;
        for (const Mat5& h : gens) dup = dup || matrix_equal(g, h);
        if (!dup) gens.push_back(g);
    }
    out.generator_count = static_cast<int>(gens.size());
    for (const Mat5& g : gens)
        if (det(MatX(g)).is_zero())
            throw DomainError("group generator is not invertible");

    seen.find_or_insert(Mat5::Identity(), out.elements);
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (const Mat5& g : gens) {
            Mat5 prod = mul(out.elements[head], g);
            auto [idx, inserted] = seen.find_or_insert(prod, out.elements);
            if (inserted && out.elements.size() > cap)
                throw CapExceeded("group closure exceeded " + std::to_string(cap) +
                                  " elements; not finite as expected or cap too small");
        }
    }
    return out;
}

namespace {

bool is_order2_reflection(const Mat5& g) {
    if (is_identity(g)) return false;
    if (!is_identity(mul(g, g))) return false;
    MatX gmi(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            gmi(i, j) = g(i, j) - FieldElement(i == j ? 1 : 0);
    return rank(gmi) == 1;
}

}  // namespace

int reflection_census(const std::vector<Mat5>& elements) {
    int count = 0;
    for (const Mat5& g : elements)
        if (is_order2_reflection(g)) ++count;
    return count;
}

int pair_order(const Mat5& r1, const Mat5& r2) {
    Mat5 prod = mul(r1, r2);
    Mat5 acc = prod;
    for (int k = 1; k <= 3; ++k) {
        if (is_identity(acc)) return k;
        acc = mul(acc, prod);
    }
    throw InvariantViolation("product of two vertex reflections has order > 3");
}

std::optional<ClassRow> classify(int n_s, std::int64_t order) {
    for (const ClassRow& row : classification_table())
        if (row.order == order && row.n_s == n_s) return row;
    return std::nullopt;
}

bool character_check(const Cubic& f, const std::vector<Mat5>& elements) {
    for (const Mat5& g : elements)
        if (!(linear_substitute(f.form(), g) == f.form())) return false;
    return true;
}

GroupSummary make_summary(const GroupClosure& c, bool character_trivial) {
    GroupSummary s;
    s.order = static_cast<std::int64_t>(c.elements.size());
    s.reflection_count = reflection_census(c.elements);
    s.generator_count = c.generator_count;
    s.character_trivial = character_trivial;
    return s;
}

}  // namespace fano
