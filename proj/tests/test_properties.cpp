#include <doctest.h>

#include "property_checks.hpp"

using namespace qcenter;

namespace {

struct GridCase {
    char type;
    int rank;
    std::vector<int> levi;
};

const std::vector<GridCase> kGrid{
    {'A', 1, {}},      {'A', 2, {}},   {'A', 2, {0}},     {'B', 2, {}},
    {'A', 3, {0, 2}},  {'A', 3, {0, 1}}, {'A', 3, {1}},
};

}  // namespace

TEST_CASE("diamond invariants across the parabolic grid") {
    for (const auto& cse : kGrid) {
        CAPTURE(cse.type);
        CAPTURE(cse.rank);
        auto cb = build_chevalley_basis(build_root_system(cse.type, cse.rank));
        auto split = parabolic_split(cb, cse.levi);
        auto hd = hodge_diamond(cb, split);
        auto fails = checks::diamond_properties(hd, cb.rs);
        for (const auto& f : fails) FAIL_CHECK(f);
        CHECK(fails.empty());

        auto nontrivial = checks::nontrivial_isotypes(hd);
        if (cse.type == 'A') {
            // rank <= 3: every entry decomposes into trivial classes only
            CHECK(nontrivial.empty());
        }
    }
}

TEST_CASE("the rank-two counterexample to isotype triviality") {
    auto cb = build_chevalley_basis(build_root_system('B', 2));
    auto hd = hodge_diamond(cb, parabolic_split(cb, {}));
    auto nontrivial = checks::nontrivial_isotypes(hd);
    REQUIRE(nontrivial.size() == 1);
    CHECK(nontrivial[0].first == std::pair<int, int>{2, 4});
    std::map<WeightVector, int64_t> expect;
    expect[WeightVector(std::vector<int64_t>{0, 0})] = 3;
    expect[WeightVector(std::vector<int64_t>{1, 0})] = 1;
    CHECK(nontrivial[0].second == expect);
}

TEST_CASE("Serre relations hold in every supported type") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}}) {
        auto cb = build_chevalley_basis(build_root_system(t, r));
        auto fails = checks::serre_relations(cb);
        for (const auto& f : fails) FAIL_CHECK(f);
        CHECK(fails.empty());
    }
}

TEST_CASE("complex assembly across pieces") {
    for (const auto& cse : std::vector<GridCase>{{'B', 2, {}}, {'A', 3, {0, 2}}, {'A', 2, {}}}) {
        auto cb = build_chevalley_basis(build_root_system(cse.type, cse.rank));
        auto split = parabolic_split(cb, cse.levi);
        auto fails = checks::complexes_on_grid(cb, split);
        for (const auto& f : fails) FAIL_CHECK(f);
        CHECK(fails.empty());
    }
}

TEST_CASE("projective space suite") {
    auto fails = checks::projective_space_checks(3);
    for (const auto& f : fails) FAIL_CHECK(f);
    CHECK(fails.empty());
}
