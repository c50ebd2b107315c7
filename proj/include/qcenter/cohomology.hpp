#pragma once

#include <functional>

#include "qcenter/bgg.hpp"

namespace qcenter {

// Multiplicity of each simple isotype in the sheaf cohomology of the
// equivariant bundle attached to a b-module, degree by degree.
struct SheafCohomology {
    std::map<WeightVector, std::vector<int64_t>> multiplicities;  // nu -> per-degree
    std::vector<Int> total_dims;                                  // per-degree dimensions
};

// H^j of an assembled complex: dim(term_j) - rank d_j - rank d_{j+1}.
std::vector<int64_t> complex_cohomology(const BGGComplexInstance& cx);

SheafCohomology sheaf_cohomology(const WeightedBModule& e, BggCache* cache = nullptr);

// The table h^{i,j} = multiplicity data of H^i of the degree -(i+j) piece of
// the j-th polyvector bundle on T*(G/P); entries live on the triangle
// 0 <= i <= j, i+j even, i+j <= 2 dim(G/P).
struct HodgeDiamond {
    char type_letter = 'A';
    int rank = 0;
    std::vector<int> levi;  // 0-based simple indices
    int dim_x = 0;
    std::map<std::pair<int, int>, std::map<WeightVector, int64_t>> entries;
    std::map<std::pair<int, int>, Int> entry_dims;
    Int total = 0;

    bool complete() const;
    void recompute_totals();
    static std::vector<std::pair<int, int>> entry_list(int dim_x);
};

// Computes every entry; entries already present in *seed are reused.  After
// each finished entry `checkpoint` (if given) sees the partial table; entries
// are computed in increasing i+j, optionally on `jobs` worker threads.
HodgeDiamond hodge_diamond(const ChevalleyBasis& cb, const ParabolicSplit& split,
                           const HodgeDiamond* seed = nullptr, int jobs = 1,
                           const std::function<void(const HodgeDiamond&)>& checkpoint = {});

}  // namespace qcenter
