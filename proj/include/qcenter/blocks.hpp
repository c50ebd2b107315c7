#pragma once

#include <functional>

#include "qcenter/rootsys.hpp"

namespace qcenter {

// Orbits of the extended affine symmetry group on the l-restricted dominant
// weights, classified by which Levi subsets realize the orbit's singular
// stabilizer on finite walls.
struct BlockClass {
    std::vector<std::vector<int>> levis;  // 0-based Levi subsets appearing in the class
    int64_t count = 0;                    // number of orbits (= blocks) of this class
    Int block_dim = -1;                   // center dimension per block; -1 when unknown
    std::string kind;                     // regular | steinberg | parabolic | unclassified
};

struct BlockCensus {
    char type_letter = 'A';
    int rank = 0;
    int64_t l = 0;
    std::string warning;  // nonempty when l is valid but outside the clean regime
    std::vector<BlockClass> classes;
    int64_t num_weights = 0;  // l^rank
    int64_t num_orbits = 0;
    Int total = -1;          // sum of count * block_dim once dims are known
    Int catalan_total = -1;  // closed-form candidate for the whole center (type A)
};

// c_{a,b} = (1/(a+b)) binom(a+b, b); throws when the quotient is not integral.
Int rational_catalan(int64_t a, int64_t b);

// Enumerate the l-restricted weights, fold each shifted weight into the
// closed fundamental alcove of W x lQ, merge orbits under the extended group
// (translations by l times weight-lattice coset representatives), and count
// orbits per stabilizer class.  l must be odd and above the Coxeter number.
BlockCensus restricted_weight_census(const RootSystemData& rs, int64_t l);

// Census plus per-block center dimensions (type A, rank <= 3).  The provider
// maps a Levi subset to the total dimension of its diamond.
BlockCensus total_center_dimension(const RootSystemData& rs, int64_t l,
                                   const std::function<Int(const std::vector<int>&)>& block_dim);

// Fold x into {0 <= <x, coroot(beta)> <= l} using the affine reflections.
WeightVector fold_into_alcove(const RootSystemData& rs, const WeightVector& x, int64_t l);

// Representatives of the weight lattice modulo the root lattice.
std::vector<WeightVector> weight_mod_root_reps(const RootSystemData& rs);

int64_t coxeter_number(const RootSystemData& rs);

}  // namespace qcenter
