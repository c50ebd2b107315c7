#pragma once

#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "qcenter/pmodules.hpp"

namespace qcenter {

// Element of the lower-triangular enveloping algebra in the PBW basis
// f_{b1}^{a1} ... f_{bN}^{aN} (fixed positive-root order).  Keys are exponent
// vectors; the leading monomial is the lexicographically largest key.
struct UMinusElement {
    std::map<std::vector<int>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    void cleanup();                             // drop zero coefficients
    void normalize_leading();                   // scale so the leading coefficient is 1
    UMinusElement scaled(const Rat& c) const;
    std::string str(const ChevalleyBasis& cb) const;
};

// Left multiplication by f of the k-th positive root, PBW-normalized.
UMinusElement pbw_lmul_f(const ChevalleyBasis& cb, int root_k, const UMinusElement& x);
UMinusElement pbw_multiply(const ChevalleyBasis& cb, const UMinusElement& a, const UMinusElement& b);
// PBW form of a word in the simple lowering generators (letters applied right to left).
UMinusElement pbw_of_simple_word(const ChevalleyBasis& cb, const std::vector<int>& simple_letters);
// true when a = c*b for a nonzero rational c (returned through c)
bool pbw_proportional(const UMinusElement& a, const UMinusElement& b, Rat& c);

// The operator theta in U(n^-) of weight (w'.nu - w.nu) whose image of the
// highest-weight vector of the Verma module with highest weight w.nu is again
// a highest-weight vector.  Unique up to scale; normalized to leading
// coefficient 1.  w -> w' must be a Bruhat cover.
UMinusElement singular_vector(const ChevalleyBasis& cb, const WeylElement& w,
                              const WeylElement& w_prime, const WeightVector& nu);

// Bruhat covers (w, w') with l(w') = l(w) + 1 and w' w^{-1} a reflection.
std::vector<std::pair<int, int>> bruhat_covers(const RootSystemData& rs);

struct BggEdge {
    int from = 0;  // Weyl index, length j
    int to = 0;    // Weyl index, length j+1
    UMinusElement theta;
    Rat scalar;    // square-anticommutativity normalization
};

// nu-dependent combinatorial part of a BGG complex, reusable across modules
struct BggSkeleton {
    WeightVector nu;
    std::vector<BggEdge> edges;
    std::map<std::pair<int, int>, int> edge_of;  // (from,to) -> index into edges
};

BggSkeleton bgg_skeleton(const ChevalleyBasis& cb, const WeightVector& nu);

struct BggCache {
    std::map<WeightVector, BggSkeleton> skeletons;
    std::mutex mtx;

    const BggSkeleton& get(const ChevalleyBasis& cb, const WeightVector& nu);
};

struct BGGComplexInstance {
    WeightVector nu;
    std::vector<std::vector<int>> term_w;               // per length: Weyl indices
    std::vector<std::vector<std::vector<int>>> term_basis;  // per length, per w: module indices
    std::vector<int> term_dims;                         // per length
    std::vector<MatQ> differentials;                    // d[j]: length j-1 -> length j, j >= 1

    int max_length() const { return static_cast<int>(term_w.size()) - 1; }
};

// Assemble the complex of weight spaces E[w.nu] with differentials built from
// the singular vectors; d^2 = 0 is asserted exactly.
BGGComplexInstance assemble_bgg_complex(const WeightedBModule& e, const WeightVector& nu,
                                        BggCache* cache = nullptr);

// Dominant weights nu whose shifted orbit meets the weights of E.
std::set<WeightVector> candidate_dominants(const WeightedBModule& e);

// Apply a PBW element to a module vector through the f-action matrices
// (rightmost letter first).
SparseVec apply_uminus(const WeightedBModule& e, const UMinusElement& u, const SparseVec& v);

}  // namespace qcenter
