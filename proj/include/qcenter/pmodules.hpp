#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcenter/chevalley.hpp"

namespace qcenter {

// Finite-dimensional weight-graded module with exact rational action matrices
// for the lowering operators f_beta (every positive root) and the simple
// raising operators e_i.  h_i act diagonally through the stored weights.
//
// All modules here arise from subquotients of the adjoint representation.  On
// honest subrepresentations the matrices are the restricted brackets; where a
// complement projection is involved (nP, uP, and the non-Levi raisings on
// quotient pieces) the matrices use the canonical weight-split complement.
struct WeightedBModule {
    const ChevalleyBasis* cb = nullptr;
    std::vector<std::string> labels;
    std::vector<WeightVector> weights;
    std::vector<SparseMat> f_root_act;   // per positive root
    std::vector<SparseMat> e_simple_act; // per simple index
    std::map<WeightVector, std::vector<int>> weight_index;

    int dim() const { return static_cast<int>(labels.size()); }
    void finalize();  // index weights, check weight homogeneity of the actions

    // diagonal h_i eigenvalue on basis vector v
    int64_t h_eigenvalue(int i, int v) const { return weights[v].coords[i]; }
};

// basis indices of the mu weight space
std::vector<int> weight_space(const WeightedBModule& e, const WeightVector& mu);

// Raising action for an arbitrary positive root, derived from the simple
// raisings through the bracket table: e_gamma = [e_i, e_delta]/c.
SparseMat e_root_action(const WeightedBModule& e, int root);

WeightedBModule adjoint_b_module(const ChevalleyBasis& cb, const ParabolicSplit& split,
                                 const std::string& which);  // "g", "p", "nP", "uP"

// one-dimensional module of the given weight (all lowerings act by zero)
WeightedBModule character_module(const ChevalleyBasis& cb, const WeightVector& lambda);

WeightedBModule tensor_module(const WeightedBModule& a, const WeightedBModule& b);
WeightedBModule wedge_module(const WeightedBModule& a, int k);
WeightedBModule sym_module(const WeightedBModule& a, int k);

enum class FunctorKind { Tensor, Wedge, Sym };
WeightedBModule apply_functor(FunctorKind kind, const std::vector<const WeightedBModule*>& inputs,
                              int k);

struct GradedPieceSpec {
    std::vector<int> levi_subset;
    int j = 0;  // exterior degree
    int r = 0;  // internal C*-degree, even and <= 0 on nonzero pieces
};

// Degree-r piece of the j-th exterior power of the pushed-forward tangent
// bundle of T*(G/P), presented on its free basis
//   S^{b-m}(uP) (x) Wedge^a(uP) (x) Wedge^b(nP),  a+b = j, r = -2m.
// Inconsistent parameters give the zero module.
WeightedBModule graded_piece(const ChevalleyBasis& cb, const ParabolicSplit& split, int j, int r);

// Closed-form dimension of the piece above.
Int graded_piece_dimension(int dim_x, int j, int r);

}  // namespace qcenter
