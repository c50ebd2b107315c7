#pragma once

#include <vector>

#include "qcenter/matrix.hpp"
#include "qcenter/rootsys.hpp"

namespace qcenter {

// Integral basis of the simple Lie algebra attached to a root system:
// e_beta, f_beta for positive roots beta, and h_i for simple i, with an
// integer bracket table.  Constants are normalized so |[e_a,e_b]| carries the
// root-string length p+1, and basis vectors are gauged so that the nested
// bracket [f_{gamma - alpha_i}, f_i] (i the largest simple descent of gamma)
// has positive coefficient.  That pins f_{a1+a2} = [f_1, f_2] and so on.
struct ChevalleyBasis {
    RootSystemData rs;

    // basis layout: [0, P) e's, [P, 2P) f's, [2P, 2P+rank) h's
    int num_pos = 0;
    int dim = 0;

    std::vector<WeightVector> weight;               // per basis index
    std::vector<std::vector<SparseVec>> bracket;    // bracket[a][b] = [x_a, x_b]
    std::vector<std::vector<int64_t>> pos_pair_n;   // N(beta_a, beta_b), 0 when sum not a root

    int e_index(int b) const { return b; }
    int f_index(int b) const { return num_pos + b; }
    int h_index(int i) const { return 2 * num_pos + i; }
    bool is_e(int idx) const { return idx < num_pos; }
    bool is_f(int idx) const { return idx >= num_pos && idx < 2 * num_pos; }
    bool is_h(int idx) const { return idx >= 2 * num_pos; }
    int root_of(int idx) const { return is_e(idx) ? idx : idx - num_pos; }

    std::string label(int idx) const;
};

ChevalleyBasis build_chevalley_basis(const RootSystemData& rs);

// Split along a Levi subset of simple roots: p = levi + nP, with uP the
// opposite nilradical.  nP is spanned by f's of non-Levi positive roots and
// uP by the matching e's.
struct ParabolicSplit {
    std::vector<int> levi_subset;    // 0-based simple indices, sorted
    std::vector<int> levi_roots;     // positive-root indices supported on the Levi
    std::vector<int> nonlevi_roots;  // the rest; dim(G/P) many
    std::vector<int> p_basis;        // Chevalley indices spanning p
    std::vector<int> nP_basis;
    std::vector<int> uP_basis;
    std::vector<int> levi_basis;

    int dim_x() const { return static_cast<int>(nonlevi_roots.size()); }
};

ParabolicSplit parabolic_split(const ChevalleyBasis& basis, const std::vector<int>& levi_subset);

}  // namespace qcenter
