#pragma once

#include <optional>

#include "qcenter/rootsys.hpp"

namespace qcenter {

// Weakly decreasing integer sequence; negative parts encode duals.
struct Partition {
    std::vector<int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<int64_t> p);
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const;
};

// (-a_n, ..., -a_1): the partition of the dual Schur bundle.
Partition partition_dual(const Partition& a);

// Line-bundle cohomology on the full flag variety: empty when lambda+rho is
// singular, else (degree, dominant weight) with degree the sorting length.
std::optional<std::pair<int, WeightVector>> bott_line_bundle(const RootSystemData& rs,
                                                             const WeightVector& lambda);

// Cohomology of the Schur bundle S_alpha(Q) (x) S_beta(S) on Gr(k,N):
// at most one nonzero group.  alpha has N-k parts (quotient side), beta has k
// parts (tautological side).  Returns (degree, highest weight as an N-part
// partition) or empty when every group vanishes.
std::optional<std::pair<int, Partition>> bwb_grassmannian(int n_total, int k,
                                                          const Partition& alpha,
                                                          const Partition& beta);

}  // namespace qcenter
