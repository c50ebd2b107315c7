#include "qcenter/bwb.hpp"

#include <algorithm>
#include <set>

namespace qcenter {

Partition::Partition(std::vector<int64_t> p) : parts(std::move(p)) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) throw invalid_argument("partition parts must be non-increasing");
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition partition_dual(const Partition& a) {
    std::vector<int64_t> p(a.parts.rbegin(), a.parts.rend());
    for (auto& v : p) v = -v;
    return Partition(std::move(p));
}

std::optional<std::pair<int, WeightVector>> bott_line_bundle(const RootSystemData& rs,
                                                             const WeightVector& lambda) {
    auto rep = dominant_dot_representative(rs, lambda);
    if (!rep) return std::nullopt;
    return std::make_pair(rep->first.length, rep->second);
}

std::optional<std::pair<int, Partition>> bwb_grassmannian(int n_total, int k,
                                                          const Partition& alpha,
                                                          const Partition& beta) {
    if (static_cast<int>(alpha.parts.size()) != n_total - k)
        throw invalid_argument("alpha must have N-k parts");
    if (static_cast<int>(beta.parts.size()) != k) throw invalid_argument("beta must have k parts");

    // shifted juxtaposition: (alpha, beta) + (N, N-1, ..., 1)
    std::vector<int64_t> seq;
    for (size_t i = 0; i < alpha.parts.size(); ++i)
        seq.push_back(alpha.parts[i] + (n_total - static_cast<int64_t>(i)));
    for (size_t i = 0; i < beta.parts.size(); ++i)
        seq.push_back(beta.parts[i] + (k - static_cast<int64_t>(i)));

    std::set<int64_t> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) return std::nullopt;  // all cohomology vanishes

    int inversions = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] < seq[j]) ++inversions;

    std::sort(seq.rbegin(), seq.rend());
    std::vector<int64_t> nu(seq.size());
    for (size_t i = 0; i < seq.size(); ++i) nu[i] = seq[i] - (n_total - static_cast<int64_t>(i));
    return std::make_pair(inversions, Partition(std::move(nu)));
}

}  // namespace qcenter
