#include "qcenter/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qcenter {

std::vector<int64_t> complex_cohomology(const BGGComplexInstance& cx) {
    const int top = cx.max_length();
    std::vector<int> ranks(top + 2, 0);
    for (int j = 1; j <= top; ++j) ranks[j] = exact_rank(cx.differentials[j]);
    std::vector<int64_t> h(top + 1, 0);
    for (int j = 0; j <= top; ++j) {
        h[j] = cx.term_dims[j] - ranks[j] - ranks[j + 1];
        if (h[j] < 0) throw internal_error("negative cohomology dimension");
    }
    return h;
}

SheafCohomology sheaf_cohomology(const WeightedBModule& e, BggCache* cache) {
    const RootSystemData& rs = e.cb->rs;
    SheafCohomology out;
    out.total_dims.assign(rs.num_positive_roots() + 1, Int(0));
    for (const WeightVector& nu : candidate_dominants(e)) {
        auto cx = assemble_bgg_complex(e, nu, cache);
        auto h = complex_cohomology(cx);
        bool nonzero = std::any_of(h.begin(), h.end(), [](int64_t v) { return v != 0; });
        if (!nonzero) continue;
        Int dim_nu = weyl_dimension(rs, nu);
        for (size_t j = 0; j < h.size(); ++j) out.total_dims[j] += dim_nu * Int(h[j]);
        out.multiplicities[nu] = std::move(h);
    }
    return out;
}

bool HodgeDiamond::complete() const {
    return entries.size() == entry_list(dim_x).size();
}

void HodgeDiamond::recompute_totals() {
    entry_dims.clear();
    total = 0;
    RootSystemData rs = build_root_system(type_letter, rank);
    for (const auto& [ij, iso] : entries) {
        Int d = 0;
        for (const auto& [nu, mult] : iso) d += Int(mult) * weyl_dimension(rs, nu);
        entry_dims[ij] = d;
        total += d;
    }
}

std::vector<std::pair<int, int>> HodgeDiamond::entry_list(int dim_x) {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t <= dim_x; ++t)
        for (int s = 0; s <= t; ++s) out.emplace_back(t - s, t + s);
    return out;
}

HodgeDiamond hodge_diamond(const ChevalleyBasis& cb, const ParabolicSplit& split,
                           const HodgeDiamond* seed, int jobs,
                           const std::function<void(const HodgeDiamond&)>& checkpoint) {
    HodgeDiamond hd;
    hd.type_letter = cb.rs.type_letter;
    hd.rank = cb.rs.rank;
    hd.levi = split.levi_subset;
    hd.dim_x = split.dim_x();
    if (seed) {
        for (const auto& [ij, iso] : seed->entries) hd.entries[ij] = iso;
    }

    std::vector<std::pair<int, int>> todo;
    for (auto ij : HodgeDiamond::entry_list(hd.dim_x))
        if (!hd.entries.count(ij)) todo.push_back(ij);

    BggCache cache;
    std::mutex result_mtx;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= todo.size()) return;
            auto [i, j] = todo[t];
            WeightedBModule e = graded_piece(cb, split, j, -(i + j));
            SheafCohomology sc = sheaf_cohomology(e, &cache);
            std::map<WeightVector, int64_t> iso;
            for (const auto& [nu, mults] : sc.multiplicities)
                if (mults[i] != 0) iso[nu] = mults[i];
            {
                std::lock_guard<std::mutex> lock(result_mtx);
                hd.entries[{i, j}] = std::move(iso);
                if (checkpoint) {
                    hd.recompute_totals();
                    checkpoint(hd);
                }
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    hd.recompute_totals();
    return hd;
}

}  // namespace qcenter
