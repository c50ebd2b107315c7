#include "qcenter/pmodules.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcenter {

void WeightedBModule::finalize() {
    weight_index.clear();
    for (int v = 0; v < dim(); ++v) weight_index[weights[v]].push_back(v);

    const RootSystemData& rs = cb->rs;
    for (int b = 0; b < rs.num_positive_roots(); ++b) {
        const SparseMat& m = f_root_act[b];
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [r, coeff] : m.col[c].terms)
                if (weights[r] != weights[c] - rs.positive_roots_fw[b])
                    throw internal_error("f action is not weight-homogeneous");
    }
    for (int i = 0; i < rs.rank; ++i) {
        const SparseMat& m = e_simple_act[i];
        for (int c = 0; c < m.cols; ++c)
            for (const auto& [r, coeff] : m.col[c].terms)
                if (weights[r] != weights[c] + rs.positive_roots_fw[i])
                    throw internal_error("e action is not weight-homogeneous");
    }
}

std::vector<int> weight_space(const WeightedBModule& e, const WeightVector& mu) {
    auto it = e.weight_index.find(mu);
    if (it == e.weight_index.end()) return {};
    return it->second;
}

SparseMat e_root_action(const WeightedBModule& e, int root) {
    const ChevalleyBasis& cb = *e.cb;
    if (root < cb.rs.rank) return e.e_simple_act[root];
    // find a simple descent: [e_i, e_delta] = c e_root with c != 0
    for (int i = 0; i < cb.rs.rank; ++i) {
        auto delta = cb.rs.positive_roots[root];
        delta[i] -= 1;
        auto it = cb.rs.root_index.find(delta);
        if (it == cb.rs.root_index.end()) continue;
        const SparseVec& br = cb.bracket[cb.e_index(i)][cb.e_index(it->second)];
        if (br.terms.size() != 1 || br.terms[0].first != cb.e_index(root)) continue;
        Rat c = br.terms[0].second;
        SparseMat lower = e_root_action(e, it->second);
        const SparseMat& ei = e.e_simple_act[i];
        SparseMat out(e.dim(), e.dim());
        for (int v = 0; v < e.dim(); ++v) {
            SparseVec unit;
            unit.add(v, Rat(1));
            SparseVec xy = ei.apply(lower.apply(unit));
            SparseVec yx = lower.apply(ei.apply(unit));
            for (auto& [r, w] : xy.terms) out.col[v].add(r, w / c);
            for (auto& [r, w] : yx.terms) out.col[v].add(r, -w / c);
            out.col[v].normalize();
        }
        return out;
    }
    throw internal_error("no simple descent for raising operator");
}

namespace {

// Subquotient of the adjoint representation spanned by `indices`: the action
// of a generator is the bracket followed by the projection that keeps only
// components inside the span.
WeightedBModule subspace_module(const ChevalleyBasis& cb, const std::vector<int>& indices) {
    WeightedBModule m;
    m.cb = &cb;
    std::vector<int> pos_of(cb.dim, -1);
    for (size_t k = 0; k < indices.size(); ++k) {
        pos_of[indices[k]] = static_cast<int>(k);
        m.labels.push_back(cb.label(indices[k]));
        m.weights.push_back(cb.weight[indices[k]]);
    }
    auto act = [&](int gen_idx) {
        SparseMat a(static_cast<int>(indices.size()), static_cast<int>(indices.size()));
        for (size_t k = 0; k < indices.size(); ++k) {
            for (const auto& [comp, c] : cb.bracket[gen_idx][indices[k]].terms)
                if (pos_of[comp] >= 0) a.col[k].add(pos_of[comp], c);
            a.col[k].normalize();
        }
        return a;
    };
    for (int b = 0; b < cb.num_pos; ++b) m.f_root_act.push_back(act(cb.f_index(b)));
    for (int i = 0; i < cb.rs.rank; ++i) m.e_simple_act.push_back(act(cb.e_index(i)));
    m.finalize();
    return m;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int pos) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[pos] = v;
            rec(v + 1, pos + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> multisets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || (n == 0 && k > 0)) return out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int pos) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[pos] = v;
            rec(v, pos + 1);
        }
    };
    rec(0, 0);
    return out;
}

// sort with wedge parity; returns 0 sign on repeated entries
int sort_signed(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

WeightedBModule adjoint_b_module(const ChevalleyBasis& cb, const ParabolicSplit& split,
                                 const std::string& which) {
    std::vector<int> idx;
    if (which == "g") {
        for (int k = 0; k < cb.dim; ++k) idx.push_back(k);
    } else if (which == "p") {
        idx = split.p_basis;
    } else if (which == "nP") {
        idx = split.nP_basis;
    } else if (which == "uP") {
        idx = split.uP_basis;
    } else {
        throw invalid_argument("adjoint_b_module: which must be g|p|nP|uP");
    }
    return subspace_module(cb, idx);
}

WeightedBModule character_module(const ChevalleyBasis& cb, const WeightVector& lambda) {
    WeightedBModule m;
    m.cb = &cb;
    m.labels = {"1"};
    m.weights = {lambda};
    for (int b = 0; b < cb.num_pos; ++b) m.f_root_act.emplace_back(1, 1);
    for (int i = 0; i < cb.rs.rank; ++i) m.e_simple_act.emplace_back(1, 1);
    m.finalize();
    return m;
}

WeightedBModule tensor_module(const WeightedBModule& a, const WeightedBModule& b) {
    WeightedBModule m;
    m.cb = a.cb;
    const int da = a.dim(), db = b.dim();
    for (int ia = 0; ia < da; ++ia)
        for (int ib = 0; ib < db; ++ib) {
            m.labels.push_back(a.labels[ia] + " \xE2\x8A\x97 " + b.labels[ib]);
            m.weights.push_back(a.weights[ia] + b.weights[ib]);
        }
    auto leibniz = [&](const SparseMat& ma, const SparseMat& mb) {
        SparseMat out(da * db, da * db);
        for (int ia = 0; ia < da; ++ia)
            for (int ib = 0; ib < db; ++ib) {
                auto& col = out.col[ia * db + ib];
                for (const auto& [r, c] : ma.col[ia].terms) col.add(r * db + ib, c);
                for (const auto& [r, c] : mb.col[ib].terms) col.add(ia * db + r, c);
                col.normalize();
            }
        return out;
    };
    for (int k = 0; k < a.cb->num_pos; ++k)
        m.f_root_act.push_back(leibniz(a.f_root_act[k], b.f_root_act[k]));
    for (int i = 0; i < a.cb->rs.rank; ++i)
        m.e_simple_act.push_back(leibniz(a.e_simple_act[i], b.e_simple_act[i]));
    m.finalize();
    return m;
}

namespace {

WeightedBModule power_module(const WeightedBModule& a, int k, bool alternating) {
    if (k < 0) throw invalid_argument("negative functor degree");
    WeightedBModule m;
    m.cb = a.cb;
    const auto basis = alternating ? subsets_of_size(a.dim(), k) : multisets_of_size(a.dim(), k);
    std::map<std::vector<int>, int> pos;
    const char* sep = alternating ? " \xE2\x88\xA7 " : " \xC2\xB7 ";
    for (const auto& mono : basis) {
        pos[mono] = static_cast<int>(m.labels.size());
        std::string lab;
        WeightVector w(std::vector<int64_t>(a.cb->rs.rank, 0));
        for (size_t t = 0; t < mono.size(); ++t) {
            if (t) lab += sep;
            lab += a.labels[mono[t]];
            w = w + a.weights[mono[t]];
        }
        if (mono.empty()) lab = "1";
        m.labels.push_back(lab);
        m.weights.push_back(w);
    }
    auto derive = [&](const SparseMat& ma) {
        SparseMat out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            auto& col = out.col[bi];
            for (size_t t = 0; t < basis[bi].size(); ++t)
                for (const auto& [r, c] : ma.col[basis[bi][t]].terms) {
                    std::vector<int> nm = basis[bi];
                    nm[t] = r;
                    int sign = 1;
                    if (alternating) {
                        sign = sort_signed(nm);
                        if (sign == 0) continue;
                    } else {
                        std::sort(nm.begin(), nm.end());
                    }
                    col.add(pos.at(nm), c * sign);
                }
            col.normalize();
        }
        return out;
    };
    for (int b = 0; b < a.cb->num_pos; ++b) m.f_root_act.push_back(derive(a.f_root_act[b]));
    for (int i = 0; i < a.cb->rs.rank; ++i) m.e_simple_act.push_back(derive(a.e_simple_act[i]));
    m.finalize();
    return m;
}

}  // namespace

WeightedBModule wedge_module(const WeightedBModule& a, int k) { return power_module(a, k, true); }
WeightedBModule sym_module(const WeightedBModule& a, int k) { return power_module(a, k, false); }

WeightedBModule apply_functor(FunctorKind kind, const std::vector<const WeightedBModule*>& inputs,
                              int k) {
    switch (kind) {
        case FunctorKind::Tensor: {
            if (inputs.empty()) throw invalid_argument("tensor needs at least one input");
            WeightedBModule acc = *inputs[0];
            for (size_t i = 1; i < inputs.size(); ++i) acc = tensor_module(acc, *inputs[i]);
            return acc;
        }
        case FunctorKind::Wedge:
            if (inputs.size() != 1) throw invalid_argument("wedge takes one input");
            return wedge_module(*inputs[0], k);
        case FunctorKind::Sym:
            if (inputs.size() != 1) throw invalid_argument("sym takes one input");
            return sym_module(*inputs[0], k);
    }
    throw invalid_argument("unknown functor kind");
}

Int graded_piece_dimension(int dim_x, int j, int r) {
    if (r > 0 || r % 2 != 0) return 0;
    const int m = -r / 2;
    Int total = 0;
    for (int b = std::max(m, j - dim_x); b <= std::min(j, dim_x); ++b) {
        int a = j - b;
        total += binomial(dim_x, a) * binomial(dim_x, b) * binomial(dim_x + b - m - 1, b - m);
    }
    return total;
}

namespace {

// free-basis monomial of a graded piece: S-part exponents over the uP roots,
// then ascending wedge subsets for the uP and nP factors
struct GpMono {
    std::vector<int> s;
    std::vector<int> es;
    std::vector<int> fs;
    auto operator<=>(const GpMono&) const = default;
};

struct GpBuilder {
    const ChevalleyBasis& cb;
    const ParabolicSplit& split;
    int d;
    std::vector<int> root_pos;  // positive-root index -> position among nonlevi roots, or -1

    GpBuilder(const ChevalleyBasis& c, const ParabolicSplit& s)
        : cb(c), split(s), d(s.dim_x()), root_pos(c.num_pos, -1) {
        for (int k = 0; k < d; ++k) root_pos[split.nonlevi_roots[k]] = k;
    }

    WeightVector mono_weight(const GpMono& m) const {
        WeightVector w(std::vector<int64_t>(cb.rs.rank, 0));
        for (int k = 0; k < d; ++k)
            for (int t = 0; t < m.s[k]; ++t) w = w + cb.rs.positive_roots_fw[split.nonlevi_roots[k]];
        for (int k : m.es) w = w + cb.rs.positive_roots_fw[split.nonlevi_roots[k]];
        for (int k : m.fs) w = w - cb.rs.positive_roots_fw[split.nonlevi_roots[k]];
        return w;
    }

    std::string mono_label(const GpMono& m) const {
        auto root_tag = [&](int k) {
            std::string t = "[";
            for (int64_t c : cb.rs.positive_roots[split.nonlevi_roots[k]]) t += std::to_string(c);
            return t + "]";
        };
        std::string s;
        bool any = false;
        for (int k = 0; k < d; ++k)
            if (m.s[k] > 0) {
                if (any) s += "\xC2\xB7";
                s += "u" + root_tag(k);
                if (m.s[k] > 1) s += "^" + std::to_string(m.s[k]);
                any = true;
            }
        if (!any) s = "1";
        std::string e;
        for (size_t t = 0; t < m.es.size(); ++t)
            e += (t ? " \xE2\x88\xA7 " : "") + ("e" + root_tag(m.es[t]));
        if (m.es.empty()) e = "1";
        std::string f;
        for (size_t t = 0; t < m.fs.size(); ++t)
            f += (t ? " \xE2\x88\xA7 " : "") + ("f" + root_tag(m.fs[t]));
        if (m.fs.empty()) f = "1";
        return s + " \xE2\x8A\x97 " + e + " \xE2\x8A\x97 " + f;
    }

    // apply generator x (a Chevalley basis index in p, or a simple raising
    // operator) to a monomial; appends (monomial, coeff) pairs to out
    void apply(int x, const GpMono& m, std::vector<std::pair<GpMono, Rat>>& out) const {
        // S-part: derivation through the quotient g/p
        for (int k = 0; k < d; ++k) {
            if (m.s[k] == 0) continue;
            for (const auto& [comp, c] : cb.bracket[x][cb.e_index(split.nonlevi_roots[k])].terms) {
                if (!cb.is_e(comp)) continue;
                int km = root_pos[cb.root_of(comp)];
                if (km < 0) continue;  // projection along p
                GpMono nm = m;
                nm.s[k] -= 1;
                nm.s[km] += 1;
                out.emplace_back(std::move(nm), c * Rat(m.s[k]));
            }
        }
        // uP wedge factors: full bracket in g, rewriting p-components
        const int a = static_cast<int>(m.es.size());
        for (int q = 0; q < a; ++q) {
            int root_k = split.nonlevi_roots[m.es[q]];
            for (const auto& [comp, c] : cb.bracket[x][cb.e_index(root_k)].terms) {
                int upos = cb.is_e(comp) ? root_pos[cb.root_of(comp)] : -1;
                if (upos >= 0) {
                    GpMono nm = m;
                    nm.es[q] = upos;
                    int sign = sort_signed(nm.es);
                    if (sign == 0) continue;
                    out.emplace_back(std::move(nm), c * sign);
                } else {
                    // component z lies in p: rewrite the slot through the
                    // invariant identification of nP* with uP, in which the
                    // pairing of e_beta with f_beta carries (beta,beta)/2
                    for (int k2 = 0; k2 < d; ++k2) {
                        const Rat dk(cb.rs.root_d[split.nonlevi_roots[k2]]);
                        for (const auto& [comp2, c2] :
                             cb.bracket[comp][cb.f_index(split.nonlevi_roots[k2])].terms) {
                            if (!cb.is_f(comp2)) throw internal_error("p does not stabilize nP");
                            int l2 = root_pos[cb.root_of(comp2)];
                            if (l2 < 0) throw internal_error("p does not stabilize nP");
                            GpMono nm = m;
                            nm.es.erase(nm.es.begin() + q);
                            nm.s[k2] += 1;
                            int sign = ((a - 1 - q) % 2 == 0) ? 1 : -1;
                            // insert the new n-factor in front of the f-wedge, then sort
                            int before = static_cast<int>(
                                std::lower_bound(nm.fs.begin(), nm.fs.end(), l2) - nm.fs.begin());
                            if (before < static_cast<int>(nm.fs.size()) && nm.fs[before] == l2)
                                continue;
                            nm.fs.insert(nm.fs.begin() + before, l2);
                            if (before % 2 == 1) sign = -sign;
                            out.emplace_back(std::move(nm), -c * c2 * dk * sign);
                        }
                    }
                }
            }
        }
        // nP wedge factors: bracket projected back to nP
        for (size_t q = 0; q < m.fs.size(); ++q) {
            int root_k = split.nonlevi_roots[m.fs[q]];
            for (const auto& [comp, c] : cb.bracket[x][cb.f_index(root_k)].terms) {
                if (!cb.is_f(comp)) continue;  // projection (only non-Levi raisings hit this)
                int fpos = root_pos[cb.root_of(comp)];
                if (fpos < 0) continue;
                GpMono nm = m;
                nm.fs[q] = fpos;
                int sign = sort_signed(nm.fs);
                if (sign == 0) continue;
                out.emplace_back(std::move(nm), c * sign);
            }
        }
    }
};

}  // namespace

WeightedBModule graded_piece(const ChevalleyBasis& cb, const ParabolicSplit& split, int j, int r) {
    WeightedBModule m;
    m.cb = &cb;
    const int d = split.dim_x();

    bool empty = (r > 0) || (r % 2 != 0) || (j < 0) || (j > 2 * d);
    const int mm = empty ? 0 : -r / 2;

    GpBuilder builder(cb, split);
    std::vector<GpMono> basis;
    std::map<GpMono, int> pos;
    if (!empty) {
        for (int b = std::max(mm, j - d); b <= std::min(j, d); ++b) {
            int a = j - b;
            for (const auto& es : subsets_of_size(d, a))
                for (const auto& fs : subsets_of_size(d, b))
                    for (const auto& sm : multisets_of_size(d, b - mm)) {
                        GpMono mono;
                        mono.s.assign(d, 0);
                        for (int v : sm) mono.s[v] += 1;
                        mono.es = es;
                        mono.fs = fs;
                        pos[mono] = static_cast<int>(basis.size());
                        basis.push_back(std::move(mono));
                    }
        }
    }
    for (const auto& mono : basis) {
        m.labels.push_back(builder.mono_label(mono));
        m.weights.push_back(builder.mono_weight(mono));
    }
    auto act = [&](int gen_idx) {
        SparseMat out(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
        std::vector<std::pair<GpMono, Rat>> terms;
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            terms.clear();
            builder.apply(gen_idx, basis[bi], terms);
            for (auto& [nm, c] : terms) out.col[bi].add(pos.at(nm), c);
            out.col[bi].normalize();
        }
        return out;
    };
    for (int b = 0; b < cb.num_pos; ++b) m.f_root_act.push_back(act(cb.f_index(b)));
    for (int i = 0; i < cb.rs.rank; ++i) m.e_simple_act.push_back(act(cb.e_index(i)));
    m.finalize();

    if (!empty && Int(m.dim()) != graded_piece_dimension(d, j, r))
        throw internal_error("graded piece dimension mismatch");
    return m;
}

}  // namespace qcenter
