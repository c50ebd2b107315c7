#include "qcenter/bgg.hpp"

#include <algorithm>
#include <functional>

namespace qcenter {

void UMinusElement::cleanup() {
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
}

void UMinusElement::normalize_leading() {
    cleanup();
    if (terms.empty()) return;
    Rat lead = terms.rbegin()->second;
    for (auto& [k, v] : terms) v /= lead;
}

UMinusElement UMinusElement::scaled(const Rat& c) const {
    UMinusElement out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms) out.terms[k] = v * c;
    return out;
}

std::string UMinusElement::str(const ChevalleyBasis& cb) const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    // print leading monomial first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) s += " + ";
        first = false;
        s += it->second.get_str() + "*";
        bool any = false;
        for (size_t b = 0; b < it->first.size(); ++b)
            for (int t = 0; t < it->first[b]; ++t) {
                s += cb.label(cb.f_index(static_cast<int>(b)));
                any = true;
            }
        if (!any) s += "1";
    }
    return s;
}

namespace {

void add_term(UMinusElement& acc, const std::vector<int>& mono, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.terms.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.terms.erase(it);
    }
}

// f_k * monomial, recursively commuting f_k past smaller roots
void lmul_mono(const ChevalleyBasis& cb, int k, const std::vector<int>& mono, const Rat& coeff,
               UMinusElement& acc) {
    int j = -1;
    for (size_t b = 0; b < mono.size(); ++b)
        if (mono[b] > 0) { j = static_cast<int>(b); break; }
    if (j < 0 || k <= j) {
        auto nm = mono;
        nm[k] += 1;
        add_term(acc, nm, coeff);
        return;
    }
    // mono = f_j * rest
    auto rest = mono;
    rest[j] -= 1;
    // term f_j * (f_k * rest)
    UMinusElement inner;
    lmul_mono(cb, k, rest, coeff, inner);
    for (const auto& [m, c] : inner.terms) lmul_mono(cb, j, m, c, acc);
    // term [f_k, f_j] * rest
    const SparseVec& br = cb.bracket[cb.f_index(k)][cb.f_index(j)];
    for (const auto& [comp, c] : br.terms) {
        if (!cb.is_f(comp)) throw internal_error("[f,f] outside n^-");
        lmul_mono(cb, cb.root_of(comp), rest, coeff * c, acc);
    }
}

}  // namespace

UMinusElement pbw_lmul_f(const ChevalleyBasis& cb, int root_k, const UMinusElement& x) {
    UMinusElement out;
    for (const auto& [m, c] : x.terms) lmul_mono(cb, root_k, m, c, out);
    return out;
}

UMinusElement pbw_multiply(const ChevalleyBasis& cb, const UMinusElement& a,
                           const UMinusElement& b) {
    UMinusElement out;
    for (const auto& [ma, ca] : a.terms) {
        UMinusElement cur;
        for (const auto& [mb, cb2] : b.terms) add_term(cur, mb, cb2 * ca);
        for (int k = static_cast<int>(ma.size()) - 1; k >= 0; --k)
            for (int t = 0; t < ma[k]; ++t) cur = pbw_lmul_f(cb, k, cur);
        for (const auto& [m, c] : cur.terms) add_term(out, m, c);
    }
    out.cleanup();
    return out;
}

UMinusElement pbw_of_simple_word(const ChevalleyBasis& cb, const std::vector<int>& letters) {
    UMinusElement x;
    x.terms[std::vector<int>(cb.num_pos, 0)] = 1;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = pbw_lmul_f(cb, *it, x);
    return x;
}

bool pbw_proportional(const UMinusElement& a, const UMinusElement& b, Rat& c) {
    if (a.terms.size() != b.terms.size()) return false;
    if (a.terms.empty()) return false;
    c = 0;
    auto ita = a.terms.begin();
    auto itb = b.terms.begin();
    for (; ita != a.terms.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        Rat ratio = ita->second / itb->second;
        if (c == 0)
            c = ratio;
        else if (c != ratio)
            return false;
    }
    return c != 0;
}

namespace {

// weight of a PBW monomial in fundamental coordinates (a nonpositive sum of roots)
WeightVector mono_weight(const ChevalleyBasis& cb, const std::vector<int>& mono) {
    WeightVector w(std::vector<int64_t>(cb.rs.rank, 0));
    for (size_t b = 0; b < mono.size(); ++b)
        for (int t = 0; t < mono[b]; ++t) w = w - cb.rs.positive_roots_fw[b];
    return w;
}

// e_i applied to (monomial)v_lambda in the Verma module with highest weight lambda
void apply_e_verma(const ChevalleyBasis& cb, int i, const std::vector<int>& mono, const Rat& coeff,
                   const WeightVector& lambda, UMinusElement& acc) {
    int j = -1;
    for (size_t b = 0; b < mono.size(); ++b)
        if (mono[b] > 0) { j = static_cast<int>(b); break; }
    if (j < 0) return;  // e_i kills the highest-weight vector
    auto rest = mono;
    rest[j] -= 1;
    // f_j * (e_i rest v)
    UMinusElement inner;
    apply_e_verma(cb, i, rest, coeff, lambda, inner);
    for (const auto& [m, c] : inner.terms) lmul_mono(cb, j, m, c, acc);
    // [e_i, f_j] rest v
    const SparseVec& br = cb.bracket[cb.e_index(i)][cb.f_index(j)];
    for (const auto& [comp, c] : br.terms) {
        if (cb.is_h(comp)) {
            int hi = comp - 2 * cb.num_pos;
            WeightVector w = lambda + mono_weight(cb, rest);
            add_term(acc, rest, coeff * c * Rat(w.coords[hi]));
        } else if (cb.is_f(comp)) {
            lmul_mono(cb, cb.root_of(comp), rest, coeff * c, acc);
        } else {
            throw internal_error("[e_i, f_beta] produced a raising term");
        }
    }
}

std::vector<std::vector<int>> exponents_of_weight(const RootSystemData& rs,
                                                  const std::vector<int64_t>& eta) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rs.num_positive_roots(), 0);
    std::function<void(int, std::vector<int64_t>)> rec = [&](int b, std::vector<int64_t> rem) {
        bool zero = std::all_of(rem.begin(), rem.end(), [](int64_t c) { return c == 0; });
        if (b == rs.num_positive_roots()) {
            if (zero) out.push_back(cur);
            return;
        }
        if (zero) {
            out.push_back(cur);
            return;
        }
        // max exponent of root b within rem
        int maxe = 1 << 20;
        for (int i = 0; i < rs.rank; ++i) {
            int64_t r = rs.positive_roots[b][i];
            if (r > 0) maxe = std::min<int>(maxe, static_cast<int>(rem[i] / r));
        }
        for (int e = 0; e <= maxe; ++e) {
            cur[b] = e;
            auto next = rem;
            for (int i = 0; i < rs.rank; ++i) next[i] -= e * rs.positive_roots[b][i];
            bool ok = std::all_of(next.begin(), next.end(), [](int64_t c) { return c >= 0; });
            if (ok) rec(b + 1, next);
        }
        cur[b] = 0;
    };
    rec(0, eta);
    // pad: recursion stops early on zero remainder with cur tail zeros already
    return out;
}

}  // namespace

UMinusElement singular_vector(const ChevalleyBasis& cb, const WeylElement& w,
                              const WeylElement& w_prime, const WeightVector& nu) {
    const RootSystemData& rs = cb.rs;
    if (w_prime.length != w.length + 1)
        throw invalid_argument("singular_vector expects a Bruhat cover");
    WeightVector lambda = dot_action(rs, w, nu);
    WeightVector lambda_p = dot_action(rs, w_prime, nu);
    auto eta_alpha = rs.fw_to_alpha(lambda - lambda_p);
    if (!eta_alpha) throw internal_error("weight difference not in the root lattice");

    auto monos = exponents_of_weight(rs, *eta_alpha);
    if (monos.empty()) throw internal_error("empty PBW weight slice");
    std::map<std::vector<int>, int> mono_pos;
    for (size_t t = 0; t < monos.size(); ++t) mono_pos[monos[t]] = static_cast<int>(t);

    // rows: for each simple i, coefficients of e_i(theta v) over the target slice
    std::vector<std::map<std::vector<int>, int>> img_pos(rs.rank);
    std::vector<int> offset(rs.rank + 1, 0);
    std::vector<std::vector<UMinusElement>> images(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        images[i].resize(monos.size());
        std::set<std::vector<int>> keys;
        for (size_t t = 0; t < monos.size(); ++t) {
            apply_e_verma(cb, i, monos[t], Rat(1), lambda, images[i][t]);
            for (const auto& [m, c] : images[i][t].terms) keys.insert(m);
        }
        for (const auto& k : keys) {
            int p = static_cast<int>(img_pos[i].size());
            img_pos[i][k] = p;
        }
        offset[i + 1] = offset[i] + static_cast<int>(img_pos[i].size());
    }
    MatQ sys(offset[rs.rank], static_cast<int>(monos.size()));
    for (int i = 0; i < rs.rank; ++i)
        for (size_t t = 0; t < monos.size(); ++t)
            for (const auto& [m, c] : images[i][t].terms)
                sys.at(offset[i] + img_pos[i].at(m), static_cast<int>(t)) = c;

    auto kernel = kernel_basis(sys);
    if (kernel.size() != 1)
        throw internal_error("singular-vector space has dimension " +
                             std::to_string(kernel.size()) + ", expected 1");
    UMinusElement theta;
    for (size_t t = 0; t < monos.size(); ++t)
        if (kernel[0][t] != 0) theta.terms[monos[t]] = kernel[0][t];
    theta.normalize_leading();
    return theta;
}

std::vector<std::pair<int, int>> bruhat_covers(const RootSystemData& rs) {
    std::set<int> refl(rs.reflection_of_root.begin(), rs.reflection_of_root.end());
    std::vector<std::pair<int, int>> covers;
    for (const auto& w : rs.weyl_elements)
        for (const auto& wp : rs.weyl_elements) {
            if (wp.length != w.length + 1) continue;
            int t = rs.mult_table[wp.index][rs.inverse_table[w.index]];
            if (refl.count(t)) covers.emplace_back(w.index, wp.index);
        }
    return covers;
}

BggSkeleton bgg_skeleton(const ChevalleyBasis& cb, const WeightVector& nu) {
    const RootSystemData& rs = cb.rs;
    BggSkeleton sk;
    sk.nu = nu;
    for (auto [a, b] : bruhat_covers(rs)) {
        BggEdge e;
        e.from = a;
        e.to = b;
        e.theta = singular_vector(cb, rs.weyl_elements[a], rs.weyl_elements[b], nu);
        e.scalar = 0;  // unknown
        sk.edge_of[{a, b}] = static_cast<int>(sk.edges.size());
        sk.edges.push_back(std::move(e));
    }

    // Square constraints: for w < w1,w2 < w3 require
    //   s(w,w1)s(w1,w3) P1 + s(w,w2)s(w2,w3) P2 = 0,  P_i the U-products.
    struct Square {
        int e1a, e1b, e2a, e2b;  // edge indices: (w,w1),(w1,w3),(w,w2),(w2,w3)
        Rat ratio;               // P1 = ratio * P2
    };
    std::vector<Square> squares;
    std::map<int, std::vector<std::pair<int, int>>> up;  // w -> list of (mid, edge idx)
    for (size_t t = 0; t < sk.edges.size(); ++t)
        up[sk.edges[t].from].emplace_back(sk.edges[t].to, static_cast<int>(t));
    static const std::vector<std::pair<int, int>> kNoEdges;
    auto edges_up = [&](int w) -> const std::vector<std::pair<int, int>>& {
        auto it = up.find(w);
        return it == up.end() ? kNoEdges : it->second;
    };
    for (const auto& [w, outs] : up)
        for (size_t i = 0; i < outs.size(); ++i)
            for (size_t j = i + 1; j < outs.size(); ++j) {
                for (const auto& [m1, t1] : edges_up(outs[i].first))
                    for (const auto& [m2, t2] : edges_up(outs[j].first))
                        if (m1 == m2) {
                            Square sq;
                            sq.e1a = outs[i].second;
                            sq.e1b = t1;
                            sq.e2a = outs[j].second;
                            sq.e2b = t2;
                            UMinusElement p1 =
                                pbw_multiply(cb, sk.edges[sq.e1b].theta, sk.edges[sq.e1a].theta);
                            UMinusElement p2 =
                                pbw_multiply(cb, sk.edges[sq.e2b].theta, sk.edges[sq.e2a].theta);
                            Rat ratio;
                            if (!pbw_proportional(p1, p2, ratio))
                                throw internal_error("BGG square compositions not proportional");
                            sq.ratio = ratio;
                            squares.push_back(sq);
                        }
            }

    // propagate scalars: edges out of the identity are 1
    for (auto& e : sk.edges)
        if (rs.weyl_elements[e.from].length == 0) e.scalar = 1;
    auto known = [&](int t) { return sk.edges[t].scalar != 0; };
    bool progress = true;
    while (true) {
        progress = false;
        for (const auto& sq : squares) {
            int k = known(sq.e1a) + known(sq.e1b) + known(sq.e2a) + known(sq.e2b);
            if (k == 3) {
                // s2a s2b = -ratio * s1a s1b
                if (!known(sq.e1a) || !known(sq.e1b)) {
                    // unknown on path 1: s1a s1b = -s2a s2b / ratio
                    Rat rhs = -sk.edges[sq.e2a].scalar * sk.edges[sq.e2b].scalar / sq.ratio;
                    if (!known(sq.e1a))
                        sk.edges[sq.e1a].scalar = rhs / sk.edges[sq.e1b].scalar;
                    else
                        sk.edges[sq.e1b].scalar = rhs / sk.edges[sq.e1a].scalar;
                } else {
                    Rat rhs = -sq.ratio * sk.edges[sq.e1a].scalar * sk.edges[sq.e1b].scalar;
                    if (!known(sq.e2a))
                        sk.edges[sq.e2a].scalar = rhs / sk.edges[sq.e2b].scalar;
                    else
                        sk.edges[sq.e2b].scalar = rhs / sk.edges[sq.e2a].scalar;
                }
                progress = true;
            }
        }
        if (progress) continue;
        int next = -1;
        for (size_t t = 0; t < sk.edges.size(); ++t)
            if (!known(static_cast<int>(t)) &&
                (next < 0 ||
                 rs.weyl_elements[sk.edges[t].from].length < rs.weyl_elements[sk.edges[next].from].length))
                next = static_cast<int>(t);
        if (next < 0) break;
        sk.edges[next].scalar = 1;
    }
    for (const auto& sq : squares) {
        Rat lhs = sk.edges[sq.e1a].scalar * sk.edges[sq.e1b].scalar * sq.ratio +
                  sk.edges[sq.e2a].scalar * sk.edges[sq.e2b].scalar;
        if (lhs != 0) throw internal_error("BGG sign system inconsistent");
    }
    return sk;
}

const BggSkeleton& BggCache::get(const ChevalleyBasis& cb, const WeightVector& nu) {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = skeletons.find(nu);
    if (it == skeletons.end()) it = skeletons.emplace(nu, bgg_skeleton(cb, nu)).first;
    return it->second;
}

SparseVec apply_uminus(const WeightedBModule& e, const UMinusElement& u, const SparseVec& v) {
    SparseVec out;
    for (const auto& [mono, c] : u.terms) {
        SparseVec cur = v;
        for (int b = static_cast<int>(mono.size()) - 1; b >= 0 && !cur.empty(); --b)
            for (int t = 0; t < mono[b] && !cur.empty(); ++t) cur = e.f_root_act[b].apply(cur);
        for (const auto& [idx, w] : cur.terms) out.add(idx, c * w);
    }
    out.normalize();
    return out;
}

BGGComplexInstance assemble_bgg_complex(const WeightedBModule& e, const WeightVector& nu,
                                        BggCache* cache) {
    const ChevalleyBasis& cb = *e.cb;
    const RootSystemData& rs = cb.rs;
    BggSkeleton local;
    const BggSkeleton* sk;
    if (cache) {
        sk = &cache->get(cb, nu);
    } else {
        local = bgg_skeleton(cb, nu);
        sk = &local;
    }

    BGGComplexInstance cx;
    cx.nu = nu;
    const int maxlen = rs.num_positive_roots();
    cx.term_w.assign(maxlen + 1, {});
    cx.term_basis.assign(maxlen + 1, {});
    cx.term_dims.assign(maxlen + 1, 0);
    std::vector<int> local_offset(rs.weyl_elements.size(), -1);
    for (const auto& w : rs.weyl_elements) {
        WeightVector mu = dot_action(rs, w, nu);
        auto basis = weight_space(e, mu);
        local_offset[w.index] = cx.term_dims[w.length];
        cx.term_dims[w.length] += static_cast<int>(basis.size());
        cx.term_w[w.length].push_back(w.index);
        cx.term_basis[w.length].push_back(std::move(basis));
    }

    cx.differentials.assign(maxlen + 1, MatQ());
    for (int j = 1; j <= maxlen; ++j) cx.differentials[j] = MatQ(cx.term_dims[j], cx.term_dims[j - 1]);

    // global module index -> row inside its term block, per weyl element
    std::map<int, std::map<int, int>> row_of;  // weyl idx -> module idx -> local row
    for (int j = 0; j <= maxlen; ++j)
        for (size_t t = 0; t < cx.term_w[j].size(); ++t) {
            auto& m = row_of[cx.term_w[j][t]];
            for (size_t r = 0; r < cx.term_basis[j][t].size(); ++r)
                m[cx.term_basis[j][t][r]] = static_cast<int>(r);
        }

    for (const auto& edge : sk->edges) {
        int j = rs.weyl_elements[edge.to].length;
        const auto& dom_rows = row_of[edge.from];
        const auto& cod_rows = row_of[edge.to];
        if (dom_rows.empty() || cod_rows.empty()) continue;
        MatQ& d = cx.differentials[j];
        for (const auto& [src_idx, src_col] : dom_rows) {
            SparseVec unit;
            unit.add(src_idx, Rat(1));
            SparseVec img = apply_uminus(e, edge.theta, unit);
            for (const auto& [idx, c] : img.terms) {
                auto it = cod_rows.find(idx);
                if (it == cod_rows.end()) throw internal_error("differential left the weight space");
                d.at(local_offset[edge.to] + it->second, local_offset[edge.from] + src_col) +=
                    edge.scalar * c;
            }
        }
    }

    for (int j = 1; j < maxlen; ++j) {
        if (cx.differentials[j].cols == 0 || cx.differentials[j + 1].rows == 0) continue;
        if (!cx.differentials[j + 1].multiply(cx.differentials[j]).is_zero())
            throw internal_error("d^2 != 0 in assembled BGG complex");
    }
    return cx;
}

std::set<WeightVector> candidate_dominants(const WeightedBModule& e) {
    std::set<WeightVector> out;
    for (const auto& [mu, idxs] : e.weight_index) {
        auto rep = dominant_dot_representative(e.cb->rs, mu);
        if (rep) out.insert(rep->second);
    }
    return out;
}

}  // namespace qcenter
