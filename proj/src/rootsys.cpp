#include "qcenter/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace qcenter {

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    WeightVector r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

bool WeightVector::is_zero() const {
    for (int64_t c : coords)
        if (c != 0) return false;
    return true;
}

std::string WeightVector::str() const {
    std::string s = "[";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + "]";
}

namespace {

std::vector<std::vector<int64_t>> cartan_matrix(char type, int rank) {
    auto chain = [&](int n) {
        std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) a[i][i + 1] = -1;
            if (i > 0) a[i][i - 1] = -1;
        }
        return a;
    };
    switch (type) {
        case 'A': {
            // Weyl groups are materialized in full, so ranks stay small
            if (rank < 1 || rank > 4) throw invalid_argument("type A supports rank 1..4");
            return chain(rank);
        }
        case 'B': {
            // alpha_rank is the short root: <alpha_{n-1}, coroot_n> = -2
            if (rank < 2 || rank > 4) throw invalid_argument("type B supports rank 2..4");
            auto a = chain(rank);
            a[rank - 1][rank - 2] = -2;
            return a;
        }
        case 'C': {
            if (rank < 2 || rank > 4) throw invalid_argument("type C supports rank 2..4");
            auto a = chain(rank);
            a[rank - 2][rank - 1] = -2;
            return a;
        }
        case 'D': {
            if (rank < 3 || rank > 4) throw invalid_argument("type D supports rank 3..4");
            auto a = chain(rank);
            // fork: last node attaches to node rank-3 instead of rank-2
            a[rank - 1][rank - 2] = 0;
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 3] = -1;
            a[rank - 3][rank - 1] = -1;
            return a;
        }
        default:
            throw invalid_argument(std::string("unsupported type letter '") + type + "'");
    }
}

int64_t height_of(const std::vector<int64_t>& r) {
    return std::accumulate(r.begin(), r.end(), int64_t{0});
}

// (height ascending, then reverse-lex) puts alpha_1 before alpha_2 etc.
bool root_order_less(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    int64_t ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
}

}  // namespace

int64_t RootSystemData::root_pairing(const WeightVector& w, int b) const {
    int64_t s = 0;
    for (int i = 0; i < rank; ++i) s += coroot_coords[b][i] * w.coords[i];
    return s;
}

WeightVector RootSystemData::alpha_to_fw(const std::vector<int64_t>& alpha) const {
    WeightVector w;
    w.coords.assign(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) w.coords[i] += cartan[i][j] * alpha[j];
    return w;
}

std::optional<std::vector<int64_t>> RootSystemData::fw_to_alpha(const WeightVector& w) const {
    // Solve cartan * x = coords exactly.
    std::vector<std::vector<Rat>> m(rank, std::vector<Rat>(rank + 1));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) m[i][j] = Rat(cartan[i][j]);
        m[i][rank] = Rat(w.coords[i]);
    }
    for (int c = 0; c < rank; ++c) {
        int piv = -1;
        for (int r = c; r < rank; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(m[c], m[piv]);
        Rat inv = 1 / m[c][c];
        for (int j = c; j <= rank; ++j) m[c][j] *= inv;
        for (int r = 0; r < rank; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int j = c; j <= rank; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<int64_t> x(rank);
    for (int i = 0; i < rank; ++i) {
        if (m[i][rank].get_den() != 1) return std::nullopt;
        x[i] = static_cast<int64_t>(m[i][rank].get_num().get_si());
    }
    return x;
}

WeightVector RootSystemData::apply_index(int widx, const WeightVector& v) const {
    const auto& m = weyl_mat[widx];
    WeightVector r;
    r.coords.assign(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r.coords[i] += m[i][j] * v.coords[j];
    return r;
}

WeightVector RootSystemData::apply(const WeylElement& w, const WeightVector& v) const {
    return apply_index(w.index, v);
}

bool RootSystemData::is_dominant(const WeightVector& w) const {
    for (int64_t c : w.coords)
        if (c < 0) return false;
    return true;
}

std::string RootSystemData::root_label(int b) const {
    std::string s;
    for (int64_t c : positive_roots[b]) s += std::to_string(c);
    return s;
}

RootSystemData build_root_system(char type_letter, int rank) {
    RootSystemData rs;
    rs.type_letter = type_letter;
    rs.rank = rank;
    rs.cartan = cartan_matrix(type_letter, rank);

    // symmetrizers d_i: smallest positive integers with d_i a_ij = d_j a_ji
    {
        std::vector<Rat> d(rank, Rat(0));
        d[0] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    if (rs.cartan[i][j] == 0) continue;
                    if (d[i] != 0 && d[j] == 0) {
                        d[j] = d[i] * Rat(rs.cartan[i][j]) / Rat(rs.cartan[j][i]);
                        changed = true;
                    }
                }
        }
        Int l = 1;
        for (const Rat& q : d) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> scaled;
        Int g = 0;
        for (const Rat& q : d) {
            Rat s = q * Rat(l);
            scaled.push_back(s.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
        }
        rs.sym_d.assign(rank, 0);
        for (int i = 0; i < rank; ++i) rs.sym_d[i] = mpz_get_si(Int(scaled[i] / g).get_mpz_t());
    }

    // positive roots by closing the simple roots under root strings
    auto pairing_alpha = [&](const std::vector<int64_t>& beta, int i) {
        int64_t s = 0;
        for (int j = 0; j < rank; ++j) s += rs.cartan[i][j] * beta[j];
        return s;
    };
    std::set<std::vector<int64_t>> roots;
    std::deque<std::vector<int64_t>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int64_t> a(rank, 0);
        a[i] = 1;
        roots.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            // q = how far the alpha_i-string extends downward from beta
            int64_t q = 0;
            auto down = beta;
            down[i] -= 1;
            while (roots.count(down)) {
                ++q;
                down[i] -= 1;
            }
            if (q - pairing_alpha(beta, i) > 0) {
                auto up = beta;
                up[i] += 1;
                if (!roots.count(up)) {
                    roots.insert(up);
                    queue.push_back(up);
                }
            }
        }
    }
    rs.positive_roots.assign(roots.begin(), roots.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), root_order_less);
    for (size_t b = 0; b < rs.positive_roots.size(); ++b) {
        rs.root_height.push_back(height_of(rs.positive_roots[b]));
        rs.root_index[rs.positive_roots[b]] = static_cast<int>(b);
        rs.positive_roots_fw.push_back(rs.alpha_to_fw(rs.positive_roots[b]));
    }

    // coroot(beta) = sum_i (d_i beta_i / d_beta) coroot_i, d_beta = (beta,beta)/2
    for (const auto& beta : rs.positive_roots) {
        int64_t norm2 = 0;  // (beta,beta)
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) norm2 += beta[i] * beta[j] * rs.sym_d[i] * rs.cartan[i][j];
        int64_t dbeta = norm2 / 2;
        rs.root_d.push_back(dbeta);
        std::vector<int64_t> cr(rank);
        for (int i = 0; i < rank; ++i) {
            int64_t num = rs.sym_d[i] * beta[i];
            if (num % dbeta != 0) throw internal_error("non-integral coroot expansion");
            cr[i] = num / dbeta;
        }
        rs.coroot_coords.push_back(cr);
    }

    rs.rho = WeightVector(std::vector<int64_t>(rank, 1));

    // Materialize W by breadth-first multiplication with simple reflections.
    auto refl_matrix = [&](int i) {
        std::vector<std::vector<int64_t>> m(rank, std::vector<int64_t>(rank, 0));
        for (int k = 0; k < rank; ++k) {
            m[k][k] = 1;
            m[k][i] -= rs.cartan[k][i];
        }
        return m;
    };
    auto mat_mult = [&](const auto& x, const auto& y) {
        std::vector<std::vector<int64_t>> m(rank, std::vector<int64_t>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k)
                if (x[i][k] != 0)
                    for (int j = 0; j < rank; ++j) m[i][j] += x[i][k] * y[k][j];
        return m;
    };

    std::vector<std::vector<std::vector<int64_t>>> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(refl_matrix(i));

    std::map<std::vector<std::vector<int64_t>>, int> seen;
    std::vector<std::vector<int64_t>> id(rank, std::vector<int64_t>(rank, 0));
    for (int i = 0; i < rank; ++i) id[i][i] = 1;

    rs.weyl_mat.push_back(id);
    rs.weyl_elements.push_back(WeylElement{0, {}, 0});
    seen[id] = 0;
    for (size_t head = 0; head < rs.weyl_mat.size(); ++head) {
        for (int i = 0; i < rank; ++i) {
            // append s_i on the right: w s_i acts as mat(w) * mat(s_i)
            auto m = mat_mult(rs.weyl_mat[head], gens[i]);
            if (seen.count(m)) continue;
            int idx = static_cast<int>(rs.weyl_mat.size());
            seen[m] = idx;
            rs.weyl_mat.push_back(m);
            WeylElement e;
            e.index = idx;
            e.reduced_word = rs.weyl_elements[head].reduced_word;
            e.reduced_word.push_back(i);
            e.length = rs.weyl_elements[head].length + 1;
            rs.weyl_elements.push_back(e);
        }
    }
    const int n = static_cast<int>(rs.weyl_elements.size());

    rs.mult_table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rs.mult_table[a][b] = seen.at(mat_mult(rs.weyl_mat[a], rs.weyl_mat[b]));
    rs.inverse_table.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rs.mult_table[a][b] == 0) rs.inverse_table[a] = b;

    rs.simple_reflection.assign(rank, 0);
    for (int i = 0; i < rank; ++i) rs.simple_reflection[i] = seen.at(gens[i]);

    for (int b = 0; b < rs.num_positive_roots(); ++b) {
        std::vector<std::vector<int64_t>> m(rank, std::vector<int64_t>(rank, 0));
        const auto beta_fw = rs.positive_roots_fw[b];
        for (int k = 0; k < rank; ++k) {
            m[k][k] = 1;
            for (int j = 0; j < rank; ++j) m[k][j] -= beta_fw.coords[k] * rs.coroot_coords[b][j];
        }
        auto it = seen.find(m);
        if (it == seen.end()) throw internal_error("reflection matrix not found in W");
        rs.reflection_of_root.push_back(it->second);
    }

    int maxlen = -1;
    for (const auto& e : rs.weyl_elements)
        if (e.length > maxlen) {
            maxlen = e.length;
            rs.longest_element = e.index;
        }
    if (maxlen != rs.num_positive_roots())
        throw internal_error("l(w0) != #positive roots");

    return rs;
}

WeightVector dot_action_index(const RootSystemData& rs, int widx, const WeightVector& v) {
    return rs.apply_index(widx, v + rs.rho) - rs.rho;
}

WeightVector dot_action(const RootSystemData& rs, const WeylElement& w, const WeightVector& v) {
    return dot_action_index(rs, w.index, v);
}

std::optional<std::pair<WeylElement, WeightVector>> dominant_dot_representative(
    const RootSystemData& rs, const WeightVector& lambda) {
    WeightVector mu = lambda + rs.rho;
    for (int b = 0; b < rs.num_positive_roots(); ++b)
        if (rs.root_pairing(mu, b) == 0) return std::nullopt;

    // descend to the dominant chamber, recording the word
    int v = 0;  // accumulated element acting as mu -> dominant
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (mu.coords[i] < 0) {
                mu = rs.apply_index(rs.simple_reflection[i], mu);
                v = rs.mult_table[rs.simple_reflection[i]][v];
                moved = true;
            }
        }
    }
    int w = rs.inverse_table[v];
    WeightVector nu = mu - rs.rho;
    return std::make_pair(rs.weyl_elements[w], nu);
}

std::map<int, std::vector<WeylElement>> weyl_elements_by_length(const RootSystemData& rs) {
    std::map<int, std::vector<WeylElement>> out;
    for (const auto& e : rs.weyl_elements) out[e.length].push_back(e);
    return out;
}

Int weyl_dimension(const RootSystemData& rs, const WeightVector& nu) {
    if (!rs.is_dominant(nu)) throw invalid_argument("weyl_dimension requires a dominant weight");
    Int num = 1, den = 1;
    WeightVector shifted = nu + rs.rho;
    for (int b = 0; b < rs.num_positive_roots(); ++b) {
        num *= Int(rs.root_pairing(shifted, b));
        den *= Int(rs.root_pairing(rs.rho, b));
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<int64_t> coset_length_census(const RootSystemData& rs, const std::vector<int>& levi) {
    // w is a minimal-length representative iff w^{-1}(alpha_i) > 0 for all Levi i,
    // equivalently w(rho)... we test directly on the simple roots.
    std::vector<int64_t> counts(rs.num_positive_roots() + 1, 0);
    for (const auto& e : rs.weyl_elements) {
        bool minimal = true;
        int inv = rs.inverse_table[e.index];
        for (int i : levi) {
            WeightVector img = rs.apply_index(inv, rs.positive_roots_fw[i]);
            // img is a root; positive iff its alpha-expansion is nonnegative
            auto alpha = rs.fw_to_alpha(img);
            if (!alpha) throw internal_error("root image not integral");
            bool pos = std::all_of(alpha->begin(), alpha->end(), [](int64_t c) { return c >= 0; });
            if (!pos) {
                minimal = false;
                break;
            }
        }
        if (minimal) counts[e.length] += 1;
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

}  // namespace qcenter
