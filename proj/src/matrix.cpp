#include "qcenter/matrix.hpp"

#include <algorithm>
#include <map>

namespace qcenter {

bool MatQ::is_zero() const {
    for (const Rat& q : a)
        if (q != 0) return false;
    return true;
}

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::multiply(const MatQ& rhs) const {
    MatQ out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                const Rat& w = rhs.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

int exact_rank(const MatQ& m) {
    const int nr = m.rows, nc = m.cols;
    if (nr == 0 || nc == 0) return 0;

    // Clear denominators row by row.
    std::vector<std::vector<Int>> z(nr, std::vector<Int>(nc));
    for (int i = 0; i < nr; ++i) {
        Int lcm = 1;
        for (int j = 0; j < nc; ++j) {
            const Rat& q = m.at(i, j);
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        for (int j = 0; j < nc; ++j) {
            Rat scaled = m.at(i, j) * Rat(lcm);
            z[i][j] = scaled.get_num();
        }
    }

    // Bareiss: exact integer elimination, dividing by the previous pivot.
    int rank = 0;
    Int prev = 1;
    std::vector<int> rowperm(nr);
    for (int i = 0; i < nr; ++i) rowperm[i] = i;

    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (z[rowperm[r]][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rowperm[rank], rowperm[piv]);
        const Int& p = z[rowperm[rank]][c];
        // every remaining row is transformed, even with a zero multiplier:
        // the exact division below relies on the one-step minor invariant
        for (int r = rank + 1; r < nr; ++r) {
            auto& row = z[rowperm[r]];
            const Int mult = row[c];
            for (int j = c; j < nc; ++j) {
                Int t = p * row[j] - mult * z[rowperm[rank]][j];
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> kernel_basis(const MatQ& m) {
    const int nr = m.rows, nc = m.cols;
    MatQ w = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < nc && row < nr; ++c) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (w.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < nc; ++j) std::swap(w.at(piv, j), w.at(row, j));
        Rat inv = 1 / w.at(row, c);
        for (int j = c; j < nc; ++j) w.at(row, j) *= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == row) continue;
            Rat f = w.at(r, c);
            if (f == 0) continue;
            for (int j = c; j < nc; ++j) w.at(r, j) -= f * w.at(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }

    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseVec::add(int idx, const Rat& c) {
    if (c != 0) terms.emplace_back(idx, c);
}

void SparseVec::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rat>> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second == 0; }),
              out.end());
    terms = std::move(out);
}

SparseVec SparseMat::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [idx, c] : v.terms)
        for (const auto& [row, w] : col[idx].terms) out.add(row, c * w);
    out.normalize();
    return out;
}

}  // namespace qcenter
