#pragma once

#include <utility>
#include <vector>

#include "qcenter/numeric.hpp"

namespace qcenter {

// Dense matrix over exact rationals.  Sizes here stay small (weight spaces of
// finite-dimensional modules), so a flat row-major layout is enough.
struct MatQ {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    static MatQ identity(int n);
    MatQ multiply(const MatQ& rhs) const;
};

// Exact rank by fraction-free (Bareiss) elimination: rows are scaled to
// integers first, then eliminated with exact divisions only.
int exact_rank(const MatQ& m);

// Basis of the right kernel {x : M x = 0}, via rational Gauss elimination.
std::vector<std::vector<Rat>> kernel_basis(const MatQ& m);

// Sparse column vector, terms sorted by index with no zero coefficients.
struct SparseVec {
    std::vector<std::pair<int, Rat>> terms;

    void add(int idx, const Rat& c);
    void normalize();  // sort, merge, drop zeros
    bool empty() const { return terms.empty(); }
};

// Column-major sparse matrix; used for generator actions on modules.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

    SparseVec apply(const SparseVec& v) const;
};

}  // namespace qcenter
