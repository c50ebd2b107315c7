#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcenter/errors.hpp"
#include "qcenter/numeric.hpp"

namespace qcenter {

// Integral weight in fundamental-weight coordinates: coords[i] = <w, coroot_i>.
struct WeightVector {
    std::vector<int64_t> coords;

    WeightVector() = default;
    explicit WeightVector(std::vector<int64_t> c) : coords(std::move(c)) {}

    bool operator==(const WeightVector& o) const { return coords == o.coords; }
    bool operator!=(const WeightVector& o) const { return coords != o.coords; }
    bool operator<(const WeightVector& o) const { return coords < o.coords; }

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    bool is_zero() const;
    std::string str() const;  // "[a,b,...]"
};

struct WeylElement {
    int index = 0;                // position in RootSystemData::weyl_elements
    std::vector<int> reduced_word;  // simple reflection indices, 0-based
    int length = 0;
};

struct RootSystemData {
    char type_letter = 'A';
    int rank = 0;

    // cartan[i][j] = <alpha_j, coroot_i>
    std::vector<std::vector<int64_t>> cartan;
    std::vector<int64_t> sym_d;  // minimal d_i making (d_i a_ij) symmetric

    // Positive roots in simple-root coordinates, sorted by (height, then
    // reverse-lexicographic), so simple roots come first in index order.
    std::vector<std::vector<int64_t>> positive_roots;
    std::vector<int64_t> root_height;
    std::vector<int64_t> root_d;  // (beta,beta)/2, short roots normalized to 1
    std::vector<WeightVector> positive_roots_fw;  // same roots, fundamental coords
    // coroot_coords[b][i]: integer expansion of coroot(beta_b) over simple coroots
    std::vector<std::vector<int64_t>> coroot_coords;
    std::map<std::vector<int64_t>, int> root_index;  // alpha-coords -> index

    WeightVector rho;  // (1,...,1)

    // The full Weyl group, materialized.
    std::vector<WeylElement> weyl_elements;                   // sorted by length (BFS order)
    std::vector<std::vector<std::vector<int64_t>>> weyl_mat;  // action on fundamental coords
    std::vector<std::vector<int>> mult_table;                 // [a][b] -> index of w_a w_b
    std::vector<int> inverse_table;
    std::vector<int> simple_reflection;  // index of s_i
    std::vector<int> reflection_of_root; // index of s_beta per positive root
    int longest_element = 0;

    // --- queries ---
    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
    int64_t pairing(const WeightVector& w, int coroot_simple) const {
        return w.coords[coroot_simple];
    }
    // <w, coroot(beta_b)> for the b-th positive root
    int64_t root_pairing(const WeightVector& w, int b) const;
    WeightVector alpha_to_fw(const std::vector<int64_t>& alpha) const;
    // Exact inverse-Cartan conversion; nullopt when the result is not integral.
    std::optional<std::vector<int64_t>> fw_to_alpha(const WeightVector& w) const;
    WeightVector apply(const WeylElement& w, const WeightVector& v) const;
    WeightVector apply_index(int widx, const WeightVector& v) const;
    bool is_dominant(const WeightVector& w) const;
    std::string root_label(int b) const;  // digit string of alpha-coords, e.g. "12" for a1+2a2
};

RootSystemData build_root_system(char type_letter, int rank);

// w . v = w(v + rho) - rho
WeightVector dot_action(const RootSystemData& rs, const WeylElement& w, const WeightVector& v);
WeightVector dot_action_index(const RootSystemData& rs, int widx, const WeightVector& v);

// For lambda with regular lambda+rho, the unique (w, nu) with nu dominant and
// w . nu = lambda; empty when lambda+rho lies on a wall.
std::optional<std::pair<WeylElement, WeightVector>> dominant_dot_representative(
    const RootSystemData& rs, const WeightVector& lambda);

std::map<int, std::vector<WeylElement>> weyl_elements_by_length(const RootSystemData& rs);

// dim of the simple module with dominant highest weight nu (Weyl dimension formula).
Int weyl_dimension(const RootSystemData& rs, const WeightVector& nu);

// Number of minimal-length coset representatives of W_levi \ W at each length;
// these count the cells of the partial flag variety cut out by the Levi subset.
std::vector<int64_t> coset_length_census(const RootSystemData& rs, const std::vector<int>& levi);

}  // namespace qcenter
