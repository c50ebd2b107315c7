#include "qcenter/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qcenter {

Int rational_catalan(int64_t a, int64_t b) {
    Int num = binomial(a + b, b);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(a + b).get_mpz_t());
    if (r != 0)
        throw invalid_argument("rational Catalan number c_{" + std::to_string(a) + "," +
                               std::to_string(b) + "} is not integral");
    return q;
}

int64_t coxeter_number(const RootSystemData& rs) {
    // height of the highest root + 1
    return rs.root_height.back() + 1;
}

WeightVector fold_into_alcove(const RootSystemData& rs, const WeightVector& x_in, int64_t l) {
    WeightVector x = x_in;
    for (int guard = 0; guard < 1000000; ++guard) {
        int neg = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (x.coords[i] < 0) { neg = i; break; }
        if (neg >= 0) {
            x = rs.apply_index(rs.simple_reflection[neg], x);
            continue;
        }
        int high = -1;
        for (int b = 0; b < rs.num_positive_roots(); ++b)
            if (rs.root_pairing(x, b) > l) { high = b; break; }
        if (high < 0) return x;
        // reflection in the wall <x, coroot(beta)> = l
        int64_t excess = rs.root_pairing(x, high) - l;
        for (int i = 0; i < rs.rank; ++i)
            x.coords[i] -= excess * rs.positive_roots_fw[high].coords[i];
    }
    throw internal_error("alcove folding did not terminate");
}

std::vector<WeightVector> weight_mod_root_reps(const RootSystemData& rs) {
    // index of the root lattice in the weight lattice = |det(cartan)|
    int64_t det = 1;
    {
        std::vector<std::vector<Rat>> m(rs.rank, std::vector<Rat>(rs.rank));
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) m[i][j] = Rat(rs.cartan[i][j]);
        Rat d(1);
        for (int c = 0; c < rs.rank; ++c) {
            int piv = -1;
            for (int r = c; r < rs.rank; ++r)
                if (m[r][c] != 0) { piv = r; break; }
            if (piv < 0) { d = 0; break; }
            if (piv != c) { std::swap(m[piv], m[c]); d = -d; }
            d *= m[c][c];
            for (int r = c + 1; r < rs.rank; ++r) {
                Rat f = m[r][c] / m[c][c];
                for (int j = c; j < rs.rank; ++j) m[r][j] -= f * m[c][j];
            }
        }
        det = std::abs(static_cast<int64_t>(Rat(d).get_num().get_si()));
    }

    auto in_root_lattice = [&](const WeightVector& v) { return rs.fw_to_alpha(v).has_value(); };
    std::vector<WeightVector> reps;
    reps.push_back(WeightVector(std::vector<int64_t>(rs.rank, 0)));
    // scan small nonnegative vectors by total size until all cosets are found
    for (int64_t total = 1; static_cast<int64_t>(reps.size()) < det && total <= 4 * rs.rank;
         ++total) {
        std::vector<int64_t> v(rs.rank, 0);
        std::function<void(int, int64_t)> rec = [&](int pos, int64_t rem) {
            if (static_cast<int64_t>(reps.size()) >= det) return;
            if (pos == rs.rank) {
                if (rem != 0) return;
                WeightVector w{v};
                for (const auto& r : reps)
                    if (in_root_lattice(w - r)) return;
                reps.push_back(w);
                return;
            }
            for (int64_t c = 0; c <= rem; ++c) {
                v[pos] = c;
                rec(pos + 1, rem - c);
            }
            v[pos] = 0;
        };
        rec(0, total);
    }
    if (static_cast<int64_t>(reps.size()) != det)
        throw internal_error("failed to enumerate weight/root coset representatives");
    return reps;
}

namespace {

struct OrbitData {
    std::vector<WeightVector> alcove_reps;  // distinct folds across cosets
    int64_t size = 0;                       // restricted weights in the orbit
};

}  // namespace

BlockCensus restricted_weight_census(const RootSystemData& rs, int64_t l) {
    BlockCensus census;
    census.type_letter = rs.type_letter;
    census.rank = rs.rank;
    census.l = l;

    if (l % 2 == 0) throw invalid_argument("census requires odd l");
    if (l <= coxeter_number(rs))
        throw invalid_argument("census requires l greater than the Coxeter number " +
                               std::to_string(coxeter_number(rs)));
    const auto reps = weight_mod_root_reps(rs);
    if (std::gcd(l, static_cast<int64_t>(reps.size())) != 1)
        census.warning = "l shares a factor with the weight-lattice index " +
                         std::to_string(reps.size()) + "; counts are raw enumeration only";

    std::map<std::vector<int64_t>, OrbitData> orbits;  // canonical rep -> data
    std::vector<int64_t> mu(rs.rank, 0);
    int64_t total_weights = 1;
    for (int i = 0; i < rs.rank; ++i) total_weights *= l;
    census.num_weights = total_weights;

    for (int64_t counter = 0; counter < total_weights; ++counter) {
        int64_t c = counter;
        for (int i = 0; i < rs.rank; ++i) {
            mu[i] = c % l;
            c /= l;
        }
        WeightVector x{mu};
        x = x + rs.rho;
        std::set<std::vector<int64_t>> folds;
        for (const auto& t : reps) {
            WeightVector shifted = x;
            for (int i = 0; i < rs.rank; ++i) shifted.coords[i] += l * t.coords[i];
            folds.insert(fold_into_alcove(rs, shifted, l).coords);
        }
        auto& orbit = orbits[*folds.begin()];
        if (orbit.size == 0)
            for (const auto& f : folds) orbit.alcove_reps.push_back(WeightVector{f});
        orbit.size += 1;
    }
    census.num_orbits = static_cast<int64_t>(orbits.size());

    // classify orbits by the Levi subsets of their finite-wall representatives
    std::map<std::vector<std::vector<int>>, BlockClass> classes;
    for (const auto& [key, orbit] : orbits) {
        std::set<std::vector<int>> levi_sets;
        bool any_finite = false;
        for (const auto& rep : orbit.alcove_reps) {
            bool affine = false;
            for (int b = 0; b < rs.num_positive_roots(); ++b)
                if (rs.root_pairing(rep, b) == l) affine = true;
            if (affine) continue;
            any_finite = true;
            std::vector<int> zeros;
            for (int i = 0; i < rs.rank; ++i)
                if (rep.coords[i] == 0) zeros.push_back(i);
            levi_sets.insert(zeros);
        }
        std::vector<std::vector<int>> class_key(levi_sets.begin(), levi_sets.end());
        if (!any_finite) class_key = {{-1}};  // no purely-finite representative
        auto& cls = classes[class_key];
        cls.levis = class_key;
        cls.count += 1;
    }
    for (auto& [key, cls] : classes) {
        if (cls.levis == std::vector<std::vector<int>>{{-1}})
            cls.kind = "unclassified";
        else if (cls.levis.size() == 1 && cls.levis[0].empty())
            cls.kind = "regular";
        else if (cls.levis.size() == 1 && static_cast<int>(cls.levis[0].size()) == rs.rank)
            cls.kind = "steinberg";
        else
            cls.kind = "parabolic";
        census.classes.push_back(cls);
    }
    std::sort(census.classes.begin(), census.classes.end(),
              [](const BlockClass& a, const BlockClass& b) {
                  auto sz = [](const BlockClass& c) {
                      return c.levis.empty() ? 0 : c.levis.front().size();
                  };
                  if (sz(a) != sz(b)) return sz(a) < sz(b);
                  return a.levis < b.levis;
              });
    return census;
}

BlockCensus total_center_dimension(const RootSystemData& rs, int64_t l,
                                   const std::function<Int(const std::vector<int>&)>& block_dim) {
    if (rs.type_letter != 'A' || rs.rank > 3)
        throw invalid_argument("total center dimension is implemented for A1, A2, A3");
    BlockCensus census = restricted_weight_census(rs, l);
    census.total = 0;
    for (auto& cls : census.classes) {
        if (cls.kind == "unclassified")
            throw internal_error("orbit without a finite-wall representative");
        cls.block_dim = block_dim(cls.levis.front());
        census.total += cls.block_dim * Int(cls.count);
    }
    int64_t n = rs.rank + 1;
    census.catalan_total = rational_catalan((n + 1) * l - n, n);
    return census;
}

}  // namespace qcenter
