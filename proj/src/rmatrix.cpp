#include "pushtasep/rmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pushtasep {

Rational s11_element(const Rational& t, const Rational& z, int a, int b, int i, int j) {
    if (a == b && b == i && i == j) return Rational(1) - t * z;
    if (a == i && b == j && i != j) return (Rational(1) - z) * (i > j ? t : Rational(1));
    if (a == j && b == i && i != j) return (Rational(1) - t) * (i < j ? z : Rational(1));
    return Rational(0);
}

namespace {

bool weight_conserving(const Multiplicity& a, int b, const Multiplicity& i, int j) {
    for (std::size_t r = 0; r < a.size(); ++r) {
        int lhs = a[r] + (static_cast<int>(r) == b ? 1 : 0);
        int rhs = i[r] + (static_cast<int>(r) == j ? 1 : 0);
        if (lhs != rhs) return false;
    }
    return true;
}

int prefix_sum(const Multiplicity& v, int upto_exclusive) {
    int s = 0;
    for (int r = 0; r < upto_exclusive; ++r) s += v[r];
    return s;
}

int suffix_sum(const Multiplicity& v, int from_exclusive) {
    int s = 0;
    for (int r = from_exclusive + 1; r < static_cast<int>(v.size()); ++r) s += v[r];
    return s;
}

}  // namespace

PolyZ s_k1_closed_element_poly(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                               const Rational& t) {
    if (b < 0 || b > n || j < 0 || j > n) throw std::invalid_argument("s_k1: vertical index out of range");
    if (!weight_conserving(a, b, i, j)) return PolyZ();
    int sign_exp = prefix_sum(a, j) + prefix_sum(i, b);
    Rational pre = rational_pow(t, suffix_sum(a, j));
    if (sign_exp % 2 != 0) pre = -pre;
    // (1 - t^{a_j} z^{[b=j]}) * z^{[j>b]}
    PolyZ factor = (b == j) ? PolyZ::linear(Rational(1), -rational_pow(t, a[j]))
                            : PolyZ(Rational(1) - rational_pow(t, a[j]));
    PolyZ value = PolyZ(pre) * factor;
    if (j > b) value = value * PolyZ::variable();
    return value;
}

Rational s_k1_closed_element(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                             const Rational& t, const Rational& z) {
    return s_k1_closed_element_poly(n, a, b, i, j, t).eval(z);
}

Rational s_k1_at_zero(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                      const Rational& t) {
    return s_k1_closed_element_poly(n, a, b, i, j, t).coeff(0);
}

Rational s_k1_dot_at_zero(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                          const Rational& t) {
    return s_k1_closed_element_poly(n, a, b, i, j, t).coeff(1);
}

namespace {

template <typename ElementFn>
SparseMatrix<Rational> assemble(int n, const std::vector<Multiplicity>& arrays, ElementFn element) {
    const std::size_t dim = arrays.size() * (n + 1);
    SparseMatrix<Rational> m(dim, dim);
    for (std::size_t ai = 0; ai < arrays.size(); ++ai)
        for (int b = 0; b <= n; ++b)
            for (std::size_t ii = 0; ii < arrays.size(); ++ii)
                for (int j = 0; j <= n; ++j) {
                    Rational v = element(arrays[ai], b, arrays[ii], j);
                    if (!is_zero(v)) m.set(ai * (n + 1) + b, ii * (n + 1) + j, v);
                }
    return m;
}

}  // namespace

SparseMatrix<Rational> s_k1_closed(int n, int k, const Rational& t, const Rational& z) {
    auto arrays = enumerate_hardcore(n, k);
    return assemble(n, arrays, [&](const Multiplicity& a, int b, const Multiplicity& i, int j) {
        return s_k1_closed_element(n, a, b, i, j, t, z);
    });
}

namespace {

// Signed sum over S_k of staggered S^{1,1} weights, Figure-of-(Sf) layout:
// row r (from the bottom, r = 1..k) carries spectral point t^{r-k} z,
// horizontal line I_{sigma(r)} -> A_r, vertical labels b_{r-1} -> b_r with
// b_0 = j. The intermediate labels are forced by weight conservation.
Rational fused_element(int k, const Rational& t, const Rational& z, const Tableau& A,
                       int b, const Tableau& I, int j) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Rational> spectral(k + 1);
    for (int r = 1; r <= k; ++r) spectral[r] = z * rational_pow(t, r - k);

    Rational total(0);
    if (k == 0) return (b == j) ? Rational(1) - z : Rational(0);
    do {
        int inversions = 0;
        for (int p = 0; p < k; ++p)
            for (int q = p + 1; q < k; ++q)
                if (perm[p] > perm[q]) ++inversions;
        Rational w(1);
        int vert = j;
        bool dead = false;
        for (int r = 1; r <= k && !dead; ++r) {
            int in_h = I[perm[r - 1]];
            int out_h = A[r - 1];
            int out_v;
            if (out_h == in_h)
                out_v = vert;
            else if (out_h == vert)
                out_v = in_h;
            else {
                dead = true;
                break;
            }
            w *= s11_element(t, spectral[r], out_h, out_v, in_h, vert);
            vert = out_v;
        }
        if (!dead && vert == b && !is_zero(w)) total += (inversions % 2 == 0) ? w : -w;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Rational dk(1);
    for (int r = 1; r <= k - 1; ++r) dk *= Rational(1) - rational_pow(t, -r) * z;
    if (is_zero(dk)) throw std::domain_error("s_k1_fused: z hits a pole of the d_k normalization");
    return total / dk;
}

}  // namespace

SparseMatrix<Rational> s_k1_fused(int n, int k, const Rational& t, const Rational& z) {
    if (k < 0 || k > n + 1) throw std::invalid_argument("s_k1_fused: k out of range");
    for (int r = 1; r <= k - 1; ++r)
        if (z == rational_pow(t, r))
            throw std::domain_error("s_k1_fused: z hits a pole of the d_k normalization");
    auto arrays = enumerate_hardcore(n, k);
    std::vector<Tableau> tabs;
    tabs.reserve(arrays.size());
    for (const auto& a : arrays) tabs.push_back(tableau_of(a));
    const std::size_t dim = arrays.size() * (n + 1);
    SparseMatrix<Rational> m(dim, dim);
    for (std::size_t ai = 0; ai < arrays.size(); ++ai)
        for (int b = 0; b <= n; ++b)
            for (std::size_t ii = 0; ii < arrays.size(); ++ii)
                for (int j = 0; j <= n; ++j) {
                    if (!weight_conserving(arrays[ai], b, arrays[ii], j)) continue;
                    Rational v = fused_element(k, t, z, tabs[ai], b, tabs[ii], j);
                    if (!is_zero(v)) m.set(ai * (n + 1) + b, ii * (n + 1) + j, v);
                }
    return m;
}

PolyZ sym_s_element_poly(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                         const Rational& t) {
    if (b < 0 || b > n || j < 0 || j > n) throw std::invalid_argument("sym_s: vertical index out of range");
    if (!weight_conserving(a, b, i, j)) return PolyZ();
    Rational pre = rational_pow(t, suffix_sum(i, b));
    PolyZ factor = (b == j) ? PolyZ::linear(Rational(1), -rational_pow(t, i[b]))
                            : PolyZ(Rational(1) - rational_pow(t, i[b]));
    PolyZ value = PolyZ(pre) * factor;
    if (j > b) value = value * PolyZ::variable();
    return value;
}

Rational sym_s_element(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                       const Rational& t, const Rational& z) {
    return sym_s_element_poly(n, a, b, i, j, t).eval(z);
}

SparseMatrix<Rational> sym_s_matrix(int n, int k, const Rational& t, const Rational& z) {
    if (k < 0) throw std::invalid_argument("sym_s_matrix: k must be nonnegative");
    auto arrays = enumerate_compositions(n, k);
    return assemble(n, arrays, [&](const Multiplicity& a, int b, const Multiplicity& i, int j) {
        return sym_s_element(n, a, b, i, j, t, z);
    });
}

}  // namespace pushtasep
