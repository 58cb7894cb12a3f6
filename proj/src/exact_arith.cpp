#include <cctype>

#include "pushtasep/sparse.hpp"

namespace pushtasep {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start == part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw std::invalid_argument("parse_rational: bad integer '" + s + "'");
    } else {
        if (!digits_ok(s.substr(0, slash), true) || !digits_ok(s.substr(slash + 1), false))
            throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    }
    Rational r(s);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero(base)) throw std::domain_error("rational_pow: 0 to a negative power");
    Rational acc(1), b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return invert ? Rational(1) / acc : acc;
}

namespace {

struct Elimination {
    std::vector<std::vector<Integer>> m;           // row-scaled integer copy, eliminated in place
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

// Forward pass of fraction-free Gaussian elimination. Rows are cleared
// of denominators first (row scaling does not change the kernel).
Elimination eliminate(const SparseMatrix<Rational>& a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    Elimination e;
    e.m.assign(nr, std::vector<Integer>(nc, Integer(0)));
    std::vector<Integer> row_lcm(nr, Integer(1));
    for (const auto& [k, v] : a.entries()) {
        Integer den = v.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), row_lcm[k.first].get_mpz_t(), den.get_mpz_t());
        row_lcm[k.first] = row_lcm[k.first] / g * den;
    }
    for (const auto& [k, v] : a.entries())
        e.m[k.first][k.second] = v.get_num() * (row_lcm[k.first] / v.get_den());

    Integer prev(1);
    std::size_t prow = 0;
    for (std::size_t col = 0; col < nc && prow < nr; ++col) {
        std::size_t sel = prow;
        while (sel < nr && sgn(e.m[sel][col]) == 0) ++sel;
        if (sel == nr) continue;
        if (sel != prow) std::swap(e.m[sel], e.m[prow]);
        const Integer pivot = e.m[prow][col];
        for (std::size_t r = prow + 1; r < nr; ++r) {
            const Integer factor = e.m[r][col];
            for (std::size_t c = col + 1; c < nc; ++c) {
                Integer num = e.m[r][c] * pivot - factor * e.m[prow][c];
                mpz_divexact(e.m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            e.m[r][col] = 0;
        }
        prev = pivot;
        e.pivots.emplace_back(prow, col);
        ++prow;
    }
    return e;
}

}  // namespace

std::size_t matrix_rank(const SparseMatrix<Rational>& a) { return eliminate(a).pivots.size(); }

std::vector<RationalVector> kernel_basis(const SparseMatrix<Rational>& a) {
    const std::size_t nc = a.cols();
    Elimination e = eliminate(a);

    std::vector<bool> is_pivot_col(nc, false);
    for (const auto& [r, c] : e.pivots) is_pivot_col[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        RationalVector v(nc, Rational(0));
        v[free_col] = 1;
        for (std::size_t p = e.pivots.size(); p-- > 0;) {
            const auto [row, col] = e.pivots[p];
            Rational acc(0);
            for (std::size_t c = col + 1; c < nc; ++c) {
                if (sgn(e.m[row][c]) == 0 || is_zero(v[c])) continue;
                acc += Rational(e.m[row][c]) * v[c];
            }
            v[col] = -acc / Rational(e.m[row][col]);
        }
        for (auto& x : v)
            if (!is_zero(x)) {  // scale so the first nonzero coordinate is 1
                Rational lead = x;
                for (auto& y : v) y /= lead;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pushtasep
