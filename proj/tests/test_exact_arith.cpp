#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pushtasep/sparse.hpp"

using namespace pushtasep;

namespace {
Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_str(parse_rational("3/6")) == "1/2");
    CHECK(rational_str(parse_rational("-4/2")) == "-2");
    CHECK(rational_str(parse_rational("7")) == "7");
    CHECK(rational_str(rat(0)) == "0");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("2.5"));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("polynomial evaluation") {
    Rational t = rat(1, 2);
    PolyZ p = PolyZ::linear(rat(1), -t);  // 1 - t z
    CHECK(p.eval(rat(2)) == rat(0));

    PolyZ q = PolyZ::linear(rat(1), rat(-1)) * PolyZ::linear(rat(1), rat(-1, 3));
    CHECK(q.eval(rat(0)) == rat(1));

    PolyZ r(std::vector<Rational>{rat(2, 3), rat(-1), rat(5)});
    CHECK(r.eval(rat(1, 2)) == rat(17, 12));
}

TEST_CASE("derivative at zero is the linear coefficient") {
    Rational t = rat(3, 7);
    CHECK(PolyZ::linear(rat(1), -t).derivative_at_zero() == -t);

    Rational x1 = rat(2), x2 = rat(3);
    PolyZ p = PolyZ::linear(rat(1), rat(-1) / x1) * PolyZ::linear(rat(1), rat(-1) / x2);
    CHECK(p.derivative_at_zero() == -(rat(1) / x1 + rat(1) / x2));

    CHECK(PolyZ(rat(7)).derivative_at_zero() == rat(0));
}

TEST_CASE("matrix product") {
    auto id = SparseMatrix<Rational>::identity(3);
    SparseMatrix<Rational> b(3, 3);
    b.set(0, 1, rat(4));
    b.set(2, 0, rat(-1, 2));
    CHECK(mat_mul(id, b) == b);

    SparseMatrix<Rational> p(2, 2), q(2, 2);
    p.set(0, 0, rat(1));
    p.set(0, 1, rat(2));
    p.set(1, 1, rat(1));
    q.set(0, 0, rat(1));
    q.set(1, 0, rat(3));
    q.set(1, 1, rat(1));
    auto pq = mat_mul(p, q);
    CHECK(pq.get(0, 0) == rat(7));
    CHECK(pq.get(0, 1) == rat(2));
    CHECK(pq.get(1, 0) == rat(3));
    CHECK(pq.get(1, 1) == rat(1));

    // cyclic shift times its L-1 fold power is the identity
    const std::size_t L = 5;
    SparseMatrix<Rational> shift(L, L);
    for (std::size_t i = 0; i < L; ++i) shift.set((i + 1) % L, i, rat(1));
    auto acc = SparseMatrix<Rational>::identity(L);
    for (std::size_t i = 0; i < L - 1; ++i) acc = mat_mul(acc, shift);
    CHECK(mat_mul(shift, acc) == SparseMatrix<Rational>::identity(L));

    SparseMatrix<Rational> bad(2, 3);
    CHECK_THROWS_AS(mat_mul(bad, bad), std::invalid_argument);
}

TEST_CASE("commutators of equal and diagonal matrices vanish") {
    SparseMatrix<Rational> a(3, 3);
    a.set(0, 1, rat(2));
    a.set(1, 2, rat(-3));
    a.set(2, 2, rat(5));
    CHECK(commutator(a, a).is_zero());

    SparseMatrix<Rational> d1(3, 3), d2(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        d1.set(i, i, rat(static_cast<long>(i) + 2));
        d2.set(i, i, rat(7 - static_cast<long>(i)));
    }
    CHECK(commutator(d1, d2).is_zero());
}

TEST_CASE("kernel of identity and zero matrices") {
    CHECK(kernel_basis(SparseMatrix<Rational>::identity(4)).empty());

    SparseMatrix<Rational> zero(3, 3);
    auto basis = kernel_basis(zero);
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(basis[i][j] == (i == j ? rat(1) : rat(0)));
}

TEST_CASE("kernel vectors annihilate and count matches the rank deficiency") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t nr = 3 + trial % 3, nc = 3 + (trial / 3) % 3;
        SparseMatrix<Rational> a(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) {
                int v = entry(rng);
                if (v != 0 && trial % 2 == 0) a.set(i, j, rat(v, 1 + (v > 0 ? v : -v)));
                else if (v != 0) a.set(i, j, rat(v));
            }
        auto kern = kernel_basis(a);
        CHECK(kern.size() == nc - matrix_rank(a));
        for (const auto& v : kern) {
            auto av = mat_apply(a, v);
            for (const auto& c : av) CHECK(is_zero(c));
            bool normalized = false;
            for (const auto& c : v)
                if (!is_zero(c)) {
                    CHECK(c == rat(1));
                    normalized = true;
                    break;
                }
            CHECK(normalized);
        }
    }
}

TEST_CASE("a nonzero polynomial of degree d has at most d roots") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + trial % 5;
        std::vector<Rational> coeffs(d + 1);
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = rat(entry(rng));
            if (!is_zero(c)) nonzero = true;
        }
        if (!nonzero) coeffs[d] = rat(1);
        PolyZ p(coeffs);
        int roots = 0;
        for (int pt = 0; pt <= p.degree(); ++pt)
            if (is_zero(p.eval(rat(pt)))) ++roots;
        CHECK(roots <= p.degree());
    }
}

TEST_CASE("matrix algebra laws on random instances") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        SparseMatrix<Rational> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                int v = entry(rng);
                if (v != 0) m.set(i, j, rat(v));
            }
        return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(2, 3), b = random_matrix(3, 4), c = random_matrix(4, 2);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        auto u = random_matrix(3, 4);
        CHECK(mat_mul(a, b + u) == mat_mul(a, b) + mat_mul(a, u));
    }
}

TEST_CASE("poly matrices promote and evaluate consistently") {
    SparseMatrix<Rational> a(2, 2);
    a.set(0, 1, rat(3, 2));
    SparseMatrix<PolyZ> p(2, 2);
    p.set(1, 0, PolyZ::linear(rat(1), rat(2)));
    auto prod = mat_mul(a, p);
    CHECK(prod.get(0, 0) == PolyZ::linear(rat(3, 2), rat(3)));
    CHECK(eval_at(prod, rat(2)).get(0, 0) == rat(15, 2));
    CHECK(coeff_matrix(prod, 1).get(0, 0) == rat(3));
}
