#pragma once

#include "pushtasep/combinatorics.hpp"
#include "pushtasep/poly.hpp"
#include "pushtasep/sparse.hpp"

namespace pushtasep {

// R-matrix S^{k,1}(z) on V^k (x) V^1. Element conventions throughout:
// horizontal in = i (level k), vertical in = j, horizontal out = a,
// vertical out = b. Matrices are laid out with rows (a,b) and columns
// (i,j), both lexicographic: row = a_index*(n+1) + b over
// enumerate_hardcore(n,k) order.

// Basic k = 1 weights.
Rational s11_element(const Rational& t, const Rational& z, int a, int b, int i, int j);

// Closed form for general k; zero unless a + e_b = i + e_j.
Rational s_k1_closed_element(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                             const Rational& t, const Rational& z);

// Same element as a polynomial in z (degree <= 1).
PolyZ s_k1_closed_element_poly(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                               const Rational& t);

SparseMatrix<Rational> s_k1_closed(int n, int k, const Rational& t, const Rational& z);

// Antisymmetric fusion of k staggered S^{1,1} factors, normalized by
// d_k(z) = prod_{r=1..k-1} (1 - t^{-r} z). Rejects z in {t,...,t^{k-1}}.
SparseMatrix<Rational> s_k1_fused(int n, int k, const Rational& t, const Rational& z);

// Symmetric-fusion weights on compositions (level k >= 0).
Rational sym_s_element(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                       const Rational& t, const Rational& z);
PolyZ sym_s_element_poly(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                         const Rational& t);
SparseMatrix<Rational> sym_s_matrix(int n, int k, const Rational& t, const Rational& z);

// z = 0 special values and first derivatives of the closed form, used by
// the per-site decomposition of the differentiated transfer matrix.
Rational s_k1_at_zero(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                      const Rational& t);
Rational s_k1_dot_at_zero(int n, const Multiplicity& a, int b, const Multiplicity& i, int j,
                          const Rational& t);

}  // namespace pushtasep
