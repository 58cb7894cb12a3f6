#pragma once

#include <map>

#include "pushtasep/combinatorics.hpp"
#include "pushtasep/poly.hpp"
#include "pushtasep/sparse.hpp"

namespace pushtasep {

// 3D L-operator route to S^{k,1}(z). The Fock trace of a word of
// q-oscillator entries is normal-ordered exactly: acting on |m> turns the
// word into a polynomial in Q = q^m with Laurent-in-q coefficients, and
// each Q-degree d then sums the geometric series sum_m (q^d z)^m.
//
// q is never materialized as a number on the S(z) path: elements are
// carried as rational functions of q, the gauge factor (-q)^{k-1+eta} is
// applied symbolically, and only even powers of q may survive, which are
// substituted by q^2 = t.

// Laurent polynomial in q: exponent -> coefficient.
using QLaurent = std::map<int, Rational>;

// Trace data for one L-operator word: Q-degree -> Laurent coefficient.
// Empty map means the trace is zero (non-conserving word or net shift).
std::map<int, QLaurent> fock_word_trace_data(const Multiplicity& a, const Multiplicity& b,
                                             const Multiplicity& i, const Multiplicity& j);

// Tr_F(z^h L^{a_n,b_n}_{i_n,j_n} ... L^{a_0,b_0}_{i_0,j_0}) at rational q.
// Rejects q = 0 and any vanishing geometric denominator 1 - q^beta z.
Rational l_trace(int n, const Rational& q, const Rational& z, const Multiplicity& a,
                 const Multiplicity& b, const Multiplicity& i, const Multiplicity& j);

// S^{k,1}(z) from the gauge-transformed trace, with q^2 := t. Throws if an
// odd power of q survives (that would be an implementation bug) or if z
// hits a trace pole.
SparseMatrix<Rational> s_k1_3d(int n, int k, const Rational& t, const Rational& z);

Rational s_k1_3d_element(int n, int k, const Multiplicity& a, int b, const Multiplicity& i, int j,
                         const Rational& t, const Rational& z);

}  // namespace pushtasep
