#pragma once

#include <map>
#include <optional>

#include "pushtasep/combinatorics.hpp"
#include "pushtasep/sparse.hpp"

namespace pushtasep {

struct ModelParams {
    int n = 0;
    int L = 0;
    Rational t;
    std::vector<Rational> x;  // site inhomogeneities, x_j > 0

    ModelParams(int n_, int L_, Rational t_, std::vector<Rational> x_);
};

// Sites strictly inside the cyclic interval (p, p') — clockwise from p,
// both endpoints excluded — whose value in sigma is smaller than h.
// The count is taken in sigma, not in the target configuration.
int ell_count(const Config& sigma, int h, int p, int p_prime);

// One admissible activation: the per-species factors w^{(j)}(h) for
// h = 1..n and the resulting rate (1/x_j) * prod_h w^{(j)}(h).
struct TransitionRecord {
    Config source;
    Config target;
    int site = 0;  // activation site, 0-based
    std::vector<Rational> factors;
    Rational rate;
};

// nullopt unless the structural conditions hold for an activation at
// site j; w(h) = (1-t) t^{ell_h} / (1 - t^{K_h}) for each moved species.
std::optional<TransitionRecord> transition_record(const Config& sigma, const Config& target, int j,
                                                  const ModelParams& params,
                                                  const SectorSpec& spec);

Rational transition_rate(const Config& sigma, const Config& target, int j,
                         const ModelParams& params, const SectorSpec& spec);

// Markov matrix on the sector basis, column convention: entry
// (target, source) is the total rate out of source into target; the
// diagonal is -sum_j [sigma_j >= 1]/x_j and every column sums to zero.
SparseMatrix<Rational> pushtasep_markov(const ModelParams& params, const StateBasis& basis);

// Exact cascade oracle from the informal dynamics: activate sigma_j, let
// each mover displace the i-th strictly weaker occupant ahead of it with
// probability t^{i-1}(1-t)/(1-t^z), stop at a vacancy. Enumerates every
// branch; probabilities over outcomes sum to 1.
std::map<Config, Rational> cascade_distribution(const Config& sigma, int j, const Rational& t);

// n-species ASEP generator: adjacent swaps (alpha,beta) -> (beta,alpha)
// at rate t^{[alpha>beta]}, periodic, same column convention.
SparseMatrix<Rational> asep_markov(const Rational& t, const StateBasis& basis);

// Human-readable "sigma -> sigma' : rate" listing, sorted by source then
// target; diagonal entries listed as "sigma -> sigma'".
std::string markov_listing(const SparseMatrix<Rational>& m, const StateBasis& basis);

}  // namespace pushtasep
