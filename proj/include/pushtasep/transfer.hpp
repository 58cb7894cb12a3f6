#pragma once

#include <optional>

#include "pushtasep/processes.hpp"
#include "pushtasep/rmatrix.hpp"

namespace pushtasep {

enum class FusionKind { Antisymmetric, Symmetric };

// Auxiliary-space choice for a transfer matrix. Antisymmetric requires
// 0 <= k <= n+1; symmetric allows any k >= 0. When no sector is given the
// matrix lives on the full tensor space.
struct TransferSpec {
    FusionKind kind = FusionKind::Antisymmetric;
    int k = 0;
    ModelParams params;
    std::optional<SectorSpec> sector;

    TransferSpec(FusionKind kind_, int k_, ModelParams params_,
                 std::optional<SectorSpec> sector_ = std::nullopt);
};

StateBasis basis_for(const TransferSpec& spec);

// T^k(z) / T_k(z) with entries as polynomials in z (degree <= L). The
// carrier sum is a walk: for a fixed (source, target) pair the carrier
// after each site is forced by weight conservation.
SparseMatrix<PolyZ> transfer_poly(const TransferSpec& spec, const StateBasis& basis);

SparseMatrix<Rational> transfer_matrix(const TransferSpec& spec, const StateBasis& basis,
                                       const Rational& z);

// Matrix of degree-1 coefficients, i.e. the z-derivative at z = 0.
SparseMatrix<Rational> transfer_dot_zero(const TransferSpec& spec, const StateBasis& basis);

// Single-site term of the derivative decomposition: the cyclic product of
// S(0) factors with S'(0) inserted at site j, summed over carriers, times
// 1/x_j. Summing over j recovers the (target, source) entry of
// transfer_dot_zero. Antisymmetric auxiliary space, level k.
Rational transfer_dot_site(int k, const ModelParams& params, int j, const Config& sigma,
                           const Config& target);

// Off-diagonal skeleton of a transition channel (sigma -> target with the
// derivative insertion at site j): moved types, arrow sequence, depth,
// minimal carriers, per-species ell counts. nullopt when the support
// conditions fail (the channel vanishes identically).
struct TransitionSignature {
    std::vector<int> moved_types;                  // h_0 < ... < h_g
    std::vector<std::pair<int, int>> arrows;       // (r_i, s_i), cyclic order from j
    std::vector<int> arrow_sites;                  // site of each arrow, starting at j
    int depth = 0;                                 // minimal carrier capacity d
    std::vector<Multiplicity> minimal_carriers;    // a_0..a_g, level d
    std::vector<int> ell;                          // ell_{h_i} for i = 0..g
    bool wanted = false;                           // h_0 == 0
};

std::optional<TransitionSignature> transition_signature(const Config& sigma, const Config& target,
                                                        int j);

// D_m^{-1} sum_k (-1)^{k-1} T^k'(0) - (sum_j 1/x_j) Id on the sector.
SparseMatrix<Rational> baxter_H(const ModelParams& params, const SectorSpec& spec,
                                const StateBasis& basis);

// sum_k (-zeta)^{k-1} T^k'(0); zeta must be nonzero (the k = 0 term
// carries (-zeta)^{-1}).
SparseMatrix<Rational> zeta_sum(const ModelParams& params, const SectorSpec& spec,
                                const StateBasis& basis, const Rational& zeta);

// Stationary eigenvalue Lambda^k(z) of T^k(z) on the sector.
Rational stationary_eigenvalue(int k, const ModelParams& params, const SectorSpec& spec,
                               const Rational& z);
PolyZ stationary_eigenvalue_poly(int k, const ModelParams& params, const SectorSpec& spec);

}  // namespace pushtasep
