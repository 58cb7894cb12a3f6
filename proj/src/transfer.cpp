#include "pushtasep/transfer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pushtasep {

TransferSpec::TransferSpec(FusionKind kind_, int k_, ModelParams params_,
                           std::optional<SectorSpec> sector_)
    : kind(kind_), k(k_), params(std::move(params_)), sector(std::move(sector_)) {
    if (kind == FusionKind::Antisymmetric && (k < 0 || k > params.n + 1))
        throw std::invalid_argument("TransferSpec: antisymmetric level needs 0 <= k <= n+1");
    if (kind == FusionKind::Symmetric && k < 0)
        throw std::invalid_argument("TransferSpec: symmetric level needs k >= 0");
    if (sector && (sector->n != params.n || sector->L != params.L))
        throw std::invalid_argument("TransferSpec: sector does not match params");
}

StateBasis basis_for(const TransferSpec& spec) {
    return spec.sector ? StateBasis(*spec.sector) : StateBasis(spec.params.n, spec.params.L);
}

namespace {

// Carrier walk shared by every transfer-matrix flavor. For each starting
// carrier the chain a_{r+1} = a_r + e_{sigma_r} - e_{target_r} is forced;
// walks leaving the carrier set are pruned, and the cyclic closure
// a_{L+1} = a_1 keeps only genuine trace terms.
template <typename S, typename VertexFn>
S pair_entry(const std::vector<Multiplicity>& carriers, bool hardcore, const Config& sigma,
             const Config& target, VertexFn vertex) {
    const int L = static_cast<int>(sigma.size());
    S total(0);
    for (const auto& start : carriers) {
        Multiplicity a = start;
        S prod(1);
        bool dead = false;
        for (int r = 0; r < L && !dead; ++r) {
            Multiplicity next = a;
            ++next[sigma[r]];
            --next[target[r]];
            if (next[target[r]] < 0 || (hardcore && next[sigma[r]] > 1)) {
                dead = true;
                break;
            }
            prod *= vertex(r, next, target[r], a, sigma[r]);
            if (pushtasep::is_zero(prod)) dead = true;
            a = std::move(next);
        }
        if (!dead && a == start) total += prod;
    }
    return total;
}

template <typename S, typename VertexFn>
SparseMatrix<S> assemble(const StateBasis& basis, const std::vector<Multiplicity>& carriers,
                         bool hardcore, VertexFn vertex) {
    const std::size_t dim = basis.size();
    SparseMatrix<S> m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const Config& sigma = basis.state(col);
        for (std::size_t row = 0; row < dim; ++row) {
            S v = pair_entry<S>(carriers, hardcore, sigma, basis.state(row), vertex);
            if (!pushtasep::is_zero(v)) m.set(row, col, v);
        }
    }
    return m;
}

std::vector<Multiplicity> carriers_for(const TransferSpec& spec) {
    return spec.kind == FusionKind::Antisymmetric
               ? enumerate_hardcore(spec.params.n, spec.k)
               : enumerate_compositions(spec.params.n, spec.k);
}

}  // namespace

SparseMatrix<PolyZ> transfer_poly(const TransferSpec& spec, const StateBasis& basis) {
    const auto& params = spec.params;
    const bool antisym = spec.kind == FusionKind::Antisymmetric;
    auto vertex = [&](int r, const Multiplicity& aout, int b, const Multiplicity& ain, int j) {
        // spectral point z / x_{r+1}: substitute z -> z/x into the degree<=1 element
        PolyZ p = antisym ? s_k1_closed_element_poly(params.n, aout, b, ain, j, params.t)
                          : sym_s_element_poly(params.n, aout, b, ain, j, params.t);
        return PolyZ(std::vector<Rational>{p.coeff(0), p.coeff(1) / params.x[r]});
    };
    return assemble<PolyZ>(basis, carriers_for(spec), antisym, vertex);
}

SparseMatrix<Rational> transfer_matrix(const TransferSpec& spec, const StateBasis& basis,
                                       const Rational& z) {
    const auto& params = spec.params;
    const bool antisym = spec.kind == FusionKind::Antisymmetric;
    auto vertex = [&](int r, const Multiplicity& aout, int b, const Multiplicity& ain, int j) {
        Rational zr = z / params.x[r];
        return antisym ? s_k1_closed_element(params.n, aout, b, ain, j, params.t, zr)
                       : sym_s_element(params.n, aout, b, ain, j, params.t, zr);
    };
    return assemble<Rational>(basis, carriers_for(spec), antisym, vertex);
}

SparseMatrix<Rational> transfer_dot_zero(const TransferSpec& spec, const StateBasis& basis) {
    return coeff_matrix(transfer_poly(spec, basis), 1);
}

Rational transfer_dot_site(int k, const ModelParams& params, int j, const Config& sigma,
                           const Config& target) {
    if (sigma.size() != target.size() || static_cast<int>(sigma.size()) != params.L)
        throw std::invalid_argument("transfer_dot_site: configuration length mismatch");
    if (j < 0 || j >= params.L) throw std::invalid_argument("transfer_dot_site: site out of range");
    if (config_multiplicities(sigma, params.n) != config_multiplicities(target, params.n))
        throw std::invalid_argument("transfer_dot_site: configurations not in the same sector");
    auto vertex = [&](int r, const Multiplicity& aout, int b, const Multiplicity& ain, int jj) {
        return r == j ? s_k1_dot_at_zero(params.n, aout, b, ain, jj, params.t)
                      : s_k1_at_zero(params.n, aout, b, ain, jj, params.t);
    };
    Rational v = pair_entry<Rational>(enumerate_hardcore(params.n, k), true, sigma, target, vertex);
    return v / params.x[j];
}

std::optional<TransitionSignature> transition_signature(const Config& sigma, const Config& target,
                                                        int j) {
    const int L = static_cast<int>(sigma.size());
    if (static_cast<int>(target.size()) != L) throw std::invalid_argument("transition_signature: lengths differ");
    if (sigma == target) throw std::invalid_argument("transition_signature: need sigma != target");
    {
        const int width = 1 + std::max(*std::max_element(sigma.begin(), sigma.end()),
                                       *std::max_element(target.begin(), target.end()));
        if (config_multiplicities(sigma, width - 1) != config_multiplicities(target, width - 1))
            throw std::invalid_argument("transition_signature: configurations not in the same sector");
    }

    std::vector<int> moved_sites;
    for (int step = 0; step < L; ++step) {
        int site = (j + step) % L;
        if (sigma[site] != target[site]) moved_sites.push_back(site);
    }
    if (moved_sites.empty() || moved_sites.front() != j) return std::nullopt;

    std::set<int> r_types, s_types;
    for (int site : moved_sites) {
        if (!r_types.insert(sigma[site]).second) return std::nullopt;  // a type moved twice
        if (!s_types.insert(target[site]).second) return std::nullopt;
    }
    if (r_types != s_types) return std::nullopt;

    std::vector<int> h(r_types.begin(), r_types.end());  // h_0 < ... < h_g
    const int g = static_cast<int>(h.size()) - 1;
    auto rank_of = [&](int type) {
        return static_cast<int>(std::lower_bound(h.begin(), h.end(), type) - h.begin());
    };

    if (sigma[j] != h[g] || target[j] != h[0]) return std::nullopt;
    for (std::size_t i = 1; i < moved_sites.size(); ++i) {
        int site = moved_sites[i];
        if (rank_of(target[site]) != rank_of(sigma[site]) + 1) return std::nullopt;
    }

    TransitionSignature sig;
    sig.moved_types = h;
    sig.arrow_sites = moved_sites;
    for (int site : moved_sites) sig.arrows.emplace_back(sigma[site], target[site]);
    sig.wanted = (h[0] == 0);

    const int width = 1 + std::max(*std::max_element(sigma.begin(), sigma.end()),
                                   *std::max_element(target.begin(), target.end()));
    Multiplicity a0(width, 0);
    a0[target[j]] = 1;  // {s_0}
    for (std::size_t i = 1; i < moved_sites.size(); ++i) {
        int s_i = target[moved_sites[i]];
        bool seen = false;
        for (std::size_t p = 0; p < i; ++p)
            if (sigma[moved_sites[p]] == s_i) seen = true;
        if (!seen) a0[s_i] = 1;
    }
    sig.depth = multiplicity_level(a0);

    Multiplicity a = a0;
    sig.minimal_carriers.push_back(a);
    for (std::size_t i = 0; i < moved_sites.size(); ++i) {
        ++a[sigma[moved_sites[i]]];
        --a[target[moved_sites[i]]];
        if (*std::min_element(a.begin(), a.end()) < 0 || *std::max_element(a.begin(), a.end()) > 1)
            throw std::logic_error("transition_signature: minimal carrier left the hardcore set");
        if (i + 1 < moved_sites.size()) sig.minimal_carriers.push_back(a);
    }
    if (a != a0) throw std::logic_error("transition_signature: carrier recursion failed to close");

    for (int type : h) {
        int p = -1, p_prime = -1;
        for (int site : moved_sites) {
            if (sigma[site] == type) p = site;
            if (target[site] == type) p_prime = site;
        }
        sig.ell.push_back(ell_count(sigma, type, p, p_prime));
    }
    return sig;
}

SparseMatrix<Rational> baxter_H(const ModelParams& params, const SectorSpec& spec,
                                const StateBasis& basis) {
    const auto constants = sector_constants(spec, params.t);
    SparseMatrix<Rational> acc(basis.size(), basis.size());
    for (int k = 0; k <= params.n + 1; ++k) {
        TransferSpec tspec(FusionKind::Antisymmetric, k, params, spec);
        SparseMatrix<Rational> dot = transfer_dot_zero(tspec, basis);
        acc += (k % 2 == 1 ? Rational(1) : Rational(-1)) * dot;
    }
    acc = rational_inv(constants.Dm) * acc;
    Rational xsum(0);
    for (const auto& xj : params.x) xsum += Rational(1) / xj;
    return acc - xsum * SparseMatrix<Rational>::identity(basis.size());
}

SparseMatrix<Rational> zeta_sum(const ModelParams& params, const SectorSpec& spec,
                                const StateBasis& basis, const Rational& zeta) {
    if (is_zero(zeta)) throw std::domain_error("zeta_sum: zeta = 0 (the k = 0 term carries zeta^{-1})");
    SparseMatrix<Rational> acc(basis.size(), basis.size());
    for (int k = 0; k <= params.n + 1; ++k) {
        TransferSpec tspec(FusionKind::Antisymmetric, k, params, spec);
        Rational coeff = rational_pow(-zeta, k - 1);
        acc += coeff * transfer_dot_zero(tspec, basis);
    }
    return acc;
}

PolyZ stationary_eigenvalue_poly(int k, const ModelParams& params, const SectorSpec& spec) {
    const auto constants = sector_constants(spec, params.t);
    std::vector<Rational> tk;
    for (int i = 1; i <= params.n; ++i) tk.push_back(rational_pow(params.t, constants.K[i]));
    Rational ek_lower = k >= 1 ? elementary_symmetric(k - 1, tk) : Rational(0);
    Rational ek = elementary_symmetric(k, tk);
    PolyZ prod_t(Rational(1)), prod_1(Rational(1));
    for (const auto& xj : params.x) {
        prod_t *= PolyZ::linear(Rational(1), -params.t / xj);
        prod_1 *= PolyZ::linear(Rational(1), Rational(-1) / xj);
    }
    return PolyZ(ek_lower) * prod_t + PolyZ(ek) * prod_1;
}

Rational stationary_eigenvalue(int k, const ModelParams& params, const SectorSpec& spec,
                               const Rational& z) {
    return stationary_eigenvalue_poly(k, params, spec).eval(z);
}

}  // namespace pushtasep
