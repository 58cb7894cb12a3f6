#include "pushtasep/processes.hpp"

#include <sstream>
#include <stdexcept>

namespace pushtasep {

ModelParams::ModelParams(int n_, int L_, Rational t_, std::vector<Rational> x_)
    : n(n_), L(L_), t(std::move(t_)), x(std::move(x_)) {
    if (L < 2) throw std::invalid_argument("ModelParams: need L >= 2");
    if (static_cast<int>(x.size()) != L) throw std::invalid_argument("ModelParams: need L inhomogeneities");
    for (const auto& xj : x)
        if (sgn(xj) <= 0) throw std::invalid_argument("ModelParams: x_j must be positive");
}

int ell_count(const Config& sigma, int h, int p, int p_prime) {
    const int L = static_cast<int>(sigma.size());
    int count = 0;
    for (int s = (p + 1) % L; s != p_prime; s = (s + 1) % L)
        if (sigma[s] < h) ++count;
    return count;
}

std::optional<TransitionRecord> transition_record(const Config& sigma, const Config& target, int j,
                                                  const ModelParams& params,
                                                  const SectorSpec& spec) {
    const int L = params.L;
    if (static_cast<int>(sigma.size()) != L || static_cast<int>(target.size()) != L)
        throw std::invalid_argument("transition_record: configuration length mismatch");
    if (config_multiplicities(sigma, params.n) != spec.m ||
        config_multiplicities(target, params.n) != spec.m)
        throw std::invalid_argument("transition_record: configurations not in the sector");

    if (target == sigma) return std::nullopt;
    if (sigma[j] < 1 || target[j] != 0) return std::nullopt;
    for (int i = 0; i < L; ++i)
        if (i != j && sigma[i] > target[i]) return std::nullopt;

    const auto constants = sector_constants(spec, params.t);
    TransitionRecord rec;
    rec.source = sigma;
    rec.target = target;
    rec.site = j;
    for (int h = 1; h <= params.n; ++h) {
        int p = -1, p_prime = -1;
        for (int i = 0; i < L; ++i) {
            if (sigma[i] == h && target[i] != h) {
                if (p >= 0) return std::nullopt;  // species h moved from two sites
                p = i;
            }
            if (target[i] == h && sigma[i] != h) {
                if (p_prime >= 0) return std::nullopt;
                p_prime = i;
            }
        }
        if (p < 0 && p_prime < 0) {
            rec.factors.emplace_back(1);  // case 1: species h untouched
            continue;
        }
        if (p < 0 || p_prime < 0) return std::nullopt;
        int ell = ell_count(sigma, h, p, p_prime);
        rec.factors.push_back((Rational(1) - params.t) * rational_pow(params.t, ell) /
                              (Rational(1) - rational_pow(params.t, constants.K[h])));
    }
    rec.rate = Rational(1) / params.x[j];
    for (const auto& w : rec.factors) rec.rate *= w;
    return rec;
}

Rational transition_rate(const Config& sigma, const Config& target, int j,
                         const ModelParams& params, const SectorSpec& spec) {
    auto rec = transition_record(sigma, target, j, params, spec);
    return rec ? rec->rate : Rational(0);
}

SparseMatrix<Rational> pushtasep_markov(const ModelParams& params, const StateBasis& basis) {
    SectorSpec spec(params.n, params.L, config_multiplicities(basis.state(0), params.n));
    const std::size_t dim = basis.size();
    SparseMatrix<Rational> h(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const Config& sigma = basis.state(col);
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col) continue;
            Rational rate(0);
            for (int j = 0; j < params.L; ++j)
                rate += transition_rate(sigma, basis.state(row), j, params, spec);
            if (!is_zero(rate)) h.set(row, col, rate);
        }
        Rational diag(0);
        for (int j = 0; j < params.L; ++j)
            if (sigma[j] >= 1) diag -= Rational(1) / params.x[j];
        if (!is_zero(diag)) h.set(col, col, diag);
    }
    return h;
}

namespace {

void cascade_rec(const Config& sigma, Config current, int mover, int from, const Rational& prob,
                 const Rational& t, std::map<Config, Rational>& out) {
    const int L = static_cast<int>(sigma.size());
    // Strictly weaker occupants ahead of the mover, in clockwise order,
    // positions taken in sigma.
    std::vector<int> targets;
    for (int step = 1; step < L; ++step) {
        int s = (from + step) % L;
        if (sigma[s] < mover) targets.push_back(s);
    }
    const int z = static_cast<int>(targets.size());
    if (z == 0)
        throw std::domain_error("cascade_distribution: no weaker occupant ahead of the mover");
    const Rational norm = Rational(1) - rational_pow(t, z);
    for (int idx = 0; idx < z; ++idx) {
        int site = targets[idx];
        Rational branch = prob * rational_pow(t, idx) * (Rational(1) - t) / norm;
        int displaced = sigma[site];
        Config next = current;
        next[site] = mover;
        if (displaced == 0)
            out[next] += branch;  // settling on a vacancy ends the cascade
        else
            cascade_rec(sigma, std::move(next), displaced, site, branch, t, out);
    }
}

}  // namespace

std::map<Config, Rational> cascade_distribution(const Config& sigma, int j, const Rational& t) {
    if (j < 0 || j >= static_cast<int>(sigma.size()))
        throw std::invalid_argument("cascade_distribution: site out of range");
    if (sigma[j] < 1) throw std::invalid_argument("cascade_distribution: no particle at the site");
    std::map<Config, Rational> out;
    Config start = sigma;
    start[j] = 0;
    cascade_rec(sigma, std::move(start), sigma[j], j, Rational(1), t, out);
    return out;
}

SparseMatrix<Rational> asep_markov(const Rational& t, const StateBasis& basis) {
    const std::size_t dim = basis.size();
    const int L = basis.L();
    SparseMatrix<Rational> h(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const Config& sigma = basis.state(col);
        for (int i = 0; i < L; ++i) {
            int alpha = sigma[i], beta = sigma[(i + 1) % L];
            if (alpha == beta) continue;
            Rational rate = alpha > beta ? t : Rational(1);
            Config swapped = sigma;
            std::swap(swapped[i], swapped[(i + 1) % L]);
            h.add_at(basis.index_of(swapped), col, rate);
            h.add_at(col, col, -rate);
        }
    }
    return h;
}

std::string markov_listing(const SparseMatrix<Rational>& m, const StateBasis& basis) {
    std::ostringstream os;
    for (std::size_t col = 0; col < m.cols(); ++col)
        for (std::size_t row = 0; row < m.rows(); ++row) {
            Rational v = m.get(row, col);
            if (is_zero(v)) continue;
            os << config_str(basis.state(col), basis.n()) << " -> "
               << config_str(basis.state(row), basis.n()) << " : " << rational_str(v) << "\n";
        }
    return os.str();
}

}  // namespace pushtasep
