#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pushtasep/transfer.hpp"

namespace pushtasep {

// Negative-control hook: adds +1 to one entry of the suite's primary
// constructed matrix before comparison, so the suite must fail and
// pinpoint that entry.
struct Perturbation {
    std::size_t row = 0;
    std::size_t col = 0;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json instance;  // parameters, sampled points, seed
    bool pass = true;
    std::string counterexample;  // complete and re-runnable when failing
    double wall_seconds = 0.0;

    nlohmann::json to_json() const;
    std::string to_json_line() const;
};

// Deterministic rational sampler: values p/q with p, q <= 97,
// rejection-sampled against exclusion sets. The seed is recorded in every
// report so failures replay exactly.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational positive();                       // p/q with p, q in 1..97
    Rational open_unit();                      // strictly inside (0, 1)
    Rational positive_avoiding(const std::vector<Rational>& excluded);
    std::vector<Rational> distinct_positive(std::size_t count,
                                            const std::vector<Rational>& excluded);
    std::vector<Rational> x_vector(int L);

private:
    std::mt19937_64 rng_;
};

// Points a spectral-parameter sample must avoid: 0, the x_j, and t^{+-1} x_j.
std::vector<Rational> spectral_exclusions(const ModelParams& params);

// All sectors of (n, L) with every m_i >= 1, smallest bases first.
std::vector<SectorSpec> all_sectors(int n, int L);

// --- suites ---

VerificationReport verify_main_theorem(const ModelParams& params, const SectorSpec& spec,
                                       std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_commutativity(const ModelParams& params, const SectorSpec& spec,
                                        std::uint64_t seed,
                                        std::optional<Perturbation> perturb = std::nullopt);

// Three-way construction agreement at `samples` admissible (t, z) pairs,
// the (k,1,1) Yang-Baxter instance, stochastic/non-stochastic column sums,
// and the S(0)/S'(0) table of special values, for every 0 <= k <= n+1.
VerificationReport verify_r_constructions(int n, std::uint64_t seed, int samples = 5,
                                          std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_stationary(const ModelParams& params, const SectorSpec& spec,
                                     std::uint64_t seed,
                                     std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_asep_baxter(int n, int L, const Rational& t,
                                      std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_proof_machinery(const ModelParams& params, const SectorSpec& spec,
                                          std::uint64_t seed,
                                          std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_jacobi_trudi(const ModelParams& params, const SectorSpec& spec,
                                       std::uint64_t seed,
                                       std::optional<Perturbation> perturb = std::nullopt);

VerificationReport verify_cascade_oracle(const ModelParams& params, const SectorSpec& spec,
                                         std::optional<Perturbation> perturb = std::nullopt);

}  // namespace pushtasep
