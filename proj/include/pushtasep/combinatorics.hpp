#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pushtasep/rational.hpp"

namespace pushtasep {

// Level-k auxiliary state, multiplicity view: (i_0,...,i_n) with sum k.
// Hardcore arrays restrict entries to {0,1}; compositions allow any
// nonnegative entries.
using Multiplicity = std::vector<int>;

// Tableau view: the strictly increasing letters carried by a hardcore array.
using Tableau = std::vector<int>;

// Ring configuration (sigma_1..sigma_L), values in {0..n}, 0 = vacancy.
using Config = std::vector<int>;

int multiplicity_level(const Multiplicity& a);
bool is_hardcore(const Multiplicity& a);

// All 0/1 arrays of length n+1 with sum k, in lexicographic order of the
// letter lists they carry ({0,1} before {0,2} before ... before {n-1,n}).
// At k = 1 this is e_0, e_1, ..., e_n, matching the species order of V.
std::vector<Multiplicity> enumerate_hardcore(int n, int k);

// All nonnegative arrays of length n+1 with sum k, same letter-list order
// ((2,0) before (1,1) before (0,2)).
std::vector<Multiplicity> enumerate_compositions(int n, int k);

Tableau tableau_of(const Multiplicity& a);
Multiplicity multiplicity_of(const Tableau& t, int n);

// e_k of the given values; 1 at k = 0, 0 for k > #values; k < 0 rejected.
Rational elementary_symmetric(int k, const std::vector<Rational>& ws);

// Fixed species counts m = (m_0..m_n) on a ring of length L. Every
// species (and the vacancy) must be present: m_i >= 1 keeps D_m nonzero.
struct SectorSpec {
    int n = 0;
    int L = 0;
    std::vector<int> m;

    SectorSpec(int n_, int L_, std::vector<int> m_);
};

struct SectorConstants {
    std::vector<long> K;  // K_i = m_0 + ... + m_{i-1}, K_0 = 0
    Rational Dm;          // (1-t) * prod_{i=1..n} (1 - t^{K_i})
};

// Rejects t for which D_m vanishes (t = 0, t = 1, or t^{K_i} = 1).
SectorConstants sector_constants(const SectorSpec& spec, const Rational& t);

// Ordered basis of configurations. Sector-scoped when built from a
// SectorSpec, the full tensor space otherwise; states are lexicographic
// in (sigma_1..sigma_L) either way and all matrix indices refer to this
// order.
class StateBasis {
public:
    explicit StateBasis(const SectorSpec& spec);
    StateBasis(int n, int L);  // full space, (n+1)^L states

    std::size_t size() const { return states_.size(); }
    const Config& state(std::size_t i) const { return states_[i]; }
    const std::vector<Config>& states() const { return states_; }
    std::size_t index_of(const Config& c) const;  // throws if absent
    bool contains(const Config& c) const { return index_.count(c) > 0; }

    int n() const { return n_; }
    int L() const { return L_; }

private:
    int n_, L_;
    std::vector<Config> states_;
    std::map<Config, std::size_t> index_;
};

StateBasis sector_basis(const SectorSpec& spec);

// Species counts of a configuration, as a SectorSpec-compatible vector.
std::vector<int> config_multiplicities(const Config& c, int n);

// "0121" for n <= 9, comma-separated otherwise.
std::string config_str(const Config& c, int n);

}  // namespace pushtasep
