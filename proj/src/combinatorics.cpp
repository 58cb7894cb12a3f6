#include "pushtasep/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pushtasep {

int multiplicity_level(const Multiplicity& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool is_hardcore(const Multiplicity& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0 || x == 1; });
}

namespace {

// Arrays come out ordered by their letter-list view ((1,1,0,..) before
// (1,0,1,..)), which is what puts e_0, e_1, ... in species order at k = 1.
void enumerate_rec(int slots_left, int sum_left, int cap, Multiplicity& cur,
                   std::vector<Multiplicity>& out) {
    if (slots_left == 0) {
        if (sum_left == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(cap, sum_left);
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        enumerate_rec(slots_left - 1, sum_left - v, cap, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Multiplicity> enumerate_hardcore(int n, int k) {
    if (k < 0 || k > n + 1) throw std::invalid_argument("enumerate_hardcore: k out of range");
    std::vector<Multiplicity> out;
    Multiplicity cur;
    enumerate_rec(n + 1, k, 1, cur, out);
    return out;
}

std::vector<Multiplicity> enumerate_compositions(int n, int k) {
    if (k < 0) throw std::invalid_argument("enumerate_compositions: negative k");
    std::vector<Multiplicity> out;
    Multiplicity cur;
    enumerate_rec(n + 1, k, k, cur, out);
    return out;
}

Tableau tableau_of(const Multiplicity& a) {
    if (!is_hardcore(a)) throw std::invalid_argument("tableau_of: array is not hardcore");
    Tableau t;
    for (int alpha = 0; alpha < static_cast<int>(a.size()); ++alpha)
        if (a[alpha] == 1) t.push_back(alpha);
    return t;
}

Multiplicity multiplicity_of(const Tableau& t, int n) {
    Multiplicity a(n + 1, 0);
    int prev = -1;
    for (int letter : t) {
        if (letter <= prev || letter > n)
            throw std::invalid_argument("multiplicity_of: letters must strictly increase within 0..n");
        a[letter] = 1;
        prev = letter;
    }
    return a;
}

Rational elementary_symmetric(int k, const std::vector<Rational>& ws) {
    if (k < 0) throw std::invalid_argument("elementary_symmetric: negative k");
    if (k == 0) return Rational(1);
    if (k > static_cast<int>(ws.size())) return Rational(0);
    // e[j] over a growing prefix of ws
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const auto& w : ws)
        for (int j = k; j >= 1; --j) e[j] += w * e[j - 1];
    return e[k];
}

SectorSpec::SectorSpec(int n_, int L_, std::vector<int> m_) : n(n_), L(L_), m(std::move(m_)) {
    if (n < 0 || L < 1) throw std::invalid_argument("SectorSpec: need n >= 0 and L >= 1");
    if (static_cast<int>(m.size()) != n + 1)
        throw std::invalid_argument("SectorSpec: m must have n+1 entries");
    int total = 0;
    for (int mi : m) {
        if (mi < 1) throw std::invalid_argument("SectorSpec: every m_i must be >= 1");
        total += mi;
    }
    if (total != L) throw std::invalid_argument("SectorSpec: sum of m must equal L");
}

SectorConstants sector_constants(const SectorSpec& spec, const Rational& t) {
    if (is_zero(t)) throw std::domain_error("sector_constants: t = 0 is degenerate");
    SectorConstants out;
    out.K.resize(spec.n + 1);
    out.K[0] = 0;
    for (int i = 1; i <= spec.n; ++i) out.K[i] = out.K[i - 1] + spec.m[i - 1];
    out.Dm = Rational(1) - t;
    for (int i = 1; i <= spec.n; ++i) out.Dm *= Rational(1) - rational_pow(t, out.K[i]);
    if (is_zero(out.Dm)) throw std::domain_error("sector_constants: D_m = 0 for this t");
    return out;
}

namespace {

void states_rec(const std::vector<int>& quota, int L, Config& cur, std::vector<Config>& out) {
    if (static_cast<int>(cur.size()) == L) {
        out.push_back(cur);
        return;
    }
    std::vector<int> q = quota;
    for (int v = 0; v < static_cast<int>(quota.size()); ++v) {
        if (q[v] == 0) continue;
        --q[v];
        cur.push_back(v);
        states_rec(q, L, cur, out);
        cur.pop_back();
        ++q[v];
    }
}

}  // namespace

StateBasis::StateBasis(const SectorSpec& spec) : n_(spec.n), L_(spec.L) {
    Config cur;
    states_rec(spec.m, spec.L, cur, states_);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

StateBasis::StateBasis(int n, int L) : n_(n), L_(L) {
    if (n < 0 || L < 1) throw std::invalid_argument("StateBasis: need n >= 0 and L >= 1");
    Config cur(L, 0);
    while (true) {
        states_.push_back(cur);
        int pos = L - 1;
        while (pos >= 0 && cur[pos] == n) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t StateBasis::index_of(const Config& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw std::invalid_argument("StateBasis: configuration not in basis");
    return it->second;
}

StateBasis sector_basis(const SectorSpec& spec) { return StateBasis(spec); }

std::vector<int> config_multiplicities(const Config& c, int n) {
    std::vector<int> m(n + 1, 0);
    for (int v : c) {
        if (v < 0 || v > n) throw std::invalid_argument("config_multiplicities: value out of range");
        ++m[v];
    }
    return m;
}

std::string config_str(const Config& c, int n) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (n > 9 && i > 0) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

}  // namespace pushtasep
