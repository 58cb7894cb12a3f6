#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pushtasep/processes.hpp"
#include "pushtasep/verify.hpp"

using namespace pushtasep;

namespace {
Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

ModelParams example_params(const Rational& t, std::vector<Rational> x) {
    return ModelParams(2, 4, t, std::move(x));
}
}  // namespace

TEST_CASE("cyclic smaller-value counts") {
    Config sigma{0, 1, 2, 1};
    // |0121> -> |1102>: species 1 travels 4 -> 1 (1-based), nothing weaker between
    CHECK(ell_count(sigma, 1, 3, 0) == 0);
    // |0121> -> |2101>: species 2 travels 3 -> 1 passing the weaker site 4
    CHECK(ell_count(sigma, 2, 2, 0) == 1);
    // adjacent sites leave an empty interval
    CHECK(ell_count(sigma, 2, 1, 2) == 0);
}

TEST_CASE("printed rates of the reference transition column") {
    Rational t = rat(1, 2);
    std::vector<Rational> x{rat(1), rat(2, 3), rat(5), rat(7, 2)};
    auto params = example_params(t, x);
    SectorSpec spec(2, 4, {1, 2, 1});
    Config sigma{0, 1, 2, 1};

    CHECK(transition_rate(sigma, {1, 0, 2, 1}, 1, params, spec) == rat(1) / x[1]);
    Rational t3 = rat(1) - t * t * t;
    CHECK(transition_rate(sigma, {1, 1, 0, 2}, 2, params, spec) == (rat(1) - t) / (t3 * x[2]));
    CHECK(transition_rate(sigma, {2, 1, 0, 1}, 2, params, spec) == t * (rat(1) - t) / (t3 * x[2]));
    CHECK(transition_rate(sigma, {1, 2, 0, 1}, 2, params, spec) ==
          t * t * (rat(1) - t) / (t3 * x[2]));
    CHECK(transition_rate(sigma, {1, 1, 2, 0}, 3, params, spec) == rat(1) / x[3]);
    CHECK(transition_rate(sigma, sigma, 1, params, spec) == rat(0));
    // activation elsewhere cannot produce these targets
    CHECK(transition_rate(sigma, {1, 0, 2, 1}, 2, params, spec) == rat(0));

    auto rec = transition_record(sigma, {2, 1, 0, 1}, 2, params, spec);
    REQUIRE(rec.has_value());
    CHECK(rec->factors.size() == 2);
    CHECK(rec->target != rec->source);
    Rational prod = rat(1) / x[rec->site];
    for (const auto& w : rec->factors) prod *= w;
    CHECK(rec->rate == prod);
}

TEST_CASE("Markov matrix column of the reference state") {
    Rational t = rat(1, 2);
    std::vector<Rational> x{rat(1), rat(2, 3), rat(5), rat(7, 2)};
    auto params = example_params(t, x);
    StateBasis basis(SectorSpec(2, 4, {1, 2, 1}));
    auto h = pushtasep_markov(params, basis);

    std::size_t col = basis.index_of({0, 1, 2, 1});
    std::size_t nonzero = 0;
    for (const auto& [key, v] : h.entries())
        if (key.second == col && key.first != col) ++nonzero;
    CHECK(nonzero == 5);
    CHECK(h.get(col, col) == -(rat(1) / x[1] + rat(1) / x[2] + rat(1) / x[3]));
    CHECK(is_zero(h.column_sum(col)));
}

TEST_CASE("single-species sector is frozen") {
    ModelParams params(0, 3, rat(1, 2), {rat(1), rat(1), rat(1)});
    StateBasis basis(SectorSpec(0, 3, {3}));
    auto h = pushtasep_markov(params, basis);
    CHECK(h.is_zero());
}

TEST_CASE("generator columns sum to zero across small sectors") {
    for (int n = 1; n <= 2; ++n)
        for (int L = 2; L <= 5; ++L)
            for (const auto& spec : all_sectors(n, L)) {
                ModelParams params(n, L, rat(2, 5), std::vector<Rational>(L, rat(1)));
                StateBasis basis(spec);
                auto h = pushtasep_markov(params, basis);
                auto a = asep_markov(params.t, basis);
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    CHECK(is_zero(h.column_sum(c)));
                    CHECK(is_zero(a.column_sum(c)));
                }
            }
}

TEST_CASE("cascade of a lone particle") {
    // a single weaker site makes the hop deterministic
    auto dist2 = cascade_distribution({1, 0}, 0, rat(1, 2));
    REQUIRE(dist2.size() == 1);
    CHECK(dist2.at({0, 1}) == rat(1));

    // with two vacancies ahead the mover passes the first with probability t
    Rational t = rat(1, 2);
    auto dist3 = cascade_distribution({1, 0, 0}, 0, t);
    REQUIRE(dist3.size() == 2);
    CHECK(dist3.at({0, 1, 0}) == (rat(1) - t) / (rat(1) - t * t));
    CHECK(dist3.at({0, 0, 1}) == t * (rat(1) - t) / (rat(1) - t * t));
}

TEST_CASE("cascade outcomes reproduce the reference column") {
    Rational t = rat(1, 2);
    Config sigma{0, 1, 2, 1};
    auto dist = cascade_distribution(sigma, 1, t);
    // activating the 1 at site 2 hops it onto the vacancy
    REQUIRE(dist.size() == 1);
    CHECK(dist.at({1, 0, 2, 1}) == rat(1));

    auto dist3 = cascade_distribution(sigma, 2, t);
    Rational t3 = rat(1) - t * t * t;
    CHECK(dist3.at({1, 1, 0, 2}) == (rat(1) - t) / t3);
    CHECK(dist3.at({2, 1, 0, 1}) == t * (rat(1) - t) / t3);
    CHECK(dist3.at({1, 2, 0, 1}) == t * t * (rat(1) - t) / t3);
    Rational sum(0);
    for (const auto& [cfg, p] : dist3) sum += p;
    CHECK(sum == rat(1));
}

TEST_CASE("cascade probabilities sum to one in every small sector") {
    Rational t = rat(3, 7);
    for (int n = 1; n <= 2; ++n)
        for (int L = 2; L <= 4; ++L)
            for (const auto& spec : all_sectors(n, L)) {
                StateBasis basis(spec);
                for (std::size_t s = 0; s < basis.size(); ++s) {
                    const Config& sigma = basis.state(s);
                    for (int j = 0; j < L; ++j) {
                        if (sigma[j] < 1) continue;
                        Rational sum(0);
                        for (const auto& [cfg, p] : cascade_distribution(sigma, j, t)) sum += p;
                        CHECK(sum == rat(1));
                    }
                }
            }
}

TEST_CASE("ASEP generator on the two-site ring") {
    // both bonds of the 2-ring act, so each rate appears with multiplicity 1+t
    Rational t = rat(1, 3);
    StateBasis basis(SectorSpec(1, 2, {1, 1}));
    auto h = asep_markov(t, basis);
    Rational s = rat(1) + t;
    CHECK(h.get(0, 0) == -s);
    CHECK(h.get(1, 0) == s);
    CHECK(h.get(0, 1) == s);
    CHECK(h.get(1, 1) == -s);
}

TEST_CASE("equal adjacent letters contribute nothing to ASEP") {
    StateBasis full(1, 2);
    auto h = asep_markov(rat(1, 3), full);
    CHECK(is_zero(h.get(full.index_of({1, 1}), full.index_of({1, 1}))));
    CHECK(is_zero(h.column_sum(full.index_of({1, 1}))));
    CHECK(is_zero(h.column_sum(full.index_of({0, 0}))));
}

TEST_CASE("markov listing is sorted and complete") {
    ModelParams params(1, 2, rat(1, 2), {rat(1), rat(2)});
    StateBasis basis(SectorSpec(1, 2, {1, 1}));
    auto h = pushtasep_markov(params, basis);
    auto listing = markov_listing(h, basis);
    CHECK(listing.find("01 -> 10 : 1/2") != std::string::npos);
    CHECK(listing.find("01 -> 01 : -1/2") != std::string::npos);
    CHECK(listing.find("10 -> 01 : 1") != std::string::npos);
}
