// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every comparison is exact rational equality; the printed budget per
// criterion is enforced as a hard wall-clock bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "pushtasep/io.hpp"
#include "pushtasep/verify.hpp"

using namespace pushtasep;

namespace {

Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

int failures = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget");
    }
    std::printf("%s  criterion %2d  [%7.2fs < %gs]  %s%s%s\n", ok ? "PASS" : "FAIL", id, secs,
                budget_seconds, label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool require(std::string& detail, bool cond, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

bool check_report(std::string& detail, const VerificationReport& rep) {
    return require(detail, rep.pass, rep.suite + ": " + rep.counterexample);
}

// Example column of the Markov matrix: the five printed rates and diagonal.
bool check_example_column(std::string& detail, const Rational& t, const std::vector<Rational>& x) {
    ModelParams params(2, 4, t, x);
    StateBasis basis(SectorSpec(2, 4, {1, 2, 1}));
    auto h = pushtasep_markov(params, basis);
    std::size_t col = basis.index_of({0, 1, 2, 1});
    Rational t3 = rat(1) - t * t * t;
    struct Entry {
        Config target;
        Rational value;
    };
    const std::vector<Entry> printed{
        {{1, 0, 2, 1}, rat(1) / x[1]},
        {{1, 1, 0, 2}, (rat(1) - t) / (t3 * x[2])},
        {{2, 1, 0, 1}, t * (rat(1) - t) / (t3 * x[2])},
        {{1, 2, 0, 1}, t * t * (rat(1) - t) / (t3 * x[2])},
        {{1, 1, 2, 0}, rat(1) / x[3]},
    };
    for (const auto& e : printed)
        if (!require(detail, h.get(basis.index_of(e.target), col) == e.value,
                     "printed rate mismatch for target " + config_str(e.target, 2)))
            return false;
    if (!require(detail, h.get(col, col) == -(rat(1) / x[1] + rat(1) / x[2] + rat(1) / x[3]),
                 "printed diagonal mismatch"))
        return false;
    std::size_t nonzero = 0;
    for (const auto& [key, v] : h.entries())
        if (key.second == col && key.first != col) ++nonzero;
    return require(detail, nonzero == 5, "unexpected extra off-diagonal rates");
}

}  // namespace

int main() {
    criterion(1, "reference transition column of the Markov matrix", 1.0, [](std::string& d) {
        const std::vector<std::vector<Rational>> xs{
            {rat(1), rat(2, 3), rat(5), rat(7, 2)},
            {rat(2), rat(1), rat(1, 3), rat(5)},
            {rat(1), rat(1), rat(1), rat(1)},  // third point pins the 1/x_j dependence
        };
        for (const Rational& t : {rat(1, 2), rat(1, 3), rat(3, 7)})
            for (const auto& x : xs)
                if (!check_example_column(d, t, x)) return false;
        return true;
    });

    criterion(2, "printed transfer-matrix actions and their alternating sum", 5.0,
              [](std::string& d) {
                  Rational t = rat(2, 5);
                  std::vector<Rational> x{rat(3), rat(1, 2), rat(2), rat(5, 3)};
                  ModelParams params(2, 4, t, x);
                  SectorSpec spec(2, 4, {1, 2, 1});
                  StateBasis basis(spec);
                  auto c = sector_constants(spec, t);
                  std::size_t col = basis.index_of({0, 1, 2, 1});
                  Rational omt = rat(1) - t;

                  std::vector<SparseMatrix<PolyZ>> tk;
                  for (int k = 0; k <= 3; ++k)
                      tk.push_back(transfer_poly(
                          TransferSpec(FusionKind::Antisymmetric, k, params, spec), basis));

                  // printed coefficients as closures of z
                  using Fn = std::function<Rational(const Rational&)>;
                  auto printed1 = std::vector<std::pair<Config, Fn>>{
                      {{1, 0, 1, 2}, [&](const Rational& z) -> Rational {
                           return rational_pow(omt, 4) * z * z / (x[1] * x[2]);
                       }},
                      {{1, 1, 0, 2}, [&](const Rational& z) -> Rational {
                           return -rational_pow(omt, 3) * z * (z - x[1]) / (x[1] * x[2]);
                       }},
                      {{0, 1, 1, 2}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * z * (z - x[0]) * (t * z - x[1]) /
                                  (x[0] * x[1] * x[2]);
                       }},
                      {{1, 1, 2, 0}, [&](const Rational& z) -> Rational {
                           return omt * omt * z * (z - x[1]) * (z - x[2]) / (x[1] * x[2] * x[3]);
                       }},
                      {{0, 2, 1, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * t * z * (z - x[0]) * (z - x[3]) /
                                  (x[0] * x[2] * x[3]);
                       }},
                      {{2, 0, 1, 1}, [&](const Rational& z) -> Rational {
                           return -rational_pow(omt, 3) * t * z * z * (z - x[3]) /
                                  (x[1] * x[2] * x[3]);
                       }},
                      {{2, 1, 0, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * z * (z - x[1]) * (z - x[3]) /
                                  (x[1] * x[2] * x[3]);
                       }},
                      {{1, 0, 2, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * z * (z - x[2]) * (t * z - x[3]) /
                                  (x[1] * x[2] * x[3]);
                       }},
                  };
                  auto printed2 = std::vector<std::pair<Config, Fn>>{
                      {{0, 1, 1, 2}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * z * (t * z - x[0]) * (t * z - x[1]) /
                                  (x[0] * x[1] * x[2]);
                       }},
                      {{1, 2, 1, 0}, [&](const Rational& z) -> Rational {
                           return rational_pow(omt, 4) * t * t * z * z / (x[2] * x[3]);
                       }},
                      {{2, 1, 1, 0}, [&](const Rational& z) -> Rational {
                           return rational_pow(omt, 3) * t * t * z * z * (t * z - x[1]) /
                                  (x[1] * x[2] * x[3]);
                       }},
                      {{1, 1, 2, 0}, [&](const Rational& z) -> Rational {
                           return omt * omt * rational_pow(t, 3) * z * (z - x[1]) *
                                  (t * z - x[2]) / (x[1] * x[2] * x[3]);
                       }},
                      {{0, 2, 1, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * t * z * (t * z - x[0]) * (z - x[3]) /
                                  (x[0] * x[2] * x[3]);
                       }},
                      {{1, 2, 0, 1}, [&](const Rational& z) -> Rational {
                           return rational_pow(omt, 3) * t * t * z * (t * z - x[3]) /
                                  (x[2] * x[3]);
                       }},
                      {{2, 1, 0, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * t * t * z * (t * z - x[1]) * (t * z - x[3]) /
                                  (x[1] * x[2] * x[3]);
                       }},
                      {{1, 0, 2, 1}, [&](const Rational& z) -> Rational {
                           return omt * omt * rational_pow(t, 3) * z * (t * z - x[2]) *
                                  (t * z - x[3]) / (x[1] * x[2] * x[3]);
                       }},
                  };

                  RationalSampler sampler(2024);
                  auto zs = sampler.distinct_positive(5, spectral_exclusions(params));
                  for (const auto& z : zs) {
                      auto m1 = eval_at(tk[1], z);
                      auto m2 = eval_at(tk[2], z);
                      for (const auto& [cfg, fn] : printed1)
                          if (!require(d, m1.get(basis.index_of(cfg), col) == fn(z),
                                       "level-1 printed coefficient mismatch at " +
                                           config_str(cfg, 2)))
                              return false;
                      for (const auto& [cfg, fn] : printed2)
                          if (!require(d, m2.get(basis.index_of(cfg), col) == fn(z),
                                       "level-2 printed coefficient mismatch at " +
                                           config_str(cfg, 2)))
                              return false;
                  }

                  // derivative coefficients of Example 4.2
                  auto dot1 = coeff_matrix(tk[1], 1);
                  auto dot2 = coeff_matrix(tk[2], 1);
                  auto get = [&](const SparseMatrix<Rational>& m, const Config& cfg) {
                      return m.get(basis.index_of(cfg), col);
                  };
                  bool teg_ok =
                      get(dot1, {1, 0, 2, 1}) == omt * omt / x[1] &&
                      get(dot1, {0, 1, 1, 2}) == omt * omt * t / x[2] &&
                      get(dot1, {0, 2, 1, 1}) == omt * omt * t * t / x[2] &&
                      get(dot1, {1, 1, 0, 2}) == rational_pow(omt, 3) / x[2] &&
                      get(dot1, {2, 1, 0, 1}) == omt * omt * t / x[2] &&
                      get(dot1, {1, 1, 2, 0}) == omt * omt / x[3] &&
                      get(dot2, {1, 0, 2, 1}) == omt * omt * rational_pow(t, 3) / x[1] &&
                      get(dot2, {0, 1, 1, 2}) == omt * omt * t / x[2] &&
                      get(dot2, {0, 2, 1, 1}) == omt * omt * t * t / x[2] &&
                      get(dot2, {1, 2, 0, 1}) == -rational_pow(omt, 3) * t * t / x[2] &&
                      get(dot2, {2, 1, 0, 1}) == omt * omt * t * t / x[2] &&
                      get(dot2, {1, 1, 2, 0}) == omt * omt * rational_pow(t, 3) / x[3];
                  if (!require(d, teg_ok, "derivative coefficients differ from the printed table"))
                      return false;

                  // alternating sum: cancellations and survivors, then /D_m
                  SparseMatrix<Rational> alt(basis.size(), basis.size());
                  for (int k = 0; k <= 3; ++k)
                      alt += (k % 2 == 1 ? rat(1) : rat(-1)) * coeff_matrix(tk[k], 1);
                  Rational om3 = rational_pow(omt, 3);
                  bool exv_ok =
                      alt.get(basis.index_of({1, 0, 2, 1}), col) ==
                          om3 * (rat(1) + t + t * t) / x[1] &&
                      alt.get(basis.index_of({1, 1, 0, 2}), col) == om3 / x[2] &&
                      alt.get(basis.index_of({1, 2, 0, 1}), col) == om3 * t * t / x[2] &&
                      alt.get(basis.index_of({2, 1, 0, 1}), col) == om3 * t / x[2] &&
                      alt.get(basis.index_of({1, 1, 2, 0}), col) ==
                          om3 * (rat(1) + t + t * t) / x[3] &&
                      is_zero(alt.get(basis.index_of({0, 1, 1, 2}), col)) &&
                      is_zero(alt.get(basis.index_of({0, 2, 1, 1}), col));
                  if (!require(d, exv_ok, "alternating sum differs from the printed expansion"))
                      return false;

                  auto h = pushtasep_markov(params, basis);
                  Rational xsum(0);
                  for (const auto& xj : x) xsum += rat(1) / xj;
                  auto recovered = rational_inv(c.Dm) * alt -
                                   xsum * SparseMatrix<Rational>::identity(basis.size());
                  for (std::size_t row = 0; row < basis.size(); ++row)
                      if (!require(d, recovered.get(row, col) == h.get(row, col),
                                   "alternating sum over D_m fails to reproduce the rates"))
                          return false;
                  return true;
              });

    criterion(3, "Markov matrix equals the transfer-matrix combination on every sector", 600.0,
              [](std::string& d) {
                  RationalSampler sampler(31);
                  for (int n = 1; n <= 2; ++n)
                      for (int L = 3; L <= 6; ++L)
                          for (const auto& spec : all_sectors(n, L))
                              for (int rep = 0; rep < 3; ++rep) {
                                  ModelParams params(n, L, sampler.open_unit(), sampler.x_vector(L));
                                  if (!check_report(d, verify_main_theorem(params, spec)))
                                      return false;
                              }
                  return true;
              });

    criterion(4, "transfer matrices commute on a deterministic grid", 300.0, [](std::string& d) {
        ModelParams params(2, 4, rat(1, 3), {rat(1), rat(2, 3), rat(5), rat(7, 2)});
        for (const auto& spec : all_sectors(2, 4))
            if (!check_report(d, verify_commutativity(params, spec, 404))) return false;
        return true;
    });

    criterion(5, "three R-matrix constructions agree; Yang-Baxter and special values", 120.0,
              [](std::string& d) {
                  for (int n = 1; n <= 3; ++n)
                      if (!check_report(d, verify_r_constructions(n, 500 + n, 5))) return false;
                  return true;
              });

    criterion(6, "stationary state: kernel, printed vectors, joint eigenvalues", 300.0,
              [](std::string& d) {
                  RationalSampler sampler(606);
                  for (int n = 1; n <= 2; ++n)
                      for (int L = 2; L <= 6; ++L)
                          for (const auto& spec : all_sectors(n, L)) {
                              ModelParams params(n, L, rat(1, 2), sampler.x_vector(L));
                              if (!check_report(d, verify_stationary(params, spec, 600 + L)))
                                  return false;
                          }
                  return true;
              });

    criterion(7, "ASEP Baxter formula, local identities, commutation, shared kernel", 120.0,
              [](std::string& d) {
                  for (int n = 1; n <= 2; ++n)
                      for (int L = 2; L <= 5; ++L)
                          if (!check_report(d, verify_asep_baxter(n, L, rat(1, 3)))) return false;
                  if (!check_report(d, verify_asep_baxter(2, 4, rat(2, 5)))) return false;
                  return true;
              });

    criterion(8, "per-site proof machinery on every channel", 300.0, [](std::string& d) {
        ModelParams params(2, 4, rat(1, 3), {rat(1), rat(2, 3), rat(5), rat(7, 2)});
        for (const auto& spec : all_sectors(2, 4))
            if (!check_report(d, verify_proof_machinery(params, spec, 808))) return false;
        return true;
    });

    criterion(9, "cascade oracle equals the formal rates", 120.0, [](std::string& d) {
        RationalSampler sampler(909);
        for (const Rational& t : {rat(1, 2), rat(1, 3), rat(3, 7)})
            for (int n = 1; n <= 2; ++n)
                for (int L = 2; L <= 5; ++L)
                    for (const auto& spec : all_sectors(n, L)) {
                        ModelParams params(n, L, t, sampler.x_vector(L));
                        if (!check_report(d, verify_cascade_oracle(params, spec))) return false;
                    }
        return true;
    });

    criterion(10, "symmetric-fusion functional relations", 180.0, [](std::string& d) {
        RationalSampler sampler(1010);
        for (int n = 1; n <= 2; ++n)
            for (int L = 3; L <= 4; ++L)
                for (const auto& spec : all_sectors(n, L)) {
                    ModelParams params(n, L, sampler.open_unit(), sampler.x_vector(L));
                    if (!check_report(d, verify_jacobi_trudi(params, spec, 1000 + L))) return false;
                }
        return true;
    });

    criterion(11, "negative controls: every suite localizes an injected defect", 300.0,
              [](std::string& d) {
                  ModelParams params(2, 4, rat(1, 3), {rat(1), rat(2, 3), rat(5), rat(7, 2)});
                  SectorSpec spec(2, 4, {1, 2, 1});
                  ModelParams params3(2, 3, rat(1, 3), {rat(1), rat(2), rat(3)});
                  SectorSpec spec3(2, 3, {1, 1, 1});
                  Perturbation p{1, 0};
                  auto broken = [&](const VerificationReport& rep) {
                      return !rep.pass && !rep.counterexample.empty();
                  };
                  if (!require(d, broken(verify_main_theorem(params, spec, p)),
                               "main-theorem missed the defect"))
                      return false;
                  if (!require(d, broken(verify_commutativity(params3, spec3, 17, p)),
                               "commutativity missed the defect"))
                      return false;
                  if (!require(d, broken(verify_r_constructions(1, 11, 1, p)),
                               "r-agreement missed the defect"))
                      return false;
                  if (!require(d, broken(verify_stationary(params, spec, 5, p)),
                               "stationary missed the defect"))
                      return false;
                  if (!require(d, broken(verify_asep_baxter(1, 3, rat(1, 2), p)),
                               "asep missed the defect"))
                      return false;
                  if (!require(d, broken(verify_proof_machinery(params3, spec3, 7, p)),
                               "proof-machinery missed the defect"))
                      return false;
                  if (!require(d, broken(verify_jacobi_trudi(params3, spec3, 13, p)),
                               "jacobi-trudi missed the defect"))
                      return false;
                  if (!require(d, broken(verify_cascade_oracle(params, spec, p)),
                               "cascade missed the defect"))
                      return false;
                  return true;
              });

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
