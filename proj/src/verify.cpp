#include "pushtasep/verify.hpp"

#include "pushtasep/io.hpp"
#include "pushtasep/qoscillator.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace pushtasep {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json rational_list(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rational_str(r));
    return a;
}

json params_json(const ModelParams& p) {
    return json{{"n", p.n}, {"L", p.L}, {"t", rational_str(p.t)}, {"x", rational_list(p.x)}};
}

// Runs the body, recording wall time; any stray exception fails the suite.
VerificationReport run_suite(const std::string& name, json instance,
                             const std::function<void(VerificationReport&)>& body) {
    VerificationReport rep;
    rep.suite = name;
    rep.instance = std::move(instance);
    auto start = Clock::now();
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.pass = false;
        if (rep.counterexample.empty()) rep.counterexample = std::string("exception: ") + e.what();
    }
    rep.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

void fail(VerificationReport& rep, const std::string& what) {
    if (rep.pass) rep.counterexample = what;  // keep the first counterexample
    rep.pass = false;
}

std::string entry_label(const StateBasis* basis, std::size_t row, std::size_t col) {
    std::ostringstream os;
    os << "(row " << row << ", col " << col << ")";
    if (basis)
        os << " = (" << config_str(basis->state(col), basis->n()) << " -> "
           << config_str(basis->state(row), basis->n()) << ")";
    return os.str();
}

template <typename T>
bool compare_matrices(VerificationReport& rep, const SparseMatrix<T>& a, const SparseMatrix<T>& b,
                      const StateBasis* basis, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(rep, what + ": shape mismatch");
        return false;
    }
    auto ia = a.entries().begin(), ib = b.entries().begin();
    while (ia != a.entries().end() || ib != b.entries().end()) {
        if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
            fail(rep, what + " differ at " + entry_label(basis, ia->first.first, ia->first.second));
            return false;
        }
        if (ia == a.entries().end() || ib->first < ia->first) {
            fail(rep, what + " differ at " + entry_label(basis, ib->first.first, ib->first.second));
            return false;
        }
        if (!(ia->second == ib->second)) {
            fail(rep, what + " differ at " + entry_label(basis, ia->first.first, ia->first.second));
            return false;
        }
        ++ia;
        ++ib;
    }
    return true;
}

void apply_perturbation(SparseMatrix<Rational>& m, const std::optional<Perturbation>& p) {
    if (p) m.add_at(p->row % m.rows(), p->col % m.cols(), Rational(1));
}

}  // namespace

json VerificationReport::to_json() const {
    return json{{"suite", suite},
                {"instance", instance},
                {"pass", pass},
                {"counterexample", counterexample},
                {"wall_seconds", wall_seconds}};
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

Rational RationalSampler::positive() {
    std::uniform_int_distribution<int> d(1, 97);
    Rational r(d(rng_), d(rng_));
    r.canonicalize();
    return r;
}

Rational RationalSampler::open_unit() {
    std::uniform_int_distribution<int> dq(2, 97);
    int q = dq(rng_);
    std::uniform_int_distribution<int> dp(1, q - 1);
    Rational r(dp(rng_), q);
    r.canonicalize();
    return r;
}

Rational RationalSampler::positive_avoiding(const std::vector<Rational>& excluded) {
    while (true) {
        Rational r = positive();
        if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) return r;
    }
}

std::vector<Rational> RationalSampler::distinct_positive(std::size_t count,
                                                         const std::vector<Rational>& excluded) {
    std::vector<Rational> out, avoid = excluded;
    while (out.size() < count) {
        Rational r = positive_avoiding(avoid);
        avoid.push_back(r);
        out.push_back(r);
    }
    return out;
}

std::vector<Rational> RationalSampler::x_vector(int L) {
    std::vector<Rational> out;
    out.reserve(L);
    for (int i = 0; i < L; ++i) out.push_back(positive());
    return out;
}

std::vector<Rational> spectral_exclusions(const ModelParams& params) {
    std::vector<Rational> ex{Rational(0)};
    for (const auto& xj : params.x) {
        ex.push_back(xj);
        ex.push_back(params.t * xj);
        ex.push_back(xj / params.t);
    }
    return ex;
}

std::vector<SectorSpec> all_sectors(int n, int L) {
    std::vector<SectorSpec> out;
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int left) {
        if (static_cast<int>(cur.size()) == n) {
            if (left >= 1) {
                cur.push_back(left);
                out.emplace_back(n, L, cur);
                cur.pop_back();
            }
            return;
        }
        for (int v = 1; v <= left - (n - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            rec(cur, left - v);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur, L);
    std::stable_sort(out.begin(), out.end(), [](const SectorSpec& a, const SectorSpec& b) {
        auto size_of = [](const SectorSpec& s) {
            double lg = 0;  // log-multinomial orders sectors without building bases
            for (int i = 2; i <= s.L; ++i) lg += std::log(i);
            for (int mi : s.m)
                for (int i = 2; i <= mi; ++i) lg -= std::log(i);
            return lg;
        };
        return size_of(a) < size_of(b);
    });
    return out;
}

// --- main theorem -----------------------------------------------------------

VerificationReport verify_main_theorem(const ModelParams& params, const SectorSpec& spec,
                                       std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    return run_suite("main-theorem", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        SparseMatrix<Rational> h = pushtasep_markov(params, basis);
        apply_perturbation(h, perturb);
        SparseMatrix<Rational> hh = baxter_H(params, spec, basis);
        compare_matrices(rep, h, hh, &basis, "H_PushTASEP vs transfer-matrix H");
    });
}

// --- commutativity ----------------------------------------------------------

VerificationReport verify_commutativity(const ModelParams& params, const SectorSpec& spec,
                                        std::uint64_t seed, std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    instance["seed"] = seed;
    return run_suite("commutativity", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        RationalSampler sampler(seed);
        auto points = sampler.distinct_positive(2 * (params.L + 1), spectral_exclusions(params));
        std::vector<Rational> zs(points.begin(), points.begin() + params.L + 1);
        std::vector<Rational> zps(points.begin() + params.L + 1, points.end());
        rep.instance["z_grid"] = rational_list(zs);
        rep.instance["z_prime_grid"] = rational_list(zps);

        std::vector<SparseMatrix<PolyZ>> polys;
        for (int k = 0; k <= params.n + 1; ++k)
            polys.push_back(transfer_poly(TransferSpec(FusionKind::Antisymmetric, k, params, spec), basis));
        std::vector<std::vector<SparseMatrix<Rational>>> at_z, at_zp;
        for (int k = 0; k <= params.n + 1; ++k) {
            at_z.emplace_back();
            at_zp.emplace_back();
            for (const auto& z : zs) {
                at_z[k].push_back(eval_at(polys[k], z));
                if (perturb) apply_perturbation(at_z[k].back(), perturb);
            }
            for (const auto& zp : zps) at_zp[k].push_back(eval_at(polys[k], zp));
        }

        for (int k = 0; k <= params.n + 1; ++k)
            for (int kp = k; kp <= params.n + 1; ++kp)
                for (std::size_t zi = 0; zi < zs.size(); ++zi)
                    for (std::size_t zj = 0; zj < zps.size(); ++zj) {
                        const Rational& z = zs[zi];
                        const Rational& zp = zps[zj];
                        SparseMatrix<Rational> c = commutator(at_z[k][zi], at_zp[kp][zj]);
                        if (!c.is_zero()) {
                            auto e = c.entries().begin();
                            fail(rep, "[T^" + std::to_string(k) + "(" + rational_str(z) + "), T^" +
                                          std::to_string(kp) + "(" + rational_str(zp) +
                                          ")] nonzero at " +
                                          entry_label(&basis, e->first.first, e->first.second));
                            return;
                        }
                    }
    });
}

// --- R-matrix constructions -------------------------------------------------

namespace {

SparseMatrix<Rational> transposition_matrix(int n) {
    const std::size_t d = static_cast<std::size_t>(n + 1);
    SparseMatrix<Rational> p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p.set(j * d + i, i * d + j, Rational(1));
    return p;
}

// Embeds a two-slot operator into a three-fold tensor product; slots are
// 0-based, op rows/cols are slotP-major.
SparseMatrix<Rational> embed3(const SparseMatrix<Rational>& op, const std::array<std::size_t, 3>& dims,
                              int p, int q) {
    std::size_t total = dims[0] * dims[1] * dims[2];
    SparseMatrix<Rational> out(total, total);
    auto fuse = [&](std::size_t i0, std::size_t i1, std::size_t i2) {
        return (i0 * dims[1] + i1) * dims[2] + i2;
    };
    for (const auto& [key, v] : op.entries()) {
        std::size_t orow = key.first, ocol = key.second;
        std::size_t rp = orow / dims[q], rq = orow % dims[q];
        std::size_t cp = ocol / dims[q], cq = ocol % dims[q];
        int spare = 3 - p - q;
        for (std::size_t s = 0; s < dims[spare]; ++s) {
            std::array<std::size_t, 3> r{}, c{};
            r[p] = rp, r[q] = rq, r[spare] = s;
            c[p] = cp, c[q] = cq, c[spare] = s;
            out.set(fuse(r[0], r[1], r[2]), fuse(c[0], c[1], c[2]), v);
        }
    }
    return out;
}

}  // namespace

namespace {

// S(0), S'(0) against the special-value table, sign convention included.
std::optional<std::string> table_of_special_values_mismatch(int n, int k, const Rational& t) {
    auto arrays = enumerate_hardcore(n, k);
    for (const auto& a : arrays)
        for (const auto& i : arrays)
            for (int b = 0; b <= n; ++b)
                for (int c = 0; c <= n; ++c) {
                    bool delta = true;
                    for (int r = 0; r <= n; ++r)
                        if (a[r] + (r == b) != i[r] + (r == c)) delta = false;
                    int tpow = 0, sgn_exp = 0;
                    for (int r = c + 1; r <= n; ++r) tpow += a[r];
                    for (int r = 0; r < c; ++r) sgn_exp += a[r];
                    for (int r = 0; r < b; ++r) sgn_exp += i[r];
                    Rational eps = sgn_exp % 2 == 0 ? Rational(1) : Rational(-1);
                    Rational body = delta ? eps * rational_pow(t, tpow) : Rational(0);
                    Rational s0 = s_k1_at_zero(n, a, b, i, c, t);
                    Rational sd0 = s_k1_dot_at_zero(n, a, b, i, c, t);
                    Rational want_s0 = c < b    ? body * (Rational(1) - t)
                                       : c == b ? (delta ? rational_pow(t, tpow) : Rational(0))
                                                : Rational(0);
                    if (s0 != want_s0) return "S(0) table mismatch at k=" + std::to_string(k);
                    if (c < b && sd0 != Rational(0))
                        return "S'(0) table mismatch (c<b) at k=" + std::to_string(k);
                    if (c > b && sd0 != body * (Rational(1) - t))
                        return "S'(0) table mismatch (c>b) at k=" + std::to_string(k);
                }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_r_constructions(int n, std::uint64_t seed, int samples,
                                          std::optional<Perturbation> perturb) {
    json instance{{"n", n}, {"seed", seed}, {"samples", samples}};
    return run_suite("r-agreement", instance, [&](VerificationReport& rep) {
        RationalSampler sampler(seed);
        json sampled = json::array();
        for (int k = 0; k <= n + 1; ++k) {
            for (int s = 0; s < samples; ++s) {
                Rational t = sampler.open_unit();
                std::vector<Rational> avoid{Rational(1)};
                for (int r = 1; r <= k - 1; ++r) avoid.push_back(rational_pow(t, r));
                Rational z = sampler.positive_avoiding(avoid);
                sampled.push_back({{"k", k}, {"t", rational_str(t)}, {"z", rational_str(z)}});

                SparseMatrix<Rational> closed = s_k1_closed(n, k, t, z);
                if (perturb) apply_perturbation(closed, perturb);
                SparseMatrix<Rational> fused = s_k1_fused(n, k, t, z);
                SparseMatrix<Rational> threed = s_k1_3d(n, k, t, z);
                std::string tag = "k=" + std::to_string(k) + " t=" + rational_str(t) +
                                  " z=" + rational_str(z) + " ";
                if (!compare_matrices(rep, closed, fused, nullptr, tag + "closed vs fused")) return;
                if (!compare_matrices(rep, closed, threed, nullptr, tag + "closed vs 3d")) return;

                if (k == 1) {
                    // stochastic column sums: sum_(a,b) S^{a,b}_{i,j} = 1 - t z
                    Rational expect = Rational(1) - t * z;
                    for (std::size_t col = 0; col < closed.cols(); ++col)
                        if (closed.column_sum(col) != expect) {
                            fail(rep, tag + "k=1 column " + std::to_string(col) +
                                          " sum differs from 1-tz");
                            return;
                        }
                }
                if (k == 2 && n >= 2) {
                    // non-stochasticity witness: column sums must not all agree
                    bool varies = false;
                    Rational first = closed.column_sum(0);
                    for (std::size_t col = 1; col < closed.cols() && !varies; ++col)
                        varies = closed.column_sum(col) != first;
                    if (!varies) {
                        fail(rep, tag + "k=2 column sums unexpectedly uniform");
                        return;
                    }
                }
            }

            // Yang-Baxter instance (k,1,1) on V^k (x) V (x) V
            if (n <= 2) {
                for (int s = 0; s < 3; ++s) {
                    Rational t = sampler.open_unit();
                    Rational xx = sampler.positive();
                    Rational yy = sampler.positive();
                    sampled.push_back({{"k", k},
                                       {"t", rational_str(t)},
                                       {"yb_x", rational_str(xx)},
                                       {"yb_y", rational_str(yy)}});
                    std::array<std::size_t, 3> dims{enumerate_hardcore(n, k).size(),
                                                    static_cast<std::size_t>(n + 1),
                                                    static_cast<std::size_t>(n + 1)};
                    auto s12 = embed3(s_k1_closed(n, k, t, xx), dims, 0, 1);
                    auto s13 = embed3(s_k1_closed(n, k, t, xx * yy), dims, 0, 2);
                    auto s23 = embed3(s_k1_closed(n, 1, t, yy), dims, 1, 2);
                    auto lhs = mat_mul(mat_mul(s12, s13), s23);
                    auto rhs = mat_mul(mat_mul(s23, s13), s12);
                    if (!compare_matrices(rep, lhs, rhs, nullptr,
                                          "Yang-Baxter (k=" + std::to_string(k) + ",1,1) x=" +
                                              rational_str(xx) + " y=" + rational_str(yy)))
                        return;
                }
            }

            // special values of S(0) and S'(0), including the sign epsilon
            for (int s = 0; s < 2; ++s) {
                if (auto bad = table_of_special_values_mismatch(n, k, sampler.open_unit())) {
                    fail(rep, *bad);
                    return;
                }
            }
        }
        rep.instance["sampled"] = sampled;
    });
}

// --- stationary state -------------------------------------------------------

namespace {

// Seed terms of the printed stationary vectors; "+ cyc." orbits are
// generated by rotating the configuration right and shifting x-indices up.
struct PrintedSeed {
    Config config;
    std::function<Rational(const Rational&, const std::vector<Rational>&)> coeff;
};

std::optional<std::vector<PrintedSeed>> printed_seeds(const SectorSpec& spec) {
    if (spec.n != 2) return std::nullopt;
    auto t2 = [](const Rational& t) -> Rational { return t * t; };
    if (spec.m == std::vector<int>{1, 1, 1})
        return std::vector<PrintedSeed>{
            {{0, 1, 2}, [](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t * x[0] + x[2] + t * x[2]) / x[0];
             }},
            {{1, 0, 2}, [](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (x[1] + x[2] + t * x[2]) / x[1];
             }}};
    if (spec.m == std::vector<int>{1, 2, 1})
        return std::vector<PrintedSeed>{
            {{0, 1, 1, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t2(t) * x[0] + x[3] + t * x[3] + t2(t) * x[3]) / x[0];
             }},
            {{1, 0, 1, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t * x[1] + x[3] + t * x[3] + t2(t) * x[3]) / x[1];
             }},
            {{1, 1, 0, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (x[2] + x[3] + t * x[3] + t2(t) * x[3]) / x[2];
             }}};
    if (spec.m == std::vector<int>{2, 2, 1})
        return std::vector<PrintedSeed>{
            {{0, 0, 1, 1, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t2(t) * x[0] + t2(t) * x[1] + x[4] + t * x[4] + t2(t) * x[4]) / (x[0] * x[1]);
             }},
            {{0, 1, 0, 1, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t2(t) * x[0] + t * x[2] + x[4] + t * x[4] + t2(t) * x[4]) / (x[0] * x[2]);
             }},
            {{1, 0, 0, 1, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t * x[1] + t * x[2] + x[4] + t * x[4] + t2(t) * x[4]) / (x[1] * x[2]);
             }},
            {{0, 1, 1, 0, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t2(t) * x[0] + x[3] + x[4] + t * x[4] + t2(t) * x[4]) / (x[0] * x[3]);
             }},
            {{1, 0, 1, 0, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (t * x[1] + x[3] + x[4] + t * x[4] + t2(t) * x[4]) / (x[1] * x[3]);
             }},
            {{1, 1, 0, 0, 2}, [t2](const Rational& t, const std::vector<Rational>& x) -> Rational {
                 return (x[2] + x[3] + x[4] + t * x[4] + t2(t) * x[4]) / (x[2] * x[3]);
             }}};
    return std::nullopt;
}

std::optional<RationalVector> printed_stationary_vector(const ModelParams& params,
                                                        const SectorSpec& spec,
                                                        const StateBasis& basis) {
    auto seeds = printed_seeds(spec);
    if (!seeds) return std::nullopt;
    RationalVector v(basis.size(), Rational(0));
    for (const auto& seed : *seeds) {
        Config cfg = seed.config;
        for (int r = 0; r < params.L; ++r) {
            std::vector<Rational> shifted(params.L);
            for (int i = 0; i < params.L; ++i) shifted[i] = params.x[(i + r) % params.L];
            v[basis.index_of(cfg)] = seed.coeff(params.t, shifted);
            std::rotate(cfg.rbegin(), cfg.rbegin() + 1, cfg.rend());  // sigma -> (sigma_L, sigma_1, ...)
        }
    }
    return v;
}

void normalize_first_nonzero(RationalVector& v) {
    for (const auto& c : v)
        if (!is_zero(c)) {
            Rational lead = c;
            for (auto& y : v) y /= lead;
            return;
        }
}

}  // namespace

VerificationReport verify_stationary(const ModelParams& params, const SectorSpec& spec,
                                     std::uint64_t seed, std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    instance["seed"] = seed;
    return run_suite("stationary", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        const auto constants = sector_constants(spec, params.t);
        SparseMatrix<Rational> h = pushtasep_markov(params, basis);
        apply_perturbation(h, perturb);

        auto kernel = kernel_basis(h);
        rep.instance["kernel_dimension"] = kernel.size();
        if (kernel.size() != 1) {
            fail(rep, "kernel dimension " + std::to_string(kernel.size()) + ", expected 1");
            return;
        }
        RationalVector v = kernel[0];
        auto hv = mat_apply(h, v);
        for (std::size_t i = 0; i < hv.size(); ++i)
            if (!is_zero(hv[i])) {
                fail(rep, "H v != 0 at " + config_str(basis.state(i), params.n));
                return;
            }

        if (auto printed = printed_stationary_vector(params, spec, basis)) {
            RationalVector w = *printed;
            normalize_first_nonzero(w);
            if (w != v) {
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] != w[i]) {
                        fail(rep, "printed stationary vector differs at |" +
                                      config_str(basis.state(i), params.n) + ">: kernel " +
                                      rational_str(v[i]) + " vs printed " + rational_str(w[i]));
                        return;
                    }
            }
            rep.instance["printed_vector_checked"] = true;
        }

        RationalSampler sampler(seed);
        auto zs = sampler.distinct_positive(params.L + 1, spectral_exclusions(params));
        rep.instance["z_points"] = rational_list(zs);
        std::vector<SparseMatrix<PolyZ>> polys;
        for (int k = 0; k <= params.n + 1; ++k)
            polys.push_back(
                transfer_poly(TransferSpec(FusionKind::Antisymmetric, k, params, spec), basis));
        for (int k = 0; k <= params.n + 1; ++k) {
            for (const auto& z : zs) {
                auto tv = mat_apply(eval_at(polys[k], z), v);
                Rational lam = stationary_eigenvalue(k, params, spec, z);
                for (std::size_t i = 0; i < tv.size(); ++i)
                    if (tv[i] != lam * v[i]) {
                        fail(rep, "T^" + std::to_string(k) + "(" + rational_str(z) +
                                      ") eigenvalue relation fails at |" +
                                      config_str(basis.state(i), params.n) + ">");
                        return;
                    }
            }
        }

        // sum_k (-1)^{k-1} Lambda^k'(0) = (sum_j 1/x_j) D_m
        Rational lam_sum(0);
        for (int k = 0; k <= params.n + 1; ++k) {
            Rational dot = stationary_eigenvalue_poly(k, params, spec).coeff(1);
            lam_sum += (k % 2 == 1 ? dot : -dot);
        }
        Rational xsum(0);
        for (const auto& xj : params.x) xsum += Rational(1) / xj;
        if (lam_sum != xsum * constants.Dm) {
            fail(rep, "alternating eigenvalue derivative sum != (sum 1/x_j) D_m");
            return;
        }

        // equivalent operator form through T^k(z) - Lambda^k(z) Id
        SparseMatrix<PolyZ> diff(basis.size(), basis.size());
        for (int k = 0; k <= params.n + 1; ++k) {
            SparseMatrix<PolyZ> term = polys[k];
            PolyZ lam = stationary_eigenvalue_poly(k, params, spec);
            for (std::size_t i = 0; i < basis.size(); ++i) term.add_at(i, i, -lam);
            PolyZ sign(k % 2 == 1 ? Rational(1) : Rational(-1));
            for (const auto& [key, p] : term.entries()) diff.add_at(key.first, key.second, sign * p);
        }
        SparseMatrix<Rational> lhs = rational_inv(constants.Dm) * coeff_matrix(diff, 1);
        SparseMatrix<Rational> rhs = baxter_H(params, spec, basis);
        if (!compare_matrices(rep, lhs, rhs, &basis, "derivative-of-(T - Lambda) form vs H")) return;

        bool homogeneous = std::all_of(params.x.begin(), params.x.end(),
                                       [](const Rational& xj) { return xj == Rational(1); });
        if (homogeneous) {
            auto asep = asep_markov(params.t, basis);
            auto av = mat_apply(asep, v);
            for (std::size_t i = 0; i < av.size(); ++i)
                if (!is_zero(av[i])) {
                    fail(rep, "stationary vector is not in the ASEP kernel at |" +
                                  config_str(basis.state(i), params.n) + ">");
                    return;
                }
            rep.instance["asep_kernel_checked"] = true;
        }
    });
}

// --- ASEP Baxter formula ----------------------------------------------------

namespace {

SparseMatrix<Rational> asep_local_matrix(int n, const Rational& t) {
    const std::size_t d = static_cast<std::size_t>(n + 1);
    SparseMatrix<Rational> h(d * d, d * d);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            if (a == b) continue;
            Rational rate = a > b ? t : Rational(1);
            h.add_at(static_cast<std::size_t>(b) * d + a, static_cast<std::size_t>(a) * d + b, rate);
            h.add_at(static_cast<std::size_t>(a) * d + b, static_cast<std::size_t>(a) * d + b, -rate);
        }
    return h;
}

SparseMatrix<PolyZ> s11_poly_matrix(int n, const Rational& t) {
    auto arrays = enumerate_hardcore(n, 1);
    const std::size_t dim = arrays.size() * (n + 1);
    SparseMatrix<PolyZ> m(dim, dim);
    for (std::size_t ai = 0; ai < arrays.size(); ++ai)
        for (int b = 0; b <= n; ++b)
            for (std::size_t ii = 0; ii < arrays.size(); ++ii)
                for (int j = 0; j <= n; ++j) {
                    PolyZ p = s_k1_closed_element_poly(n, arrays[ai], b, arrays[ii], j, t);
                    if (!p.is_zero()) m.set(ai * (n + 1) + b, ii * (n + 1) + j, p);
                }
    return m;
}

SparseMatrix<Rational> cyclic_shift_matrix(const StateBasis& basis) {
    SparseMatrix<Rational> c(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Config rot = basis.state(col);
        std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
        c.set(basis.index_of(rot), col, Rational(1));
    }
    return c;
}

}  // namespace

VerificationReport verify_asep_baxter(int n, int L, const Rational& t,
                                      std::optional<Perturbation> perturb) {
    json instance{{"n", n}, {"L", L}, {"t", rational_str(t)}};
    return run_suite("asep", instance, [&](VerificationReport& rep) {
        if (t == Rational(1)) throw std::domain_error("verify_asep_baxter: t = 1 is degenerate");
        std::vector<Rational> ones(L, Rational(1));
        ModelParams params(n, L, t, ones);

        // S(1) = (1-t) P and P S'(1) = -h_ASEP - t Id, elementwise
        SparseMatrix<Rational> s_at_1 = s_k1_closed(n, 1, t, Rational(1));
        SparseMatrix<Rational> p = transposition_matrix(n);
        if (!compare_matrices(rep, s_at_1, (Rational(1) - t) * p, nullptr, "S(1) vs (1-t)P")) return;
        SparseMatrix<PolyZ> s_poly = s11_poly_matrix(n, t);
        SparseMatrix<Rational> s_dot(s_poly.rows(), s_poly.cols());
        for (const auto& [key, pz] : s_poly.entries())
            s_dot.set(key.first, key.second, pz.derivative().eval(Rational(1)));
        SparseMatrix<Rational> want =
            -asep_local_matrix(n, t) -
            t * SparseMatrix<Rational>::identity((n + 1) * (n + 1));
        if (!compare_matrices(rep, mat_mul(p, s_dot), want, nullptr, "P S'(1) vs -h - t Id")) return;

        // full-space transfer matrix at the homogeneous point
        StateBasis full(n, L);
        TransferSpec tspec(FusionKind::Antisymmetric, 1, params);
        SparseMatrix<PolyZ> t1 = transfer_poly(tspec, full);
        SparseMatrix<Rational> cyc = cyclic_shift_matrix(full);
        Rational scale = rational_pow(Rational(1) - t, L);
        if (!compare_matrices(rep, eval_at(t1, Rational(1)), scale * cyc, &full,
                              "T^1(1|x=1) vs (1-t)^L shift"))
            return;

        SparseMatrix<Rational> t1_dot(full.size(), full.size());
        for (const auto& [key, pz] : t1.entries())
            t1_dot.set(key.first, key.second, pz.derivative().eval(Rational(1)));
        SparseMatrix<Rational> cyc_inv(full.size(), full.size());
        for (const auto& [key, v] : cyc.entries()) cyc_inv.set(key.second, key.first, v);
        SparseMatrix<Rational> baxter =
            (-(Rational(1) - t) / scale) * mat_mul(t1_dot, cyc_inv) -
            (t * Rational(L)) * SparseMatrix<Rational>::identity(full.size());
        SparseMatrix<Rational> h_asep = asep_markov(t, full);
        apply_perturbation(h_asep, perturb);
        if (!compare_matrices(rep, h_asep, baxter, &full, "H_ASEP vs Baxter formula")) return;

        for (const auto& spec : all_sectors(n, L)) {
            StateBasis basis(spec);
            // (1-t) dlog Lambda^1/dz at z=1 equals -tL
            PolyZ lam = stationary_eigenvalue_poly(1, params, spec);
            Rational lam1 = lam.eval(Rational(1));
            Rational lam1_dot = lam.derivative().eval(Rational(1));
            if ((Rational(1) - t) * lam1_dot != Rational(-L) * t * lam1) {
                fail(rep, "homogeneous eigenvalue log-derivative != -tL in sector");
                return;
            }
            SparseMatrix<Rational> asep = asep_markov(t, basis);
            SparseMatrix<Rational> push = pushtasep_markov(params, basis);
            if (!commutator(asep, push).is_zero()) {
                fail(rep, "[H_ASEP, H_PushTASEP(x=1)] != 0 in a sector");
                return;
            }
            for (const auto& v : kernel_basis(push)) {
                auto av = mat_apply(asep, v);
                for (const auto& c : av)
                    if (!is_zero(c)) {
                        fail(rep, "PushTASEP stationary vector not annihilated by H_ASEP");
                        return;
                    }
            }
        }
    });
}

// --- proof machinery --------------------------------------------------------

namespace {

struct ChannelPrediction {
    Rational base;            // x_j * <target|T^d'(0)|sigma>_j predicted by the reduced diagram
    std::vector<long> K_unmoved;  // exponents K_h for unmoved species (0 included when unwanted)
};

ChannelPrediction channel_prediction(const TransitionSignature& sig, const ModelParams& params,
                                     const SectorConstants& constants) {
    ChannelPrediction out;
    const int g = static_cast<int>(sig.moved_types.size()) - 1;
    int ell_total = 0;
    for (int e : sig.ell) ell_total += e;
    out.base = rational_pow(Rational(1) - params.t, g + 1) * rational_pow(params.t, ell_total);
    if (sig.depth % 2 == 0) out.base = -out.base;  // (-1)^{d-1}
    for (int h = 0; h <= params.n; ++h)
        if (std::find(sig.moved_types.begin(), sig.moved_types.end(), h) == sig.moved_types.end())
            out.K_unmoved.push_back(constants.K[h]);
    return out;
}

}  // namespace

VerificationReport verify_proof_machinery(const ModelParams& params, const SectorSpec& spec,
                                          std::uint64_t seed, std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    instance["seed"] = seed;
    return run_suite("proof-machinery", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        const auto constants = sector_constants(spec, params.t);
        RationalSampler sampler(seed);
        std::vector<Rational> zetas = sampler.distinct_positive(3, {});
        rep.instance["zetas"] = rational_list(zetas);

        const int kmax = params.n + 1;
        std::vector<SparseMatrix<Rational>> site_sum;
        for (int k = 0; k <= kmax; ++k) site_sum.emplace_back(basis.size(), basis.size());
        bool perturb_pending = perturb.has_value();

        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Config& sigma = basis.state(col);
            for (std::size_t row = 0; row < basis.size(); ++row) {
                const Config& target = basis.state(row);
                for (int j = 0; j < params.L; ++j) {
                    std::vector<Rational> tds(kmax + 1);
                    for (int k = 0; k <= kmax; ++k) {
                        tds[k] = transfer_dot_site(k, params, j, sigma, target);
                        site_sum[k].add_at(row, col, tds[k]);
                    }
                    if (row == col) continue;
                    std::string tag = config_str(sigma, params.n) + " -> " +
                                      config_str(target, params.n) + " at j=" + std::to_string(j + 1);

                    auto sig = transition_signature(sigma, target, j);
                    if (!sig) {
                        for (int k = 0; k <= kmax; ++k)
                            if (!is_zero(tds[k])) {
                                fail(rep, "channel outside Lemma support has nonzero T^" +
                                              std::to_string(k) + "'(0) term: " + tag);
                                return;
                            }
                        continue;
                    }
                    if (perturb_pending) {
                        tds[sig->depth] += 1;
                        rep.instance["perturbed_channel"] = tag;
                        perturb_pending = false;
                    }

                    const int d = sig->depth;
                    const int g = static_cast<int>(sig->moved_types.size()) - 1;
                    auto pred = channel_prediction(*sig, params, constants);
                    for (int k = 0; k < d; ++k)
                        if (!is_zero(tds[k])) {
                            fail(rep, "nonzero below depth: " + tag);
                            return;
                        }
                    if (params.x[j] * tds[d] != pred.base) {
                        fail(rep, "leading-depth value differs from reduced-diagram product: " + tag);
                        return;
                    }
                    std::vector<Rational> tK;
                    for (long K : pred.K_unmoved) tK.push_back(rational_pow(params.t, K));
                    for (int k = d; k <= kmax; ++k) {
                        if (params.x[j] * tds[k] != pred.base * elementary_symmetric(k - d, tK)) {
                            fail(rep, "unmoved-species factorization fails at k=" +
                                          std::to_string(k) + ": " + tag);
                            return;
                        }
                    }
                    // the k = n+1 summand of the telescoping sum is identically zero
                    if (elementary_symmetric(kmax - d, tK) != Rational(0)) {
                        fail(rep, "e_{n+1-d} over unmoved species unexpectedly nonzero: " + tag);
                        return;
                    }

                    Rational alternating(0);
                    for (int k = 0; k <= kmax; ++k)
                        alternating += (k % 2 == 1 ? tds[k] : -tds[k]);
                    if (sig->wanted) {
                        Rational lhs = params.x[j] * alternating / constants.Dm;
                        Rational wproduct(1);
                        for (int i = 1; i <= g; ++i) {
                            int h = sig->moved_types[i];
                            wproduct *= (Rational(1) - params.t) *
                                        rational_pow(params.t, sig->ell[i]) /
                                        (Rational(1) - rational_pow(params.t, constants.K[h]));
                        }
                        if (lhs != wproduct) {
                            fail(rep, "telescoped sum differs from the rate product: " + tag);
                            return;
                        }
                        if (lhs != params.x[j] * transition_rate(sigma, target, j, params, spec)) {
                            fail(rep, "telescoped sum differs from transition_rate: " + tag);
                            return;
                        }
                    } else {
                        if (!is_zero(alternating)) {
                            fail(rep, "unwanted channel fails to cancel: " + tag);
                            return;
                        }
                    }

                    for (const auto& zeta : zetas) {
                        Rational zsum(0);
                        for (int k = 0; k <= kmax; ++k)
                            zsum += rational_pow(-zeta, k - 1) * tds[k];
                        // zeta^{d-1}(1-t) prod(1 - zeta t^{K_hbar})
                        //   * t^{ell_{h_0}} prod_{i>=1} (1-t) t^{ell_{h_i}}
                        // (t^{ell_{h_0}} = 1 on wanted channels, where h_0 = 0)
                        Rational predicted = rational_pow(zeta, d - 1) * (Rational(1) - params.t);
                        for (const auto& tk : tK) predicted *= Rational(1) - zeta * tk;
                        predicted *= rational_pow(params.t, sig->ell[0]);
                        for (int i = 1; i <= g; ++i)
                            predicted *=
                                (Rational(1) - params.t) * rational_pow(params.t, sig->ell[i]);
                        if (params.x[j] * zsum != predicted) {
                            fail(rep, "zeta-deformed factorization fails: " + tag + " zeta=" +
                                          rational_str(zeta));
                            return;
                        }
                    }
                }
            }
        }

        // site decomposition sums back to the z-derivative of the transfer matrix
        for (int k = 0; k <= kmax; ++k) {
            TransferSpec tspec(FusionKind::Antisymmetric, k, params, spec);
            if (!compare_matrices(rep, site_sum[k], transfer_dot_zero(tspec, basis), &basis,
                                  "site decomposition of T^" + std::to_string(k) + "'(0)"))
                return;
        }

        // zeta_sum ties: zeta = 1 recovers D_m (H + sum 1/x_j Id)
        Rational xsum(0);
        for (const auto& xj : params.x) xsum += Rational(1) / xj;
        SparseMatrix<Rational> at_one = zeta_sum(params, spec, basis, Rational(1));
        SparseMatrix<Rational> expect =
            constants.Dm * (baxter_H(params, spec, basis) +
                            xsum * SparseMatrix<Rational>::identity(basis.size()));
        if (!compare_matrices(rep, at_one, expect, &basis, "zeta-sum at zeta=1")) return;

        // special values feeding the site decomposition match the table
        for (int k = 0; k <= kmax; ++k)
            if (auto bad = table_of_special_values_mismatch(params.n, k, params.t)) {
                fail(rep, *bad);
                return;
            }

        // depth values of the three reference reduced-diagram patterns
        struct DepthCase {
            Config sigma, target;
            int depth;
        };
        const std::vector<DepthCase> cases{
            {{4, 2, 1, 0, 3}, {1, 4, 2, 0, 3}, 1},
            {{4, 2, 0, 3, 1, 0}, {0, 3, 2, 4, 1, 0}, 2},
            {{4, 0, 2, 3, 1, 0}, {0, 2, 3, 4, 1, 0}, 3},
        };
        for (const auto& c : cases) {
            auto sig = transition_signature(c.sigma, c.target, 0);
            if (!sig || sig->depth != c.depth) {
                fail(rep, "reference diagram depth mismatch (expected " + std::to_string(c.depth) +
                              ")");
                return;
            }
            if (!sig->wanted) {
                // the embedded unwanted pattern must cancel in the alternating sum
                const int big_n = 4;
                const int big_L = static_cast<int>(c.sigma.size());
                ModelParams big(big_n, big_L, params.t, std::vector<Rational>(big_L, Rational(1)));
                Rational alternating(0);
                for (int k = 0; k <= big_n + 1; ++k) {
                    Rational tds = transfer_dot_site(k, big, 0, c.sigma, c.target);
                    alternating += (k % 2 == 1 ? tds : -tds);
                }
                if (!is_zero(alternating)) {
                    fail(rep, "embedded unwanted pattern fails to cancel");
                    return;
                }
            }
            const int g = static_cast<int>(sig->moved_types.size()) - 1;
            if (sig->depth > g) {
                fail(rep, "depth exceeds number of moved types minus one");
                return;
            }
            Multiplicity letters(sig->minimal_carriers.front().size(), 0);
            for (const auto& carrier : sig->minimal_carriers)
                for (std::size_t i = 0; i < carrier.size(); ++i)
                    if (carrier[i]) letters[i] = 1;
            for (std::size_t i = 0; i < letters.size(); ++i) {
                bool moved = std::find(sig->moved_types.begin(), sig->moved_types.end(),
                                       static_cast<int>(i)) != sig->moved_types.end();
                if (static_cast<bool>(letters[i]) != moved) {
                    fail(rep, "minimal carrier letters differ from moved types");
                    return;
                }
            }
        }
    });
}

// --- Jacobi-Trudi and symmetric fusion ---------------------------------------

VerificationReport verify_jacobi_trudi(const ModelParams& params, const SectorSpec& spec,
                                       std::uint64_t seed, std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    instance["seed"] = seed;
    return run_suite("jacobi-trudi", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        const int n = params.n, L = params.L;
        RationalSampler sampler(seed);

        std::vector<SparseMatrix<PolyZ>> anti, sym;
        for (int k = 0; k <= n + 1; ++k)
            anti.push_back(transfer_poly(TransferSpec(FusionKind::Antisymmetric, k, params, spec), basis));
        for (int k = 0; k <= 2; ++k)
            sym.push_back(transfer_poly(TransferSpec(FusionKind::Symmetric, k, params, spec), basis));
        if (perturb) {
            SparseMatrix<Rational> bump(basis.size(), basis.size());
            apply_perturbation(bump, perturb);
            sym[2] += promote(bump);
        }

        auto anti_at = [&](int k, const Rational& z) {
            if (k < 0 || k > n + 1) return SparseMatrix<Rational>(basis.size(), basis.size());
            return eval_at(anti[k], z);
        };

        auto zs = sampler.distinct_positive(2 * L + 1, spectral_exclusions(params));
        rep.instance["z_grid"] = rational_list(zs);
        for (const auto& z : zs) {
            // T_2(z) T^0(tz) = T^1(z) T^1(tz) - T^2(tz) T^0(z)
            auto lhs = mat_mul(eval_at(sym[2], z), anti_at(0, params.t * z));
            auto rhs = mat_mul(anti_at(1, z), anti_at(1, params.t * z)) -
                       mat_mul(anti_at(2, params.t * z), anti_at(0, z));
            if (!compare_matrices(rep, lhs, rhs, &basis, "Jacobi-Trudi (l=2) at z=" + rational_str(z)))
                return;
            // T^2(z) T^0(z/t) = T_1(z) T_1(z/t) - T_2(z/t) T_0(z)
            Rational zt = z / params.t;
            auto lhs2 = mat_mul(anti_at(2, z), anti_at(0, zt));
            auto rhs2 = mat_mul(eval_at(sym[1], z), eval_at(sym[1], zt)) -
                        mat_mul(eval_at(sym[2], zt), eval_at(sym[0], z));
            if (!compare_matrices(rep, lhs2, rhs2, &basis, "Jacobi-Trudi (k=2) at z=" + rational_str(z)))
                return;
        }

        // mixed commutativity of symmetric and antisymmetric families
        auto points = sampler.distinct_positive(2 * (L + 1), spectral_exclusions(params));
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= n + 1; ++l)
                for (int a = 0; a <= L; ++a)
                    for (int b = 0; b <= L; ++b) {
                        auto c = commutator(eval_at(sym[k], points[a]),
                                            eval_at(anti[l], points[L + 1 + b]));
                        if (!c.is_zero()) {
                            fail(rep, "[T_" + std::to_string(k) + ", T^" + std::to_string(l) +
                                          "] != 0 at grid point");
                            return;
                        }
                    }

        // explicit n = 2 expression of H through symmetric-fusion derivatives
        if (n == 2) {
            const long m0 = spec.m[0], m1 = spec.m[1];
            const Rational& t = params.t;
            auto tp = [&](long e) { return rational_pow(t, e); };
            Rational coeff1 = Rational(1) + tp(m0) + tp(1 + m0) + tp(m0 + m1) + tp(1 + m0 + m1);
            Rational c = Rational(-1) + t - tp(m0 - 1) - tp(2 * m0) - tp(1 + m0) - tp(m0 + m1 - 1) -
                         tp(2 * (m0 + m1)) - tp(1 + m0 + m1) - tp(2 * m0 + m1 - 1) -
                         Rational(2) * tp(2 * m0 + m1);
            Rational denom = (Rational(1) - t) * t * (Rational(1) - tp(m0)) * (Rational(1) - tp(m0 + m1));
            Rational xsum(0);
            for (const auto& xj : params.x) xsum += Rational(1) / xj;
            SparseMatrix<Rational> numer = coeff_matrix(sym[2], 1) - coeff1 * coeff_matrix(sym[1], 1) +
                                           (t * c * xsum) * SparseMatrix<Rational>::identity(basis.size());
            SparseMatrix<Rational> lhs = rational_inv(denom) * numer;
            if (!compare_matrices(rep, lhs, baxter_H(params, spec, basis), &basis,
                                  "explicit n=2 symmetric-fusion formula vs H"))
                return;
        }
    });
}

// --- cascade oracle ----------------------------------------------------------

VerificationReport verify_cascade_oracle(const ModelParams& params, const SectorSpec& spec,
                                         std::optional<Perturbation> perturb) {
    json instance = params_json(params);
    instance["m"] = spec.m;
    return run_suite("cascade", instance, [&](VerificationReport& rep) {
        StateBasis basis(spec);
        SparseMatrix<Rational> h = pushtasep_markov(params, basis);
        apply_perturbation(h, perturb);
        const bool t_in_unit = sgn(params.t) > 0 && params.t < Rational(1);

        for (std::size_t col = 0; col < basis.size(); ++col) {
            const Config& sigma = basis.state(col);
            SparseMatrix<Rational> from_rates(basis.size(), basis.size());
            for (int j = 0; j < params.L; ++j) {
                if (sigma[j] < 1) continue;
                auto dist = cascade_distribution(sigma, j, params.t);
                Rational total(0);
                for (const auto& [cfg, pr] : dist) total += pr;
                if (total != Rational(1)) {
                    fail(rep, "cascade probabilities sum to " + rational_str(total) + " from " +
                                  config_str(sigma, params.n) + " at j=" + std::to_string(j + 1));
                    return;
                }
                for (std::size_t row = 0; row < basis.size(); ++row) {
                    if (row == col) continue;
                    const Config& target = basis.state(row);
                    Rational rate = transition_rate(sigma, target, j, params, spec);
                    auto it = dist.find(target);
                    Rational prob = it == dist.end() ? Rational(0) : it->second;
                    if (prob != params.x[j] * rate) {
                        fail(rep, "cascade vs formal rate differ: " + config_str(sigma, params.n) +
                                      " -> " + config_str(target, params.n) + " at j=" +
                                      std::to_string(j + 1) + " (cascade " + rational_str(prob) +
                                      ", x_j rate " + rational_str(params.x[j] * rate) + ")");
                        return;
                    }
                    from_rates.add_at(row, col, rate);
                }
            }
            for (std::size_t row = 0; row < basis.size(); ++row) {
                if (row == col) continue;
                if (h.get(row, col) != from_rates.get(row, col)) {
                    fail(rep, "Markov matrix entry differs from summed rates at " +
                                  entry_label(&basis, row, col));
                    return;
                }
                if (t_in_unit && sgn(h.get(row, col)) < 0) {
                    fail(rep, "negative off-diagonal rate at " + entry_label(&basis, row, col));
                    return;
                }
            }
            if (!is_zero(h.column_sum(col))) {
                fail(rep, "column sum nonzero for source " + config_str(sigma, params.n));
                return;
            }
        }

        // the ASEP generator obeys the same column-sum/positivity contract
        SparseMatrix<Rational> asep = asep_markov(params.t, basis);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if (!is_zero(asep.column_sum(col))) {
                fail(rep, "ASEP column sum nonzero at column " + std::to_string(col));
                return;
            }
        }
        if (t_in_unit)
            for (const auto& [key, v] : asep.entries())
                if (key.first != key.second && sgn(v) < 0) {
                    fail(rep, "negative ASEP off-diagonal rate");
                    return;
                }
    });
}

}  // namespace pushtasep
