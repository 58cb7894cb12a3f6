#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "pushtasep/io.hpp"
#include "pushtasep/qoscillator.hpp"
#include "pushtasep/verify.hpp"

namespace py = pybind11;
using namespace pushtasep;
using nlohmann::json;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (const auto& s : xs) out.push_back(parse_rational(s));
    return out;
}

std::vector<Rational> x_or_ones(const std::optional<std::vector<std::string>>& x, int L) {
    if (!x) return std::vector<Rational>(L, Rational(1));
    return to_rationals(*x);
}

json basis_meta(const StateBasis& basis, int n) {
    json states = json::array();
    for (const auto& s : basis.states()) states.push_back(config_str(s, n));
    return states;
}

std::string markov_json(const std::string& kind, int n, int L,
                        const std::optional<std::vector<int>>& m, const std::string& t,
                        const std::optional<std::vector<std::string>>& x) {
    ModelParams params(n, L, parse_rational(t), x_or_ones(x, L));
    json meta{{"kind", kind}, {"n", n}, {"L", L}, {"t", rational_str(params.t)}};
    SparseMatrix<Rational> h(0, 0);
    if (kind == "push") {
        if (!m) throw std::invalid_argument("markov_json: PushTASEP needs a sector m");
        SectorSpec spec(n, L, *m);
        StateBasis basis(spec);
        meta["m"] = *m;
        meta["states"] = basis_meta(basis, n);
        h = pushtasep_markov(params, basis);
    } else if (kind == "asep") {
        StateBasis basis = m ? StateBasis(SectorSpec(n, L, *m)) : StateBasis(n, L);
        if (m) meta["m"] = *m;
        meta["states"] = basis_meta(basis, n);
        h = asep_markov(params.t, basis);
    } else {
        throw std::invalid_argument("markov_json: kind must be push or asep");
    }
    return matrix_to_json(h, meta).dump();
}

std::string transfer_json(const std::string& kind, int k, int n, int L,
                          const std::optional<std::vector<int>>& m, const std::string& t,
                          const std::optional<std::vector<std::string>>& x,
                          const std::optional<std::string>& z) {
    ModelParams params(n, L, parse_rational(t), x_or_ones(x, L));
    FusionKind fusion;
    if (kind == "antisym")
        fusion = FusionKind::Antisymmetric;
    else if (kind == "sym")
        fusion = FusionKind::Symmetric;
    else
        throw std::invalid_argument("transfer_json: kind must be antisym or sym");
    std::optional<SectorSpec> sector;
    if (m) sector.emplace(n, L, *m);
    TransferSpec spec(fusion, k, params, sector);
    StateBasis basis = basis_for(spec);
    json meta{{"kind", kind}, {"k", k}, {"n", n}, {"L", L}, {"t", rational_str(params.t)}};
    if (m) meta["m"] = *m;
    meta["states"] = basis_meta(basis, n);
    if (z) {
        meta["z"] = *z;
        return matrix_to_json(transfer_matrix(spec, basis, parse_rational(*z)), meta).dump();
    }
    return matrix_to_json(transfer_poly(spec, basis), meta).dump();
}

std::string rmatrix_json(const std::string& construction, int n, int k, const std::string& t,
                         const std::string& z) {
    Rational tr = parse_rational(t), zr = parse_rational(z);
    SparseMatrix<Rational> m(0, 0);
    if (construction == "closed")
        m = s_k1_closed(n, k, tr, zr);
    else if (construction == "fused")
        m = s_k1_fused(n, k, tr, zr);
    else if (construction == "threed")
        m = s_k1_3d(n, k, tr, zr);
    else
        throw std::invalid_argument("rmatrix_json: construction must be closed, fused or threed");
    return matrix_to_json(m, json{{"construction", construction},
                                  {"n", n},
                                  {"k", k},
                                  {"t", rational_str(tr)},
                                  {"z", rational_str(zr)}})
        .dump();
}

std::string stationary_json(int n, int L, const std::vector<int>& m, const std::string& t,
                            const std::optional<std::vector<std::string>>& x, std::uint64_t seed) {
    ModelParams params(n, L, parse_rational(t), x_or_ones(x, L));
    SectorSpec spec(n, L, m);
    StateBasis basis(spec);
    auto kernel = kernel_basis(pushtasep_markov(params, basis));
    json out{{"n", n}, {"L", L}, {"m", m}, {"t", rational_str(params.t)}};
    out["states"] = basis_meta(basis, n);
    out["kernel_dimension"] = kernel.size();
    json vectors = json::array();
    for (const auto& v : kernel) vectors.push_back(vector_to_json(v));
    out["kernel_vectors"] = vectors;
    RationalSampler sampler(seed);
    auto zs = sampler.distinct_positive(L + 1, spectral_exclusions(params));
    json zpts = json::array(), table = json::array();
    for (const auto& zp : zs) zpts.push_back(rational_str(zp));
    for (int k = 0; k <= n + 1; ++k) {
        json row = json::array();
        for (const auto& zp : zs) row.push_back(rational_str(stationary_eigenvalue(k, params, spec, zp)));
        table.push_back(json{{"k", k}, {"values", row}});
    }
    out["z_points"] = zpts;
    out["eigenvalues"] = table;
    return out.dump();
}

std::vector<std::string> verify_suite(const std::string& which, int n, int L,
                                      const std::optional<std::vector<int>>& m, const std::string& t,
                                      const std::optional<std::vector<std::string>>& x,
                                      std::uint64_t seed) {
    std::vector<VerificationReport> reports;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("r-agreement")) reports.push_back(verify_r_constructions(n, seed));
    if (want("asep")) reports.push_back(verify_asep_baxter(n, L, parse_rational(t)));
    if (want("main-theorem") || want("commutativity") || want("stationary") ||
        want("proof-machinery") || want("jacobi-trudi") || want("cascade")) {
        ModelParams params(n, L, parse_rational(t), x_or_ones(x, L));
        std::vector<SectorSpec> sectors = m ? std::vector<SectorSpec>{SectorSpec(n, L, *m)}
                                            : all_sectors(n, L);
        for (const auto& spec : sectors) {
            if (want("main-theorem")) reports.push_back(verify_main_theorem(params, spec));
            if (want("commutativity")) reports.push_back(verify_commutativity(params, spec, seed));
            if (want("stationary")) reports.push_back(verify_stationary(params, spec, seed));
            if (want("proof-machinery")) reports.push_back(verify_proof_machinery(params, spec, seed));
            if (want("jacobi-trudi")) reports.push_back(verify_jacobi_trudi(params, spec, seed));
            if (want("cascade")) reports.push_back(verify_cascade_oracle(params, spec));
        }
    }
    std::vector<std::string> lines;
    lines.reserve(reports.size());
    for (const auto& rep : reports) lines.push_back(rep.to_json_line());
    return lines;
}

std::string cascade_json(const std::string& sigma, int j, const std::string& t) {
    Config cfg;
    for (char ch : sigma) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("cascade_json: bad configuration");
        cfg.push_back(ch - '0');
    }
    auto dist = cascade_distribution(cfg, j, parse_rational(t));
    int n = 0;
    for (int v : cfg) n = std::max(n, v);
    json out = json::object();
    for (const auto& [target, prob] : dist) out[config_str(target, n)] = rational_str(prob);
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact transfer-matrix toolkit for the multispecies inhomogeneous t-PushTASEP";
    mod.def("markov_json", &markov_json, py::arg("kind"), py::arg("n"), py::arg("L"),
            py::arg("m") = py::none(), py::arg("t") = "1/2", py::arg("x") = py::none());
    mod.def("transfer_json", &transfer_json, py::arg("kind"), py::arg("k"), py::arg("n"),
            py::arg("L"), py::arg("m") = py::none(), py::arg("t") = "1/2",
            py::arg("x") = py::none(), py::arg("z") = py::none());
    mod.def("rmatrix_json", &rmatrix_json, py::arg("construction"), py::arg("n"), py::arg("k"),
            py::arg("t"), py::arg("z"));
    mod.def("stationary_json", &stationary_json, py::arg("n"), py::arg("L"), py::arg("m"),
            py::arg("t") = "1/2", py::arg("x") = py::none(), py::arg("seed") = 1);
    mod.def("verify", &verify_suite, py::arg("suite"), py::arg("n"), py::arg("L"),
            py::arg("m") = py::none(), py::arg("t") = "1/2", py::arg("x") = py::none(),
            py::arg("seed") = 1);
    mod.def("cascade_json", &cascade_json, py::arg("sigma"), py::arg("j"), py::arg("t") = "1/2");
}
