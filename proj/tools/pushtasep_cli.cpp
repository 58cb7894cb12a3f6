// Command-line surface: build exact matrices, print stationary data, run
// verification suites. All numbers cross this boundary as rational strings.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "pushtasep/io.hpp"
#include "pushtasep/qoscillator.hpp"
#include "pushtasep/verify.hpp"

using namespace pushtasep;
using nlohmann::json;

namespace {

struct Options {
    int n = 2;
    int L = 0;
    int k = 1;
    std::string t = "1/2";
    std::string x;  // comma-separated rationals; empty means all ones
    std::string m;  // comma-separated ints; empty means every sector
    std::string z;
    std::string kind;
    std::string construction = "closed";
    bool poly = false;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string listing;
    std::string config;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split_commas(s)) out.push_back(std::stoi(part));
    return out;
}

std::vector<Rational> parse_x(const Options& o) {
    if (o.x.empty()) return std::vector<Rational>(o.L, Rational(1));
    std::vector<Rational> out;
    for (const auto& part : split_commas(o.x)) out.push_back(parse_rational(part));
    return out;
}

void load_config(Options& o, const CLI::App& cmd) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot open config file " + o.config);
    json j = json::parse(in);
    auto flag_given = [&](const std::string& name) {
        auto* opt = cmd.get_option_no_throw("--" + name);
        return opt != nullptr && opt->count() > 0;
    };
    auto set_str = [&](const char* key, std::string& field) {
        if (j.contains(key) && !flag_given(key)) field = j.at(key).get<std::string>();
    };
    auto set_list = [&](const char* key, std::string& field) {
        if (!j.contains(key) || flag_given(key)) return;
        std::string joined;
        for (const auto& e : j.at(key)) {
            if (!joined.empty()) joined += ',';
            joined += e.is_string() ? e.get<std::string>() : e.dump();
        }
        field = joined;
    };
    if (j.contains("n") && !flag_given("n")) o.n = j.at("n").get<int>();
    if (j.contains("L") && !flag_given("L")) o.L = j.at("L").get<int>();
    if (j.contains("k") && !flag_given("k")) o.k = j.at("k").get<int>();
    if (j.contains("seed") && !flag_given("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("poly") && !flag_given("poly")) o.poly = j.at("poly").get<bool>();
    set_str("t", o.t);
    set_str("z", o.z);
    set_str("kind", o.kind);
    set_str("construction", o.construction);
    set_str("out", o.out);
    set_list("x", o.x);
    set_list("m", o.m);
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text << "\n";
}

json sector_json(const SectorSpec& spec) {
    return json{{"n", spec.n}, {"L", spec.L}, {"m", spec.m}};
}

ModelParams params_of(const Options& o) {
    return ModelParams(o.n, o.L, parse_rational(o.t), parse_x(o));
}

std::vector<SectorSpec> sectors_of(const Options& o) {
    if (!o.m.empty()) return {SectorSpec(o.n, o.L, parse_ints(o.m))};
    return all_sectors(o.n, o.L);
}

int run_build_markov(const Options& o) {
    ModelParams params = params_of(o);
    if (o.kind != "push" && o.kind != "asep")
        throw CLI::ValidationError("--kind", "expected push or asep");
    json meta{{"kind", o.kind}, {"n", o.n}, {"L", o.L}, {"t", rational_str(params.t)}};
    json xs = json::array();
    for (const auto& xj : params.x) xs.push_back(rational_str(xj));
    meta["x"] = xs;

    SparseMatrix<Rational> h(0, 0);
    std::optional<StateBasis> basis;
    if (o.kind == "push") {
        if (o.m.empty()) throw CLI::ValidationError("--m", "build markov --kind push needs a sector");
        SectorSpec spec(o.n, o.L, parse_ints(o.m));
        meta["m"] = spec.m;
        basis.emplace(spec);
        h = pushtasep_markov(params, *basis);
    } else {
        if (!o.m.empty()) {
            SectorSpec spec(o.n, o.L, parse_ints(o.m));
            meta["m"] = spec.m;
            basis.emplace(spec);
        } else {
            basis.emplace(o.n, o.L);
        }
        h = asep_markov(params.t, *basis);
    }
    json states = json::array();
    for (const auto& s : basis->states()) states.push_back(config_str(s, o.n));
    meta["states"] = states;
    write_output(o.out, matrix_to_json(h, meta).dump());
    if (!o.listing.empty()) write_output(o.listing, markov_listing(h, *basis));
    return 0;
}

int run_build_transfer(const Options& o) {
    ModelParams params = params_of(o);
    FusionKind kind;
    if (o.kind == "antisym")
        kind = FusionKind::Antisymmetric;
    else if (o.kind == "sym")
        kind = FusionKind::Symmetric;
    else
        throw CLI::ValidationError("--kind", "expected antisym or sym");
    if (o.z.empty() && !o.poly)
        throw CLI::ValidationError("--z", "need either --z or --poly");

    std::optional<SectorSpec> sector;
    if (!o.m.empty()) sector.emplace(o.n, o.L, parse_ints(o.m));
    TransferSpec spec(kind, o.k, params, sector);
    StateBasis basis = basis_for(spec);

    json meta{{"kind", o.kind}, {"k", o.k}, {"n", o.n}, {"L", o.L},
              {"t", rational_str(params.t)}};
    json xs = json::array();
    for (const auto& xj : params.x) xs.push_back(rational_str(xj));
    meta["x"] = xs;
    if (sector) meta["m"] = sector->m;
    json states = json::array();
    for (const auto& s : basis.states()) states.push_back(config_str(s, o.n));
    meta["states"] = states;

    if (o.poly) {
        write_output(o.out, matrix_to_json(transfer_poly(spec, basis), meta).dump());
    } else {
        Rational z = parse_rational(o.z);
        meta["z"] = rational_str(z);
        write_output(o.out, matrix_to_json(transfer_matrix(spec, basis, z), meta).dump());
    }
    return 0;
}

int run_build_rmatrix(const Options& o) {
    Rational t = parse_rational(o.t);
    Rational z = parse_rational(o.z.empty() ? "1/2" : o.z);
    SparseMatrix<Rational> m(0, 0);
    if (o.construction == "closed")
        m = s_k1_closed(o.n, o.k, t, z);
    else if (o.construction == "fused")
        m = s_k1_fused(o.n, o.k, t, z);
    else if (o.construction == "threed")
        m = s_k1_3d(o.n, o.k, t, z);
    else
        throw CLI::ValidationError("--construction", "expected closed, fused or threed");
    json meta{{"construction", o.construction},
              {"n", o.n},
              {"k", o.k},
              {"t", rational_str(t)},
              {"z", rational_str(z)}};
    // index maps: row = a_index*(n+1) + b over the letter-list order of B^k
    json arrays = json::array();
    for (const auto& a : enumerate_hardcore(o.n, o.k)) arrays.push_back(a);
    meta["hardcore_arrays"] = arrays;
    write_output(o.out, matrix_to_json(m, meta).dump());
    return 0;
}

int run_stationary(const Options& o) {
    if (o.m.empty()) throw CLI::ValidationError("--m", "stationary needs a sector");
    ModelParams params = params_of(o);
    SectorSpec spec(o.n, o.L, parse_ints(o.m));
    StateBasis basis(spec);
    auto kernel = kernel_basis(pushtasep_markov(params, basis));

    json out = sector_json(spec);
    out["t"] = rational_str(params.t);
    json xs = json::array();
    for (const auto& xj : params.x) xs.push_back(rational_str(xj));
    out["x"] = xs;
    out["seed"] = o.seed;
    out["kernel_dimension"] = kernel.size();
    json states = json::array();
    for (const auto& s : basis.states()) states.push_back(config_str(s, o.n));
    out["states"] = states;
    json vectors = json::array();
    for (const auto& v : kernel) vectors.push_back(vector_to_json(v));
    out["kernel_vectors"] = vectors;

    RationalSampler sampler(o.seed);
    auto zs = sampler.distinct_positive(o.L + 1, spectral_exclusions(params));
    out["z_points"] = json::array();
    for (const auto& z : zs) out["z_points"].push_back(rational_str(z));
    json table = json::array();
    for (int k = 0; k <= o.n + 1; ++k) {
        json row = json::array();
        for (const auto& z : zs)
            row.push_back(rational_str(stationary_eigenvalue(k, params, spec, z)));
        table.push_back(json{{"k", k}, {"values", row}});
    }
    out["eigenvalues"] = table;
    write_output(o.out, out.dump());
    return 0;
}

int run_verify(const Options& o, const std::string& which) {
    int exit_code = 0;
    std::vector<VerificationReport> reports;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (which != "r-agreement" && o.L < 2)
        throw CLI::ValidationError("--L", "this suite needs a ring length of at least 2");

    if (want("r-agreement")) reports.push_back(verify_r_constructions(o.n, o.seed));
    if (want("asep")) reports.push_back(verify_asep_baxter(o.n, o.L, parse_rational(o.t)));
    if (want("main-theorem") || want("commutativity") || want("stationary") ||
        want("proof-machinery") || want("jacobi-trudi") || want("cascade")) {
        ModelParams params = params_of(o);
        for (const auto& spec : sectors_of(o)) {
            if (want("main-theorem")) reports.push_back(verify_main_theorem(params, spec));
            if (want("commutativity"))
                reports.push_back(verify_commutativity(params, spec, o.seed));
            if (want("stationary")) reports.push_back(verify_stationary(params, spec, o.seed));
            if (want("proof-machinery"))
                reports.push_back(verify_proof_machinery(params, spec, o.seed));
            if (want("jacobi-trudi"))
                reports.push_back(verify_jacobi_trudi(params, spec, o.seed));
            if (want("cascade")) reports.push_back(verify_cascade_oracle(params, spec));
        }
    }
    for (const auto& rep : reports) {
        std::cout << rep.to_json_line() << "\n";
        if (!rep.pass) exit_code = 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact transfer-matrix toolkit for the multispecies inhomogeneous t-PushTASEP"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool with_model) {
        cmd->add_option("--config", o.config, "JSON file mirroring the flags");
        if (with_model) {
            cmd->add_option("--n", o.n, "number of species");
            cmd->add_option("--L", o.L, "ring length");
            cmd->add_option("--t", o.t, "rational t, e.g. 1/2");
            cmd->add_option("--x", o.x, "comma-separated inhomogeneities (default: all 1)");
            cmd->add_option("--m", o.m, "comma-separated sector multiplicities");
        }
        cmd->add_option("--seed", o.seed, "sampling seed");
        cmd->add_option("--out", o.out, "output path, - for stdout");
    };

    auto* build = app.add_subcommand("build", "construct and export exact matrices");
    build->require_subcommand(1);
    auto* markov = build->add_subcommand("markov", "PushTASEP or ASEP Markov matrix");
    add_common(markov, true);
    markov->add_option("--kind", o.kind, "push or asep")->required();
    markov->add_option("--listing", o.listing, "also write a human-readable rate listing");
    auto* transfer = build->add_subcommand("transfer", "transfer matrix T^k(z) or T_k(z)");
    add_common(transfer, true);
    transfer->add_option("--kind", o.kind, "antisym or sym")->required();
    transfer->add_option("--k", o.k, "auxiliary level");
    transfer->add_option("--z", o.z, "rational spectral point");
    transfer->add_flag("--poly", o.poly, "export polynomial entries instead of a point value");
    auto* rmatrix = build->add_subcommand("rmatrix", "R-matrix by one of three constructions");
    add_common(rmatrix, false);
    rmatrix->add_option("--construction", o.construction, "closed, fused or threed");
    rmatrix->add_option("--n", o.n, "number of species");
    rmatrix->add_option("--k", o.k, "auxiliary level");
    rmatrix->add_option("--t", o.t, "rational t");
    rmatrix->add_option("--z", o.z, "rational spectral point");

    auto* stationary = app.add_subcommand("stationary", "kernel vector and eigenvalue table");
    add_common(stationary, true);

    auto* verify = app.add_subcommand("verify", "run verification suites, one JSON line each");
    std::string which;
    verify
        ->add_option("suite", which,
                     "all, main-theorem, commutativity, r-agreement, stationary, asep, "
                     "proof-machinery, jacobi-trudi or cascade")
        ->required()
        ->check(CLI::IsMember({"all", "main-theorem", "commutativity", "r-agreement", "stationary",
                               "asep", "proof-machinery", "jacobi-trudi", "cascade"}));
    add_common(verify, true);

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* cmd : {markov, transfer, rmatrix, stationary, verify})
            if (cmd->parsed()) load_config(o, *cmd);
        if (o.L == 0 && !o.x.empty()) o.L = static_cast<int>(split_commas(o.x).size());
        if (o.L == 0 && !o.m.empty()) {
            o.L = 0;
            for (int mi : parse_ints(o.m)) o.L += mi;
        }

        if (markov->parsed()) return run_build_markov(o);
        if (transfer->parsed()) return run_build_transfer(o);
        if (rmatrix->parsed()) return run_build_rmatrix(o);
        if (stationary->parsed()) return run_stationary(o);
        if (verify->parsed()) return run_verify(o, which);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
