// Command-line front end.  Every subcommand prints a JSON report to stdout
// (deterministic for a fixed seed) and an optional human-readable table to
// stderr with --human.  Exit codes: 0 success / positive verdict, 1 negative
// verdict, 2 input or axiom error, 64 usage error.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "naka/json_io.hpp"

using namespace naka;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

// `ref` is either a builtin name or a path to a spec file
Json load_spec(const std::string& ref, bool builtin, const BuiltinParams& p) {
    if (builtin) return builtin_spec(ref, p);
    return load_json(ref);
}

Json hash_inputs(const std::vector<std::pair<std::string, Json>>& inputs) {
    Json j;
    for (const auto& [name, spec] : inputs) j[name] = fnv1a64(spec.dump());
    return j;
}

void emit(const std::string& command, const std::vector<std::pair<std::string, Json>>& inputs,
          const CmdResult& r, unsigned seed, bool human, double seconds) {
    Json report = make_report(command, hash_inputs(inputs), r, seed);
    std::cout << report.dump(2) << "\n";
    if (human) {
        std::cerr << command << "  (" << seconds << " s)\n";
        for (const auto& [k, v] : r.verdicts.items())
            std::cerr << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "\n";
    }
}

RelHopfBimodule load_relhopf_parts(const Json& hopf_j, const Json& a_j, const Json& b_j,
                                   const Json& m_j) {
    HopfAlgebra h = hopf_from_json(hopf_j);
    ComoduleAlgebra a = comodalg_from_json(a_j);
    ComoduleAlgebra b = comodalg_from_json(b_j);
    a.hopf = h;
    b.hopf = h;
    const std::size_t dm = m_j.at("dim").get<std::size_t>(), dh = a.hdim();
    Matrix co(a.ctx(), dh * dm, dm);
    for (const auto& row : m_j.at("coaction"))
        co.at(row.at(1).get<std::size_t>() * dm + row.at(2).get<std::size_t>(),
              row.at(0).get<std::size_t>()) = parse_scalar(a.ctx(), row.at(3).get<std::string>());
    Bimodule bm(a.algebra, b.algebra, dm);
    for (const auto& row : m_j.at("left_action"))
        bm.left().action_of_basis(row.at(0).get<std::size_t>()) =
            matrix_from_json(a.ctx(), row.at(1));
    for (const auto& row : m_j.at("right_action"))
        bm.right().action_of_basis(row.at(0).get<std::size_t>()) =
            matrix_from_json(a.ctx(), row.at(1));
    return {std::move(a), std::move(b), std::move(co), std::move(bm)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Nakayama / Frobenius calculator"};
    app.require_subcommand(1);

    unsigned seed = 0;
    bool human = false;
    app.add_option("--seed", seed, "seed for randomized certificates");
    app.add_flag("--human", human, "print a summary table to stderr");

    BuiltinParams params;
    std::string builtin, out_path, spec_path, hopf_path, a_path, b_path, module_path;
    std::string base_path, ring_path;

    auto add_params = [&](CLI::App* c) {
        c->add_option("--N", params.N, "builtin parameter N");
        c->add_option("--d", params.d, "builtin parameter d");
        c->add_option("--m", params.m, "builtin parameter m");
        c->add_option("--xi", params.xi, "builtin parameter xi (a scalar)");
    };

    auto* build = app.add_subcommand("build", "write a builtin spec to a file");
    build->add_option("name", builtin, "builtin name")->required();
    build->add_option("-o,--output", out_path, "output path (default stdout)");
    add_params(build);

    auto* hopf = app.add_subcommand("hopf", "hopf-algebra commands");
    auto* hreport = hopf->add_subcommand("report", "integrals, distinguished grouplike, Radford");
    hreport->add_option("--spec", spec_path, "hopf spec file");
    hreport->add_option("--builtin", builtin, "builtin hopf algebra");
    add_params(hreport);

    auto* cls = app.add_subcommand("classify", "Frobenius / symmetric classification");
    cls->add_option("--spec", spec_path, "algebra spec file")->required();

    auto* fun = app.add_subcommand("functor", "apply the Nakayama functor to a module");
    fun->add_option("--spec", spec_path, "algebra spec file")->required();
    fun->add_option("--module", module_path, "module spec file")->required();

    auto* mon = app.add_subcommand("monad-check", "compare the twist formula with the direct tensor");
    mon->add_option("--base", base_path, "base algebra spec")->required();
    mon->add_option("--ring", ring_path, "ring spec (algebra + unit_map)")->required();
    mon->add_option("--module", module_path, "module spec over the ring")->required();

    auto* com = app.add_subcommand("comodalg", "comodule-algebra commands");
    auto* cscan = com->add_subcommand("scan", "scan all grouplikes for twisted cointegrals");
    cscan->add_option("--hopf", hopf_path, "hopf spec file");
    cscan->add_option("--spec", spec_path, "comodule-algebra spec file");
    cscan->add_option("--builtin", builtin, "builtin comodule algebra");
    add_params(cscan);
    auto* cuni = com->add_subcommand("unimodular", "decide unimodularity");
    cuni->add_option("--hopf", hopf_path, "hopf spec file");
    cuni->add_option("--spec", spec_path, "comodule-algebra spec file");
    cuni->add_option("--builtin", builtin, "builtin comodule algebra");
    add_params(cuni);

    auto* rel = app.add_subcommand("relhopf", "relative Hopf bimodule commands");
    auto* rnak = rel->add_subcommand("nakayama", "closed-formula Nakayama twist");
    rnak->add_option("--hopf", hopf_path, "hopf spec file")->required();
    rnak->add_option("--A", a_path, "left comodule algebra")->required();
    rnak->add_option("--B", b_path, "right comodule algebra")->required();
    rnak->add_option("--module", module_path, "bimodule spec")->required();
    auto* rmod = rel->add_subcommand("modular-object", "the modular object of a comodule algebra");
    rmod->add_option("--hopf", hopf_path, "hopf spec file");
    rmod->add_option("--A", a_path, "comodule algebra spec");
    rmod->add_option("--builtin", builtin, "builtin comodule algebra");
    add_params(rmod);
    auto* rora = rel->add_subcommand("oracle", "independent check through the smash ring");
    rora->add_option("--hopf", hopf_path, "hopf spec file")->required();
    rora->add_option("--A", a_path, "left comodule algebra")->required();
    rora->add_option("--B", b_path, "right comodule algebra")->required();
    rora->add_option("--module", module_path, "bimodule spec")->required();

    auto* suite = app.add_subcommand("paper-suite", "run the full worked-example battery");
    suite->add_option("--N", params.N, "odd root-of-unity order");

    // allow --seed / --human after the subcommand name
    for (auto* s : app.get_subcommands({})) {
        s->fallthrough();
        for (auto* t : s->get_subcommands({})) t->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    try {
        if (*build) {
            Json j = builtin_spec(builtin, params);
            if (out_path.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(out_path);
                if (!out) throw SpecError("cannot write '" + out_path + "'");
                out << j.dump(2) << "\n";
            }
            return 0;
        }
        if (*hreport) {
            Json j = builtin.empty() ? load_json(spec_path) : builtin_spec(builtin, params);
            CmdResult r = cmd_hopf_report(hopf_from_json(j));
            emit("hopf report", {{"spec", j}}, r, seed, human, elapsed());
            return r.exit_code;
        }
        if (*cls) {
            Json j = load_json(spec_path);
            CmdResult r = cmd_classify(algebra_from_json(j), seed);
            emit("classify", {{"spec", j}}, r, seed, human, elapsed());
            return r.exit_code;
        }
        if (*fun) {
            Json aj = load_json(spec_path), mj = load_json(module_path);
            AlgebraPtr a = algebra_from_json(aj);
            CmdResult r = cmd_functor(a, left_module_from_json(mj, a), seed);
            emit("functor", {{"spec", aj}, {"module", mj}}, r, seed, human, elapsed());
            return r.exit_code;
        }
        if (*mon) {
            Json kj = load_json(base_path), lj = load_json(ring_path), mj = load_json(module_path);
            AlgebraPtr base = algebra_from_json(kj);
            AlgebraPtr lambda = algebra_from_json(lj);
            Matrix unit_map = matrix_from_json(base->ctx(), lj.at("unit_map"));
            LeftModule mod = left_module_from_json(mj, lambda);
            CmdResult r = cmd_monad_check(base, lambda, unit_map, mod, seed);
            emit("monad-check", {{"base", kj}, {"ring", lj}, {"module", mj}}, r, seed, human,
                 elapsed());
            return r.exit_code;
        }
        if (*cscan || *cuni || *rmod) {
            Json j;
            if (!builtin.empty()) {
                j = builtin_spec(builtin, params);
            } else {
                j = load_json(spec_path.empty() ? a_path : spec_path);
                if (!hopf_path.empty()) j["hopf"] = load_json(hopf_path);
            }
            ComoduleAlgebra ca = comodalg_from_json(j);
            CmdResult r = *cscan   ? cmd_comodalg_scan(ca)
                          : *cuni  ? cmd_comodalg_unimodular(ca, seed)
                                   : cmd_relhopf_modular(ca, seed);
            const char* name = *cscan ? "comodalg scan"
                               : *cuni ? "comodalg unimodular" : "relhopf modular-object";
            emit(name, {{"spec", j}}, r, seed, human, elapsed());
            return r.exit_code;
        }
        if (*rnak || *rora) {
            Json hj = load_json(hopf_path), aj = load_json(a_path), bj = load_json(b_path),
                 mj = load_json(module_path);
            RelHopfBimodule m = load_relhopf_parts(hj, aj, bj, mj);
            CmdResult r = *rnak ? cmd_relhopf_nakayama(m, seed) : cmd_relhopf_oracle(m, seed);
            emit(*rnak ? "relhopf nakayama" : "relhopf oracle",
                 {{"hopf", hj}, {"A", aj}, {"B", bj}, {"module", mj}}, r, seed, human, elapsed());
            return r.exit_code;
        }
        if (*suite) {
            if (params.N < 3 || params.N % 2 == 0) {
                std::cerr << "paper-suite requires an odd N >= 3\n";
                return 64;
            }
            CmdResult r = paper_suite(params.N, seed);
            emit("paper-suite", {{"N", Json(params.N)}}, r, seed, human, elapsed());
            return r.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 64;
}
