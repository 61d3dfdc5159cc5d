#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsw/daha.hpp"
#include "tsw/toroidal.hpp"
#include "tsw/verify.hpp"

using namespace tsw;

namespace
{

struct RunConfig {
    int m = 3;
    int n = 1;
    int ell = 1;
    int R = 2;
    std::string parity = "standard";
    std::string mode = "both";
    std::string q0 = "2";
    std::string d0 = "3";
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out;
};

// Bad input: reported and mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string &text, const char *flag)
{
    try {
        Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument &) {
        throw UsageError(std::string(flag) + ": not a rational: " + text);
    }
}

ParityData parity_of(RunConfig &cfg)
{
    if (cfg.parity == "standard") {
        if (cfg.m == cfg.n) {
            throw UsageError("m ≠ n required");
        }
        return ParityData::standard(cfg.m, cfg.n);
    }
    ParityData s = [&] {
        try {
            return ParityData::parse(cfg.parity);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }();
    cfg.m = s.m();
    cfg.n = s.n();
    if (cfg.m == cfg.n) {
        throw UsageError("m ≠ n required");
    }
    return s;
}

SuiteOptions options_of(const RunConfig &cfg)
{
    SuiteOptions opts;
    opts.R = cfg.R;
    try {
        opts.mode = parse_check_mode(cfg.mode);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Rational q0 = parse_rational(cfg.q0, "--q0");
    Rational d0 = parse_rational(cfg.d0, "--d0");
    if (q0 == 0 || d0 == 0 || abs(q0) == 1) {
        throw UsageError("--q0/--d0: need q0, d0 nonzero and |q0| ≠ 1");
    }
    opts.points = default_points(cfg.seed, 5);
    opts.points.front() = {q0, d0};
    opts.seed = cfg.seed;
    opts.jobs = cfg.jobs;
    return opts;
}

void check_ranges(const RunConfig &cfg)
{
    if (cfg.ell < 1) {
        throw UsageError("--ell must be at least 1");
    }
    if (cfg.R < 0) {
        throw UsageError("--modes must be nonnegative");
    }
    if (cfg.jobs < 1) {
        throw UsageError("--jobs must be at least 1");
    }
}

void warn_regime(const ParityData &s, int ell)
{
    if (ell >= s.kappa() - 2) {
        std::cerr << "warning: ell = " << ell << " ≥ κ-2 = " << s.kappa() - 2
                  << "; the Schur-Weyl functor is not an equivalence here\n";
    }
}

void emit(const nlohmann::json &j, const RunConfig &cfg)
{
    if (cfg.out.empty()) {
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) {
        throw UsageError("cannot write " + cfg.out);
    }
    f << j.dump(2) << "\n";
}

int finish(const Report &report, const RunConfig &cfg)
{
    emit(report.to_json(), cfg);
    std::cout << report.summary();
    return report.all_passed() ? 0 : 1;
}

std::vector<FunctorVector> battery_of(const FunctorModel &fm, const ParityData &s)
{
    return functor_battery(fm, s, default_daha_battery(fm.daha()));
}

int run_verify(const std::string &suite, RunConfig cfg)
{
    check_ranges(cfg);
    SuiteOptions opts = options_of(cfg);
    if (suite == "daha") {
        if (cfg.m == cfg.n) {
            throw UsageError("m ≠ n required");
        }
        Daha h(cfg.ell, derived_params(cfg.m, cfg.n).zeta);
        return finish(run_daha_suite(h, opts), cfg);
    }
    ParityData s = parity_of(cfg);
    if (suite == "finite") {
        if (cfg.ell < 2) {
            throw UsageError("verify finite needs --ell ≥ 2");
        }
        return finish(run_finite_suite(s, cfg.ell, opts), cfg);
    }
    if (s.kappa() < 4) {
        throw UsageError("κ ≥ 4 required");
    }
    warn_regime(s, cfg.ell);
    FunctorModel fm(cfg.m, cfg.n, cfg.ell);
    if (suite == "toroidal") {
        return finish(run_toroidal_suite(fm, s, battery_of(fm, s), opts), cfg);
    }
    if (suite == "affine") {
        return finish(run_affine_suite(fm, s, battery_of(fm, s), opts), cfg);
    }
    if (suite == "rotation") {
        return finish(run_rotation_suite(fm, s, default_daha_battery(fm.daha()), opts), cfg);
    }
    throw UsageError("unknown suite '" + suite + "'");
}

Atom parse_atom(const std::string &op, int node, int mode)
{
    static const std::map<std::string, Atom::Kind> kinds{
        {"E", Atom::Kind::E},   {"F", Atom::Kind::F},   {"K+", Atom::Kind::Kplus}, {"K-", Atom::Kind::Kminus},
        {"e", Atom::Kind::Ce},  {"f", Atom::Kind::Cf},  {"t", Atom::Kind::Ct},     {"t^-1", Atom::Kind::Ctinv},
    };
    auto it = kinds.find(op);
    if (it == kinds.end()) {
        throw UsageError("unknown op '" + op + "'");
    }
    return Atom{it->second, node, mode};
}

ZeroModel parse_model(const std::string &text)
{
    for (ZeroModel m : {ZeroModel::horizontal, ZeroModel::vertical, ZeroModel::affine}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw UsageError("unknown zero-node model '" + text + "'");
}

int run_dump(RunConfig cfg, const std::string &op, int node, int mode, int r, const std::string &model)
{
    check_ranges(cfg);
    nlohmann::json j;
    if (op == "P" || op == "Q") {
        if (cfg.m == cfg.n) {
            throw UsageError("m ≠ n required");
        }
        Daha h(cfg.ell, derived_params(cfg.m, cfg.n).zeta);
        GeneratorWord w;
        if (op == "P") {
            if (r < 1 || r > cfg.ell) {
                throw UsageError("--r must lie in 1..ell");
            }
            w = p_r(cfg.ell, r);
        } else if (op == "Q") {
            w = {Qg()};
        }
        j["op"] = op;
        j["ell"] = cfg.ell;
        j["word"] = to_string(w);
        j["normal_form"] = h.word(w).to_string();
    } else if (op.rfind("word:", 0) == 0) {
        if (cfg.m == cfg.n) {
            throw UsageError("m ≠ n required");
        }
        Daha h(cfg.ell, derived_params(cfg.m, cfg.n).zeta);
        GeneratorWord w;
        try {
            w = parse_word(op.substr(5));
            j["normal_form"] = h.word(w).to_string();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        j["op"] = "word";
        j["word"] = to_string(w);
    } else {
        ParityData s = parity_of(cfg);
        FunctorModel fm(cfg.m, cfg.n, cfg.ell);
        const auto battery = battery_of(fm, s);
        if (op == "psi") {
            nlohmann::json rows = nlohmann::json::array();
            for (const FunctorVector &v : battery) {
                rows.push_back({{"input", v.to_string()}, {"output", fm.psi_apply(v).to_string()}});
            }
            j["op"] = "psi";
            j["rows"] = rows;
        } else {
            Atom a = parse_atom(op, node, mode);
            j["op"] = op;
            j["rows"] = dump_functor_operator(fm, a, battery, parse_model(model));
        }
    }
    if (cfg.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        emit(j, cfg);
    }
    return 0;
}

int run_bench(RunConfig cfg)
{
    check_ranges(cfg);
    SuiteOptions opts = options_of(cfg);
    ParityData s = parity_of(cfg);
    if (s.kappa() < 4) {
        throw UsageError("κ ≥ 4 required");
    }
    FunctorModel fm(cfg.m, cfg.n, cfg.ell);
    const auto battery = battery_of(fm, s);
    nlohmann::json j;
    j["params"] = {{"m", cfg.m}, {"n", cfg.n}, {"ell", cfg.ell}, {"R", cfg.R}, {"jobs", cfg.jobs}};
    auto time = [&](const char *name, auto &&fn) {
        auto t0 = std::chrono::steady_clock::now();
        Report r = fn();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        j["suites"][name] = {{"seconds", secs}, {"checks", r.results.size()}, {"fail", r.count(Status::fail)}};
        std::cout << name << ": " << r.results.size() << " checks in " << secs << " s\n";
    };
    time("daha", [&] { return run_daha_suite(fm.daha(), opts); });
    time("affine", [&] { return run_affine_suite(fm, s, battery, opts); });
    time("rotation", [&] { return run_rotation_suite(fm, s, default_daha_battery(fm.daha()), opts); });
    fm.clear_cache();
    time("toroidal", [&] { return run_toroidal_suite(fm, s, battery, opts); });
    emit(j, cfg);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Checks of the quantum toroidal superalgebra action built from DAHA modules"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file; flags take precedence");

    RunConfig cfg;
    app.fallthrough();
    app.add_option("--m", cfg.m, "Number of even directions")->capture_default_str();
    app.add_option("--n", cfg.n, "Number of odd directions")->capture_default_str();
    app.add_option("--ell", cfg.ell, "Tensor length")->capture_default_str();
    app.add_option("--modes", cfg.R, "Mode bound R")->capture_default_str();
    app.add_option("--parity", cfg.parity, "Parity sequence such as ++-+, or standard")->capture_default_str();
    app.add_option("--mode", cfg.mode, "symbolic, numeric or both")->capture_default_str();
    app.add_option("--q0", cfg.q0, "Numeric value of q")->capture_default_str();
    app.add_option("--d0", cfg.d0, "Numeric value of d")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    app.add_option("--out", cfg.out, "JSON output path");

    CLI::App *verify = app.add_subcommand("verify", "Run a relation suite");
    std::string suite;
    verify->add_option("suite", suite, "finite, affine, toroidal, daha or rotation")
        ->required()
        ->check(CLI::IsMember({"finite", "affine", "toroidal", "daha", "rotation"}));

    // On dump, --mode is the mode of the current.
    CLI::App *dump = app.add_subcommand("dump", "Print an operator's action");
    std::string op;
    int node = 1, mode = 0, r = 1;
    std::string model = "horizontal";
    dump->add_option("--op", op, "E, F, K+, K-, e, f, t, t^-1, psi, P, Q or word:<letters>")->required();
    dump->add_option("--node", node, "Node")->capture_default_str();
    dump->add_option("--mode", mode, "Mode of a current")->capture_default_str();
    dump->add_option("--r", r, "Index of P_r")->capture_default_str();
    dump->add_option("--model", model, "Zero-node model: horizontal, vertical or affine")->capture_default_str();

    app.add_subcommand("bench", "Time the suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            return run_verify(suite, cfg);
        }
        if (*dump) {
            return run_dump(cfg, op, node, mode, r, model);
        }
        return run_bench(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
