// One line per acceptance criterion; exit status 1 if any is red.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "tsw/looprep.hpp"
#include "tsw/series.hpp"
#include "tsw/verify.hpp"

using namespace tsw;

namespace
{

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string note;
};

// Every report produced along the way, for the numeric coherence criterion.
std::vector<Report> g_reports;

void absorb(Outcome &o, const Report &r, const std::string &label)
{
    o.checks += r.results.size();
    if (!r.all_passed()) {
        o.ok = false;
        o.note += " [" + label + " failed: " + r.summary() + "]";
    }
    g_reports.push_back(r);
}

bool contains(const Report &r, const std::string &prefix)
{
    for (const auto &x : r.results) {
        if (x.relation.rfind(prefix, 0) == 0) {
            return true;
        }
    }
    return false;
}

void require(Outcome &o, bool cond, const std::string &what)
{
    if (!cond) {
        o.ok = false;
        o.note += " [missing: " + what + "]";
    }
}

SuiteOptions options(int R = 2)
{
    SuiteOptions opts;
    opts.R = R;
    opts.points = default_points(1, 5);
    return opts;
}

Outcome daha_presentation()
{
    Outcome o;
    for (int ell : {1, 2, 3}) {
        Report r = run_daha_suite(Daha(ell, derived_params(3, 1).zeta), options());
        absorb(o, r, "ell=" + std::to_string(ell));
        require(o, contains(r, "X0Y1") && contains(r, "toshow-wrap"), "X0Y1/toshow at ell=" + std::to_string(ell));
        if (ell >= 2) {
            require(o, contains(r, "QTQ") || ell == 2, "QTQ");
            require(o, contains(r, "toshow-shift") && contains(r, "QYQ") && contains(r, "Pr-Y"), "Q/P conjugations");
        }
        if (ell == 3) {
            require(o, contains(r, "Qij-Y") && contains(r, "Pr-T"), "Q_ij/P_r family");
        }
    }
    // Q_ij T_{b-1} Q_ij^{-1} = T_b needs i < b < j < ell, first admissible at ell = 4.
    Report r4 = run_daha_suite(Daha(4, derived_params(3, 1).zeta), options());
    absorb(o, r4, "ell=4");
    require(o, contains(r4, "Qij-T"), "Qij-T at ell=4");
    return o;
}

Outcome finite_schur_weyl()
{
    Outcome o;
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}, {2, 3}}) {
        for (int ell : {2, 3}) {
            Report r = run_finite_suite(ParityData::standard(m, n), ell, options());
            absorb(o, r, std::to_string(m) + "|" + std::to_string(n) + " ell=" + std::to_string(ell));
            require(o, contains(r, "T-quadratic") && contains(r, "T-e-commute") && contains(r, "T-f-commute"), "finite relations");
            require(o, ell == 2 || contains(r, "T-braid"), "T-braid");
        }
    }
    return o;
}

Outcome affine_suite(Outcome &dictionary)
{
    Outcome o;
    for (int ell : {1, 2}) {
        FunctorModel fm(3, 1, ell);
        const ParityData &s = fm.standard_parity();
        Report r = run_affine_suite(fm, s, functor_battery(fm, s, default_daha_battery(fm.daha())), options());
        Report chevalley, dict;
        for (const auto &x : r.results) {
            const bool d = x.relation.rfind("zero-mode", 0) == 0 || x.relation.rfind("tree-", 0) == 0;
            (d ? dict : chevalley).add(x);
        }
        chevalley.suite = dict.suite = r.suite;
        absorb(o, chevalley, "affine ell=" + std::to_string(ell));
        require(o, contains(chevalley, "vertical:t-central") && contains(chevalley, "affine:t-central"), "t-central");
        require(o, contains(chevalley, "affine:serre-e") && contains(chevalley, "vertical:ef"), "DJ relations");
        absorb(dictionary, dict, "dictionary ell=" + std::to_string(ell));
        require(dictionary, contains(dict, "tree-e0") && contains(dict, "zero-mode-E"), "dictionary entries");
    }
    return o;
}

// Zero modes and bracket trees on V(xi) itself (one slot), next to the
// functor-space entries gathered with the affine suite.
void plain_dictionary(Outcome &o)
{
    using CF = CurrentFamily;
    using K = ChevalleyGen::Kind;
    const ParityData s = ParityData::standard(3, 1);
    ZeroNodeTrees trees = dj_drinfeld_zero_modes(s);
    auto apply = [&](const Atom &a, const PlainTensor &v) { return apply_plain_atom(s, a, v); };
    for (int j = 1; j <= s.kappa(); ++j) {
        for (int nu = -1; nu <= 1; ++nu) {
            PlainTensor v = PlainTensor::basis({j}, {nu});
            for (int i = 1; i < s.kappa(); ++i) {
                o.ok = o.ok && mode_apply_plain(s, CF::E, i, 0, v) == chevalley_apply(s, {K::e, i}, v);
                o.ok = o.ok && mode_apply_plain(s, CF::F, i, 0, v) == chevalley_apply(s, {K::f, i}, v);
                o.ok = o.ok && mode_apply_plain(s, CF::Kplus, i, 0, v) == chevalley_apply(s, {K::t, i}, v);
                o.checks += 3;
            }
            o.ok = o.ok && evaluate(trees.e0, v, apply) == chevalley_apply(s, {K::e, 0}, v);
            o.ok = o.ok && evaluate(trees.f0, v, apply) == chevalley_apply(s, {K::f, 0}, v);
            o.ok = o.ok && evaluate(trees.t0, v, apply) == chevalley_apply(s, {K::t, 0}, v);
            o.checks += 3;
        }
    }
    if (!o.ok) {
        o.note += " [plain V(xi) dictionary failed]";
    }
}

Outcome psi_and_rotation()
{
    Outcome o;
    for (auto [m, n] : {std::pair{3, 1}, {3, 2}}) {
        for (int ell : {1, 2}) {
            FunctorModel fm(m, n, ell);
            Report r = run_rotation_suite(fm, fm.standard_parity(), default_daha_battery(fm.daha()), options());
            absorb(o, r, std::to_string(m) + "|" + std::to_string(n) + " ell=" + std::to_string(ell));
            for (const char *id : {"rotate-E", "rotate-F", "rotate-K+", "rotate-K-", "wrap-E", "wrap-F", "wrap-K+", "wrap-K-"}) {
                require(o, contains(r, id), id);
            }
            if (ell >= 2) {
                for (const char *id : {"psi-case-none", "psi-case-first", "psi-case-second", "psi-case-both"}) {
                    require(o, contains(r, id), id);
                }
            }
        }
    }
    return o;
}

Outcome toroidal_master()
{
    Outcome o;
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 2, 2}}) {
        FunctorModel fm(m, n, ell);
        const ParityData &s = fm.standard_parity();
        Report r = run_toroidal_suite(fm, s, functor_battery(fm, s, default_daha_battery(fm.daha())), options());
        absorb(o, r, std::to_string(m) + "|" + std::to_string(n) + " ell=" + std::to_string(ell));
        std::set<std::string> excluded;
        for (const auto &x : r.results) {
            if (x.status == Status::excluded) {
                excluded.insert(x.relation);
            }
        }
        require(o, excluded == std::set<std::string>{"Serre5", "Serre6"}, "Serre5/6 excluded");
        for (const char *id : {"CK", "KK1", "KK2", "KE", "KF", "EF", "EEFF-zero", "EE-quadratic", "FF-quadratic", "Serre1",
                               "Serre2", "Serre3", "Serre4", "K-central", "weight"}) {
            require(o, contains(r, id), id);
        }
    }
    return o;
}

Outcome oracle_coherence()
{
    Outcome o;
    std::size_t without = 0;
    for (const Report &r : g_reports) {
        for (const auto &x : r.results) {
            if (x.status == Status::excluded) {
                continue;
            }
            ++o.checks;
            if (!x.numeric) {
                ++without;
            } else if (*x.numeric != x.status) {
                o.ok = false;
                o.note += " [numeric disagrees: " + x.relation + "]";
            }
        }
    }
    if (without != 0) {
        o.ok = false;
        o.note += " [" + std::to_string(without) + " checks without a numeric verdict]";
    }
    for (int c = -3; c <= 3; ++c) {
        o.ok = o.ok && psi_coeffs(-c, Expansion::at_infinity, 8) == psi_coeffs(c, Expansion::at_zero, 8);
        ++o.checks;
    }
    FunctorModel fm(3, 1, 1);
    const ParityData &s = fm.standard_parity();
    const auto battery = functor_battery(fm, s, default_daha_battery(fm.daha()));
    SuiteOptions opts = options();
    std::string base;
    for (int jobs : {1, 2, 4}) {
        opts.jobs = jobs;
        fm.clear_cache();
        std::string dump = run_toroidal_suite(fm, s, battery, opts).to_json().dump();
        if (base.empty()) {
            base = dump;
        } else if (dump != base) {
            o.ok = false;
            o.note += " [report differs at jobs=" + std::to_string(jobs) + "]";
        }
        ++o.checks;
    }
    return o;
}

bool report_line(int k, const char *title, const std::function<Outcome()> &fn)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %s: %s (%zu checks, %.1f s)%s\n", k, o.ok ? "PASS" : "FAIL", title, o.checks, secs,
                o.note.c_str());
    std::fflush(stdout);
    return o.ok;
}

} // namespace

int main()
{
    bool ok = true;
    Outcome dictionary;
    ok &= report_line(1, "DAHA presentation, ell 1..4", daha_presentation);
    ok &= report_line(2, "finite Schur-Weyl commutation", finite_schur_weyl);
    ok &= report_line(3, "affine Chevalley relations, (3,1), ell 1..2", [&] { return affine_suite(dictionary); });
    ok &= report_line(4, "zero-mode dictionary and bracket trees", [&] {
        plain_dictionary(dictionary);
        return dictionary;
    });
    ok &= report_line(5, "Psi well-definedness and rotation identities", psi_and_rotation);
    ok &= report_line(6, "toroidal relations, (3,1) ell=1 and (3,2) ell=2, R=2", toroidal_master);
    ok &= report_line(7, "numeric coherence, psi inversion, jobs determinism", oracle_coherence);
    return ok ? 0 : 1;
}
