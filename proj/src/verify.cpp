#include "tsw/verify.hpp"

#include <random>
#include <stdexcept>

#include "tsw/looprep.hpp"

namespace tsw
{

namespace
{

using AK = Atom::Kind;

const char *const kExcludedReason = "excluded (mn=2 incompatible with κ≥4)";

// Root-lattice weight in the basis alpha_0, ..., alpha_{kappa-1}.
struct Weighted {
    OpExpr op;
    std::vector<int> weight;
};

int pairing(const ParityData &s, const std::vector<int> &a, const std::vector<int> &b)
{
    int v = 0;
    for (int i = 0; i < s.kappa(); ++i) {
        for (int j = 0; j < s.kappa(); ++j) {
            v += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * s.cartan(i, j);
        }
    }
    return v;
}

// lb{X, Y} = [X, Y]_{q^{-<beta|gamma>}}
Weighted lb(const ParityData &s, const Weighted &x, const Weighted &y)
{
    std::vector<int> w = x.weight;
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] += y.weight[k];
    }
    return {bracket(x.op, y.op, Scalar::q_pow(-pairing(s, x.weight, y.weight))), std::move(w)};
}

class Builder
{
public:
    explicit Builder(const ParityData &s) : s_(s) {}

    OpExpr atom(AK k, int node, int mode = 0) const { return atom_expr(s_, Atom{k, s_.node(node), mode}); }

    // E or F current (or Chevalley letter when chevalley is set) with its weight.
    Weighted root(bool raising, int node, int mode, bool chevalley) const
    {
        std::vector<int> w(static_cast<std::size_t>(s_.kappa()), 0);
        w[static_cast<std::size_t>(s_.node(node))] = raising ? 1 : -1;
        AK k = chevalley ? (raising ? AK::Ce : AK::Cf) : (raising ? AK::E : AK::F);
        return {atom(k, node, mode), std::move(w)};
    }

    // K^+ and K^- share one series K^+-(z) = sum_N K_N z^{-N}; out-of-range
    // modes act by zero.
    OpExpr k(char sign, int node, int mode) const { return atom(sign == '+' ? AK::Kplus : AK::Kminus, node, mode); }

    OpExpr serre_pair(const ParityData &s, bool raising, int i, int j, int r1, int r2, int m, bool chevalley) const
    {
        Weighted a = root(raising, i, r1, chevalley);
        Weighted b = root(raising, i, r2, chevalley);
        Weighted c = root(raising, j, m, chevalley);
        return lb(s, a, lb(s, b, c)).op;
    }

    OpExpr serre_quad(const ParityData &s, bool raising, int i, int r1, int r2, int s1, int s2, bool chevalley) const
    {
        Weighted a = root(raising, i, r1, chevalley);
        Weighted up = root(raising, i + 1, s1, chevalley);
        Weighted b = root(raising, i, r2, chevalley);
        Weighted down = root(raising, i - 1, s2, chevalley);
        return lb(s, a, lb(s, up, lb(s, b, down))).op;
    }

private:
    const ParityData &s_;
};

Scalar q_minus_qinv() { return Scalar::q_pow(1) - Scalar::q_pow(-1); }

int sign_of(int p) { return p ? -1 : 1; }

std::string to_string_nodes_modes(const std::vector<int> &v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k ? "," : "") + std::to_string(v[k]);
    }
    return out;
}

NumericPoints points_for(const SuiteOptions &opts)
{
    return opts.mode == CheckMode::symbolic ? NumericPoints{} : opts.points;
}

CheckResult excluded(const char *relation)
{
    CheckResult r;
    r.relation = relation;
    r.status = Status::excluded;
    r.residual = kExcludedReason;
    return r;
}

void fill_params(Report &report, const FunctorModel &fm, const ParityData &s, const SuiteOptions &opts)
{
    report.params["m"] = s.m();
    report.params["n"] = s.n();
    report.params["ell"] = fm.ell();
    report.params["R"] = opts.R;
    report.params["parity"] = s.to_string();
    report.params["mode"] = to_string(opts.mode);
}

CheckResult judge_daha(const DahaElement &diff, const SuiteOptions &opts)
{
    CheckResult r;
    const NumericPoints points = points_for(opts);
    if (!points.empty()) {
        try {
            bool zero = true;
            for (const auto &[q0, d0] : points) {
                zero = zero && diff.specializes_to_zero(q0, d0);
            }
            r.numeric = zero ? Status::pass : Status::fail;
        } catch (const std::domain_error &) {
            r.numeric.reset();
        }
    }
    const bool fail = opts.mode != CheckMode::numeric || !r.numeric ? !diff.is_zero() : *r.numeric == Status::fail;
    r.status = fail ? Status::fail : Status::pass;
    if (fail) {
        r.residual = diff.to_string();
    }
    return r;
}

struct Task {
    std::string relation;
    std::vector<int> nodes;
    std::vector<int> modes;
    OpExpr lhs;
    OpExpr rhs;
};

std::vector<CheckResult> run_tasks(const FunctorModel &fm, const std::vector<Task> &tasks, const std::vector<FunctorVector> &battery,
                                   ZeroModel model, const SuiteOptions &opts)
{
    std::vector<std::string> ids;
    ids.reserve(battery.size());
    for (const FunctorVector &v : battery) {
        ids.push_back(v.to_string());
    }
    const NumericPoints points = points_for(opts);
    const bool symbolic = opts.mode != CheckMode::numeric;
    auto apply = [&](const Atom &a, const FunctorVector &v) { return fm.apply(a, v, model); };
    return run_ordered(tasks.size() * battery.size(), opts.jobs, [&](std::size_t k) {
        const Task &t = tasks[k / battery.size()];
        const FunctorVector &v = battery[k % battery.size()];
        CheckResult r = judge_difference(fm, evaluate(t.lhs, v, apply) - evaluate(t.rhs, v, apply), points, symbolic);
        r.relation = t.relation;
        r.nodes = t.nodes;
        r.modes = t.modes;
        r.vector = ids[k % battery.size()];
        return r;
    });
}

} // namespace

std::string describe(const RelationInstance &ri)
{
    return ri.id + "[" + std::string(1, ri.variant) + "](" + to_string_nodes_modes(ri.nodes) + ";" +
           to_string_nodes_modes(ri.modes) + ")";
}

std::pair<OpExpr, OpExpr> expand_relation(const ParityData &s, const RelationInstance &ri)
{
    Builder b(s);
    const auto &nd = ri.nodes;
    const auto &md = ri.modes;
    auto need = [&](std::size_t nodes, std::size_t modes) {
        if (nd.size() != nodes || md.size() != modes) {
            throw std::invalid_argument("expand_relation: wrong arity for " + describe(ri));
        }
    };
    const bool raising = ri.variant == 'E';

    if (ri.id == "CK") {
        if (ri.variant == 'K') {
            need(2, 0);
            OpExpr ki = b.k('+', nd[0], 0), kj = b.k('+', nd[1], 0);
            return {ki * kj, kj * ki};
        }
        need(2, 1);
        // K_i X_j K_i^{-1} = q^{+-a_ij} X_j
        OpExpr x = b.root(raising, nd[1], md[0], false).op;
        const int a = s.cartan(nd[0], nd[1]);
        return {b.k('+', nd[0], 0) * x * b.k('-', nd[0], 0), x * Scalar::q_pow(raising ? a : -a)};
    }
    if (ri.id == "KK1") {
        need(2, 2);
        OpExpr x = b.k(ri.variant, nd[0], md[0]), y = b.k(ri.variant, nd[1], md[1]);
        return {x * y, y * x};
    }
    if (ri.id == "KK2") {
        // At C = 1 both rational prefactors are 1.
        need(2, 2);
        OpExpr x = b.k('-', nd[0], md[0]), y = b.k('+', nd[1], md[1]);
        return {x * y, y * x};
    }
    if (ri.id == "KE" || ri.id == "KF") {
        // D K_{r+1} X_s - Q K_r X_{s+1} = D Q X_s K_{r+1} - X_{s+1} K_r
        need(2, 2);
        const bool e = ri.id == "KE";
        const int i = nd[0], j = nd[1], r = md[0], sm = md[1];
        const Scalar D = Scalar::d_pow(s.m_matrix(i, j));
        const Scalar Q = Scalar::q_pow(e ? s.cartan(i, j) : -s.cartan(i, j));
        OpExpr xs = b.root(e, j, sm, false).op, xs1 = b.root(e, j, sm + 1, false).op;
        OpExpr kr = b.k(ri.variant, i, r), kr1 = b.k(ri.variant, i, r + 1);
        return {D * (kr1 * xs) - Q * (kr * xs1), D * Q * (xs * kr1) - xs1 * kr};
    }
    if (ri.id == "EF") {
        // (q - q^{-1}) [E_{i,r}, F_{j,s}] = delta_ij (K^+_{i,r+s} - K^-_{i,r+s})
        need(2, 2);
        OpExpr lhs = bracket(b.root(true, nd[0], md[0], false).op, b.root(false, nd[1], md[1], false).op) * q_minus_qinv();
        OpExpr rhs;
        if (s.node(nd[0]) == s.node(nd[1])) {
            rhs = b.k('+', nd[0], md[0] + md[1]) - b.k('-', nd[0], md[0] + md[1]);
        }
        return {lhs, rhs};
    }
    if (ri.id == "EEFF-zero") {
        need(2, 2);
        if (s.cartan(nd[0], nd[1]) != 0) {
            throw std::invalid_argument("expand_relation: EEFF-zero needs a_ij = 0");
        }
        return {bracket(b.root(raising, nd[0], md[0], false).op, b.root(raising, nd[1], md[1], false).op), OpExpr()};
    }
    if (ri.id == "EE-quadratic" || ri.id == "FF-quadratic") {
        // D X_{i,r+1} X_{j,s} - Q X_{i,r} X_{j,s+1}
        //   = (-1)^{|i||j|} (D Q X_{j,s} X_{i,r+1} - X_{j,s+1} X_{i,r})
        need(2, 2);
        const bool e = ri.id == "EE-quadratic";
        const int i = nd[0], j = nd[1], r = md[0], sm = md[1];
        const int a = s.cartan(i, j);
        if (a == 0) {
            throw std::invalid_argument("expand_relation: quadratic relation needs a_ij != 0");
        }
        const Scalar D = Scalar::d_pow(s.m_matrix(i, j));
        const Scalar Q = Scalar::q_pow(e ? a : -a);
        OpExpr xi = b.root(e, i, r, false).op, xi1 = b.root(e, i, r + 1, false).op;
        OpExpr xj = b.root(e, j, sm, false).op, xj1 = b.root(e, j, sm + 1, false).op;
        const Scalar sg(sign_of(s.node_parity(i) * s.node_parity(j)));
        return {D * (xi1 * xj) - Q * (xi * xj1), sg * (D * Q * (xj * xi1) - xj1 * xi)};
    }
    if (ri.id == "Serre1" || ri.id == "Serre2") {
        // Sym_{r1,r2} lb{X_{i,r1}, lb{X_{i,r2}, X_{j,s}}} = 0, j = i +- 1
        need(2, 3);
        const bool e = ri.id == "Serre1";
        if (s.cartan(nd[0], nd[0]) == 0) {
            throw std::invalid_argument("expand_relation: Serre1/2 need a_ii != 0");
        }
        OpExpr lhs = b.serre_pair(s, e, nd[0], nd[1], md[0], md[1], md[2], false);
        if (md[0] != md[1]) {
            lhs += b.serre_pair(s, e, nd[0], nd[1], md[1], md[0], md[2], false);
        }
        return {lhs, OpExpr()};
    }
    if (ri.id == "Serre3" || ri.id == "Serre4") {
        // Sym_{r1,r2} lb{X_{i,r1}, lb{X_{i+1,s1}, lb{X_{i,r2}, X_{i-1,s2}}}} = 0
        need(1, 4);
        const bool e = ri.id == "Serre3";
        if (s.cartan(nd[0], nd[0]) != 0) {
            throw std::invalid_argument("expand_relation: Serre3/4 need a_ii = 0");
        }
        if (s.m() * s.n() == 2) {
            throw std::invalid_argument("expand_relation: Serre3/4 need mn != 2");
        }
        OpExpr lhs = b.serre_quad(s, e, nd[0], md[0], md[2], md[1], md[3], false);
        if (md[0] != md[2]) {
            lhs += b.serre_quad(s, e, nd[0], md[2], md[0], md[1], md[3], false);
        }
        return {lhs, OpExpr()};
    }
    if (ri.id == "Serre5" || ri.id == "Serre6") {
        throw std::invalid_argument(std::string("expand_relation: ") + ri.id + " " + kExcludedReason);
    }
    throw std::invalid_argument("expand_relation: unknown relation " + ri.id);
}

std::vector<RelationInstance> enumerate_relations(const ParityData &s, int R)
{
    const int kappa = s.kappa();
    std::vector<RelationInstance> out;
    for (int i = 0; i < kappa; ++i) {
        for (int j = 0; j < kappa; ++j) {
            if (i < j) {
                out.push_back({"CK", {i, j}, {}, 'K'});
            }
            for (char v : {'E', 'F'}) {
                for (int r = -R; r <= R; ++r) {
                    out.push_back({"CK", {i, j}, {r}, v});
                }
            }
        }
    }
    for (int i = 0; i < kappa; ++i) {
        for (int j = 0; j < kappa; ++j) {
            for (int r = 0; r <= R; ++r) {
                for (int t = 0; t <= R; ++t) {
                    if (i < j || (i == j && r < t)) {
                        out.push_back({"KK1", {i, j}, {r, t}, '+'});
                        out.push_back({"KK1", {i, j}, {-r, -t}, '-'});
                    }
                    out.push_back({"KK2", {i, j}, {-r, t}, '-'});
                }
            }
        }
    }
    for (const char *id : {"KE", "KF"}) {
        for (char v : {'+', '-'}) {
            for (int i = 0; i < kappa; ++i) {
                for (int j = 0; j < kappa; ++j) {
                    // K^+ modes r, r+1 in [-1, R+1]; K^- modes in [-R-1, 1].
                    const int lo = v == '+' ? -1 : -R - 1;
                    const int hi = v == '+' ? R : 0;
                    for (int r = lo; r <= hi; ++r) {
                        for (int t = -R; t <= R; ++t) {
                            out.push_back({id, {i, j}, {r, t}, v});
                        }
                    }
                }
            }
        }
    }
    for (int i = 0; i < kappa; ++i) {
        for (int j = 0; j < kappa; ++j) {
            for (int r = -R; r <= R; ++r) {
                for (int t = -R; t <= R; ++t) {
                    out.push_back({"EF", {i, j}, {r, t}, 'E'});
                }
            }
        }
    }
    for (int i = 0; i < kappa; ++i) {
        for (int j = i; j < kappa; ++j) {
            const bool zero = s.cartan(i, j) == 0;
            for (int r = -R; r <= R; ++r) {
                for (int t = -R; t <= R; ++t) {
                    if (zero && (i < j || r <= t)) {
                        out.push_back({"EEFF-zero", {i, j}, {r, t}, 'E'});
                        out.push_back({"EEFF-zero", {i, j}, {r, t}, 'F'});
                    }
                }
            }
        }
    }
    for (const char *id : {"EE-quadratic", "FF-quadratic"}) {
        for (int i = 0; i < kappa; ++i) {
            for (int j = 0; j < kappa; ++j) {
                if (s.cartan(i, j) == 0) {
                    continue;
                }
                for (int r = -R; r <= R; ++r) {
                    for (int t = -R; t <= R; ++t) {
                        out.push_back({id, {i, j}, {r, t}, id[0]});
                    }
                }
            }
        }
    }
    for (int i = 0; i < kappa; ++i) {
        if (s.cartan(i, i) == 0) {
            continue;
        }
        for (const char *id : {"Serre1", "Serre2"}) {
            for (int d : {1, -1}) {
                for (int r1 = -R; r1 <= R; ++r1) {
                    for (int r2 = r1; r2 <= R; ++r2) {
                        for (int t = -R; t <= R; ++t) {
                            out.push_back({id, {i, s.node(i + d)}, {r1, r2, t}, id[5] == '1' ? 'E' : 'F'});
                        }
                    }
                }
            }
        }
    }
    if (s.m() * s.n() != 2) {
        for (int i = 0; i < kappa; ++i) {
            if (s.cartan(i, i) != 0) {
                continue;
            }
            for (const char *id : {"Serre3", "Serre4"}) {
                for (int r1 = -R; r1 <= R; ++r1) {
                    for (int r2 = r1; r2 <= R; ++r2) {
                        for (int t1 = -R; t1 <= R; ++t1) {
                            for (int t2 = -R; t2 <= R; ++t2) {
                                out.push_back({id, {i}, {r1, t1, r2, t2}, id[5] == '3' ? 'E' : 'F'});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<std::pair<std::string, std::pair<OpExpr, OpExpr>>> chevalley_relations(const ParityData &s)
{
    Builder b(s);
    const int kappa = s.kappa();
    std::vector<std::pair<std::string, std::pair<OpExpr, OpExpr>>> out;
    auto t = [&](int i) { return b.atom(AK::Ct, i); };
    auto tinv = [&](int i) { return b.atom(AK::Ctinv, i); };
    auto e = [&](int i) { return b.atom(AK::Ce, i); };
    auto f = [&](int i) { return b.atom(AK::Cf, i); };
    for (int i = 0; i < kappa; ++i) {
        out.push_back({"t-inverse", {t(i) * tinv(i), OpExpr::identity()}});
        for (int j = 0; j < kappa; ++j) {
            const int a = s.cartan(i, j);
            if (i < j) {
                out.push_back({"t-commute", {t(i) * t(j), t(j) * t(i)}});
            }
            out.push_back({"t-e", {t(i) * e(j) * tinv(i), e(j) * Scalar::q_pow(a)}});
            out.push_back({"t-f", {t(i) * f(j) * tinv(i), f(j) * Scalar::q_pow(-a)}});
            // (q - q^{-1}) [e_i, f_j] = delta_ij (t_i - t_i^{-1})
            out.push_back({"ef", {bracket(e(i), f(j)) * q_minus_qinv(), i == j ? t(i) - tinv(i) : OpExpr()}});
            if (a == 0 && i <= j) {
                out.push_back({"ee-zero", {bracket(e(i), e(j)), OpExpr()}});
                out.push_back({"ff-zero", {bracket(f(i), f(j)), OpExpr()}});
            }
        }
        if (s.cartan(i, i) != 0) {
            for (int d : {1, -1}) {
                out.push_back({"serre-e", {b.serre_pair(s, true, i, i + d, 0, 0, 0, true), OpExpr()}});
                out.push_back({"serre-f", {b.serre_pair(s, false, i, i + d, 0, 0, 0, true), OpExpr()}});
            }
        } else if (s.m() * s.n() != 2) {
            out.push_back({"serre-e", {b.serre_quad(s, true, i, 0, 0, 0, 0, true), OpExpr()}});
            out.push_back({"serre-f", {b.serre_quad(s, false, i, 0, 0, 0, 0, true), OpExpr()}});
        }
    }
    OpExpr prod = OpExpr::identity();
    for (int i = 0; i < kappa; ++i) {
        prod = prod * t(i);
    }
    out.push_back({"t-central", {prod, OpExpr::identity()}});
    return out;
}

const char *to_string(CheckMode m)
{
    switch (m) {
    case CheckMode::symbolic:
        return "symbolic";
    case CheckMode::numeric:
        return "numeric";
    default:
        return "both";
    }
}

CheckMode parse_check_mode(const std::string &text)
{
    if (text == "symbolic") {
        return CheckMode::symbolic;
    }
    if (text == "numeric") {
        return CheckMode::numeric;
    }
    if (text == "both") {
        return CheckMode::both;
    }
    throw std::invalid_argument("unknown mode '" + text + "' (symbolic, numeric or both)");
}

std::vector<std::pair<Rational, Rational>> default_points(std::uint64_t seed, int extra)
{
    std::vector<std::pair<Rational, Rational>> out{{Rational(2), Rational(3)}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 9);
    while (static_cast<int>(out.size()) < extra + 1) {
        Rational a(num(rng), num(rng)), c(num(rng), num(rng));
        a.canonicalize();
        c.canonicalize();
        if (a == 1) {
            continue;
        }
        out.emplace_back(a * a, c * c);
    }
    return out;
}

Report run_toroidal_suite(const FunctorModel &fm, const ParityData &s, const std::vector<FunctorVector> &battery,
                          const SuiteOptions &opts)
{
    if (s.kappa() < 4) {
        throw std::invalid_argument("κ ≥ 4 required");
    }
    Report report;
    report.suite = "toroidal";
    fill_params(report, fm, s, opts);

    std::vector<Task> tasks;
    for (const RelationInstance &ri : enumerate_relations(s, opts.R)) {
        auto [lhs, rhs] = expand_relation(s, ri);
        tasks.push_back({ri.id, ri.nodes, ri.modes, std::move(lhs), std::move(rhs)});
    }
    Builder b(s);
    OpExpr central = OpExpr::identity();
    for (int i = 0; i < s.kappa(); ++i) {
        central = central * b.k('+', i, 0);
    }
    tasks.push_back({"K-central", {}, {}, central, OpExpr::identity()});
    for (CheckResult &r : run_tasks(fm, tasks, battery, ZeroModel::horizontal, opts)) {
        report.add(std::move(r));
    }

    // K_i on w (x) v_j is q^{s_a lambda_a - s_b lambda_b}, (a, b) = (i, i+1).
    const NumericPoints points = points_for(opts);
    for (const FunctorVector &v : battery) {
        if (v.terms().size() != 1) {
            continue;
        }
        const std::vector<int> &j = v.terms().begin()->first;
        for (int i = 0; i < s.kappa(); ++i) {
            const int a = i == 0 ? s.kappa() : i;
            const int c = s.node(i + 1) == 0 ? s.kappa() : s.node(i + 1);
            int la = 0, lc = 0;
            for (int x : j) {
                la += x == a;
                lc += x == c;
            }
            FunctorVector expect = v * Scalar::q_pow(s.s(a) * la - s.s(c) * lc);
            CheckResult r = judge_difference(fm, fm.apply(Atom{AK::Kplus, i, 0}, v) - expect, points, opts.mode != CheckMode::numeric);
            r.relation = "weight";
            r.nodes = {i};
            r.vector = v.to_string();
            report.add(std::move(r));
        }
    }
    report.add(excluded("Serre5"));
    report.add(excluded("Serre6"));
    return report;
}

Report run_affine_suite(const FunctorModel &fm, const ParityData &s, const std::vector<FunctorVector> &battery,
                        const SuiteOptions &opts)
{
    Report report;
    report.suite = "affine";
    fill_params(report, fm, s, opts);
    const auto rels = chevalley_relations(s);
    for (ZeroModel model : {ZeroModel::vertical, ZeroModel::affine}) {
        std::vector<Task> tasks;
        for (const auto &[id, sides] : rels) {
            tasks.push_back({std::string(to_string(model)) + ":" + id, {}, {}, sides.first, sides.second});
        }
        for (CheckResult &r : run_tasks(fm, tasks, battery, model, opts)) {
            report.add(std::move(r));
        }
    }

    // Zero modes of the currents at i in I against the finite Chevalley letters.
    Builder b(s);
    std::vector<Task> dict;
    for (int i = 1; i < s.kappa(); ++i) {
        dict.push_back({"zero-mode-E", {i}, {0}, b.atom(AK::E, i, 0), b.atom(AK::Ce, i)});
        dict.push_back({"zero-mode-F", {i}, {0}, b.atom(AK::F, i, 0), b.atom(AK::Cf, i)});
        dict.push_back({"zero-mode-K", {i}, {0}, b.atom(AK::Kplus, i, 0), b.atom(AK::Ct, i)});
    }
    if (s.is_standard()) {
        ZeroNodeTrees trees = dj_drinfeld_zero_modes(s);
        dict.push_back({"tree-e0", {0}, {}, trees.e0, b.atom(AK::Ce, 0)});
        dict.push_back({"tree-f0", {0}, {}, trees.f0, b.atom(AK::Cf, 0)});
        dict.push_back({"tree-t0", {0}, {}, trees.t0, b.atom(AK::Ct, 0)});
    }
    for (CheckResult &r : run_tasks(fm, dict, battery, ZeroModel::vertical, opts)) {
        report.add(std::move(r));
    }
    return report;
}

Report run_finite_suite(const ParityData &s, int ell, const SuiteOptions &opts)
{
    Report report = schur_weyl_commutation_check(s, ell, points_for(opts));
    report.suite = "finite";
    report.params["m"] = s.m();
    report.params["n"] = s.n();
    report.params["ell"] = ell;
    report.params["parity"] = s.to_string();
    report.params["mode"] = to_string(opts.mode);
    return report;
}

Report run_daha_suite(const Daha &h, const SuiteOptions &opts)
{
    DahaCheckOptions dopts;
    dopts.seed = opts.seed;
    dopts.numeric_points = points_for(opts);
    Report report = check_daha_presentation(h, dopts);
    report.params["mode"] = to_string(opts.mode);

    // w Q Y_{i-1} Q^{-1} = w Y_i and w Q Y_ell Q^{-1} = zeta w Y_1 for random words w.
    const int L = h.ell();
    std::mt19937_64 rng(opts.seed);
    std::vector<Letter> letters;
    for (int i = (L >= 2 ? 0 : 1); i < L; ++i) {
        letters.push_back(T(i));
        letters.push_back(T(i, -1));
    }
    for (int j = 1; j <= L; ++j) {
        letters.push_back(X(j));
        letters.push_back(X(j, -1));
        letters.push_back(Y(j));
        letters.push_back(Y(j, -1));
    }
    letters.push_back(Qg());
    letters.push_back(Qg(-1));
    for (int k = 0; k < 8; ++k) {
        GeneratorWord w;
        const int len = static_cast<int>(rng() % 5);
        for (int t = 0; t < len; ++t) {
            w.push_back(letters[rng() % letters.size()]);
        }
        const DahaElement we = h.word(w);
        for (int i = 2; i <= L + 1; ++i) {
            const bool wrap = i == L + 1;
            DahaElement lhs = h.apply(we, {Qg(), Y(wrap ? L : i - 1), Qg(-1)});
            DahaElement rhs = wrap ? h.mul_Y(we, 1) * h.zeta() : h.mul_Y(we, i);
            CheckResult r = judge_daha(lhs - rhs, opts);
            r.relation = wrap ? "toshow-wrap" : "toshow-shift";
            r.nodes = {wrap ? 1 : i};
            r.vector = to_string(w);
            report.add(std::move(r));
        }
    }
    return report;
}

Report run_rotation_suite(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws,
                          const SuiteOptions &opts)
{
    const NumericPoints points = points_for(opts);
    Report report = psi_well_defined_check(fm, s, ws, points);
    report.append(rotation_identity_check(fm, s, opts.R, functor_battery(fm, s, ws), points));
    report.suite = "rotation";
    fill_params(report, fm, s, opts);
    return report;
}

} // namespace tsw
