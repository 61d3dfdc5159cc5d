#include "tsw/looprep.hpp"

#include <stdexcept>

namespace tsw
{

PlainTensor PlainTensor::basis(const std::vector<int> &j, std::vector<int> nu, const Scalar &c)
{
    PlainTensor t(static_cast<int>(j.size()));
    if (nu.empty()) {
        nu.assign(j.size(), 0);
    }
    t.add_term(j, nu, c);
    return t;
}

void PlainTensor::add_term(const Key &k, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void PlainTensor::add_term(const std::vector<int> &j, const std::vector<int> &nu, const Scalar &c)
{
    if (static_cast<int>(j.size()) != ell_ || static_cast<int>(nu.size()) != ell_) {
        throw std::invalid_argument("PlainTensor: key length differs from ell");
    }
    Key k = j;
    k.insert(k.end(), nu.begin(), nu.end());
    add_term(k, c);
}

PlainTensor &PlainTensor::operator+=(const PlainTensor &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

PlainTensor &PlainTensor::operator-=(const PlainTensor &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, -c);
    }
    return *this;
}

PlainTensor &PlainTensor::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

bool PlainTensor::specializes_to_zero(const Rational &q0, const Rational &d0) const
{
    for (const auto &[k, c] : terms_) {
        if (specialize(c, q0, d0) != 0) {
            return false;
        }
    }
    return true;
}

namespace
{

std::string join(const std::vector<int> &v)
{
    std::string s;
    for (std::size_t a = 0; a < v.size(); ++a) {
        s += (a ? "," : "") + std::to_string(v[a]);
    }
    return s;
}

bool all_zero(const std::vector<int> &v)
{
    for (int x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

// t_i eigenvalue exponent on v_j: s_j (delta_{i,j} - delta_{i+1,j}), indices mod kappa.
int t_exponent(const ParityData &pd, int i, int j)
{
    const int k = pd.kappa();
    auto same = [k](int a, int b) { return ((a - b) % k + k) % k == 0; };
    return pd.s(j) * ((same(i, j) ? 1 : 0) - (same(i + 1, j) ? 1 : 0));
}

int wrap_label(int kappa, int j)
{
    return ((j - 1) % kappa + kappa) % kappa + 1;
}

} // namespace

std::string PlainTensor::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[k, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string cs = c.to_string();
        out += c.is_monomial() ? cs : "(" + cs + ")";
        std::vector<int> nu = exponents(k);
        if (!all_zero(nu)) {
            out += " * xi^(" + join(nu) + ")";
        }
        out += " * v[" + join(labels(k)) + "]";
    }
    return out;
}

PlainTensor chevalley_apply(const ParityData &pd, ChevalleyGen g, const PlainTensor &v)
{
    const int kappa = pd.kappa();
    const int i = pd.node(g.node);
    if (g.node < 0 || g.node >= kappa) {
        throw std::out_of_range("chevalley_apply: node out of range");
    }
    const int L = v.ell();
    PlainTensor out(L);
    for (const auto &[key, c] : v.terms()) {
        std::vector<int> j = v.labels(key);
        std::vector<int> nu = v.exponents(key);
        if (g.kind == ChevalleyGen::Kind::t || g.kind == ChevalleyGen::Kind::tinv) {
            int e = 0;
            for (int a : j) {
                e += t_exponent(pd, i, a);
            }
            out.add_term(j, nu, c * Scalar::q_pow(g.kind == ChevalleyGen::Kind::t ? e : -e));
            continue;
        }
        const bool raise = g.kind == ChevalleyGen::Kind::e;
        // e_i: v_{i+1} -> v_i, t_i on later slots. f_i: v_i -> s_i v_{i+1}, t_i^{-1} on earlier slots.
        const int source = raise ? wrap_label(kappa, i + 1) : wrap_label(kappa, i);
        int odd_before = 0;
        for (int a = 0; a < L; ++a) {
            if (j[static_cast<std::size_t>(a)] == source) {
                int e = 0;
                if (raise) {
                    for (int b = a + 1; b < L; ++b) {
                        e += t_exponent(pd, i, j[static_cast<std::size_t>(b)]);
                    }
                } else {
                    for (int b = 0; b < a; ++b) {
                        e -= t_exponent(pd, i, j[static_cast<std::size_t>(b)]);
                    }
                }
                Scalar coef = Scalar::q_pow(e);
                if (!raise) {
                    coef *= Scalar(pd.s(source));
                }
                if (pd.node_parity(i) && odd_before % 2) {
                    coef = -coef;
                }
                std::vector<int> j2 = j;
                j2[static_cast<std::size_t>(a)] = raise ? wrap_label(kappa, source - 1) : wrap_label(kappa, source + 1);
                std::vector<int> nu2 = nu;
                if (i == 0) {
                    nu2[static_cast<std::size_t>(a)] += raise ? 1 : -1;
                }
                out.add_term(j2, nu2, c * coef);
            }
            odd_before += pd.vector_parity(j[static_cast<std::size_t>(a)]);
        }
    }
    return out;
}

PlainTensor hecke_T_apply(const ParityData &pd, int i, const PlainTensor &v, int exp)
{
    const int L = v.ell();
    if (i < 1 || i >= L) {
        throw std::out_of_range("hecke_T_apply: index out of range");
    }
    if (exp != 1 && exp != -1) {
        throw std::invalid_argument("hecke_T_apply: exponent must be +-1");
    }
    const Scalar q2 = Scalar::q_pow(2);
    PlainTensor out(L);
    for (const auto &[key, c] : v.terms()) {
        std::vector<int> j = v.labels(key);
        std::vector<int> nu = v.exponents(key);
        const int x = j[static_cast<std::size_t>(i - 1)];
        const int y = j[static_cast<std::size_t>(i)];
        PlainTensor t(L);
        if (x == y) {
            t.add_term(j, nu, Scalar::q_pow(1 + pd.s(x)) * Scalar(pd.s(x)));
        } else {
            std::vector<int> sw = j;
            std::swap(sw[static_cast<std::size_t>(i - 1)], sw[static_cast<std::size_t>(i)]);
            const int sign = (pd.vector_parity(x) && pd.vector_parity(y)) ? -1 : 1;
            t.add_term(sw, nu, Scalar::q() * Scalar(sign));
            if (x > y) {
                t.add_term(j, nu, q2 - Scalar(1));
            }
        }
        if (exp == -1) {
            // T^{-1} = q^{-2} T - (1 - q^{-2})
            t *= Scalar::q_pow(-2);
            t.add_term(key, Scalar::q_pow(-2) - Scalar(1));
        }
        t *= c;
        out += t;
    }
    return out;
}

PlainTensor mode_apply_plain(const ParityData &pd, CurrentFamily fam, int i, int r, const PlainTensor &v)
{
    const int L = v.ell();
    const EvalConvention conv = plain_convention();
    PlainTensor out(L);
    for (const auto &[key, c] : v.terms()) {
        std::vector<int> j = v.labels(key);
        if (!is_nondecreasing(j)) {
            throw std::invalid_argument("mode_apply_plain: key v[" + join(j) + "] is not nondecreasing");
        }
        std::vector<int> nu = v.exponents(key);
        for (const CurrentTerm &t : current_mode(pd, fam, i, r, j, conv)) {
            for (const auto &[e, a] : t.coeff.terms()) {
                std::vector<int> nu2 = nu;
                for (int p = 0; p < L; ++p) {
                    nu2[static_cast<std::size_t>(p)] += e[static_cast<std::size_t>(p)];
                }
                out.add_term(t.labels, nu2, c * a);
            }
        }
    }
    return out;
}

int atom_parity(const ParityData &pd, const Atom &a)
{
    switch (a.kind) {
    case Atom::Kind::E:
    case Atom::Kind::F:
    case Atom::Kind::Ce:
    case Atom::Kind::Cf:
        return pd.node_parity(a.node);
    default:
        return 0;
    }
}

OpExpr atom_expr(const ParityData &pd, Atom a)
{
    return OpExpr(a, atom_parity(pd, a));
}

PlainTensor apply_plain_atom(const ParityData &pd, const Atom &a, const PlainTensor &v)
{
    switch (a.kind) {
    case Atom::Kind::E:
        return mode_apply_plain(pd, CurrentFamily::E, a.node, a.mode, v);
    case Atom::Kind::F:
        return mode_apply_plain(pd, CurrentFamily::F, a.node, a.mode, v);
    case Atom::Kind::Kplus:
        return mode_apply_plain(pd, CurrentFamily::Kplus, a.node, a.mode, v);
    case Atom::Kind::Kminus:
        return mode_apply_plain(pd, CurrentFamily::Kminus, a.node, a.mode, v);
    case Atom::Kind::Ce:
        return chevalley_apply(pd, {ChevalleyGen::Kind::e, a.node}, v);
    case Atom::Kind::Cf:
        return chevalley_apply(pd, {ChevalleyGen::Kind::f, a.node}, v);
    case Atom::Kind::Ct:
        return chevalley_apply(pd, {ChevalleyGen::Kind::t, a.node}, v);
    case Atom::Kind::Ctinv:
        return chevalley_apply(pd, {ChevalleyGen::Kind::tinv, a.node}, v);
    }
    throw std::logic_error("apply_plain_atom: unknown letter");
}

ZeroNodeTrees dj_drinfeld_zero_modes(const ParityData &pd)
{
    if (!pd.is_standard()) {
        throw std::invalid_argument("dj_drinfeld_zero_modes: standard parity required");
    }
    const int m = pd.m();
    const int kappa = pd.kappa();
    const Scalar q = Scalar::q();
    const Scalar qinv = Scalar::q_pow(-1);
    auto E = [&](int i, int r) { return atom_expr(pd, {Atom::Kind::E, i, r}); };
    auto F = [&](int i, int r) { return atom_expr(pd, {Atom::Kind::F, i, r}); };

    OpExpr k_all = OpExpr::identity();
    OpExpr k_all_inv = OpExpr::identity();
    for (int i = 1; i < kappa; ++i) {
        k_all = k_all * atom_expr(pd, {Atom::Kind::Kplus, i, 0});
        k_all_inv = k_all_inv * atom_expr(pd, {Atom::Kind::Kminus, i, 0});
    }

    ZeroNodeTrees t;
    OpExpr lower = F(1, 1);
    OpExpr upper = E(1, -1);
    for (int i = 2; i < kappa; ++i) {
        lower = bracket(F(i, 0), lower, i <= m ? qinv : q);
        upper = bracket(upper, E(i, 0), i <= m ? q : qinv);
    }
    const int sign = (pd.n() % 2 ? -1 : 1) * pd.s(kappa);
    t.e0 = (lower * k_all_inv) * Scalar(sign);
    t.f0 = (k_all * upper) * Scalar(pd.s(kappa));
    t.t0 = k_all_inv;
    return t;
}

std::vector<std::vector<int>> label_tuples(int kappa, int ell, bool sorted_only)
{
    std::vector<std::vector<int>> out;
    std::vector<int> j(static_cast<std::size_t>(ell), 1);
    while (true) {
        if (!sorted_only || is_nondecreasing(j)) {
            out.push_back(j);
        }
        int a = ell - 1;
        while (a >= 0 && j[static_cast<std::size_t>(a)] == kappa) {
            j[static_cast<std::size_t>(a)] = 1;
            --a;
        }
        if (a < 0) {
            break;
        }
        ++j[static_cast<std::size_t>(a)];
    }
    return out;
}

Report schur_weyl_commutation_check(const ParityData &pd, int ell, const std::vector<std::pair<Rational, Rational>> &points)
{
    if (ell < 2) {
        throw std::invalid_argument("schur_weyl_commutation_check: ell >= 2 required");
    }
    Report report;
    report.suite = "finite";
    report.params["m"] = pd.m();
    report.params["n"] = pd.n();
    report.params["ell"] = ell;
    report.params["parity"] = pd.to_string();

    auto record = [&](std::string rel, std::vector<int> nodes, const PlainTensor &v, const PlainTensor &diff) {
        CheckResult r;
        r.relation = std::move(rel);
        r.nodes = std::move(nodes);
        r.vector = v.to_string();
        r.status = diff.is_zero() ? Status::pass : Status::fail;
        if (!points.empty()) {
            bool zero = true;
            for (const auto &[q0, d0] : points) {
                zero = zero && diff.specializes_to_zero(q0, d0);
            }
            r.numeric = zero ? Status::pass : Status::fail;
        }
        if (!diff.is_zero()) {
            r.residual = diff.to_string();
        }
        report.add(std::move(r));
    };

    const int kappa = pd.kappa();
    const Scalar q2 = Scalar::q_pow(2);
    using K = ChevalleyGen::Kind;
    for (const auto &j : label_tuples(kappa, ell, false)) {
        PlainTensor v = PlainTensor::basis(j);
        for (int i = 1; i < ell; ++i) {
            PlainTensor tv = hecke_T_apply(pd, i, v);
            PlainTensor quad = hecke_T_apply(pd, i, tv) + tv * (Scalar(1) - q2) - v * q2;
            record("T-quadratic", {i}, v, quad);
            record("T-inverse", {i}, v, hecke_T_apply(pd, i, tv, -1) - v);
            for (int k = 1; k < kappa; ++k) {
                for (K kind : {K::e, K::f, K::t}) {
                    ChevalleyGen g{kind, k};
                    PlainTensor diff = hecke_T_apply(pd, i, chevalley_apply(pd, g, v)) - chevalley_apply(pd, g, tv);
                    const char *name = kind == K::e ? "T-e-commute" : kind == K::f ? "T-f-commute" : "T-t-commute";
                    record(name, {i, k}, v, diff);
                }
            }
        }
        for (int i = 1; i + 1 < ell; ++i) {
            PlainTensor lhs = hecke_T_apply(pd, i, hecke_T_apply(pd, i + 1, hecke_T_apply(pd, i, v)));
            PlainTensor rhs = hecke_T_apply(pd, i + 1, hecke_T_apply(pd, i, hecke_T_apply(pd, i + 1, v)));
            record("T-braid", {i, i + 1}, v, lhs - rhs);
        }
        for (int i = 1; i < ell; ++i) {
            for (int k = i + 2; k < ell; ++k) {
                PlainTensor lhs = hecke_T_apply(pd, i, hecke_T_apply(pd, k, v));
                PlainTensor rhs = hecke_T_apply(pd, k, hecke_T_apply(pd, i, v));
                record("T-far-commute", {i, k}, v, lhs - rhs);
            }
        }
    }
    return report;
}

nlohmann::json dump_plain_operator(const ParityData &pd, const Atom &a, const std::vector<PlainTensor> &inputs)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const PlainTensor &v : inputs) {
        PlainTensor w = apply_plain_atom(pd, a, v);
        nlohmann::json out = nlohmann::json::array();
        for (const auto &[k, c] : w.terms()) {
            out.push_back({{{"labels", w.labels(k)}, {"xi", w.exponents(k)}}, c.to_string()});
        }
        rows.push_back({{"op", to_string(a)}, {"input", v.to_string()}, {"output", out}});
    }
    return rows;
}

} // namespace tsw
