#include "tsw/toroidal.hpp"

#include <set>
#include <stdexcept>

namespace tsw
{

// ---------------------------------------------------------------------------
// FunctorVector

void FunctorVector::add(const std::vector<int> &j, const DahaElement &w)
{
    if (w.is_zero()) {
        return;
    }
    if (static_cast<int>(j.size()) != ell_ || !is_nondecreasing(j)) {
        throw std::invalid_argument("FunctorVector::add: key must be a nondecreasing ell-tuple");
    }
    auto [it, inserted] = terms_.try_emplace(j, w);
    if (!inserted) {
        it->second += w;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FunctorVector &FunctorVector::operator+=(const FunctorVector &o)
{
    if (!(o.s_ == s_) && !o.terms_.empty()) {
        throw std::invalid_argument("FunctorVector: parity mismatch");
    }
    for (const auto &[j, w] : o.terms_) {
        add(j, w);
    }
    return *this;
}

FunctorVector &FunctorVector::operator-=(const FunctorVector &o)
{
    if (!(o.s_ == s_) && !o.terms_.empty()) {
        throw std::invalid_argument("FunctorVector: parity mismatch");
    }
    for (const auto &[j, w] : o.terms_) {
        add(j, w * Scalar(-1));
    }
    return *this;
}

FunctorVector &FunctorVector::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[j, w] : terms_) {
        w *= c;
    }
    return *this;
}

bool FunctorVector::specializes_to_zero(const Rational &q0, const Rational &d0) const
{
    for (const auto &[j, w] : terms_) {
        if (!w.specializes_to_zero(q0, d0)) {
            return false;
        }
    }
    return true;
}

std::string FunctorVector::to_string(std::size_t max_keys) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    std::size_t n = 0;
    for (const auto &[j, w] : terms_) {
        if (max_keys && n == max_keys) {
            out += " + ... (" + std::to_string(terms_.size()) + " keys)";
            break;
        }
        if (n++) {
            out += " + ";
        }
        std::string js;
        for (std::size_t a = 0; a < j.size(); ++a) {
            js += (a ? "," : "") + std::to_string(j[a]);
        }
        out += "(" + w.to_string() + ") (x) v[" + js + "]";
    }
    return out;
}

const char *to_string(ZeroModel m)
{
    switch (m) {
    case ZeroModel::horizontal:
        return "horizontal";
    case ZeroModel::vertical:
        return "vertical";
    case ZeroModel::affine:
        return "affine";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FunctorModel

namespace
{

// q_1 = d q^{-1}
Scalar q1_pow(int e)
{
    return Scalar::monomial(-2 * e, 2 * e);
}

int wrap_label(int kappa, int j)
{
    return ((j - 1) % kappa + kappa) % kappa + 1;
}

} // namespace

FunctorModel::FunctorModel(int m, int n, int ell) : FunctorModel(m, n, ell, Scalar::monomial(-2 * (n - m), 2 * (n - m))) {}

FunctorModel::FunctorModel(int m, int n, int ell, Scalar zeta) : standard_(ParityData::standard(m, n)), daha_(ell, std::move(zeta))
{
}

FunctorVector FunctorModel::basis(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const
{
    return sort_balanced(s, w, j);
}

FunctorVector FunctorModel::sort_balanced(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const
{
    const int L = ell();
    if (static_cast<int>(j.size()) != L) {
        throw std::invalid_argument("sort_balanced: tuple length differs from ell");
    }
    FunctorVector out(s, L);
    std::vector<std::pair<DahaElement, std::vector<int>>> work{{w, j}};
    while (!work.empty()) {
        auto [x, t] = std::move(work.back());
        work.pop_back();
        if (x.is_zero()) {
            continue;
        }
        int a = 0;
        while (a + 1 < L && t[static_cast<std::size_t>(a)] <= t[static_cast<std::size_t>(a) + 1]) {
            ++a;
        }
        if (a + 1 >= L) {
            out.add(t, x);
            continue;
        }
        // v_c (x) v_b = (-1)^{|v_b||v_c|} q^{-1} T_a (v_b (x) v_c) for c > b.
        const int c = t[static_cast<std::size_t>(a)];
        const int b = t[static_cast<std::size_t>(a) + 1];
        const bool odd = s.vector_parity(b) && s.vector_parity(c);
        std::swap(t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(a) + 1]);
        DahaElement y = daha_.mul_T(x, a + 1) * Scalar::monomial(-2, 0, odd ? -1 : 1);
        work.emplace_back(std::move(y), std::move(t));
    }
    return out;
}

DahaElement FunctorModel::symmetrize(const ParityData &s, const std::vector<int> &j, const DahaElement &w) const
{
    const int L = ell();
    DahaElement acc = w;
    int start = 0;
    while (start < L) {
        int end = start + 1;
        while (end < L && j[static_cast<std::size_t>(end)] == j[static_cast<std::size_t>(start)]) {
            ++end;
        }
        // sum_{u in S_block} c^{length(u)} T_u, c = 1 for even labels and -q^{-2} for odd,
        // built from the coset representatives T_{k-1} T_{k-2} ... T_t.
        const Scalar c = s.vector_parity(j[static_cast<std::size_t>(start)]) ? -Scalar::q_pow(-2) : Scalar(1);
        for (int k = start + 2; k <= end; ++k) {
            DahaElement sum = acc;
            DahaElement cur = acc;
            for (int t = k - 1; t > start; --t) {
                cur = daha_.mul_T(cur, t) * c;
                sum += cur;
            }
            acc = std::move(sum);
        }
        start = end;
    }
    return acc;
}

FunctorVector FunctorModel::canonical(const FunctorVector &v) const
{
    FunctorVector out(v.parity(), v.ell());
    for (const auto &[j, w] : v.terms()) {
        out.add(j, symmetrize(v.parity(), j, w));
    }
    return out;
}

bool FunctorModel::is_zero(const FunctorVector &v) const
{
    for (const auto &[j, w] : v.terms()) {
        if (!symmetrize(v.parity(), j, w).is_zero()) {
            return false;
        }
    }
    return true;
}

bool FunctorModel::specializes_to_zero(const FunctorVector &v, const Rational &q0, const Rational &d0) const
{
    return canonical(v).specializes_to_zero(q0, d0);
}

FunctorVector FunctorModel::mode_apply(CurrentFamily fam, int i, int r, const FunctorVector &v, const EvalConvention &conv) const
{
    FunctorVector out(v.parity(), v.ell());
    for (const auto &[j, w] : v.terms()) {
        for (const CurrentTerm &t : current_mode(v.parity(), fam, i, r, j, conv)) {
            out += sort_balanced(v.parity(), daha_.mul_Y_poly(w, t.coeff), t.labels);
        }
    }
    return out;
}

FunctorVector FunctorModel::vertical_mode_apply(CurrentFamily fam, int i, int r, const FunctorVector &v) const
{
    return mode_apply(fam, i, r, v, vertical_convention());
}

FunctorVector FunctorModel::chevalley_apply(ZeroModel model, ChevalleyGen g, const FunctorVector &v) const
{
    const ParityData &s = v.parity();
    const int L = v.ell();
    FunctorVector out(s, L);
    for (const auto &[j, w] : v.terms()) {
        PlainTensor image = tsw::chevalley_apply(s, g, PlainTensor::basis(j));
        for (const auto &[key, c] : image.terms()) {
            std::vector<int> nu = image.exponents(key);
            DahaElement x = w * c;
            for (int a = 0; a < L; ++a) {
                const int e = nu[static_cast<std::size_t>(a)];
                if (e == 0) {
                    continue;
                }
                if (model == ZeroModel::horizontal) {
                    x = daha_.mul_X(x, a + 1, e);
                } else {
                    // xi_a = Y_a^{-1}
                    x = daha_.mul_Y(x, a + 1, -e);
                    if (model == ZeroModel::vertical) {
                        x *= Scalar::d_pow(-e);
                    }
                }
            }
            out += sort_balanced(s, x, image.labels(key));
        }
    }
    return out;
}

FunctorVector FunctorModel::psi_apply_tuple(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const
{
    const int kappa = s.kappa();
    DahaElement x = w;
    std::vector<int> t = j;
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (t[a] == kappa) {
            x = daha_.mul_X(x, static_cast<int>(a) + 1, -1);
        }
        t[a] = wrap_label(kappa, t[a] + 1);
    }
    return sort_balanced(s.tau(), x, t);
}

FunctorVector FunctorModel::psi_apply(const FunctorVector &v) const
{
    FunctorVector out(v.parity().tau(), v.ell());
    for (const auto &[j, w] : v.terms()) {
        out += psi_apply_tuple(v.parity(), w, j);
    }
    return out;
}

FunctorVector FunctorModel::psi_inverse(const FunctorVector &v) const
{
    const ParityData s = v.parity().tau_pow(-1);
    const int kappa = s.kappa();
    FunctorVector out(s, v.ell());
    for (const auto &[j, w] : v.terms()) {
        DahaElement x = w;
        std::vector<int> t = j;
        for (std::size_t a = 0; a < t.size(); ++a) {
            t[a] = wrap_label(kappa, t[a] - 1);
            if (t[a] == kappa) {
                x = daha_.mul_X(x, static_cast<int>(a) + 1, 1);
            }
        }
        out += sort_balanced(s, x, t);
    }
    return out;
}

FunctorVector FunctorModel::psi_power(const FunctorVector &v, int r) const
{
    FunctorVector out = v;
    for (int k = 0; k < r; ++k) {
        out = psi_apply(out);
    }
    for (int k = 0; k > r; --k) {
        out = psi_inverse(out);
    }
    return out;
}

FunctorVector FunctorModel::zero_current_apply(CurrentFamily fam, int r, const FunctorVector &v) const
{
    const int s_kappa = v.parity().s(v.parity().kappa());
    FunctorVector rotated = psi_apply(v);
    FunctorVector image = vertical_mode_apply(fam, 1, r, rotated);
    return psi_inverse(image) * q1_pow(r * s_kappa);
}

FunctorVector FunctorModel::apply(const Atom &a, const FunctorVector &v, ZeroModel model) const
{
    FunctorVector out(v.parity(), v.ell());
    for (const auto &[j, w] : v.terms()) {
        for (const auto &[key, c] : w.terms()) {
            out += apply_basis(a, model, v.parity(), j, key) * c;
        }
    }
    return out;
}

FunctorVector FunctorModel::apply_basis(const Atom &a, ZeroModel model, const ParityData &s, const std::vector<int> &j,
                                        const DahaKey &key) const
{
    const bool chevalley = a.kind == Atom::Kind::Ce || a.kind == Atom::Kind::Cf || a.kind == Atom::Kind::Ct ||
                           a.kind == Atom::Kind::Ctinv;
    CacheKey ck{a, chevalley ? static_cast<int>(model) : -1, s.sequence(), j, key};
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(ck);
        if (it != cache_.end()) {
            return it->second;
        }
    }
    DahaElement w(ell());
    w.add_term(key, Scalar(1));
    FunctorVector v(s, ell());
    v.add(j, w);

    FunctorVector result(s, ell());
    auto family = [&]() {
        switch (a.kind) {
        case Atom::Kind::E:
            return CurrentFamily::E;
        case Atom::Kind::F:
            return CurrentFamily::F;
        case Atom::Kind::Kplus:
            return CurrentFamily::Kplus;
        default:
            return CurrentFamily::Kminus;
        }
    };
    switch (a.kind) {
    case Atom::Kind::E:
    case Atom::Kind::F:
    case Atom::Kind::Kplus:
    case Atom::Kind::Kminus: {
        const int node = s.node(a.node);
        result = node == 0 ? zero_current_apply(family(), a.mode, v) : vertical_mode_apply(family(), node, a.mode, v);
        break;
    }
    case Atom::Kind::Ce:
        result = chevalley_apply(model, {ChevalleyGen::Kind::e, s.node(a.node)}, v);
        break;
    case Atom::Kind::Cf:
        result = chevalley_apply(model, {ChevalleyGen::Kind::f, s.node(a.node)}, v);
        break;
    case Atom::Kind::Ct:
        result = chevalley_apply(model, {ChevalleyGen::Kind::t, s.node(a.node)}, v);
        break;
    case Atom::Kind::Ctinv:
        result = chevalley_apply(model, {ChevalleyGen::Kind::tinv, s.node(a.node)}, v);
        break;
    }
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(std::move(ck), result);
    return result;
}

void FunctorModel::clear_cache() const
{
    std::unique_lock lock(cache_mutex_);
    cache_.clear();
}

// ---------------------------------------------------------------------------
// Checks

CheckResult judge_difference(const FunctorModel &fm, const FunctorVector &diff, const NumericPoints &points, bool symbolic)
{
    CheckResult r;
    FunctorVector c = fm.canonical(diff);
    if (!points.empty()) {
        try {
            bool zero = true;
            for (const auto &[q0, d0] : points) {
                zero = zero && c.specializes_to_zero(q0, d0);
            }
            r.numeric = zero ? Status::pass : Status::fail;
        } catch (const std::domain_error &) {
            r.numeric.reset();
        }
    }
    const bool fail = symbolic || !r.numeric ? !c.is_zero_raw() : *r.numeric == Status::fail;
    r.status = fail ? Status::fail : Status::pass;
    if (fail) {
        r.residual = c.to_string(5);
    }
    return r;
}

namespace
{

CheckResult make_result(std::string relation, std::vector<int> nodes, std::vector<int> modes, std::string vector,
                        const FunctorModel &fm, const FunctorVector &diff, const NumericPoints &points)
{
    CheckResult r = judge_difference(fm, diff, points);
    r.relation = std::move(relation);
    r.nodes = std::move(nodes);
    r.modes = std::move(modes);
    r.vector = std::move(vector);
    return r;
}

} // namespace

Report psi_well_defined_check(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws,
                              const NumericPoints &points)
{
    Report report;
    report.suite = "psi";
    report.params["parity"] = s.to_string();
    report.params["ell"] = fm.ell();
    const int L = fm.ell();
    const int kappa = s.kappa();
    for (const DahaElement &w : ws) {
        for (const auto &j : label_tuples(kappa, L, false)) {
            for (int i = 1; i < L; ++i) {
                FunctorVector lhs = fm.psi_apply_tuple(s, fm.daha().mul_T(w, i), j);
                PlainTensor tv = hecke_T_apply(s, i, PlainTensor::basis(j));
                FunctorVector rhs(s.tau(), L);
                for (const auto &[key, c] : tv.terms()) {
                    rhs += fm.psi_apply_tuple(s, w * c, tv.labels(key));
                }
                const bool k1 = j[static_cast<std::size_t>(i - 1)] == kappa;
                const bool k2 = j[static_cast<std::size_t>(i)] == kappa;
                std::string family = !k1 && !k2 ? "psi-case-none" : k1 && !k2 ? "psi-case-first" : !k1 ? "psi-case-second" : "psi-case-both";
                std::string vec = "(" + w.to_string() + ") (x) " + PlainTensor::basis(j).to_string();
                report.add(make_result(family, {i}, {}, vec, fm, lhs - rhs, points));
            }
        }
    }
    return report;
}

std::vector<DahaElement> default_daha_battery(const Daha &h)
{
    const int L = h.ell();
    std::vector<DahaElement> out;
    std::set<DahaElement> seen;
    auto push = [&](DahaElement e) {
        if (seen.insert(e).second) {
            out.push_back(std::move(e));
        }
    };
    const std::vector<int> zero(static_cast<std::size_t>(L), 0);
    push(h.one());
    push(h.basis(1, AffinePermutation::identity(L), zero));
    push(h.basis(-1, AffinePermutation::identity(L), zero));
    if (L >= 2) {
        for (int a = 0; a < L; ++a) {
            push(h.basis(0, AffinePermutation::from_word(L, {a}), zero));
            for (int b = 0; b < L; ++b) {
                if (b != a) {
                    push(h.basis(0, AffinePermutation::from_word(L, {a, b}), zero));
                }
            }
        }
    }
    // Y^mu with 0 < |mu|_1 <= 2
    std::vector<std::vector<int>> mus;
    for (int a = 0; a < L; ++a) {
        for (int e : {1, -1, 2, -2}) {
            std::vector<int> mu = zero;
            mu[static_cast<std::size_t>(a)] = e;
            mus.push_back(mu);
        }
        for (int b = a + 1; b < L; ++b) {
            for (int ea : {1, -1}) {
                for (int eb : {1, -1}) {
                    std::vector<int> mu = zero;
                    mu[static_cast<std::size_t>(a)] = ea;
                    mu[static_cast<std::size_t>(b)] = eb;
                    mus.push_back(mu);
                }
            }
        }
    }
    for (const auto &mu : mus) {
        push(h.y_monomial(mu));
    }
    return out;
}

std::vector<FunctorVector> functor_battery(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws)
{
    std::vector<FunctorVector> out;
    for (const auto &j : label_tuples(s.kappa(), fm.ell(), true)) {
        for (const DahaElement &w : ws) {
            FunctorVector v(s, fm.ell());
            v.add(j, w);
            out.push_back(std::move(v));
        }
    }
    return out;
}

Report rotation_identity_check(const FunctorModel &fm, const ParityData &s, int R, const std::vector<FunctorVector> &battery,
                               const NumericPoints &points)
{
    Report report;
    report.suite = "rotation";
    report.params["parity"] = s.to_string();
    report.params["ell"] = fm.ell();
    report.params["R"] = R;
    const int kappa = s.kappa();
    const int n_minus_m = s.n() - s.m();
    const Scalar zeta = fm.daha().zeta();
    const int wrap_exp = n_minus_m + s.s(kappa - 1) + s.s(kappa);

    struct Fam {
        CurrentFamily fam;
        const char *name;
    };
    const Fam fams[] = {{CurrentFamily::E, "E"}, {CurrentFamily::F, "F"}, {CurrentFamily::Kplus, "K+"}, {CurrentFamily::Kminus, "K-"}};

    for (const FunctorVector &v : battery) {
        if (!(v.parity() == s)) {
            throw std::invalid_argument("rotation_identity_check: battery parity mismatch");
        }
        const std::string vs = v.to_string();
        const FunctorVector pv = fm.psi_apply(v);
        const FunctorVector ppv = fm.psi_apply(pv);
        for (const Fam &f : fams) {
            for (int r = -R; r <= R; ++r) {
                if ((f.fam == CurrentFamily::Kplus && r < 0) || (f.fam == CurrentFamily::Kminus && r > 0)) {
                    continue;
                }
                // Psi^{-1} X_{i,r}^{tau s} Psi = q_1^{-r s_kappa} X_{i-1,r}^s
                for (int i = 2; i < kappa; ++i) {
                    FunctorVector lhs = fm.psi_inverse(fm.vertical_mode_apply(f.fam, i, r, pv));
                    FunctorVector rhs = fm.vertical_mode_apply(f.fam, i - 1, r, v) * q1_pow(-r * s.s(kappa));
                    report.add(make_result(std::string("rotate-") + f.name, {i}, {r}, vs, fm, lhs - rhs, points));
                }
                // zeta^{-r} Psi^{-2} X_{1,r}^{tau^2 s} Psi^2 = q_1^{-r(n-m+s_{kappa-1}+s_kappa)} X_{kappa-1,r}^s
                FunctorVector lhs = fm.psi_inverse(fm.psi_inverse(fm.vertical_mode_apply(f.fam, 1, r, ppv))) * zeta.pow(-r);
                FunctorVector rhs = fm.vertical_mode_apply(f.fam, kappa - 1, r, v) * q1_pow(-r * wrap_exp);
                report.add(make_result(std::string("wrap-") + f.name, {1, kappa - 1}, {r}, vs, fm, lhs - rhs, points));
            }
        }
    }
    return report;
}

nlohmann::json dump_functor_operator(const FunctorModel &fm, const Atom &a, const std::vector<FunctorVector> &battery, ZeroModel model)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const FunctorVector &v : battery) {
        FunctorVector image = fm.apply(a, v, model);
        nlohmann::json out = nlohmann::json::array();
        for (const auto &[j, w] : image.terms()) {
            for (const auto &[key, c] : w.terms()) {
                DahaElement mono(w.ell());
                mono.add_term(key, Scalar(1));
                out.push_back({{"key", j}, {"daha", mono.to_string()}, {"scalar", c.to_string()}});
            }
        }
        nlohmann::json row;
        row["op"] = to_string(a);
        row["node"] = a.node;
        row["mode"] = a.mode;
        row["input"] = v.to_string();
        row["output"] = out;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace tsw
