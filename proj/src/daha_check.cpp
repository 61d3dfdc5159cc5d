#include <random>
#include <set>

#include "tsw/daha.hpp"

namespace tsw
{

namespace
{

using Side = std::vector<std::pair<Scalar, GeneratorWord>>;

struct Relation {
    std::string id;
    std::vector<int> nodes;
    Side lhs;
    Side rhs;
    // Evaluated on w = 1 only when false.
    bool on_battery = true;
};

Side word(GeneratorWord w, Scalar c = Scalar(1))
{
    return {{std::move(c), std::move(w)}};
}

DahaElement evaluate(const Daha &h, const DahaElement &w, const Side &side)
{
    DahaElement out(h.ell());
    for (const auto &[c, word] : side) {
        out += h.apply(w, word) * c;
    }
    return out;
}

std::vector<Relation> relations(const Daha &h)
{
    const int L = h.ell();
    const Scalar &zeta = h.zeta();
    std::vector<Relation> rs;

    GeneratorWord x0;
    for (int j = 1; j <= L; ++j) {
        x0.push_back(X(j));
    }

    for (int i = 1; i < L; ++i) {
        rs.push_back({"T-inverse", {i}, word({T(i), T(i, -1)}), word({})});
        rs.push_back({"T-inverse", {i}, word({T(i, -1), T(i)}), word({})});
        Side quad = word({T(i), T(i)});
        quad.push_back({Scalar(1) - Scalar::q_pow(2), {T(i)}});
        rs.push_back({"T-quadratic", {i}, quad, word({}, Scalar::q_pow(2))});
        rs.push_back({"TXT", {i}, word({T(i), X(i), T(i)}), word({X(i + 1)}, Scalar::q_pow(2))});
        rs.push_back({"TYT", {i}, word({T(i, -1), Y(i), T(i, -1)}), word({Y(i + 1)}, Scalar::q_pow(-2))});
        for (int j = 1; j <= L; ++j) {
            if (j != i && j != i + 1) {
                rs.push_back({"XT-commute", {j, i}, word({X(j), T(i)}), word({T(i), X(j)})});
                rs.push_back({"YT-commute", {j, i}, word({Y(j), T(i)}), word({T(i), Y(j)})});
            }
        }
    }
    for (int i = 1; i + 1 < L; ++i) {
        rs.push_back({"T-braid", {i, i + 1}, word({T(i), T(i + 1), T(i)}), word({T(i + 1), T(i), T(i + 1)})});
    }
    for (int i = 1; i < L; ++i) {
        for (int j = i + 2; j < L; ++j) {
            rs.push_back({"T-far-commute", {i, j}, word({T(i), T(j)}), word({T(j), T(i)})});
        }
    }
    rs.push_back({"X0Y1", {}, word(concat({x0, {Y(1)}})), word(concat({{Y(1)}, x0}), zeta)});
    for (int i = 1; i <= L; ++i) {
        rs.push_back({"X-inverse", {i}, word({X(i), X(i, -1)}), word({})});
        rs.push_back({"X-inverse", {i}, word({X(i, -1), X(i)}), word({})});
        rs.push_back({"Y-inverse", {i}, word({Y(i), Y(i, -1)}), word({})});
        rs.push_back({"Y-inverse", {i}, word({Y(i, -1), Y(i)}), word({})});
        for (int j = i + 1; j <= L; ++j) {
            rs.push_back({"X-commute", {i, j}, word({X(i), X(j)}), word({X(j), X(i)})});
            rs.push_back({"Y-commute", {i, j}, word({Y(i), Y(j)}), word({Y(j), Y(i)})});
        }
    }
    if (L >= 2) {
        rs.push_back({"XYXY", {}, word({X(2), Y(1, -1), X(2, -1), Y(1)}), word({T(1), T(1)}, Scalar::q_pow(-2))});
    }

    rs.push_back({"Q-inverse", {}, word({Qg(), Qg(-1)}), word({})});
    rs.push_back({"Q-inverse", {}, word({Qg(-1), Qg()}), word({})});
    for (int i = 2; i <= L - 1; ++i) {
        rs.push_back({"QTQ", {i}, word({Qg(), T(i - 1), Qg(-1)}), word({T(i)})});
    }
    if (L >= 2) {
        rs.push_back({"Q2TQ2", {L - 1}, word({Qg(), Qg(), T(L - 1), Qg(-1), Qg(-1)}), word({T(1)})});
    }
    for (int i = 1; i <= L - 1; ++i) {
        rs.push_back({"QYQ", {i}, word({Qg(), Y(i), Qg(-1)}), word({Y(i + 1)})});
    }
    rs.push_back({"QYQ", {L}, word({Qg(), Y(L), Qg(-1)}), word({Y(1)}, zeta)});
    {
        GeneratorWord xt{X(1)};
        if (L >= 2) {
            xt = q_ij(L, 1, L - 1);
        }
        rs.push_back({"Q=X1T", {}, word({Qg()}), word(xt)});
    }
    if (L >= 3) {
        // T_0 = Q^{-1} T_1 Q braids with its two neighbours.
        rs.push_back({"T0-braid", {0, 1}, word({T(0), T(1), T(0)}), word({T(1), T(0), T(1)})});
        rs.push_back({"T0-braid", {0, L - 1}, word({T(0), T(L - 1), T(0)}), word({T(L - 1), T(0), T(L - 1)})});
    }

    for (int i = 1; i < L; ++i) {
        for (int j = i; j < L; ++j) {
            GeneratorWord qw = q_ij(L, i, j);
            GeneratorWord qinv = inverse(qw);
            for (int a = i; a <= j; ++a) {
                rs.push_back({"Qij-Y", {i, j, a}, word(concat({qw, {Y(a)}, qinv})), word({Y(a + 1)})});
            }
            for (int b = i + 1; b < j; ++b) {
                rs.push_back({"Qij-T", {i, j, b}, word(concat({qw, {T(b - 1)}, qinv})), word({T(b)})});
            }
        }
    }
    for (int r = 1; r < L; ++r) {
        GeneratorWord pw = p_r(L, r);
        GeneratorWord pinv = inverse(pw);
        for (int a = r; a + 1 <= L; ++a) {
            rs.push_back({"Pr-Y", {r, a}, word(concat({pw, {Y(a + 1)}, pinv})), word({Y(a - r + 1)}, zeta)});
        }
        for (int b = r + 1; b < L; ++b) {
            rs.push_back({"Pr-T", {r, b}, word(concat({pw, {T(b)}, pinv})), word({T(b - r)})});
        }
    }

    for (int i = 2; i <= L; ++i) {
        rs.push_back({"QYQ-battery", {i}, word({Qg(), Y(i - 1), Qg(-1)}), word({Y(i)})});
    }
    rs.push_back({"QYQ-battery", {1}, word({Qg(), Y(L), Qg(-1)}), word({Y(1)}, zeta)});
    return rs;
}

std::vector<DahaElement> battery(const Daha &h, const DahaCheckOptions &opts)
{
    const int L = h.ell();
    std::vector<DahaElement> out{h.one()};
    std::set<DahaElement> seen{h.one()};
    std::mt19937_64 rng(opts.seed);
    int attempts = 0;
    while (static_cast<int>(out.size()) < 1 + opts.random_elements && attempts < 100 * (1 + opts.random_elements)) {
        ++attempts;
        int k = static_cast<int>(rng() % 3) - 1;
        std::vector<int> letters;
        if (L >= 2) {
            int len = static_cast<int>(rng() % 4);
            for (int t = 0; t < len; ++t) {
                letters.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(L)));
            }
        }
        std::vector<int> mu(static_cast<std::size_t>(L));
        for (auto &m : mu) {
            m = static_cast<int>(rng() % 3) - 1;
        }
        DahaElement e = h.basis(k, AffinePermutation::from_word(L, letters), mu);
        if (seen.insert(e).second) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::string truncate_dump(const DahaElement &e, std::size_t max_terms = 5)
{
    if (e.size() <= max_terms) {
        return e.to_string();
    }
    DahaElement head(e.ell());
    std::size_t n = 0;
    for (const auto &[k, c] : e.terms()) {
        if (n++ == max_terms) {
            break;
        }
        head.add_term(k, c);
    }
    return head.to_string() + " + ... (" + std::to_string(e.size()) + " terms)";
}

} // namespace

Report check_daha_presentation(const Daha &h, const DahaCheckOptions &opts)
{
    Report report;
    report.suite = "daha";
    report.params["ell"] = h.ell();
    report.params["zeta"] = h.zeta().to_string();

    const std::vector<DahaElement> ws = battery(h, opts);
    for (const auto &rel : relations(h)) {
        for (std::size_t wi = 0; wi < ws.size(); ++wi) {
            if (!rel.on_battery && wi > 0) {
                break;
            }
            const DahaElement &w = ws[wi];
            DahaElement diff = evaluate(h, w, rel.lhs) - evaluate(h, w, rel.rhs);
            CheckResult r;
            r.relation = rel.id;
            r.nodes = rel.nodes;
            r.vector = w.to_string();
            r.status = diff.is_zero() ? Status::pass : Status::fail;
            if (!opts.numeric_points.empty()) {
                bool zero = true;
                for (const auto &[q0, d0] : opts.numeric_points) {
                    zero = zero && diff.specializes_to_zero(q0, d0);
                }
                r.numeric = zero ? Status::pass : Status::fail;
            }
            if (!diff.is_zero()) {
                r.residual = truncate_dump(diff);
            }
            report.add(std::move(r));
        }
    }
    return report;
}

} // namespace tsw
