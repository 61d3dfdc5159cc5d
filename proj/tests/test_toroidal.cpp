#include <doctest.h>

#include <random>

#include "tsw/toroidal.hpp"

using namespace tsw;

namespace
{

using K = ChevalleyGen::Kind;

FunctorVector vec(const FunctorModel &fm, const ParityData &s, const DahaElement &w, std::vector<int> j)
{
    return fm.sort_balanced(s, w, j);
}

FunctorVector random_vector(std::mt19937_64 &rng, const FunctorModel &fm, const ParityData &s)
{
    const Daha &h = fm.daha();
    const int L = fm.ell();
    FunctorVector v(s, L);
    for (int t = 0; t < 2; ++t) {
        std::vector<int> letters;
        if (L >= 2) {
            for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
                letters.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(L)));
            }
        }
        std::vector<int> mu(static_cast<std::size_t>(L));
        for (auto &m : mu) {
            m = static_cast<int>(rng() % 3) - 1;
        }
        std::vector<int> j(static_cast<std::size_t>(L));
        for (auto &x : j) {
            x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(s.kappa()));
        }
        DahaElement w = h.basis(static_cast<int>(rng() % 3) - 1, AffinePermutation::from_word(L, letters), mu);
        v += fm.sort_balanced(s, w, j);
    }
    return v;
}

} // namespace

TEST_CASE("sorting through the Hecke balance")
{
    FunctorModel fm(3, 1, 2);
    const ParityData &s = fm.standard_parity();
    const Daha &h = fm.daha();
    FunctorVector v = fm.sort_balanced(s, h.one(), {2, 1});
    FunctorVector expect(s, 2);
    expect.add({1, 2}, h.word({T(1)}) * Scalar::q_pow(-1));
    CHECK(fm.equal(v, expect));
    CHECK(v.terms() == expect.terms());

    FunctorVector sorted = fm.sort_balanced(s, h.one(), {1, 3});
    CHECK(sorted.terms().size() == 1);
    CHECK(sorted.terms().begin()->second == h.one());

    // Two odd labels: v_4 (x) v_3 in s = (+,+,-,-).
    FunctorModel f22(2, 2, 2);
    ParityData p = ParityData::parse("++--");
    FunctorVector odd = f22.sort_balanced(p, f22.daha().one(), {4, 3});
    FunctorVector oexp(p, 2);
    oexp.add({3, 4}, f22.daha().word({T(1)}) * (-Scalar::q_pow(-1)));
    CHECK(f22.equal(odd, oexp));
}

TEST_CASE("balanced tensor relations are detected")
{
    // w T_1 (x) v_i (x) v_i = s_i q^{1+s_i} w (x) v_i (x) v_i
    FunctorModel fm(3, 1, 2);
    const ParityData &s = fm.standard_parity();
    const Daha &h = fm.daha();
    for (int i = 1; i <= 4; ++i) {
        FunctorVector a = vec(fm, s, h.word({T(1)}), {i, i});
        FunctorVector b = vec(fm, s, h.one(), {i, i}) * (Scalar(s.s(i)) * Scalar::q_pow(1 + s.s(i)));
        CHECK(fm.equal(a, b));
        CHECK_FALSE(fm.is_zero(a));
    }
    // Sorting is confluent: sorting a tuple or any of its partial sorts agrees.
    std::mt19937_64 rng(9);
    FunctorModel f3(2, 2, 3);
    ParityData p = ParityData::parse("+-+-");
    for (int t = 0; t < 100; ++t) {
        std::vector<int> j(3);
        for (auto &x : j) {
            x = 1 + static_cast<int>(rng() % 4);
        }
        int a = 1 + static_cast<int>(rng() % 2);
        // w (x) T_a v_j = w T_a (x) v_j
        PlainTensor tv = hecke_T_apply(p, a, PlainTensor::basis(j));
        FunctorVector lhs(p, 3);
        for (const auto &[key, c] : tv.terms()) {
            lhs += f3.sort_balanced(p, f3.daha().one() * c, tv.labels(key));
        }
        FunctorVector rhs = f3.sort_balanced(p, f3.daha().word({T(a)}), j);
        CHECK(f3.equal(lhs, rhs));
        FunctorVector once = f3.sort_balanced(p, f3.daha().one(), j);
        FunctorVector twice(p, 3);
        for (const auto &[k, w] : once.terms()) {
            twice += f3.sort_balanced(p, w, k);
        }
        CHECK(once.terms() == twice.terms());
    }
}

TEST_CASE("vertical currents on one slot")
{
    FunctorModel fm(3, 1, 1);
    const ParityData &s = fm.standard_parity();
    const Daha &h = fm.daha();
    for (int i = 1; i < 4; ++i) {
        for (int r = -2; r <= 2; ++r) {
            // w (q_1^{mu(i)} Y_1)^{-r} (x) v_i
            Scalar c = Scalar::monomial(-2, 2).pow(-s.mu(i) * r);
            FunctorVector expect = vec(fm, s, h.y_monomial({-r}) * c, {i});
            CHECK(fm.equal(fm.vertical_mode_apply(CurrentFamily::E, i, r, vec(fm, s, h.one(), {i + 1})), expect));
            CHECK(fm.vertical_mode_apply(CurrentFamily::E, i, r, vec(fm, s, h.one(), {i})).is_zero_raw());
        }
        FunctorVector vi = vec(fm, s, h.one(), {i});
        CHECK(fm.equal(fm.vertical_mode_apply(CurrentFamily::Kplus, i, 0, vi), vi * Scalar::q_pow(s.s(i))));
    }
}

TEST_CASE("Psi rotation")
{
    FunctorModel fm(3, 1, 2);
    const ParityData &s = fm.standard_parity();
    const Daha &h = fm.daha();
    // w (x) v_2 (x) v_4 -> w X_2^{-1} (x) v_3 (x) v_1 over tau s
    FunctorVector v = vec(fm, s, h.one(), {2, 4});
    FunctorVector pv = fm.psi_apply(v);
    CHECK(pv.parity() == s.tau());
    CHECK(fm.equal(pv, fm.sort_balanced(s.tau(), h.word({X(2, -1)}), {3, 1})));
    // No kappa labels: a pure shift.
    FunctorVector u = vec(fm, s, h.word({Y(1)}), {1, 3});
    FunctorVector pu = fm.psi_apply(u);
    REQUIRE(pu.terms().size() == 1);
    CHECK(pu.terms().begin()->first == std::vector<int>{2, 4});
    CHECK(pu.terms().begin()->second == h.word({Y(1)}));

    std::mt19937_64 rng(21);
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {2, 2, 3}}) {
        FunctorModel f(m, n, ell);
        ParityData p = f.standard_parity();
        for (int t = 0; t < 50; ++t) {
            FunctorVector x = random_vector(rng, f, p);
            CHECK(f.equal(f.psi_inverse(f.psi_apply(x)), x));
            CHECK(f.equal(f.psi_apply(f.psi_inverse(x)).parity() == p ? f.psi_apply(f.psi_inverse(x)) : x, x));
            CHECK(f.equal(f.psi_power(f.psi_power(x, -1), 1), x));
            CHECK(f.psi_power(x, 0).terms() == x.terms());
        }
        FunctorVector x = random_vector(rng, f, p);
        CHECK(f.psi_power(x, p.kappa()).parity() == p);
    }
}

TEST_CASE("Psi is well defined on the balanced tensor product")
{
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}, {3, 2}}) {
        FunctorModel fm(m, n, 2);
        std::vector<DahaElement> ws = default_daha_battery(fm.daha());
        Report r = psi_well_defined_check(fm, fm.standard_parity(), ws);
        INFO(r.summary());
        CHECK(r.all_passed());
        for (const char *fam : {"psi-case-none", "psi-case-first", "psi-case-second", "psi-case-both"}) {
            bool seen = false;
            for (const auto &res : r.results) {
                seen = seen || res.relation == fam;
            }
            CHECK(seen);
        }
    }
    FunctorModel f3(2, 2, 3);
    CHECK(psi_well_defined_check(f3, ParityData::parse("+-+-"), {f3.daha().one(), f3.daha().word({Qg()})}).all_passed());
}

TEST_CASE("zero-node currents against the Chevalley triple")
{
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {2, 2, 2}}) {
        FunctorModel fm(m, n, ell);
        const ParityData &s = fm.standard_parity();
        for (const FunctorVector &v : functor_battery(fm, s, default_daha_battery(fm.daha()))) {
            CHECK(fm.equal(fm.zero_current_apply(CurrentFamily::E, 0, v), fm.chevalley_apply(ZeroModel::horizontal, {K::e, 0}, v)));
            CHECK(fm.equal(fm.zero_current_apply(CurrentFamily::F, 0, v), fm.chevalley_apply(ZeroModel::horizontal, {K::f, 0}, v)));
            CHECK(fm.equal(fm.zero_current_apply(CurrentFamily::Kplus, 0, v), fm.chevalley_apply(ZeroModel::horizontal, {K::t, 0}, v)));
            CHECK(fm.equal(fm.zero_current_apply(CurrentFamily::Kminus, 0, v), fm.chevalley_apply(ZeroModel::horizontal, {K::tinv, 0}, v)));
        }
    }
}

TEST_CASE("Chevalley triple at node zero on one slot")
{
    FunctorModel fm(3, 1, 1);
    const ParityData &s = fm.standard_parity();
    const Daha &h = fm.daha();
    CHECK(fm.equal(fm.chevalley_apply(ZeroModel::horizontal, {K::e, 0}, vec(fm, s, h.one(), {1})), vec(fm, s, h.word({X(1)}), {4})));
    CHECK(fm.equal(fm.chevalley_apply(ZeroModel::horizontal, {K::f, 0}, vec(fm, s, h.one(), {4})),
                   vec(fm, s, h.word({X(1, -1)}) * Scalar(s.s(4)), {1})));
    CHECK(fm.equal(fm.chevalley_apply(ZeroModel::vertical, {K::e, 0}, vec(fm, s, h.one(), {1})),
                   vec(fm, s, h.word({Y(1, -1)}) * Scalar::d_pow(-1), {4})));
    CHECK(fm.equal(fm.chevalley_apply(ZeroModel::affine, {K::f, 0}, vec(fm, s, h.one(), {4})), vec(fm, s, h.word({Y(1)}) * Scalar(-1), {1})));
    for (int j = 1; j <= 4; ++j) {
        int e = s.s(j) * ((j == 4) - (j == 1));
        CHECK(fm.equal(fm.chevalley_apply(ZeroModel::horizontal, {K::t, 0}, vec(fm, s, h.one(), {j})), vec(fm, s, h.one(), {j}) * Scalar::q_pow(e)));
    }
}

TEST_CASE("trivial central charge and weights")
{
    std::mt19937_64 rng(4);
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 1, 2}, {3, 2, 2}}) {
        FunctorModel fm(m, n, ell);
        const ParityData &s = fm.standard_parity();
        const int kappa = s.kappa();
        for (int t = 0; t < 50; ++t) {
            FunctorVector v = random_vector(rng, fm, s);
            FunctorVector w = v;
            for (int i = 0; i < kappa; ++i) {
                w = fm.apply({Atom::Kind::Kplus, i, 0}, w);
            }
            CHECK(fm.equal(w, v));
        }
        for (const auto &j : label_tuples(kappa, ell, true)) {
            FunctorVector v = vec(fm, s, fm.daha().one(), j);
            for (int i = 0; i < kappa; ++i) {
                std::vector<int> lambda(static_cast<std::size_t>(kappa) + 1, 0);
                for (int x : j) {
                    ++lambda[static_cast<std::size_t>(x)];
                }
                int a = i == 0 ? kappa : i;
                int b = i == 0 ? 1 : i + 1;
                int e = s.s(a) * lambda[static_cast<std::size_t>(a)] - s.s(b) * lambda[static_cast<std::size_t>(b)];
                CHECK(fm.equal(fm.apply({Atom::Kind::Kplus, i, 0}, v), v * Scalar::q_pow(e)));
            }
        }
    }
}

TEST_CASE("rotation identities")
{
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 1, 2}, {3, 2, 1}}) {
        FunctorModel fm(m, n, ell);
        const ParityData &s = fm.standard_parity();
        std::vector<DahaElement> ws{fm.daha().one(), fm.daha().word({Qg()}), fm.daha().word({Y(1)})};
        Report r = rotation_identity_check(fm, s, 2, functor_battery(fm, s, ws));
        INFO(r.summary());
        for (const auto &res : r.results) {
            if (res.status == Status::fail) {
                INFO(res.relation, " r=", res.modes[0], " ", res.vector, " residual ", *res.residual);
                CHECK(false);
                break;
            }
        }
        CHECK(r.all_passed());
    }
}

TEST_CASE("zero-node Chevalley letters from Drinfeld currents on the functor space")
{
    for (auto [m, n, ell] : {std::tuple{3, 1, 1}, {3, 1, 2}, {2, 2, 2}, {3, 2, 2}, {4, 1, 2}}) {
        FunctorModel fm(m, n, ell);
        const ParityData &s = fm.standard_parity();
        ZeroNodeTrees trees = dj_drinfeld_zero_modes(s);
        auto apply = [&](const Atom &a, const FunctorVector &v) { return fm.apply(a, v, ZeroModel::vertical); };
        std::vector<DahaElement> ws{fm.daha().one(), fm.daha().word({Y(1)})};
        if (ell >= 2) {
            ws.push_back(fm.daha().word({T(1)}));
        }
        for (const FunctorVector &v : functor_battery(fm, s, ws)) {
            INFO(m, " ", n, " ", ell, " ", v.to_string());
            CHECK(fm.equal(evaluate(trees.e0, v, apply), fm.chevalley_apply(ZeroModel::vertical, {K::e, 0}, v)));
            CHECK(fm.equal(evaluate(trees.f0, v, apply), fm.chevalley_apply(ZeroModel::vertical, {K::f, 0}, v)));
            CHECK(fm.equal(evaluate(trees.t0, v, apply), fm.chevalley_apply(ZeroModel::vertical, {K::t, 0}, v)));
        }
    }
}
