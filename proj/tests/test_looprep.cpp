#include <doctest.h>

#include <random>

#include "tsw/looprep.hpp"

using namespace tsw;

namespace
{

using K = ChevalleyGen::Kind;

std::vector<ParityData> parities_up_to(int max_kappa)
{
    std::vector<ParityData> out;
    for (int k = 2; k <= max_kappa; ++k) {
        for (int mask = 1; mask + 1 < (1 << k); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < k; ++i) {
                s.push_back((mask >> i) & 1 ? 1 : -1);
            }
            out.emplace_back(s);
        }
    }
    return out;
}

PlainTensor xi_basis(const std::vector<int> &j, const std::vector<int> &nu)
{
    return PlainTensor::basis(j, nu);
}

} // namespace

TEST_CASE("Chevalley action through the coproduct")
{
    ParityData pd = ParityData::standard(3, 1);
    PlainTensor v = PlainTensor::basis({2, 2});
    PlainTensor expect = PlainTensor::basis({1, 2}, {}, Scalar::q_pow(-1)) + PlainTensor::basis({2, 1});
    CHECK(chevalley_apply(pd, {K::e, 1}, v) == expect);

    // t_i is diagonal with exponent sum_a s_{j_a}(delta_{i,j_a} - delta_{i+1,j_a}).
    PlainTensor w = PlainTensor::basis({3, 4, 4});
    CHECK(chevalley_apply(pd, {K::t, 3}, w) == w * Scalar::q_pow(1 + 2));
    CHECK(chevalley_apply(pd, {K::tinv, 3}, chevalley_apply(pd, {K::t, 3}, w)) == w);

    PlainTensor v1 = PlainTensor::basis({1});
    CHECK(chevalley_apply(pd, {K::e, 0}, v1) == xi_basis({4}, {1}));
    // f_0 v_kappa = s_kappa xi^{-1} v_1
    CHECK(chevalley_apply(pd, {K::f, 0}, PlainTensor::basis({4})) == xi_basis({1}, {-1}) * Scalar(-1));
    CHECK(chevalley_apply(pd, {K::t, 0}, v1) == v1 * Scalar::q_pow(-1));
    CHECK(chevalley_apply(pd, {K::t, 0}, PlainTensor::basis({4})) == PlainTensor::basis({4}) * Scalar::q_pow(-1));

    // Odd f_3 passing the odd v_4 in the first slot picks up a sign; f_3 v_3 = s_3 v_4.
    PlainTensor u = PlainTensor::basis({4, 3});
    CHECK(chevalley_apply(pd, {K::f, 3}, u) == PlainTensor::basis({4, 4}) * (-Scalar::q_pow(-1)));
}

TEST_CASE("Chevalley relations on tensor powers")
{
    // t_i e_j t_i^{-1} = q^{a_ij} e_j and [e_i, f_j] = delta_ij (t_i - t_i^{-1}) / (q - q^{-1}),
    // both sides multiplied through by q - q^{-1}.
    const Scalar qq = Scalar::q() - Scalar::q_pow(-1);
    for (const auto &pd : parities_up_to(4)) {
        const int kappa = pd.kappa();
        if (kappa < 3) {
            continue;
        }
        for (int ell = 1; ell <= 2; ++ell) {
            for (const auto &j : label_tuples(kappa, ell, false)) {
                PlainTensor v = PlainTensor::basis(j);
                for (int a = 0; a < kappa; ++a) {
                    for (int b = 0; b < kappa; ++b) {
                        PlainTensor ev = chevalley_apply(pd, {K::e, b}, v);
                        PlainTensor conj = chevalley_apply(pd, {K::t, a}, chevalley_apply(pd, {K::e, b}, chevalley_apply(pd, {K::tinv, a}, v)));
                        CHECK(conj == ev * Scalar::q_pow(pd.cartan(a, b)));

                        PlainTensor ef = chevalley_apply(pd, {K::e, a}, chevalley_apply(pd, {K::f, b}, v));
                        PlainTensor fe = chevalley_apply(pd, {K::f, b}, chevalley_apply(pd, {K::e, a}, v));
                        int sign = (pd.node_parity(a) && pd.node_parity(b)) ? -1 : 1;
                        PlainTensor lhs = (ef - fe * Scalar(sign)) * qq;
                        PlainTensor rhs(ell);
                        if (a == b) {
                            rhs = chevalley_apply(pd, {K::t, a}, v) - chevalley_apply(pd, {K::tinv, a}, v);
                        }
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("odd operators anticommute with the Koszul sign")
{
    std::mt19937_64 rng(17);
    ParityData pd = ParityData::parse("++-+-");
    const int kappa = pd.kappa();
    int checked = 0;
    while (checked < 50) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(kappa));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(kappa));
        if (!pd.node_parity(a) || !pd.node_parity(b) || pd.cartan(a, b) != 0) {
            continue;
        }
        int ell = 1 + static_cast<int>(rng() % 3);
        std::vector<int> j, nu;
        for (int t = 0; t < ell; ++t) {
            j.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(kappa)));
            nu.push_back(static_cast<int>(rng() % 3) - 1);
        }
        PlainTensor v = xi_basis(j, nu);
        K ka = rng() % 2 ? K::e : K::f;
        K kb = rng() % 2 ? K::e : K::f;
        if (ka != kb) {
            continue;
        }
        PlainTensor ab = chevalley_apply(pd, {ka, a}, chevalley_apply(pd, {kb, b}, v));
        PlainTensor ba = chevalley_apply(pd, {kb, b}, chevalley_apply(pd, {ka, a}, v));
        CHECK(ab == ba * Scalar(-1));
        ++checked;
    }
}

TEST_CASE("Hecke operator on V tensor V")
{
    ParityData pd = ParityData::standard(3, 1);
    CHECK(hecke_T_apply(pd, 1, PlainTensor::basis({1, 1})) == PlainTensor::basis({1, 1}) * Scalar::q_pow(2));
    CHECK(hecke_T_apply(pd, 1, PlainTensor::basis({4, 4})) == PlainTensor::basis({4, 4}) * Scalar(-1));
    PlainTensor v = PlainTensor::basis({1, 3});
    CHECK(hecke_T_apply(pd, 1, v) == PlainTensor::basis({3, 1}, {}, Scalar::q()));
    CHECK(hecke_T_apply(pd, 1, hecke_T_apply(pd, 1, v), -1) == v);
    // Two odd labels swap with a sign.
    ParityData p2 = ParityData::parse("++--");
    CHECK(hecke_T_apply(p2, 1, PlainTensor::basis({3, 4})) == PlainTensor::basis({4, 3}, {}, -Scalar::q()));
    CHECK_THROWS(hecke_T_apply(pd, 2, v));
    CHECK_THROWS(hecke_T_apply(pd, 0, v));
    // xi exponents stay with their slots.
    CHECK(hecke_T_apply(pd, 1, xi_basis({1, 2}, {1, 0})) == xi_basis({2, 1}, {1, 0}) * Scalar::q());
}

TEST_CASE("Schur-Weyl commutation, exhaustive")
{
    for (auto [m, n] : {std::pair{3, 1}, {2, 2}, {2, 3}}) {
        for (int ell = 2; ell <= 3; ++ell) {
            Report r = schur_weyl_commutation_check(ParityData::standard(m, n), ell);
            INFO(r.summary());
            CHECK(r.count(Status::fail) == 0);
            CHECK(r.count(Status::pass) > 0);
        }
    }
    Report r = schur_weyl_commutation_check(ParityData::parse("+-+-"), 3);
    CHECK(r.all_passed());
    CHECK_THROWS(schur_weyl_commutation_check(ParityData::standard(3, 1), 1));
}

TEST_CASE("current modes on the vector representation")
{
    ParityData pd = ParityData::standard(3, 1);
    for (int i = 1; i < 4; ++i) {
        for (int r = -3; r <= 3; ++r) {
            // (q^{mu(i)} xi)^r v_i
            PlainTensor expect = xi_basis({i}, {r}) * Scalar::q_pow(pd.mu(i) * r);
            CHECK(mode_apply_plain(pd, CurrentFamily::E, i, r, PlainTensor::basis({i + 1})) == expect);
            for (int j = 1; j <= 4; ++j) {
                if (j != i + 1) {
                    CHECK(mode_apply_plain(pd, CurrentFamily::E, i, r, PlainTensor::basis({j})).is_zero());
                }
            }
        }
        CHECK(mode_apply_plain(pd, CurrentFamily::Kplus, i, 0, PlainTensor::basis({i})) ==
              PlainTensor::basis({i}) * Scalar::q_pow(pd.s(i)));
        CHECK(mode_apply_plain(pd, CurrentFamily::Kminus, i, 0, PlainTensor::basis({i})) ==
              PlainTensor::basis({i}) * Scalar::q_pow(-pd.s(i)));
        CHECK(mode_apply_plain(pd, CurrentFamily::Kplus, i, -1, PlainTensor::basis({i})).is_zero());
    }
    CHECK_THROWS(mode_apply_plain(pd, CurrentFamily::E, 1, 0, PlainTensor::basis({2, 1})));
}

TEST_CASE("two-slot modes against hand expansion")
{
    // x^+_{i,1}(v_{i+1} (x) v_{i+1}): slot 1 carries psi_{-s_{i+1}}(a_2/z), slot 2 the bare delta.
    ParityData pd = ParityData::standard(3, 1);
    for (int i = 1; i <= 3; ++i) {
        const int s = pd.s(i + 1);
        const Scalar alpha = Scalar::q_pow(pd.mu(i));
        PlainTensor v = PlainTensor::basis({i + 1, i + 1});
        const int sign = (pd.node_parity(i) && pd.vector_parity(i + 1)) ? -1 : 1;
        PlainTensor expect = xi_basis({i, i + 1}, {1, 0}) * (alpha * Scalar::q_pow(-s)) +
                             xi_basis({i, i + 1}, {0, 1}) * (alpha * (Scalar::q_pow(-s) - Scalar::q_pow(s))) +
                             xi_basis({i + 1, i}, {0, 1}) * (alpha * Scalar(sign));
        CHECK(mode_apply_plain(pd, CurrentFamily::E, i, 1, v) == expect);

        // Mode 0 of the same: q^{-s} on slot 1 and the bare delta on slot 2.
        PlainTensor expect0 = PlainTensor::basis({i, i + 1}, {}, Scalar::q_pow(-s)) + PlainTensor::basis({i + 1, i}, {}, Scalar(sign));
        CHECK(mode_apply_plain(pd, CurrentFamily::E, i, 0, v) == expect0);
    }
}

TEST_CASE("loop relations on a single slot")
{
    // [x^+_{i,r}, x^-_{i,s}] = (k^+_{i,r+s} - k^-_{i,r+s}) / (q - q^{-1}) on V(xi), multiplied through.
    const Scalar qq = Scalar::q() - Scalar::q_pow(-1);
    for (const auto &pd : parities_up_to(4)) {
        const int kappa = pd.kappa();
        for (int i = 1; i < kappa; ++i) {
            for (int j = 1; j <= kappa; ++j) {
                PlainTensor v = PlainTensor::basis({j});
                for (int r = -2; r <= 2; ++r) {
                    for (int s = -2; s <= 2; ++s) {
                        PlainTensor ef = mode_apply_plain(pd, CurrentFamily::E, i, r, mode_apply_plain(pd, CurrentFamily::F, i, s, v));
                        PlainTensor fe = mode_apply_plain(pd, CurrentFamily::F, i, s, mode_apply_plain(pd, CurrentFamily::E, i, r, v));
                        int sign = pd.node_parity(i) ? -1 : 1;
                        PlainTensor lhs = (ef - fe * Scalar(sign)) * qq;
                        PlainTensor rhs = mode_apply_plain(pd, CurrentFamily::Kplus, i, r + s, v) -
                                          mode_apply_plain(pd, CurrentFamily::Kminus, i, r + s, v);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("zero modes agree with Chevalley generators")
{
    for (const auto &pd : parities_up_to(5)) {
        const int kappa = pd.kappa();
        for (int ell = 1; ell <= 3; ++ell) {
            if (kappa == 5 && ell == 3) {
                continue;
            }
            for (const auto &j : label_tuples(kappa, ell, true)) {
                PlainTensor v = PlainTensor::basis(j);
                for (int i = 1; i < kappa; ++i) {
                    CHECK(mode_apply_plain(pd, CurrentFamily::E, i, 0, v) == chevalley_apply(pd, {K::e, i}, v));
                    CHECK(mode_apply_plain(pd, CurrentFamily::F, i, 0, v) == chevalley_apply(pd, {K::f, i}, v));
                    CHECK(mode_apply_plain(pd, CurrentFamily::Kplus, i, 0, v) == chevalley_apply(pd, {K::t, i}, v));
                    CHECK(mode_apply_plain(pd, CurrentFamily::Kminus, i, 0, v) == chevalley_apply(pd, {K::tinv, i}, v));
                }
            }
        }
    }
}

TEST_CASE("bracket trees reproduce the zero node on one slot")
{
    for (auto [m, n] : {std::pair{3, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {4, 1}, {3, 2}, {2, 3}, {1, 4}}) {
        ParityData pd = ParityData::standard(m, n);
        ZeroNodeTrees trees = dj_drinfeld_zero_modes(pd);
        auto apply = [&](const Atom &a, const PlainTensor &v) { return apply_plain_atom(pd, a, v); };
        for (int j = 1; j <= pd.kappa(); ++j) {
            for (int nu = -1; nu <= 1; ++nu) {
                PlainTensor v = xi_basis({j}, {nu});
                CHECK(evaluate(trees.e0, v, apply) == chevalley_apply(pd, {K::e, 0}, v));
                CHECK(evaluate(trees.f0, v, apply) == chevalley_apply(pd, {K::f, 0}, v));
                CHECK(evaluate(trees.t0, v, apply) == chevalley_apply(pd, {K::t, 0}, v));
            }
        }
    }
    CHECK_THROWS(dj_drinfeld_zero_modes(ParityData::parse("+-+-")));
}
