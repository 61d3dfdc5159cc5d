#include <doctest.h>

#include <random>

#include "tsw/daha.hpp"

using namespace tsw;

namespace
{

const Scalar zeta_formal = Scalar::monomial(0, 1);

AffinePermutation perm(std::vector<int> w)
{
    return AffinePermutation::from_window(std::move(w));
}

std::vector<int> zeros(int ell)
{
    return std::vector<int>(static_cast<std::size_t>(ell), 0);
}

GeneratorWord random_word(std::mt19937_64 &rng, int ell, int len)
{
    GeneratorWord w;
    for (int t = 0; t < len; ++t) {
        int exp = rng() % 2 ? 1 : -1;
        switch (rng() % 4) {
        case 0:
            if (ell >= 2) {
                w.push_back(T(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ell - 1)), exp));
            }
            break;
        case 1:
            w.push_back(X(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ell)), exp));
            break;
        case 2:
            w.push_back(Y(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ell)), exp));
            break;
        default:
            w.push_back(Qg(exp));
        }
    }
    return w;
}

DahaElement random_basis(std::mt19937_64 &rng, const Daha &h)
{
    int ell = h.ell();
    std::vector<int> letters;
    if (ell >= 2) {
        for (int t = static_cast<int>(rng() % 4); t > 0; --t) {
            letters.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(ell)));
        }
    }
    std::vector<int> mu(static_cast<std::size_t>(ell));
    for (auto &m : mu) {
        m = static_cast<int>(rng() % 5) - 2;
    }
    return h.basis(static_cast<int>(rng() % 3) - 1, AffinePermutation::from_word(ell, letters), mu);
}

} // namespace

TEST_CASE("affine permutations")
{
    AffinePermutation id = AffinePermutation::identity(3);
    CHECK(id.length() == 0);
    CHECK(id.times_simple(0).window() == std::vector<int>{0, 2, 4});
    CHECK(id.times_simple(0).rotated_up() == id.times_simple(1));
    CHECK(id.times_simple(1).rotated_down() == id.times_simple(0));
    CHECK(id.times_simple(2).rotated_up() == id.times_simple(0));
    CHECK_THROWS(AffinePermutation::from_window({1, 1, 4}));
    CHECK_THROWS(AffinePermutation::from_window({2, 3, 4}));

    std::mt19937_64 rng(3);
    for (int ell = 2; ell <= 4; ++ell) {
        for (int t = 0; t < 100; ++t) {
            std::vector<int> word;
            for (int k = static_cast<int>(rng() % 7); k > 0; --k) {
                word.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(ell)));
            }
            AffinePermutation w = AffinePermutation::from_word(ell, word);
            std::vector<int> red = w.reduced_word();
            CHECK(static_cast<int>(red.size()) == w.length());
            CHECK(AffinePermutation::from_word(ell, red) == w);
            CHECK(w.length() <= static_cast<int>(word.size()));
            for (int i = 0; i < ell; ++i) {
                int l2 = w.times_simple(i).length();
                CHECK(std::abs(l2 - w.length()) == 1);
                CHECK((l2 < w.length()) == w.has_right_descent(i));
            }
            CHECK(w.rotated_down().rotated_up() == w);
            CHECK(w.rotated_down().length() == w.length());
        }
    }
}

TEST_CASE("Hecke quadratic and inverse in the basis")
{
    Daha h(2, zeta_formal);
    DahaElement t1 = h.basis(0, perm({2, 1}), zeros(2));
    DahaElement expect = t1 * (Scalar::q_pow(2) - Scalar(1)) + h.one() * Scalar::q_pow(2);
    CHECK(h.mul_T(t1, 1) == expect);

    DahaElement tinv = h.mul_T(h.one(), 1, -1);
    CHECK(tinv == t1 * Scalar::q_pow(-2) + h.one() * (Scalar::q_pow(-2) - Scalar(1)));

    DahaElement y2 = h.y_monomial({0, 1});
    CHECK(h.mul_T(h.mul_T(y2, 1), 1, -1) == y2);
}

TEST_CASE("straightening Y past T")
{
    // Y_1 T_1 = T_1 Y_2 + (q^2 - 1) Y_1, from T_1^{-1} Y_1 T_1^{-1} = q^{-2} Y_2
    // and the quadratic relation.
    Daha h(2, zeta_formal);
    DahaElement lhs = h.mul_T(h.y_monomial({1, 0}), 1);
    DahaElement rhs = h.basis(0, perm({2, 1}), {0, 1}) + h.y_monomial({1, 0}) * (Scalar::q_pow(2) - Scalar(1));
    CHECK(lhs == rhs);
    // Y_2 T_1 = T_1 Y_1 - (q^2 - 1) Y_1
    lhs = h.mul_T(h.y_monomial({0, 1}), 1);
    rhs = h.basis(0, perm({2, 1}), {1, 0}) - h.y_monomial({1, 0}) * (Scalar::q_pow(2) - Scalar(1));
    CHECK(lhs == rhs);
    // Y_1 Y_2 is central in the finite Hecke algebra.
    CHECK(h.mul_T(h.y_monomial({1, 1}), 1) == h.basis(0, perm({2, 1}), {1, 1}));
}

TEST_CASE("Y and Q letters")
{
    Daha h1(1, zeta_formal);
    CHECK(h1.mul_Y(h1.one(), 1) == h1.y_monomial({1}));
    CHECK(h1.mul_Y(h1.y_monomial({1}), 1, -1) == h1.one());
    CHECK(h1.mul_Q(h1.y_monomial({1}), 1) == h1.basis(1, AffinePermutation::identity(1), {1}, zeta_formal.inverse()));
    CHECK(h1.mul_Q(h1.mul_Q(h1.one(), 1), -1) == h1.one());
    // X_1 = Q when ell = 1, and X_1 Y_1 = zeta Y_1 X_1.
    CHECK(h1.mul_X(h1.y_monomial({1}), 1) == h1.basis(1, AffinePermutation::identity(1), {1}, zeta_formal.inverse()));

    Daha h2(2, zeta_formal);
    CHECK(h2.mul_Q(h2.y_monomial({0, 1}), 1) == h2.basis(1, AffinePermutation::identity(2), {1, 0}));
    CHECK(h2.mul_Y(h2.y_monomial({1, 1}), 1) == h2.y_monomial({2, 1}));
}

TEST_CASE("words and composites")
{
    CHECK(t_range_up(3, 1, 1) == GeneratorWord{T(1)});
    CHECK(t_range_down(4, 3, 1) == GeneratorWord{T(3), T(2), T(1)});
    CHECK(p_r(3, 1) == concat({q_ij(3, 2, 2), q_ij(3, 1, 1)}));
    CHECK(p_r(4, 2) == concat({q_ij(4, 2, 3), q_ij(4, 1, 2)}));
    CHECK_THROWS(p_r(3, 3));
    CHECK_THROWS(q_ij(3, 2, 1));
    CHECK(parse_word("T1 X2^-1 Y1 Q^-1") == GeneratorWord{T(1), X(2, -1), Y(1), Qg(-1)});
    CHECK(to_string(parse_word("T1 X2^-1 Y1 Q^-1")) == "T1 X2^-1 Y1 Q^-1");
    CHECK(inverse(GeneratorWord{T(1), Qg()}) == GeneratorWord{Qg(-1), T(1, -1)});
    CHECK_THROWS(parse_word("Z1"));

    for (int ell = 1; ell <= 4; ++ell) {
        Daha h(ell, zeta_formal);
        GeneratorWord qw = ell >= 2 ? q_ij(ell, 1, ell - 1) : GeneratorWord{X(1)};
        CHECK(h.word(qw) == h.word({Qg()}));
    }
    Daha h3(3, zeta_formal);
    CHECK(h3.word({T(1), T(2), T(1)}) == h3.word({T(2), T(1), T(2)}));
    CHECK(h3.word({T(1), T(1, -1)}) == h3.one());
    DahaElement t1 = h3.word({T(1)});
    CHECK(h3.word({X(2), Y(1, -1), X(2, -1), Y(1)}) == h3.mul_T(t1, 1) * Scalar::q_pow(-2));
    CHECK(h3.word({X(1), X(2)}) == h3.word({X(2), X(1)}));
}

TEST_CASE("round trips and associativity")
{
    std::mt19937_64 rng(5);
    for (int ell = 1; ell <= 3; ++ell) {
        Daha h(ell, derived_params(3, 1).zeta);
        for (int t = 0; t < 100; ++t) {
            DahaElement e = random_basis(rng, h);
            GeneratorWord g = random_word(rng, ell, 1);
            if (g.empty()) {
                continue;
            }
            CHECK(h.apply(h.apply(e, g), inverse(g)) == e);
        }
        for (int t = 0; t < 25; ++t) {
            DahaElement e = random_basis(rng, h);
            GeneratorWord u = random_word(rng, ell, 1 + static_cast<int>(rng() % 6));
            GeneratorWord v = random_word(rng, ell, 1 + static_cast<int>(rng() % 6));
            DahaElement left = h.apply(h.apply(e, u), v);
            DahaElement right = h.mul(e, h.mul(h.word(u), h.word(v)));
            CHECK(left == right);
        }
    }
}

TEST_CASE("full presentation holds for small ell")
{
    for (int ell = 1; ell <= 4; ++ell) {
        for (const Scalar &zeta : {zeta_formal, derived_params(3, 1).zeta}) {
            Daha h(ell, zeta);
            DahaCheckOptions opts;
            opts.random_elements = ell <= 3 ? 4 : 1;
            opts.numeric_points = {{Rational(4), Rational(9)}};
            Report r = check_daha_presentation(h, opts);
            INFO(r.summary());
            CHECK(r.count(Status::fail) == 0);
            CHECK(r.count(Status::pass) > 0);
            for (const auto &res : r.results) {
                CHECK(res.numeric == Status::pass);
            }
        }
    }
}

TEST_CASE("presentation check detects a wrong zeta")
{
    // Claiming zeta while the engine uses zeta^2 must fail the wrap relation.
    Daha h(2, zeta_formal * zeta_formal);
    Report r = check_daha_presentation(h);
    CHECK(r.count(Status::fail) == 0);
    DahaElement lhs = h.word({Qg(), Y(2), Qg(-1)});
    CHECK(lhs != h.word({Y(1)}) * zeta_formal);
}

TEST_CASE("dump format")
{
    Daha h(2, zeta_formal);
    CHECK(h.one().to_string() == "1 * Q^0 * T[1,2] * Y^(0,0)");
    CHECK(DahaElement(2).to_string() == "0");
}
