#ifndef TSW_DAHA_HPP
#define TSW_DAHA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsw/affine_perm.hpp"
#include "tsw/laurent.hpp"
#include "tsw/report.hpp"
#include "tsw/scalar.hpp"

namespace tsw
{

// Packed basis key (k, w(1..ell), mu(1..ell)) for Q^k * T_w * Y^mu.
using DahaKey = std::vector<int>;

// Finite Scalar-linear combination of basis words Q^k * T_w * Y^mu of the
// double affine Hecke algebra of gl_ell, w an affine permutation.
class DahaElement
{
public:
    explicit DahaElement(int ell = 1) : ell_(ell) {}

    int ell() const { return ell_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<DahaKey, Scalar> &terms() const { return terms_; }

    void add_term(const DahaKey &key, const Scalar &c);
    void add_term(DahaKey &&key, const Scalar &c);

    DahaElement &operator+=(const DahaElement &o);
    DahaElement &operator-=(const DahaElement &o);
    DahaElement &operator*=(const Scalar &c);
    friend DahaElement operator+(DahaElement a, const DahaElement &b) { return a += b; }
    friend DahaElement operator-(DahaElement a, const DahaElement &b) { return a -= b; }
    friend DahaElement operator*(DahaElement a, const Scalar &c) { return a *= c; }
    friend DahaElement operator*(const Scalar &c, DahaElement a) { return a *= c; }

    friend bool operator==(const DahaElement &a, const DahaElement &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DahaElement &a, const DahaElement &b) { return !(a == b); }
    friend bool operator<(const DahaElement &a, const DahaElement &b);

    // Every coefficient evaluated at (q0, d0); used by the numeric pre-screen.
    bool specializes_to_zero(const Rational &q0, const Rational &d0) const;

    // "c * Q^k * T[w(1),...,w(ell)] * Y^(mu1,...,muell) + ..."
    std::string to_string() const;

    static int key_k(const DahaKey &key) { return key[0]; }
    std::vector<int> key_window(const DahaKey &key) const;
    std::vector<int> key_mu(const DahaKey &key) const;
    static DahaKey make_key(int k, const std::vector<int> &window, const std::vector<int> &mu);

private:
    int ell_;
    std::map<DahaKey, Scalar> terms_;
};

// One letter T_i^{+-1}, X_j^{+-1}, Y_j^{+-1} or Q^{+-1}.
struct Letter {
    enum class Kind { T, X, Y, Q };
    Kind kind = Kind::Q;
    int index = 0;
    int exp = 1;

    friend bool operator==(const Letter &, const Letter &) = default;
};

using GeneratorWord = std::vector<Letter>;

Letter T(int i, int exp = 1);
Letter X(int j, int exp = 1);
Letter Y(int j, int exp = 1);
Letter Qg(int exp = 1);

GeneratorWord inverse(const GeneratorWord &w);
GeneratorWord concat(std::initializer_list<GeneratorWord> parts);
std::string to_string(const GeneratorWord &w);
// Space-separated letters: "T1 X2^-1 Y1 Q^-1".
GeneratorWord parse_word(std::string_view text);

// T_{i,j} = T_i T_{i+1} ... T_j
GeneratorWord t_range_up(int ell, int i, int j);
// T_{j,i} = T_j T_{j-1} ... T_i
GeneratorWord t_range_down(int ell, int j, int i);
// Q_{i,j} = X_i T_{i,j}
GeneratorWord q_ij(int ell, int i, int j);
// P_r = Q_{ell-r,ell-1} ... Q_{2,r+1} Q_{1,r}
GeneratorWord p_r(int ell, int r);

// Right multiplication by generators in the Q^k T_w Y^mu basis, with the
// relations
//   T_i^{-1} Y_i T_i^{-1} = q^{-2} Y_{i+1},  (T_i + 1)(T_i - q^2) = 0,
//   Q^{-1} T_i Q = T_{i-1},  Q^{-1} Y_{i+1} Q = Y_i,  Q^{-1} Y_1 Q = zeta^{-1} Y_ell,
// and X_1 = Q T_{ell-1}^{-1} ... T_1^{-1}, X_{j+1} = q^{-2} T_j X_j T_j.
class Daha
{
public:
    Daha(int ell, Scalar zeta);

    int ell() const { return ell_; }
    const Scalar &zeta() const { return zeta_; }

    DahaElement one() const;
    DahaElement basis(int k, const AffinePermutation &w, const std::vector<int> &mu, const Scalar &c = Scalar(1)) const;
    DahaElement y_monomial(const std::vector<int> &mu) const;

    // 1 <= i < ell; i = 0 is the affine generator Q^{-1} T_1 Q.
    DahaElement mul_T(const DahaElement &e, int i, int exp = 1) const;
    DahaElement mul_Y(const DahaElement &e, int j, int exp = 1) const;
    // e * p(Y_1, ..., Y_ell)
    DahaElement mul_Y_poly(const DahaElement &e, const LaurentPoly &p) const;
    DahaElement mul_Q(const DahaElement &e, int exp = 1) const;
    DahaElement mul_X(const DahaElement &e, int j, int exp = 1) const;

    DahaElement apply(const Letter &l, const DahaElement &e) const;
    DahaElement apply(const DahaElement &e, const GeneratorWord &w) const;
    DahaElement word(const GeneratorWord &w) const { return apply(one(), w); }
    // e * f for an arbitrary element f.
    DahaElement mul(const DahaElement &e, const DahaElement &f) const;

private:
    void check_letter(const Letter &l) const;
    DahaElement mul_T_finite(const DahaElement &e, int i) const;

    int ell_;
    Scalar zeta_;
    Scalar zeta_inv_;
};

struct DahaCheckOptions {
    // Random basis elements added to the battery next to w = 1.
    int random_elements = 4;
    std::uint64_t seed = 1;
    // Numeric pre-screen point; empty disables it.
    std::vector<std::pair<Rational, Rational>> numeric_points;
};

// Evaluates every defining relation of the double affine Hecke algebra, the
// Q-presentation, the conjugation identities of Q_{i,j} and P_r, and the
// Q-conjugation of Y letters on a battery of basis elements.
Report check_daha_presentation(const Daha &h, const DahaCheckOptions &opts = {});

} // namespace tsw

#endif
