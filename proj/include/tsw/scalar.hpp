#ifndef TSW_SCALAR_HPP
#define TSW_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tsw
{

using Rational = mpq_class;

// One term c * q^{qh/2} * d^{dh/2}.
struct ScalarTerm {
    int qh = 0;
    int dh = 0;
    Rational coef;
};

// Exact Laurent polynomial in q^{1/2}, d^{1/2} with rational coefficients.
//
// Terms are kept sorted by (qh, dh) and zero coefficients are never stored,
// so structural equality is algebraic equality.
class Scalar
{
public:
    Scalar() = default;
    Scalar(long v);
    Scalar(const Rational &v);

    // c * q^{qh/2} * d^{dh/2}
    static Scalar monomial(int qh, int dh, const Rational &c = 1);
    static Scalar q_pow(int e) { return monomial(2 * e, 0); }
    static Scalar d_pow(int e) { return monomial(0, 2 * e); }
    static Scalar q() { return q_pow(1); }
    static Scalar d() { return d_pow(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // Units of the ring are exactly the monomials.
    bool is_unit() const { return is_monomial(); }
    const std::vector<ScalarTerm> &terms() const { return terms_; }

    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(const Scalar &a, const Scalar &b);

    friend bool operator==(const Scalar &a, const Scalar &b);
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
    // Arbitrary but fixed total order, used for deterministic containers.
    friend bool operator<(const Scalar &a, const Scalar &b);

    // Throws std::domain_error unless the scalar is a unit.
    Scalar inverse() const;
    // Negative exponents require a unit.
    Scalar pow(int e) const;

    // Multiplies by q^{qh/2} d^{dh/2}.
    Scalar scaled(int qh, int dh) const;

    std::string to_string() const;
    static Scalar parse(std::string_view text);

    std::size_t hash() const;

private:
    void add_term(int qh, int dh, const Rational &c);
    void normalize();

    std::vector<ScalarTerm> terms_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

// [k] = (q^k - q^{-k}) / (q - q^{-1}), as an explicit Laurent polynomial.
Scalar qint(int k);

struct DerivedParams {
    Scalar q1, q2, q3, zeta;
};

// q1 = d q^{-1}, q2 = q^2, q3 = d^{-1} q^{-1}, zeta = q1^{n-m}.
// Throws std::invalid_argument when m == n.
DerivedParams derived_params(int m, int n);

// Evaluates x at q = q0, d = d0. Half-integer powers need q0 (resp. d0) to be
// the square of a rational. Throws std::domain_error when q0 or d0 is zero,
// when |q0| = 1, or when a required square root is not rational.
Rational specialize(const Scalar &x, const Rational &q0, const Rational &d0);

std::string rational_to_string(const Rational &r);

} // namespace tsw

#endif
