#ifndef TSW_LAURENT_HPP
#define TSW_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "tsw/scalar.hpp"

namespace tsw
{

using Exponents = std::vector<int>;

// Laurent polynomial in commuting variables u_1..u_n (the evaluation
// variables xi_p, or the Y_p of the double affine Hecke algebra) with
// Scalar coefficients.
class LaurentPoly
{
public:
    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const Scalar &c);
    // c * u_var^e
    static LaurentPoly monomial(int nvars, int var, int e, const Scalar &c = Scalar(1));

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Scalar> &terms() const { return terms_; }

    void add_term(const Exponents &e, const Scalar &c);

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly operator*(const LaurentPoly &o) const;
    LaurentPoly operator*(const Scalar &c) const;
    LaurentPoly operator+(const LaurentPoly &o) const
    {
        LaurentPoly r = *this;
        return r += o;
    }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

    std::string to_string(char var = 'u') const;

private:
    int nvars_;
    std::map<Exponents, Scalar> terms_;
};

} // namespace tsw

#endif
