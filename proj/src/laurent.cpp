#include "tsw/laurent.hpp"

#include <stdexcept>

namespace tsw
{

LaurentPoly LaurentPoly::constant(int nvars, const Scalar &c)
{
    LaurentPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, int var, int e, const Scalar &c)
{
    if (var < 0 || var >= nvars) {
        throw std::out_of_range("LaurentPoly::monomial: variable index");
    }
    Exponents ex(static_cast<std::size_t>(nvars), 0);
    ex[static_cast<std::size_t>(var)] = e;
    LaurentPoly p(nvars);
    p.add_term(ex, c);
    return p;
}

void LaurentPoly::add_term(const Exponents &e, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const
{
    LaurentPoly r(nvars_);
    Exponents e(static_cast<std::size_t>(nvars_));
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar &c) const
{
    LaurentPoly r(nvars_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto &[e, v] : terms_) {
        r.terms_.emplace(e, v * c);
    }
    return r;
}

std::string LaurentPoly::to_string(char var) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            out += " + ";
        }
        first = false;
        out += "(" + c.to_string() + ")";
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0) {
                out += "*";
                out += var;
                out += std::to_string(k + 1);
                if (e[k] != 1) {
                    out += "^" + std::to_string(e[k]);
                }
            }
        }
    }
    return out;
}

} // namespace tsw
