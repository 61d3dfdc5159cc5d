#include "tsw/opexpr.hpp"

namespace tsw
{

std::string to_string(const Atom &a)
{
    const std::string node = std::to_string(a.node);
    const std::string mode = std::to_string(a.mode);
    switch (a.kind) {
    case Atom::Kind::E:
        return "E" + node + "," + mode;
    case Atom::Kind::F:
        return "F" + node + "," + mode;
    case Atom::Kind::Kplus:
        return "K+" + node + "," + mode;
    case Atom::Kind::Kminus:
        return "K-" + node + "," + mode;
    case Atom::Kind::Ce:
        return "e" + node;
    case Atom::Kind::Cf:
        return "f" + node;
    case Atom::Kind::Ct:
        return "t" + node;
    case Atom::Kind::Ctinv:
        return "t" + node + "^-1";
    }
    return "?";
}

OpExpr &OpExpr::operator+=(const OpExpr &o)
{
    if (words_.empty()) {
        parity_ = o.parity_;
    }
    words_.insert(words_.end(), o.words_.begin(), o.words_.end());
    return *this;
}

OpExpr &OpExpr::operator-=(const OpExpr &o)
{
    if (words_.empty()) {
        parity_ = o.parity_;
    }
    for (const OpWord &w : o.words_) {
        words_.push_back({-w.c, w.atoms});
    }
    return *this;
}

OpExpr &OpExpr::operator*=(const Scalar &c)
{
    for (OpWord &w : words_) {
        w.c *= c;
    }
    return *this;
}

OpExpr operator*(const OpExpr &a, const OpExpr &b)
{
    OpExpr r;
    r.parity_ = (a.parity_ + b.parity_) % 2;
    for (const OpWord &x : a.words_) {
        for (const OpWord &y : b.words_) {
            OpWord w{x.c * y.c, x.atoms};
            w.atoms.insert(w.atoms.end(), y.atoms.begin(), y.atoms.end());
            if (!w.c.is_zero()) {
                r.words_.push_back(std::move(w));
            }
        }
    }
    return r;
}

std::string OpExpr::to_string() const
{
    if (words_.empty()) {
        return "0";
    }
    std::string out;
    for (const OpWord &w : words_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + w.c.to_string() + ")";
        for (const Atom &a : w.atoms) {
            out += " " + tsw::to_string(a);
        }
    }
    return out;
}

OpExpr bracket(const OpExpr &x, const OpExpr &y, const Scalar &a)
{
    const int sign = (x.parity() && y.parity()) ? -1 : 1;
    return x * y - (y * x) * (a * Scalar(sign));
}

} // namespace tsw
