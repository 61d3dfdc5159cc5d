#ifndef TSW_OPEXPR_HPP
#define TSW_OPEXPR_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tsw/scalar.hpp"

namespace tsw
{

// One operator letter. Currents carry a mode; Chevalley letters ignore it.
struct Atom {
    enum class Kind { E, F, Kplus, Kminus, Ce, Cf, Ct, Ctinv };
    Kind kind;
    int node = 0;
    int mode = 0;

    friend auto operator<=>(const Atom &, const Atom &) = default;
};

std::string to_string(const Atom &a);

// c * atoms[0] atoms[1] ... ; the last atom acts first.
struct OpWord {
    Scalar c;
    std::vector<Atom> atoms;
};

// Linear combination of operator words with a fixed super-degree.
class OpExpr
{
public:
    OpExpr() = default;
    OpExpr(Atom a, int parity) : parity_(parity) { words_.push_back({Scalar(1), {a}}); }

    static OpExpr identity() { return OpExpr(Scalar(1)); }
    explicit OpExpr(const Scalar &c) { words_.push_back({c, {}}); }

    int parity() const { return parity_; }
    const std::vector<OpWord> &words() const { return words_; }

    OpExpr &operator+=(const OpExpr &o);
    OpExpr &operator-=(const OpExpr &o);
    OpExpr &operator*=(const Scalar &c);
    friend OpExpr operator+(OpExpr a, const OpExpr &b) { return a += b; }
    friend OpExpr operator-(OpExpr a, const OpExpr &b) { return a -= b; }
    friend OpExpr operator*(OpExpr a, const Scalar &c) { return a *= c; }
    friend OpExpr operator*(const Scalar &c, OpExpr a) { return a *= c; }
    // Composition: (a * b) v = a (b v).
    friend OpExpr operator*(const OpExpr &a, const OpExpr &b);

    std::string to_string() const;

private:
    std::vector<OpWord> words_;
    int parity_ = 0;
};

// [X, Y]_a = XY - (-1)^{|X||Y|} a YX
OpExpr bracket(const OpExpr &x, const OpExpr &y, const Scalar &a = Scalar(1));

// Evaluates e on v; apply(atom, vec) acts by one letter. Words sharing a
// suffix reuse the partial result.
template <class V, class Apply>
V evaluate(const OpExpr &e, const V &v, Apply &&apply)
{
    std::map<std::vector<Atom>, V> memo;
    V out = v;
    out *= Scalar(0);
    for (const OpWord &w : e.words()) {
        std::vector<Atom> suffix;
        V cur = v;
        for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
            suffix.insert(suffix.begin(), *it);
            auto found = memo.find(suffix);
            if (found != memo.end()) {
                cur = found->second;
            } else {
                cur = apply(*it, cur);
                memo.emplace(suffix, cur);
            }
        }
        cur *= w.c;
        out += cur;
    }
    return out;
}

} // namespace tsw

#endif
