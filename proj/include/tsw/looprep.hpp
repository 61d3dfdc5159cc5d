#ifndef TSW_LOOPREP_HPP
#define TSW_LOOPREP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsw/currents.hpp"
#include "tsw/opexpr.hpp"
#include "tsw/report.hpp"
#include "tsw/superdata.hpp"

namespace tsw
{

// Element of C[xi_1^{+-1},...,xi_ell^{+-1}] (x) V^{(x) ell}. A key is the label
// tuple j followed by the xi exponent vector nu.
class PlainTensor
{
public:
    using Key = std::vector<int>;

    explicit PlainTensor(int ell = 1) : ell_(ell) {}
    static PlainTensor basis(const std::vector<int> &j, std::vector<int> nu = {}, const Scalar &c = Scalar(1));

    int ell() const { return ell_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar> &terms() const { return terms_; }

    std::vector<int> labels(const Key &k) const { return {k.begin(), k.begin() + ell_}; }
    std::vector<int> exponents(const Key &k) const { return {k.begin() + ell_, k.end()}; }

    void add_term(const Key &k, const Scalar &c);
    void add_term(const std::vector<int> &j, const std::vector<int> &nu, const Scalar &c);

    PlainTensor &operator+=(const PlainTensor &o);
    PlainTensor &operator-=(const PlainTensor &o);
    PlainTensor &operator*=(const Scalar &c);
    friend PlainTensor operator+(PlainTensor a, const PlainTensor &b) { return a += b; }
    friend PlainTensor operator-(PlainTensor a, const PlainTensor &b) { return a -= b; }
    friend PlainTensor operator*(PlainTensor a, const Scalar &c) { return a *= c; }
    friend bool operator==(const PlainTensor &a, const PlainTensor &b) { return a.terms_ == b.terms_; }

    bool specializes_to_zero(const Rational &q0, const Rational &d0) const;

    // "c * xi^(nu) v[j]" terms joined by " + "
    std::string to_string() const;

private:
    int ell_;
    std::map<Key, Scalar> terms_;
};

struct ChevalleyGen {
    enum class Kind { e, f, t, tinv };
    Kind kind;
    int node;
};

// Iterated coproduct action of a Chevalley generator; node 0 acts through the
// theta-operators and xi_j^{+-1}.
PlainTensor chevalley_apply(const ParityData &pd, ChevalleyGen g, const PlainTensor &v);

// The Hecke operator on slots (i, i+1); exp = -1 applies its inverse.
PlainTensor hecke_T_apply(const ParityData &pd, int i, const PlainTensor &v, int exp = 1);

// Mode r of a current at node i in 1..kappa-1. Every key must be sorted.
PlainTensor mode_apply_plain(const ParityData &pd, CurrentFamily fam, int i, int r, const PlainTensor &v);

// One letter on the plain tensor: currents through mode_apply_plain,
// Chevalley letters through chevalley_apply.
PlainTensor apply_plain_atom(const ParityData &pd, const Atom &a, const PlainTensor &v);

int atom_parity(const ParityData &pd, const Atom &a);
OpExpr atom_expr(const ParityData &pd, Atom a);

// Images of e_0, f_0, t_0 as bracket trees in the current modes (standard
// parity, c = 1). x^+ is E, x^- is F, k_i^{+-1} is the mode-0 K^{+-}.
struct ZeroNodeTrees {
    OpExpr e0;
    OpExpr f0;
    OpExpr t0;
};
ZeroNodeTrees dj_drinfeld_zero_modes(const ParityData &pd);

// [T_i, g] = 0 for the finite Chevalley generators on every basis vector,
// together with the Hecke quadratic, braid and far-commutation relations.
// Each entry also gets a numeric verdict when points are given.
Report schur_weyl_commutation_check(const ParityData &pd, int ell,
                                    const std::vector<std::pair<Rational, Rational>> &points = {});

// All label tuples in (0, kappa]^ell, optionally only the nondecreasing ones.
std::vector<std::vector<int>> label_tuples(int kappa, int ell, bool sorted_only);

// Sparse matrix of a letter on the listed basis vectors:
// [{input, output: [[key, coefficient], ...]}, ...]
nlohmann::json dump_plain_operator(const ParityData &pd, const Atom &a, const std::vector<PlainTensor> &inputs);

} // namespace tsw

#endif
