#ifndef TSW_TOROIDAL_HPP
#define TSW_TOROIDAL_HPP

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsw/currents.hpp"
#include "tsw/daha.hpp"
#include "tsw/looprep.hpp"
#include "tsw/report.hpp"
#include "tsw/superdata.hpp"

namespace tsw
{

// Element of M (x)_H V_s^{(x) ell} for the right regular DAHA module M, stored
// as sum_j w_j (x) v_j over nondecreasing j. The representation is not unique;
// compare through FunctorModel::is_zero.
class FunctorVector
{
public:
    FunctorVector(ParityData s, int ell) : s_(std::move(s)), ell_(ell) {}

    const ParityData &parity() const { return s_; }
    int ell() const { return ell_; }
    const std::map<std::vector<int>, DahaElement> &terms() const { return terms_; }
    bool is_zero_raw() const { return terms_.empty(); }

    // j must be nondecreasing.
    void add(const std::vector<int> &j, const DahaElement &w);

    FunctorVector &operator+=(const FunctorVector &o);
    FunctorVector &operator-=(const FunctorVector &o);
    FunctorVector &operator*=(const Scalar &c);
    friend FunctorVector operator+(FunctorVector a, const FunctorVector &b) { return a += b; }
    friend FunctorVector operator-(FunctorVector a, const FunctorVector &b) { return a -= b; }
    friend FunctorVector operator*(FunctorVector a, const Scalar &c) { return a *= c; }

    bool specializes_to_zero(const Rational &q0, const Rational &d0) const;

    // "(w) (x) v[j]" per key, at most max_keys keys.
    std::string to_string(std::size_t max_keys = 0) const;

private:
    ParityData s_;
    int ell_;
    std::map<std::vector<int>, DahaElement> terms_;
};

// Which zero-node Chevalley triple a Chevalley letter at node 0 denotes:
//   horizontal: E_0 = sum w X_j (x) f_theta,j,    F_0 = s_kappa sum w X_j^{-1} (x) e_theta,j
//   vertical:   E_0 = d^{-1} sum w Y_j^{-1} (x) f_theta,j,  F_0 = d s_kappa sum w Y_j (x) e_theta,j
//   affine:     e_0 = sum w Y_j^{-1} (x) f_theta,j,  f_0 = s_kappa sum w Y_j (x) e_theta,j
// with K_0 = t_0 = k_theta^{-1} on every slot.
enum class ZeroModel { horizontal, vertical, affine };

const char *to_string(ZeroModel m);

class FunctorModel
{
public:
    // zeta = q_1^{n-m}
    FunctorModel(int m, int n, int ell);
    FunctorModel(int m, int n, int ell, Scalar zeta);

    int ell() const { return daha_.ell(); }
    const Daha &daha() const { return daha_; }
    const ParityData &standard_parity() const { return standard_; }

    FunctorVector basis(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const;

    // w (x) v_j for any tuple j, rewritten over nondecreasing keys.
    FunctorVector sort_balanced(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const;

    // Each w_j multiplied by the symmetrizer of the blocks of equal labels in j;
    // this is injective on M (x)_H V^{(x) ell}.
    FunctorVector canonical(const FunctorVector &v) const;
    bool is_zero(const FunctorVector &v) const;
    bool equal(const FunctorVector &a, const FunctorVector &b) const { return is_zero(a - b); }
    // Numeric test of the canonical form at (q0, d0).
    bool specializes_to_zero(const FunctorVector &v, const Rational &q0, const Rational &d0) const;

    // Vertical current of node i in 1..kappa-1, mode r.
    FunctorVector vertical_mode_apply(CurrentFamily fam, int i, int r, const FunctorVector &v) const;
    // Current with evaluation points a_p = conv.base^{mu(i)} Y_p^{conv.sigma}.
    FunctorVector mode_apply(CurrentFamily fam, int i, int r, const FunctorVector &v, const EvalConvention &conv) const;

    FunctorVector chevalley_apply(ZeroModel model, ChevalleyGen g, const FunctorVector &v) const;

    FunctorVector psi_apply(const FunctorVector &v) const;
    FunctorVector psi_inverse(const FunctorVector &v) const;
    FunctorVector psi_power(const FunctorVector &v, int r) const;
    // Psi_s(w (x) v_j) for an arbitrary tuple j.
    FunctorVector psi_apply_tuple(const ParityData &s, const DahaElement &w, const std::vector<int> &j) const;

    // Node-0 currents: E_0^s(z) = Psi_s^{-1} E_1^{tau s}(q_1^{-s_kappa} z) Psi_s and likewise
    // for F, K+-. Mode r picks up q_1^{r s_kappa}.
    FunctorVector zero_current_apply(CurrentFamily fam, int r, const FunctorVector &v) const;

    // Any letter: currents at nodes 1..kappa-1 through the vertical formulas,
    // node 0 through zero_current_apply, Chevalley letters per model.
    // Results on basis vectors are memoized.
    FunctorVector apply(const Atom &a, const FunctorVector &v, ZeroModel model = ZeroModel::horizontal) const;

    void clear_cache() const;

private:
    FunctorVector apply_basis(const Atom &a, ZeroModel model, const ParityData &s, const std::vector<int> &j,
                              const DahaKey &key) const;
    DahaElement symmetrize(const ParityData &s, const std::vector<int> &j, const DahaElement &w) const;

    ParityData standard_;
    Daha daha_;

    using CacheKey = std::tuple<Atom, int, std::vector<int>, std::vector<int>, DahaKey>;
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<CacheKey, FunctorVector> cache_;
};

using NumericPoints = std::vector<std::pair<Rational, Rational>>;

// Judges lhs - rhs through its canonical form: exactly, and at every numeric
// point when given. With symbolic = false the numeric verdict decides; a point
// needing an irrational square root drops the numeric verdict.
CheckResult judge_difference(const FunctorModel &fm, const FunctorVector &diff, const NumericPoints &points = {},
                             bool symbolic = true);

// Psi_s(w T_i (x) v_j) = Psi_s(w (x) T_i v_j) over all tuples j
// and the given DAHA elements, grouped by which of the two slots carry kappa.
Report psi_well_defined_check(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws,
                              const NumericPoints &points = {});

// The conjugation identities relating Psi, the vertical currents of s, tau s,
// tau^2 s and the node shift, for all 1 < i < kappa and |r| <= R.
Report rotation_identity_check(const FunctorModel &fm, const ParityData &s, int R, const std::vector<FunctorVector> &battery,
                               const NumericPoints &points = {});

// w (x) v_j for the given w's crossed with all nondecreasing j.
std::vector<FunctorVector> functor_battery(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws);

// {1, Q^{+-1}, T_w with length(w) <= 2, Y^mu with |mu|_1 <= 2}
std::vector<DahaElement> default_daha_battery(const Daha &h);

// Action table of one letter on a battery.
nlohmann::json dump_functor_operator(const FunctorModel &fm, const Atom &a, const std::vector<FunctorVector> &battery,
                                     ZeroModel model = ZeroModel::horizontal);

} // namespace tsw

#endif
