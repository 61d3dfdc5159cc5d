#ifndef TSW_CURRENTS_HPP
#define TSW_CURRENTS_HPP

#include <span>
#include <vector>

#include "tsw/laurent.hpp"
#include "tsw/superdata.hpp"

namespace tsw
{

enum class CurrentFamily { E, F, Kplus, Kminus };

const char *to_string(CurrentFamily f);

// Evaluation points a_p = base^{mu(i)} * u_p^sigma, where u_p are the
// per-slot variables (xi_p on the plain tensor, Y_p in the functor space).
struct EvalConvention {
    Scalar base;
    int sigma = 1;
};

// xi variables: a_p = q^{mu(i)} xi_p.
EvalConvention plain_convention();
// Affine functor, Y_p = xi_p^{-1}: a_p = q^{mu(i)} Y_p^{-1}.
EvalConvention affine_convention();
// Vertical toroidal currents: a_p = q_1^{-mu(i)} Y_p^{-1}.
EvalConvention vertical_convention();

struct CurrentTerm {
    std::vector<int> labels;
    LaurentPoly coeff;
};

// z^{-N} coefficient of the node-i current acting on v_j, j nondecreasing:
//   E:  sum_{r in (a2,a3]} iota :[delta(a_r/z) prod_{p in (r,a3]} psi_{-s_{i+1}}(a_p/z)]^+:  v_{j_r^-}
//   F:  sum_{r in (a1,a2]} s_i iota :[delta(a_r/z) prod_{p in (a1,r)} psi_{s_i}(a_p/z)]^-:  v_{j_r^+}
//   K+/K-: the expansion at z = infinity / z = 0 of
//          prod_{j_p=i} psi_{s_i}(a_p/z) prod_{j_p=i+1} psi_{-s_{i+1}}(a_p/z)
// with (a1,a2] = j^{-1}(i), (a2,a3] = j^{-1}(i+1). Throws on an unsorted j.
std::vector<CurrentTerm> current_mode(const ParityData &pd, CurrentFamily fam, int i, int N, std::span<const int> labels,
                                      const EvalConvention &conv);

bool is_nondecreasing(std::span<const int> labels);

} // namespace tsw

#endif
