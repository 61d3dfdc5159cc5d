#ifndef TSW_VERIFY_HPP
#define TSW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsw/daha.hpp"
#include "tsw/opexpr.hpp"
#include "tsw/report.hpp"
#include "tsw/superdata.hpp"
#include "tsw/toroidal.hpp"

namespace tsw
{

// One defining relation of the quantum toroidal superalgebra at fixed nodes
// and modes. Ids: CK, KK1, KK2, KE, KF, EF, EEFF-zero, EE-quadratic,
// FF-quadratic, Serre1..Serre4. The variant picks the family inside an id
// (E or F for CK, EEFF-zero and Serre, + or - for KK1, KE, KF).
struct RelationInstance {
    std::string id;
    std::vector<int> nodes;
    std::vector<int> modes;
    char variant = 'E';
};

std::string describe(const RelationInstance &ri);

// lhs and rhs as operator expressions at C = 1; the relation holds iff they
// agree. Throws std::invalid_argument for Serre5/Serre6 and unknown ids.
std::pair<OpExpr, OpExpr> expand_relation(const ParityData &s, const RelationInstance &ri);

// Every instance over nodes in 0..kappa-1 with modes in [-R, R] (K^+ modes in
// [0, R], K^- modes in [-R, 0]).
std::vector<RelationInstance> enumerate_relations(const ParityData &s, int R);

// Chevalley-level Drinfeld-Jimbo relations over all nodes; ids t-commute,
// t-inverse, t-e, t-f, ef, ee-zero, ff-zero, serre-e, serre-f.
std::vector<std::pair<std::string, std::pair<OpExpr, OpExpr>>> chevalley_relations(const ParityData &s);

enum class CheckMode { symbolic, numeric, both };

const char *to_string(CheckMode m);
CheckMode parse_check_mode(const std::string &text);

struct SuiteOptions {
    int R = 2;
    CheckMode mode = CheckMode::both;
    // Numeric pre-screen points (q0, d0).
    std::vector<std::pair<Rational, Rational>> points{{Rational(2), Rational(3)}};
    std::uint64_t seed = 1;
    int jobs = 1;
};

// (2, 3) followed by `extra` random points whose coordinates are squares of
// small rationals, so half-integer powers specialize exactly.
std::vector<std::pair<Rational, Rational>> default_points(std::uint64_t seed, int extra);

Report run_toroidal_suite(const FunctorModel &fm, const ParityData &s, const std::vector<FunctorVector> &battery,
                          const SuiteOptions &opts);
Report run_affine_suite(const FunctorModel &fm, const ParityData &s, const std::vector<FunctorVector> &battery,
                        const SuiteOptions &opts);
Report run_finite_suite(const ParityData &s, int ell, const SuiteOptions &opts = {});
Report run_daha_suite(const Daha &h, const SuiteOptions &opts);
// Psi well-definedness on ws crossed with all tuples, then the rotation
// identities on the battery built from ws.
Report run_rotation_suite(const FunctorModel &fm, const ParityData &s, const std::vector<DahaElement> &ws,
                          const SuiteOptions &opts);

// Runs task(k) for k in [0, count) on `jobs` threads; results keep task order.
template <class Task>
std::vector<CheckResult> run_ordered(std::size_t count, int jobs, Task &&task);

} // namespace tsw

#include "tsw/verify_impl.hpp"

#endif
