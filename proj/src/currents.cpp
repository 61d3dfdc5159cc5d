#include "tsw/currents.hpp"

#include <stdexcept>

#include "tsw/series.hpp"

namespace tsw
{

namespace
{

struct Factor {
    int c;
    int slot;
};

LaurentPoly eval_point_pow(int nvars, int slot, int k, const Scalar &alpha, int sigma)
{
    return LaurentPoly::monomial(nvars, slot, sigma * k, alpha.pow(k));
}

// Coefficients 0..count-1 of prod psi_{c_f}(a_{p_f}/z), expanded at z = infinity
// (powers z^{-k}, from the expansion of psi at zero in a/z) or at z = 0 (powers z^k).
std::vector<LaurentPoly> product_series(int nvars, const std::vector<Factor> &factors, const Scalar &alpha, int sigma,
                                        bool at_infinity, int count)
{
    std::vector<LaurentPoly> acc(static_cast<std::size_t>(count), LaurentPoly(nvars));
    if (count == 0) {
        return acc;
    }
    acc[0] = LaurentPoly::constant(nvars, Scalar(1));
    for (const Factor &f : factors) {
        std::vector<Scalar> psi = psi_coeffs(f.c, at_infinity ? Expansion::at_zero : Expansion::at_infinity, count);
        std::vector<LaurentPoly> next(static_cast<std::size_t>(count), LaurentPoly(nvars));
        for (int k = 0; k < count; ++k) {
            LaurentPoly term = eval_point_pow(nvars, f.slot, at_infinity ? k : -k, alpha, sigma) * psi[static_cast<std::size_t>(k)];
            for (int t = 0; t + k < count; ++t) {
                if (!acc[static_cast<std::size_t>(t)].is_zero()) {
                    next[static_cast<std::size_t>(t + k)] += acc[static_cast<std::size_t>(t)] * term;
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// z^{-N} coefficient of :[delta(a_r/z) phi(z)]^{+/-}:.
LaurentPoly normal_ordered_mode(int nvars, int r, const std::vector<Factor> &factors, const Scalar &alpha, int sigma, int N,
                                bool plus)
{
    LaurentPoly out(nvars);
    const int M = N >= 0 ? N : -N;
    if (N > 0 || (N == 0 && plus)) {
        auto c = product_series(nvars, factors, alpha, sigma, true, M + 1);
        for (int t = plus ? 0 : 1; t <= N; ++t) {
            out += eval_point_pow(nvars, r, t, alpha, sigma) * c[static_cast<std::size_t>(N - t)];
        }
    } else {
        auto d = product_series(nvars, factors, alpha, sigma, false, M + 1);
        for (int t = plus ? 1 : 0; t <= M; ++t) {
            out += eval_point_pow(nvars, r, -t, alpha, sigma) * d[static_cast<std::size_t>(M - t)];
        }
    }
    return out;
}

} // namespace

const char *to_string(CurrentFamily f)
{
    switch (f) {
    case CurrentFamily::E:
        return "E";
    case CurrentFamily::F:
        return "F";
    case CurrentFamily::Kplus:
        return "K+";
    case CurrentFamily::Kminus:
        return "K-";
    }
    return "?";
}

EvalConvention plain_convention()
{
    return {Scalar::q(), 1};
}

EvalConvention affine_convention()
{
    return {Scalar::q(), -1};
}

EvalConvention vertical_convention()
{
    // q_1^{-1} = d^{-1} q
    return {Scalar::monomial(2, -2), -1};
}

bool is_nondecreasing(std::span<const int> labels)
{
    for (std::size_t a = 1; a < labels.size(); ++a) {
        if (labels[a - 1] > labels[a]) {
            return false;
        }
    }
    return true;
}

std::vector<CurrentTerm> current_mode(const ParityData &pd, CurrentFamily fam, int i, int N, std::span<const int> labels,
                                      const EvalConvention &conv)
{
    const int kappa = pd.kappa();
    if (i < 1 || i >= kappa) {
        throw std::out_of_range("current_mode: node must lie in 1..kappa-1");
    }
    if (!is_nondecreasing(labels)) {
        throw std::invalid_argument("current_mode: labels must be nondecreasing");
    }
    const int L = static_cast<int>(labels.size());
    const Scalar alpha = conv.base.pow(pd.mu(i));
    const int sigma = conv.sigma;

    // 1-based slot ranges (a1, a2] and (a2, a3].
    int a1 = 0;
    while (a1 < L && labels[static_cast<std::size_t>(a1)] < i) {
        ++a1;
    }
    int a2 = a1;
    while (a2 < L && labels[static_cast<std::size_t>(a2)] == i) {
        ++a2;
    }
    int a3 = a2;
    while (a3 < L && labels[static_cast<std::size_t>(a3)] == i + 1) {
        ++a3;
    }

    std::vector<CurrentTerm> out;
    std::vector<int> base(labels.begin(), labels.end());
    switch (fam) {
    case CurrentFamily::E:
        for (int r = a2 + 1; r <= a3; ++r) {
            std::vector<Factor> fs;
            for (int p = r + 1; p <= a3; ++p) {
                fs.push_back({-pd.s(i + 1), p - 1});
            }
            LaurentPoly c = normal_ordered_mode(L, r - 1, fs, alpha, sigma, N, true);
            if (c.is_zero()) {
                continue;
            }
            std::vector<int> j = base;
            j[static_cast<std::size_t>(r - 1)] -= 1;
            out.push_back({std::move(j), c * Scalar(pd.koszul_sign(i, r, labels))});
        }
        break;
    case CurrentFamily::F:
        for (int r = a1 + 1; r <= a2; ++r) {
            std::vector<Factor> fs;
            for (int p = a1 + 1; p < r; ++p) {
                fs.push_back({pd.s(i), p - 1});
            }
            LaurentPoly c = normal_ordered_mode(L, r - 1, fs, alpha, sigma, N, false);
            if (c.is_zero()) {
                continue;
            }
            std::vector<int> j = base;
            j[static_cast<std::size_t>(r - 1)] += 1;
            out.push_back({std::move(j), c * Scalar(pd.s(i) * pd.koszul_sign(i, r, labels))});
        }
        break;
    case CurrentFamily::Kplus:
    case CurrentFamily::Kminus: {
        const bool plus = fam == CurrentFamily::Kplus;
        if ((plus && N < 0) || (!plus && N > 0)) {
            break;
        }
        std::vector<Factor> fs;
        for (int p = a1 + 1; p <= a2; ++p) {
            fs.push_back({pd.s(i), p - 1});
        }
        for (int p = a2 + 1; p <= a3; ++p) {
            fs.push_back({-pd.s(i + 1), p - 1});
        }
        const int M = plus ? N : -N;
        LaurentPoly c = product_series(L, fs, alpha, sigma, plus, M + 1)[static_cast<std::size_t>(M)];
        if (!c.is_zero()) {
            out.push_back({base, std::move(c)});
        }
        break;
    }
    }
    return out;
}

} // namespace tsw
