#include "tsw/daha.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tsw
{

namespace
{

const Scalar &q2()
{
    static const Scalar v = Scalar::q_pow(2);
    return v;
}

const Scalar &q2_minus_1()
{
    static const Scalar v = Scalar::q_pow(2) - Scalar(1);
    return v;
}

const Scalar &q_minus2()
{
    static const Scalar v = Scalar::q_pow(-2);
    return v;
}

const Scalar &one_minus_q_minus2()
{
    static const Scalar v = Scalar(1) - Scalar::q_pow(-2);
    return v;
}

} // namespace

// ---------------------------------------------------------------------------
// DahaElement

void DahaElement::add_term(const DahaKey &key, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void DahaElement::add_term(DahaKey &&key, const Scalar &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

DahaElement &DahaElement::operator+=(const DahaElement &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

DahaElement &DahaElement::operator-=(const DahaElement &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k, -c);
    }
    return *this;
}

DahaElement &DahaElement::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

bool operator<(const DahaElement &a, const DahaElement &b)
{
    return a.terms_ < b.terms_;
}

bool DahaElement::specializes_to_zero(const Rational &q0, const Rational &d0) const
{
    for (const auto &[k, c] : terms_) {
        if (specialize(c, q0, d0) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<int> DahaElement::key_window(const DahaKey &key) const
{
    return {key.begin() + 1, key.begin() + 1 + ell_};
}

std::vector<int> DahaElement::key_mu(const DahaKey &key) const
{
    return {key.begin() + 1 + ell_, key.end()};
}

DahaKey DahaElement::make_key(int k, const std::vector<int> &window, const std::vector<int> &mu)
{
    DahaKey key;
    key.reserve(1 + window.size() + mu.size());
    key.push_back(k);
    key.insert(key.end(), window.begin(), window.end());
    key.insert(key.end(), mu.begin(), mu.end());
    return key;
}

std::string DahaElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        if (c.is_monomial()) {
            os << c;
        } else {
            os << "(" << c << ")";
        }
        os << " * Q^" << key[0] << " * T[";
        for (int i = 0; i < ell_; ++i) {
            os << (i ? "," : "") << key[static_cast<std::size_t>(1 + i)];
        }
        os << "] * Y^(";
        for (int i = 0; i < ell_; ++i) {
            os << (i ? "," : "") << key[static_cast<std::size_t>(1 + ell_ + i)];
        }
        os << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Words

Letter T(int i, int exp)
{
    return {Letter::Kind::T, i, exp};
}

Letter X(int j, int exp)
{
    return {Letter::Kind::X, j, exp};
}

Letter Y(int j, int exp)
{
    return {Letter::Kind::Y, j, exp};
}

Letter Qg(int exp)
{
    return {Letter::Kind::Q, 0, exp};
}

GeneratorWord inverse(const GeneratorWord &w)
{
    GeneratorWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Letter l = *it;
        l.exp = -l.exp;
        out.push_back(l);
    }
    return out;
}

GeneratorWord concat(std::initializer_list<GeneratorWord> parts)
{
    GeneratorWord out;
    for (const auto &p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::string to_string(const GeneratorWord &w)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &l : w) {
        if (!out.empty()) {
            out += ' ';
        }
        switch (l.kind) {
        case Letter::Kind::T:
            out += "T" + std::to_string(l.index);
            break;
        case Letter::Kind::X:
            out += "X" + std::to_string(l.index);
            break;
        case Letter::Kind::Y:
            out += "Y" + std::to_string(l.index);
            break;
        case Letter::Kind::Q:
            out += "Q";
            break;
        }
        if (l.exp != 1) {
            out += "^" + std::to_string(l.exp);
        }
    }
    return out;
}

GeneratorWord parse_word(std::string_view text)
{
    GeneratorWord out;
    std::size_t pos = 0;
    auto fail = [&text]() { throw std::invalid_argument("parse_word: malformed word '" + std::string(text) + "'"); };
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '*') {
            ++pos;
            continue;
        }
        Letter l;
        switch (text[pos]) {
        case 'T':
            l.kind = Letter::Kind::T;
            break;
        case 'X':
            l.kind = Letter::Kind::X;
            break;
        case 'Y':
            l.kind = Letter::Kind::Y;
            break;
        case 'Q':
            l.kind = Letter::Kind::Q;
            break;
        default:
            fail();
        }
        ++pos;
        if (l.kind != Letter::Kind::Q) {
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), l.index);
            if (ec != std::errc()) {
                fail();
            }
            pos = static_cast<std::size_t>(p - text.data());
        }
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), l.exp);
            if (ec != std::errc() || (l.exp != 1 && l.exp != -1)) {
                fail();
            }
            pos = static_cast<std::size_t>(p - text.data());
        }
        out.push_back(l);
    }
    return out;
}

GeneratorWord t_range_up(int ell, int i, int j)
{
    if (i < 1 || i > j || j >= ell) {
        throw std::out_of_range("t_range_up: need 1 <= i <= j < ell");
    }
    GeneratorWord out;
    for (int a = i; a <= j; ++a) {
        out.push_back(T(a));
    }
    return out;
}

GeneratorWord t_range_down(int ell, int j, int i)
{
    if (i < 1 || i > j || j >= ell) {
        throw std::out_of_range("t_range_down: need 1 <= i <= j < ell");
    }
    GeneratorWord out;
    for (int a = j; a >= i; --a) {
        out.push_back(T(a));
    }
    return out;
}

GeneratorWord q_ij(int ell, int i, int j)
{
    GeneratorWord out{X(i)};
    GeneratorWord t = t_range_up(ell, i, j);
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

GeneratorWord p_r(int ell, int r)
{
    if (r < 1 || r >= ell) {
        throw std::out_of_range("p_r: need 1 <= r < ell");
    }
    GeneratorWord out;
    for (int t = ell - r; t >= 1; --t) {
        GeneratorWord f = q_ij(ell, t, t + r - 1);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Daha

Daha::Daha(int ell, Scalar zeta) : ell_(ell), zeta_(std::move(zeta))
{
    if (ell_ < 1) {
        throw std::invalid_argument("Daha: ell must be positive");
    }
    zeta_inv_ = zeta_.inverse();
}

DahaElement Daha::one() const
{
    return basis(0, AffinePermutation::identity(ell_), std::vector<int>(static_cast<std::size_t>(ell_), 0));
}

DahaElement Daha::basis(int k, const AffinePermutation &w, const std::vector<int> &mu, const Scalar &c) const
{
    if (w.ell() != ell_ || static_cast<int>(mu.size()) != ell_) {
        throw std::invalid_argument("Daha::basis: size mismatch");
    }
    DahaElement e(ell_);
    e.add_term(DahaElement::make_key(k, w.window(), mu), c);
    return e;
}

DahaElement Daha::y_monomial(const std::vector<int> &mu) const
{
    return basis(0, AffinePermutation::identity(ell_), mu);
}

void Daha::check_letter(const Letter &l) const
{
    if (l.exp != 1 && l.exp != -1) {
        throw std::invalid_argument("Daha: letter exponent must be +-1");
    }
    switch (l.kind) {
    case Letter::Kind::T:
        if (l.index < 0 || l.index >= ell_ || ell_ < 2) {
            throw std::out_of_range("Daha: T index out of range");
        }
        break;
    case Letter::Kind::X:
    case Letter::Kind::Y:
        if (l.index < 1 || l.index > ell_) {
            throw std::out_of_range("Daha: X/Y index out of range");
        }
        break;
    case Letter::Kind::Q:
        break;
    }
}

DahaElement Daha::mul_T_finite(const DahaElement &e, int i) const
{
    // Y^mu T_i = T_i Y^{s_i mu} + (q^2 - 1) Y^mu (1 - u^k) / (1 - u),
    // u = Y_{i+1} Y_i^{-1}, k = mu_i - mu_{i+1}.
    const std::size_t wi = static_cast<std::size_t>(i);     // w(i) at key[wi]
    const std::size_t mi = static_cast<std::size_t>(ell_ + i); // mu_i at key[mi]
    DahaElement out(ell_);
    for (const auto &[key, c] : e.terms()) {
        DahaKey swapped = key;
        std::swap(swapped[mi], swapped[mi + 1]);
        if (key[wi] < key[wi + 1]) {
            std::swap(swapped[wi], swapped[wi + 1]);
            out.add_term(std::move(swapped), c);
        } else {
            out.add_term(swapped, q2_minus_1() * c);
            std::swap(swapped[wi], swapped[wi + 1]);
            out.add_term(std::move(swapped), q2() * c);
        }

        int k = key[mi] - key[mi + 1];
        if (k == 0) {
            continue;
        }
        Scalar corr = q2_minus_1() * c;
        int lo = k > 0 ? 0 : k;
        int hi = k > 0 ? k - 1 : -1;
        if (k < 0) {
            corr = -corr;
        }
        DahaKey shifted = key;
        shifted[mi] -= lo;
        shifted[mi + 1] += lo;
        for (int t = lo; t <= hi; ++t) {
            out.add_term(shifted, corr);
            --shifted[mi];
            ++shifted[mi + 1];
        }
    }
    return out;
}

DahaElement Daha::mul_T(const DahaElement &e, int i, int exp) const
{
    check_letter(T(i, exp));
    if (i == 0) {
        return mul_Q(mul_T(mul_Q(e, -1), 1, exp), 1);
    }
    if (exp == 1) {
        return mul_T_finite(e, i);
    }
    // T_i^{-1} = q^{-2} T_i - (1 - q^{-2})
    DahaElement out = mul_T_finite(e, i);
    out *= q_minus2();
    out -= e * one_minus_q_minus2();
    return out;
}

DahaElement Daha::mul_Y(const DahaElement &e, int j, int exp) const
{
    check_letter(Y(j, exp));
    DahaElement out(ell_);
    const std::size_t pos = static_cast<std::size_t>(ell_ + j);
    for (const auto &[key, c] : e.terms()) {
        DahaKey k2 = key;
        k2[pos] += exp;
        out.add_term(std::move(k2), c);
    }
    return out;
}

DahaElement Daha::mul_Y_poly(const DahaElement &e, const LaurentPoly &p) const
{
    if (p.nvars() != ell_) {
        throw std::invalid_argument("Daha::mul_Y_poly: variable count mismatch");
    }
    DahaElement out(ell_);
    for (const auto &[key, c] : e.terms()) {
        for (const auto &[ex, pc] : p.terms()) {
            DahaKey k2 = key;
            for (int j = 0; j < ell_; ++j) {
                k2[static_cast<std::size_t>(1 + ell_ + j)] += ex[static_cast<std::size_t>(j)];
            }
            out.add_term(std::move(k2), c * pc);
        }
    }
    return out;
}

DahaElement Daha::mul_Q(const DahaElement &e, int exp) const
{
    check_letter(Qg(exp));
    DahaElement out(ell_);
    const int L = ell_;
    for (const auto &[key, c] : e.terms()) {
        DahaKey k2(key.size());
        if (exp == 1) {
            // T_w Q = Q T_{pi^{-1} w pi}, Q^{-1} Y^mu Q = zeta^{-mu_1} Y^{(mu_2, ..., mu_ell, mu_1)}
            k2[0] = key[0] + 1;
            for (int i = 1; i < L; ++i) {
                k2[static_cast<std::size_t>(i)] = key[static_cast<std::size_t>(i + 1)] - 1;
            }
            k2[static_cast<std::size_t>(L)] = key[1] + L - 1;
            for (int i = 1; i < L; ++i) {
                k2[static_cast<std::size_t>(L + i)] = key[static_cast<std::size_t>(L + i + 1)];
            }
            int mu1 = key[static_cast<std::size_t>(L + 1)];
            k2[static_cast<std::size_t>(2 * L)] = mu1;
            out.add_term(std::move(k2), mu1 == 0 ? c : c * zeta_.pow(-mu1));
        } else {
            // T_w Q^{-1} = Q^{-1} T_{pi w pi^{-1}}, Q Y^mu Q^{-1} = zeta^{mu_ell} Y^{(mu_ell, mu_1, ...)}
            k2[0] = key[0] - 1;
            k2[1] = key[static_cast<std::size_t>(L)] - L + 1;
            for (int i = 2; i <= L; ++i) {
                k2[static_cast<std::size_t>(i)] = key[static_cast<std::size_t>(i - 1)] + 1;
            }
            int mul = key[static_cast<std::size_t>(2 * L)];
            k2[static_cast<std::size_t>(L + 1)] = mul;
            for (int i = 2; i <= L; ++i) {
                k2[static_cast<std::size_t>(L + i)] = key[static_cast<std::size_t>(L + i - 1)];
            }
            out.add_term(std::move(k2), mul == 0 ? c : c * zeta_.pow(mul));
        }
    }
    return out;
}

DahaElement Daha::mul_X(const DahaElement &e, int j, int exp) const
{
    check_letter(X(j, exp));
    DahaElement out = e;
    if (exp == 1) {
        // X_j = q^{-2(j-1)} T_{j-1} ... T_1 Q T_{ell-1}^{-1} ... T_j^{-1}
        for (int a = j - 1; a >= 1; --a) {
            out = mul_T(out, a, 1);
        }
        out = mul_Q(out, 1);
        for (int a = ell_ - 1; a >= j; --a) {
            out = mul_T(out, a, -1);
        }
        out *= Scalar::q_pow(-2 * (j - 1));
    } else {
        // X_j^{-1} = q^{2(j-1)} T_j ... T_{ell-1} Q^{-1} T_1^{-1} ... T_{j-1}^{-1}
        for (int a = j; a <= ell_ - 1; ++a) {
            out = mul_T(out, a, 1);
        }
        out = mul_Q(out, -1);
        for (int a = 1; a <= j - 1; ++a) {
            out = mul_T(out, a, -1);
        }
        out *= Scalar::q_pow(2 * (j - 1));
    }
    return out;
}

DahaElement Daha::apply(const Letter &l, const DahaElement &e) const
{
    switch (l.kind) {
    case Letter::Kind::T:
        return mul_T(e, l.index, l.exp);
    case Letter::Kind::X:
        return mul_X(e, l.index, l.exp);
    case Letter::Kind::Y:
        return mul_Y(e, l.index, l.exp);
    case Letter::Kind::Q:
        return mul_Q(e, l.exp);
    }
    return e;
}

DahaElement Daha::apply(const DahaElement &e, const GeneratorWord &w) const
{
    DahaElement out = e;
    for (const auto &l : w) {
        out = apply(l, out);
    }
    return out;
}

DahaElement Daha::mul(const DahaElement &e, const DahaElement &f) const
{
    DahaElement out(ell_);
    for (const auto &[key, c] : f.terms()) {
        DahaElement g = e;
        int k = key[0];
        for (int t = 0; t < std::abs(k); ++t) {
            g = mul_Q(g, k > 0 ? 1 : -1);
        }
        AffinePermutation w = AffinePermutation::from_window(f.key_window(key));
        for (int i : w.reduced_word()) {
            g = mul_T(g, i, 1);
        }
        std::vector<int> mu = f.key_mu(key);
        for (int j = 1; j <= ell_; ++j) {
            int m = mu[static_cast<std::size_t>(j - 1)];
            for (int t = 0; t < std::abs(m); ++t) {
                g = mul_Y(g, j, m > 0 ? 1 : -1);
            }
        }
        g *= c;
        out += g;
    }
    return out;
}

} // namespace tsw
