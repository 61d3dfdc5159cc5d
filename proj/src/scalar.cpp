#include "tsw/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tsw
{

namespace
{

bool term_less(const ScalarTerm &a, const ScalarTerm &b)
{
    return std::tie(a.qh, a.dh) < std::tie(b.qh, b.dh);
}

// Exponent in half-units rendered in q/d units: 2 -> "2", 1 -> "{1/2}".
std::string exponent_text(int h)
{
    if (h % 2 == 0) {
        return std::to_string(h / 2);
    }
    return "{" + std::to_string(h) + "/2}";
}

void append_power(std::string &out, char var, int h)
{
    if (h == 0) {
        return;
    }
    out += '*';
    out += var;
    if (h != 2) {
        out += '^';
        out += exponent_text(h);
    }
}

// Rational square root, if it exists.
bool rational_sqrt(const Rational &x, Rational &root)
{
    if (sgn(x) < 0) {
        return false;
    }
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return false;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

Rational rational_pow(const Rational &base, int e)
{
    Rational r = 1;
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    while (k != 0) {
        if (k & 1U) {
            r *= b;
        }
        b *= b;
        k >>= 1U;
    }
    return r;
}

class ScalarParser
{
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar parse()
    {
        Scalar result;
        skip_ws();
        if (at_end()) {
            fail("empty input");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            // "a + -1*q" is the rendered form; allow a second sign.
            if (peek() == '-') {
                sign = -sign;
                ++pos_;
            } else if (peek() == '+') {
                ++pos_;
            }
            result += parse_term() * Scalar(sign);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    Scalar parse_term()
    {
        skip_ws();
        Rational coef = 1;
        int qh = 0, dh = 0;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_rational();
            need_factor = false;
        }
        while (true) {
            skip_ws();
            if (!need_factor) {
                if (peek() != '*') {
                    break;
                }
                ++pos_;
                skip_ws();
            }
            char v = peek();
            if (v != 'q' && v != 'd') {
                fail("expected 'q' or 'd'");
            }
            ++pos_;
            int h = 2;
            if (peek() == '^') {
                ++pos_;
                h = parse_exponent();
            }
            (v == 'q' ? qh : dh) += h;
            need_factor = false;
        }
        return Scalar::monomial(qh, dh, coef);
    }

    int parse_exponent()
    {
        if (peek() == '{') {
            ++pos_;
            long num = parse_signed_int();
            int h = 0;
            if (peek() == '/') {
                ++pos_;
                long den = parse_signed_int();
                if (den != 2) {
                    fail("only halves are supported in exponents");
                }
                h = static_cast<int>(num);
            } else {
                h = static_cast<int>(2 * num);
            }
            if (peek() != '}') {
                fail("expected '}'");
            }
            ++pos_;
            return h;
        }
        return static_cast<int>(2 * parse_signed_int());
    }

    long parse_signed_int()
    {
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected digits");
        }
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    Rational parse_rational()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') {
            ++pos_;
        }
        Rational r(std::string(s_.substr(start, pos_ - start)));
        r.canonicalize();
        return r;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("Scalar::parse: " + what + " at offset " + std::to_string(pos_) + " in '"
                                    + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

std::string rational_to_string(const Rational &r)
{
    return r.get_str();
}

Scalar::Scalar(long v)
{
    if (v != 0) {
        terms_.push_back({0, 0, Rational(v)});
    }
}

Scalar::Scalar(const Rational &v)
{
    if (sgn(v) != 0) {
        terms_.push_back({0, 0, v});
        terms_.back().coef.canonicalize();
    }
}

Scalar Scalar::monomial(int qh, int dh, const Rational &c)
{
    Scalar s;
    if (sgn(c) != 0) {
        s.terms_.push_back({qh, dh, c});
        s.terms_.back().coef.canonicalize();
    }
    return s;
}

bool Scalar::is_one() const
{
    return terms_.size() == 1 && terms_[0].qh == 0 && terms_[0].dh == 0 && terms_[0].coef == 1;
}

void Scalar::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        ScalarTerm acc = std::move(terms_[i]);
        std::size_t j = i + 1;
        while (j < terms_.size() && terms_[j].qh == acc.qh && terms_[j].dh == acc.dh) {
            acc.coef += terms_[j].coef;
            ++j;
        }
        if (sgn(acc.coef) != 0) {
            terms_[out++] = std::move(acc);
        }
        i = j;
    }
    terms_.resize(out);
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<ScalarTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || term_less(*b, *a)) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coef + b->coef;
            if (sgn(c) != 0) {
                merged.push_back({a->qh, a->dh, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    return *this += -o;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    for (auto &t : r.terms_) {
        t.coef = -t.coef;
    }
    return r;
}

Scalar operator*(const Scalar &a, const Scalar &b)
{
    Scalar r;
    if (a.terms_.empty() || b.terms_.empty()) {
        return r;
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            r.terms_.push_back({x.qh + y.qh, x.dh + y.dh, x.coef * y.coef});
        }
    }
    if (a.terms_.size() > 1 && b.terms_.size() > 1) {
        r.normalize();
    }
    return r;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    *this = *this * o;
    return *this;
}

bool operator==(const Scalar &a, const Scalar &b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto &x = a.terms_[i];
        const auto &y = b.terms_[i];
        if (x.qh != y.qh || x.dh != y.dh || x.coef != y.coef) {
            return false;
        }
    }
    return true;
}

bool operator<(const Scalar &a, const Scalar &b)
{
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto &x = a.terms_[i];
        const auto &y = b.terms_[i];
        if (x.qh != y.qh) {
            return x.qh < y.qh;
        }
        if (x.dh != y.dh) {
            return x.dh < y.dh;
        }
        if (x.coef != y.coef) {
            return x.coef < y.coef;
        }
    }
    return a.terms_.size() < b.terms_.size();
}

Scalar Scalar::inverse() const
{
    if (!is_unit()) {
        throw std::domain_error("Scalar::inverse: " + to_string() + " is not a unit");
    }
    const auto &t = terms_[0];
    return monomial(-t.qh, -t.dh, Rational(1) / t.coef);
}

Scalar Scalar::pow(int e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (is_monomial()) {
        const auto &t = terms_[0];
        return monomial(t.qh * e, t.dh * e, rational_pow(t.coef, e));
    }
    Scalar r(1);
    Scalar b = *this;
    while (e != 0) {
        if (e & 1) {
            r *= b;
        }
        e >>= 1;
        if (e != 0) {
            b *= b;
        }
    }
    return r;
}

Scalar Scalar::scaled(int qh, int dh) const
{
    Scalar r = *this;
    for (auto &t : r.terms_) {
        t.qh += qh;
        t.dh += dh;
    }
    return r;
}

std::string Scalar::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i != 0) {
            out += " + ";
        }
        const auto &t = terms_[i];
        out += rational_to_string(t.coef);
        append_power(out, 'q', t.qh);
        append_power(out, 'd', t.dh);
    }
    return out;
}

Scalar Scalar::parse(std::string_view text)
{
    return ScalarParser(text).parse();
}

std::size_t Scalar::hash() const
{
    std::size_t h = terms_.size();
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto &t : terms_) {
        mix(std::hash<int>{}(t.qh));
        mix(std::hash<int>{}(t.dh));
        mix(std::hash<std::string>{}(t.coef.get_str()));
    }
    return h;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.to_string();
}

Scalar qint(int k)
{
    // [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}, and [-k] = -[k].
    int sign = k < 0 ? -1 : 1;
    int n = k < 0 ? -k : k;
    Scalar r;
    for (int j = 0; j < n; ++j) {
        r += Scalar::q_pow(n - 1 - 2 * j);
    }
    return sign < 0 ? -r : r;
}

DerivedParams derived_params(int m, int n)
{
    if (m == n) {
        throw std::invalid_argument("derived_params: m and n must differ");
    }
    DerivedParams p;
    p.q1 = Scalar::monomial(-2, 2);
    p.q2 = Scalar::q_pow(2);
    p.q3 = Scalar::monomial(-2, -2);
    p.zeta = p.q1.pow(n - m);
    return p;
}

Rational specialize(const Scalar &x, const Rational &q0, const Rational &d0)
{
    Rational qc = q0, dc = d0;
    qc.canonicalize();
    dc.canonicalize();
    if (sgn(qc) == 0 || sgn(dc) == 0) {
        throw std::domain_error("specialize: q0 and d0 must be nonzero");
    }
    if (abs(qc) == 1) {
        throw std::domain_error("specialize: |q0| = 1 is not admissible");
    }
    bool need_q_root = false, need_d_root = false;
    for (const auto &t : x.terms()) {
        need_q_root = need_q_root || (t.qh % 2 != 0);
        need_d_root = need_d_root || (t.dh % 2 != 0);
    }
    Rational qbase = qc, dbase = dc;
    int qstep = 2, dstep = 2;
    if (need_q_root) {
        if (!rational_sqrt(Rational(qbase), qbase)) {
            throw std::domain_error("specialize: q0 has no rational square root");
        }
        qstep = 1;
    }
    if (need_d_root) {
        if (!rational_sqrt(Rational(dbase), dbase)) {
            throw std::domain_error("specialize: d0 has no rational square root");
        }
        dstep = 1;
    }
    Rational acc = 0;
    for (const auto &t : x.terms()) {
        acc += t.coef * rational_pow(qbase, t.qh / qstep) * rational_pow(dbase, t.dh / dstep);
    }
    return acc;
}

} // namespace tsw
