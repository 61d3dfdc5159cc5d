#include "tsw/affine_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tsw
{

namespace
{

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

int mod(int a, int b)
{
    return ((a % b) + b) % b;
}

} // namespace

AffinePermutation AffinePermutation::identity(int ell)
{
    if (ell < 1) {
        throw std::invalid_argument("AffinePermutation: ell must be positive");
    }
    std::vector<int> w(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        w[static_cast<std::size_t>(i)] = i + 1;
    }
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_window(std::vector<int> window)
{
    int ell = static_cast<int>(window.size());
    if (ell < 1) {
        throw std::invalid_argument("AffinePermutation: empty window");
    }
    std::vector<int> residues;
    long shift = 0;
    for (int i = 0; i < ell; ++i) {
        residues.push_back(mod(window[static_cast<std::size_t>(i)], ell));
        shift += window[static_cast<std::size_t>(i)] - (i + 1);
    }
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
        throw std::invalid_argument("AffinePermutation: window entries must be distinct modulo ell");
    }
    if (shift != 0) {
        throw std::invalid_argument("AffinePermutation: window must satisfy sum(w(i) - i) = 0");
    }
    return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::from_word(int ell, const std::vector<int> &word)
{
    AffinePermutation w = identity(ell);
    for (int i : word) {
        w = w.times_simple(i);
    }
    return w;
}

int AffinePermutation::operator()(int i) const
{
    int ell = this->ell();
    int r = mod(i - 1, ell);
    int shift = floor_div(i - 1, ell);
    return w_[static_cast<std::size_t>(r)] + shift * ell;
}

bool AffinePermutation::is_identity() const
{
    for (int i = 0; i < ell(); ++i) {
        if (w_[static_cast<std::size_t>(i)] != i + 1) {
            return false;
        }
    }
    return true;
}

bool AffinePermutation::has_right_descent(int i) const
{
    if (ell() < 2 || i < 0 || i >= ell()) {
        throw std::out_of_range("AffinePermutation: simple reflection index out of range");
    }
    return (*this)(i) > (*this)(i + 1);
}

AffinePermutation AffinePermutation::times_simple(int i) const
{
    int ell = this->ell();
    if (ell < 2 || i < 0 || i >= ell) {
        throw std::out_of_range("AffinePermutation: simple reflection index out of range");
    }
    std::vector<int> w = w_;
    if (i == 0) {
        int first = w.front();
        w.front() = w.back() - ell;
        w.back() = first + ell;
    } else {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    }
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rotated_down() const
{
    std::vector<int> w(w_.size());
    for (int i = 1; i <= ell(); ++i) {
        w[static_cast<std::size_t>(i - 1)] = (*this)(i + 1) - 1;
    }
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rotated_up() const
{
    std::vector<int> w(w_.size());
    for (int i = 1; i <= ell(); ++i) {
        w[static_cast<std::size_t>(i - 1)] = (*this)(i - 1) + 1;
    }
    return AffinePermutation(std::move(w));
}

int AffinePermutation::length() const
{
    int ell = this->ell();
    int len = 0;
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            len += std::abs(floor_div(w_[static_cast<std::size_t>(j)] - w_[static_cast<std::size_t>(i)], ell));
        }
    }
    return len;
}

std::vector<int> AffinePermutation::reduced_word() const
{
    std::vector<int> rev;
    AffinePermutation w = *this;
    while (!w.is_identity()) {
        int found = -1;
        for (int i = 0; i < ell(); ++i) {
            if (w.has_right_descent(i)) {
                found = i;
                break;
            }
        }
        rev.push_back(found);
        w = w.times_simple(found);
    }
    return {rev.rbegin(), rev.rend()};
}

std::string AffinePermutation::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(w_[i]);
    }
    return out + "]";
}

} // namespace tsw
