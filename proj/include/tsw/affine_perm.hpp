#ifndef TSW_AFFINE_PERM_HPP
#define TSW_AFFINE_PERM_HPP

#include <string>
#include <vector>

namespace tsw
{

// Element of the affine symmetric group of type A_{ell-1}^{(1)}: a bijection
// w of Z with w(i + ell) = w(i) + ell and sum_{i=1}^{ell} (w(i) - i) = 0,
// stored by its window (w(1), ..., w(ell)).
//
// Simple reflections are s_0, ..., s_{ell-1}; s_i exchanges i and i+1
// modulo ell. The rotation pi(i) = i + 1 normalizes this set:
// pi s_i pi^{-1} = s_{i+1}.
class AffinePermutation
{
public:
    static AffinePermutation identity(int ell);
    // Validates the window.
    static AffinePermutation from_window(std::vector<int> window);
    static AffinePermutation from_word(int ell, const std::vector<int> &word);

    int ell() const { return static_cast<int>(w_.size()); }
    const std::vector<int> &window() const { return w_; }
    // w(i) for any integer i.
    int operator()(int i) const;

    bool is_identity() const;
    // l(w s_i) < l(w), i in [0, ell).
    bool has_right_descent(int i) const;
    // w * s_i
    AffinePermutation times_simple(int i) const;
    // pi^{-1} w pi, i.e. s_i -> s_{i-1} in every reduced word.
    AffinePermutation rotated_down() const;
    // pi w pi^{-1}, i.e. s_i -> s_{i+1}.
    AffinePermutation rotated_up() const;

    int length() const;
    // Reduced word w = s_{i_1} ... s_{i_k}, built by repeatedly stripping the
    // smallest right descent.
    std::vector<int> reduced_word() const;

    std::string to_string() const;

    friend bool operator==(const AffinePermutation &a, const AffinePermutation &b) { return a.w_ == b.w_; }
    friend bool operator<(const AffinePermutation &a, const AffinePermutation &b) { return a.w_ < b.w_; }

private:
    explicit AffinePermutation(std::vector<int> w) : w_(std::move(w)) {}
    std::vector<int> w_;
};

} // namespace tsw

#endif
