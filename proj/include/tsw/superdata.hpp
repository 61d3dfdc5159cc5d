#ifndef TSW_SUPERDATA_HPP
#define TSW_SUPERDATA_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsw
{

// A parity sequence s in {+1,-1}^kappa with exactly m entries +1, extended
// periodically: s_{i+kappa} = s_i. Positions are 1-based as in s_1..s_kappa;
// node indices are read modulo kappa everywhere.
class ParityData
{
public:
    explicit ParityData(std::vector<int> s);

    // "++--"
    static ParityData parse(std::string_view text);
    // (1,...,1,-1,...,-1)
    static ParityData standard(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int kappa() const { return static_cast<int>(s_.size()); }
    bool is_standard() const;

    // s_i for any integer i.
    int s(int i) const { return s_[static_cast<std::size_t>(wrap_position(i) - 1)]; }
    const std::vector<int> &sequence() const { return s_; }

    // Node index normalized into [0, kappa).
    int node(int i) const;

    int cartan(int i, int j) const;
    int m_matrix(int i, int j) const;
    // |i| = (1 - s_i s_{i+1}) / 2
    int node_parity(int i) const { return (1 - s(i) * s(i + 1)) / 2; }
    // |v_j| = (1 - s_j) / 2, j read modulo kappa in (0, kappa].
    int vector_parity(int j) const { return (1 - s(j)) / 2; }
    // mu(i) = s_1 + ... + s_i for the node i in [0, kappa); mu(0) = 0.
    int mu(int i) const;

    // (s_kappa, s_1, ..., s_{kappa-1})
    ParityData tau() const;
    ParityData tau_pow(int r) const;

    // (-1)^{|i| |j_r|}, |j_r| = sum_{a<r} |v_{j_a}|, r is 1-based.
    int koszul_sign(int i, int r, std::span<const int> labels) const;

    std::string to_string() const;

    friend bool operator==(const ParityData &a, const ParityData &b) { return a.s_ == b.s_; }

private:
    int wrap_position(int i) const;

    std::vector<int> s_;
    int m_ = 0;
    int n_ = 0;
};

} // namespace tsw

#endif
