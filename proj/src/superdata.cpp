#include "tsw/superdata.hpp"

#include <stdexcept>

namespace tsw
{

ParityData::ParityData(std::vector<int> s) : s_(std::move(s))
{
    if (s_.empty()) {
        throw std::invalid_argument("ParityData: empty parity sequence");
    }
    for (int v : s_) {
        if (v == 1) {
            ++m_;
        } else if (v == -1) {
            ++n_;
        } else {
            throw std::invalid_argument("ParityData: entries must be +1 or -1");
        }
    }
}

ParityData ParityData::parse(std::string_view text)
{
    std::vector<int> s;
    for (char c : text) {
        if (c == '+') {
            s.push_back(1);
        } else if (c == '-') {
            s.push_back(-1);
        } else {
            throw std::invalid_argument("ParityData::parse: expected '+' or '-', got '" + std::string(1, c) + "'");
        }
    }
    return ParityData(std::move(s));
}

ParityData ParityData::standard(int m, int n)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("ParityData::standard: m, n must be non-negative");
    }
    std::vector<int> s(static_cast<std::size_t>(m), 1);
    s.insert(s.end(), static_cast<std::size_t>(n), -1);
    return ParityData(std::move(s));
}

bool ParityData::is_standard() const
{
    for (int i = 0; i < kappa(); ++i) {
        if (s_[static_cast<std::size_t>(i)] != (i < m_ ? 1 : -1)) {
            return false;
        }
    }
    return true;
}

int ParityData::wrap_position(int i) const
{
    int k = kappa();
    int r = ((i - 1) % k + k) % k;
    return r + 1;
}

int ParityData::node(int i) const
{
    int k = kappa();
    return (i % k + k) % k;
}

int ParityData::cartan(int i, int j) const
{
    int a = node(i), b = node(j);
    int v = 0;
    if (a == b) {
        v += s(a) + s(a + 1);
    }
    if (a == node(b + 1)) {
        v -= s(a);
    }
    if (node(a + 1) == b) {
        v -= s(b);
    }
    return v;
}

int ParityData::m_matrix(int i, int j) const
{
    int a = node(i), b = node(j);
    // m_{i+1,i} = -m_{i,i+1} = s_{i+1}
    int v = 0;
    if (a == node(b + 1)) {
        v += s(a);
    }
    if (node(a + 1) == b) {
        v -= s(b);
    }
    return v;
}

int ParityData::mu(int i) const
{
    int a = node(i);
    int total = 0;
    for (int j = 1; j <= a; ++j) {
        total += s(j);
    }
    return total;
}

ParityData ParityData::tau() const
{
    std::vector<int> t;
    t.reserve(s_.size());
    t.push_back(s_.back());
    t.insert(t.end(), s_.begin(), s_.end() - 1);
    return ParityData(std::move(t));
}

ParityData ParityData::tau_pow(int r) const
{
    int k = kappa();
    r = ((r % k) + k) % k;
    ParityData p = *this;
    for (int i = 0; i < r; ++i) {
        p = p.tau();
    }
    return p;
}

int ParityData::koszul_sign(int i, int r, std::span<const int> labels) const
{
    if (r < 1 || r > static_cast<int>(labels.size())) {
        throw std::out_of_range("ParityData::koszul_sign: position out of range");
    }
    if (node_parity(i) == 0) {
        return 1;
    }
    int acc = 0;
    for (int a = 0; a < r - 1; ++a) {
        acc += vector_parity(labels[static_cast<std::size_t>(a)]);
    }
    return (acc % 2 == 0) ? 1 : -1;
}

std::string ParityData::to_string() const
{
    std::string out;
    for (int v : s_) {
        out += v > 0 ? '+' : '-';
    }
    return out;
}

} // namespace tsw
