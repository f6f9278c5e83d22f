#pragma once

#include <cstdint>
#include <vector>

// Independent row-reduction rank oracle. Shares nothing with the library's
// elimination path: scalars are reduced __int128 fractions and the pivoting
// is plain Gaussian elimination. For the randomized corpus (dims <= 8,
// entries in [-9, 9]) every intermediate stays far inside 128 bits.
namespace naive {

using Int = __int128;

inline Int iabs(Int v) { return v < 0 ? -v : v; }

inline Int igcd(Int a, Int b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    Int num = 0;
    Int den = 1;

    static Frac of(long long n) { return Frac{n, 1}; }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        const Int g = igcd(num, den);
        num /= g;
        den /= g;
    }

    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator-(const Frac& o) const {
        Frac r{num * o.den - o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator/(const Frac& o) const {
        Frac r{num * o.den, den * o.num};
        r.reduce();
        return r;
    }
    bool zero() const { return num == 0; }
};

inline std::size_t rank(std::vector<std::vector<Frac>> m) {
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].zero())
                continue;
            const Frac f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of_ints(const std::vector<std::vector<int>>& entries) {
    std::vector<std::vector<Frac>> m;
    m.reserve(entries.size());
    for (const auto& row : entries) {
        std::vector<Frac> r;
        r.reserve(row.size());
        for (int v : row)
            r.push_back(Frac::of(v));
        m.push_back(std::move(r));
    }
    return rank(std::move(m));
}

} // namespace naive
