#pragma once

// Classical Hochschild Betti numbers of A computed from the structure
// constants alone: dense tensor bases A^{(x)(p+1)}, textbook boundary and
// coboundary, rank by fraction-free Gaussian elimination over Q. Nothing here
// touches the engine's triangle layouts or operators.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "shc/triple.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;  // rows x cols

struct Algebra {
    int d;
    std::vector<mpq_class> unit;
    std::vector<std::vector<std::vector<mpq_class>>> mult;
};

inline Algebra from(const shc::AlgebraSpec& a)
{
    return {a.dim, a.unit, a.mult};
}

inline long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

inline std::vector<int> digits(long idx, int d, int len)
{
    std::vector<int> out(len);
    for (int k = 0; k < len; ++k, idx /= d)
        out[k] = static_cast<int>(idx % d);
    return out;
}

inline long encode(const std::vector<int>& x, int d)
{
    long idx = 0;
    for (int k = static_cast<int>(x.size()) - 1; k >= 0; --k)
        idx = idx * d + x[k];
    return idx;
}

inline std::size_t rank(Dense m)
{
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            mpq_class factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

// b(a_0 ... a_p) = sum_{i<p} (-1)^i a_0 .. a_i a_{i+1} .. a_p + (-1)^p a_p a_0 a_1 .. a_{p-1}
inline Dense hochschild_boundary(const Algebra& A, int p)
{
    const int d = A.d;
    Dense m(ipow(d, p), std::vector<mpq_class>(ipow(d, p + 1), 0));
    for (long col = 0; col < ipow(d, p + 1); ++col) {
        auto x = digits(col, d, p + 1);
        for (int i = 0; i <= p; ++i) {
            const int sign = i % 2 ? -1 : 1;
            const int l = i < p ? x[i] : x[p];
            const int r = i < p ? x[i + 1] : x[0];
            for (int k = 0; k < d; ++k) {
                if (A.mult[l][r][k] == 0)
                    continue;
                std::vector<int> y;
                if (i < p) {
                    y.assign(x.begin(), x.begin() + i);
                    y.push_back(k);
                    y.insert(y.end(), x.begin() + i + 2, x.end());
                } else {
                    y.push_back(k);
                    y.insert(y.end(), x.begin() + 1, x.begin() + p);
                }
                m[encode(y, d)][col] += sign * A.mult[l][r][k];
            }
        }
    }
    return m;
}

// (delta f)(a_1..a_{n+1}) = a_1 f(a_2..) + sum (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(..a_n) a_{n+1};
// cochains flattened as (input index) * d + output coordinate.
inline Dense hochschild_coboundary(const Algebra& A, int n)
{
    const int d = A.d;
    const long in_src = ipow(d, n), in_dst = ipow(d, n + 1);
    Dense m(in_dst * d, std::vector<mpq_class>(in_src * d, 0));
    for (long s = 0; s < in_src; ++s)
        for (int out = 0; out < d; ++out) {
            const long col = s * d + out;  // f sends input s to e_out
            for (long t = 0; t < in_dst; ++t) {
                auto x = digits(t, d, n + 1);
                std::vector<mpq_class> v(d, 0);
                // a_1 f(a_2 .. a_{n+1})
                std::vector<int> tail(x.begin() + 1, x.end());
                if (encode(tail, d) == s)
                    for (int k = 0; k < d; ++k)
                        v[k] += A.mult[x[0]][out][k];
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < d; ++k) {
                        const mpq_class& c = A.mult[x[i]][x[i + 1]][k];
                        if (c == 0)
                            continue;
                        std::vector<int> y(x.begin(), x.begin() + i);
                        y.push_back(k);
                        y.insert(y.end(), x.begin() + i + 2, x.end());
                        if (encode(y, d) == s)
                            v[out] += (i % 2 ? 1 : -1) * c;
                    }
                std::vector<int> head(x.begin(), x.begin() + n);
                if (encode(head, d) == s)
                    for (int k = 0; k < d; ++k)
                        v[k] += (n % 2 ? 1 : -1) * A.mult[out][x[n]][k];
                for (int k = 0; k < d; ++k)
                    m[t * d + k][col] += v[k];
            }
        }
    return m;
}

inline std::vector<std::size_t> homology_betti(const Algebra& A, int max_p)
{
    std::vector<std::size_t> out;
    for (int p = 0; p <= max_p; ++p) {
        const std::size_t dim = ipow(A.d, p + 1);
        const std::size_t r_out = p == 0 ? 0 : rank(hochschild_boundary(A, p));
        const std::size_t r_in = rank(hochschild_boundary(A, p + 1));
        out.push_back(dim - r_out - r_in);
    }
    return out;
}

inline std::vector<std::size_t> cohomology_betti(const Algebra& A, int max_n)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= max_n; ++n) {
        const std::size_t dim = ipow(A.d, n + 1);
        const std::size_t r_out = rank(hochschild_coboundary(A, n));
        const std::size_t r_in = n == 0 ? 0 : rank(hochschild_coboundary(A, n - 1));
        out.push_back(dim - r_out - r_in);
    }
    return out;
}

template <class V>
std::vector<std::size_t> widen(const V& v)
{
    return {v.begin(), v.end()};
}

}  // namespace oracle
