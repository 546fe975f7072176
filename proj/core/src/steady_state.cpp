#include <cmath>
#include <stdexcept>
#include <vector>

#include "vdhla/environment.hpp"

namespace vdhla::env {

namespace {

// Irreducibility check for small S: (T + I)^S must be strictly positive.
bool ergodic(const Matrix& t) {
    const std::size_t s = t.size();
    Matrix m(s, std::vector<double>(s, 0.0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m[i][j] = t[i][j] + (i == j ? 1.0 : 0.0);

    Matrix p = m;
    for (std::size_t step = 1; step < s; ++step) {
        Matrix q(s, std::vector<double>(s, 0.0));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < s; ++k) {
                if (p[i][k] == 0.0) continue;
                for (std::size_t j = 0; j < s; ++j) q[i][j] += p[i][k] * m[k][j];
            }
        p = std::move(q);
    }
    for (const auto& row : p)
        for (double x : row)
            if (!(x > 0.0)) return false;
    return true;
}

}  // namespace

std::vector<double> steady_state(const Matrix& transition) {
    const std::size_t s = transition.size();
    if (s == 0) throw std::invalid_argument("steady_state: empty matrix");
    for (const auto& row : transition) {
        if (row.size() != s) throw std::invalid_argument("steady_state: matrix must be square");
        double sum = 0.0;
        for (double p : row) {
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("steady_state: entries must lie in [0,1]");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("steady_state: rows must sum to 1");
    }
    if (!ergodic(transition))
        throw std::invalid_argument("steady_state: chain is not ergodic");

    // Solve v(T - I) = 0 with sum(v) = 1: columns of (T^t - I), last row
    // replaced by the normalization constraint. Gaussian elimination with
    // partial pivoting; S is small.
    std::vector<std::vector<double>> a(s, std::vector<double>(s + 1, 0.0));
    for (std::size_t i = 0; i + 1 < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) a[i][j] = transition[j][i] - (i == j ? 1.0 : 0.0);
        a[i][s] = 0.0;
    }
    for (std::size_t j = 0; j < s; ++j) a[s - 1][j] = 1.0;
    a[s - 1][s] = 1.0;

    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < s; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12)
            throw std::invalid_argument("steady_state: singular system");
        std::swap(a[col], a[pivot]);
        for (std::size_t r = 0; r < s; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j <= s; ++j) a[r][j] -= f * a[col][j];
        }
    }

    std::vector<double> v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = a[i][s] / a[i][i];
    for (double& x : v)
        if (x < 0.0 && x > -1e-12) x = 0.0;  // scrub elimination noise
    for (double x : v)
        if (!(x >= 0.0 && x <= 1.0 + 1e-9))
            throw std::invalid_argument("steady_state: solution is not a distribution");
    return v;
}

}  // namespace vdhla::env
