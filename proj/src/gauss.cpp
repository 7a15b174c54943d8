#include "corrsolve/gauss.hpp"

namespace corrsolve {

std::vector<int> rref(QMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMatrix a) { return static_cast<int>(rref(a).size()); }

std::vector<QVec> nullspace(const QMatrix& a, int cols) {
    QMatrix m = a;
    for (auto& row : m) row.resize(static_cast<std::size_t>(cols), Rat(0));
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVec v(static_cast<std::size_t>(cols), Rat(0));
        v[static_cast<std::size_t>(free)] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (r >= m.size()) break;
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> primitive_integer_vector(const QVec& v) {
    Int lcm(1), g(0);
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& q : v) {
        Int t = q.get_num() * (lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        out.push_back(std::move(t));
    }
    if (g != 0) {
        for (auto& t : out) t /= g;
    }
    for (const auto& t : out) {
        if (t != 0) {
            if (t < 0)
                for (auto& x : out) x = -x;
            break;
        }
    }
    return out;
}

} // namespace corrsolve
