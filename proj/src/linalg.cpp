#include "virasoro/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace virasoro {

Matrix Matrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatVector Matrix::row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntEchelon bareiss_echelon(const Matrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (std::size_t r = 0; r < nr; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < nc; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).den().get_mpz_t());
        }
        for (std::size_t c = 0; c < nc; ++c) a[r][c] = m(r, c).num() * (l / m(r, c).den());
    }

    IntEchelon out;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[row]);
        const BigInt& p = a[row][col];
        for (std::size_t i = row + 1; i < nr; ++i) {
            const BigInt f = a[i][col];
            for (std::size_t j = col + 1; j < nc; ++j) {
                BigInt t = p * a[i][j] - f * a[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][col] = 0;
        }
        prev = p;
        out.pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    out.rows = std::move(a);
    return out;
}

Rref rref(const Matrix& m) {
    const IntEchelon ech = bareiss_echelon(m);
    Rref out;
    out.cols = m.cols();
    out.pivots = ech.pivots;
    out.rows.reserve(ech.rows.size());
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        const BigInt& p = ech.rows[r][ech.pivots[r]];
        RatVector v(out.cols);
        for (std::size_t c = 0; c < out.cols; ++c) v[c] = Rat(ech.rows[r][c], p);
        out.rows.push_back(std::move(v));
    }
    // Back substitution clears entries above each pivot.
    for (std::size_t r = out.rows.size(); r-- > 0;) {
        const std::size_t pc = out.pivots[r];
        for (std::size_t above = 0; above < r; ++above) {
            const Rat f = out.rows[above][pc];
            if (f.is_zero()) continue;
            for (std::size_t c = pc; c < out.cols; ++c) out.rows[above][c] -= f * out.rows[r][c];
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) { return bareiss_echelon(m).rows.size(); }

RatVector primitive(const RatVector& v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    BigInt g = 0;
    for (const auto& x : v) {
        const BigInt n = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    Rat scale(l, g);
    for (const auto& x : v) {
        if (!x.is_zero()) {
            if (x.sign() < 0) scale = -scale;
            break;
        }
    }
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x * scale);
    return out;
}

std::vector<RatVector> nullspace(const Matrix& m) {
    const Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector x(m.cols());
        x[free] = Rat(1);
        for (std::size_t i = 0; i < r.rows.size(); ++i) x[r.pivots[i]] = -r.rows[i][free];
        basis.push_back(primitive(x));
    }
    return basis;
}

SubspaceReducer::SubspaceReducer(const std::vector<RatVector>& generators, std::size_t dim) {
    basis_ = rref(Matrix::from_rows(generators, dim));
}

RatVector SubspaceReducer::reduce(const RatVector& v) const {
    if (v.size() != basis_.cols) throw std::invalid_argument("vector dimension mismatch in reduce");
    RatVector out = v;
    for (std::size_t i = 0; i < basis_.rows.size(); ++i) {
        const std::size_t pc = basis_.pivots[i];
        const Rat f = out[pc];
        if (f.is_zero()) continue;
        for (std::size_t c = pc; c < out.size(); ++c) out[c] -= f * basis_.rows[i][c];
    }
    return out;
}

bool SubspaceReducer::contains(const RatVector& v) const {
    for (const auto& x : reduce(v)) {
        if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace virasoro
