#include "wmha/linalg.hpp"

#include <algorithm>

namespace wmha {

namespace {

bool row_is_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Fraction-free (Bareiss) forward pass, then reduction to RREF.
Echelon bareiss_rref(Matrix m, std::size_t cols) {
    Echelon out;
    out.cols = cols;
    const std::size_t rows = m.size();
    std::size_t r = 0;
    Scalar prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Scalar piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = m[i][c];
            if (lead.is_zero()) {
                // Row still has to be rescaled to keep the Bareiss invariant.
                if (!(piv == prev))
                    for (std::size_t j = c + 1; j < cols; ++j)
                        if (!m[i][j].is_zero()) m[i][j] = m[i][j] * piv / prev;
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = piv * m[i][j];
                if (!m[r][j].is_zero()) v -= lead * m[r][j];
                m[i][j] = v / prev;
            }
            m[i][c] = Scalar();
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    // Back substitution to reduced form.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = out.pivots[k];
        const Scalar inv = m[k][pc].inverse();
        for (std::size_t j = pc; j < cols; ++j)
            if (!m[k][j].is_zero()) m[k][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar f = m[i][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j)
                if (!m[k][j].is_zero()) m[i][j] -= f * m[k][j];
        }
    }
    out.rows = std::move(m);
    return out;
}

}  // namespace

void extend_echelon(Echelon& ech, const Matrix& more) {
    Matrix m = ech.rows;
    for (const Row& r : more) {
        Row reduced = reduce_against(ech, r);
        if (!row_is_zero(reduced)) m.push_back(std::move(reduced));
    }
    if (m.size() == ech.rows.size()) return;
    ech = bareiss_rref(std::move(m), ech.cols);
}

Echelon reduce_rows(const Matrix& input, std::size_t cols) {
    Echelon ech;
    ech.cols = cols;
    const std::size_t block = std::max<std::size_t>(cols, 8);
    for (std::size_t start = 0; start < input.size(); start += block) {
        const std::size_t stop = std::min(input.size(), start + block);
        Matrix chunk(input.begin() + static_cast<std::ptrdiff_t>(start),
                     input.begin() + static_cast<std::ptrdiff_t>(stop));
        extend_echelon(ech, chunk);
        if (ech.rank() == cols) break;
    }
    return ech;
}

Row reduce_against(const Echelon& ech, Row v) {
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        const std::size_t pc = ech.pivots[r];
        if (v[pc].is_zero()) continue;
        const Scalar f = v[pc];
        const Row& row = ech.rows[r];
        for (std::size_t j = pc; j < ech.cols; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

Matrix kernel_basis(const Echelon& ech) {
    std::vector<bool> is_pivot(ech.cols, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;
    Matrix out;
    for (std::size_t f = 0; f < ech.cols; ++f) {
        if (is_pivot[f]) continue;
        Row x(ech.cols);
        x[f] = Scalar(1);
        for (std::size_t r = 0; r < ech.rows.size(); ++r) x[ech.pivots[r]] = -ech.rows[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Matrix> invert(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix aug(n, Row(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = Scalar(1);
    }
    Echelon ech = bareiss_rref(std::move(aug), 2 * n);
    if (ech.rank() != n || (n > 0 && ech.pivots.back() != n - 1)) return std::nullopt;
    Matrix inv(n, Row(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = ech.rows[i][n + j];
    return inv;
}

}  // namespace wmha
