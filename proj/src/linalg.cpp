#include "motivic/linalg.hpp"

#include <utility>

namespace motivic {

const char* to_string(SymType t) {
    switch (t) {
        case SymType::odd_rank_square_disc: return "odd_rank_square_disc";
        case SymType::odd_rank_nonsquare_disc: return "odd_rank_nonsquare_disc";
        case SymType::even_plus: return "even_plus";
        case SymType::even_minus: return "even_minus";
        case SymType::degenerate: return "degenerate";
    }
    return "?";
}

MatFp::MatFp(PrimeField field, int n_rows, int n_cols)
    : field_(std::move(field)), n_rows_(n_rows), n_cols_(n_cols) {
    if (n_rows < 1 || n_cols < 1 || n_rows > kMaxMatrixDim || n_cols > kMaxMatrixDim)
        throw InvalidParameter("matrix dimensions must be in [1, 12]");
    entries_.assign(static_cast<size_t>(n_rows) * n_cols, 0);
}

MatFp MatFp::from_rows(const PrimeField& field, const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw InvalidParameter("empty matrix");
    MatFp m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.n_rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n_cols_)
            throw InvalidParameter("ragged rows");
        for (int j = 0; j < m.n_cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

MatFp MatFp::identity(const PrimeField& field, int n) {
    MatFp m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatFp MatFp::diagonal(const PrimeField& field, const std::vector<long long>& diag) {
    MatFp m(field, static_cast<int>(diag.size()), static_cast<int>(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), diag[i]);
    return m;
}

MatFp MatFp::transposed() const {
    MatFp t(field_, n_cols_, n_rows_);
    for (int i = 0; i < n_rows_; ++i)
        for (int j = 0; j < n_cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool MatFp::is_symmetric() const {
    if (n_rows_ != n_cols_) return false;
    for (int i = 0; i < n_rows_; ++i)
        for (int j = i + 1; j < n_cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool MatFp::is_alternating() const {
    if (n_rows_ != n_cols_) return false;
    for (int i = 0; i < n_rows_; ++i) {
        if (at(i, i) != 0) return false;
        for (int j = i + 1; j < n_cols_; ++j)
            if (at(i, j) != field_.neg(at(j, i))) return false;
    }
    return true;
}

namespace {

// Row elimination on a scratch copy. Returns rank; when `det_out` is given the
// matrix must be square and *det_out receives sign * product of pivots (0 if
// rank deficient). Pivot rows are never rescaled, so the determinant is exact.
int eliminate(std::vector<Fp>& m, int rows, int cols, const PrimeField& f, Fp* det_out) {
    int rank = 0;
    int sign = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r) * cols + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int c = 0; c < cols; ++c)
                std::swap(m[static_cast<size_t>(piv) * cols + c], m[static_cast<size_t>(rank) * cols + c]);
            sign = -sign;
        }
        const Fp pivot = m[static_cast<size_t>(rank) * cols + col];
        const Fp pivot_inv = f.inv(pivot);
        for (int r = rank + 1; r < rows; ++r) {
            const Fp head = m[static_cast<size_t>(r) * cols + col];
            if (head == 0) continue;
            const Fp mult = f.neg(f.mul(head, pivot_inv));
            for (int c = col; c < cols; ++c) {
                Fp& cell = m[static_cast<size_t>(r) * cols + c];
                cell = f.add(cell, f.mul(mult, m[static_cast<size_t>(rank) * cols + c]));
            }
        }
        ++rank;
    }
    if (det_out) {
        if (rank < rows) {
            *det_out = 0;
        } else {
            Fp d = 1;
            for (int i = 0; i < rows; ++i) d = f.mul(d, m[static_cast<size_t>(i) * cols + i]);
            *det_out = sign > 0 ? d : f.neg(d);
        }
    }
    return rank;
}

std::vector<Fp> copy_entries(const MatFp& m) {
    std::vector<Fp> e(static_cast<size_t>(m.n_rows()) * m.n_cols());
    for (int i = 0; i < m.n_rows(); ++i)
        for (int j = 0; j < m.n_cols(); ++j) e[static_cast<size_t>(i) * m.n_cols() + j] = m.at(i, j);
    return e;
}

Fp pfaffian_rec(const MatFp& a, std::vector<int>& active, const PrimeField& f) {
    if (active.empty()) return 1;
    const int i0 = active.front();
    Fp acc = 0;
    std::vector<int> rest(active.size() - 2);
    for (size_t t = 1; t < active.size(); ++t) {
        const Fp top = a.at(i0, active[t]);
        if (top == 0) continue;
        size_t k = 0;
        for (size_t s = 1; s < active.size(); ++s)
            if (s != t) rest[k++] = active[s];
        Fp term = f.mul(top, pfaffian_rec(a, rest, f));
        if (t % 2 == 0) term = f.neg(term);
        acc = f.add(acc, term);
    }
    return acc;
}

}  // namespace

int rank(const MatFp& m) {
    auto e = copy_entries(m);
    return eliminate(e, m.n_rows(), m.n_cols(), m.field(), nullptr);
}

Fp det(const MatFp& m) {
    if (m.n_rows() != m.n_cols()) throw NotSquare{};
    auto e = copy_entries(m);
    Fp d = 0;
    eliminate(e, m.n_rows(), m.n_cols(), m.field(), &d);
    return d;
}

Fp pfaffian(const MatFp& m) {
    if (m.n_rows() != m.n_cols() || !m.is_alternating()) throw NotAlternating{};
    if (m.n_rows() % 2 != 0) throw OddSize{};
    std::vector<int> active(m.n_rows());
    for (int i = 0; i < m.n_rows(); ++i) active[i] = i;
    return pfaffian_rec(m, active, m.field());
}

SymClass classify_symmetric(const MatFp& m) {
    if (!m.is_symmetric()) throw NotSymmetric{};
    const PrimeField& f = m.field();
    if (f.p() == 2) throw InvalidParameter("form classification needs odd p");
    const int n = m.n_rows();
    auto e = copy_entries(m);
    Fp d = 0;
    const int r = eliminate(e, n, n, f, &d);
    if (r < n) return {r, SymType::degenerate};
    if (n % 2 == 1)
        return {r, f.is_square(d) ? SymType::odd_rank_square_disc : SymType::odd_rank_nonsquare_disc};
    const Fp disc = (n / 2) % 2 == 0 ? d : f.neg(d);
    return {r, f.is_square(disc) ? SymType::even_plus : SymType::even_minus};
}

MatFp mul(const MatFp& a, const MatFp& b) {
    if (a.n_cols() != b.n_rows()) throw InvalidParameter("dimension mismatch in matrix product");
    const PrimeField& f = a.field();
    MatFp c(f, a.n_rows(), b.n_cols());
    for (int i = 0; i < a.n_rows(); ++i)
        for (int j = 0; j < b.n_cols(); ++j) {
            Fp s = 0;
            for (int k = 0; k < a.n_cols(); ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
            c.set(i, j, s);
        }
    return c;
}

MatFp congruence(const MatFp& g, const MatFp& s) { return mul(mul(g.transposed(), s), g); }

}  // namespace motivic
