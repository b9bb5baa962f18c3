#pragma once

#include <vector>

#include "motivic/ffield.hpp"

namespace motivic {

inline constexpr int kMaxMatrixDim = 12;

/// Isometry class of a symmetric form. Nondegenerate even-rank forms split
/// into the two Witt types; odd-rank forms are tagged by their discriminant
/// class. Anything of non-full rank is `degenerate`.
enum class SymType {
    odd_rank_square_disc,
    odd_rank_nonsquare_disc,
    even_plus,
    even_minus,
    degenerate,
};

const char* to_string(SymType t);

/// Dense matrix over F_p, at most 12x12. Treat as immutable once filled:
/// every operation below is pure and safe to run concurrently.
class MatFp {
  public:
    MatFp(PrimeField field, int n_rows, int n_cols);

    static MatFp from_rows(const PrimeField& field, const std::vector<std::vector<long long>>& rows);
    static MatFp identity(const PrimeField& field, int n);
    static MatFp diagonal(const PrimeField& field, const std::vector<long long>& diag);

    const PrimeField& field() const { return field_; }
    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }

    Fp at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_cols_ + j]; }
    void set(int i, int j, long long v) {
        entries_[static_cast<size_t>(i) * n_cols_ + j] = field_.reduce(v);
    }

    MatFp transposed() const;
    bool is_symmetric() const;
    bool is_alternating() const;

    bool operator==(const MatFp& other) const {
        return field_.p() == other.field_.p() && n_rows_ == other.n_rows_ &&
               n_cols_ == other.n_cols_ && entries_ == other.entries_;
    }

  private:
    PrimeField field_;
    int n_rows_, n_cols_;
    std::vector<Fp> entries_;
};

int rank(const MatFp& m);

/// Determinant by elimination with pivot-sign tracking. Throws NotSquare.
Fp det(const MatFp& m);

/// Pfaffian of an alternating matrix by recursive expansion along the first
/// row, Pf(A) = sum_j (-1)^j a_1j Pf(A with row/col 1 and j removed); the
/// standard block form diag([[0,1],[-1,0]], ...) evaluates to +1.
/// Throws NotAlternating / OddSize.
Fp pfaffian(const MatFp& m);

struct SymClass {
    int rank;
    SymType type;
    bool operator==(const SymClass&) const = default;
};

/// Rank plus isometry type of a symmetric matrix over odd p. Full odd rank is
/// tagged by whether det is a square; full even rank n is even_plus exactly
/// when (-1)^(n/2) * det is a square. Throws NotSymmetric.
SymClass classify_symmetric(const MatFp& m);

MatFp mul(const MatFp& a, const MatFp& b);

/// g^T s g, the congruence action used by form classification.
MatFp congruence(const MatFp& g, const MatFp& s);

}  // namespace motivic
