#pragma once

#include <cstdint>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

/// Residue in [0, p). The PrimeField that produced a value defines its
/// modulus; mixing residues from different fields is a caller bug.
using Fp = std::uint32_t;

bool is_prime(unsigned n);

/// The quadratic-form machinery requires odd characteristic. The plain-matrix
/// counting oracle is the one caller allowed to opt in to p = 2.
enum class CharTwo { reject, allow };

/// Arithmetic in F_p for a prime p <= 251 (odd unless CharTwo::allow).
/// Values are immutable; a constructed field is safe to share across threads.
class PrimeField {
  public:
    explicit PrimeField(unsigned p, CharTwo policy = CharTwo::reject);

    unsigned p() const { return p_; }

    /// Any integer -> its residue.
    Fp reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<Fp>(r < 0 ? r + p_ : r);
    }

    Fp add(Fp a, Fp b) const {
        Fp s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const { return a * b % p_; }

    Fp pow(Fp a, unsigned long e) const;

    /// Multiplicative inverse; throws ZeroInverse on 0.
    Fp inv(Fp a) const {
        if (a == 0) throw ZeroInverse{};
        return inv_[a];
    }

    /// Euler criterion a^((p-1)/2); 0 counts as a square.
    bool is_square(Fp a) const;

    /// Table of inverses indexed by residue (entry 0 unused); for hot loops.
    const std::vector<Fp>& inverse_table() const { return inv_; }

  private:
    unsigned p_;
    std::vector<Fp> inv_;
};

}  // namespace motivic
