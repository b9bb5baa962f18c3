#include "motivic/ffield.hpp"

namespace motivic {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(unsigned p, CharTwo policy) : p_(p) {
    if (!is_prime(p) || p > 251)
        throw InvalidParameter("p must be a prime <= 251, got " + std::to_string(p));
    if (p == 2 && policy == CharTwo::reject)
        throw InvalidParameter("p = 2 is rejected here; the forms machinery needs odd characteristic");
    inv_.assign(p, 0);
    for (Fp a = 1; a < p; ++a) inv_[a] = pow(a, p - 2);
}

Fp PrimeField::pow(Fp a, unsigned long e) const {
    Fp base = a % p_;
    Fp acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool PrimeField::is_square(Fp a) const {
    if (a == 0) return true;
    return pow(a, (p_ - 1) / 2) == 1;
}

}  // namespace motivic
