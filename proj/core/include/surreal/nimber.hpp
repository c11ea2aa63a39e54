#pragma once

#include "surreal/bigmath.hpp"

namespace surreal {

// Nimber arithmetic on the naturals: the sum is carry-free binary addition
// (xor), the product follows the recursive splitting at powers 2^(2^k).
// Together they make {0, ..., 2^(2^n) - 1} a field of characteristic 2.
Nat nim_add(const Nat& a, const Nat& b);
Nat nim_mul(const Nat& a, const Nat& b);

// Multiplicative inverse, found by exhaustive search inside the smallest
// closed subfield of size 2^(2^k) containing a, with k capped by the
// configured level (default 4, i.e. values below 65536).
Nat nim_inv(const Nat& a);

int nim_inv_level();
void set_nim_inv_level(int n);

}  // namespace surreal
