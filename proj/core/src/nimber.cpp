#include "surreal/nimber.hpp"

#include <atomic>
#include <mutex>
#include <unordered_map>

namespace surreal {

namespace {

std::atomic<int> g_inv_level{4};

std::mutex g_memo_mu;
std::unordered_map<unsigned long long, unsigned long long> g_small_memo;

unsigned bit_length(const Nat& v) {
  return v.is_zero() ? 0 : boost::multiprecision::msb(v) + 1;
}

Nat nim_mul_rec(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) return Nat(0);
  if (a == 1) return b;
  if (b == 1) return a;
  bool small = a < 65536 && b < 65536;
  unsigned long long key = 0;
  if (small) {
    unsigned long long ua = a.convert_to<unsigned long long>();
    unsigned long long ub = b.convert_to<unsigned long long>();
    if (ua > ub) std::swap(ua, ub);
    key = (ua << 16) | ub;
    std::scoped_lock lock(g_memo_mu);
    auto it = g_small_memo.find(key);
    if (it != g_small_memo.end()) return Nat(it->second);
  }
  // split at x = 2^h where h is the smallest power of two covering both args;
  // x is then of the form 2^(2^k), with x o x = x ^ (x >> 1)
  unsigned bits = std::max(bit_length(a), bit_length(b));
  unsigned h = 1;
  while (2 * h < bits) h *= 2;
  Nat a1 = a >> h, a0 = a & ((Nat(1) << h) - 1);
  Nat b1 = b >> h, b0 = b & ((Nat(1) << h) - 1);
  Nat m1 = nim_mul_rec(a1, b1);
  Nat m2 = nim_mul_rec(a0, b0);
  Nat m3 = nim_mul_rec(a1 ^ a0, b1 ^ b0);
  Nat high = m3 ^ m2;                       // a1ob0 ^ a0ob1 ^ m1, folded with m1
  Nat fixup = nim_mul_rec(m1, Nat(1) << (h - 1));
  Nat result = (high << h) ^ m2 ^ fixup;
  if (small) {
    std::scoped_lock lock(g_memo_mu);
    g_small_memo.emplace(key, result.convert_to<unsigned long long>());
  }
  return result;
}

}  // namespace

Nat nim_add(const Nat& a, const Nat& b) {
  if (a < 0 || b < 0) raise(errc::undefined, "nimber arguments must be naturals");
  return a ^ b;
}

Nat nim_mul(const Nat& a, const Nat& b) {
  if (a < 0 || b < 0) raise(errc::undefined, "nimber arguments must be naturals");
  return nim_mul_rec(a, b);
}

int nim_inv_level() { return g_inv_level.load(); }
void set_nim_inv_level(int n) { g_inv_level.store(n); }

Nat nim_inv(const Nat& a) {
  if (a.is_zero()) raise(errc::zero_inverse, "0 has no multiplicative inverse");
  if (a < 0) raise(errc::undefined, "nimber arguments must be naturals");
  const int level = nim_inv_level();
  Nat cap = nat_pow(Nat(2), nat_pow(Nat(2), Nat(level)));
  if (a >= cap) {
    raise(errc::resource_limit,
          "argument outside the configured subfield of size 2^(2^" +
              std::to_string(level) + ")");
  }
  // smallest closed subfield containing a
  Nat field = 2;
  while (a >= field) field *= field;
  for (Nat b = 1; b < field; ++b) {
    if (nim_mul_rec(a, b) == 1) return b;
  }
  raise(errc::undefined, "inverse not found (unreachable)");
}

}  // namespace surreal
