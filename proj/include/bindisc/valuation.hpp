#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace bindisc {

/// Exponent of 2 (or of a given prime) in an integer's factorization.
/// Defined only for nonzero arguments.
using Valuation = unsigned long;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// nu2(x): largest e with 2^e | x. Throws std::domain_error for x = 0.
Valuation nu2(const mpz_class& x);
Valuation nu2(std::int64_t x);

/// Number of carries when adding a and b in base `prime`.
unsigned carries_base_p(std::uint64_t prime, std::uint64_t a, std::uint64_t b);

/// Exponent of `prime` in binomial(n, k), computed by carry counting.
/// Requires 0 <= k <= n.
unsigned nup_binomial(std::uint64_t prime, std::uint64_t n, std::uint64_t k);

/// True iff nu2(binomial(ell, k) * 2^(3k)) > nu2(2*ell). Requires
/// 1 <= k <= ell. The inequality holds on the whole domain; the predicate
/// exists so ranges can be verified exhaustively.
bool lemma2_first(std::uint64_t ell, std::uint64_t k);

/// True iff nu2(binomial(2^k, ell) * 2^ell) >= k + 3. Requires k >= 3 and
/// ell = 3 or 5 <= ell <= 2^k; ell = 4 lies outside the claim and is
/// rejected.
bool lemma2_second(unsigned k, std::uint64_t ell);

/// Raised when the index-of-appearance scan exceeds its period bound,
/// which signals a violated precondition or a bug.
struct AppearanceNotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// z(m): minimal k >= 1 with m | u_k for the Lucas sequence with
/// coefficients (p, q). Requires gcd(m, q) = 1; the scan is bounded by
/// m^2 steps (the period of the modular state pair).
std::uint64_t index_of_appearance(std::int64_t p, std::int64_t q, std::uint32_t m);

}  // namespace bindisc
