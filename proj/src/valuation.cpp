#include "bindisc/valuation.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "bindisc/recurrence.hpp"

namespace bindisc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Valuation nu2(const mpz_class& x) {
    if (sgn(x) == 0) throw std::domain_error("nu2: undefined for 0");
    // mpz_scan1 scans the two's complement form; the lowest set bit of -x
    // coincides with that of x, so negatives need no special casing.
    return mpz_scan1(x.get_mpz_t(), 0);
}

Valuation nu2(std::int64_t x) {
    if (x == 0) throw std::domain_error("nu2: undefined for 0");
    // Trailing zeros of the two's complement bits equal those of |x|.
    return static_cast<Valuation>(std::countr_zero(static_cast<std::uint64_t>(x)));
}

unsigned carries_base_p(std::uint64_t prime, std::uint64_t a, std::uint64_t b) {
    if (!is_prime(prime)) throw std::invalid_argument("carries_base_p: base must be prime");
    unsigned carries = 0;
    std::uint64_t carry = 0;
    while (a != 0 || b != 0 || carry != 0) {
        const std::uint64_t digit_sum = a % prime + b % prime + carry;
        if (digit_sum >= prime) {
            carry = 1;
            ++carries;
        } else {
            carry = 0;
        }
        a /= prime;
        b /= prime;
    }
    return carries;
}

unsigned nup_binomial(std::uint64_t prime, std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("nup_binomial: requires k <= n");
    return carries_base_p(prime, k, n - k);
}

bool lemma2_first(std::uint64_t ell, std::uint64_t k) {
    if (k < 1 || k > ell) throw std::invalid_argument("lemma2_first: requires 1 <= k <= ell");
    const std::uint64_t lhs = nup_binomial(2, ell, k) + 3 * k;
    const std::uint64_t rhs = 1 + static_cast<std::uint64_t>(std::countr_zero(ell));
    return lhs > rhs;
}

bool lemma2_second(unsigned k, std::uint64_t ell) {
    if (k < 3 || k > 62) throw std::invalid_argument("lemma2_second: requires 3 <= k <= 62");
    const std::uint64_t pow2k = std::uint64_t{1} << k;
    const bool valid_ell = ell == 3 || (ell >= 5 && ell <= pow2k);
    if (!valid_ell)
        throw std::invalid_argument("lemma2_second: requires ell = 3 or 5 <= ell <= 2^k");
    return nup_binomial(2, pow2k, ell) + ell >= static_cast<std::uint64_t>(k) + 3;
}

std::uint64_t index_of_appearance(std::int64_t p, std::int64_t q, std::uint32_t m) {
    if (m < 1 || m > kMaxModulus)
        throw std::invalid_argument("index_of_appearance: modulus must be in [1, 2^31)");
    const std::uint64_t q_res =
        static_cast<std::uint64_t>(((q % m) + static_cast<std::int64_t>(m)) % m);
    if (std::gcd(static_cast<std::uint64_t>(m), q_res) != 1)
        throw std::invalid_argument("index_of_appearance: requires gcd(m, q) = 1");

    ModularOrbit orbit(lucas_recurrence(p, q), m);
    orbit.next();  // u_0 = 0 does not count
    const std::uint64_t bound = static_cast<std::uint64_t>(m) * m;
    for (std::uint64_t k = 1; k <= bound + 1; ++k)
        if (orbit.next() == 0) return k;
    throw AppearanceNotFoundError("index_of_appearance: not found within m^2 steps");
}

}  // namespace bindisc
