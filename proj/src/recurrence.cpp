#include "bindisc/recurrence.hpp"

#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include "bindisc/valuation.hpp"

namespace bindisc {

namespace {

std::uint64_t canonical_residue(std::int64_t x, std::uint64_t m) {
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

}  // namespace

BinaryRecurrence make_recurrence(std::int64_t p, std::int64_t q, std::int64_t w0,
                                 std::int64_t w1) {
    return BinaryRecurrence{p, q, w0, w1};
}

BinaryRecurrence lucas_recurrence(std::int64_t p, std::int64_t q) {
    return BinaryRecurrence{p, q, 0, 1};
}

BinaryRecurrence companion_recurrence(std::int64_t p, std::int64_t q) {
    return BinaryRecurrence{p, q, 2, p};
}

BinaryRecurrence family_shallit(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("family_shallit: k must be >= 1");
    if (k > (std::numeric_limits<std::int64_t>::max() - 2) / 4)
        throw std::overflow_error("family_shallit: 4k+2 overflows");
    return BinaryRecurrence{4 * k + 2, -1, 0, 1};
}

BinaryRecurrence family_browkin_salajan(std::int64_t prime_q) {
    if (prime_q < 5 || !is_prime(static_cast<std::uint64_t>(prime_q)))
        throw std::invalid_argument("family_browkin_salajan: q must be a prime >= 5");
    const std::int64_t q_star = ((prime_q - 1) / 2) % 2 == 0 ? prime_q : -prime_q;
    // q odd, so 3 + q* and 9 - q* are both multiples of 4.
    assert((3 + q_star) % 4 == 0 && (9 - q_star) % 4 == 0);
    return BinaryRecurrence{2, 3, (3 + q_star) / 4, (9 - q_star) / 4};
}

mpz_class term_exact(const BinaryRecurrence& r, std::uint64_t n) {
    mpz_class cur = static_cast<long>(r.w0);
    mpz_class nxt = static_cast<long>(r.w1);
    if (n == 0) return cur;
    for (std::uint64_t i = 1; i < n; ++i) {
        mpz_class stepped = static_cast<long>(r.p) * nxt + static_cast<long>(r.q) * cur;
        cur = std::move(nxt);
        nxt = std::move(stepped);
    }
    return nxt;
}

std::pair<mpz_class, mpz_class> lucas_pair(std::int64_t p, std::int64_t q,
                                           std::uint64_t n) {
    mpz_class u0 = 0, u1 = 1;
    mpz_class v0 = 2, v1 = static_cast<long>(p);
    for (std::uint64_t i = 0; i < n; ++i) {
        mpz_class u2 = static_cast<long>(p) * u1 + static_cast<long>(q) * u0;
        mpz_class v2 = static_cast<long>(p) * v1 + static_cast<long>(q) * v0;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {std::move(u0), std::move(v0)};
}

ModularOrbit::ModularOrbit(const BinaryRecurrence& r, std::uint32_t modulus) {
    if (modulus < 1 || modulus > kMaxModulus)
        throw std::invalid_argument("ModularOrbit: modulus must be in [1, 2^31)");
    m_ = modulus;
    p_ = canonical_residue(r.p, m_);
    q_ = canonical_residue(r.q, m_);
    cur_ = canonical_residue(r.w0, m_);
    nxt_ = canonical_residue(r.w1, m_);
}

std::vector<std::uint32_t> terms_mod(const BinaryRecurrence& r, std::uint32_t m,
                                     std::uint64_t count) {
    ModularOrbit orbit(r, m);
    std::vector<std::uint32_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(orbit.next());
    return out;
}

Delta discriminant(const BinaryRecurrence& r) {
    const __int128 d = static_cast<__int128>(r.p) * r.p + static_cast<__int128>(4) * r.q;
    if (d > std::numeric_limits<std::int64_t>::max() ||
        d < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("discriminant: p^2 + 4q out of 64-bit range");
    Delta out;
    out.value = static_cast<std::int64_t>(d);
    out.is_degenerate = out.value == 0;
    if (r.p % 2 == 0) out.p0 = r.p / 2;
    if (out.value % 16 == 0) out.delta0 = out.value / 16;
    return out;
}

std::optional<std::uint64_t> first_repeat_index(const BinaryRecurrence& r,
                                                std::uint64_t limit) {
    std::map<mpz_class, std::uint64_t> seen;
    mpz_class cur = static_cast<long>(r.w0);
    mpz_class nxt = static_cast<long>(r.w1);
    for (std::uint64_t i = 0; i < limit; ++i) {
        if (!seen.emplace(cur, i).second) return i;
        mpz_class stepped = static_cast<long>(r.p) * nxt + static_cast<long>(r.q) * cur;
        cur = std::move(nxt);
        nxt = std::move(stepped);
    }
    return std::nullopt;
}

std::uint64_t distinct_prefix(const BinaryRecurrence& r, std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("distinct_prefix: limit must be >= 1");
    return first_repeat_index(r, limit).value_or(limit);
}

}  // namespace bindisc
