#include "bindisc/discriminator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace bindisc {

namespace {

// Dense seen-set over [0, n); the c(m) <= m scan touches each residue at
// most once, so m bits is the right size.
class SeenBits {
  public:
    explicit SeenBits(std::uint32_t n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    bool test_and_set(std::uint32_t i) {
        std::uint64_t& word = words_[i >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (word & bit) return true;
        word |= bit;
        return false;
    }

  private:
    std::vector<std::uint64_t> words_;
};

void check_modulus(std::uint32_t m, const char* who) {
    if (m < 1 || m > kMaxModulus)
        throw std::invalid_argument(std::string(who) + ": modulus must be in [1, 2^31)");
}

// max - min + 1 over the first n exact terms; bounds every discriminating
// modulus when the terms are distinct.
mpz_class spread_bound(const BinaryRecurrence& r, std::uint64_t n) {
    mpz_class cur = static_cast<long>(r.w0);
    mpz_class nxt = static_cast<long>(r.w1);
    mpz_class lo = cur, hi = cur;
    for (std::uint64_t i = 1; i < n; ++i) {
        if (cur < lo) lo = cur;
        if (cur > hi) hi = cur;
        mpz_class stepped = static_cast<long>(r.p) * nxt + static_cast<long>(r.q) * cur;
        cur = std::move(nxt);
        nxt = std::move(stepped);
    }
    if (cur < lo) lo = cur;
    if (cur > hi) hi = cur;
    return hi - lo + 1;
}

[[noreturn]] void throw_repeated_terms(const BinaryRecurrence& r, std::uint64_t n) {
    const auto idx = first_repeat_index(r, n);
    if (!idx)
        throw std::logic_error("discriminator: scan exceeded the spread bound on distinct terms");
    throw RepeatedTermsError(*idx);
}

// Fills c(m) for m in [first, first + count) across threads. Values are
// deterministic, so the cache contents do not depend on scheduling.
void prefetch_window(DiscriminatorCache& cache, std::uint64_t first, std::uint32_t count,
                     unsigned threads) {
    std::atomic<std::uint32_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::uint32_t i = cursor.fetch_add(1);
            if (i >= count) return;
            const std::uint64_t m = first + i;
            if (m > kMaxModulus) return;
            cache.collision_index(static_cast<std::uint32_t>(m));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// Smallest m >= start with c(m) >= n. `bound_terms` is the prefix length
// whose spread bounds the scan; the bound is only materialized if the scan
// runs suspiciously far, so the common path never evaluates exact terms.
// `window_end` persists across calls so cached regions are not re-prefetched.
std::uint32_t scan_for_discriminator(DiscriminatorCache& cache, std::uint64_t n,
                                     std::uint64_t start, std::optional<mpz_class>& bound,
                                     std::uint64_t bound_terms, unsigned threads,
                                     std::uint64_t& window_end) {
    std::uint64_t m = std::max(n, start);
    for (;; ++m) {
        if (m > kMaxModulus)
            throw std::overflow_error("discriminator: value exceeds the 2^31 modulus limit");
        if (!bound && m > 4 * n + 64) bound = spread_bound(cache.recurrence(), bound_terms);
        if (bound && *bound < m) throw_repeated_terms(cache.recurrence(), n);
        if (threads > 1 && m >= window_end) {
            const std::uint32_t window = 32 * threads;
            prefetch_window(cache, m, window, threads);
            window_end = m + window;
        }
        if (cache.collision_index(static_cast<std::uint32_t>(m)) >= n)
            return static_cast<std::uint32_t>(m);
    }
}

void check_term_count(std::uint64_t n, const char* who) {
    if (n < 1 || n > kMaxModulus)
        throw std::invalid_argument(std::string(who) + ": term count must be in [1, 2^31)");
}

}  // namespace

RepeatedTermsError::RepeatedTermsError(std::uint64_t index)
    : std::domain_error("discriminator: term " + std::to_string(index) +
                        " repeats an earlier term"),
      first_repeat_index(index) {}

std::uint32_t DiscriminatorCache::collision_index(std::uint32_t m) {
    check_modulus(m, "collision_index");
    {
        std::shared_lock lock(mutex_);
        if (const auto it = cache_.find(m); it != cache_.end()) return it->second;
    }
    const std::uint32_t value = compute(m);
    {
        std::unique_lock lock(mutex_);
        cache_.emplace(m, value);  // idempotent: recomputation yields the same value
    }
    return value;
}

std::uint32_t DiscriminatorCache::compute(std::uint32_t m) const {
    ModularOrbit orbit(rec_, m);
    SeenBits seen(m);
    for (std::uint32_t i = 0;; ++i) {
        // Pigeonhole: a collision occurs by i = m at the latest.
        if (seen.test_and_set(orbit.next())) return i;
    }
}

std::uint32_t collision_index(DiscriminatorCache& cache, std::uint32_t m) {
    return cache.collision_index(m);
}

bool discriminates(const BinaryRecurrence& r, std::uint32_t m, std::uint64_t n) {
    check_modulus(m, "discriminates");
    if (n < 1) throw std::invalid_argument("discriminates: requires n >= 1");
    if (n > m) return false;
    ModularOrbit orbit(r, m);
    SeenBits seen(m);
    for (std::uint64_t i = 0; i < n; ++i)
        if (seen.test_and_set(orbit.next())) return false;
    return true;
}

std::uint32_t discriminator_value(const BinaryRecurrence& r, std::uint64_t n) {
    DiscriminatorCache cache(r);
    return discriminator_value(cache, n);
}

std::uint32_t discriminator_value(DiscriminatorCache& cache, std::uint64_t n) {
    check_term_count(n, "discriminator_value");
    std::optional<mpz_class> bound;
    std::uint64_t window_end = 0;
    return scan_for_discriminator(cache, n, n, bound, n, 1, window_end);
}

std::vector<std::uint32_t> discriminator_sequence(const BinaryRecurrence& r,
                                                  std::uint32_t count, unsigned threads) {
    check_term_count(count, "discriminator_sequence");
    DiscriminatorCache cache(r);
    std::optional<mpz_class> bound;
    std::uint64_t window_end = 0;
    std::vector<std::uint32_t> out;
    out.reserve(count);
    std::uint32_t candidate = 1;
    for (std::uint64_t n = 1; n <= count; ++n) {
        candidate =
            scan_for_discriminator(cache, n, candidate, bound, count, threads, window_end);
        out.push_back(candidate);
    }
    return out;
}

ClosedFormExponents salajan_exponents(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("salajan_exponents: requires n >= 1");
    if (n > (std::uint64_t{1} << 62))
        throw std::overflow_error("salajan_exponents: n too large");
    ClosedFormExponents out;
    out.e = static_cast<unsigned>(std::bit_width(n - 1));  // minimal e with 2^e >= n
    unsigned __int128 pow5 = 1;
    const unsigned __int128 five_n = static_cast<unsigned __int128>(5) * n;
    while (4 * pow5 < five_n) {  // minimal f with 5^f >= 5n/4, no floating point
        pow5 *= 5;
        ++out.f;
    }
    return out;
}

std::uint64_t salajan_closed_form(std::uint64_t n) {
    const ClosedFormExponents exps = salajan_exponents(n);
    const unsigned __int128 pow2 = static_cast<unsigned __int128>(1) << exps.e;
    unsigned __int128 pow5 = 1;
    for (unsigned i = 0; i < exps.f; ++i) pow5 *= 5;
    return static_cast<std::uint64_t>(std::min(pow2, pow5));
}

bool is_power_of_two_permutation(const BinaryRecurrence& r, unsigned k) {
    if (k > 25)
        throw std::length_error("is_power_of_two_permutation: k > 25 exceeds the seen-set budget");
    const std::uint32_t m = std::uint32_t{1} << k;
    return discriminates(r, m, m);
}

bool verify_condition(const BinaryRecurrence& r, unsigned kmax) {
    if (kmax < 1 || kmax > 25)
        throw std::invalid_argument("verify_condition: requires 1 <= kmax <= 25");
    for (unsigned k = 1; k <= kmax; ++k) {
        const std::uint32_t m = std::uint32_t{1} << k;
        if (!discriminates(r, m, m)) {
            // Either D(2^k) > 2^k, or the terms themselves repeat and the
            // discriminator is undefined here; tell the two apart exactly.
            if (const auto idx = first_repeat_index(r, m)) throw RepeatedTermsError(*idx);
            return false;
        }
        // discriminates(r, 2^k, 2^k) plus the lower bound D(n) >= n pins
        // D(2^k) = 2^k; no smaller modulus needs scanning.
    }
    return true;
}

bool shift_congruence_check(std::int64_t p, std::int64_t q, unsigned k,
                            std::uint64_t n_max) {
    const auto mod4 = [](std::int64_t x) { return ((x % 4) + 4) % 4; };
    if (mod4(p) != 2 || mod4(q) != 3)
        throw std::invalid_argument(
            "shift_congruence_check: stated only for (p mod 4, q mod 4) = (2, 3)");
    if (k < 1 || k > 20)
        throw std::invalid_argument("shift_congruence_check: requires 1 <= k <= 20");
    const std::uint32_t modulus = std::uint32_t{1} << (k + 1);
    const std::uint32_t shift = std::uint32_t{1} << k;
    const BinaryRecurrence lucas = lucas_recurrence(p, q);
    ModularOrbit low(lucas, modulus);
    ModularOrbit high(lucas, modulus);
    for (std::uint32_t i = 0; i < shift; ++i) high.next();
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint32_t expected = (low.next() + shift) & (modulus - 1);
        if (high.next() != expected) return false;
    }
    return true;
}

}  // namespace bindisc
