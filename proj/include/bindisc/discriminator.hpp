#pragma once

#include <cstdint>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bindisc/recurrence.hpp"

namespace bindisc {

/// The discriminator D(n) of a sequence is the smallest modulus m such that
/// the first n terms land in n distinct residue classes mod m. It is only
/// defined while the terms themselves are distinct integers; operations
/// below raise RepeatedTermsError past that prefix.
struct RepeatedTermsError : std::domain_error {
    explicit RepeatedTermsError(std::uint64_t index);
    std::uint64_t first_repeat_index;
};

/// Memoized collision indices c(m) for one recurrence, where c(m) is the
/// largest n such that w_0, ..., w_{n-1} are pairwise distinct mod m.
/// Always c(m) <= m. Supports concurrent readers; two threads filling the
/// same modulus converge to the identical value.
class DiscriminatorCache {
  public:
    explicit DiscriminatorCache(BinaryRecurrence r) : rec_(r) {}

    const BinaryRecurrence& recurrence() const { return rec_; }

    /// c(m), computed on a cache miss in O(m) modular steps.
    std::uint32_t collision_index(std::uint32_t m);

  private:
    std::uint32_t compute(std::uint32_t m) const;

    BinaryRecurrence rec_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint32_t, std::uint32_t> cache_;
};

/// Free-function form of DiscriminatorCache::collision_index.
std::uint32_t collision_index(DiscriminatorCache& cache, std::uint32_t m);

/// True iff w_0, ..., w_{n-1} occupy n distinct residue classes mod m.
bool discriminates(const BinaryRecurrence& r, std::uint32_t m, std::uint64_t n);

/// D(n): smallest m >= 1 such that the first n terms are pairwise distinct
/// mod m. The scan starts at m = n (no smaller modulus can separate n terms)
/// and terminates at max - min + 1 of the exact terms. Throws
/// RepeatedTermsError when the first n terms are not distinct integers.
std::uint32_t discriminator_value(const BinaryRecurrence& r, std::uint64_t n);

/// As above, reusing a shared cache of collision indices.
std::uint32_t discriminator_value(DiscriminatorCache& cache, std::uint64_t n);

/// [D(1), ..., D(count)], computed with a monotone candidate pointer over a
/// shared cache. `threads` > 1 evaluates candidate windows concurrently;
/// the result is identical for every thread count.
std::vector<std::uint32_t> discriminator_sequence(const BinaryRecurrence& r,
                                                  std::uint32_t count,
                                                  unsigned threads = 1);

/// Exponents behind the closed-form discriminator of the sequence
/// 2, 1, 8, 19, 62, ...: e minimal with 2^e >= n and f minimal with
/// 4*5^f >= 5n, both found by exact integer comparison.
struct ClosedFormExponents {
    unsigned e = 0;
    unsigned f = 0;
};

ClosedFormExponents salajan_exponents(std::uint64_t n);

/// min(2^e, 5^f) with the exponents above; equals discriminator_value of
/// the sequence 2, 1, 8, 19, 62, ... for every n >= 1.
std::uint64_t salajan_closed_form(std::uint64_t n);

/// True iff n -> w_n mod 2^k hits every residue class, i.e. the first 2^k
/// terms occupy all 2^k classes. Requires k <= 25 (seen-set memory bound).
bool is_power_of_two_permutation(const BinaryRecurrence& r, unsigned k);

/// True iff D(2^k) = 2^k for all 1 <= k <= kmax. Minimality follows from
/// D(n) >= n, so each power of two is tested with a single full-coverage
/// scan. Repeated terms raise RepeatedTermsError as in discriminator_value.
bool verify_condition(const BinaryRecurrence& r, unsigned kmax);

/// Checks u_{n+2^k} = u_n + 2^k (mod 2^(k+1)) on the Lucas orbit of (p, q)
/// for all 0 <= n <= n_max. Only stated for (p mod 4, q mod 4) = (2, 3);
/// other classes are rejected. Requires 1 <= k <= 20.
bool shift_congruence_check(std::int64_t p, std::int64_t q, unsigned k,
                            std::uint64_t n_max);

}  // namespace bindisc
