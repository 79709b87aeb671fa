#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bindisc {

/// Outcome of the power-of-two discriminating-moduli test. A recurrence has
/// D(2^k) = 2^k for every k >= 1 exactly when (p mod 4, q mod 4) = (2, 3)
/// and w_0 + w_1 is odd. Parity failure takes precedence when both fail.
enum class Theorem1Result {
    kPowerOfTwoDiscriminating,
    kFailsParity,
    kFailsPqClass,
};

std::string to_string(Theorem1Result result);

struct ClassificationVerdict {
    Theorem1Result result = Theorem1Result::kFailsParity;
    int p_class = 0;  // p mod 4, canonical
    int q_class = 0;  // q mod 4, canonical
    int parity = 0;   // (w0 + w1) mod 2

    bool power_of_two_discriminating() const {
        return result == Theorem1Result::kPowerOfTwoDiscriminating;
    }
};

/// Classifies a recurrence by the residue classes of (p, q) mod 4 and the
/// parity of w0 + w1. Negative inputs classify by canonical residue.
ClassificationVerdict theorem1_classify(std::int64_t p, std::int64_t q, std::int64_t w0,
                                        std::int64_t w1);

/// Validates the classifier against direct discriminator computation:
/// a positive verdict must satisfy D(2^k) = 2^k up to kmax, and a negative
/// verdict must miss at least one residue class mod 2^k for some
/// k <= max(3, kmax). Requires 1 <= kmax <= 14.
bool empirical_cross_check(std::int64_t p, std::int64_t q, std::int64_t w0,
                           std::int64_t w1, unsigned kmax);

/// Result of enumerating every tuple (a, b, p, q) in [0, 2^k)^4 and counting
/// the residue classes hit by the first 2^k terms of the recurrence with
/// initial terms (a, b) and coefficients (p, q), all mod 2^k.
struct Mod2kSearchReport {
    unsigned k = 0;
    std::uint64_t total_tuples = 0;  // 2^(4k)
    /// Tuples (a, b, p, q) whose orbit covers all 2^k classes, in
    /// lexicographic order.
    std::vector<std::array<std::uint32_t, 4>> full_coverage_tuples;
    /// Class count per tuple, indexed by tuple_index().
    std::vector<std::uint8_t> per_tuple_cardinality;

    std::size_t tuple_index(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                            std::uint32_t q) const;
    unsigned cardinality(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                         std::uint32_t q) const;
};

/// Exhaustive search over [0, 2^k)^4. Requires 3 <= k <= 5 (cost grows as
/// 2^(5k)). Embarrassingly parallel over tuples; the report is identical
/// for every thread count.
Mod2kSearchReport exhaustive_mod_2k_search(unsigned k, unsigned threads = 1);

}  // namespace bindisc
