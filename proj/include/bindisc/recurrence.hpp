#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bindisc {

/// Largest supported modulus for residue computations (m < 2^31), so that
/// products of two residues always fit in unsigned 64-bit arithmetic.
inline constexpr std::uint32_t kMaxModulus = 0x7fffffffu;

/// A second-order linear recurrence w_{n+2} = p*w_{n+1} + q*w_n with
/// integer coefficients and initial terms w_0, w_1. Indexing starts at 0.
struct BinaryRecurrence {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t w0 = 0;
    std::int64_t w1 = 0;

    friend bool operator==(const BinaryRecurrence&, const BinaryRecurrence&) = default;
};

BinaryRecurrence make_recurrence(std::int64_t p, std::int64_t q, std::int64_t w0,
                                 std::int64_t w1);

/// Lucas sequence for coefficients (p, q): initial terms (0, 1).
BinaryRecurrence lucas_recurrence(std::int64_t p, std::int64_t q);

/// Companion of the Lucas sequence: initial terms (2, p).
BinaryRecurrence companion_recurrence(std::int64_t p, std::int64_t q);

/// U(k): coefficients (4k+2, -1), initial terms (0, 1). Requires k >= 1.
BinaryRecurrence family_shallit(std::int64_t k);

/// u_q for a prime q >= 5: coefficients (2, 3), initial terms
/// ((3+q*)/4, (9-q*)/4) with q* = (-1)^((q-1)/2) * q. Both divisions are
/// exact for every prime q >= 5. q = 5 gives 2, 1, 8, 19, 62, 181, ...
BinaryRecurrence family_browkin_salajan(std::int64_t prime_q);

/// Exact n-th term under arbitrary-precision arithmetic.
mpz_class term_exact(const BinaryRecurrence& r, std::uint64_t n);

/// (u_n, v_n) for the Lucas sequence with coefficients (p, q) and its
/// companion, evaluated exactly.
std::pair<mpz_class, mpz_class> lucas_pair(std::int64_t p, std::int64_t q, std::uint64_t n);

/// Streams residues of a recurrence modulo m. Each emitted residue equals
/// the exact term reduced to the canonical representative in [0, m); the
/// state is a pair of machine-word residues and advancing never touches
/// arbitrary-precision arithmetic.
class ModularOrbit {
  public:
    ModularOrbit(const BinaryRecurrence& r, std::uint32_t modulus);

    std::uint32_t modulus() const { return static_cast<std::uint32_t>(m_); }
    /// Index of the term the next call to next() yields.
    std::uint64_t index() const { return index_; }

    /// Residue of the current term; advances the orbit by one step.
    std::uint32_t next() {
        const std::uint64_t out = cur_;
        const std::uint64_t stepped = (p_ * nxt_ + q_ * cur_) % m_;
        cur_ = nxt_;
        nxt_ = stepped;
        ++index_;
        return static_cast<std::uint32_t>(out);
    }

  private:
    std::uint64_t m_;
    std::uint64_t p_;
    std::uint64_t q_;
    std::uint64_t cur_;
    std::uint64_t nxt_;
    std::uint64_t index_ = 0;
};

/// First `count` residues of r modulo m, canonical representatives in [0, m).
std::vector<std::uint32_t> terms_mod(const BinaryRecurrence& r, std::uint32_t m,
                                     std::uint64_t count);

/// Characteristic discriminant p^2 + 4q of the recurrence, with the derived
/// quantities p0 = p/2 (p even) and delta0 = (p^2+4q)/16 (when divisible).
struct Delta {
    std::int64_t value = 0;
    bool is_degenerate = false;             // value == 0
    std::optional<std::int64_t> p0;         // set when p is even
    std::optional<std::int64_t> delta0;     // set when 16 | value
};

Delta discriminant(const BinaryRecurrence& r);

/// Index of the first term that equals an earlier term (exact comparison),
/// scanning at most the first `limit` terms. Empty when no repeat occurs.
std::optional<std::uint64_t> first_repeat_index(const BinaryRecurrence& r,
                                                std::uint64_t limit);

/// Largest n <= limit such that w_0, ..., w_{n-1} are pairwise distinct
/// integers. Requires limit >= 1.
std::uint64_t distinct_prefix(const BinaryRecurrence& r, std::uint64_t limit);

}  // namespace bindisc
