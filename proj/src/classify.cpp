#include "bindisc/classify.hpp"

#include <bit>
#include <stdexcept>
#include <thread>

#include "bindisc/discriminator.hpp"
#include "bindisc/recurrence.hpp"

namespace bindisc {

namespace {

int mod4(std::int64_t x) {
    return static_cast<int>(((x % 4) + 4) % 4);
}

}  // namespace

std::string to_string(Theorem1Result result) {
    switch (result) {
        case Theorem1Result::kPowerOfTwoDiscriminating: return "POWER_OF_TWO_DISCRIMINATING";
        case Theorem1Result::kFailsParity: return "FAILS_PARITY";
        case Theorem1Result::kFailsPqClass: return "FAILS_PQ_CLASS";
    }
    throw std::logic_error("to_string: unknown Theorem1Result");
}

ClassificationVerdict theorem1_classify(std::int64_t p, std::int64_t q, std::int64_t w0,
                                        std::int64_t w1) {
    ClassificationVerdict v;
    v.p_class = mod4(p);
    v.q_class = mod4(q);
    v.parity = static_cast<int>((w0 ^ w1) & 1);  // parity of w0 + w1, overflow-free
    if (v.parity == 0)
        v.result = Theorem1Result::kFailsParity;
    else if (v.p_class == 2 && v.q_class == 3)
        v.result = Theorem1Result::kPowerOfTwoDiscriminating;
    else
        v.result = Theorem1Result::kFailsPqClass;
    return v;
}

bool empirical_cross_check(std::int64_t p, std::int64_t q, std::int64_t w0,
                           std::int64_t w1, unsigned kmax) {
    if (kmax < 1 || kmax > 14)
        throw std::invalid_argument("empirical_cross_check: requires 1 <= kmax <= 14");
    const ClassificationVerdict verdict = theorem1_classify(p, q, w0, w1);
    const BinaryRecurrence r = make_recurrence(p, q, w0, w1);
    if (verdict.power_of_two_discriminating()) {
        try {
            return verify_condition(r, kmax);
        } catch (const RepeatedTermsError&) {
            return false;  // repeated terms cannot discriminate
        }
    }
    // A negative verdict only claims a missed residue class at some
    // k <= max(3, kmax), not any particular discriminator value.
    const unsigned klimit = std::max(3u, kmax);
    for (unsigned k = 1; k <= klimit; ++k)
        if (!is_power_of_two_permutation(r, k)) return true;
    return false;
}

std::size_t Mod2kSearchReport::tuple_index(std::uint32_t a, std::uint32_t b,
                                           std::uint32_t p, std::uint32_t q) const {
    const std::uint32_t m = std::uint32_t{1} << k;
    if (a >= m || b >= m || p >= m || q >= m)
        throw std::invalid_argument("tuple_index: components must lie in [0, 2^k)");
    return ((static_cast<std::size_t>(a) * m + b) * m + p) * m + q;
}

unsigned Mod2kSearchReport::cardinality(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                                        std::uint32_t q) const {
    return per_tuple_cardinality[tuple_index(a, b, p, q)];
}

Mod2kSearchReport exhaustive_mod_2k_search(unsigned k, unsigned threads) {
    if (k < 3 || k > 5)
        throw std::invalid_argument("exhaustive_mod_2k_search: requires 3 <= k <= 5");
    if (threads < 1) threads = 1;

    const std::uint32_t m = std::uint32_t{1} << k;
    Mod2kSearchReport report;
    report.k = k;
    report.total_tuples = static_cast<std::uint64_t>(m) * m * m * m;
    report.per_tuple_cardinality.assign(report.total_tuples, 0);

    // Residues stay below 2^5, so one 32-bit mask tracks coverage.
    auto scan_a_range = [&](std::uint32_t a_begin, std::uint32_t a_end) {
        for (std::uint32_t a = a_begin; a < a_end; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                for (std::uint32_t p = 0; p < m; ++p)
                    for (std::uint32_t q = 0; q < m; ++q) {
                        std::uint32_t mask = 0;
                        std::uint32_t cur = a, nxt = b;
                        for (std::uint32_t i = 0; i < m; ++i) {
                            mask |= std::uint32_t{1} << cur;
                            const std::uint32_t stepped = (p * nxt + q * cur) & (m - 1);
                            cur = nxt;
                            nxt = stepped;
                        }
                        const std::size_t idx =
                            ((static_cast<std::size_t>(a) * m + b) * m + p) * m + q;
                        report.per_tuple_cardinality[idx] =
                            static_cast<std::uint8_t>(std::popcount(mask));
                    }
    };

    if (threads == 1) {
        scan_a_range(0, m);
    } else {
        // Disjoint slices of the cardinality vector per thread; the merged
        // report cannot depend on the partitioning.
        std::vector<std::thread> pool;
        const std::uint32_t per = (m + threads - 1) / threads;
        for (std::uint32_t a0 = 0; a0 < m; a0 += per)
            pool.emplace_back(scan_a_range, a0, std::min(m, a0 + per));
        for (auto& t : pool) t.join();
    }

    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b)
            for (std::uint32_t p = 0; p < m; ++p)
                for (std::uint32_t q = 0; q < m; ++q)
                    if (report.cardinality(a, b, p, q) == m)
                        report.full_coverage_tuples.push_back({a, b, p, q});
    return report;
}

}  // namespace bindisc
