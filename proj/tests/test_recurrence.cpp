#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bindisc/recurrence.hpp"
#include "bindisc/valuation.hpp"

using namespace bindisc;

namespace {

// Shared fixture recurrences; negative coefficients and terms on purpose.
const std::vector<BinaryRecurrence> kFixtures = {
    make_recurrence(1, 1, 1, 2),     // 1, 2, 3, 5, 8, 13, ...
    make_recurrence(2, 3, 2, 1),     // 2, 1, 8, 19, 62, 181, ...
    make_recurrence(6, -1, 0, 1),    // 0, 1, 6, 35, ...
    make_recurrence(-3, -7, -5, 4),
    make_recurrence(2, 3, -1, 4),
    make_recurrence(5, -2, 3, -7),
    make_recurrence(0, 1, 0, 1),     // period 2
};

mpz_class pow_int(long base, unsigned long exp) {
    mpz_class out;
    mpz_class b = base;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
    return out;
}

}  // namespace

TEST_CASE("make_recurrence stores inputs unchanged") {
    const BinaryRecurrence fib = make_recurrence(1, 1, 1, 2);
    CHECK(fib.p == 1);
    CHECK(fib.w1 == 2);
    const BinaryRecurrence sal = make_recurrence(2, 3, 2, 1);
    CHECK(sal == family_browkin_salajan(5));
    const BinaryRecurrence period2 = make_recurrence(0, 1, 0, 1);
    CHECK(term_exact(period2, 4) == 0);
}

TEST_CASE("family_shallit") {
    const BinaryRecurrence u1 = family_shallit(1);
    CHECK(u1 == make_recurrence(6, -1, 0, 1));
    // first terms by direct iteration of 6*u_{n+1} - u_n from (0, 1)
    CHECK(term_exact(u1, 0) == 0);
    CHECK(term_exact(u1, 1) == 1);
    CHECK(term_exact(u1, 2) == 6);
    CHECK(term_exact(u1, 3) == 35);
    CHECK(family_shallit(2) == make_recurrence(10, -1, 0, 1));
    CHECK_THROWS_AS(family_shallit(0), std::invalid_argument);
    CHECK_THROWS_AS(family_shallit(-4), std::invalid_argument);
}

TEST_CASE("family_browkin_salajan") {
    CHECK(family_browkin_salajan(5) == make_recurrence(2, 3, 2, 1));
    CHECK(family_browkin_salajan(7) == make_recurrence(2, 3, -1, 4));
    for (const std::int64_t q : {5, 7, 11, 13, 17, 19, 23, 29, 101}) {
        const BinaryRecurrence r = family_browkin_salajan(q);
        CHECK(r.w0 + r.w1 == 3);
    }
    CHECK_THROWS_AS(family_browkin_salajan(4), std::invalid_argument);
    CHECK_THROWS_AS(family_browkin_salajan(9), std::invalid_argument);
    CHECK_THROWS_AS(family_browkin_salajan(3), std::invalid_argument);
    CHECK_THROWS_AS(family_browkin_salajan(-5), std::invalid_argument);
}

TEST_CASE("family_browkin_salajan matches its closed form") {
    // w_n = (3^j - q*(-1)^j) / 4 under j = n + 1
    for (const std::int64_t q : {5, 7, 11, 13}) {
        const BinaryRecurrence r = family_browkin_salajan(q);
        const std::int64_t q_star = ((q - 1) / 2) % 2 == 0 ? q : -q;
        for (unsigned long j = 1; j <= 40; ++j) {
            const mpz_class sign = j % 2 == 0 ? 1 : -1;
            const mpz_class expected = (pow_int(3, j) - q_star * sign) / 4;
            CHECK(term_exact(r, j - 1) == expected);
        }
    }
}

TEST_CASE("term_exact") {
    CHECK(term_exact(make_recurrence(1, 1, 1, 2), 5) == 13);
    CHECK(term_exact(family_browkin_salajan(5), 4) == 62);
    for (const auto& r : kFixtures) CHECK(term_exact(r, 0) == r.w0);
}

TEST_CASE("terms_mod examples") {
    CHECK(terms_mod(family_browkin_salajan(5), 4, 4) ==
          std::vector<std::uint32_t>{2, 1, 0, 3});
    CHECK(terms_mod(make_recurrence(1, 1, 1, 2), 1, 3) ==
          std::vector<std::uint32_t>{0, 0, 0});
    CHECK(terms_mod(lucas_recurrence(2, 3), 4, 4) ==
          std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(terms_mod(kFixtures[0], 0, 1), std::invalid_argument);
}

TEST_CASE("terms_mod agrees with exact terms reduced") {
    const std::vector<std::uint32_t> moduli = {1, 2, 3, 4, 5, 7, 8, 16, 97, kMaxModulus};
    for (const auto& r : kFixtures) {
        for (const std::uint32_t m : moduli) {
            const auto residues = terms_mod(r, m, 512);
            mpz_class cur = static_cast<long>(r.w0), nxt = static_cast<long>(r.w1);
            for (std::size_t i = 0; i < residues.size(); ++i) {
                mpz_class red;
                mpz_class mod = static_cast<unsigned long>(m);
                mpz_mod(red.get_mpz_t(), cur.get_mpz_t(), mod.get_mpz_t());
                REQUIRE(red == static_cast<unsigned long>(residues[i]));
                mpz_class stepped =
                    static_cast<long>(r.p) * nxt + static_cast<long>(r.q) * cur;
                cur = std::move(nxt);
                nxt = std::move(stepped);
            }
        }
    }
}

TEST_CASE("lucas_pair") {
    CHECK(lucas_pair(2, 3, 0) == std::pair<mpz_class, mpz_class>{0, 2});
    CHECK(lucas_pair(2, 3, 2) == std::pair<mpz_class, mpz_class>{2, 10});
    const auto [u4, v4] = lucas_pair(2, 3, 4);
    CHECK(u4 == 20);
    const auto [u2, v2] = lucas_pair(2, 3, 2);
    CHECK(u4 == u2 * v2);
}

TEST_CASE("doubling identity u_{2n} = u_n v_n") {
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 3}, {6, -1}, {1, 1}, {-3, 5}, {2, -1}}) {
        for (std::uint64_t n = 0; n <= 64; ++n) {
            const auto [un, vn] = lucas_pair(p, q, n);
            const auto [u2n, v2n] = lucas_pair(p, q, 2 * n);
            CHECK(u2n == un * vn);
        }
    }
}

TEST_CASE("companion terms are exactly divisible by 2 once in the (2,3) class") {
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 3}, {6, 3}, {2, 7}, {6, -1}, {-2, -1}}) {
        REQUIRE(((p % 4) + 4) % 4 == 2);
        REQUIRE(((q % 4) + 4) % 4 == 3);
        for (std::uint64_t n = 0; n <= 256; ++n) {
            const auto [un, vn] = lucas_pair(p, q, n);
            CHECK(nu2(vn) == 1);
        }
    }
}

TEST_CASE("discriminant") {
    const Delta d1 = discriminant(make_recurrence(1, 1, 0, 0));
    CHECK(d1.value == 5);
    CHECK_FALSE(d1.is_degenerate);
    CHECK_FALSE(d1.p0.has_value());

    const Delta d2 = discriminant(make_recurrence(2, 3, 0, 0));
    CHECK(d2.value == 16);
    CHECK(d2.p0 == 1);
    CHECK(d2.delta0 == 1);

    const Delta d3 = discriminant(make_recurrence(2, -1, 0, 0));
    CHECK(d3.value == 0);
    CHECK(d3.is_degenerate);
    CHECK(d3.p0 == 1);

    // (p mod 4, q mod 4) = (2, 3) forces 16 | p^2 + 4q
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 3}, {6, 3}, {2, 7}, {6, -1}, {10, 19}, {-2, -5}}) {
        const Delta d = discriminant(make_recurrence(p, q, 0, 0));
        REQUIRE(d.delta0.has_value());
        CHECK(d.value == 16 * *d.delta0);
    }
}

TEST_CASE("degenerate case: u_n = n p0^(n-1)") {
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, -1}, {6, -9}, {-6, -9}, {10, -25}}) {
        const Delta d = discriminant(make_recurrence(p, q, 0, 0));
        REQUIRE(d.is_degenerate);
        const std::int64_t p0 = *d.p0;
        for (std::uint64_t n = 1; n <= 64; ++n) {
            const mpz_class expected = static_cast<long>(n) * pow_int(p0, n - 1);
            CHECK(term_exact(lucas_recurrence(p, q), n) == expected);
        }
    }
}

TEST_CASE("degenerate case: nu2(u_m - u_n) = nu2(m - n) for odd p0") {
    for (const auto& [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, -1}, {6, -9}, {-2, -1}, {10, -25}}) {
        const BinaryRecurrence r = lucas_recurrence(p, q);
        std::vector<mpz_class> terms;
        for (std::uint64_t n = 0; n <= 128; ++n) terms.push_back(term_exact(r, n));
        for (std::uint64_t m = 1; m <= 128; ++m)
            for (std::uint64_t n = 0; n < m; ++n)
                REQUIRE(nu2(terms[m] - terms[n]) ==
                        nu2(static_cast<std::int64_t>(m - n)));
    }
}

TEST_CASE("distinct_prefix") {
    CHECK(distinct_prefix(make_recurrence(0, 1, 0, 1), 10) == 2);
    CHECK(distinct_prefix(make_recurrence(1, 1, 1, 2), 100) == 100);
    CHECK(distinct_prefix(make_recurrence(1, 0, 1, 1), 10) == 1);
    CHECK_THROWS_AS(distinct_prefix(kFixtures[0], 0), std::invalid_argument);

    CHECK(first_repeat_index(make_recurrence(0, 1, 0, 1), 10) == 2);
    CHECK_FALSE(first_repeat_index(make_recurrence(1, 1, 1, 2), 64).has_value());
}

TEST_CASE("ModularOrbit bounds and state") {
    CHECK_THROWS_AS(ModularOrbit(kFixtures[0], 0), std::invalid_argument);
    CHECK_THROWS_AS(ModularOrbit(kFixtures[0], kMaxModulus + 1), std::invalid_argument);
    ModularOrbit orbit(make_recurrence(2, 3, 2, 1), 4);
    CHECK(orbit.index() == 0);
    CHECK(orbit.next() == 2);
    CHECK(orbit.index() == 1);
    CHECK(orbit.next() == 1);
    CHECK(orbit.next() == 0);
}
