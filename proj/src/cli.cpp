#include "bindisc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "bindisc/classify.hpp"
#include "bindisc/discriminator.hpp"
#include "bindisc/recurrence.hpp"
#include "bindisc/report.hpp"
#include "bindisc/valuation.hpp"

namespace bindisc {

namespace {

struct FamilyOptions {
    std::string family = "custom";
    std::int64_t k = 1;       // shallit
    std::int64_t q = 5;       // bs prime, or custom coefficient
    std::int64_t p = 0;       // custom
    std::int64_t w0 = 0;      // custom
    std::int64_t w1 = 0;      // custom
};

void add_family_options(CLI::App& cmd, FamilyOptions& o, bool required) {
    CLI::Option* family =
        cmd.add_option("--family", o.family, "fibonacci|salajan|shallit|bs|custom")
            ->check(CLI::IsMember({"fibonacci", "salajan", "shallit", "bs", "custom"}));
    if (required) family->required();
    cmd.add_option("--k", o.k, "shallit family parameter (k >= 1)");
    cmd.add_option("--q", o.q, "bs family prime, or custom coefficient q");
    cmd.add_option("--p", o.p, "custom coefficient p");
    cmd.add_option("--w0", o.w0, "custom initial term w0");
    cmd.add_option("--w1", o.w1, "custom initial term w1");
}

BinaryRecurrence resolve_family(const FamilyOptions& o) {
    if (o.family == "fibonacci") return make_recurrence(1, 1, 1, 2);
    if (o.family == "salajan") return family_browkin_salajan(5);
    if (o.family == "shallit") return family_shallit(o.k);
    if (o.family == "bs") return family_browkin_salajan(o.q);
    return make_recurrence(o.p, o.q, o.w0, o.w1);
}

TableFormat resolve_table_format(const std::string& format) {
    if (format == "csv") return TableFormat::kCsv;
    if (format == "markdown") return TableFormat::kMarkdown;
    throw std::invalid_argument("unknown table format '" + format + "'");
}

int run_seq(const FamilyOptions& fam, std::uint32_t count, std::uint32_t mod,
            const std::string& format, long long offset, std::ostream& out) {
    const BinaryRecurrence r = resolve_family(fam);
    std::vector<mpz_class> terms;
    terms.reserve(count);
    if (mod != 0) {
        for (const std::uint32_t residue : terms_mod(r, mod, count))
            terms.emplace_back(static_cast<unsigned long>(residue));
    } else {
        mpz_class cur = static_cast<long>(r.w0);
        mpz_class nxt = static_cast<long>(r.w1);
        for (std::uint32_t i = 0; i < count; ++i) {
            terms.push_back(cur);
            mpz_class stepped =
                static_cast<long>(r.p) * nxt + static_cast<long>(r.q) * cur;
            cur = std::move(nxt);
            nxt = std::move(stepped);
        }
    }
    if (format == "bfile") {
        out << emit_bfile(terms, offset);
    } else {
        for (const auto& t : terms) out << t.get_str() << "\n";
    }
    return 0;
}

int run_disc(const FamilyOptions& fam, std::uint64_t n, std::uint32_t upto, bool table,
             const std::string& format, unsigned threads, std::ostream& out) {
    const BinaryRecurrence r = resolve_family(fam);
    if (n != 0) {
        out << discriminator_value(r, n) << "\n";
        return 0;
    }
    const std::vector<std::uint32_t> values = discriminator_sequence(r, upto, threads);
    if (table) {
        out << emit_table(group_runs(values), resolve_table_format(format));
    } else {
        for (const std::uint32_t v : values) out << v << "\n";
    }
    return 0;
}

int run_classify(std::int64_t p, std::int64_t q, std::int64_t w0, std::int64_t w1,
                 unsigned kmax, bool json, std::ostream& out) {
    const ClassificationVerdict verdict = theorem1_classify(p, q, w0, w1);
    bool agrees = true;
    if (kmax > 0) agrees = empirical_cross_check(p, q, w0, w1, kmax);
    if (json) {
        nlohmann::json doc{
            {"result", to_string(verdict.result)},
            {"p_class", verdict.p_class},
            {"q_class", verdict.q_class},
            {"parity", verdict.parity},
        };
        if (kmax > 0) {
            doc["kmax"] = kmax;
            doc["empirical_agrees"] = agrees;
        }
        out << doc.dump() << "\n";
    } else {
        out << to_string(verdict.result) << "\n";
        if (kmax > 0)
            out << "empirical_cross_check(kmax=" << kmax << "): "
                << (agrees ? "agree" : "DISAGREE") << "\n";
    }
    return agrees ? 0 : 1;
}

int run_table(const std::string& family, std::uint32_t max, const std::string& format,
              unsigned threads, std::ostream& out) {
    FamilyOptions fam;
    fam.family = family;
    const std::vector<std::uint32_t> values =
        discriminator_sequence(resolve_family(fam), max, threads);
    out << emit_table(group_runs(values), resolve_table_format(format));
    return 0;
}

int run_search(unsigned mod_bits, unsigned threads, bool json, bool list,
               std::ostream& out) {
    const Mod2kSearchReport report = exhaustive_mod_2k_search(mod_bits, threads);
    const std::uint32_t m = std::uint32_t{1} << mod_bits;
    bool classifier_match = true;
    for (std::uint32_t a = 0; a < m && classifier_match; ++a)
        for (std::uint32_t b = 0; b < m && classifier_match; ++b)
            for (std::uint32_t p = 0; p < m && classifier_match; ++p)
                for (std::uint32_t q = 0; q < m; ++q) {
                    const bool full = report.cardinality(a, b, p, q) == m;
                    const bool predicted =
                        theorem1_classify(p, q, a, b).power_of_two_discriminating();
                    if (full != predicted) {
                        classifier_match = false;
                        break;
                    }
                }
    if (json) {
        out << nlohmann::json{{"mod_bits", mod_bits},
                              {"total_tuples", report.total_tuples},
                              {"full_coverage", report.full_coverage_tuples.size()},
                              {"classifier_match", classifier_match}}
                   .dump()
            << "\n";
    } else {
        out << "tuples: " << report.total_tuples << "\n";
        out << "full_coverage: " << report.full_coverage_tuples.size() << "\n";
        out << "classifier_match: " << (classifier_match ? "yes" : "no") << "\n";
        if (list)
            for (const auto& [a, b, p, q] : report.full_coverage_tuples)
                out << a << " " << b << " " << p << " " << q << "\n";
    }
    return classifier_match ? 0 : 1;
}

// Each verify suite re-derives one of the library's checked facts over a
// configurable range; exit 1 reports a counterexample.
int run_verify(const std::string& suite, const FamilyOptions& fam, unsigned depth,
               std::uint64_t nmax, std::ostream& out) {
    if (suite == "theorem2") {
        const BinaryRecurrence r = family_browkin_salajan(5);
        const std::vector<std::uint32_t> brute =
            discriminator_sequence(r, static_cast<std::uint32_t>(nmax));
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            const std::uint64_t closed = salajan_closed_form(n);
            if (brute[n - 1] != closed) {
                out << "counterexample: n=" << n << " brute=" << brute[n - 1]
                    << " closed=" << closed << "\n";
                return 1;
            }
        }
        out << "theorem2: closed form matches brute force for n in [1, " << nmax << "]\n";
        return 0;
    }
    if (suite == "theorem1") {
        const unsigned kmax = depth == 0 ? 8 : depth;
        const Mod2kSearchReport report = exhaustive_mod_2k_search(3);
        const std::uint32_t m = 8;
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                for (std::uint32_t p = 0; p < m; ++p)
                    for (std::uint32_t q = 0; q < m; ++q) {
                        const bool full = report.cardinality(a, b, p, q) == m;
                        const bool predicted =
                            theorem1_classify(p, q, a, b).power_of_two_discriminating();
                        if (full != predicted) {
                            out << "counterexample: tuple (" << a << "," << b << "," << p
                                << "," << q << ")\n";
                            return 1;
                        }
                    }
        std::mt19937_64 rng(0x7e0151);
        std::uniform_int_distribution<std::int64_t> coeff(-1000000, 1000000);
        for (int i = 0; i < 200; ++i) {
            const std::int64_t p = coeff(rng), q = coeff(rng);
            const std::int64_t w0 = coeff(rng), w1 = coeff(rng);
            if (!empirical_cross_check(p, q, w0, w1, kmax)) {
                out << "counterexample: (" << p << "," << q << "," << w0 << "," << w1
                    << ")\n";
                return 1;
            }
        }
        out << "theorem1: mod-8 search matches the classifier on 4096 tuples; "
               "200 random cross-checks at kmax="
            << kmax << "\n";
        return 0;
    }
    if (suite == "lemma2") {
        const std::uint64_t ell_max = depth == 0 ? 4096 : depth;
        for (std::uint64_t ell = 1; ell <= ell_max; ++ell)
            for (std::uint64_t k = 1; k <= ell; ++k)
                if (!lemma2_first(ell, k)) {
                    out << "counterexample: lemma2_first(" << ell << "," << k << ")\n";
                    return 1;
                }
        for (unsigned k = 3; k <= 12; ++k) {
            const std::uint64_t pow2k = std::uint64_t{1} << k;
            for (std::uint64_t ell = 3; ell <= pow2k; ++ell) {
                if (ell == 4) continue;
                if (!lemma2_second(k, ell)) {
                    out << "counterexample: lemma2_second(" << k << "," << ell << ")\n";
                    return 1;
                }
            }
        }
        out << "lemma2: both inequalities hold (ell <= " << ell_max
            << "; k <= 12 exhaustive)\n";
        return 0;
    }
    if (suite == "kummer") {
        const std::uint64_t n_max = depth == 0 ? 512 : depth;
        // Independent route: nu2(n!) by Legendre's formula, never by carries.
        const auto nu2_factorial = [](std::uint64_t n) {
            std::uint64_t total = 0;
            for (std::uint64_t pw = 2; pw <= n; pw *= 2) total += n / pw;
            return total;
        };
        for (std::uint64_t n = 0; n <= n_max; ++n)
            for (std::uint64_t k = 0; k <= n; ++k) {
                const std::uint64_t expected =
                    nu2_factorial(n) - nu2_factorial(k) - nu2_factorial(n - k);
                if (nup_binomial(2, n, k) != expected) {
                    out << "counterexample: nup_binomial(2," << n << "," << k << ")\n";
                    return 1;
                }
            }
        out << "kummer: carry counting matches Legendre's formula for n <= " << n_max
            << "\n";
        return 0;
    }
    if (suite == "appearance") {
        const unsigned kmax = depth == 0 ? 14 : depth;
        const std::int64_t p = fam.family == "custom" ? fam.p : 2;
        const std::int64_t q = fam.family == "custom" ? fam.q : 3;
        for (unsigned k = 1; k <= kmax; ++k) {
            const std::uint32_t target = std::uint32_t{1} << k;
            const std::uint64_t z = index_of_appearance(p, q, target);
            if (z != target) {
                out << "counterexample: z(2^" << k << ") = " << z << "\n";
                return 1;
            }
        }
        out << "appearance: z(2^k) = 2^k for k <= " << kmax << " with (p,q)=(" << p << ","
            << q << ")\n";
        return 0;
    }
    if (suite == "shift") {
        const unsigned kmax = depth == 0 ? 12 : depth;
        const std::int64_t p = fam.family == "custom" ? fam.p : 2;
        const std::int64_t q = fam.family == "custom" ? fam.q : 3;
        for (unsigned k = 1; k <= kmax; ++k) {
            const std::uint64_t n_max = (std::uint64_t{1} << k) - 1;
            if (!shift_congruence_check(p, q, k, n_max)) {
                out << "counterexample: shift congruence fails at k=" << k << "\n";
                return 1;
            }
        }
        out << "shift: congruence holds for k <= " << kmax << " with (p,q)=(" << p << ","
            << q << ")\n";
        return 0;
    }
    if (suite == "condition") {
        const unsigned kmax = depth == 0 ? 10 : depth;
        const BinaryRecurrence r = resolve_family(fam);
        if (!verify_condition(r, kmax)) {
            out << "counterexample: D(2^k) != 2^k for some k <= " << kmax << "\n";
            return 1;
        }
        out << "condition: D(2^k) = 2^k for k <= " << kmax << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"discriminators of binary recurrent integer sequences"};
    app.require_subcommand(1);

    FamilyOptions seq_fam;
    std::uint32_t seq_count = 0;
    std::uint32_t seq_mod = 0;
    std::string seq_format = "text";
    long long seq_offset = 0;
    CLI::App* seq = app.add_subcommand("seq", "print terms of a recurrence");
    add_family_options(*seq, seq_fam, true);
    seq->add_option("--count", seq_count, "number of terms")->required();
    seq->add_option("--mod", seq_mod, "reduce terms modulo this value")
        ->check(CLI::Range(std::uint32_t{1}, kMaxModulus));
    seq->add_option("--format", seq_format, "text|bfile")
        ->check(CLI::IsMember({"text", "bfile"}));
    seq->add_option("--offset", seq_offset, "b-file index of the first term");

    FamilyOptions disc_fam;
    std::uint64_t disc_n = 0;
    std::uint32_t disc_upto = 0;
    bool disc_table = false;
    std::string disc_format = "markdown";
    unsigned disc_threads = 1;
    CLI::App* disc = app.add_subcommand("disc", "discriminator values");
    add_family_options(*disc, disc_fam, true);
    CLI::Option* disc_n_opt = disc->add_option("--n", disc_n, "single value D(n)");
    CLI::Option* disc_upto_opt =
        disc->add_option("--upto", disc_upto, "sequence D(1..N)");
    disc_n_opt->excludes(disc_upto_opt);
    disc->add_flag("--table", disc_table, "group equal values into table rows");
    disc->add_option("--format", disc_format, "csv|markdown (with --table)")
        ->check(CLI::IsMember({"csv", "markdown"}));
    disc->add_option("--threads", disc_threads, "candidate window parallelism");

    std::int64_t cls_p = 0, cls_q = 0, cls_w0 = 0, cls_w1 = 0;
    unsigned cls_kmax = 0;
    bool cls_json = false;
    CLI::App* cls = app.add_subcommand("classify", "power-of-two discriminating test");
    cls->add_option("--p", cls_p)->required();
    cls->add_option("--q", cls_q)->required();
    cls->add_option("--w0", cls_w0)->required();
    cls->add_option("--w1", cls_w1)->required();
    cls->add_option("--kmax", cls_kmax, "also cross-check empirically up to 2^kmax");
    cls->add_flag("--json", cls_json, "machine-readable output");

    std::string verify_suite;
    FamilyOptions verify_fam;
    verify_fam.family = "salajan";
    unsigned verify_depth = 0;
    std::uint64_t verify_nmax = 4096;
    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
    verify
        ->add_option("suite", verify_suite,
                     "theorem1|theorem2|lemma2|kummer|appearance|shift|condition")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "lemma2", "kummer", "appearance",
                               "shift", "condition"}));
    add_family_options(*verify, verify_fam, false);
    verify->add_option("--depth", verify_depth, "suite-specific range bound");
    verify->add_option("--nmax", verify_nmax, "range for theorem2");

    std::string table_family;
    std::uint32_t table_max = 0;
    std::string table_format = "markdown";
    unsigned table_threads = 1;
    CLI::App* table = app.add_subcommand("table", "grouped discriminator table");
    table->add_option("family", table_family, "fibonacci|salajan")
        ->required()
        ->check(CLI::IsMember({"fibonacci", "salajan"}));
    table->add_option("--max", table_max, "largest n")->required();
    table->add_option("--format", table_format, "markdown|csv")
        ->check(CLI::IsMember({"csv", "markdown"}));
    table->add_option("--threads", table_threads, "candidate window parallelism");

    unsigned search_bits = 0;
    unsigned search_threads = 1;
    bool search_json = false;
    bool search_list = false;
    CLI::App* search = app.add_subcommand("search", "exhaustive mod-2^k coverage search");
    search->add_option("--mod-bits", search_bits, "k in [3, 5]")->required();
    search->add_option("--threads", search_threads, "tuple parallelism");
    search->add_flag("--json", search_json, "machine-readable output");
    search->add_flag("--list", search_list, "list full-coverage tuples");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (seq->parsed())
            return run_seq(seq_fam, seq_count, seq_mod, seq_format, seq_offset, out);
        if (disc->parsed()) {
            if (disc_n == 0 && disc_upto == 0)
                throw std::invalid_argument("disc: requires --n or --upto");
            return run_disc(disc_fam, disc_n, disc_upto, disc_table, disc_format,
                            disc_threads, out);
        }
        if (cls->parsed())
            return run_classify(cls_p, cls_q, cls_w0, cls_w1, cls_kmax, cls_json, out);
        if (verify->parsed())
            return run_verify(verify_suite, verify_fam, verify_depth, verify_nmax, out);
        if (table->parsed())
            return run_table(table_family, table_max, table_format, table_threads, out);
        if (search->parsed())
            return run_search(search_bits, search_threads, search_json, search_list, out);
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bindisc
