// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include <rrlab/decomposition.hpp>
#include <rrlab/errors.hpp>
#include <rrlab/io.hpp>
#include <rrlab/named_graphs.hpp>
#include <rrlab/oracle_harness.hpp>
#include <rrlab/recognition.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rrlab;

namespace
{
    constexpr std::size_t samples = 10000;

    struct Criterion
    {
        int number;
        std::string title;
        std::function<bool(std::ostream &)> run;
    };

    auto exhaustive(int max_n, ClassFilter filter) -> CorpusSpec
    {
        return {CorpusMode::exhaustive, 0, max_n, 0.5, 0, 0, filter, 0};
    }

    auto sampled(int lo, int hi, double p, std::size_t count, std::uint64_t seed, ClassFilter filter, int t_cap = 0)
        -> CorpusSpec
    {
        return {CorpusMode::random, lo, hi, p, count, seed, filter, t_cap};
    }

    auto describe(const CorpusSpec & spec) -> std::string
    {
        std::ostringstream out;
        if (spec.mode == CorpusMode::exhaustive)
            out << "exhaustive n=" << spec.min_order << ".." << spec.max_order;
        else
            out << "random n=" << spec.min_order << ".." << spec.max_order << " p=" << spec.edge_probability
                << " count=" << spec.sample_count << " seed=" << spec.seed;
        out << " class=" << class_filter_name(spec.filter);
        if (spec.max_t_size > 0)
            out << " |t|<=" << spec.max_t_size;
        return out.str();
    }

    // Runs one sweep, prints its summary and any failure lines; the sweep
    // must check at least one instance and fail none.
    auto sweep_ok(std::ostream & log, Lemma lemma, const CorpusSpec & spec, std::uint64_t min_pass = 1,
        std::uint64_t * passed = nullptr) -> bool
    {
        auto report = run_sweep(lemma, spec);
        log << "  " << describe(spec) << ": graphs=" << report.graphs << ' ' << report.summary_line() << '\n';
        for (auto & r : report.records)
            if (r.verdict == Verdict::fail)
                log << "  FAIL graph=" << r.graph_id << ' ' << r.reproduction << '\n';
        if (passed)
            *passed += report.pass;
        bool full = spec.mode == CorpusMode::exhaustive || report.graphs == spec.sample_count;
        return report.fail == 0 && report.pass >= min_pass && full;
    }

    // Visits every corpus graph of the class: exhaustive up to max_n, then
    // `samples` random ones over [lo, hi].
    void for_each_corpus_graph(int max_n, int lo, int hi, double p, std::uint64_t seed, ClassFilter filter,
        const std::function<void(const Graph &)> & visit)
    {
        for (int n = 0; n <= max_n; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next())
                if (passes_filter(*g, filter))
                    visit(*g);
        }
        ClassSampler sampler(sampled(lo, hi, p, samples, seed, filter));
        for (std::size_t k = 0; k < samples; ++k)
            visit(sampler.next());
    }

    auto criterion_1(std::ostream & log) -> bool
    {
        bool ok = sweep_ok(log, Lemma::rr, exhaustive(6, ClassFilter::odd_hole_free));
        ok = sweep_ok(log, Lemma::rr, sampled(8, 8, 0.5, samples, 101, ClassFilter::odd_hole_free, 5)) && ok;
        ok = sweep_ok(log, Lemma::rr, sampled(9, 9, 0.5, samples, 102, ClassFilter::odd_hole_free, 5)) && ok;
        return ok;
    }

    auto criterion_2(std::ostream & log) -> bool
    {
        bool ok = sweep_ok(log, Lemma::parity, exhaustive(6, ClassFilter::odd_hole_free));
        ok = sweep_ok(log, Lemma::parity, sampled(8, 8, 0.5, samples, 101, ClassFilter::odd_hole_free, 5)) && ok;
        ok = sweep_ok(log, Lemma::parity, sampled(9, 9, 0.5, samples, 102, ClassFilter::odd_hole_free, 5)) && ok;
        return ok;
    }

    auto criterion_3(std::ostream & log) -> bool
    {
        std::uint64_t instances = 0;
        bool ok = sweep_ok(log, Lemma::sieve, sampled(7, 9, 0.5, 4000, 303, ClassFilter::any, 5), 1, &instances);
        log << "  sieve instances checked: " << instances << '\n';
        return ok && instances >= samples;
    }

    auto criterion_4(std::ostream & log) -> bool
    {
        bool ok = sweep_ok(log, Lemma::meyniel, exhaustive(6, ClassFilter::meyniel));
        ok = sweep_ok(log, Lemma::meyniel, sampled(7, 9, 0.8, samples, 404, ClassFilter::meyniel)) && ok;
        return ok;
    }

    auto criterion_5(std::ostream & log) -> bool
    {
        bool ok = true;
        for (auto lemma : {Lemma::rrwt, Lemma::pathwt}) {
            ok = sweep_ok(log, lemma, exhaustive(6, ClassFilter::weakly_chordal)) && ok;
            ok = sweep_ok(log, lemma, sampled(7, 9, 0.5, samples, 505, ClassFilter::weakly_chordal, 5)) && ok;
        }
        return ok;
    }

    auto criterion_6(std::ostream & log) -> bool
    {
        // Each thwt record validates the tree and, for n <= 8, compares
        // find_star_cutset with the brute-force search.
        bool ok = sweep_ok(log, Lemma::thwt, exhaustive(7, ClassFilter::weakly_chordal));
        ok = sweep_ok(log, Lemma::thwt, sampled(8, 8, 0.5, samples, 606, ClassFilter::weakly_chordal)) && ok;
        ok = sweep_ok(log, Lemma::thwt, sampled(9, 10, 0.5, samples, 607, ClassFilter::weakly_chordal)) && ok;
        return ok;
    }

    auto criterion_7(std::ostream & log) -> bool
    {
        bool ok = true;
        for (auto & [name, g] : std::vector<std::pair<std::string, Graph>>{
                 {"C5", named::cycle(5)}, {"C7", named::cycle(7)}, {"complement(C7)", complement(named::cycle(7))}}) {
            bool library = star_cutset_exists_bruteforce(g).has_value();
            bool definition = oracle::has_star_cutset(g);
            log << "  " << name << ": star cutset brute force=" << library << " definition=" << definition << '\n';
            ok = ok && ! library && ! definition;
        }

        std::uint64_t checked = 0, failures = 0;
        for_each_corpus_graph(7, 8, 10, 0.5, 707, ClassFilter::weakly_chordal, [&](const Graph & g) {
            if (g.order() < 3)
                return;
            ++checked;
            if (! find_star_cutset(g) && ! find_star_cutset(complement(g))) {
                ++failures;
                log << "  FAIL corollary graph6=" << to_graph6(g) << '\n';
            }
        });
        log << "  corollary via find_star_cutset: graphs=" << checked << " failures=" << failures << '\n';

        // Definition-level cross-check on the exhaustive part.
        std::uint64_t oracle_checked = 0, oracle_failures = 0;
        for (int n = 3; n <= 6; ++n) {
            LabeledGraphEnumerator all(n);
            while (auto g = all.next()) {
                if (! oracle::weakly_chordal(*g))
                    continue;
                ++oracle_checked;
                if (! oracle::has_star_cutset(*g) && ! oracle::has_star_cutset(complement(*g)))
                    ++oracle_failures;
            }
        }
        log << "  corollary via definitional oracle: graphs=" << oracle_checked << " failures=" << oracle_failures << '\n';
        return ok && failures == 0 && oracle_failures == 0 && checked > 0;
    }

    auto criterion_8(std::ostream & log) -> bool
    {
        bool ok = sweep_ok(log, Lemma::two_pair, exhaustive(7, ClassFilter::weakly_chordal));
        ok = sweep_ok(log, Lemma::two_pair, sampled(8, 10, 0.5, samples, 808, ClassFilter::weakly_chordal)) && ok;
        ok = sweep_ok(log, Lemma::even_pair, exhaustive(7, ClassFilter::meyniel)) && ok;
        ok = sweep_ok(log, Lemma::even_pair, sampled(8, 10, 0.8, samples, 809, ClassFilter::meyniel)) && ok;
        return ok;
    }

    auto criterion_9(std::ostream & log) -> bool
    {
        bool ok = sweep_ok(log, Lemma::color, exhaustive(7, ClassFilter::weakly_chordal));
        ok = sweep_ok(log, Lemma::color, sampled(8, 10, 0.5, samples, 909, ClassFilter::weakly_chordal)) && ok;
        return ok;
    }

    auto criterion_10(std::ostream & log) -> bool
    {
        bool ok = true;
        std::vector<std::pair<Lemma, CorpusSpec>> specs{
            {Lemma::rr, sampled(8, 9, 0.5, 500, 1010, ClassFilter::odd_hole_free, 5)},
            {Lemma::sieve, sampled(7, 9, 0.5, 300, 1011, ClassFilter::any, 4)},
            {Lemma::meyniel, exhaustive(5, ClassFilter::any)},
            {Lemma::pathwt, sampled(7, 9, 0.5, 300, 1012, ClassFilter::weakly_chordal)},
            {Lemma::thwt, sampled(8, 10, 0.5, 500, 1013, ClassFilter::weakly_chordal)},
            {Lemma::even_pair, sampled(7, 10, 0.8, 500, 1014, ClassFilter::meyniel)},
            {Lemma::color, sampled(7, 10, 0.5, 500, 1015, ClassFilter::weakly_chordal)},
        };
        for (auto & [lemma, spec] : specs) {
            auto first = run_sweep(lemma, spec).to_text();
            auto second = run_sweep(lemma, spec).to_text();
            bool same = first == second;
            log << "  lemma=" << lemma_name(lemma) << ' ' << describe(spec) << ": " << first.size() << " bytes, "
                << (same ? "identical" : "DIFFERENT") << '\n';
            ok = ok && same;
        }
        return ok;
    }
}

int main()
{
    std::vector<Criterion> criteria{
        {1, "RR lemma trichotomy on odd-hole-free graphs", criterion_1},
        {2, "stable-t parity claim", criterion_2},
        {3, "sieve identity", criterion_3},
        {4, "Meyniel path lemma", criterion_4},
        {5, "weakly chordal path lemmas (rrwt, pathwt)", criterion_5},
        {6, "star-cutset decomposition of weakly chordal graphs", criterion_6},
        {7, "graph or complement has a star cutset; C5, C7, complement(C7) have none", criterion_7},
        {8, "2-pairs in weakly chordal graphs, even pairs in Meyniel graphs", criterion_8},
        {9, "coloring uses omega colors on weakly chordal graphs", criterion_9},
        {10, "byte-identical sweep reports", criterion_10},
    };

    int failed = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        }
        catch (const std::exception & e) {
            log << "  error: " << e.what() << '\n';
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << std::fixed
                  << std::setprecision(1) << seconds << "s)\n"
                  << log.str() << std::flush;
        failed += ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
