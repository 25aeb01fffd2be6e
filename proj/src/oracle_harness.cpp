#include <rrlab/oracle_harness.hpp>
#include <rrlab/decomposition.hpp>
#include <rrlab/io.hpp>
#include <rrlab/lemma_lab.hpp>
#include <rrlab/pairs_coloring.hpp>
#include <rrlab/parallel.hpp>
#include <rrlab/recognition.hpp>

#include <bit>
#include <functional>
#include <sstream>

namespace rrlab
{
    auto parse_class_filter(const std::string & name) -> ClassFilter
    {
        if (name == "any")
            return ClassFilter::any;
        if (name == "wc")
            return ClassFilter::weakly_chordal;
        if (name == "meyniel")
            return ClassFilter::meyniel;
        if (name == "ohf")
            return ClassFilter::odd_hole_free;
        throw InputError("unknown class filter '" + name + "' (expected any|wc|meyniel|ohf)");
    }

    auto class_filter_name(ClassFilter f) -> std::string
    {
        switch (f) {
            case ClassFilter::any: return "any";
            case ClassFilter::weakly_chordal: return "wc";
            case ClassFilter::meyniel: return "meyniel";
            case ClassFilter::odd_hole_free: return "ohf";
        }
        return "?";
    }

    auto passes_filter(const Graph & g, ClassFilter f) -> bool
    {
        switch (f) {
            case ClassFilter::any: return true;
            case ClassFilter::weakly_chordal: return is_weakly_chordal(g).verdict;
            case ClassFilter::meyniel: return is_meyniel(g).verdict;
            case ClassFilter::odd_hole_free: return is_odd_hole_free(g).verdict;
        }
        return false;
    }

    void validate_spec(const CorpusSpec & spec)
    {
        if (spec.min_order < 0 || spec.max_order < spec.min_order)
            throw InputError("corpus vertex range is empty or negative");
        if (! (spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
            throw InputError("edge probability must lie in [0,1]");
        if (spec.mode == CorpusMode::exhaustive && spec.max_order > 7)
            throw InputError("exhaustive enumeration is limited to n <= 7");
        if (spec.max_order > 24)
            throw InputError("sweeps are limited to n <= 24");
        if (spec.max_t_size < 0)
            throw InputError("t size cap must be non-negative");
    }

    auto labeled_graph(int n, std::uint64_t mask) -> Graph
    {
        GraphBuilder builder(n);
        unsigned k = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++k)
                if ((mask >> k) & 1u)
                    builder.add_edge(i, j);
        return std::move(builder).build();
    }

    LabeledGraphEnumerator::LabeledGraphEnumerator(int n) :
        _n(n)
    {
        if (n < 0 || n > 7)
            throw InputError("labeled enumeration needs 0 <= n <= 7");
        _total = std::uint64_t{1} << (n * (n - 1) / 2);
    }

    auto LabeledGraphEnumerator::next() -> std::optional<Graph>
    {
        if (_next >= _total)
            return std::nullopt;
        return labeled_graph(_n, _next++);
    }

    auto enumerate_labeled_graphs(int n) -> LabeledGraphEnumerator
    {
        return LabeledGraphEnumerator(n);
    }

    namespace
    {
        auto draw_graph(std::mt19937_64 & engine, int n, double p) -> Graph
        {
            GraphBuilder builder(n);
            for (Vertex j = 1; j < n; ++j)
                for (Vertex i = 0; i < j; ++i) {
                    double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
                    if (u < p)
                        builder.add_edge(i, j);
                }
            return std::move(builder).build();
        }
    }

    RandomGraphStream::RandomGraphStream(int min_order, int max_order, double p, std::uint64_t seed) :
        _min_order(min_order),
        _max_order(max_order),
        _p(p),
        _engine(seed)
    {
        if (min_order < 0 || max_order < min_order)
            throw InputError("random graph order range is empty");
        if (! (p >= 0.0 && p <= 1.0))
            throw InputError("edge probability must lie in [0,1]");
    }

    auto RandomGraphStream::next() -> Graph
    {
        auto span = static_cast<std::uint64_t>(_max_order - _min_order + 1);
        auto n = _min_order + static_cast<int>(_engine() % span);
        return draw_graph(_engine, n, _p);
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw InputError("edge probability must lie in [0,1]");
        std::mt19937_64 engine(seed);
        return draw_graph(engine, n, p);
    }

    void AcceptanceWindow::record(bool accepted, const std::string & context)
    {
        ++_attempts;
        ++_window_attempts;
        if (accepted) {
            ++_accepted;
            ++_window_accepted;
        }
        if (_window_attempts == window) {
            double rate = static_cast<double>(_window_accepted) / static_cast<double>(window);
            if (rate < min_rate)
                throw SamplerGaveUp("class sampler accepted " + std::to_string(_window_accepted) + " of the last "
                    + std::to_string(window) + " candidates (" + context
                    + "); try a different edge probability");
            _window_attempts = 0;
            _window_accepted = 0;
        }
    }

    namespace
    {
        auto sampler_context(const CorpusSpec & spec) -> std::string
        {
            std::ostringstream out;
            out << "class=" << class_filter_name(spec.filter) << " n=" << spec.min_order << ".." << spec.max_order
                << " p=" << spec.edge_probability;
            return out.str();
        }
    }

    ClassSampler::ClassSampler(const CorpusSpec & spec) :
        _filter(spec.filter),
        _stream(spec.min_order, spec.max_order, spec.edge_probability, spec.seed)
    {
        validate_spec(spec);
    }

    auto ClassSampler::next() -> Graph
    {
        while (true) {
            auto g = _stream.next();
            bool accepted = passes_filter(g, _filter);
            _window.record(accepted, "class=" + class_filter_name(_filter));
            if (accepted)
                return g;
        }
    }

    auto sample_in_class(const CorpusSpec & spec) -> ClassSampler
    {
        return ClassSampler(spec);
    }

    namespace
    {
        struct LemmaInfo
        {
            Lemma lemma;
            const char * name;
            ClassFilter hypothesis;
        };

        constexpr LemmaInfo lemma_table[] = {
            {Lemma::rr, "rr", ClassFilter::odd_hole_free},
            {Lemma::parity, "parity", ClassFilter::odd_hole_free},
            {Lemma::sieve, "sieve", ClassFilter::any},
            {Lemma::meyniel, "meyniel", ClassFilter::meyniel},
            {Lemma::rrwt, "rrwt", ClassFilter::weakly_chordal},
            {Lemma::pathwt, "pathwt", ClassFilter::weakly_chordal},
            {Lemma::thwt, "thwt", ClassFilter::weakly_chordal},
            {Lemma::two_pair, "2pair", ClassFilter::weakly_chordal},
            {Lemma::even_pair, "evenpair", ClassFilter::meyniel},
            {Lemma::color, "color", ClassFilter::weakly_chordal},
        };
    }

    auto parse_lemma(const std::string & name) -> Lemma
    {
        for (auto & info : lemma_table)
            if (name == info.name)
                return info.lemma;
        throw InputError("unknown lemma '" + name + "' (expected rr|parity|sieve|meyniel|rrwt|pathwt|thwt|2pair|evenpair|color)");
    }

    auto lemma_name(Lemma l) -> std::string
    {
        for (auto & info : lemma_table)
            if (l == info.lemma)
                return info.name;
        return "?";
    }

    auto lemma_class(Lemma l) -> ClassFilter
    {
        for (auto & info : lemma_table)
            if (l == info.lemma)
                return info.hypothesis;
        return ClassFilter::any;
    }

    auto SweepReport::summary_line() const -> std::string
    {
        return "lemma=" + lemma_name(lemma) + " pass=" + std::to_string(pass) + " fail=" + std::to_string(fail)
            + " skip=" + std::to_string(skip);
    }

    auto SweepReport::to_text(bool with_rows) const -> std::string
    {
        std::ostringstream out;
        auto field = [](int value) { return value < 0 ? std::string("-") : std::to_string(value); };
        auto result_name = [](Verdict v) {
            switch (v) {
                case Verdict::pass: return "pass";
                case Verdict::fail: return "fail";
                case Verdict::skip: return "skip";
            }
            return "?";
        };
        if (with_rows) {
            out << "graph\tt\tlen\tconclusion\tresult\n";
            for (auto & r : records)
                out << r.graph_id << '\t' << field(r.t_size) << '\t' << field(r.path_length) << '\t' << r.conclusion
                    << '\t' << result_name(r.verdict) << '\n';
        }
        out << "graphs=" << graphs << '\n';
        out << summary_line() << '\n';
        for (auto & r : records)
            if (r.verdict == Verdict::fail)
                out << "FAIL graph=" << r.graph_id << ' ' << r.reproduction << '\n';
        return out.str();
    }

    namespace
    {
        auto default_t_cap(int n, int requested) -> int
        {
            if (requested > 0)
                return requested;
            return n <= 6 ? n : 5;
        }

        auto sequence_text(std::span<const Vertex> seq) -> std::string
        {
            std::string out = "[";
            for (std::size_t i = 0; i < seq.size(); ++i)
                out += (i ? "," : "") + std::to_string(seq[i]);
            return out + "]";
        }

        struct InstanceRecorder
        {
            const Graph & g;
            std::uint64_t graph_id;
            Lemma lemma;
            std::vector<SweepRecord> records;

            // Runs one check; checker returns the conclusion name and whether it
            // passed. InvariantViolation and unexpected lemma failures are fails.
            void run(const VertexSet * t, std::span<const Vertex> path, const std::function<std::pair<std::string, bool>()> & check)
            {
                SweepRecord record;
                record.graph_id = graph_id;
                record.t_size = t ? t->size() : -1;
                record.path_length = path.empty() ? -1 : static_cast<int>(path.size()) - 1;
                std::string detail;
                try {
                    auto [conclusion, ok] = check();
                    record.conclusion = conclusion;
                    record.verdict = ok ? Verdict::pass : Verdict::fail;
                }
                catch (const InvariantViolation & e) {
                    record.conclusion = "invariant-violation";
                    record.verdict = Verdict::fail;
                    detail = e.what();
                }
                catch (const PreconditionError & e) {
                    record.conclusion = "precondition";
                    record.verdict = Verdict::skip;
                }
                if (record.verdict == Verdict::fail) {
                    std::ostringstream out;
                    out << "graph6=" << to_graph6(g) << " lemma=" << lemma_name(lemma);
                    if (t)
                        out << " t=" << t->to_string();
                    if (! path.empty())
                        out << " p=" << sequence_text(path);
                    out << " conclusion=" << record.conclusion;
                    if (! detail.empty())
                        out << " detail=\"" << detail << '"';
                    record.reproduction = out.str();
                }
                records.push_back(std::move(record));
            }
        };

        // Anticonnected t with |t| <= cap, in increasing mask order.
        template <typename Visit>
        void for_each_anticonnected(const Graph & g, int cap, Visit visit)
        {
            auto n = g.order();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                if (std::popcount(mask) > cap)
                    continue;
                VertexSet t(n);
                for (Vertex v = 0; v < n; ++v)
                    if ((mask >> v) & 1u)
                        t.insert(v);
                if (is_anticonnected(g, t))
                    visit(t);
            }
        }

        // Chordless paths of g avoiding t, ends a < b both in `ends`.
        template <typename Visit>
        void for_each_path_between(const Graph & g, const VertexSet & ends, const VertexSet & allowed, Visit visit)
        {
            for (auto a : ends)
                for (auto b = ends.next(a); b != -1; b = ends.next(b))
                    for_each_chordless_path(g, a, b, allowed, [&](std::span<const Vertex> seq) {
                        visit(seq);
                        return true;
                    });
        }

        void check_t_path_lemma(InstanceRecorder & rec, int cap, bool stable_only, int min_length, bool odd_only)
        {
            const auto & g = rec.g;
            for_each_anticonnected(g, cap, [&](const VertexSet & t) {
                if (stable_only && ! is_stable(g, t))
                    return;
                auto complete = complete_set(g, t);
                if (complete.size() < 2)
                    return;
                for_each_path_between(g, complete, g.vertices() - t, [&](std::span<const Vertex> seq) {
                    int length = static_cast<int>(seq.size()) - 1;
                    if (length < min_length || (odd_only && length % 2 == 0))
                        return;
                    LemmaInstance inst{g, t, Path{{seq.begin(), seq.end()}}};
                    rec.run(&t, seq, [&]() -> std::pair<std::string, bool> {
                        switch (rec.lemma) {
                            case Lemma::rr: {
                                auto c = check_rr_conclusion(inst);
                                // On odd-hole-free input a Violation cannot come back
                                // (check_rr_conclusion throws instead).
                                return {conclusion_name(c), c.index() != 3};
                            }
                            case Lemma::parity: {
                                bool ok = verify_parity_claim(inst, GraphClassCheck::assume);
                                return {find_leap(inst) ? "leap" : "odd-t-complete-edges", ok};
                            }
                            case Lemma::sieve: {
                                auto s = sieve_identity_check(inst);
                                return {s.reduction_applies ? "identity+mod2" : "identity", s.ok()};
                            }
                            case Lemma::rrwt: {
                                auto v = check_wc_lemma(inst, GraphClassCheck::assume);
                                return {v ? "internal-complete" : "none", v.has_value()};
                            }
                            default: throw InputError("not a t/path lemma");
                        }
                    });
                });
            });
        }

        void check_pathwt(InstanceRecorder & rec, int cap)
        {
            const auto & g = rec.g;
            for_each_anticonnected(g, cap, [&](const VertexSet & t) {
                if (! is_growable_t(g, t) || find_t_extension(g, t))
                    return;
                auto complete = complete_set(g, t);
                for_each_path_between(g, complete, g.vertices() - t, [&](std::span<const Vertex> seq) {
                    Path p{{seq.begin(), seq.end()}};
                    rec.run(&t, seq, [&]() -> std::pair<std::string, bool> {
                        bool ok = check_maximal_T_path_lemma(g, t, p, GraphClassCheck::assume);
                        return {ok ? "inside-C(T)" : "leaves-C(T)", ok};
                    });
                });
            });
        }

        void check_meyniel_instances(InstanceRecorder & rec)
        {
            const auto & g = rec.g;
            for (Vertex v = 0; v < g.order(); ++v) {
                auto others = g.vertices().without(v);
                for_each_path_between(g, g.neighbours(v), others, [&](std::span<const Vertex> seq) {
                    int length = static_cast<int>(seq.size()) - 1;
                    if (length < 3 || length % 2 == 0)
                        return;
                    Path p{{seq.begin(), seq.end()}};
                    VertexSet single(g.order(), {v});
                    rec.run(&single, seq, [&]() -> std::pair<std::string, bool> {
                        bool ok = check_meyniel_lemma(g, v, p, GraphClassCheck::assume);
                        return {ok ? "all-adjacent" : "gap", ok};
                    });
                });
            }
        }

        void check_decomposition(InstanceRecorder & rec)
        {
            const auto & g = rec.g;
            rec.run(nullptr, {}, [&]() -> std::pair<std::string, bool> {
                auto tree = decompose(g);
                if (! validate_tree(g, tree))
                    return {"invalid-tree", false};
                auto found = find_star_cutset(g);
                if (g.order() <= 8 && found.has_value() != star_cutset_exists_bruteforce(g).has_value())
                    return {"oracle-disagreement", false};
                if (g.order() >= 3 && ! found && ! find_star_cutset(complement(g)))
                    return {"corollary-fails", false};
                switch (tree.kind) {
                    case DecompositionTree::Kind::clique: return {"leaf-clique", true};
                    case DecompositionTree::Kind::co_matching: return {"leaf-co-matching", true};
                    case DecompositionTree::Kind::split:
                        return {"split-" + branch_name(tree.cutset->branch), true};
                }
                return {"?", false};
            });
        }

        void check_pair_extraction(InstanceRecorder & rec)
        {
            const auto & g = rec.g;
            rec.run(nullptr, {}, [&]() -> std::pair<std::string, bool> {
                if (rec.lemma == Lemma::two_pair) {
                    auto pair = find_two_pair(g);
                    if (! pair)
                        return {"complete", is_complete(g)};
                    return {"two-pair", verify_two_pair(g, pair->a, pair->b)};
                }
                auto pair = find_even_pair_meyniel(g);
                if (! pair)
                    return {"complete", is_complete(g)};
                return {"even-pair", verify_even_pair(g, pair->a, pair->b)};
            });
        }

        void check_coloring(InstanceRecorder & rec)
        {
            const auto & g = rec.g;
            rec.run(nullptr, {}, [&]() -> std::pair<std::string, bool> {
                auto coloring = color_weakly_chordal(g);
                auto omega = max_clique_bruteforce(g);
                bool ok = is_proper_coloring(g, coloring) && coloring.count == omega;
                return {"colors=" + std::to_string(coloring.count) + ",omega=" + std::to_string(omega), ok};
            });
        }
    }

    auto check_graph(Lemma lemma, const Graph & g, std::uint64_t graph_id, int max_t_size) -> std::vector<SweepRecord>
    {
        InstanceRecorder rec{g, graph_id, lemma, {}};
        if (! passes_filter(g, lemma_class(lemma))) {
            rec.records.push_back(SweepRecord{graph_id, -1, -1, "outside-class", Verdict::skip, {}});
            return std::move(rec.records);
        }
        if (g.order() > 24)
            throw InputError("lemma sweeps are limited to n <= 24");
        auto cap = default_t_cap(g.order(), max_t_size);
        switch (lemma) {
            case Lemma::rr: check_t_path_lemma(rec, cap, false, 3, true); break;
            case Lemma::parity: check_t_path_lemma(rec, cap, true, 3, true); break;
            case Lemma::sieve: check_t_path_lemma(rec, cap, true, 3, true); break;
            case Lemma::rrwt: check_t_path_lemma(rec, cap, false, 3, false); break;
            case Lemma::pathwt: check_pathwt(rec, cap); break;
            case Lemma::meyniel: check_meyniel_instances(rec); break;
            case Lemma::thwt: check_decomposition(rec); break;
            case Lemma::two_pair:
            case Lemma::even_pair: check_pair_extraction(rec); break;
            case Lemma::color: check_coloring(rec); break;
        }
        return std::move(rec.records);
    }

    namespace
    {
        void tally(SweepReport & report, std::vector<SweepRecord> && records)
        {
            for (auto & r : records) {
                switch (r.verdict) {
                    case Verdict::pass: ++report.pass; break;
                    case Verdict::fail: ++report.fail; break;
                    case Verdict::skip: ++report.skip; break;
                }
                report.records.push_back(std::move(r));
            }
        }

        struct Candidate
        {
            std::uint64_t id;
            Graph graph;
        };

        struct Outcome
        {
            bool accepted = false;
            std::vector<SweepRecord> records;
        };

        auto process(Lemma lemma, const CorpusSpec & spec, std::span<const Candidate> batch) -> std::vector<Outcome>
        {
            return parallel_map<Outcome>(batch.size(), [&](std::size_t i) {
                Outcome out;
                out.accepted = passes_filter(batch[i].graph, spec.filter);
                if (out.accepted)
                    out.records = check_graph(lemma, batch[i].graph, batch[i].id, spec.max_t_size);
                return out;
            });
        }
    }

    auto run_sweep(Lemma lemma, const CorpusSpec & spec) -> SweepReport
    {
        validate_spec(spec);
        SweepReport report;
        report.lemma = lemma;
        constexpr std::size_t batch_size = 512;

        if (spec.mode == CorpusMode::exhaustive) {
            std::uint64_t id = 0;
            for (int n = spec.min_order; n <= spec.max_order; ++n) {
                LabeledGraphEnumerator all(n);
                std::vector<Candidate> batch;
                auto flush = [&] {
                    auto outcomes = process(lemma, spec, batch);
                    for (auto & o : outcomes)
                        if (o.accepted) {
                            ++report.graphs;
                            tally(report, std::move(o.records));
                        }
                    batch.clear();
                };
                while (auto g = all.next()) {
                    batch.push_back(Candidate{id++, std::move(*g)});
                    if (batch.size() == batch_size)
                        flush();
                }
                flush();
            }
            return report;
        }

        RandomGraphStream stream(spec.min_order, spec.max_order, spec.edge_probability, spec.seed);
        AcceptanceWindow window;
        auto context = sampler_context(spec);
        std::uint64_t id = 0;
        while (report.graphs < spec.sample_count) {
            std::vector<Candidate> batch;
            for (std::size_t k = 0; k < batch_size; ++k)
                batch.push_back(Candidate{id++, stream.next()});
            auto outcomes = process(lemma, spec, batch);
            for (auto & o : outcomes) {
                if (report.graphs == spec.sample_count)
                    break;
                window.record(o.accepted, context);
                if (o.accepted) {
                    ++report.graphs;
                    tally(report, std::move(o.records));
                }
            }
        }
        return report;
    }

    auto sweep_graphs(Lemma lemma, std::span<const Graph> graphs, int max_t_size) -> SweepReport
    {
        SweepReport report;
        report.lemma = lemma;
        auto results = parallel_map<std::vector<SweepRecord>>(
            graphs.size(), [&](std::size_t i) { return check_graph(lemma, graphs[i], i, max_t_size); });
        report.graphs = graphs.size();
        for (auto & r : results)
            tally(report, std::move(r));
        return report;
    }
}
