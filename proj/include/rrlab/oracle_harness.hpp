#pragma once

#include <rrlab/errors.hpp>
#include <rrlab/graph.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace rrlab
{
    enum class CorpusMode
    {
        exhaustive,
        random
    };

    enum class ClassFilter
    {
        any,
        weakly_chordal,
        meyniel,
        odd_hole_free
    };

    auto parse_class_filter(const std::string & name) -> ClassFilter;
    auto class_filter_name(ClassFilter f) -> std::string;
    auto passes_filter(const Graph & g, ClassFilter f) -> bool;

    struct CorpusSpec
    {
        CorpusMode mode = CorpusMode::exhaustive;
        int min_order = 0;
        int max_order = 0;
        double edge_probability = 0.5;
        /// Number of accepted graphs in random mode; ignored when exhaustive.
        std::size_t sample_count = 0;
        std::uint64_t seed = 0;
        ClassFilter filter = ClassFilter::any;
        /// Largest |t| enumerated by lemma sweeps; 0 means every size for
        /// n <= 6 and at most 5 for n >= 7.
        int max_t_size = 0;
    };

    /// Throws InputError for inverted ranges, p outside [0,1], or exhaustive
    /// enumeration beyond 7 vertices.
    void validate_spec(const CorpusSpec & spec);

    /// Labeled graph whose edge set is `mask`, bit k standing for the k-th
    /// vertex pair in graph6 (upper triangle, column) order.
    auto labeled_graph(int n, std::uint64_t mask) -> Graph;

    /// Pull-based stream of all 2^(n(n-1)/2) labeled graphs on n <= 7
    /// vertices, in increasing mask order.
    class LabeledGraphEnumerator
    {
    public:
        explicit LabeledGraphEnumerator(int n);

        auto next() -> std::optional<Graph>;
        auto total() const -> std::uint64_t { return _total; }

    private:
        int _n;
        std::uint64_t _total;
        std::uint64_t _next = 0;
    };

    auto enumerate_labeled_graphs(int n) -> LabeledGraphEnumerator;

    /// Random-graph generator: std::mt19937_64 seeded with `seed`. Each
    /// vertex pair in graph6 order draws u = (engine() >> 11) * 2^-53 and
    /// becomes an edge iff u < p. In streams, each graph's order is drawn
    /// first as min + engine() % (max - min + 1).
    class RandomGraphStream
    {
    public:
        RandomGraphStream(int min_order, int max_order, double p, std::uint64_t seed);

        auto next() -> Graph;

    private:
        int _min_order, _max_order;
        double _p;
        std::mt19937_64 _engine;
    };

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    class SamplerGaveUp : public InputError
    {
    public:
        using InputError::InputError;
    };

    /// Tracks acceptance over consecutive windows of candidates and gives up
    /// when a full window accepts at a rate below 1e-4.
    class AcceptanceWindow
    {
    public:
        static constexpr std::uint64_t window = 100000;
        static constexpr double min_rate = 1e-4;

        void record(bool accepted, const std::string & context);

        auto attempts() const -> std::uint64_t { return _attempts; }
        auto accepted() const -> std::uint64_t { return _accepted; }
        auto rejection_rate() const -> double
        {
            return _attempts == 0 ? 0.0 : 1.0 - static_cast<double>(_accepted) / static_cast<double>(_attempts);
        }

    private:
        std::uint64_t _attempts = 0, _accepted = 0;
        std::uint64_t _window_attempts = 0, _window_accepted = 0;
    };

    /// Rejection sampler over a random-mode spec.
    class ClassSampler
    {
    public:
        explicit ClassSampler(const CorpusSpec & spec);

        auto next() -> Graph;
        auto stats() const -> const AcceptanceWindow & { return _window; }

    private:
        ClassFilter _filter;
        RandomGraphStream _stream;
        AcceptanceWindow _window;
    };

    auto sample_in_class(const CorpusSpec & spec) -> ClassSampler;

    enum class Lemma
    {
        rr,
        parity,
        sieve,
        meyniel,
        rrwt,
        pathwt,
        thwt,
        two_pair,
        even_pair,
        color
    };

    auto parse_lemma(const std::string & name) -> Lemma;
    auto lemma_name(Lemma l) -> std::string;
    /// The graph class each lemma's hypothesis asks for.
    auto lemma_class(Lemma l) -> ClassFilter;

    enum class Verdict
    {
        pass,
        fail,
        skip
    };

    struct SweepRecord
    {
        std::uint64_t graph_id = 0;
        int t_size = -1;
        int path_length = -1;
        std::string conclusion;
        Verdict verdict = Verdict::pass;
        /// For failures: graph6 plus instance parameters.
        std::string reproduction;
    };

    struct SweepReport
    {
        Lemma lemma = Lemma::rr;
        std::uint64_t graphs = 0;
        std::vector<SweepRecord> records;
        std::uint64_t pass = 0, fail = 0, skip = 0;

        auto summary_line() const -> std::string;
        /// Tab-separated rows (graph, t, len, conclusion, result), the summary
        /// line, then one FAIL line per failing instance.
        auto to_text(bool with_rows = true) const -> std::string;
    };

    /// All instances of `lemma` on one graph. Graphs outside the lemma's
    /// class produce a single skip record.
    auto check_graph(Lemma lemma, const Graph & g, std::uint64_t graph_id, int max_t_size) -> std::vector<SweepRecord>;

    auto run_sweep(Lemma lemma, const CorpusSpec & spec) -> SweepReport;
    /// Sweep over explicitly supplied graphs (ids are positions).
    auto sweep_graphs(Lemma lemma, std::span<const Graph> graphs, int max_t_size = 0) -> SweepReport;
}
