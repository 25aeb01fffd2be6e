#include <rrlab/decomposition.hpp>
#include <rrlab/errors.hpp>
#include <rrlab/io.hpp>
#include <rrlab/oracle_harness.hpp>
#include <rrlab/pairs_coloring.hpp>
#include <rrlab/parallel.hpp>
#include <rrlab/recognition.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rrlab;

namespace
{
    // Recognition beyond these orders is exponential enough to stall a batch.
    constexpr int meyniel_limit = 30;
    constexpr int omega_limit = 64;

    struct Options
    {
        std::string input;
        std::string graph6;
        std::string format = "auto";
        std::string out;
        std::string lemma;
        std::string klass = "any";
        int exhaustive = -1;
        std::vector<std::string> random;
        int max_t = 0;
        bool summary = false;
    };

    auto read_all(const std::string & path) -> std::string
    {
        if (path == "-") {
            std::ostringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open input file " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    // Edge lists start with two integers; anything else is treated as graph6.
    auto looks_like_edge_list(const std::string & text) -> bool
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            std::istringstream fields(line);
            long long n, m;
            return static_cast<bool>(fields >> n >> m);
        }
        return false;
    }

    auto load_graphs(const Options & opt) -> std::vector<Graph>
    {
        if (! opt.graph6.empty())
            return {from_graph6(opt.graph6)};
        if (opt.input.empty())
            throw InputError("no input: pass --input <path> or --graph <graph6>");
        auto text = read_all(opt.input);
        auto format = opt.format;
        if (format == "auto")
            format = looks_like_edge_list(text) ? "edgelist" : "graph6";
        std::istringstream in(text);
        if (format == "edgelist")
            return {read_edge_list(in)};
        return read_graph6_lines(in);
    }

    auto ids(std::span<const Vertex> vs) -> std::string
    {
        std::string out;
        for (auto v : vs)
            out += ' ' + std::to_string(v);
        return out;
    }

    auto header(std::size_t index, const Graph & g) -> std::string
    {
        return "graph " + std::to_string(index) + " n=" + std::to_string(g.order()) + " graph6=" + to_graph6(g) + '\n';
    }

    void certificate(std::ostream & out, const Graph & g, const std::string & name, const ClassCertificate & cert)
    {
        if (cert.verdict) {
            out << name << "=true\n";
            return;
        }
        if (! validate_witness(g, *cert.witness))
            throw InvariantViolation(name + " witness failed re-validation");
        out << name << "=false witness=" << witness_name(*cert.witness) << '\n';
        auto kind = witness_name(*cert.witness);
        out << kind.substr(0, kind.find('[')) << ids(witness_vertices(*cert.witness)) << '\n';
    }

    auto recognize(const Graph & g) -> std::string
    {
        std::ostringstream out;
        certificate(out, g, "weakly-chordal", is_weakly_chordal(g));
        certificate(out, g, "berge", is_berge(g));
        certificate(out, g, "odd-hole-free", is_odd_hole_free(g));
        if (g.order() <= meyniel_limit)
            certificate(out, g, "meyniel", is_meyniel(g));
        else
            out << "meyniel=skipped n>" << meyniel_limit << '\n';
        return out.str();
    }

    auto decompose_text(const Graph & g) -> std::string
    {
        auto tree = decompose(g);
        if (! validate_tree(g, tree))
            throw InvariantViolation("decomposition tree failed re-validation");
        return to_text(tree);
    }

    auto two_pair_text(const Graph & g) -> std::string
    {
        auto pair = find_two_pair(g);
        if (! pair)
            return "two-pair none complete\n";
        if (! verify_two_pair(g, pair->a, pair->b))
            throw InvariantViolation("2-pair failed re-validation");
        return "two-pair " + std::to_string(pair->a) + ' ' + std::to_string(pair->b) + '\n';
    }

    auto even_pair_text(const Graph & g) -> std::string
    {
        auto pair = find_even_pair_meyniel(g);
        if (! pair)
            return "even-pair none complete\n";
        if (! verify_even_pair(g, pair->a, pair->b))
            throw InvariantViolation("even pair failed re-validation");
        return "even-pair " + std::to_string(pair->a) + ' ' + std::to_string(pair->b) + '\n';
    }

    auto color_text(const Graph & g) -> std::string
    {
        auto coloring = color_weakly_chordal(g);
        if (! is_proper_coloring(g, coloring))
            throw InvariantViolation("coloring failed re-validation");
        std::ostringstream out;
        out << "colors=" << coloring.count;
        if (g.order() <= omega_limit) {
            auto omega = max_clique_bruteforce(g);
            out << " omega=" << omega;
            if (omega != coloring.count)
                throw InvariantViolation("coloring uses " + std::to_string(coloring.count) + " colors, omega is "
                    + std::to_string(omega));
        }
        out << "\ncoloring" << ids(coloring.color) << '\n';
        return out.str();
    }

    // Per-graph verbs: graphs run concurrently, output keeps input order.
    auto run_per_graph(const Options & opt, std::string (*verb)(const Graph &)) -> std::string
    {
        auto graphs = load_graphs(opt);
        auto blocks = parallel_map<std::string>(graphs.size(), [&](std::size_t i) {
            return header(i, graphs[i]) + verb(graphs[i]);
        });
        std::string out;
        for (auto & b : blocks)
            out += b;
        return out;
    }

    auto corpus_spec(const Options & opt) -> CorpusSpec
    {
        CorpusSpec spec;
        spec.filter = parse_class_filter(opt.klass);
        spec.max_t_size = opt.max_t;
        if ((opt.exhaustive >= 0) == ! opt.random.empty())
            throw InputError("sweep needs exactly one of --exhaustive <n> or --random <n> <p> <count> <seed>");
        if (opt.exhaustive >= 0) {
            spec.mode = CorpusMode::exhaustive;
            spec.max_order = opt.exhaustive;
        }
        else {
            try {
                spec.mode = CorpusMode::random;
                spec.min_order = spec.max_order = std::stoi(opt.random[0]);
                spec.edge_probability = std::stod(opt.random[1]);
                spec.sample_count = std::stoull(opt.random[2]);
                spec.seed = std::stoull(opt.random[3]);
            }
            catch (const std::logic_error &) {
                throw InputError("--random expects <n> <p> <count> <seed>");
            }
        }
        validate_spec(spec);
        return spec;
    }

    void emit(const Options & opt, const std::string & text)
    {
        if (opt.out.empty()) {
            std::cout << text << std::flush;
            return;
        }
        std::ofstream file(opt.out, std::ios::binary);
        if (! file)
            throw InputError("cannot write output file " + opt.out);
        file << text;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Weakly chordal and Meyniel graph toolkit: recognition, star-cutset decomposition, pairs, lemma sweeps"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App * cmd) {
        cmd->add_option("--input", opt.input, "graph file (edge list or graph6 lines), - for stdin");
        cmd->add_option("--graph", opt.graph6, "inline graph6 string");
        cmd->add_option("--format", opt.format, "input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
        cmd->add_option("--out", opt.out, "write output to this file");
    };

    std::vector<std::pair<CLI::App *, std::string (*)(const Graph &)>> per_graph;
    for (auto [name, help, fn] : std::initializer_list<std::tuple<const char *, const char *, std::string (*)(const Graph &)>>{
             {"recognize", "weakly chordal, Berge, odd-hole-free and Meyniel tests with witnesses", recognize},
             {"decompose", "star-cutset decomposition tree of a weakly chordal graph", decompose_text},
             {"two-pair", "a 2-pair of a weakly chordal graph", two_pair_text},
             {"even-pair", "an even pair of a Meyniel graph", even_pair_text},
             {"color", "optimal coloring of a weakly chordal graph by 2-pair contraction", color_text},
         }) {
        auto cmd = app.add_subcommand(name, help);
        add_input(cmd);
        per_graph.emplace_back(cmd, fn);
    }

    auto lemma_help = "rr|parity|sieve|meyniel|rrwt|pathwt|thwt|2pair|evenpair|color";
    auto verify = app.add_subcommand("verify-lemma", "check every instance of a lemma on the input graphs");
    add_input(verify);
    verify->add_option("--lemma", opt.lemma, lemma_help)->required();
    verify->add_option("--max-t", opt.max_t, "largest |t| enumerated (default: all for n<=6, 5 above)");
    verify->add_flag("--summary", opt.summary, "omit per-instance rows");

    auto sweep = app.add_subcommand("sweep", "run a lemma over a generated corpus");
    sweep->add_option("--lemma", opt.lemma, lemma_help)->required();
    sweep->add_option("--exhaustive", opt.exhaustive, "all labeled graphs with 0..n vertices (n <= 7)");
    sweep->add_option("--random", opt.random, "n p count seed")->expected(4);
    sweep->add_option("--class", opt.klass, "corpus filter: any|wc|meyniel|ohf");
    sweep->add_option("--max-t", opt.max_t, "largest |t| enumerated (default: all for n<=6, 5 above)");
    sweep->add_option("--out", opt.out, "write the report to this file");
    sweep->add_flag("--summary", opt.summary, "omit per-instance rows");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto & [cmd, fn] : per_graph)
            if (cmd->parsed()) {
                emit(opt, run_per_graph(opt, fn));
                return 0;
            }
        auto lemma = parse_lemma(opt.lemma);
        SweepReport report;
        if (verify->parsed()) {
            auto graphs = load_graphs(opt);
            report = sweep_graphs(lemma, graphs, opt.max_t);
        }
        else {
            report = run_sweep(lemma, corpus_spec(opt));
        }
        emit(opt, report.to_text(! opt.summary));
        return report.fail == 0 ? 0 : 1;
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const InvariantViolation & e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    catch (const PreconditionError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
