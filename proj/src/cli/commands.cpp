#include "ufa/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "ufa/automata.hpp"
#include "ufa/bridge.hpp"
#include "ufa/text_format.hpp"

namespace ufa::cli {
namespace {

constexpr std::size_t kMaxSweepVertices = 6;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& document, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << document;
        return;
    }
    std::ofstream file(output, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + output);
    file << document;
}

std::string side(const std::optional<std::size_t>& size, std::size_t cap) {
    return size ? std::to_string(*size) : ">" + std::to_string(cap);
}

// (n+1) * 2^n / 4 as an exact, reduced fraction.
std::string quarter(const Count& value) {
    if (value % 4 == 0) return Count(value / 4).str();
    if (value % 2 == 0) return Count(value / 2).str() + "/2";
    return value.str() + "/4";
}

std::string tightness_line(const TightnessReport& r) {
    std::ostringstream line;
    line << "n=" << r.n << " k=" << r.k << " l=" << r.l << " lower_sq=" << quarter(r.upper_sq)
         << " upper_sq=" << r.upper_sq.str() << " holds=" << (r.holds() ? "yes" : "no");
    return line.str();
}

std::string describe_subsets(const SubsetAutomaton& det) {
    std::ostringstream doc;
    doc << "# " << to_string(det.direction()) << " determinization of a " << det.base_state_count()
        << "-state automaton\n";
    for (Index i = 0; i < det.size(); ++i) doc << "# state " << i << " = " << det.state(i).to_string() << '\n';
    return doc.str();
}

struct Options {
    std::size_t cap = kDefaultCap;
    std::string input;
    std::string output;
    std::string direction = "fwd";
    std::size_t n = 0;
    std::optional<std::size_t> max_n;
};

int cmd_complement(const Options& o, std::ostream& out, std::ostream& err) {
    const Nfa nfa = parse_automaton(read_file(o.input));
    ComplementResult result;
    try {
        result = complement_ufa(nfa, o.cap);
    } catch (const AmbiguousInput& e) {
        err << "error: input is ambiguous; witness: " << nfa.render(e.witness()) << '\n';
        return kPrecondition;
    }
    const BoundReport& r = result.report;
    out << "n=" << r.n << " k=" << side(r.k, o.cap) << " l=" << side(r.l, o.cap) << " chosen=" << to_string(r.chosen)
        << " states=" << r.result_states << " bound_sq=" << r.bound_sq.str() << '\n';
    emit(serialize_automaton(result.automaton), o.output, out);
    return kOk;
}

int cmd_determinize(const Options& o, std::ostream& out) {
    const Nfa nfa = parse_automaton(read_file(o.input));
    const Direction d = o.direction == "fwd" ? Direction::forward : Direction::backward;
    const SubsetAutomaton det = determinize(nfa, d, o.cap);
    out << "direction=" << to_string(d) << " n=" << nfa.state_count() << " states=" << det.size() << '\n';
    emit(describe_subsets(det) + serialize_automaton(det.to_nfa()), o.output, out);
    return kOk;
}

int cmd_check_unambiguous(const Options& o, std::ostream& out) {
    const Nfa nfa = parse_automaton(read_file(o.input));
    const AmbiguityResult r = check_unambiguous(nfa);
    if (r.unambiguous) {
        out << "unambiguous=yes\n";
        return kOk;
    }
    out << "unambiguous=no witness=\"" << nfa.render(*r.witness) << "\" runs=" << count_accepting_runs(nfa, *r.witness)
        << '\n';
    return kPrecondition;
}

int cmd_extract_graph(const Options& o, std::ostream& out, std::ostream& err) {
    const Nfa nfa = parse_automaton(read_file(o.input));
    try {
        emit(serialize_graph(extract_graph(nfa)), o.output, out);
    } catch (const AmbiguousInput& e) {
        err << "error: input is ambiguous; witness: " << nfa.render(e.witness()) << '\n';
        return kPrecondition;
    }
    return kOk;
}

int cmd_graph_to_ufa(const Options& o, std::ostream& out) {
    emit(serialize_automaton(graph_to_ufa(parse_graph(read_file(o.input)))), o.output, out);
    return kOk;
}

int cmd_count_cliques(const Options& o, std::ostream& out) {
    const ProductBoundReport r = verify_product_bound(parse_graph(read_file(o.input)));
    out << "n=" << r.n << " cliques=" << r.cliques.str() << " cocliques=" << r.cocliques.str()
        << " product=" << r.product.str() << " bound=" << r.bound.str() << " holds=" << (r.holds ? "yes" : "no")
        << " min_side=" << (r.min_side_holds ? "yes" : "no") << '\n';
    return r.holds && r.min_side_holds ? kOk : kViolation;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const TightnessReport r = verify_tightness(o.n, o.cap);
    out << tightness_line(r) << '\n';
    emit(serialize_automaton(witness_ufa(o.n)), o.output, out);
    return r.holds() ? kOk : kViolation;
}

int cmd_verify_tightness(const Options& o, std::ostream& out) {
    const std::size_t first = o.max_n ? 0 : o.n;
    const std::size_t last = o.max_n ? *o.max_n : o.n;
    bool all = true;
    for (std::size_t n = first; n <= last; ++n) {
        const TightnessReport r = verify_tightness(n, o.cap);
        out << tightness_line(r) << '\n';
        all = all && r.holds();
    }
    return all ? kOk : kViolation;
}

int cmd_verify_graphs(const Options& o, std::ostream& out, std::ostream& err) {
    const std::size_t max_n = o.max_n.value_or(0);
    if (max_n > kMaxSweepVertices) {
        err << "error: --max-n must be at most " << kMaxSweepVertices << '\n';
        return kPrecondition;
    }
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const GraphSweep s = sweep_graphs(n, [&](const Graph& g, const std::string& why) {
            err << "violation (" << why << ") in graph:\n" << serialize_graph(g);
        });
        out << "n=" << s.n << " graphs=" << s.graphs << " violations=" << s.violations << '\n';
        total += s.violations;
    }
    return total == 0 ? kOk : kViolation;
}

}  // namespace

std::size_t default_cap() {
    if (const char* env = std::getenv("UFA_CAP")) {
        std::size_t value = 0;
        const std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return kDefaultCap;
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Index u = 0; u < n; ++u)
        for (Index v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.push_back({u, v});
    return Graph(n, edges);
}

GraphSweep sweep_graphs(std::size_t n, const std::function<void(const Graph&, const std::string&)>& on_violation) {
    if (n > kMaxSweepVertices) throw std::invalid_argument("graph sweep supports at most 6 vertices");
    GraphSweep sweep;
    sweep.n = n;
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        const Graph g = labeled_graph(n, mask);
        ++sweep.graphs;
        std::vector<std::string> problems;

        const ProductBoundReport bound = verify_product_bound(g);
        if (!bound.holds) problems.push_back("cliques*cocliques > (n+1)*2^n");
        if (!bound.min_side_holds) problems.push_back("min(cliques,cocliques)^2 > (n+1)*2^n");

        Count cover_total = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            VertexSet s(n);
            for (Index v = 0; v < n; ++v)
                if ((bits >> v) & 1u) s.set(v);
            const std::size_t size = s.count();
            if (clique_coclique_partitions(g, s).size() > size + 1)
                problems.push_back("|P_S| > |S|+1 for S=" + s.to_string());
            const std::size_t covers = clique_coclique_covers(g, s).size();
            if (covers > 2 * size + 1) problems.push_back("|R_S| > 2|S|+1 for S=" + s.to_string());
            cover_total += covers;
        }
        if (cover_total != bound.product) problems.push_back("sum of |R_S| != cliques*cocliques");

        if (!problems.empty()) {
            ++sweep.violations;
            if (on_violation)
                for (const std::string& p : problems) on_violation(g, p);
        }
    }
    return sweep;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unambiguous automata complementation and clique/coclique bound toolkit", "ufa"};
    app.require_subcommand(1);

    Options o;
    o.cap = default_cap();

    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", o.cap, "Maximum number of subset states (env UFA_CAP)")
            ->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output,-o", o.output, "Write the document here"); };
    auto add_input = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("input", o.input, what)->required();
    };

    auto* complement = app.add_subcommand("complement", "Complement a UFA via the smaller determinization");
    add_input(complement, "Automaton file");
    add_cap(complement);
    add_output(complement);

    auto* determinize_cmd = app.add_subcommand("determinize", "Forward or backward subset construction");
    add_input(determinize_cmd, "Automaton file");
    determinize_cmd->add_option("--direction", o.direction, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));
    add_cap(determinize_cmd);
    add_output(determinize_cmd);

    auto* check = app.add_subcommand("check-unambiguous", "Decide unambiguity, printing a witness word if ambiguous");
    add_input(check, "Automaton file");

    auto* extract = app.add_subcommand("extract-graph", "Graph of states reachable by a common word");
    add_input(extract, "Automaton file");
    add_output(extract);

    auto* to_ufa = app.add_subcommand("graph-to-ufa", "UFA whose determinizations contain the graph's cliques/cocliques");
    add_input(to_ufa, "Graph file");
    add_output(to_ufa);

    auto* count = app.add_subcommand("count-cliques", "Count cliques and cocliques and check the product bound");
    add_input(count, "Graph file");

    auto* witness = app.add_subcommand("witness", "Write the n-state worst-case UFA and its tightness report");
    witness->add_option("--n", o.n, "Number of states")->required();
    add_cap(witness);
    add_output(witness);

    auto* tightness = app.add_subcommand("verify-tightness", "Tightness reports for one n or for 0..max-n");
    auto* single = tightness->add_option("--n", o.n, "Number of states");
    auto* range = tightness->add_option("--max-n", o.max_n, "Check every n from 0 to this value");
    single->excludes(range);
    add_cap(tightness);

    auto* graphs = app.add_subcommand("verify-graphs", "Exhaustive bound check over all labeled graphs");
    graphs->add_option("--max-n", o.max_n, "Largest vertex count (at most 6)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kPrecondition;
    }

    try {
        if (complement->parsed()) return cmd_complement(o, out, err);
        if (determinize_cmd->parsed()) return cmd_determinize(o, out);
        if (check->parsed()) return cmd_check_unambiguous(o, out);
        if (extract->parsed()) return cmd_extract_graph(o, out, err);
        if (to_ufa->parsed()) return cmd_graph_to_ufa(o, out);
        if (count->parsed()) return cmd_count_cliques(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (tightness->parsed()) {
            if (single->count() == 0 && range->count() == 0) {
                err << "error: verify-tightness needs --n or --max-n\n";
                return kPrecondition;
            }
            return cmd_verify_tightness(o, out);
        }
        if (graphs->parsed()) return cmd_verify_graphs(o, out, err);
    } catch (const StateLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const ParseError& e) {
        err << "error: " << o.input << ": " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    }
    return kPrecondition;
}

}  // namespace ufa::cli
