#include "ufa/text_format.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ufa {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const std::size_t eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back(raw.substr(start, i - start));
        }
        if (!line.tokens.empty() && line.tokens.front().front() != '#') lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
    }
    return lines;
}

Index parse_index(const Line& line, std::string_view token, std::size_t limit, const char* what) {
    Index value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line.number, "malformed " + std::string(what) + " '" + std::string(token) + "'");
    if (value >= limit)
        throw ParseError(line.number, std::string(what) + " " + std::string(token) + " out of range");
    return value;
}

std::size_t parse_count(const Line& line, const char* keyword) {
    if (line.tokens.size() != 2) throw ParseError(line.number, std::string("expected '") + keyword + " <count>'");
    std::size_t value = 0;
    const std::string_view token = line.tokens[1];
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line.number, "malformed count '" + std::string(token) + "'");
    return value;
}

}  // namespace

Nfa parse_automaton(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'nfa' header");

    std::optional<std::size_t> states;
    std::optional<std::vector<std::string>> alphabet;
    std::optional<std::vector<Index>> initial, final_states;
    std::vector<Transition> transitions;
    std::unordered_map<std::string, Index> symbols;

    for (const Line& line : lines) {
        const std::string_view keyword = line.tokens[0];
        if (keyword == "nfa") {
            if (states) throw ParseError(line.number, "duplicate 'nfa' header");
            states = parse_count(line, "nfa");
            continue;
        }
        if (!states) throw ParseError(line.number, "missing 'nfa' header");

        if (keyword == "alphabet") {
            if (alphabet) throw ParseError(line.number, "duplicate 'alphabet' line");
            alphabet.emplace();
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                std::string label(line.tokens[i]);
                if (!symbols.emplace(label, static_cast<Index>(alphabet->size())).second)
                    throw ParseError(line.number, "duplicate symbol " + label);
                alphabet->push_back(std::move(label));
            }
        } else if (keyword == "initial" || keyword == "final") {
            auto& target = keyword == "initial" ? initial : final_states;
            if (target) throw ParseError(line.number, "duplicate '" + std::string(keyword) + "' line");
            target.emplace();
            for (std::size_t i = 1; i < line.tokens.size(); ++i)
                target->push_back(parse_index(line, line.tokens[i], *states, "state"));
        } else if (keyword == "trans") {
            if (line.tokens.size() != 4) throw ParseError(line.number, "expected 'trans <src> <sym> <dst>'");
            if (!alphabet) throw ParseError(line.number, "'trans' before 'alphabet' line");
            const Index src = parse_index(line, line.tokens[1], *states, "state");
            const auto sym = symbols.find(std::string(line.tokens[2]));
            if (sym == symbols.end()) throw ParseError(line.number, "unknown symbol " + std::string(line.tokens[2]));
            const Index dst = parse_index(line, line.tokens[3], *states, "state");
            transitions.push_back({src, sym->second, dst});
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(keyword) + "'");
        }
    }

    return Nfa(*states, alphabet.value_or(std::vector<std::string>{}), std::move(transitions),
               initial.value_or(std::vector<Index>{}), final_states.value_or(std::vector<Index>{}));
}

std::string serialize_automaton(const Nfa& nfa) {
    std::ostringstream out;
    out << "nfa " << nfa.state_count() << '\n' << "alphabet";
    for (const std::string& s : nfa.alphabet()) out << ' ' << s;
    out << "\ninitial";
    nfa.initial().for_each([&](Index q) { out << ' ' << q; });
    out << "\nfinal";
    nfa.final_states().for_each([&](Index q) { out << ' ' << q; });
    out << '\n';
    for (const Transition& t : nfa.transitions())
        out << "trans " << t.source << ' ' << nfa.alphabet()[t.symbol] << ' ' << t.target << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'graph' header");

    std::optional<std::size_t> vertices;
    std::vector<Edge> edges;
    for (const Line& line : lines) {
        const std::string_view keyword = line.tokens[0];
        if (keyword == "graph") {
            if (vertices) throw ParseError(line.number, "duplicate 'graph' header");
            vertices = parse_count(line, "graph");
        } else if (keyword == "edge") {
            if (!vertices) throw ParseError(line.number, "missing 'graph' header");
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'edge <u> <v>'");
            const Index u = parse_index(line, line.tokens[1], *vertices, "vertex");
            const Index v = parse_index(line, line.tokens[2], *vertices, "vertex");
            if (u == v) throw ParseError(line.number, "self-loop on vertex " + std::to_string(u));
            edges.push_back({u, v});
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(keyword) + "'");
        }
    }
    return Graph(*vertices, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "edge " << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace ufa
