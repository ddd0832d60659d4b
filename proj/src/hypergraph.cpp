#include "witcount/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

#include "witcount/errors.hpp"
#include "witcount/witness_counter.hpp"

namespace witcount {

namespace {

std::uint64_t edge_mask(const std::vector<int>& edge) {
    std::uint64_t mask = 0;
    for (int u : edge) mask |= std::uint64_t{1} << u;
    return mask;
}

int to_int(const std::string& tok, std::size_t line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

void validate(const Hypergraph& g) {
    if (g.n < 0 || g.n > kMaxHypergraphVertices)
        throw ContractError("vertex count " + std::to_string(g.n) + " outside 0.." +
                            std::to_string(kMaxHypergraphVertices));
    if (g.l < 2) throw ContractError("uniformity l must be at least 2");
    std::set<std::uint64_t> seen;
    for (const auto& e : g.edges) {
        if (static_cast<int>(e.size()) != g.l)
            throw ContractError("edge with " + std::to_string(e.size()) + " vertices in a " +
                                std::to_string(g.l) + "-uniform hypergraph");
        for (int u : e)
            if (u < 0 || u >= g.n) throw ContractError("vertex " + std::to_string(u) + " out of range");
        const auto mask = edge_mask(e);
        if (std::popcount(mask) != g.l) throw ContractError("edge repeats a vertex");
        if (!seen.insert(mask).second) throw ContractError("duplicate edge");
    }
}

Hypergraph parse_hypergraph(std::string_view text) {
    Hypergraph g;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream tokens(line);
        std::string tok;
        if (!have_header) {
            bool have_n = false, have_l = false;
            while (tokens >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + tok + "'");
                const auto key = tok.substr(0, eq);
                const int value = to_int(tok.substr(eq + 1), line_no);
                if (key == "n") {
                    g.n = value;
                    have_n = true;
                } else if (key == "l") {
                    g.l = value;
                    have_l = true;
                } else {
                    throw ParseError(line_no, "unknown header key '" + key + "'");
                }
            }
            if (!have_n || !have_l) throw ParseError(line_no, "header must define n and l");
            have_header = true;
            continue;
        }
        std::vector<int> edge;
        while (tokens >> tok) edge.push_back(to_int(tok, line_no));
        g.edges.push_back(std::move(edge));
        try {
            validate(Hypergraph{g.n, g.l, {g.edges.back()}});
        } catch (const ContractError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) throw ParseError(0, "missing header line 'n=<int> l=<int>'");
    try {
        validate(g);
    } catch (const ContractError& e) {
        throw ParseError(0, e.what());
    }
    return g;
}

std::string format_hypergraph(const Hypergraph& g) {
    std::string out = "n=" + std::to_string(g.n) + " l=" + std::to_string(g.l) + "\n";
    for (const auto& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i]);
        out += "\n";
    }
    return out;
}

Reduction reduce_to_witness_instance(const Hypergraph& g) {
    validate(g);
    if (g.n % g.l != 0) return NoInstance{"n not divisible by l"};
    Instance inst;
    inst.d = g.n;
    inst.k = g.n / g.l;
    inst.target = GF2Vector{g.n == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.n))};
    inst.vectors.reserve(g.edges.size());
    for (const auto& e : g.edges) inst.vectors.push_back(GF2Vector{edge_mask(e)});
    return inst;
}

Integer count_perfect_matchings(const Hypergraph& g, int max_d, const ExecOptions& exec) {
    const auto reduction = reduce_to_witness_instance(g);
    if (std::holds_alternative<NoInstance>(reduction)) return Integer(0);
    const auto& inst = std::get<Instance>(reduction);
    validate(inst, max_d);
    Integer count = count_witnesses(inst, exec).wit.back();
    arith::exact_div(count, arith::factorial(static_cast<unsigned>(inst.k)), "perfect matching correspondence");
    return count;
}

Integer brute_force_matchings(const Hypergraph& g) {
    validate(g);
    if (g.n > kMaxBruteForceVertices)
        throw GuardError("brute-force matching refused: n=" + std::to_string(g.n) + " exceeds " +
                         std::to_string(kMaxBruteForceVertices));
    const std::uint64_t all = g.n == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.n));
    // Edges incident to each vertex. Every matching covers the lowest uncovered
    // vertex with exactly one edge, so each matching is counted once.
    std::vector<std::vector<std::uint64_t>> by_vertex(static_cast<std::size_t>(g.n));
    for (const auto& e : g.edges) {
        const auto mask = edge_mask(e);
        for (int u : e) by_vertex[static_cast<std::size_t>(u)].push_back(mask);
    }
    auto count = [&](auto&& self, std::uint64_t covered) -> mpz_class {
        if (covered == all) return 1;
        const int u = std::countr_one(covered);
        mpz_class total = 0;
        for (auto mask : by_vertex[static_cast<std::size_t>(u)])
            if ((mask & covered) == 0) total += self(self, covered | mask);
        return total;
    };
    return count(count, 0);
}

}  // namespace witcount
