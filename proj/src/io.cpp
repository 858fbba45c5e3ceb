#include "energy/io.hpp"

#include <charconv>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace energy {
namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line_no, const char* what)
{
    Int value{};
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && field.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

Vertex parse_vertex(std::string_view field, std::size_t line_no, std::size_t n)
{
    const auto id = parse_int<long long>(field, line_no, "vertex id");
    if (id < 1 || static_cast<unsigned long long>(id) > n) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " outside [1, " + std::to_string(n) + "]");
    }
    return static_cast<Vertex>(id - 1);
}

}  // namespace

GameGraph parse_instance(std::string_view text, InstanceKind kind)
{
    std::optional<std::size_t> n;
    std::size_t m = 0;
    Weight max_weight = 0;
    std::vector<std::optional<Owner>> owners;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        const auto fields = split_fields(line);
        if (fields.empty() || fields[0] == "c") continue;
        const std::string_view tag = fields[0];

        if (tag == "p") {
            if (n) throw ParseError(line_no, "duplicate problem line");
            if (fields.size() != 5 || fields[1] != "eg") {
                throw ParseError(line_no, "expected 'p eg <n> <m> <W>'");
            }
            const auto nn = parse_int<long long>(fields[2], line_no, "vertex count");
            const auto mm = parse_int<long long>(fields[3], line_no, "edge count");
            max_weight = parse_int<Weight>(fields[4], line_no, "weight bound");
            if (nn < 0 || mm < 0 || max_weight < 0) throw ParseError(line_no, "negative value in problem line");
            // prefix sums over n edges must fit comfortably in 64 bits
            constexpr Weight limit = Weight{1} << 62;
            if (nn > 0 && max_weight > limit / nn) {
                throw ValidationError("line " + std::to_string(line_no) + ": n * W exceeds 2^62");
            }
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            owners.assign(*n, std::nullopt);
            edges.reserve(m);
            continue;
        }
        if (!n) throw ParseError(line_no, "expected problem line before '" + std::string(tag) + "'");

        if (tag == "o") {
            if (fields.size() != 3) throw ParseError(line_no, "expected 'o <v> <A|B>'");
            const Vertex v = parse_vertex(fields[1], line_no, *n);
            if (owners[v]) throw ParseError(line_no, "duplicate owner for vertex " + std::to_string(v + 1));
            if (fields[2] == "A") {
                owners[v] = Owner::Alice;
            } else if (fields[2] == "B") {
                owners[v] = Owner::Bob;
            } else {
                throw ParseError(line_no, "owner must be A or B, got '" + std::string(fields[2]) + "'");
            }
        } else if (tag == "e") {
            if (fields.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <w>'");
            const Vertex u = parse_vertex(fields[1], line_no, *n);
            const Vertex v = parse_vertex(fields[2], line_no, *n);
            const Weight w = parse_int<Weight>(fields[3], line_no, "weight");
            if (w > max_weight || w < -max_weight) {
                throw ValidationError("line " + std::to_string(line_no) + ": weight " + std::to_string(w) +
                                      " exceeds declared W=" + std::to_string(max_weight));
            }
            if (edges.size() == m) throw ParseError(line_no, "more than m = " + std::to_string(m) + " edges");
            edges.push_back({u, v, w});
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
        }
    }

    if (!n) throw ParseError(0, "missing problem line");
    if (edges.size() != m) {
        throw ParseError(0, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    std::vector<Owner> resolved(*n, Owner::Alice);
    for (Vertex v = 0; v < *n; ++v) {
        if (owners[v]) {
            resolved[v] = *owners[v];
        } else if (kind == InstanceKind::Game) {
            throw ParseError(0, "missing owner line for vertex " + std::to_string(v + 1));
        }
    }
    return GameGraph(Digraph(*n, std::move(edges)), std::move(resolved), max_weight);
}

GameGraph parse_instance(std::istream& in, InstanceKind kind)
{
    const std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_instance(text, kind);
}

std::string serialize_instance(const GameGraph& g)
{
    std::ostringstream out;
    const auto& graph = g.graph();
    out << "p eg " << graph.vertex_count() << ' ' << graph.edge_count() << ' ' << g.max_weight() << '\n';
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out << "o " << v + 1 << ' ' << (g.owner(v) == Owner::Alice ? 'A' : 'B') << '\n';
    }
    for (const auto& e : graph.edges()) out << "e " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight << '\n';
    return out.str();
}

std::string format_energy(const EnergyFunction& e)
{
    std::string out;
    for (Vertex v = 0; v < e.size(); ++v) {
        out += "v " + std::to_string(v + 1) + ' ' + e[v].to_string() + '\n';
    }
    return out;
}

std::string format_reach(const ReachMatrix& r)
{
    std::string out = "r " + std::to_string(r.size()) + '\n';
    for (Vertex u = 0; u < r.size(); ++u) {
        for (Vertex v = 0; v < r.size(); ++v) out += r.get(u, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace energy
