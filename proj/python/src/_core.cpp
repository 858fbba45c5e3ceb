#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "energy/alice.hpp"
#include "energy/apnp.hpp"
#include "energy/bob.hpp"
#include "energy/finite.hpp"
#include "energy/generate.hpp"
#include "energy/io.hpp"
#include "energy/reductions.hpp"

namespace py = pybind11;
using namespace energy;

namespace {

using EdgeTuple = std::tuple<Vertex, Vertex, Weight>;

Digraph make_digraph(std::size_t n, const std::vector<EdgeTuple>& edges)
{
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& [u, v, w] : edges) out.push_back({u, v, w});
    return Digraph(n, std::move(out));
}

std::vector<EdgeTuple> edge_tuples(const Digraph& g)
{
    std::vector<EdgeTuple> out;
    for (const auto& e : g.edges()) out.emplace_back(e.from, e.to, e.weight);
    return out;
}

std::vector<std::optional<Weight>> to_python(const EnergyFunction& e)
{
    std::vector<std::optional<Weight>> out;
    out.reserve(e.size());
    for (const auto& x : e) out.push_back(x.is_finite() ? std::optional<Weight>(x.value()) : std::nullopt);
    return out;
}

std::vector<std::vector<bool>> to_python(const ReachMatrix& r)
{
    std::vector<std::vector<bool>> out(r.size(), std::vector<bool>(r.size()));
    for (Vertex u = 0; u < r.size(); ++u) {
        for (Vertex v = 0; v < r.size(); ++v) out[u][v] = r.get(u, v);
    }
    return out;
}

GameGraph make_game(std::size_t n, const std::vector<EdgeTuple>& edges, const std::string& owners, Weight W)
{
    if (owners.size() != n) throw ValidationError("owners must have one letter per vertex");
    std::vector<Owner> parsed;
    for (char c : owners) {
        if (c != 'A' && c != 'B') throw ValidationError(std::string("owner must be A or B, got ") + c);
        parsed.push_back(c == 'A' ? Owner::Alice : Owner::Bob);
    }
    return GameGraph(make_digraph(n, edges), std::move(parsed), W);
}

std::string owner_letters(const GameGraph& g)
{
    std::string out;
    for (Owner o : g.owners()) out += o == Owner::Alice ? 'A' : 'B';
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Minimum sufficient energies for two-player energy games.";

    auto value_error = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", value_error);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    py::class_<GameGraph>(m, "GameGraph")
        .def(py::init(&make_game), py::arg("n"), py::arg("edges"), py::arg("owners"), py::arg("max_weight"),
             "Edges are (u, v, w) with 0-based ids; owners is a string of 'A'/'B' letters.")
        .def_property_readonly("n", &GameGraph::vertex_count)
        .def_property_readonly("edges", [](const GameGraph& g) { return edge_tuples(g.graph()); })
        .def_property_readonly("owners", &owner_letters)
        .def_property_readonly("max_weight", &GameGraph::max_weight)
        .def("__eq__", [](const GameGraph& a, const GameGraph& b) { return a == b; })
        .def("__repr__", [](const GameGraph& g) {
            return "<GameGraph n=" + std::to_string(g.vertex_count()) + " m=" +
                   std::to_string(g.graph().edge_count()) + " W=" + std::to_string(g.max_weight()) + ">";
        });

    m.def("parse", [](const std::string& text) { return parse_instance(text, InstanceKind::Game); },
          py::arg("text"), "Parse a game instance in the text format.");
    m.def("serialize", &serialize_instance, py::arg("game"));

    m.def("solve_all_alice", [](const GameGraph& g) { return to_python(solve_all_alice(g)); }, py::arg("game"));
    m.def("solve_all_bob", [](const GameGraph& g) { return to_python(solve_all_bob(g)); }, py::arg("game"));
    m.def(
        "solve_no_neg_cycles",
        [](const GameGraph& g, bool verify) { return to_python(solve_no_neg_cycles(g, {.verify = verify})); },
        py::arg("game"), py::arg("verify") = false);
    m.def("solve_fixpoint", [](const GameGraph& g) { return to_python(solve_fixpoint(g)); }, py::arg("game"));
    m.def(
        "brute_force", [](const GameGraph& g, std::uint64_t budget) { return to_python(brute_force(g, budget)); },
        py::arg("game"), py::arg("budget") = kDefaultBruteForceBudget);
    m.def(
        "value_iteration",
        [](const GameGraph& g, std::size_t rounds) { return to_python(value_iteration(g, rounds)); },
        py::arg("game"), py::arg("rounds"));

    m.def(
        "apnp",
        [](std::size_t n, const std::vector<EdgeTuple>& edges, Weight W) {
            return to_python(apnp(make_digraph(n, edges), W));
        },
        py::arg("n"), py::arg("edges"), py::arg("max_weight"));
    m.def(
        "apnp_oracle",
        [](std::size_t n, const std::vector<EdgeTuple>& edges, Weight W) {
            return to_python(apnp_oracle(make_digraph(n, edges), W));
        },
        py::arg("n"), py::arg("edges"), py::arg("max_weight"));

    m.def(
        "gen_random",
        [](std::size_t n, std::size_t m, Weight W, std::uint64_t seed, double owner_bias) {
            return gen_random({n, m, W, owner_bias, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("max_weight"), py::arg("seed") = 0, py::arg("owner_bias") = 0.5);
    m.def(
        "gen_no_neg_cycle",
        [](std::size_t n, std::size_t m, Weight W, std::uint64_t seed, double owner_bias) {
            return gen_no_neg_cycle({n, m, W, owner_bias, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("max_weight"), py::arg("seed") = 0, py::arg("owner_bias") = 0.5);

    m.def(
        "has_negative_triangle",
        [](std::size_t n, const std::vector<EdgeTuple>& edges) {
            return has_negative_triangle_via_apnp(make_digraph(n, edges));
        },
        py::arg("n"), py::arg("edges"));
}
