#include "hrecol/instance_io.hpp"

#include "hrecol/errors.hpp"

namespace hrecol {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw InvalidInput(where + ": " + what);
}

const Json& field(const Json& obj, const std::string& where, const char* key)
{
    if (!obj.contains(key))
        fail(where, std::string("missing \"") + key + "\"");
    return obj[key];
}

Vertex as_id(const Json& j, const std::string& where, std::size_t limit)
{
    if (!j.is_number_integer())
        fail(where, "expected a vertex id");
    auto v = j.get<long long>();
    if (v < 0 || static_cast<unsigned long long>(v) >= limit)
        fail(where, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(limit) + ")");
    return static_cast<Vertex>(v);
}

std::vector<Vertex> as_ids(const Json& j, const std::string& where, std::size_t limit)
{
    if (!j.is_array())
        fail(where, "expected an array");
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_id(j[i], where + "/" + std::to_string(i), limit));
    return out;
}

Graph parse_graph(const Json& j, const std::string& where)
{
    if (!j.is_object())
        fail(where, "expected an object");
    const auto& nv = field(j, where, "num_vertices");
    if (!nv.is_number_integer() || nv.get<long long>() < 0)
        fail(where + "/num_vertices", "expected a non-negative integer");
    const auto n = nv.get<std::size_t>();
    if (n >= kNoVertex)
        fail(where + "/num_vertices", "too many vertices");

    std::vector<Edge> edges;
    if (j.contains("edges")) {
        const auto& e = j["edges"];
        if (!e.is_array())
            fail(where + "/edges", "expected an array of pairs");
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto at = where + "/edges/" + std::to_string(i);
            if (!e[i].is_array() || e[i].size() != 2)
                fail(at, "expected a pair");
            edges.emplace_back(as_id(e[i][0], at + "/0", n), as_id(e[i][1], at + "/1", n));
        }
    }
    bool reflexive = false;
    if (j.contains("reflexive")) {
        if (!j["reflexive"].is_boolean())
            fail(where + "/reflexive", "expected a boolean");
        reflexive = j["reflexive"].get<bool>();
    }
    return Graph(n, edges, reflexive);
}

std::vector<Vertex> parse_cycle(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key))
        return {};
    return as_ids(obj[key], where + "/" + key, kNoVertex);
}

} // namespace

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // The library message already names the line and column.
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        throw InvalidInput(pos == std::string::npos ? msg : msg.substr(pos));
    }
}

Instance parse_instance(std::string_view text)
{
    Json j = parse_json(text);
    if (!j.is_object())
        fail("", "instance must be a JSON object");

    Instance inst;
    inst.h = parse_graph(field(j, "", "H"), "/H");
    inst.g = parse_graph(field(j, "", "G"), "/G");
    inst.phi = as_ids(field(j, "", "phi"), "/phi", inst.h.vertex_count());
    inst.psi = as_ids(field(j, "", "psi"), "/psi", inst.h.vertex_count());
    if (inst.phi.size() != inst.g.vertex_count())
        fail("/phi", "length " + std::to_string(inst.phi.size()) + " differs from |V(G)| = " +
                         std::to_string(inst.g.vertex_count()));
    if (inst.psi.size() != inst.g.vertex_count())
        fail("/psi", "length " + std::to_string(inst.psi.size()) + " differs from |V(G)| = " +
                         std::to_string(inst.g.vertex_count()));
    if (j.contains("mode")) {
        const auto& m = j["mode"];
        if (m == "reflexive")
            inst.mode = Mode::reflexive;
        else if (m == "girth5")
            inst.mode = Mode::girth5;
        else
            fail("/mode", "expected \"reflexive\" or \"girth5\"");
    }
    return inst;
}

Json graph_to_json(const Graph& g)
{
    Json out;
    out["num_vertices"] = g.vertex_count();
    const bool reflexive = g.vertex_count() > 0 && g.is_reflexive();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        if (!(reflexive && u == v))
            edges.push_back({u, v});
    out["edges"] = std::move(edges);
    out["reflexive"] = reflexive;
    return out;
}

Json instance_to_json(const Instance& inst)
{
    Json out;
    out["H"] = graph_to_json(inst.h);
    out["G"] = graph_to_json(inst.g);
    out["phi"] = inst.phi;
    out["psi"] = inst.psi;
    out["mode"] = inst.mode == Mode::reflexive ? "reflexive" : "girth5";
    return out;
}

Json verdict_to_json(const Verdict& v)
{
    Json out;
    out["answer"] = v.yes ? "yes" : "no";
    if (v.yes) {
        Json moves = Json::array();
        for (auto m : v.moves)
            moves.push_back({m.vertex, m.colour});
        out["witness"] = {{"moves", std::move(moves)}};
        return out;
    }
    require(v.obstruction.has_value(), "verdict_to_json: NO verdict without obstruction");
    const auto& o = *v.obstruction;
    Json obs;
    obs["type"] = to_string(o.kind);
    obs["cycle"] = o.cycle;
    if (o.root != kNoVertex)
        obs["root"] = o.root;
    if (o.vertex != kNoVertex)
        obs["vertex"] = o.vertex;
    if (!o.tight_cycle.empty())
        obs["tight_cycle"] = o.tight_cycle;
    if (!o.second_cycle.empty())
        obs["second_cycle"] = o.second_cycle;
    if (o.kind == ObstructionKind::free_class_mismatch) {
        obs["phi_core"] = o.phi_core;
        obs["psi_core"] = o.psi_core;
    }
    out["obstruction"] = std::move(obs);
    return out;
}

Verdict parse_verdict(std::string_view text)
{
    Json j = parse_json(text);
    if (!j.is_object())
        fail("", "result must be a JSON object");
    const auto& answer = field(j, "", "answer");
    Verdict v;
    if (answer == "yes") {
        v.yes = true;
        const auto& w = field(j, "", "witness");
        if (!w.is_object())
            fail("/witness", "expected an object");
        const auto& moves = field(w, "/witness", "moves");
        if (!moves.is_array())
            fail("/witness/moves", "expected an array");
        for (std::size_t i = 0; i < moves.size(); ++i) {
            auto at = "/witness/moves/" + std::to_string(i);
            if (!moves[i].is_array() || moves[i].size() != 2)
                fail(at, "expected a [vertex, colour] pair");
            v.moves.push_back({as_id(moves[i][0], at + "/0", kNoVertex), as_id(moves[i][1], at + "/1", kNoVertex)});
        }
        return v;
    }
    if (answer != "no")
        fail("/answer", "expected \"yes\" or \"no\"");

    const auto& o = field(j, "", "obstruction");
    if (!o.is_object())
        fail("/obstruction", "expected an object");
    const auto& type = field(o, "/obstruction", "type");
    auto kind = type.is_string() ? obstruction_kind_from_string(type.get<std::string>()) : std::nullopt;
    if (!kind)
        fail("/obstruction/type", "unknown obstruction type");
    Obstruction obs;
    obs.kind = *kind;
    obs.cycle = parse_cycle(o, "cycle", "/obstruction");
    obs.tight_cycle = parse_cycle(o, "tight_cycle", "/obstruction");
    obs.second_cycle = parse_cycle(o, "second_cycle", "/obstruction");
    obs.phi_core = parse_cycle(o, "phi_core", "/obstruction");
    obs.psi_core = parse_cycle(o, "psi_core", "/obstruction");
    if (o.contains("root"))
        obs.root = as_id(o["root"], "/obstruction/root", kNoVertex);
    if (o.contains("vertex"))
        obs.vertex = as_id(o["vertex"], "/obstruction/vertex", kNoVertex);
    v.obstruction = std::move(obs);
    return v;
}

std::string dump(const Json& j)
{
    return j.dump() + "\n";
}

} // namespace hrecol
