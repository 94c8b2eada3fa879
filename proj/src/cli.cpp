#include "hrecol/cli.hpp"

#include "hrecol/errors.hpp"
#include "hrecol/generators.hpp"
#include "hrecol/instance_io.hpp"
#include "hrecol/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hrecol {

namespace {

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw InvalidInput("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

int cmd_solve(const Instance& inst, unsigned threads, std::ostream& out)
{
    auto verdict = solve(inst, {threads});
    out << dump(verdict_to_json(verdict));
    return verdict.yes ? exit_yes : exit_no;
}

int cmd_oracle(const Instance& inst, std::size_t max_states, std::ostream& out)
{
    validate_instance(inst);
    auto search = hom_graph_bfs(inst.g, inst.h, inst.phi, inst.psi, max_states);
    Json j;
    j["answer"] = to_string(search.answer);
    j["states"] = search.states;
    out << dump(j);
    switch (search.answer) {
    case OracleAnswer::yes: return exit_yes;
    case OracleAnswer::no: return exit_no;
    case OracleAnswer::budget_exceeded: return exit_budget_exceeded;
    }
    return exit_contract_violation;
}

int cmd_verify(const Instance& inst, const Verdict& result, std::ostream& out)
{
    Json j;
    if (result.yes) {
        auto check = verify_witness(inst, result.moves);
        j["ok"] = check.ok;
        if (!check.ok) {
            j["step"] = check.failed_step;
            j["reason"] = check.reason;
        }
        out << dump(j);
        return check.ok ? exit_yes : exit_no;
    }
    bool ok = check_obstruction(inst, *result.obstruction);
    j["ok"] = ok;
    if (!ok)
        j["reason"] = "obstruction does not hold for this instance";
    out << dump(j);
    return ok ? exit_yes : exit_no;
}

int cmd_check_input(const std::string& text, std::ostream& out)
{
    Json j;
    try {
        auto inst = parse_instance(text);
        auto report = validate_host(inst.h);
        j["mode"] = inst.mode == Mode::reflexive ? "reflexive" : "girth5";
        j["g_vertices"] = inst.g.vertex_count();
        j["h_vertices"] = inst.h.vertex_count();
        j["h_reflexive"] = report.is_reflexive;
        j["h_triangle_free"] = report.is_triangle_free;
        j["h_girth_at_least_5"] = report.girth_at_least_5;
        j["g_reflexive"] = inst.g.is_reflexive();
        validate_instance(inst);
        j["valid"] = true;
    } catch (const InvalidInput& e) {
        j["valid"] = false;
        j["error"] = e.what();
        out << dump(j);
        return exit_invalid_input;
    }
    out << dump(j);
    return exit_yes;
}

int cmd_reduce_walk(const std::string& text, std::ostream& out)
{
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("H") || !j.contains("walk"))
        throw InvalidInput("expected an object with \"H\" and \"walk\"");
    Json wrapper;
    wrapper["H"] = j["H"];
    wrapper["G"] = {{"num_vertices", 0}};
    wrapper["phi"] = Json::array();
    wrapper["psi"] = Json::array();
    auto h = parse_instance(wrapper.dump()).h;

    const auto& w = j["walk"];
    if (!w.is_array() || w.empty())
        throw InvalidInput("/walk: expected a nonempty array");
    std::vector<Vertex> seq;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is_number_integer() || w[i].get<long long>() < 0 ||
            w[i].get<unsigned long long>() >= h.vertex_count())
            throw InvalidInput("/walk/" + std::to_string(i) + ": vertex out of range");
        seq.push_back(w[i].get<Vertex>());
    }
    if (!is_walk_in(h, seq))
        throw InvalidInput("/walk: consecutive vertices are not adjacent in H");
    Json r;
    r["reduced"] = reduce_walk(Walk(seq)).vertices();
    out << dump(r);
    return exit_yes;
}

struct GenOptions {
    std::string family = "cycle-wrap";
    std::size_t g_len = 13;
    std::size_t h_len = 4;
    std::size_t shift = 1;
    std::uint64_t seed = 0;
    std::size_t gv = 6;
    std::size_t hv = 6;
    std::string variant = "y-wrap";
};

int cmd_gen(const GenOptions& o, std::ostream& out)
{
    Instance inst;
    if (o.family == "cycle-wrap") {
        inst = cycle_wrap(o.g_len, o.h_len, o.shift);
    } else if (o.family == "figure-eight") {
        if (o.variant != "y-wrap" && o.variant != "x-shift")
            throw InvalidInput("--variant must be y-wrap or x-shift");
        inst = figure_eight(o.variant == "y-wrap" ? FigureEightVariant::y_wrap : FigureEightVariant::x_shift);
    } else if (o.family == "c5-rotation") {
        inst = c5_rotation();
    } else if (o.family == "linked-squares") {
        inst = linked_squares();
    } else if (o.family == "random") {
        if (o.gv == 0 || o.hv == 0)
            throw InvalidInput("--gv and --hv must be positive");
        inst = random_instance(o.seed, o.gv, o.hv);
    } else if (o.family == "random-girth5") {
        if (o.gv == 0)
            throw InvalidInput("--gv must be positive");
        inst = random_girth5_instance(o.seed, o.gv);
    } else {
        throw InvalidInput("unknown family " + o.family);
    }
    out << dump(instance_to_json(inst));
    return exit_yes;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reconfiguration of homomorphisms to reflexive triangle-free graphs", "hrecol"};
    app.require_subcommand(1);

    std::string instance_path, result_path, walk_path;
    unsigned threads = 1;
    std::size_t max_states = 1'000'000;
    GenOptions gen;

    auto* solve_cmd = app.add_subcommand("solve", "decide reachability and print a witness or obstruction");
    solve_cmd->add_option("instance", instance_path, "instance file, - for stdin")->required();
    solve_cmd->add_option("--threads", threads, "solve components concurrently")->check(CLI::Range(1u, 256u));

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search of the reconfiguration graph");
    oracle_cmd->add_option("instance", instance_path, "instance file, - for stdin")->required();
    oracle_cmd->add_option("--max-states", max_states, "state budget")->check(CLI::Range(1ULL, 4'000'000'000ULL));

    auto* verify_cmd = app.add_subcommand("verify", "replay a witness or re-check an obstruction");
    verify_cmd->add_option("instance", instance_path, "instance file")->required();
    verify_cmd->add_option("result", result_path, "result file from solve")->required();

    auto* gen_cmd = app.add_subcommand("gen", "emit an instance of a named family");
    gen_cmd->add_option("--family", gen.family, "cycle-wrap | figure-eight | c5-rotation | linked-squares | random | random-girth5");
    gen_cmd->add_option("--g-len", gen.g_len, "cycle-wrap: length of G");
    gen_cmd->add_option("--h-len", gen.h_len, "cycle-wrap: length of H");
    gen_cmd->add_option("--shift", gen.shift, "cycle-wrap: rotation of psi");
    gen_cmd->add_option("--seed", gen.seed, "random families: seed");
    gen_cmd->add_option("--gv", gen.gv, "random families: max |V(G)|");
    gen_cmd->add_option("--hv", gen.hv, "random: max |V(H)|");
    gen_cmd->add_option("--variant", gen.variant, "figure-eight: y-wrap | x-shift");

    auto* reduce_cmd = app.add_subcommand("reduce-walk", "print the reduced form of a walk");
    reduce_cmd->add_option("input", walk_path, "{\"H\": graph, \"walk\": [...]}, - for stdin")->required();

    auto* check_cmd = app.add_subcommand("check-input", "validate an instance without solving");
    check_cmd->add_option("instance", instance_path, "instance file, - for stdin")->required();

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_invalid_input;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(parse_instance(read_input(instance_path, in)), threads, out);
        if (*oracle_cmd)
            return cmd_oracle(parse_instance(read_input(instance_path, in)), max_states, out);
        if (*verify_cmd) {
            auto inst = parse_instance(read_input(instance_path, in));
            auto result = parse_verdict(read_input(result_path, in));
            return cmd_verify(inst, result, out);
        }
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*reduce_cmd)
            return cmd_reduce_walk(read_input(walk_path, in), out);
        if (*check_cmd)
            return cmd_check_input(read_input(instance_path, in), out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const ContractViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_contract_violation;
    }
    return exit_invalid_input;
}

} // namespace hrecol
