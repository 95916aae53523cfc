#include <robinson/cli.hpp>

#include <robinson/generate.hpp>
#include <robinson/json_io.hpp>
#include <robinson/oracle.hpp>
#include <robinson/pipeline.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace robinson {

namespace {

struct Usage : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string join_rationals(const std::vector<Rational> & xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + to_string(xs[i]);
    return s;
}

BoundVector parse_bound(const std::string & text)
{
    std::string s = text;
    std::replace_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, ' ');
    std::istringstream in(s);
    BoundVector::Storage coeffs;
    int x;
    while (in >> x)
        coeffs.push_back(x);
    if (! in.eof() || coeffs.empty())
        throw Usage("cannot read bound vector '" + text + "'");
    return BoundVector(std::move(coeffs));
}

Json read_json(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw Usage("cannot open " + path);
    try {
        return Json::parse(in);
    }
    catch (const Json::parse_error & e) {
        throw Usage(path + ": " + e.what());
    }
}

Vertex checked_vertex(int one_based, const RobinsonMatrix & m)
{
    if (one_based < 1 || one_based > m.size())
        throw Usage("vertex " + std::to_string(one_based) + " is outside 1.." + std::to_string(m.size()));
    return one_based - 1;
}

// "1->2 [a=2, +(1,0)]" for every step of a closed upper walk
void describe_cycle(std::ostream & out, const RobinsonMatrix & m, const CycleRecord & c)
{
    out << "  cycle " << format_vertices(c.vertices) << "  bound " << to_string(c.bound) << '\n';
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        Vertex a = c.vertices[i], b = c.vertices[i + 1];
        auto step = edge_upper_bound(m, a, b);
        out << "    " << a + 1 << "->" << b + 1 << "  a=" << m.at(a, b) << "  " << (step ? to_string(*step) : "?")
            << '\n';
    }
}

void print_solution(std::ostream & out, const Solution & s)
{
    out << "d  = (" << join_rationals(s.d.values()) << ")\n";
    out << "pi = <" << join_rationals(s.pi.positions) << ">\n";
    out << "verify: ok\n";
}

struct Context
{
    std::ostream & out;
    std::ostream & err;
};

int cmd_validate(Context & cx, const std::string & path)
{
    auto m = load_matrix(path);
    cx.out << "ok: " << m.size() << "x" << m.size() << " Robinson matrix, k = " << m.levels() << '\n';
    return exit_code::feasible;
}

int cmd_solve(Context & cx, const std::string & path, bool json, Method method, const TableOptions & tables)
{
    auto m = load_matrix(path);
    auto result = solve(m, {method, tables});
    if (json) {
        cx.out << to_json(result).dump(2) << '\n';
        return std::holds_alternative<Solution>(result) ? exit_code::feasible : exit_code::infeasible;
    }
    if (auto * s = std::get_if<Solution>(&result)) {
        print_solution(cx.out, *s);
        return exit_code::feasible;
    }
    auto & cert = std::get<InfeasibilityCertificate>(result);
    cx.out << "NO SOLUTION\n";
    for (auto & c : cert.cycles)
        describe_cycle(cx.out, m, c);
    cx.out << cert.explanation << '\n';
    return exit_code::infeasible;
}

int cmd_embed(Context & cx, const std::string & path, const std::string & check, const TableOptions & tables)
{
    auto m = load_matrix(path);
    if (check.empty()) {
        auto result = solve(m, {Method::Auto, tables});
        if (auto * s = std::get_if<Solution>(&result)) {
            cx.out << embedding_to_json(s->d, s->pi).dump(2) << '\n';
            return exit_code::feasible;
        }
        cx.err << "no uniform embedding exists; run 'solve' for the certificate\n";
        return exit_code::infeasible;
    }

    EmbeddingFile file = [&] {
        try {
            return embedding_from_json(read_json(check));
        }
        catch (const std::invalid_argument & e) {
            throw Usage(check + ": " + e.what());
        }
    }();
    if (file.pi.positions.size() != static_cast<std::size_t>(m.size()) || file.d.levels() != m.levels())
        throw Usage(check + ": embedding does not match the matrix size or k");
    if (auto bad = verify_embedding(m, file.d, file.pi)) {
        cx.out << "violation: pair (" << bad->u + 1 << "," << bad->v + 1 << ") has a = " << bad->level << " but gap "
               << to_string(bad->gap) << " is outside (" << to_string(file.d.level_lower(bad->level)) << ", "
               << (file.d.level_upper(bad->level) ? to_string(*file.d.level_upper(bad->level)) : "inf") << ")\n";
        return exit_code::infeasible;
    }
    cx.out << "verify: ok\n";
    return exit_code::feasible;
}

int cmd_bounds(Context & cx, const std::string & path, const TableOptions & tables)
{
    auto m = load_matrix(path);
    cx.out << table_to_json(generate_bound_tables(m, tables)).dump(2) << '\n';
    return exit_code::feasible;
}

int cmd_certify(Context & cx, const std::string & path, const std::string & check, const TableOptions & tables)
{
    auto m = load_matrix(path);
    std::vector<CycleRecord> cycles;
    if (check.empty()) {
        auto result = solve(m, {Method::General, tables});
        if (auto * s = std::get_if<Solution>(&result)) {
            cx.out << "feasible; no certificate\n";
            print_solution(cx.out, *s);
            return exit_code::feasible;
        }
        cycles = std::get<InfeasibilityCertificate>(result).cycles;
    }
    else {
        std::vector<std::vector<Vertex>> walks;
        try {
            walks = certificate_cycles_from_json(read_json(check));
        }
        catch (const std::exception & e) {
            throw Usage(check + ": " + e.what());
        }
        for (auto & w : walks) {
            if (w.size() < 3 || w.front() != w.back())
                throw Usage(format_vertices(w) + " is not a closed walk");
            for (auto v : w)
                checked_vertex(v + 1, m);
            BoundVector bound;
            try {
                bound = walk_bound(m, {w, WalkKind::Upper});
            }
            catch (const IllegalWalk & e) {
                throw Usage(format_vertices(w) + ": " + e.what());
            }
            cycles.push_back({w, bound});
        }
    }

    // re-decide from the cycles alone
    auto recheck = solve_general_k(cycles, m.levels());
    if (auto * d = std::get_if<ThresholdVector>(&recheck)) {
        cx.out << "certificate does not prove infeasibility: d = (" << join_rationals(d->values())
               << ") satisfies every cycle\n";
        return check.empty() ? exit_code::internal : exit_code::feasible;
    }
    cx.out << "certificate confirmed: no d in D^" << m.levels() << " satisfies\n";
    for (auto & c : cycles)
        describe_cycle(cx.out, m, c);
    return exit_code::infeasible;
}

int cmd_gen(Context & cx, int n, int k, std::uint64_t seed, int attempts, int duplicates)
{
    if (n < 1 || k < 1 || attempts < 0 || duplicates < 0)
        throw Usage("gen needs n >= 1, k >= 1 and non-negative counts");
    Rng rng(seed);
    auto m = quantized_instance(n, k, rng);
    if (attempts > 0)
        m = perturb_instance(m, attempts, rng);
    if (duplicates > 0)
        m = inject_duplicates(m, duplicates, rng);

    if (attempts == 0)
        cx.out << "# feasible (quantized)\n";
    else if (m.size() <= oracle::max_direct_vertices && k <= oracle::max_direct_levels)
        cx.out << "# " << (oracle::direct_feasibility(m) ? "feasible" : "infeasible") << " (oracle)\n";
    else
        cx.out << "# " << (std::holds_alternative<Solution>(solve(m)) ? "feasible" : "infeasible") << " (pipeline)\n";
    write_matrix(cx.out, m);
    return exit_code::feasible;
}

int cmd_oracle_paths(Context & cx, const std::string & path, int u, int v, bool lower)
{
    auto m = load_matrix(path);
    auto found = oracle::enumerate_paths_bruteforce(m, checked_vertex(u, m), checked_vertex(v, m),
                                                    lower ? WalkKind::Lower : WalkKind::Upper);
    Json j = Json::array();
    for (auto & p : found)
        j.push_back({{"bound", to_json(p.bound)}, {"path", vertices_to_json(p.path)}});
    cx.out << j.dump(2) << '\n';
    return exit_code::feasible;
}

int cmd_oracle_feasible(Context & cx, const std::string & path)
{
    auto m = load_matrix(path);
    auto s = oracle::direct_feasibility(m);
    if (! s) {
        cx.out << "infeasible\n";
        return exit_code::infeasible;
    }
    cx.out << embedding_to_json(s->d, s->pi).dump(2) << '\n';
    return exit_code::feasible;
}

int cmd_oracle_buffer(Context & cx, const std::string & a_text, const std::string & b_text)
{
    auto a = parse_bound(a_text), b = parse_bound(b_text);
    if (a.levels() != b.levels())
        throw Usage("bound vectors differ in length");
    if (precedes(a, b))
        cx.out << "buffer " << to_string(oracle::buffer_vector(a, b)) << '\n';
    else {
        auto d = oracle::separating_threshold(a, b);
        cx.out << "not comparable; separating d = (" << join_rationals(d.values()) << "): " << to_string(dot(a, d))
               << " > " << to_string(dot(b, d)) << '\n';
    }
    return exit_code::feasible;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Uniform embeddings of Robinson matrices", "robinson-embed"};
    app.require_subcommand(1);

    std::string path, check;
    bool json = false, k2 = false, general = false, exact = false, parallel = false, lower = false;
    int n = 0, k = 0, attempts = 0, duplicates = 0, u = 0, v = 0;
    std::uint64_t seed = 0;
    std::string a_text, b_text;

    auto add_tables = [&](CLI::App * sub) {
        sub->add_flag("--exact", exact, "Exact path pruning (slow, complete)");
        sub->add_flag("--parallel", parallel, "OpenMP bound generation (same output)");
    };

    auto * validate = app.add_subcommand("validate", "Check that a matrix file is a Robinson matrix");
    validate->add_option("matrix", path)->required();

    auto * solve_cmd = app.add_subcommand("solve", "Decide feasibility and construct an embedding");
    solve_cmd->add_option("matrix", path)->required();
    solve_cmd->add_flag("--json", json, "Machine-readable output");
    auto * k2_flag = solve_cmd->add_flag("--k2", k2, "Ratio method (k = 2 only)");
    solve_cmd->add_flag("--general", general, "Elimination for any k")->excludes(k2_flag);
    add_tables(solve_cmd);

    auto * embed = app.add_subcommand("embed", "Print an embedding as JSON, or verify one with --check");
    embed->add_option("matrix", path)->required();
    embed->add_option("--check", check, "Embedding JSON file to verify");
    add_tables(embed);

    auto * bounds = app.add_subcommand("bounds", "Dump the bound table as JSON");
    bounds->add_option("matrix", path)->required();
    add_tables(bounds);

    auto * certify = app.add_subcommand("certify", "Produce or re-check an infeasibility certificate");
    certify->add_option("matrix", path)->required();
    certify->add_option("--check", check, "Certificate JSON file to re-check");
    add_tables(certify);

    auto * gen = app.add_subcommand("gen", "Generate a random Robinson matrix");
    gen->add_option("n", n)->required();
    gen->add_option("k", k)->required();
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--infeasible-attempts", attempts, "Random +-1 entry changes after quantization");
    gen->add_option("--duplicates", duplicates, "Number of vertices to duplicate");

    auto * oracle_cmd = app.add_subcommand("oracle", "Brute-force references for small inputs");
    oracle_cmd->require_subcommand(1);
    auto * paths = oracle_cmd->add_subcommand("paths", "Minimal bounds over all simple paths u -> v");
    paths->add_option("matrix", path)->required();
    paths->add_option("u", u)->required();
    paths->add_option("v", v)->required();
    paths->add_flag("--lower", lower, "Lower-bound paths (maximal bounds)");
    auto * feasible = oracle_cmd->add_subcommand("feasible", "Decide feasibility by exact simplex");
    feasible->add_option("matrix", path)->required();
    auto * buffer = oracle_cmd->add_subcommand("buffer", "Buffer vector of a ⪯ b, or a separating d");
    buffer->add_option("a", a_text)->required();
    buffer->add_option("b", b_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? 0 : exit_code::usage;
    }

    Context cx{out, err};
    TableOptions tables{exact ? Pruning::Exact : Pruning::Bound, parallel};
    Method method = k2 ? Method::RatioK2 : (general ? Method::General : Method::Auto);
    try {
        if (validate->parsed())
            return cmd_validate(cx, path);
        if (solve_cmd->parsed())
            return cmd_solve(cx, path, json, method, tables);
        if (embed->parsed())
            return cmd_embed(cx, path, check, tables);
        if (bounds->parsed())
            return cmd_bounds(cx, path, tables);
        if (certify->parsed())
            return cmd_certify(cx, path, check, tables);
        if (gen->parsed())
            return cmd_gen(cx, n, k, seed, attempts, duplicates);
        if (paths->parsed())
            return cmd_oracle_paths(cx, path, u, v, lower);
        if (feasible->parsed())
            return cmd_oracle_feasible(cx, path);
        if (buffer->parsed())
            return cmd_oracle_buffer(cx, a_text, b_text);
    }
    catch (const ParseError & e) {
        err << path << ": " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const ValidationError & e) {
        err << path << ": not a Robinson matrix: " << e.what() << '\n';
        return exit_code::invalid;
    }
    catch (const InternalError & e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
    catch (const oracle::GuardError & e) {
        err << "oracle guard: " << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const Usage & e) {
        err << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const std::invalid_argument & e) {
        err << e.what() << '\n';
        return exit_code::usage;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace robinson
