#pragma once

// Command-line driver. Decisions go to stdout in machine-parsable form:
//   s YES | s NO | s UNSAT
//   v1 <signed literals> 0       first witness assignment (if any)
//   v2 <signed literals> 0       second witness assignment
//   c COUNT <integer>            ordered solution-pair count (if available)
// Exit codes: 10 = YES, 20 = NO or UNSAT, 0 = informational command
// succeeded, 1 = usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "differsat/affine.hpp"
#include "differsat/core.hpp"
#include "differsat/hitting.hpp"
#include "differsat/io.hpp"
#include "differsat/oracle.hpp"
#include "differsat/reductions.hpp"
#include "differsat/twosat.hpp"

namespace differsat {
namespace cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitYes = 10;
inline constexpr int kExitNo = 20;
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;

inline const char* kUsage =
    "usage: differsat <command> [options]\n"
    "\n"
    "commands:\n"
    "  solve --mode {max|exact} -d <int> [--allow-oracle] [--free-cap N]\n"
    "        [--witness-cap N] <file>\n"
    "      decide the differ query; exit 10 = YES, 20 = NO/UNSAT\n"
    "  count -d <int> <file>\n"
    "      print the exact ordered pair count (hitting formulas only)\n"
    "  kernelize -d <int> -o <out> <file>\n"
    "      Max-differ kernel for an affine instance; writes the reduced\n"
    "      system, or prints the decision when preprocessing settles it\n"
    "  generate cubic-is  {--graph k4|k33|prism | --edges <file>} -k <int> -o <out>\n"
    "  generate even-set  --universe <int> [--set a,b,..]... -k <int> -o <out>\n"
    "  generate odd-set   --universe <int> [--set a,b,..]... -k <int> [--exact] -o <out>\n"
    "  generate is-2cnf   {--graph k4|k33|prism | --edges <file>} -k <int>\n"
    "                     --mode {max|exact} -o <out>\n"
    "      write an instance plus a <out>.query sidecar\n"
    "  oracle --mode {max|exact} -d <int> [--cap N] <file>\n"
    "      brute-force decision (guarded by the variable cap)\n"
    "  classify <file>\n"
    "      print the routing decision; for (2,2)-CNF also the components\n";

namespace detail {

struct ArgReader {
    std::vector<std::string> args;
    std::size_t next = 0;

    bool done() const { return next >= args.size(); }
    std::string take() {
        if (done()) throw UsageError("missing argument");
        return args[next++];
    }
    std::string take_value(const std::string& flag) {
        if (done()) throw UsageError("missing value for " + flag);
        return args[next++];
    }
};

inline std::uint32_t parse_u32(const std::string& text, const std::string& what) {
    try {
        long long v = std::stoll(text);
        if (v < 0 || v > 0xffffffffLL) throw std::out_of_range(what);
        return std::uint32_t(v);
    } catch (const std::exception&) {
        throw UsageError("bad value for " + what + ": '" + text + "'");
    }
}

inline Mode parse_mode(const std::string& text) {
    if (text == "max") return Mode::Max;
    if (text == "exact") return Mode::Exact;
    throw UsageError("mode must be 'max' or 'exact', got '" + text + "'");
}

inline void print_witness(std::ostream& out, const Assignment& a, const char* tag) {
    out << tag;
    for (VarId v = 0; v < a.size(); ++v)
        out << ' ' << (a.get(v) ? int(v) + 1 : -(int(v) + 1));
    out << " 0\n";
}

inline int print_answer(std::ostream& out, const DifferAnswer& ans) {
    switch (ans.decision) {
        case Decision::Yes: out << "s YES\n"; break;
        case Decision::No: out << "s NO\n"; break;
        case Decision::UnsatNo: out << "s UNSAT\n"; break;
    }
    if (ans.witness) {
        print_witness(out, ans.witness->first, "v1");
        print_witness(out, ans.witness->second, "v2");
    }
    if (ans.pair_count) out << "c COUNT " << ans.pair_count->to_string() << '\n';
    return ans.yes() ? kExitYes : kExitNo;
}

inline SimpleGraph load_graph_option(const std::optional<std::string>& named,
                                     const std::optional<std::string>& edges_path) {
    if (named && edges_path) throw UsageError("--graph and --edges are mutually exclusive");
    if (named) {
        if (*named == "k4") return complete_graph(4);
        if (*named == "k33") return complete_bipartite_33();
        if (*named == "prism") return prism_graph();
        throw UsageError("unknown graph name '" + *named + "' (try k4, k33, prism)");
    }
    if (!edges_path) throw UsageError("need --graph <name> or --edges <file>");
    // edge-list file: first line is the vertex count, then "u v" per line, 1-based
    std::istringstream in(read_file(*edges_path));
    SimpleGraph g;
    long long n;
    if (!(in >> n) || n < 0) throw ParseError("edge list: bad vertex count");
    g.vertex_count = std::uint32_t(n);
    long long u, v;
    while (in >> u >> v) {
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge list: endpoint out of range");
        g.edges.emplace_back(std::uint32_t(u - 1), std::uint32_t(v - 1));
    }
    validate_graph(g);
    return g;
}

inline std::vector<std::uint32_t> parse_set_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw UsageError("empty element in --set");
        std::uint32_t u = parse_u32(item, "--set element");
        if (u < 1) throw UsageError("--set elements are 1-based");
        out.push_back(u - 1);
    }
    if (out.empty()) throw UsageError("--set needs at least one element");
    return out;
}

inline DifferAnswer solve_instance(const InstanceFile& instance, DifferQuery q,
                                   bool allow_oracle, std::size_t free_cap,
                                   std::uint32_t witness_cap, std::uint32_t oracle_cap,
                                   std::ostream& diag) {
    RoutingDecision decision = route(instance, q, allow_oracle, oracle_cap);
    diag << "c fragment " << to_string(decision.fragment) << '\n';
    diag << "c rationale " << decision.rationale << '\n';
    switch (decision.fragment) {
        case Fragment::TwoAffine: return two_affine_differ(instance.affine(), q);
        case Fragment::AffineGeneral:
            if (!instance.affine().weights.empty())
                diag << "c warning: variable weights are ignored outside the 2-affine fragment\n";
            return q.mode == Mode::Max ? max_differ_affine(instance.affine(), q.d)
                                       : exact_differ_free_enum(instance.affine(), q.d, free_cap);
        case Fragment::TwoTwoCnf:
            return q.mode == Mode::Max ? max_differ_22(instance.cnf(), q.d)
                                       : exact_differ_22(instance.cnf(), q.d);
        case Fragment::Hitting: return decide_differ_hitting(instance.cnf(), q, witness_cap);
        default: return oracle_differ(instance.payload, q, oracle_cap);
    }
}

inline int run_solve(ArgReader& args, std::ostream& out) {
    std::optional<Mode> mode;
    std::optional<std::uint32_t> d;
    bool allow_oracle = false;
    std::size_t free_cap = kDefaultFreeEnumCap;
    std::uint32_t witness_cap = kDefaultHittingWitnessCap;
    std::uint32_t oracle_cap = kDefaultOracleCap;
    std::optional<std::string> path;
    while (!args.done()) {
        std::string a = args.take();
        if (a == "--mode")
            mode = parse_mode(args.take_value(a));
        else if (a == "-d")
            d = parse_u32(args.take_value(a), "-d");
        else if (a == "--allow-oracle")
            allow_oracle = true;
        else if (a == "--free-cap")
            free_cap = parse_u32(args.take_value(a), "--free-cap");
        else if (a == "--witness-cap")
            witness_cap = parse_u32(args.take_value(a), "--witness-cap");
        else if (a == "--oracle-cap")
            oracle_cap = parse_u32(args.take_value(a), "--oracle-cap");
        else if (!path)
            path = a;
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!mode || !d || !path) throw UsageError("solve needs --mode, -d and an instance file");
    InstanceFile instance = parse_instance(read_file(*path));
    DifferQuery q{*mode, *d};
    return print_answer(out, solve_instance(instance, q, allow_oracle, free_cap, witness_cap,
                                            oracle_cap, out));
}

inline int run_count(ArgReader& args, std::ostream& out) {
    std::optional<std::uint32_t> d;
    std::optional<std::string> path;
    while (!args.done()) {
        std::string a = args.take();
        if (a == "-d")
            d = parse_u32(args.take_value(a), "-d");
        else if (!path)
            path = a;
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!d || !path) throw UsageError("count needs -d and an instance file");
    InstanceFile instance = parse_instance(read_file(*path));
    if (!std::holds_alternative<CnfFormula>(instance.payload) || !is_hitting(instance.cnf()))
        throw std::runtime_error("count requires a hitting CNF formula");
    out << count_exact_pairs(instance.cnf(), *d).to_string() << '\n';
    return kExitOk;
}

inline int run_kernelize(ArgReader& args, std::ostream& out) {
    std::optional<std::uint32_t> d;
    std::optional<std::string> out_path, path;
    while (!args.done()) {
        std::string a = args.take();
        if (a == "-d")
            d = parse_u32(args.take_value(a), "-d");
        else if (a == "-o")
            out_path = args.take_value(a);
        else if (!path)
            path = a;
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!d || !out_path || !path) throw UsageError("kernelize needs -d, -o and an instance file");
    InstanceFile instance = parse_instance(read_file(*path));
    if (!std::holds_alternative<AffineSystem>(instance.payload))
        throw std::runtime_error("kernelize requires an XNF instance");
    KernelResult result = kernelize(instance.affine(), *d);
    if (result.decided()) {
        out << "c kernel decided the instance\n";
        return print_answer(out, result.answer());
    }
    const ReducedInstance& red = result.reduced();
    write_file(*out_path, write_xnf(red.system));
    out << "c kernel variables " << red.system.n << " equations " << red.system.equations.size()
        << " d " << red.d << '\n';
    out << "c wrote " << *out_path << '\n';
    return kExitOk;
}

inline int run_generate(ArgReader& args, std::ostream& out) {
    if (args.done()) throw UsageError("generate needs a construction name");
    std::string kind = args.take();
    std::optional<std::string> graph_name, edges_path, out_path;
    std::optional<std::uint32_t> k, universe;
    std::vector<std::vector<std::uint32_t>> sets;
    bool exact = false;
    std::optional<Mode> mode;
    while (!args.done()) {
        std::string a = args.take();
        if (a == "--graph")
            graph_name = args.take_value(a);
        else if (a == "--edges")
            edges_path = args.take_value(a);
        else if (a == "-k")
            k = parse_u32(args.take_value(a), "-k");
        else if (a == "--universe")
            universe = parse_u32(args.take_value(a), "--universe");
        else if (a == "--set")
            sets.push_back(parse_set_list(args.take_value(a)));
        else if (a == "--exact")
            exact = true;
        else if (a == "--mode")
            mode = parse_mode(args.take_value(a));
        else if (a == "-o")
            out_path = args.take_value(a);
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!out_path || !k) throw UsageError("generate needs -k and -o");

    GeneratedInstance instance;
    if (kind == "cubic-is") {
        instance = from_cubic_independent_set(load_graph_option(graph_name, edges_path), *k);
    } else if (kind == "even-set" || kind == "odd-set") {
        if (!universe) throw UsageError(kind + " needs --universe");
        SetSystem s{*universe, sets, *k};
        for (const auto& subset : s.family)
            for (std::uint32_t u : subset)
                if (u >= s.universe) throw UsageError("--set element exceeds --universe");
        instance = (kind == "even-set") ? from_exact_even_set(s) : from_odd_set(s, exact);
    } else if (kind == "is-2cnf") {
        if (!mode) throw UsageError("is-2cnf needs --mode {max|exact}");
        instance = from_independent_set_2cnf(load_graph_option(graph_name, edges_path), *k, *mode);
    } else {
        throw UsageError("unknown construction '" + kind +
                         "' (try cubic-is, even-set, odd-set, is-2cnf)");
    }

    if (std::holds_alternative<AffineSystem>(instance.formula))
        write_file(*out_path, write_xnf(instance.affine()));
    else
        write_file(*out_path, write_dimacs_cnf(instance.cnf()));
    write_file(*out_path + ".query", write_query_sidecar(instance.query));
    out << "c wrote " << *out_path << " and " << *out_path << ".query\n";
    out << "c query mode " << (instance.query.mode == Mode::Max ? "max" : "exact") << " d "
        << instance.query.d << '\n';
    return kExitOk;
}

inline int run_oracle(ArgReader& args, std::ostream& out) {
    std::optional<Mode> mode;
    std::optional<std::uint32_t> d;
    std::uint32_t cap = kDefaultOracleCap;
    std::optional<std::string> path;
    while (!args.done()) {
        std::string a = args.take();
        if (a == "--mode")
            mode = parse_mode(args.take_value(a));
        else if (a == "-d")
            d = parse_u32(args.take_value(a), "-d");
        else if (a == "--cap")
            cap = parse_u32(args.take_value(a), "--cap");
        else if (!path)
            path = a;
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!mode || !d || !path) throw UsageError("oracle needs --mode, -d and an instance file");
    InstanceFile instance = parse_instance(read_file(*path));
    return print_answer(out, oracle_differ(instance.payload, DifferQuery{*mode, *d}, cap));
}

inline int run_classify(ArgReader& args, std::ostream& out) {
    std::optional<std::string> path;
    while (!args.done()) {
        std::string a = args.take();
        if (!path)
            path = a;
        else
            throw UsageError("unexpected argument '" + a + "'");
    }
    if (!path) throw UsageError("classify needs an instance file");
    InstanceFile instance = parse_instance(read_file(*path));
    out << "c format " << (instance.format == InstanceFormat::Xnf ? "xnf" : "dimacs-cnf") << '\n';
    out << "c variables " << instance.var_count() << '\n';
    try {
        RoutingDecision decision = route(instance, DifferQuery{Mode::Max, 0}, true);
        out << "fragment " << to_string(decision.fragment) << '\n';
        out << "rationale " << decision.rationale << '\n';
    } catch (const UnsupportedFragmentError& e) {
        out << "fragment unsupported\n";
        out << "rationale " << e.what() << '\n';
    }
    if (std::holds_alternative<CnfFormula>(instance.payload) && check_22cnf(instance.cnf())) {
        CnfFormula phi = normalized(instance.cnf());
        bool has_unit = false;
        for (const Clause& c : phi.clauses)
            if (c.literals.size() < 2) has_unit = true;
        if (has_unit) {
            out << "c component report skipped: unit clauses present\n";
        } else {
            for (const ComponentReport& r : classify_components(build_variable_graph(phi))) {
                out << "component " << to_string(r.kind) << " vars";
                for (VarId v : r.vars) out << ' ' << v + 1;
                out << '\n';
            }
        }
    }
    return kExitOk;
}

}  // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    detail::ArgReader args;
    for (int i = 1; i < argc; ++i) args.args.emplace_back(argv[i]);
    try {
        if (args.done()) throw UsageError("no command given");
        std::string command = args.take();
        if (command == "solve") return detail::run_solve(args, out);
        if (command == "count") return detail::run_count(args, out);
        if (command == "kernelize") return detail::run_kernelize(args, out);
        if (command == "generate") return detail::run_generate(args, out);
        if (command == "oracle") return detail::run_oracle(args, out);
        if (command == "classify") return detail::run_classify(args, out);
        if (command == "--help" || command == "-h" || command == "help") {
            out << kUsage;
            return kExitOk;
        }
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << kUsage;
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace cli
}  // namespace differsat
