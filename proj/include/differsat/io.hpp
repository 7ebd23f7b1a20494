#pragma once

// File formats and instance routing.
//
// DIMACS CNF is the standard one: "p cnf <n> <m>" header, clauses as
// signed 1-based integers terminated by 0, "c" comment lines.
//
// XNF carries affine systems with the same flavor:
//   p xnf <n> <m>
//   e <b> <v1> <v2> ... 0     one equation, b in {0,1} the right-hand side
//   w <v> <k>                 optional weight k >= 1 for variable v
//   c ...                     comment
//
// Parsing normalizes; writing emits the normalized form, so
// parse(write(x)) == x for normalized x.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "differsat/core.hpp"
#include "differsat/hitting.hpp"
#include "differsat/twosat.hpp"

namespace differsat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedFragmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline CnfFormula parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string token;
    bool have_header = false;
    CnfFormula phi;
    Clause current;
    bool in_clause = false;
    while (in >> token) {
        if (token == "c" || token[0] == 'c') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (token == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (!(in >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw ParseError("malformed DIMACS header");
            if (have_header) throw ParseError("duplicate DIMACS header");
            have_header = true;
            phi.n = VarId(n);
            phi.clauses.reserve(std::size_t(m));
            continue;
        }
        if (!have_header) throw ParseError("clause data before DIMACS header");
        long long lit;
        try {
            lit = std::stoll(token);
        } catch (const std::exception&) {
            throw ParseError("unexpected token '" + token + "' in DIMACS input");
        }
        if (lit == 0) {
            if (current.literals.empty()) throw ParseError("empty clause in DIMACS input");
            phi.clauses.push_back(std::move(current));
            current = Clause{};
            in_clause = false;
        } else {
            long long var = lit > 0 ? lit : -lit;
            if (var > phi.n) throw ParseError("literal index out of range");
            current.literals.push_back(Literal::from_dimacs(int(lit)));
            in_clause = true;
        }
    }
    if (!have_header) throw ParseError("missing DIMACS header");
    if (in_clause) throw ParseError("unterminated clause at end of input");
    return normalized(phi);
}

inline std::string write_dimacs_cnf(const CnfFormula& input) {
    CnfFormula phi = normalized(input);
    std::ostringstream out;
    out << "p cnf " << phi.n << ' ' << phi.clauses.size() << '\n';
    for (const Clause& c : phi.clauses) {
        for (const Literal& l : c.literals) out << l.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

inline AffineSystem parse_xnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    AffineSystem sys;
    std::vector<std::uint32_t> weights;
    bool any_weight = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c" || tag[0] == 'c') continue;
        if (tag == "p") {
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m) || fmt != "xnf" || n < 0 || m < 0)
                throw ParseError("malformed XNF header");
            if (have_header) throw ParseError("duplicate XNF header");
            have_header = true;
            sys.n = VarId(n);
            weights.assign(sys.n, 1);
            continue;
        }
        if (!have_header) throw ParseError("equation data before XNF header");
        if (tag == "w") {
            long long v = 0, k = 0;
            if (!(ls >> v >> k) || v < 1 || v > sys.n || k < 1)
                throw ParseError("malformed weight line");
            weights[std::size_t(v - 1)] = std::uint32_t(k);
            any_weight = true;
            continue;
        }
        if (tag != "e") throw ParseError("unexpected line tag '" + tag + "' in XNF input");
        long long rhs;
        if (!(ls >> rhs) || (rhs != 0 && rhs != 1))
            throw ParseError("equation right-hand side must be 0 or 1");
        AffineEquation eq;
        eq.rhs = rhs == 1;
        long long v;
        bool terminated = false;
        while (ls >> v) {
            if (v == 0) {
                terminated = true;
                break;
            }
            if (v < 1 || v > sys.n) throw ParseError("equation variable index out of range");
            eq.vars.push_back(VarId(v - 1));
        }
        if (!terminated) throw ParseError("unterminated equation line");
        sys.equations.push_back(std::move(eq));
    }
    if (!have_header) throw ParseError("missing XNF header");
    if (any_weight) sys.weights = std::move(weights);
    return normalized(sys);
}

inline std::string write_xnf(const AffineSystem& input) {
    AffineSystem sys = normalized(input);
    std::ostringstream out;
    out << "p xnf " << sys.n << ' ' << sys.equations.size() << '\n';
    if (!sys.weights.empty())
        for (VarId v = 0; v < sys.n; ++v)
            if (sys.weights[v] != 1) out << "w " << v + 1 << ' ' << sys.weights[v] << '\n';
    for (const AffineEquation& eq : sys.equations) {
        out << "e " << (eq.rhs ? 1 : 0);
        for (VarId v : eq.vars) out << ' ' << v + 1;
        out << " 0\n";
    }
    return out.str();
}

enum class InstanceFormat { DimacsCnf, Xnf };

struct InstanceFile {
    InstanceFormat format = InstanceFormat::DimacsCnf;
    std::variant<CnfFormula, AffineSystem> payload;

    const CnfFormula& cnf() const { return std::get<CnfFormula>(payload); }
    const AffineSystem& affine() const { return std::get<AffineSystem>(payload); }
    VarId var_count() const {
        return std::visit([](const auto& f) { return f.n; }, payload);
    }
};

// Format detection is by header keyword, not file extension.
inline InstanceFile parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag, fmt;
        if (!(ls >> tag)) continue;
        if (tag[0] == 'c') continue;
        if (tag == "p" && (ls >> fmt)) {
            if (fmt == "cnf") return {InstanceFormat::DimacsCnf, parse_dimacs_cnf(text)};
            if (fmt == "xnf") return {InstanceFormat::Xnf, parse_xnf(text)};
            throw ParseError("unknown instance format '" + fmt + "'");
        }
        throw ParseError("instance data before header");
    }
    throw ParseError("missing instance header");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// Query sidecar written next to generated instances.
inline std::string write_query_sidecar(DifferQuery q) {
    std::ostringstream out;
    out << "mode " << (q.mode == Mode::Max ? "max" : "exact") << '\n';
    out << "d " << q.d << '\n';
    return out.str();
}

inline DifferQuery parse_query_sidecar(const std::string& text) {
    std::istringstream in(text);
    std::string key;
    DifferQuery q;
    bool have_mode = false, have_d = false;
    while (in >> key) {
        if (key == "mode") {
            std::string mode;
            if (!(in >> mode) || (mode != "max" && mode != "exact"))
                throw ParseError("query sidecar: bad mode");
            q.mode = mode == "max" ? Mode::Max : Mode::Exact;
            have_mode = true;
        } else if (key == "d") {
            long long d;
            if (!(in >> d) || d < 0) throw ParseError("query sidecar: bad d");
            q.d = std::uint32_t(d);
            have_d = true;
        } else {
            throw ParseError("query sidecar: unexpected key '" + key + "'");
        }
    }
    if (!have_mode || !have_d) throw ParseError("query sidecar: missing mode or d");
    return q;
}

// --- fragment routing -------------------------------------------------------

enum class Fragment { TwoAffine, AffineGeneral, TwoTwoCnf, Hitting, OracleFallback };

struct RoutingDecision {
    Fragment fragment = Fragment::OracleFallback;
    std::string rationale;
};

inline const char* to_string(Fragment f) {
    switch (f) {
        case Fragment::TwoAffine: return "2-affine";
        case Fragment::AffineGeneral: return "general-affine";
        case Fragment::TwoTwoCnf: return "(2,2)-cnf";
        case Fragment::Hitting: return "hitting";
        default: return "oracle-fallback";
    }
}

// Hitting wins over (2,2) when both predicates hold because the hitting
// path also produces counts.
inline RoutingDecision route(const InstanceFile& instance, DifferQuery q, bool allow_oracle,
                             std::uint32_t oracle_cap = kDefaultOracleCap) {
    if (std::holds_alternative<AffineSystem>(instance.payload)) {
        const AffineSystem sys = normalized(instance.affine());
        bool two_affine = true;
        for (const AffineEquation& eq : sys.equations)
            if (eq.vars.size() > 2) two_affine = false;
        if (two_affine)
            return {Fragment::TwoAffine, "all equations have arity <= 2 after normalization"};
        return {Fragment::AffineGeneral,
                q.mode == Mode::Max
                    ? "affine with arity >= 3: kernelization plus the 2^d subset search"
                    : "affine with arity >= 3: exact differ is exhaustive over free variables"};
    }
    const CnfFormula& phi = instance.cnf();
    if (is_hitting(phi)) return {Fragment::Hitting, "every clause pair clashes on a variable"};
    if (check_22cnf(phi))
        return {Fragment::TwoTwoCnf, "binary clauses with at most two occurrences per variable"};
    if (allow_oracle && phi.n <= oracle_cap)
        return {Fragment::OracleFallback, "no tractable fragment matched; small enough to enumerate"};
    throw UnsupportedFragmentError(
        allow_oracle ? "unsupported fragment: instance exceeds the oracle cap"
                     : "unsupported fragment: not 2-affine, general-affine, (2,2)-CNF or hitting");
}

}  // namespace differsat
