// qhcontract: run verification scripts and the built-in Gr(2) suite.
#include "qh/script.hpp"
#include "qh/suite.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qh::script;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Definitions from a script file plus the name of its last definition of
// the requested kind.
template <typename Def>
std::pair<std::string, std::string> definitions_from(const std::string& path) {
    const Script s = parse(read_file(path));
    std::string defs;
    std::string last;
    for (const auto& st : s.statements) {
        if (std::holds_alternative<Command>(st)) continue;
        defs += print(st) + "\n";
        if (const auto* d = std::get_if<Def>(&st)) last = d->name;
    }
    if (last.empty()) throw std::runtime_error(path + " defines no suitable object");
    return {defs, last};
}

template <typename Def>
std::pair<std::string, std::string> resolve(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return definitions_from<Def>(arg);
    return {"", arg};
}

int emit(const RunResult& r, bool porcelain_mode) {
    std::cout << (porcelain_mode ? porcelain(r) : report(r));
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the h-deformation of Gr(2)"};
    app.require_subcommand(1);
    bool porcelain_mode = false;
    app.add_flag("--porcelain", porcelain_mode, "one JSON record per verdict")->configurable(false);

    std::string script_path;
    auto* run_cmd = app.add_subcommand("run", "run a script file");
    run_cmd->add_option("script", script_path, "script file")->required();

    app.add_subcommand("verify-paper", "run the full built-in verification suite");

    std::string algebra;
    std::string expr;
    auto* nf_cmd = app.add_subcommand("nf", "normal form of an expression");
    nf_cmd->add_option("--algebra", algebra, "builtin name or script file")->required();
    nf_cmd->add_option("--expr", expr, "expression")->required();

    std::string rmatrix;
    auto* qybe_cmd = app.add_subcommand("qybe", "quantum Yang-Baxter check");
    qybe_cmd->add_option("--rmatrix", rmatrix, "builtin name or script file")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunOptions opt;
        opt.degree_bound = qh::suite::degree_bound_from_env();

        std::string source;
        if (run_cmd->parsed()) {
            source = read_file(script_path);
        } else if (nf_cmd->parsed()) {
            if (expr.find('"') != std::string::npos) throw std::runtime_error("--expr must not contain '\"'");
            auto [defs, name] = resolve<AlgebraDef>(algebra);
            source = defs + "nf " + name + " \"" + expr + "\"\n";
        } else if (qybe_cmd->parsed()) {
            auto [defs, name] = resolve<MatDef>(rmatrix);
            source = defs + "qybe " + name + "\n";
        } else {
            source = "verify-paper\n";
        }
        return emit(run(parse(source), opt), porcelain_mode);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
