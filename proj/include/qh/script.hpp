/*
 * script.hpp
 * ----------
 * A small line-oriented language for defining algebras, matrices and
 * substitutions and for running verification commands against them.
 *
 *   algebra P {
 *     gen x parity=even family=P prec=0
 *     gen y parity=even family=P prec=1
 *     rel x*y = q*y*x
 *   }
 *   mat G = [[1, h/(q-1)], [0, 1]]
 *   subst s : qplane -> hplane {
 *     x' = x + h/(q-1)*y
 *     y' = y
 *   }
 *   nf GRq2 "alpha'*beta' + q^-1*beta'*alpha'"
 *   qybe builtin:Rh
 *
 * Definitions must precede their use and each name is defined once.
 * Printing a parsed script gives canonical text that parses back to an
 * equal script.
 */
#pragma once

#include "qh/algebra.hpp"
#include "qh/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qh::script {

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg);
    int line;
    int col;
};

struct UnknownName : ParseError {
    using ParseError::ParseError;
};

struct ArityError : ParseError {
    using ParseError::ParseError;
};

// ------------------------------------------------------------------ AST

struct Expr {
    enum class Kind { number, symbol, generator, neg, add, sub, mul, div, pow };
    Kind kind = Kind::number;
    Rat value;           // number
    std::string name;    // symbol ("q" or "h") or generator
    int exponent = 0;    // pow
    std::vector<Expr> args;

    friend bool operator==(const Expr&, const Expr&) = default;
};

struct MatExpr {
    enum class Kind { name, literal, call, product };
    Kind kind = Kind::name;
    std::string name;                    // matrix name or function name
    std::vector<std::vector<Expr>> rows;  // literal
    std::optional<Expr> scalar;          // first argument of scale(...)
    std::vector<MatExpr> args;

    friend bool operator==(const MatExpr&, const MatExpr&) = default;
};

struct GenDecl {
    std::string name;
    Parity parity = Parity::even;
    std::string family;
    int prec = 0;

    friend bool operator==(const GenDecl&, const GenDecl&) = default;
};

struct CrossDecl {
    std::string family_a;
    std::string family_b;
    int sign = 1;

    friend bool operator==(const CrossDecl&, const CrossDecl&) = default;
};

struct RelDecl {
    Expr lhs;
    std::optional<Expr> rhs;

    friend bool operator==(const RelDecl&, const RelDecl&) = default;
};

struct AlgebraDef {
    std::string name;
    std::optional<std::string> alias;  // `algebra P = builtin:qplane`
    std::vector<GenDecl> gens;
    std::vector<CrossDecl> crosses;
    std::vector<RelDecl> rels;

    friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

struct MatDef {
    std::string name;
    MatExpr value;

    friend bool operator==(const MatDef&, const MatDef&) = default;
};

struct SubstDef {
    std::string name;
    std::string from;
    std::string to;
    std::vector<std::pair<std::string, Expr>> images;

    friend bool operator==(const SubstDef&, const SubstDef&) = default;
};

/// One command. Which fields are used depends on the verb.
struct Command {
    std::string verb;
    std::vector<std::string> names;  // positional name arguments
    std::vector<std::pair<std::string, std::string>> options;  // key=value, in given order
    std::optional<Expr> expr;
    std::vector<MatExpr> mats;

    friend bool operator==(const Command&, const Command&) = default;
};

using Statement = std::variant<AlgebraDef, MatDef, SubstDef, Command>;

struct Script {
    std::vector<Statement> statements;
    std::vector<int> lines;  // source line of each statement, not part of equality

    friend bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }
};

// -------------------------------------------------------- parse / print

/// Throws ParseError (or UnknownName / ArityError) with a 1-based position.
Script parse(std::string_view source);

/// Parses a standalone expression; generators must belong to `alphabet`
/// (null means only q, h and numbers are allowed).
Expr parse_expr(std::string_view text, const Alphabet* alphabet);

std::string print(const Expr& e);
std::string print(const MatExpr& m);
std::string print(const Statement& s);
std::string print(const Script& s);

Element eval(const Expr& e, const AlphabetPtr& alphabet);
Coeff eval_scalar(const Expr& e);

// ------------------------------------------------------------------ run

enum class Status { verified, falsified, error };

const char* status_name(Status s);

struct Verdict {
    std::size_t index = 0;  // 1-based statement index
    std::string command;
    Status status = Status::verified;
    std::string witness;  // nonempty exactly when falsified or error
    std::vector<std::string> notes;
};

struct RunOptions {
    int degree_bound = 4;
};

struct RunResult {
    std::vector<Verdict> verdicts;
    int exit_code = 0;  // 0 all verified, 1 some falsified, 2 some error
};

RunResult run(const Script& s, const RunOptions& opt = {});

std::string report(const RunResult& r);
/// One JSON object per line, one line per verdict.
std::string porcelain(const RunResult& r);

}  // namespace qh::script
