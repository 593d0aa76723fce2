#include "qh/script.hpp"

#include "qh/contract.hpp"
#include "qh/grgroup.hpp"
#include "qh/suite.hpp"

#include <json.hpp>

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace qh::script {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

namespace {

// ---------------------------------------------------------------- builtins

const AlgebraSpec* builtin_algebra(const std::string& name) {
    using namespace qh::gr;
    if (name == "GRq2") return &gr_q2();
    if (name == "GRh2") return &gr_h2();
    if (name == "qplane") return &q_plane().algebra;
    if (name == "hplane") return &h_plane().algebra;
    if (name == "qdualplane") return &q_dual_plane().algebra;
    if (name == "hdualplane") return &h_dual_plane().algebra;
    if (name == "GLq2-target") return &glq2_target();
    return nullptr;
}

std::optional<ScalMat> builtin_matrix(const std::string& name) {
    if (name == "g") return gr::g_matrix();
    if (name == "Rq") return gr::r_q();
    if (name == "Rh") return gr::r_h();
    return std::nullopt;
}

std::string strip_builtin(const std::string& name) {
    constexpr std::string_view prefix = "builtin:";
    return name.starts_with(prefix) ? name.substr(prefix.size()) : name;
}

// ------------------------------------------------------------------- lexer

struct Tok {
    enum class Kind { number, ident, op, end };
    Kind kind = Kind::end;
    std::string text;
    int col = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// UTF-8 Greek letters and the prime sign, mapped to their ASCII spelling.
std::optional<std::pair<std::string, std::size_t>> unicode_alias(std::string_view s, std::size_t i) {
    static const std::pair<std::string_view, std::string_view> table[] = {
        {"\xCE\xB1", "alpha"}, {"\xCE\xB2", "beta"}, {"\xCE\xB3", "gamma"},
        {"\xCE\xB4", "delta"}, {"\xCE\xB7", "eta"},  {"\xCE\xBE", "xi"},
        {"\xE2\x80\xB2", "'"},
    };
    for (const auto& [utf, ascii] : table)
        if (s.substr(i, utf.size()) == utf) return std::pair{std::string(ascii), utf.size()};
    return std::nullopt;
}

std::vector<Tok> lex(std::string_view s, int line, int col0) {
    std::vector<Tok> out;
    std::size_t i = 0;
    auto col = [&](std::size_t at) { return col0 + static_cast<int>(at); };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Kind::number, std::string(s.substr(start, i - start)), col(start)});
            continue;
        }
        auto alias = unicode_alias(s, i);
        if (ident_start(c) || (alias && alias->first != "'")) {
            std::string text;
            while (i < s.size()) {
                if (auto a = unicode_alias(s, i)) {
                    if (a->first == "'" && text.empty()) break;
                    text += a->first;
                    i += a->second;
                } else if (ident_char(s[i]) || (s[i] == '\'' && !text.empty())) {
                    text += s[i++];
                } else {
                    break;
                }
            }
            if (text == "builtin" && i < s.size() && s[i] == ':') {
                text += s[i++];
                while (i < s.size() && (ident_char(s[i]) || s[i] == '-')) text += s[i++];
            }
            out.push_back({Tok::Kind::ident, text, col(start)});
            continue;
        }
        if (s.substr(i, 2) == "==") {
            out.push_back({Tok::Kind::op, "==", col(start)});
            i += 2;
            continue;
        }
        if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
            out.push_back({Tok::Kind::op, std::string(1, c), col(start)});
            ++i;
            continue;
        }
        throw ParseError(line, col(start), std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::Kind::end, "", col(s.size())});
    return out;
}

// ------------------------------------------------------ expression parser

class ExprParser {
public:
    using MatResolver = std::function<bool(const std::string&)>;

    ExprParser(std::string_view text, int line, int col0, const Alphabet* alphabet, MatResolver mats = {})
        : toks_(lex(text, line, col0)), line_(line), alphabet_(alphabet), mats_(std::move(mats)) {}

    Expr sum() {
        Expr e = term();
        while (peek_op("+") || peek_op("-")) {
            const auto kind = next().text == "+" ? Expr::Kind::add : Expr::Kind::sub;
            e = Expr{kind, {}, {}, 0, {std::move(e), term()}};
        }
        return e;
    }

    MatExpr mat_product() {
        MatExpr m = mat_atom();
        while (peek_op("*")) {
            next();
            m = MatExpr{MatExpr::Kind::product, {}, {}, std::nullopt, {std::move(m), mat_atom()}};
        }
        return m;
    }

    bool at_end() const { return toks_[pos_].kind == Tok::Kind::end; }
    bool peek_op(const char* op) const {
        return toks_[pos_].kind == Tok::Kind::op && toks_[pos_].text == op;
    }
    const Tok& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

    void expect_op(const char* op) {
        if (!peek_op(op)) fail(std::string("expected '") + op + "'");
        next();
    }

    void expect_end() {
        if (!at_end()) fail("unexpected '" + toks_[pos_].text + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, toks_[pos_].col, msg); }

private:
    Expr term() {
        Expr e = unary();
        while (peek_op("*") || peek_op("/")) {
            const auto kind = next().text == "*" ? Expr::Kind::mul : Expr::Kind::div;
            e = Expr{kind, {}, {}, 0, {std::move(e), unary()}};
        }
        return e;
    }

    Expr unary() {
        if (peek_op("-")) {
            next();
            return Expr{Expr::Kind::neg, {}, {}, 0, {unary()}};
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (!peek_op("^")) return base;
        next();
        const bool paren = peek_op("(");
        if (paren) next();
        int sign = 1;
        if (peek_op("-")) {
            next();
            sign = -1;
        }
        if (toks_[pos_].kind != Tok::Kind::number) fail("expected an integer exponent");
        const int n = std::stoi(next().text);
        if (paren) expect_op(")");
        return Expr{Expr::Kind::pow, {}, {}, sign * n, {std::move(base)}};
    }

    Expr atom() {
        const Tok& t = toks_[pos_];
        if (t.kind == Tok::Kind::number) {
            next();
            return Expr{Expr::Kind::number, Rat(mpz_class(t.text)), {}, 0, {}};
        }
        if (t.kind == Tok::Kind::ident) {
            if (t.text == "q" || t.text == "h") {
                next();
                return Expr{Expr::Kind::symbol, {}, t.text, 0, {}};
            }
            if (!alphabet_ || !alphabet_->find(t.text))
                throw UnknownName(line_, t.col, "unknown generator '" + t.text + "'");
            next();
            return Expr{Expr::Kind::generator, {}, t.text, 0, {}};
        }
        if (peek_op("(")) {
            next();
            Expr e = sum();
            expect_op(")");
            return e;
        }
        fail(t.kind == Tok::Kind::end ? "unexpected end of expression" : "unexpected '" + t.text + "'");
    }

    MatExpr mat_atom() {
        const Tok t = toks_[pos_];
        if (peek_op("(")) {
            next();
            MatExpr m = mat_product();
            expect_op(")");
            return m;
        }
        if (peek_op("[")) return literal();
        if (t.kind != Tok::Kind::ident) fail("expected a matrix");
        next();
        static const std::map<std::string, int> arity{{"kron", 2}, {"sim", 2}, {"inv", 1}, {"limit", 1}, {"scale", 2}};
        if (peek_op("(")) {
            auto it = arity.find(t.text);
            if (it == arity.end()) throw UnknownName(line_, t.col, "unknown matrix function '" + t.text + "'");
            next();
            MatExpr call{MatExpr::Kind::call, t.text, {}, std::nullopt, {}};
            int count = 0;
            if (!peek_op(")")) {
                while (true) {
                    if (t.text == "scale" && count == 0) {
                        const Alphabet* saved = alphabet_;
                        alphabet_ = nullptr;
                        call.scalar = sum();
                        alphabet_ = saved;
                    } else {
                        call.args.push_back(mat_product());
                    }
                    ++count;
                    if (!peek_op(",")) break;
                    next();
                }
            }
            if (count != it->second)
                throw ArityError(line_, t.col,
                                 t.text + " takes " + std::to_string(it->second) + " arguments, got " +
                                     std::to_string(count));
            expect_op(")");
            return call;
        }
        if (!mats_ || !mats_(t.text)) throw UnknownName(line_, t.col, "unknown matrix '" + t.text + "'");
        return MatExpr{MatExpr::Kind::name, t.text, {}, std::nullopt, {}};
    }

public:
    // Flat form: [a, b; c, d], rows separated by ';'.
    MatExpr flat_literal(std::size_t n) {
        const int col = toks_[pos_].col;
        expect_op("[");
        MatExpr m{MatExpr::Kind::literal, {}, {}, std::nullopt, {}};
        const Alphabet* saved = alphabet_;
        alphabet_ = nullptr;
        std::vector<Expr> row{sum()};
        while (true) {
            if (peek_op(",")) {
                next();
                row.push_back(sum());
            } else if (peek_op(";")) {
                next();
                m.rows.push_back(std::move(row));
                row = {sum()};
            } else {
                break;
            }
        }
        m.rows.push_back(std::move(row));
        expect_op("]");
        alphabet_ = saved;
        if (m.rows.size() != n) throw ParseError(line_, col, "expected " + std::to_string(n) + " rows");
        for (const auto& r : m.rows)
            if (r.size() != n) throw ParseError(line_, col, "expected " + std::to_string(n) + " entries per row");
        return m;
    }

private:
    MatExpr literal() {
        const int col = toks_[pos_].col;
        expect_op("[");
        MatExpr m{MatExpr::Kind::literal, {}, {}, std::nullopt, {}};
        const Alphabet* saved = alphabet_;
        alphabet_ = nullptr;
        do {
            expect_op("[");
            std::vector<Expr> row{sum()};
            while (peek_op(",")) {
                next();
                row.push_back(sum());
            }
            expect_op("]");
            m.rows.push_back(std::move(row));
        } while (peek_op(",") && (next(), true));
        expect_op("]");
        alphabet_ = saved;
        for (const auto& row : m.rows)
            if (row.size() != m.rows.size()) throw ParseError(line_, col, "matrix literal must be square");
        return m;
    }

    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
    int line_;
    const Alphabet* alphabet_;
    MatResolver mats_;
};

// ------------------------------------------------------------------ words

struct WordTok {
    std::string text;
    int col = 0;
    bool quoted = false;
};

// Whitespace-separated words; brackets and quotes keep their contents in a
// single word.
std::vector<WordTok> split_words(std::string_view s, int line) {
    std::vector<WordTok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (s[i] == '"') {
            const auto close = s.find('"', i + 1);
            if (close == std::string_view::npos)
                throw ParseError(line, static_cast<int>(start) + 1, "unterminated string");
            out.push_back({std::string(s.substr(i + 1, close - i - 1)), static_cast<int>(start) + 2, true});
            i = close + 1;
            continue;
        }
        int depth = 0;
        while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '(' || s[i] == '[') ++depth;
            if (s[i] == ')' || s[i] == ']') --depth;
            ++i;
        }
        out.push_back({std::string(s.substr(start, i - start)), static_cast<int>(start) + 1, false});
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quote = !in_quote;
        if (line[i] == '#' && !in_quote) return line.substr(0, i);
    }
    return line;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    for (char c : s)
        if (!ident_char(c) && c != '\'' && c != '-') return false;
    return true;
}

// ------------------------------------------------------------ statements

Element eval_relation(const RelDecl& r, const AlphabetPtr& a) {
    Element e = eval(r.lhs, a);
    if (r.rhs) e -= eval(*r.rhs, a);
    return e;
}

AlgebraSpec build_algebra(const AlgebraDef& d) {
    if (d.alias) return *builtin_algebra(strip_builtin(*d.alias));
    std::vector<GeneratorDecl> decls;
    for (const auto& g : d.gens) decls.push_back({g.name, g.parity, g.family, g.prec});
    std::map<Alphabet::FamilyPair, int> cross;
    for (const auto& c : d.crosses) cross[{c.family_a, c.family_b}] = c.sign;
    AlgebraSpec spec{d.name, make_alphabet(std::move(decls), std::move(cross)), {}};
    for (const auto& r : d.rels) spec.relations.push_back(eval_relation(r, spec.alphabet));
    spec.validate();
    return spec;
}

class Parser {
public:
    explicit Parser(std::string_view source) {
        std::istringstream in{std::string(source)};
        std::string raw;
        while (std::getline(in, raw)) lines_.push_back(strip_comment(raw));
    }

    Script parse() {
        while (idx_ < lines_.size()) {
            const int line = static_cast<int>(idx_) + 1;
            const auto words = split_words(lines_[idx_], line);
            ++idx_;
            if (words.empty()) continue;
            script_.lines.push_back(line);
            script_.statements.push_back(statement(words, line));
        }
        return std::move(script_);
    }

private:
    Statement statement(const std::vector<WordTok>& w, int line) {
        const auto& verb = w[0].text;
        if (verb == "algebra") return algebra(w, line);
        if (verb == "mat") return mat(w, line);
        if (verb == "subst") return subst(w, line);
        if (verb == "gen" || verb == "cross" || verb == "rel")
            throw ParseError(line, w[0].col, "'" + verb + "' outside an algebra block");
        return command(w, line);
    }

    void define(const WordTok& name, int line) {
        if (!valid_name(name.text)) throw ParseError(line, name.col, "invalid name '" + name.text + "'");
        if (name.text.starts_with("builtin:")) throw ParseError(line, name.col, "cannot redefine a builtin");
        if (!defined_.insert(name.text).second)
            throw ParseError(line, name.col, "'" + name.text + "' is already defined");
    }

    AlphabetPtr algebra_alphabet(const WordTok& name, int line) const {
        if (!name.text.starts_with("builtin:")) {
            auto it = algebras_.find(name.text);
            if (it != algebras_.end()) return it->second;
        }
        if (const auto* b = builtin_algebra(strip_builtin(name.text))) return b->alphabet;
        throw UnknownName(line, name.col, "unknown algebra '" + name.text + "'");
    }

    // Entries of the generator matrix in row order, when they are known.
    std::optional<std::vector<std::string>> default_entries(const std::string& name) const {
        if (!name.starts_with("builtin:")) {
            auto it = entry_order_.find(name);
            if (it != entry_order_.end()) return it->second;
            if (algebras_.count(name)) return std::nullopt;
        }
        const auto base = strip_builtin(name);
        if (base == "GRq2") return std::vector<std::string>(gr::kEntriesQ.begin(), gr::kEntriesQ.end());
        if (base == "GRh2") return std::vector<std::string>(gr::kEntriesH.begin(), gr::kEntriesH.end());
        return std::nullopt;
    }

    bool is_matrix(const std::string& name) const {
        if (!name.starts_with("builtin:") && mats_.count(name)) return true;
        return builtin_matrix(strip_builtin(name)).has_value();
    }

    std::string rest_of(const std::vector<WordTok>& w, std::size_t from, int line) const {
        if (from >= w.size()) return {};
        return lines_[line - 1].substr(static_cast<std::size_t>(w[from].col - 1));
    }

    // Reads block lines up to a closing brace; returns (words, line) pairs.
    std::vector<std::pair<std::vector<WordTok>, int>> block(int open_line) {
        std::vector<std::pair<std::vector<WordTok>, int>> out;
        while (idx_ < lines_.size()) {
            const int line = static_cast<int>(idx_) + 1;
            auto words = split_words(lines_[idx_], line);
            ++idx_;
            if (words.empty()) continue;
            if (words.size() == 1 && words[0].text == "}") return out;
            out.emplace_back(std::move(words), line);
        }
        throw ParseError(open_line, 1, "block is not closed");
    }

    static std::string option_value(const WordTok& w, const std::string& key, int line) {
        const auto prefix = key + "=";
        if (!w.text.starts_with(prefix)) throw ParseError(line, w.col, "expected " + prefix + "...");
        return w.text.substr(prefix.size());
    }

    static int parse_int(const std::string& s, int line, int col) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw ParseError(line, col, "expected an integer, got '" + s + "'");
        return v;
    }

    Statement algebra(const std::vector<WordTok>& w, int line) {
        if (w.size() < 3) throw ArityError(line, w[0].col, "algebra needs a name and '{' or '= builtin:NAME'");
        define(w[1], line);
        AlgebraDef def{w[1].text, std::nullopt, {}, {}, {}};
        if (w[2].text == "=") {
            if (w.size() != 4) throw ArityError(line, w[2].col, "expected a single builtin name");
            if (!builtin_algebra(strip_builtin(w[3].text)))
                throw UnknownName(line, w[3].col, "unknown builtin algebra '" + w[3].text + "'");
            def.alias = "builtin:" + strip_builtin(w[3].text);
            algebras_[def.name] = builtin_algebra(strip_builtin(w[3].text))->alphabet;
            if (auto e = default_entries(*def.alias)) entry_order_[def.name] = *e;
            return def;
        }
        if (w[2].text != "{" || w.size() != 3) throw ParseError(line, w[2].col, "expected '{'");

        std::vector<std::tuple<std::string, int, int>> pending_rels;  // text, line, col
        for (const auto& [bw, bl] : block(line)) {
            const auto& kw = bw[0].text;
            if (kw == "gen") {
                if (bw.size() != 5) throw ArityError(bl, bw[0].col, "gen NAME parity=P family=F prec=N");
                GenDecl g;
                g.name = bw[1].text;
                if (!valid_name(g.name) || g.name.find('-') != std::string::npos)
                    throw ParseError(bl, bw[1].col, "invalid generator name '" + g.name + "'");
                const auto parity = option_value(bw[2], "parity", bl);
                if (parity != "even" && parity != "odd")
                    throw ParseError(bl, bw[2].col, "parity must be even or odd");
                g.parity = parity == "odd" ? Parity::odd : Parity::even;
                g.family = option_value(bw[3], "family", bl);
                if (!valid_name(g.family)) throw ParseError(bl, bw[3].col, "invalid family name");
                g.prec = parse_int(option_value(bw[4], "prec", bl), bl, bw[4].col);
                def.gens.push_back(std::move(g));
            } else if (kw == "cross") {
                if (bw.size() != 4) throw ArityError(bl, bw[0].col, "cross FAMILY FAMILY sign=+1|-1");
                const auto sign = option_value(bw[3], "sign", bl);
                if (sign != "+1" && sign != "-1" && sign != "1")
                    throw ParseError(bl, bw[3].col, "sign must be +1 or -1");
                def.crosses.push_back({bw[1].text, bw[2].text, sign == "-1" ? -1 : 1});
            } else if (kw == "rel") {
                if (bw.size() < 2) throw ArityError(bl, bw[0].col, "rel needs an expression");
                pending_rels.emplace_back(lines_[bl - 1].substr(static_cast<std::size_t>(bw[1].col - 1)), bl,
                                          bw[1].col);
            } else {
                throw ParseError(bl, bw[0].col, "expected gen, cross, rel or '}'");
            }
        }

        AlphabetPtr alphabet;
        try {
            std::vector<GeneratorDecl> decls;
            for (const auto& g : def.gens) decls.push_back({g.name, g.parity, g.family, g.prec});
            alphabet = make_alphabet(std::move(decls));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, w[1].col, e.what());
        }
        for (const auto& [text, rl, rc] : pending_rels) {
            ExprParser p(text, rl, rc, alphabet.get());
            RelDecl r{p.sum(), std::nullopt};
            if (p.peek_op("=")) {
                p.next();
                r.rhs = p.sum();
            }
            p.expect_end();
            Element e;
            try {
                e = eval_relation(r, alphabet);
            } catch (const std::exception& ex) {
                throw ParseError(rl, rc, ex.what());
            }
            if (!e.is_zero() && !e.homogeneous(2)) throw ParseError(rl, rc, "relation must be quadratic");
            def.rels.push_back(std::move(r));
        }
        algebras_[def.name] = alphabet;
        if (def.gens.size() == 4) {
            auto& order = entry_order_[def.name];
            for (const auto& g : def.gens) order.push_back(g.name);
        }
        return def;
    }

    Statement mat(const std::vector<WordTok>& w, int line) {
        if (w.size() >= 4 && !w[2].text.empty() && std::isdigit(static_cast<unsigned char>(w[2].text[0]))) {
            define(w[1], line);
            const int n = parse_int(w[2].text, line, w[2].col);
            if (n < 1 || n > 8) throw ParseError(line, w[2].col, "matrix size must be 1..8");
            ExprParser p(rest_of(w, 3, line), line, w[3].col, nullptr);
            MatDef def{w[1].text, p.flat_literal(static_cast<std::size_t>(n))};
            p.expect_end();
            mats_.insert(def.name);
            return def;
        }
        if (w.size() < 4 || w[2].text != "=") throw ArityError(line, w[0].col, "mat NAME = MATRIX");
        define(w[1], line);
        ExprParser p(rest_of(w, 3, line), line, w[3].col, nullptr,
                     [this](const std::string& n) { return is_matrix(n); });
        MatDef def{w[1].text, p.mat_product()};
        p.expect_end();
        mats_.insert(def.name);
        return def;
    }

    Statement subst(const std::vector<WordTok>& w, int line) {
        if (w.size() != 7 || w[2].text != ":" || w[4].text != "->" || w[6].text != "{")
            throw ArityError(line, w[0].col, "subst NAME : SOURCE -> TARGET {");
        define(w[1], line);
        const auto from = algebra_alphabet(w[3], line);
        const auto to = algebra_alphabet(w[5], line);
        SubstDef def{w[1].text, w[3].text, w[5].text, {}};
        std::set<std::string> seen;
        for (const auto& [bw, bl] : block(line)) {
            if (bw.size() < 3 || bw[1].text != "=") throw ParseError(bl, bw[0].col, "expected GEN = EXPRESSION");
            if (!from->find(bw[0].text))
                throw UnknownName(bl, bw[0].col, "'" + bw[0].text + "' is not a generator of " + w[3].text);
            if (!seen.insert(bw[0].text).second)
                throw ParseError(bl, bw[0].col, "second image for '" + bw[0].text + "'");
            ExprParser p(lines_[bl - 1].substr(static_cast<std::size_t>(bw[2].col - 1)), bl, bw[2].col, to.get());
            Expr e = p.sum();
            p.expect_end();
            def.images.emplace_back(bw[0].text, std::move(e));
        }
        substs_.insert(def.name);
        return def;
    }

    Statement command(const std::vector<WordTok>& w, int line) {
        const auto& verb = w[0].text;
        Command c{verb, {}, {}, std::nullopt, {}};
        auto arity = [&](bool ok, const char* usage) {
            if (!ok) throw ArityError(line, w[0].col, std::string("usage: ") + usage);
        };
        auto mat_from = [&](const std::string& text, int col) {
            ExprParser p(text, line, col, nullptr, [this](const std::string& n) { return is_matrix(n); });
            MatExpr m = p.mat_product();
            p.expect_end();
            return m;
        };
        // key=value options after the positional words; returns positional count.
        auto options = [&](std::size_t from, const std::set<std::string>& allowed) {
            std::size_t positional = w.size();
            for (std::size_t i = from; i < w.size(); ++i) {
                const auto eq = w[i].text.find('=');
                if (w[i].quoted || eq == std::string::npos || eq == 0) {
                    if (positional != w.size())
                        throw ParseError(line, w[i].col, "positional argument after an option");
                    continue;
                }
                if (positional == w.size()) positional = i;
                const auto key = w[i].text.substr(0, eq);
                if (!allowed.count(key)) throw ParseError(line, w[i].col, "unknown option '" + key + "'");
                c.options.emplace_back(key, w[i].text.substr(eq + 1));
            }
            return positional;
        };

        if (verb == "nf") {
            arity(w.size() >= 3, "nf ALGEBRA \"EXPRESSION\"");
            const auto alphabet = algebra_alphabet(w[1], line);
            c.names.push_back(w[1].text);
            std::string text = w[2].quoted ? w[2].text : rest_of(w, 2, line);
            if (w[2].quoted && w.size() != 3) arity(false, "nf ALGEBRA \"EXPRESSION\"");
            ExprParser p(text, line, w[2].col, alphabet.get());
            c.expr = p.sum();
            p.expect_end();
        } else if (verb == "limit") {
            arity(w.size() >= 2, "limit MATRIX [== MATRIX]");
            ExprParser p(rest_of(w, 1, line), line, w[1].col, nullptr,
                         [this](const std::string& n) { return is_matrix(n); });
            c.mats.push_back(p.mat_product());
            if (p.peek_op("==")) {
                p.next();
                c.mats.push_back(p.mat_product());
            }
            p.expect_end();
        } else if (verb == "qybe") {
            arity(w.size() >= 2, "qybe MATRIX");
            c.mats.push_back(mat_from(rest_of(w, 1, line), w[1].col));
        } else if (verb == "rtt") {
            const auto pos = options(1, {"sign"});
            arity(pos == 3 || pos == 7, "rtt MATRIX ALGEBRA [A11 A12 A21 A22] [sign=+1|-1]");
            c.mats.push_back(mat_from(w[1].text, w[1].col));
            const auto alphabet = algebra_alphabet(w[2], line);
            c.names.push_back(w[2].text);
            for (std::size_t i = 3; i < pos; ++i) {
                if (!alphabet->find(w[i].text))
                    throw UnknownName(line, w[i].col, "unknown generator '" + w[i].text + "'");
                c.names.push_back(w[i].text);
            }
            if (pos == 3) {
                const auto entries = default_entries(w[2].text);
                if (!entries) throw ArityError(line, w[2].col, "name the four matrix entries of " + w[2].text);
                c.names.insert(c.names.end(), entries->begin(), entries->end());
            }
            for (const auto& [k, v] : c.options)
                if (v != "+1" && v != "-1" && v != "1") throw ParseError(line, w[0].col, "sign must be +1 or -1");
        } else if (verb == "contract") {
            const auto pos = options(1, {"expect"});
            arity(pos == 2, "contract SUBST [expect=ALGEBRA]");
            if (!substs_.count(w[1].text)) throw UnknownName(line, w[1].col, "unknown substitution '" + w[1].text + "'");
            c.names.push_back(w[1].text);
            for (const auto& [k, v] : c.options) algebra_alphabet(WordTok{v, w[0].col, false}, line);
        } else if (verb == "covariance" || verb == "product-check" || verb == "verify-paper") {
            arity(w.size() == 1, verb.c_str());
        } else if (verb == "inverse-check") {
            const auto pos = options(1, {"h"});
            arity(pos == 1, "inverse-check [h=RATIONAL]");
            for (const auto& [k, v] : c.options) {
                try {
                    Rat r(v);
                    (void)r;
                } catch (const std::exception&) {
                    throw ParseError(line, w[1].col, "h must be a rational number");
                }
            }
        } else if (verb == "confluence") {
            const auto pos = options(1, {"bound"});
            arity(pos == 2, "confluence ALGEBRA [bound=N]");
            algebra_alphabet(w[1], line);
            c.names.push_back(w[1].text);
            for (const auto& [k, v] : c.options)
                if (parse_int(v, line, w[0].col) < 3) throw ParseError(line, w[0].col, "bound must be at least 3");
        } else {
            throw ParseError(line, w[0].col, "unknown command '" + verb + "'");
        }
        return c;
    }

    std::vector<std::string> lines_;
    std::size_t idx_ = 0;
    Script script_;
    std::set<std::string> defined_;
    std::map<std::string, AlphabetPtr> algebras_;
    std::map<std::string, std::vector<std::string>> entry_order_;
    std::set<std::string> mats_;
    std::set<std::string> substs_;
};

}  // namespace

// ------------------------------------------------------------------ parse

Script parse(std::string_view source) {
    Parser p(source);
    return p.parse();
}

Expr parse_expr(std::string_view text, const Alphabet* alphabet) {
    ExprParser p(text, 1, 1, alphabet);
    Expr e = p.sum();
    p.expect_end();
    return e;
}

// ------------------------------------------------------------------ print

namespace {

bool is_additive(const Expr& e) { return e.kind == Expr::Kind::add || e.kind == Expr::Kind::sub; }
bool is_multiplicative(const Expr& e) { return e.kind == Expr::Kind::mul || e.kind == Expr::Kind::div; }

std::string paren(const Expr& e, bool wrap) { return wrap ? "(" + print(e) + ")" : print(e); }

}  // namespace

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number:
            return e.value.get_str();
        case Expr::Kind::symbol:
        case Expr::Kind::generator:
            return e.name;
        case Expr::Kind::neg:
            return "-" + paren(e.args[0], is_additive(e.args[0]) || is_multiplicative(e.args[0]));
        case Expr::Kind::add:
            return print(e.args[0]) + " + " + paren(e.args[1], is_additive(e.args[1]));
        case Expr::Kind::sub:
            return print(e.args[0]) + " - " + paren(e.args[1], is_additive(e.args[1]) || e.args[1].kind == Expr::Kind::neg);
        case Expr::Kind::mul:
        case Expr::Kind::div: {
            const auto& r = e.args[1];
            return paren(e.args[0], is_additive(e.args[0])) + (e.kind == Expr::Kind::mul ? "*" : "/") +
                   paren(r, is_additive(r) || is_multiplicative(r) || r.kind == Expr::Kind::neg);
        }
        case Expr::Kind::pow: {
            const auto& b = e.args[0];
            const bool atomic = b.kind == Expr::Kind::number || b.kind == Expr::Kind::symbol ||
                                b.kind == Expr::Kind::generator;
            return paren(b, !atomic) + "^" + std::to_string(e.exponent);
        }
    }
    return {};
}

std::string print(const MatExpr& m) {
    switch (m.kind) {
        case MatExpr::Kind::name:
            return m.name;
        case MatExpr::Kind::literal: {
            std::string s = "[";
            for (std::size_t i = 0; i < m.rows.size(); ++i) {
                s += i ? ", [" : "[";
                for (std::size_t j = 0; j < m.rows[i].size(); ++j) s += (j ? ", " : "") + print(m.rows[i][j]);
                s += "]";
            }
            return s + "]";
        }
        case MatExpr::Kind::call: {
            std::string s = m.name + "(";
            bool first = true;
            if (m.scalar) {
                s += print(*m.scalar);
                first = false;
            }
            for (const auto& a : m.args) {
                s += (first ? "" : ", ") + print(a);
                first = false;
            }
            return s + ")";
        }
        case MatExpr::Kind::product: {
            const auto& r = m.args[1];
            return print(m.args[0]) + " * " + (r.kind == MatExpr::Kind::product ? "(" + print(r) + ")" : print(r));
        }
    }
    return {};
}

namespace {

struct StatementPrinter {
    std::string operator()(const AlgebraDef& d) const {
        if (d.alias) return "algebra " + d.name + " = " + *d.alias;
        std::string s = "algebra " + d.name + " {\n";
        for (const auto& g : d.gens)
            s += "  gen " + g.name + " parity=" + (g.parity == Parity::odd ? "odd" : "even") + " family=" + g.family +
                 " prec=" + std::to_string(g.prec) + "\n";
        for (const auto& c : d.crosses)
            s += "  cross " + c.family_a + " " + c.family_b + " sign=" + (c.sign < 0 ? "-1" : "+1") + "\n";
        for (const auto& r : d.rels) s += "  rel " + print(r.lhs) + (r.rhs ? " = " + print(*r.rhs) : "") + "\n";
        return s + "}";
    }
    std::string operator()(const MatDef& d) const { return "mat " + d.name + " = " + print(d.value); }
    std::string operator()(const SubstDef& d) const {
        std::string s = "subst " + d.name + " : " + d.from + " -> " + d.to + " {\n";
        for (const auto& [g, e] : d.images) s += "  " + g + " = " + print(e) + "\n";
        return s + "}";
    }
    std::string operator()(const Command& c) const {
        std::string s = c.verb;
        if (c.verb == "nf") return s + " " + c.names[0] + " \"" + print(*c.expr) + "\"";
        if (c.verb == "limit") {
            s += " " + print(c.mats[0]);
            if (c.mats.size() > 1) s += " == " + print(c.mats[1]);
            return s;
        }
        if (c.verb == "qybe") return s + " " + print(c.mats[0]);
        if (c.verb == "rtt") s += " " + print(c.mats[0]);
        for (const auto& n : c.names) s += " " + n;
        for (const auto& [k, v] : c.options) s += " " + k + "=" + v;
        return s;
    }
};

}  // namespace

std::string print(const Statement& s) { return std::visit(StatementPrinter{}, s); }

std::string print(const Script& s) {
    std::string out;
    for (const auto& st : s.statements) out += print(st) + "\n";
    return out;
}

// ------------------------------------------------------------------- eval

Element eval(const Expr& e, const AlphabetPtr& a) {
    switch (e.kind) {
        case Expr::Kind::number:
            return Element::scalar(a, Coeff(e.value));
        case Expr::Kind::symbol:
            return Element::scalar(a, e.name == "q" ? Coeff::q() : Coeff::h());
        case Expr::Kind::generator:
            return Element::gen(a, e.name);
        case Expr::Kind::neg:
            return -eval(e.args[0], a);
        case Expr::Kind::add:
            return eval(e.args[0], a) + eval(e.args[1], a);
        case Expr::Kind::sub:
            return eval(e.args[0], a) - eval(e.args[1], a);
        case Expr::Kind::mul:
            return free_mul(eval(e.args[0], a), eval(e.args[1], a));
        case Expr::Kind::div: {
            const Element num = eval(e.args[0], a);
            const Coeff den = eval_scalar(e.args[1]);
            if (den.is_zero()) throw NotDivisible("division by zero");
            return map_coeffs(num, [&](const Coeff& c) { return exact_div(c, den); });
        }
        case Expr::Kind::pow: {
            if (e.exponent < 0) return Element::scalar(a, eval_scalar(e));
            Element base = eval(e.args[0], a);
            Element r = Element::scalar(a, 1);
            for (int i = 0; i < e.exponent; ++i) r = free_mul(r, base);
            return r;
        }
    }
    return {};
}

Coeff eval_scalar(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number:
            return Coeff(e.value);
        case Expr::Kind::symbol:
            return e.name == "q" ? Coeff::q() : Coeff::h();
        case Expr::Kind::generator:
            throw std::invalid_argument("generator '" + e.name + "' in a scalar expression");
        case Expr::Kind::neg:
            return -eval_scalar(e.args[0]);
        case Expr::Kind::add:
            return eval_scalar(e.args[0]) + eval_scalar(e.args[1]);
        case Expr::Kind::sub:
            return eval_scalar(e.args[0]) - eval_scalar(e.args[1]);
        case Expr::Kind::mul:
            return eval_scalar(e.args[0]) * eval_scalar(e.args[1]);
        case Expr::Kind::div: {
            const Coeff den = eval_scalar(e.args[1]);
            if (den.is_zero()) throw NotDivisible("division by zero");
            return exact_div(eval_scalar(e.args[0]), den);
        }
        case Expr::Kind::pow:
            return eval_scalar(e.args[0]).pow(e.exponent);
    }
    return {};
}

// -------------------------------------------------------------------- run

const char* status_name(Status s) {
    switch (s) {
        case Status::verified:
            return "verified";
        case Status::falsified:
            return "falsified";
        case Status::error:
            return "error";
    }
    return "?";
}

namespace {

std::string scalmat_nonzero(const ScalMat& m) {
    std::string s;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!m(i, j).is_zero())
                s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + m(i, j).str() + "\n";
    return s;
}

struct Outcome {
    Status status = Status::verified;
    std::string witness;
    std::vector<std::string> notes;
};

Outcome verdict(bool ok, std::string witness) {
    if (ok) return {};
    if (witness.empty()) witness = "(nonzero residual)";
    return {Status::falsified, std::move(witness), {}};
}

class Runner {
public:
    explicit Runner(const RunOptions& opt) : opt_(opt) {}

    void define(const AlgebraDef& d) {
        algebras_[d.name] = std::make_shared<AlgebraSpec>(build_algebra(d));
    }

    void define(const MatDef& d) { mats_[d.name] = mat(d.value); }

    void define(const SubstDef& d) {
        const auto& from = algebra(d.from);
        const auto& to = algebra(d.to);
        Substitution s{from.alphabet, to.alphabet, {}};
        for (const auto& [g, e] : d.images) s.images[from.alphabet->id_of(g)] = eval(e, to.alphabet);
        substs_[d.name] = {std::move(s), d.from, d.to};
    }

    std::vector<Outcome> execute(const Command& c) {
        if (c.verb == "verify-paper") return verify_paper();
        return {execute_one(c)};
    }

private:
    struct SubstEntry {
        Substitution subst;
        std::string from;
        std::string to;
    };

    const AlgebraSpec& algebra(const std::string& name) const {
        if (!name.starts_with("builtin:")) {
            auto it = algebras_.find(name);
            if (it != algebras_.end()) return *it->second;
        }
        return *builtin_algebra(strip_builtin(name));
    }

    const RuleSystem& rules(const std::string& name) {
        const auto& spec = algebra(name);
        if (&spec == &gr::gr_q2()) return gr::rules_q();
        if (&spec == &gr::gr_h2()) return gr::rules_h();
        auto it = rules_.find(&spec);
        if (it == rules_.end()) it = rules_.emplace(&spec, std::make_unique<RuleSystem>(spec)).first;
        return *it->second;
    }

    ScalMat mat(const MatExpr& m) const {
        switch (m.kind) {
            case MatExpr::Kind::name: {
                if (!m.name.starts_with("builtin:")) {
                    auto it = mats_.find(m.name);
                    if (it != mats_.end()) return it->second;
                }
                return *builtin_matrix(strip_builtin(m.name));
            }
            case MatExpr::Kind::literal: {
                std::vector<Coeff> entries;
                for (const auto& row : m.rows)
                    for (const auto& e : row) entries.push_back(eval_scalar(e));
                return ScalMat(m.rows.size(), std::move(entries));
            }
            case MatExpr::Kind::call: {
                if (m.name == "kron") return kron(mat(m.args[0]), mat(m.args[1]));
                if (m.name == "sim") return similarity(mat(m.args[0]), mat(m.args[1]));
                if (m.name == "inv") return inverse(mat(m.args[0]));
                if (m.name == "limit") return limit_mat(mat(m.args[0]));
                return scale_mat(eval_scalar(*m.scalar), mat(m.args[0]));
            }
            case MatExpr::Kind::product:
                return mat(m.args[0]) * mat(m.args[1]);
        }
        throw std::logic_error("bad matrix expression");
    }

    Outcome execute_one(const Command& c) {
        if (c.verb == "nf") {
            const auto& rs = rules(c.names[0]);
            const Element r = normal_form(eval(*c.expr, rs.alphabet()), rs);
            Outcome o = verdict(r.is_zero(), "nf = " + r.str());
            if (r.is_zero()) o.notes.push_back("nf = 0");
            return o;
        }
        if (c.verb == "limit") {
            ScalMat lim;
            try {
                lim = limit_mat(mat(c.mats[0]));
            } catch (const MatrixPoleAtQ1& e) {
                return {Status::falsified, e.what(), {}};
            }
            if (c.mats.size() == 1) return {Status::verified, {}, {"limit =\n" + lim.str()}};
            const ScalMat want = mat(c.mats[1]);
            if (want.dim() != lim.dim()) return {Status::falsified, "dimension mismatch", {}};
            return verdict(lim == want, "limit - expected:\n" + scalmat_nonzero(lim - want));
        }
        if (c.verb == "qybe") {
            const ScalMat r = mat(c.mats[0]);
            if (r.dim() != 4) throw std::invalid_argument("qybe needs a 4x4 matrix");
            const ScalMat res = qybe_residual(r);
            return verdict(res.is_zero(), "R12 R13 R23 - R23 R13 R12:\n" + scalmat_nonzero(res));
        }
        if (c.verb == "rtt") {
            const ScalMat r = mat(c.mats[0]);
            if (r.dim() != 4) throw std::invalid_argument("rtt needs a 4x4 matrix");
            const auto& rs = rules(c.names[0]);
            std::array<std::string, 4> entries;
            for (std::size_t i = 0; i < 4; ++i) entries[i] = c.names.at(i + 1);
            int sign = 1;
            for (const auto& [k, v] : c.options) sign = v == "-1" ? -1 : 1;
            const auto res = rtt_residual(r, gr::generator_matrix(rs.alphabet(), entries), rs, sign);
            return verdict(res.is_zero(), res.nonzero_str());
        }
        if (c.verb == "contract") return contract(c);
        if (c.verb == "covariance") {
            const auto cov = gr::combined_covariance_span();
            const bool ok = span_equal(cov, relation_span(gr::gr_h2().alphabet, gr::gr_h2().relations));
            std::string w;
            for (const auto& e : reduced_basis(cov.elements())) w += e.str() + "\n";
            Outcome o = verdict(ok, "derived relations:\n" + w);
            o.notes.push_back("combined rank " + std::to_string(cov.rank()));
            return o;
        }
        if (c.verb == "inverse-check") {
            std::optional<Rat> hv;
            for (const auto& [k, v] : c.options) {
                hv = Rat(v);
                hv->canonicalize();
            }
            const auto d = gr::inverse_data(hv);
            const auto [left, right] = gr::inverse_residuals(d);
            const auto det = gr::det_identity_residual(d);
            std::string w;
            if (!left.is_zero()) w += "left inverse residual:\n" + left.nonzero_str();
            if (!right.is_zero()) w += "right inverse residual:\n" + right.nonzero_str();
            if (!det.is_zero()) w += "determinant identity residual:\n" + det.nonzero_str();
            Outcome o = verdict(w.empty(), w);
            o.notes.push_back(std::string("left inverse ") + (left.is_zero() ? "holds" : "fails"));
            o.notes.push_back(std::string("right inverse ") + (right.is_zero() ? "holds" : "fails"));
            o.notes.push_back(std::string("determinant identity ") + (det.is_zero() ? "holds" : "fails"));
            return o;
        }
        if (c.verb == "product-check") {
            std::string w;
            for (const auto& chk : gr::product_theorem())
                if (!chk.holds()) w += chk.name + " = " + chk.residual.str() + "\n";
            const auto& pd = gr::product_data();
            for (const Element* e : {&pd.a, &pd.b, &pd.c, &pd.d})
                for (const auto& [word, coef] : e->terms())
                    if (word.size() % 2) w += "odd word " + e->word_str(word) + "\n";
            return verdict(w.empty(), w);
        }
        if (c.verb == "confluence") {
            int bound = opt_.degree_bound;
            for (const auto& [k, v] : c.options) bound = std::stoi(v);
            const auto& rs = rules(c.names[0]);
            std::string w;
            for (const auto& o : check_confluence(rs, bound)) w += o.str(*rs.alphabet()) + "\n";
            Outcome o = verdict(w.empty(), w);
            o.notes.push_back(std::to_string(rs.rules().size()) + " rules, degree bound " + std::to_string(bound));
            return o;
        }
        throw std::logic_error("unhandled command " + c.verb);
    }

    Outcome contract(const Command& c) {
        const auto& entry = substs_.at(c.names[0]);
        std::string expect = entry.to;
        for (const auto& [k, v] : c.options) expect = v;
        const auto& from = algebra(entry.from);
        const auto& target = entry.subst.target;
        std::vector<Element> rels;
        for (const auto& r : from.relations) rels.push_back(apply_subst(r, entry.subst));
        const auto lim = limit_span(relation_span(target, rels));
        std::vector<Element> want;
        for (const auto& r : algebra(expect).relations) want.push_back(transport(r, target));
        const bool ok = span_equal(lim, relation_span(target, want));
        std::string basis;
        for (const auto& e : reduced_basis(lim.elements())) basis += e.str() + "\n";
        Outcome o = verdict(ok, "limit relations:\n" + basis);
        o.notes.push_back("limit rank " + std::to_string(lim.rank()));
        return o;
    }

    std::vector<Outcome> verify_paper() {
        suite::Options so;
        so.degree_bound = opt_.degree_bound;
        std::vector<Outcome> out;
        for (const auto& crit : suite::run_all(so)) {
            Outcome o;
            o.notes.push_back("criterion " + std::to_string(crit.id) + ": " + crit.title);
            std::string joined;
            for (const auto& d : crit.details) joined += d + (d.ends_with("\n") ? "" : "\n");
            if (crit.pass) {
                o.notes.insert(o.notes.end(), crit.details.begin(), crit.details.end());
            } else {
                o.status = Status::falsified;
                o.witness = joined.empty() ? "criterion failed" : joined;
            }
            out.push_back(std::move(o));
        }
        return out;
    }

    RunOptions opt_;
    std::map<std::string, std::shared_ptr<AlgebraSpec>> algebras_;
    std::map<std::string, ScalMat> mats_;
    std::map<std::string, SubstEntry> substs_;
    std::map<const AlgebraSpec*, std::unique_ptr<RuleSystem>> rules_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

RunResult run(const Script& s, const RunOptions& opt) {
    RunResult result;
    Runner runner(opt);
    bool falsified = false;
    bool errored = false;
    for (std::size_t i = 0; i < s.statements.size(); ++i) {
        const auto& st = s.statements[i];
        const auto echo = first_line(print(st));
        const auto* cmd = std::get_if<Command>(&st);
        try {
            if (!cmd) {
                std::visit([&](const auto& d) {
                    if constexpr (!std::is_same_v<std::decay_t<decltype(d)>, Command>) runner.define(d);
                }, st);
                continue;
            }
            const auto outcomes = runner.execute(*cmd);
            for (std::size_t k = 0; k < outcomes.size(); ++k) {
                const auto& o = outcomes[k];
                Verdict v{i + 1, echo, o.status, o.witness, o.notes};
                if (outcomes.size() > 1) v.command += " #" + std::to_string(k + 1);
                falsified |= o.status == Status::falsified;
                result.verdicts.push_back(std::move(v));
            }
        } catch (const std::exception& e) {
            errored = true;
            result.verdicts.push_back({i + 1, echo, Status::error, e.what(), {}});
            // Later statements may depend on a failed definition.
            if (!cmd) break;
        }
    }
    result.exit_code = errored ? 2 : falsified ? 1 : 0;
    return result;
}

namespace {

std::string indent(const std::string& text, const std::string& pad) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out += pad + line + "\n";
    return out;
}

}  // namespace

std::string report(const RunResult& r) {
    std::string out;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& v : r.verdicts) {
        ++counts[static_cast<int>(v.status)];
        out += "[" + std::to_string(v.index) + "] " + v.command + "\n";
        out += std::string("    ") + status_name(v.status) + "\n";
        for (const auto& n : v.notes) out += indent(n, "    ");
        if (!v.witness.empty()) out += indent(v.witness, "      ");
    }
    out += std::to_string(r.verdicts.size()) + " verdicts: " + std::to_string(counts[0]) + " verified, " +
           std::to_string(counts[1]) + " falsified, " + std::to_string(counts[2]) + " errors\n";
    return out;
}

std::string porcelain(const RunResult& r) {
    std::string out;
    for (const auto& v : r.verdicts) {
        nlohmann::json j;
        j["index"] = v.index;
        j["command"] = v.command;
        j["status"] = status_name(v.status);
        j["witness"] = v.witness;
        j["notes"] = v.notes;
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace qh::script
