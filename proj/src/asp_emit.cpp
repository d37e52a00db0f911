#include "argtrace/asp_emit.hpp"

#include "argtrace/error.hpp"
#include "argtrace/translate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace argtrace::asp {

// ---------------------------------------------------------------------------
// Term construction helpers

namespace {

Term constant(std::string name) { return {Term::Kind::Constant, std::move(name), 0, {}}; }
Term integer(long long v) { return {Term::Kind::Integer, {}, v, {}}; }
Term variable(std::string name) { return {Term::Kind::Variable, std::move(name), 0, {}}; }
Term compound(std::string name, std::vector<Term> args) { return {Term::Kind::Compound, std::move(name), 0, std::move(args)}; }
Term binary(std::string op, Term lhs, Term rhs) {
    return {Term::Kind::Binary, std::move(op), 0, {std::move(lhs), std::move(rhs)}};
}

bool is_plain_constant(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// Argument names that would read as variables or numbers are quoted.
Term arg_term(const ArgumentId& x) {
    if (is_plain_constant(x) && x != "not") return constant(x);
    return {Term::Kind::String, x, 0, {}};
}

Term fluent_term(const FluentId& f) {
    if (const auto* p = std::get_if<Present>(&f)) return compound("p", {arg_term(p->arg)});
    if (const auto* a = std::get_if<Acceptable>(&f)) return compound("a", {arg_term(a->arg)});
    const auto& c = std::get<CanAttack>(f);
    return compound("cA", {arg_term(c.attacker), arg_term(c.target)});
}

Term literal_term(Literal l, const Context& ctx) {
    Term f = fluent_term(ctx.fluents().at(l.fluent));
    return l.positive ? f : compound("neg", {std::move(f)});
}

Term event_term(const EventId& e) {
    if (const auto* x = std::get_if<Enunciate>(&e)) return compound("enunciate", {arg_term(x->arg)});
    if (const auto* x = std::get_if<MakesUnacc>(&e)) {
        return compound("makesUnacc", {arg_term(x->attacker), arg_term(x->target)});
    }
    if (const auto* x = std::get_if<MakesAcc>(&e)) return compound("makesAcc", {arg_term(x->arg)});
    const auto& ini = std::get<Ini>(e);
    Term f = fluent_term(ini.fluent);
    return compound("ini", {ini.positive ? f : compound("neg", {std::move(f)})});
}

BodyLiteral pos(Term atom) { return {BodyLiteral::Kind::Positive, std::move(atom)}; }

Statement fact(Term head) { return {Statement::Kind::Rule, std::move(head), {}}; }
Statement rule(Term head, std::vector<BodyLiteral> body) { return {Statement::Kind::Rule, std::move(head), std::move(body)}; }

void put(std::string& out, const Statement& s) { out += to_string(s) + "\n"; }

// Emits body literals for `f`; disjunctions become auxiliary cond/3 atoms
// with one rule per disjunct.
class ConditionEmitter {
public:
    ConditionEmitter(const Context& ctx, Term event, std::string& out) : ctx_(ctx), event_(std::move(event)), out_(out) {}

    std::vector<BodyLiteral> body(const Formula& f) {
        std::vector<BodyLiteral> lits;
        append(f, lits);
        return lits;
    }

private:
    void append(const Formula& f, std::vector<BodyLiteral>& lits) {
        switch (f.kind()) {
            case Formula::Kind::Lit:
                lits.push_back(pos(compound("holds", {literal_term(f.literal(), ctx_), variable("T")})));
                return;
            case Formula::Kind::And:
                for (const auto& op : f.operands()) append(op, lits);
                return;
            case Formula::Kind::Or: {
                const Term head = compound("cond", {event_, integer(next_id_++), variable("T")});
                for (const auto& op : f.operands()) {
                    std::vector<BodyLiteral> sub;
                    append(op, sub);
                    put(out_, rule(head, std::move(sub)));
                }
                lits.push_back(pos(head));
                return;
            }
        }
    }

    const Context& ctx_;
    Term event_;
    std::string& out_;
    long long next_id_ = 1;
};

constexpr const char* kSemanticsRules = R"(time(0..horizon).
holds(L,0) :- init(L).
o(ini(L),-1) :- init(L).
compl(F,neg(F)) :- fluent(F).
compl(neg(F),F) :- fluent(F).
prio(E1,E3) :- prio(E1,E2), prio(E2,E3).
triggered(T) :- exogenous(E), tri(E,T).
preempted(E,T) :- o(E2,T), prio(E2,E).
o(E,T) :- exogenous(E), tri(E,T), not preempted(E,T).
quiet(T) :- time(T), not triggered(T).
done(O,T+1) :- seq(A,O), o(A,T), time(T+1).
done(O,T+1) :- done(O,T), time(T+1).
open(O,T) :- seq(_,O), time(T), not done(O,T).
later(O,T) :- open(O,T), open(P,T), P < O.
o(A,T) :- seq(A,O), open(O,T), not later(O,T), quiet(T), pre(A,T).
caused(L,T) :- o(E,T), eff(E,L), time(T).
holds(L,T+1) :- caused(L,T).
holds(L,T+1) :- holds(L,T), compl(L,C), not caused(C,T), time(T+1).
)";

constexpr const char* kCausalityRules = R"(dness(o(E,T),h(L,T+1)) :- o(E,T), eff(E,L), not holds(L,T).
span(T) :- o(_,T), time(T).
span(T) :- span(T+1), time(T).
dness(o(E,S),h(L,T+1)) :- dness(o(E,S),h(L,T)), holds(L,T+1), span(T).
ness(O,H) :- dness(O,H).
actual(O,o(E,T)) :- o(E,T), trilit(E,L), holds(L,T), ness(O,h(L,T)).
ness(O,H) :- dness(P,H), actual(O,P).
)";

}  // namespace

std::string ProgramText::text() const {
    return "%% sequence\n" + sequence + "%% context\n" + context + "%% semantics\n" + semantics + "%% causality\n" +
           causality;
}

ProgramText emit_program(const Setting& setting, std::optional<Time> horizon) {
    const Context& ctx = setting.context();
    ProgramText prog;

    for (const auto& ranked : setting.sequence()) {
        put(prog.sequence, fact(compound("seq", {event_term(ranked.action), integer(static_cast<long long>(ranked.rank))})));
    }

    std::string& out = prog.context;
    const Time bound = horizon.value_or(horizon_cap(setting));
    out += to_string(Statement{Statement::Kind::Const, binary("=", constant("horizon"), integer(bound)), {}}) + "\n";

    const ArgGraph g = context_graph(ctx);
    for (const auto& x : g.arguments) put(out, fact(compound("argument", {arg_term(x)})));
    for (const auto& [y, x] : g.attacks) put(out, fact(compound("canAttack", {arg_term(y), arg_term(x)})));
    for (const auto& f : ctx.fluents()) put(out, fact(compound("fluent", {fluent_term(f)})));
    for (const Literal l : ctx.initial_state().literals()) put(out, fact(compound("init", {literal_term(l, ctx)})));

    for (const auto& spec : ctx.events()) {
        if (spec.kind == EventClass::Initial) continue;
        const Term e = event_term(spec.id);
        put(out, fact(compound(spec.kind == EventClass::Action ? "action" : "exogenous", {e})));
        for (const Literal l : spec.eff) put(out, fact(compound("eff", {e, literal_term(l, ctx)})));
        std::set<Literal> seen;
        for (const Literal l : spec.tri.literals()) {
            if (seen.insert(l).second) put(out, fact(compound("trilit", {e, literal_term(l, ctx)})));
        }
        ConditionEmitter conditions(ctx, e, out);
        auto tri_body = conditions.body(spec.tri);
        tri_body.push_back(pos(compound("time", {variable("T")})));
        put(out, rule(compound("tri", {e, variable("T")}), std::move(tri_body)));
        if (spec.kind == EventClass::Action) {
            auto pre_body = conditions.body(spec.pre);
            pre_body.push_back(pos(compound("time", {variable("T")})));
            put(out, rule(compound("pre", {e, variable("T")}), std::move(pre_body)));
        }
    }
    for (const auto& [hi, lo] : ctx.priority_pairs()) {
        put(out, fact(compound("prio", {event_term(ctx.event(hi).id), event_term(ctx.event(lo).id)})));
    }

    prog.semantics = kSemanticsRules;
    prog.causality = kCausalityRules;
    return prog;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Constant:
        case Term::Kind::Variable: return t.name;
        case Term::Kind::Anonymous: return "_";
        case Term::Kind::Integer: return std::to_string(t.value);
        case Term::Kind::String: {
            std::string out = "\"";
            for (const char c : t.name) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out + "\"";
        }
        case Term::Kind::Compound: {
            std::string out = t.name + "(";
            for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? "," : "") + to_string(t.args[i]);
            return out + ")";
        }
        case Term::Kind::Binary: return to_string(t.args.at(0)) + t.name + to_string(t.args.at(1));
        case Term::Kind::Interval: return to_string(t.args.at(0)) + ".." + to_string(t.args.at(1));
    }
    return {};
}

std::string to_string(const Statement& s) {
    if (s.kind == Statement::Kind::Const) return "#const " + to_string(s.head) + ".";
    std::string out = to_string(s.head);
    if (!s.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < s.body.size(); ++i) {
            if (i) out += ", ";
            const auto& lit = s.body[i];
            switch (lit.kind) {
                case BodyLiteral::Kind::Positive: out += to_string(lit.atom); break;
                case BodyLiteral::Kind::Negative: out += "not " + to_string(lit.atom); break;
                case BodyLiteral::Kind::Comparison:
                    out += to_string(lit.atom.args.at(0)) + " " + lit.atom.name + " " + to_string(lit.atom.args.at(1));
                    break;
            }
        }
    }
    return out + ".";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Kind { Ident, Var, Anon, Int, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run(std::vector<std::pair<std::size_t, std::string>>& headers) {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '%') {
                const std::size_t end = std::min(src_.find('\n', pos_), src_.size());
                const std::string_view comment = src_.substr(pos_, end - pos_);
                if (comment.starts_with("%%")) {
                    std::string name(comment.substr(2));
                    name.erase(0, name.find_first_not_of(' '));
                    headers.emplace_back(out.size(), name);
                }
                pos_ = end;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    ++pos_;
                }
                std::string word(src_.substr(start, pos_ - start));
                Token::Kind kind = Token::Kind::Ident;
                if (word == "_") {
                    kind = Token::Kind::Anon;
                } else if (std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_') {
                    kind = Token::Kind::Var;
                }
                out.push_back({kind, std::move(word), line_});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::size_t start = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                out.push_back({Token::Kind::Int, std::string(src_.substr(start, pos_ - start)), line_});
            } else if (c == '"') {
                std::string body;
                ++pos_;
                while (pos_ < src_.size() && src_[pos_] != '"') {
                    if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
                    if (src_[pos_] == '\n') fail("unterminated string");
                    body += src_[pos_++];
                }
                if (pos_ >= src_.size()) fail("unterminated string");
                ++pos_;
                out.push_back({Token::Kind::String, std::move(body), line_});
            } else {
                static constexpr std::array<std::string_view, 6> multi = {"#const", ":-", "..", "<=", ">=", "!="};
                const std::string_view rest = src_.substr(pos_);
                bool matched = false;
                for (const auto op : multi) {
                    if (rest.starts_with(op)) {
                        out.push_back({Token::Kind::Punct, std::string(op), line_});
                        pos_ += op.size();
                        matched = true;
                        break;
                    }
                }
                if (matched) continue;
                if (std::string_view("(),.+-*<>=").find(c) == std::string_view::npos) {
                    fail(std::string("unexpected character '") + c + "'");
                }
                out.push_back({Token::Kind::Punct, std::string(1, c), line_});
                ++pos_;
            }
        }
        out.push_back({Token::Kind::End, "", line_});
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + why);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    std::size_t position() const noexcept { return i_; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    Statement statement() {
        Statement s;
        if (is_punct("#const")) {
            ++i_;
            Term name = primary();
            if (name.kind != Term::Kind::Constant) fail("#const needs a constant name");
            expect("=");
            s.kind = Statement::Kind::Const;
            s.head = binary("=", std::move(name), term());
            expect(".");
            return s;
        }
        s.head = term();
        if (s.head.kind != Term::Kind::Constant && s.head.kind != Term::Kind::Compound) fail("rule head must be an atom");
        if (is_punct(":-")) {
            ++i_;
            s.body.push_back(body_literal());
            while (is_punct(",")) {
                ++i_;
                s.body.push_back(body_literal());
            }
        }
        expect(".");
        return s;
    }

    Term term() {
        Term lhs = additive();
        if (is_punct("..")) {
            ++i_;
            return {Term::Kind::Interval, {}, 0, {std::move(lhs), additive()}};
        }
        return lhs;
    }

private:
    BodyLiteral body_literal() {
        if (peek().kind == Token::Kind::Ident && peek().text == "not") {
            ++i_;
            Term atom = term();
            return {BodyLiteral::Kind::Negative, std::move(atom)};
        }
        Term lhs = term();
        for (const char* op : {"<=", ">=", "!=", "<", ">", "="}) {
            if (is_punct(op)) {
                ++i_;
                return {BodyLiteral::Kind::Comparison, binary(op, std::move(lhs), term())};
            }
        }
        if (lhs.kind != Term::Kind::Constant && lhs.kind != Term::Kind::Compound) fail("body literal must be an atom");
        return {BodyLiteral::Kind::Positive, std::move(lhs)};
    }

    Term additive() {
        Term lhs = primary();
        while (is_punct("+") || is_punct("-") || is_punct("*")) {
            std::string op = toks_[i_++].text;
            lhs = binary(std::move(op), std::move(lhs), primary());
        }
        return lhs;
    }

    Term primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Int: ++i_; return integer(std::stoll(t.text));
            case Token::Kind::String: ++i_; return {Term::Kind::String, t.text, 0, {}};
            case Token::Kind::Var: ++i_; return variable(t.text);
            case Token::Kind::Anon: ++i_; return {Term::Kind::Anonymous, "_", 0, {}};
            case Token::Kind::Ident: {
                std::string name = t.text;
                ++i_;
                if (!is_punct("(")) return constant(std::move(name));
                ++i_;
                std::vector<Term> args{term()};
                while (is_punct(",")) {
                    ++i_;
                    args.push_back(term());
                }
                expect(")");
                return compound(std::move(name), std::move(args));
            }
            case Token::Kind::Punct:
                if (t.text == "-" && i_ + 1 < toks_.size() && toks_[i_ + 1].kind == Token::Kind::Int) {
                    i_ += 2;
                    return integer(-std::stoll(toks_[i_ - 1].text));
                }
                if (t.text == "(") {
                    ++i_;
                    Term inner = term();
                    expect(")");
                    return inner;
                }
                break;
            case Token::Kind::End: break;
        }
        fail("unexpected '" + t.text + "'");
    }

    const Token& peek() const { return toks_[i_]; }
    bool is_punct(std::string_view p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
    void expect(std::string_view p) {
        if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
        ++i_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        const Token& t = peek();
        throw Error(ErrorCode::ParseError, "line " + std::to_string(t.line) + ": " + why +
                                               (t.kind == Token::Kind::End ? " at end of input" : ""));
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

ParsedProgram parse_program(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> headers;
    auto tokens = Lexer(text).run(headers);
    ParsedProgram prog;
    for (const auto& [_, name] : headers) prog.sections.push_back(name);

    Parser p(std::move(tokens));
    std::size_t next_header = 0;
    while (!p.at_end()) {
        while (next_header < headers.size() && headers[next_header].first <= p.position()) ++next_header;
        prog.statements.push_back(p.statement());
        prog.section_of.push_back(next_header == 0 ? 0 : next_header - 1);
    }
    return prog;
}

Term parse_term(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> headers;
    Parser p(Lexer(text).run(headers));
    Term t = p.term();
    if (!p.at_end()) throw Error(ErrorCode::ParseError, "trailing input after term '" + std::string(text) + "'");
    return t;
}

std::size_t count_facts(const ParsedProgram& p, std::string_view predicate, std::size_t arity) {
    return static_cast<std::size_t>(std::count_if(p.statements.begin(), p.statements.end(), [&](const Statement& s) {
        if (!s.is_fact()) return false;
        if (arity == 0) return s.head.kind == Term::Kind::Constant && s.head.name == predicate;
        return s.head.kind == Term::Kind::Compound && s.head.name == predicate && s.head.args.size() == arity;
    }));
}

// ---------------------------------------------------------------------------
// Solver bridge

AnswerSet parse_solver_output(std::string_view output) {
    std::istringstream in{std::string(output)};
    std::string line;
    std::optional<std::string> atoms;
    bool expect_atoms = false;
    while (std::getline(in, line)) {
        if (expect_atoms) {
            atoms = line;
            expect_atoms = false;
        } else if (line.starts_with("Answer:")) {
            expect_atoms = true;
        }
    }
    if (!atoms) throw Error(ErrorCode::SolverParseError, "no answer set in solver output");

    AnswerSet answer;
    std::istringstream words(*atoms);
    std::string word;
    while (words >> word) {
        Term t;
        try {
            t = parse_term(word);
        } catch (const Error& e) {
            throw Error(ErrorCode::SolverParseError, "unreadable atom '" + word + "': " + e.what());
        }
        if (t.kind != Term::Kind::Compound && t.kind != Term::Kind::Constant) {
            throw Error(ErrorCode::SolverParseError, "'" + word + "' is not an atom");
        }
        if (t.kind != Term::Kind::Compound || t.args.size() != 2) continue;
        const auto time_of = [&](const Term& x) -> Time {
            if (x.kind != Term::Kind::Integer) {
                throw Error(ErrorCode::SolverParseError, "'" + word + "' has a non-integer time");
            }
            return static_cast<Time>(x.value);
        };
        if (t.name == "o") {
            answer.occurrences[time_of(t.args[1])].insert(to_string(t.args[0]));
        } else if (t.name == "holds") {
            answer.holds[time_of(t.args[1])].insert(to_string(t.args[0]));
        } else if (t.name == "ness") {
            answer.ness.emplace(to_string(t.args[0]), to_string(t.args[1]));
        }
    }
    return answer;
}

SolverResult solver_bridge(const ProgramText& program, const std::optional<std::string>& command) {
    SolverResult result;
    if (!command || command->empty()) return result;

    static std::atomic<unsigned> counter{0};
    const auto path = std::filesystem::temp_directory_path() /
                      ("argtrace_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".lp");
    {
        std::ofstream file(path);
        file << program.text();
    }
    const std::string quoted = "'" + path.string() + "'";
    std::string cmd = *command;
    if (const auto at = cmd.find("{}"); at != std::string::npos) {
        cmd.replace(at, 2, quoted);
    } else {
        cmd += " " + quoted;
    }

    std::string output;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        std::filesystem::remove(path);
        throw Error(ErrorCode::SolverUnavailable, "cannot start '" + *command + "'");
    }
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    const int status = ::pclose(pipe);
    std::filesystem::remove(path);
    // clingo reports satisfiability through nonzero exit codes; only a
    // missing or non-executable command counts as unavailable.
    if (WIFEXITED(status) && (WEXITSTATUS(status) == 126 || WEXITSTATUS(status) == 127)) {
        throw Error(ErrorCode::SolverUnavailable, "'" + *command + "' could not be executed");
    }
    result.answer = parse_solver_output(output);
    result.status = SolverStatus::Ok;
    return result;
}

std::map<std::string, bool> final_acceptability(const AnswerSet& answer) {
    std::map<std::string, bool> out;
    if (answer.holds.empty()) return out;
    for (const auto& atom : answer.holds.rbegin()->second) {
        const Term t = parse_term(atom);
        if (t.kind != Term::Kind::Compound) continue;
        if (t.name == "a" && t.args.size() == 1) {
            out[to_string(t.args[0])] = true;
        } else if (t.name == "neg" && t.args.size() == 1 && t.args[0].kind == Term::Kind::Compound &&
                   t.args[0].name == "a" && t.args[0].args.size() == 1) {
            out[to_string(t.args[0].args[0])] = false;
        }
    }
    return out;
}

void compare_with_engine(const AnswerSet& answer, const Traces& tr, const Context& ctx) {
    const auto decoded = final_acceptability(answer);
    const StateAssign& last = tr.state_at(tr.last_time());
    std::ostringstream diff;
    for (const auto& x : context_graph(ctx).arguments) {
        const bool engine = last.value(ctx.fluent_index(Acceptable{x}));
        const std::string key = to_string(arg_term(x));
        const auto it = decoded.find(key);
        if (it == decoded.end()) {
            diff << "  " << x << ": engine " << (engine ? "accepted" : "rejected") << ", solver missing\n";
        } else if (it->second != engine) {
            diff << "  " << x << ": engine " << (engine ? "accepted" : "rejected") << ", solver "
                 << (it->second ? "accepted" : "rejected") << "\n";
        }
    }
    if (!diff.str().empty()) throw Error(ErrorCode::SolverDisagreement, "final acceptability differs:\n" + diff.str());

    // Occurrences are compared step by step when the answer carries them.
    if (answer.occurrences.empty()) return;
    std::map<Time, std::set<std::string>> engine;
    for (Time t = 0; t < tr.last_time(); ++t) {
        for (const EventIndex e : tr.events_at(t)) engine[t].insert(to_string(event_term(ctx.event(e).id)));
    }
    std::map<Time, std::set<std::string>> solver;
    for (const auto& [t, events] : answer.occurrences) {
        if (t >= 0 && !events.empty()) solver[t] = events;
    }
    for (Time t = 0; t <= std::max(tr.last_time(), solver.empty() ? 0 : solver.rbegin()->first); ++t) {
        const auto& a = engine[t];
        const auto& b = solver[t];
        if (a == b) continue;
        const auto join = [](const std::set<std::string>& s) {
            std::string out;
            for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
            return "{" + out + "}";
        };
        diff << "  E(" << t << "): engine " << join(a) << ", solver " << join(b) << "\n";
    }
    if (!diff.str().empty()) throw Error(ErrorCode::SolverDisagreement, "occurrences differ:\n" + diff.str());
}

}  // namespace argtrace::asp
