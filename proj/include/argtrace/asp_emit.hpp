#pragma once

// Logic-program emission in the ASP-style dialect described by
// docs/asp_dialect.ebnf, plus a parser for that dialect and a bridge to an
// external solver for differential checks.

#include "argtrace/action_lang.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argtrace::asp {

struct ProgramText {
    std::string sequence;   // seq/2 facts
    std::string context;    // facts and per-event condition rules
    std::string semantics;  // fixed execution rules
    std::string causality;  // fixed dness/ness/actual rules

    /// Sections concatenated, each under a "%% <name>" header.
    std::string text() const;
};

/// The horizon constant defaults to the run-length bound of the setting.
ProgramText emit_program(const Setting& setting, std::optional<Time> horizon = std::nullopt);

// ---------------------------------------------------------------------------
// Dialect syntax tree

struct Term {
    enum class Kind { Constant, String, Integer, Variable, Anonymous, Compound, Binary, Interval };
    Kind kind = Kind::Constant;
    std::string name;  // functor, constant, variable, string body, or operator
    long long value = 0;
    std::vector<Term> args;

    bool operator==(const Term&) const = default;
};

struct BodyLiteral {
    enum class Kind { Positive, Negative, Comparison };
    Kind kind = Kind::Positive;
    Term atom;  // for comparisons: Binary term with the comparison operator
    bool operator==(const BodyLiteral&) const = default;
};

struct Statement {
    enum class Kind { Rule, Const };
    Kind kind = Kind::Rule;
    Term head;  // for #const: Binary "=" of name and value
    std::vector<BodyLiteral> body;

    bool is_fact() const noexcept { return kind == Kind::Rule && body.empty(); }
    bool operator==(const Statement&) const = default;
};

struct ParsedProgram {
    std::vector<std::string> sections;  // "%% " header names in order
    std::vector<Statement> statements;
    std::vector<std::size_t> section_of;  // statements[i] belongs to sections[section_of[i]]
};

/// Throws ParseError with the offending line.
ParsedProgram parse_program(std::string_view text);
Term parse_term(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Statement& s);

/// Number of facts with the given predicate name and arity.
std::size_t count_facts(const ParsedProgram& p, std::string_view predicate, std::size_t arity);

// ---------------------------------------------------------------------------
// Solver bridge

struct AnswerSet {
    std::map<Time, std::set<std::string>> occurrences;  // o(E,T)
    std::map<Time, std::set<std::string>> holds;        // holds(L,T)
    std::set<std::pair<std::string, std::string>> ness; // ness(O,H)
};

enum class SolverStatus { Ok, Unavailable };

struct SolverResult {
    SolverStatus status = SolverStatus::Unavailable;
    AnswerSet answer;
};

inline constexpr const char* kSolverEnvVar = "ARGTRACE_SOLVER";

/// Reads clingo-style output ("Answer: N" followed by an atom line) and keeps
/// the last answer. Throws SolverParseError.
AnswerSet parse_solver_output(std::string_view output);

/// Runs `command` on a temporary file holding the program. "{}" in the
/// command is replaced by the path; otherwise the path is appended. No
/// command means Unavailable. Throws SolverUnavailable when the command
/// cannot be executed, SolverParseError on unreadable output.
SolverResult solver_bridge(const ProgramText& program, const std::optional<std::string>& command);

/// Acceptance of every argument in the last decoded state.
std::map<std::string, bool> final_acceptability(const AnswerSet& answer);

/// Throws SolverDisagreement with a diff report when the decoded final
/// acceptability differs from the engine's.
void compare_with_engine(const AnswerSet& answer, const Traces& tr, const Context& ctx);

}  // namespace argtrace::asp
