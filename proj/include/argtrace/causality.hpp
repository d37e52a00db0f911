#pragma once

#include "argtrace/action_lang.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace argtrace {

struct Occurrence {
    EventIndex event = 0;
    Time time = -1;
    auto operator<=>(const Occurrence&) const = default;
};

struct TimedFormula {
    Formula formula;
    Time time = 0;
    auto operator<=>(const TimedFormula&) const = default;
};

enum class CausalKind { DirectNESS, NESS, Actual };

std::string_view to_string(CausalKind kind) noexcept;

using CausalEffect = std::variant<TimedFormula, Occurrence>;

struct CausalLink {
    Occurrence cause;
    CausalEffect effect;
    CausalKind kind = CausalKind::DirectNESS;
    auto operator<=>(const CausalLink&) const = default;
};

struct CausalGraph {
    TimedFormula root;
    std::set<CausalLink> links;
};

/// Minimal sets of literals, all true in `s`, whose conjunction entails `f`.
/// Only the formula's own literals are considered.
std::vector<std::vector<Literal>> minimal_sufficient_sets(const Formula& f, const StateAssign& s);

/// Occurrences whose effects established the target and kept it true: for a
/// literal, every event at the establishment point asserting it; for a
/// compound formula, the union over the literals of its minimal sufficient
/// sets. Throws TargetNotTrue.
std::set<Occurrence> direct_ness_causes(const Traces& tr, const Context& ctx, const TimedFormula& target);

/// Least fixpoint of direct causes and the actual causes of every direct
/// cause, down to Ini events. Throws TargetNotTrue.
std::set<Occurrence> ness_causes(const Traces& tr, const Context& ctx, const TimedFormula& target);

/// NESS-causes of the target's triggering condition at its time point.
/// Throws TargetNotInTrace.
std::set<Occurrence> actual_causes(const Traces& tr, const Context& ctx, const Occurrence& target);

/// Every link met while computing ness_causes(target): DirectNESS links into
/// the root and into trigger literals, Actual links between occurrences, and
/// NESS links from indirect causes into the root.
CausalGraph causal_graph(const Traces& tr, const Context& ctx, const TimedFormula& target);

std::string describe(const Occurrence& o, const Context& ctx);        // enunciate(d)@4
std::string describe(const TimedFormula& f, const Context& ctx);      // neg(a(c))@31
std::string describe(const CausalEffect& e, const Context& ctx);

// ---------------------------------------------------------------------------
// Query syntax: acc(ID)@T | not-acc(ID)@T | present(ID)@T, T ::= integer | final

struct CauseQuery {
    enum class Kind { Acc, NotAcc, Present };
    Kind kind = Kind::Acc;
    ArgumentId arg;
    std::optional<Time> time;  // nullopt means the final state
};

/// Throws QuerySyntax.
CauseQuery parse_query(std::string_view text);

/// Throws UnknownArgument or TargetNotInTrace.
TimedFormula resolve_query(const CauseQuery& q, const Context& ctx, const Traces& tr);

}  // namespace argtrace
