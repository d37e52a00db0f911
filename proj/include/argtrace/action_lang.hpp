#pragma once

// Action-language kernel: fluents, formulas, events, contexts and the
// argumentative execution semantics. A context is generic; `translate`
// produces the argumentative instances.

#include "argtrace/aaf.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace argtrace {

// ---------------------------------------------------------------------------
// Fluents and literals

struct Present {
    ArgumentId arg;
    auto operator<=>(const Present&) const = default;
};
struct Acceptable {
    ArgumentId arg;
    auto operator<=>(const Acceptable&) const = default;
};
struct CanAttack {
    ArgumentId attacker;
    ArgumentId target;
    auto operator<=>(const CanAttack&) const = default;
};

using FluentId = std::variant<Present, Acceptable, CanAttack>;

/// p(x), a(x), cA(y,x)
std::string to_string(const FluentId& f);

using FluentIndex = std::size_t;

struct Literal {
    FluentIndex fluent = 0;
    bool positive = true;

    Literal complement() const { return {fluent, !positive}; }
    auto operator<=>(const Literal&) const = default;
};

/// Formulas of the precondition language: literals closed under AND / OR.
/// Effects use the AND-of-literals fragment (EffectFormula). An AND with no
/// operands is the constant true; it only appears on initial-state events.
class Formula {
public:
    enum class Kind { Lit, And, Or };

    static Formula lit(Literal l);
    static Formula all_of(std::vector<Formula> operands);
    static Formula any_of(std::vector<Formula> operands);
    static Formula truth() { return all_of({}); }

    Kind kind() const noexcept { return kind_; }
    const Literal& literal() const { return literal_; }
    const std::vector<Formula>& operands() const noexcept { return operands_; }

    bool is_empty_connective() const noexcept { return kind_ != Kind::Lit && operands_.empty(); }

    /// Every literal occurrence, left to right.
    std::vector<Literal> literals() const;

    friend bool operator==(const Formula& lhs, const Formula& rhs);
    friend std::strong_ordering operator<=>(const Formula& lhs, const Formula& rhs);

private:
    Kind kind_ = Kind::Lit;
    Literal literal_{};
    std::vector<Formula> operands_;
};

using EffectFormula = std::vector<Literal>;

// ---------------------------------------------------------------------------
// Events

struct Enunciate {
    ArgumentId arg;
    auto operator<=>(const Enunciate&) const = default;
};
struct MakesUnacc {
    ArgumentId attacker;
    ArgumentId target;
    auto operator<=>(const MakesUnacc&) const = default;
};
struct MakesAcc {
    ArgumentId arg;
    auto operator<=>(const MakesAcc&) const = default;
};
// Bounded-past pseudo event establishing one literal of S(0) at t = -1.
struct Ini {
    FluentId fluent;
    bool positive = true;
    auto operator<=>(const Ini&) const = default;
};

using EventId = std::variant<Enunciate, MakesUnacc, MakesAcc, Ini>;

/// enunciate(x), makesUnacc(y,x), makesAcc(x), ini(a(x)) / ini(neg(a(x)))
std::string to_string(const EventId& e);

enum class EventClass { Action, Exogenous, Initial };

struct EventSpec {
    EventId id;
    EventClass kind = EventClass::Exogenous;
    Formula pre;
    Formula tri;
    EffectFormula eff;
};

using EventIndex = std::size_t;
using Time = int;

// ---------------------------------------------------------------------------
// States

/// Total assignment over a context's fluents. Coherence and completeness hold
/// by construction: each fluent carries exactly one value.
class StateAssign {
public:
    StateAssign() = default;
    explicit StateAssign(std::size_t fluent_count) : values_(fluent_count, 0) {}

    std::size_t size() const noexcept { return values_.size(); }
    bool value(FluentIndex f) const { return values_.at(f) != 0; }
    bool holds(Literal l) const { return value(l.fluent) == l.positive; }
    void set(Literal l) { values_.at(l.fluent) = l.positive ? 1 : 0; }

    /// The state as a literal set, in fluent order.
    std::vector<Literal> literals() const;

    auto operator<=>(const StateAssign&) const = default;

private:
    std::vector<std::uint8_t> values_;
};

// ---------------------------------------------------------------------------
// Context

struct Horizon {
    // Maximum number of consecutive exogenous steps expected after an action.
    std::size_t cascade_bound = 1;
    // When set, the run may not go past this time point.
    std::optional<Time> fixed_last;
};

class ContextBuilder;

class Context {
public:
    const std::vector<FluentId>& fluents() const noexcept { return fluents_; }
    std::optional<FluentIndex> find_fluent(const FluentId& f) const;
    FluentIndex fluent_index(const FluentId& f) const;  // throws UnknownFluent
    Literal literal(const FluentId& f, bool positive = true) const { return {fluent_index(f), positive}; }

    const std::vector<EventSpec>& events() const noexcept { return events_; }
    const EventSpec& event(EventIndex e) const { return events_.at(e); }
    std::optional<EventIndex> find_event(const EventId& e) const;
    EventIndex event_index(const EventId& e) const;  // throws UnknownEvent

    const std::vector<EventIndex>& actions() const noexcept { return actions_; }
    const std::vector<EventIndex>& exogenous() const noexcept { return exogenous_; }
    const std::vector<EventIndex>& ini_events() const noexcept { return ini_; }

    const StateAssign& initial_state() const noexcept { return initial_; }

    /// Generating pairs as declared.
    const std::vector<std::pair<EventIndex, EventIndex>>& priority_pairs() const noexcept { return priority_pairs_; }
    /// Strict partial order: transitive closure of the generating pairs.
    bool has_priority(EventIndex higher, EventIndex lower) const;

    const Horizon& horizon() const noexcept { return horizon_; }

    std::string describe(Literal l) const;          // a(c) / neg(a(c))
    std::string describe(const Formula& f) const;  // and(...), or(...)

private:
    friend class ContextBuilder;

    std::vector<FluentId> fluents_;
    std::map<FluentId, FluentIndex> fluent_lookup_;
    std::vector<EventSpec> events_;
    std::map<EventId, EventIndex> event_lookup_;
    std::vector<EventIndex> actions_;
    std::vector<EventIndex> exogenous_;
    std::vector<EventIndex> ini_;
    StateAssign initial_;
    std::vector<std::pair<EventIndex, EventIndex>> priority_pairs_;
    std::vector<std::vector<bool>> priority_closure_;
    Horizon horizon_;
};

/// Assembles a Context. Fluents must be declared before formulas use them;
/// build() creates one Ini event per initial literal and validates every
/// invariant (declared fluents, exogenous pre == tri, consistent effects,
/// acyclic priority). Violations throw InvalidContext.
class ContextBuilder {
public:
    FluentIndex add_fluent(const FluentId& f);
    Literal lit(const FluentId& f, bool positive = true) const;

    void add_event(EventSpec spec);
    void set_initial(const FluentId& f, bool value);
    void add_priority(const EventId& higher, const EventId& lower);
    void set_horizon(Horizon h) { horizon_ = h; }

    Context build() &&;

private:
    std::vector<FluentId> fluents_;
    std::map<FluentId, FluentIndex> fluent_lookup_;
    std::vector<EventSpec> events_;
    std::map<FluentIndex, bool> initial_;
    std::vector<std::pair<EventId, EventId>> priority_;
    Horizon horizon_;
};

// ---------------------------------------------------------------------------
// Settings and traces

struct RankedAction {
    EventId action;
    std::uint64_t rank = 0;
};

using Sequence = std::vector<RankedAction>;

/// A sequence over a context. Throws InvalidSetting when an action is
/// unknown, not of class Action, or ranked twice.
class Setting {
public:
    Setting(Sequence sequence, Context context);

    const Sequence& sequence() const noexcept { return sequence_; }
    const Context& context() const noexcept { return context_; }

    /// Actions grouped by increasing rank; each group sorted by index.
    const std::vector<std::vector<EventIndex>>& rank_groups() const noexcept { return rank_groups_; }

private:
    Sequence sequence_;
    Context context_;
    std::vector<std::vector<EventIndex>> rank_groups_;
};

/// Event trace E(-1..N) and state trace S(0..N+1).
class Traces {
public:
    Traces() = default;
    Traces(std::vector<std::vector<EventIndex>> events, std::vector<StateAssign> states);

    /// Index of the last state, N + 1.
    Time last_time() const noexcept { return static_cast<Time>(states_.size()) - 1; }

    const std::vector<EventIndex>& events_at(Time t) const;  // -1 <= t < last_time()
    const StateAssign& state_at(Time t) const;                // 0 <= t <= last_time()
    bool occurs(EventIndex e, Time t) const;

    const std::vector<std::vector<EventIndex>>& event_trace() const noexcept { return events_; }
    const std::vector<StateAssign>& state_trace() const noexcept { return states_; }

    bool operator==(const Traces&) const = default;

private:
    std::vector<std::vector<EventIndex>> events_;
    std::vector<StateAssign> states_;
};

// ---------------------------------------------------------------------------
// Semantics

/// Throws UnknownFluent if the formula mentions a fluent the state lacks.
bool eval_formula(const StateAssign& s, const Formula& f);

/// Frame axiom plus effects. Throws ConflictingEffects when two fired events
/// assert complementary literals.
StateAssign apply_effects(const StateAssign& s, std::span<const EventIndex> fired, const Context& ctx);

/// The unique maximal set of exogenous events that fire in `s`: triggered
/// events swept in priority order, each firing unless a firing event has
/// priority over it. Sorted by index.
std::vector<EventIndex> triggered_exogenous(const StateAssign& s, const Context& ctx);

bool is_quiescent(const StateAssign& s, const Context& ctx);

struct RunOptions {
    // Shuffles internal iteration orders; the result must not change.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Produces the unique valid execution of the setting. Throws
/// PreconditionViolated or HorizonExceeded.
Traces run(const Setting& setting, const RunOptions& options = {});

/// Safety cap on the last time point of a run of `setting`.
Time horizon_cap(const Setting& setting);

struct Violation {
    Time time = 0;
    std::string condition;  // e.g. "2.b", "chi.2"
    std::string detail;
};

/// Independent re-check of every execution condition; empty means valid.
std::vector<Violation> validate_execution(const Traces& tr, const Setting& setting);

}  // namespace argtrace
