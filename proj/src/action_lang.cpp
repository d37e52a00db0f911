#include "argtrace/action_lang.hpp"

#include "argtrace/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace argtrace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string to_string(const FluentId& f) {
    return std::visit(Overloaded{
                          [](const Present& p) { return "p(" + p.arg + ")"; },
                          [](const Acceptable& a) { return "a(" + a.arg + ")"; },
                          [](const CanAttack& c) { return "cA(" + c.attacker + "," + c.target + ")"; },
                      },
                      f);
}

std::string to_string(const EventId& e) {
    return std::visit(Overloaded{
                          [](const Enunciate& x) { return "enunciate(" + x.arg + ")"; },
                          [](const MakesUnacc& x) { return "makesUnacc(" + x.attacker + "," + x.target + ")"; },
                          [](const MakesAcc& x) { return "makesAcc(" + x.arg + ")"; },
                          [](const Ini& x) {
                              const std::string f = to_string(x.fluent);
                              return "ini(" + (x.positive ? f : "neg(" + f + ")") + ")";
                          },
                      },
                      e);
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::lit(Literal l) {
    Formula f;
    f.kind_ = Kind::Lit;
    f.literal_ = l;
    return f;
}

Formula Formula::all_of(std::vector<Formula> operands) {
    Formula f;
    f.kind_ = Kind::And;
    f.operands_ = std::move(operands);
    return f;
}

Formula Formula::any_of(std::vector<Formula> operands) {
    Formula f;
    f.kind_ = Kind::Or;
    f.operands_ = std::move(operands);
    return f;
}

std::vector<Literal> Formula::literals() const {
    std::vector<Literal> out;
    if (kind_ == Kind::Lit) {
        out.push_back(literal_);
        return out;
    }
    for (const auto& op : operands_) {
        auto sub = op.literals();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

bool operator==(const Formula& lhs, const Formula& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& lhs, const Formula& rhs) {
    if (auto c = lhs.kind_ <=> rhs.kind_; c != 0) return c;
    if (lhs.kind_ == Formula::Kind::Lit) return lhs.literal_ <=> rhs.literal_;
    const std::size_t n = std::min(lhs.operands_.size(), rhs.operands_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = lhs.operands_[i] <=> rhs.operands_[i]; c != 0) return c;
    }
    return lhs.operands_.size() <=> rhs.operands_.size();
}

// ---------------------------------------------------------------------------
// StateAssign

std::vector<Literal> StateAssign::literals() const {
    std::vector<Literal> out;
    out.reserve(values_.size());
    for (FluentIndex f = 0; f < values_.size(); ++f) out.push_back({f, values_[f] != 0});
    return out;
}

// ---------------------------------------------------------------------------
// Context

std::optional<FluentIndex> Context::find_fluent(const FluentId& f) const {
    auto it = fluent_lookup_.find(f);
    if (it == fluent_lookup_.end()) return std::nullopt;
    return it->second;
}

FluentIndex Context::fluent_index(const FluentId& f) const {
    if (auto idx = find_fluent(f)) return *idx;
    throw Error(ErrorCode::UnknownFluent, "fluent " + to_string(f) + " is not declared");
}

std::optional<EventIndex> Context::find_event(const EventId& e) const {
    auto it = event_lookup_.find(e);
    if (it == event_lookup_.end()) return std::nullopt;
    return it->second;
}

EventIndex Context::event_index(const EventId& e) const {
    if (auto idx = find_event(e)) return *idx;
    throw Error(ErrorCode::UnknownEvent, "event " + to_string(e) + " is not declared");
}

bool Context::has_priority(EventIndex higher, EventIndex lower) const {
    return priority_closure_.at(higher).at(lower);
}

std::string Context::describe(Literal l) const {
    const std::string name = to_string(fluents_.at(l.fluent));
    return l.positive ? name : "neg(" + name + ")";
}

std::string Context::describe(const Formula& f) const {
    if (f.kind() == Formula::Kind::Lit) return describe(f.literal());
    if (f.is_empty_connective()) return f.kind() == Formula::Kind::And ? "true" : "false";
    std::string out = f.kind() == Formula::Kind::And ? "and(" : "or(";
    for (std::size_t i = 0; i < f.operands().size(); ++i) {
        if (i) out += ",";
        out += describe(f.operands()[i]);
    }
    return out + ")";
}

FluentIndex ContextBuilder::add_fluent(const FluentId& f) {
    if (auto it = fluent_lookup_.find(f); it != fluent_lookup_.end()) return it->second;
    const FluentIndex idx = fluents_.size();
    fluents_.push_back(f);
    fluent_lookup_.emplace(f, idx);
    return idx;
}

Literal ContextBuilder::lit(const FluentId& f, bool positive) const {
    auto it = fluent_lookup_.find(f);
    if (it == fluent_lookup_.end()) {
        throw Error(ErrorCode::UnknownFluent, "fluent " + to_string(f) + " used before declaration");
    }
    return {it->second, positive};
}

void ContextBuilder::add_event(EventSpec spec) { events_.push_back(std::move(spec)); }

void ContextBuilder::set_initial(const FluentId& f, bool value) { initial_[lit(f).fluent] = value; }

void ContextBuilder::add_priority(const EventId& higher, const EventId& lower) {
    priority_.emplace_back(higher, lower);
}

namespace {

void check_formula(const Formula& f, std::size_t fluent_count, const std::string& where) {
    for (const auto& l : f.literals()) {
        if (l.fluent >= fluent_count) {
            throw Error(ErrorCode::InvalidContext, where + " mentions an undeclared fluent");
        }
    }
}

bool entails(const Formula& premise, const Formula& conclusion, std::size_t fluent_count);

}  // namespace

Context ContextBuilder::build() && {
    Context ctx;
    const std::size_t nf = fluents_.size();
    ctx.fluents_ = std::move(fluents_);
    ctx.fluent_lookup_ = std::move(fluent_lookup_);

    // Initial state must value every fluent.
    ctx.initial_ = StateAssign(nf);
    for (FluentIndex f = 0; f < nf; ++f) {
        auto it = initial_.find(f);
        if (it == initial_.end()) {
            throw Error(ErrorCode::InvalidContext, "initial state leaves " + to_string(ctx.fluents_[f]) + " unvalued");
        }
        ctx.initial_.set({f, it->second});
    }

    for (auto& spec : events_) {
        const std::string name = to_string(spec.id);
        if (spec.kind == EventClass::Initial || std::holds_alternative<Ini>(spec.id)) {
            throw Error(ErrorCode::InvalidContext, name + ": initial-state events are generated, not declared");
        }
        check_formula(spec.pre, nf, name + " pre");
        check_formula(spec.tri, nf, name + " tri");
        for (const auto& l : spec.eff) {
            if (l.fluent >= nf) throw Error(ErrorCode::InvalidContext, name + " eff mentions an undeclared fluent");
        }
        if (spec.pre.is_empty_connective() || spec.tri.is_empty_connective() || spec.eff.empty()) {
            throw Error(ErrorCode::InvalidContext, name + " has an empty formula");
        }
        for (const auto& l : spec.eff) {
            if (std::find(spec.eff.begin(), spec.eff.end(), l.complement()) != spec.eff.end()) {
                throw Error(ErrorCode::InvalidContext, name + " eff contains a literal and its complement");
            }
        }
        if (spec.kind == EventClass::Exogenous && !(spec.pre == spec.tri)) {
            throw Error(ErrorCode::InvalidContext, name + ": exogenous events need pre == tri");
        }
        if (spec.kind == EventClass::Action && !entails(spec.tri, spec.pre, nf)) {
            throw Error(ErrorCode::InvalidContext, name + ": action tri must entail pre");
        }
        const EventIndex idx = ctx.events_.size();
        if (!ctx.event_lookup_.emplace(spec.id, idx).second) {
            throw Error(ErrorCode::InvalidContext, name + " declared twice");
        }
        (spec.kind == EventClass::Action ? ctx.actions_ : ctx.exogenous_).push_back(idx);
        ctx.events_.push_back(std::move(spec));
    }

    // One Ini event per literal of S(0), negative literals included.
    for (FluentIndex f = 0; f < nf; ++f) {
        const Literal l{f, ctx.initial_.value(f)};
        EventSpec spec{Ini{ctx.fluents_[f], l.positive}, EventClass::Initial, Formula::truth(), Formula::truth(), {l}};
        const EventIndex idx = ctx.events_.size();
        ctx.event_lookup_.emplace(spec.id, idx);
        ctx.ini_.push_back(idx);
        ctx.events_.push_back(std::move(spec));
    }

    const std::size_t ne = ctx.events_.size();
    ctx.priority_closure_.assign(ne, std::vector<bool>(ne, false));
    for (const auto& [hi, lo] : priority_) {
        const EventIndex h = ctx.event_index(hi);
        const EventIndex l = ctx.event_index(lo);
        ctx.priority_pairs_.emplace_back(h, l);
        ctx.priority_closure_[h][l] = true;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < ne; ++k) {
        for (std::size_t i = 0; i < ne; ++i) {
            if (!ctx.priority_closure_[i][k]) continue;
            for (std::size_t j = 0; j < ne; ++j) {
                if (ctx.priority_closure_[k][j]) ctx.priority_closure_[i][j] = true;
            }
        }
    }
    for (std::size_t i = 0; i < ne; ++i) {
        if (ctx.priority_closure_[i][i]) {
            throw Error(ErrorCode::InvalidContext,
                        "priority relation is cyclic through " + to_string(ctx.events_[i].id));
        }
    }
    ctx.horizon_ = horizon_;
    return ctx;
}

namespace {

// Truth-table check restricted to the fluents both formulas mention.
bool entails(const Formula& premise, const Formula& conclusion, std::size_t fluent_count) {
    std::set<FluentIndex> vars;
    for (const auto& l : premise.literals()) vars.insert(l.fluent);
    for (const auto& l : conclusion.literals()) vars.insert(l.fluent);
    const std::vector<FluentIndex> vs(vars.begin(), vars.end());
    if (vs.size() > 20) return true;  // too wide to enumerate; accept
    StateAssign s(fluent_count);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
        for (std::size_t i = 0; i < vs.size(); ++i) s.set({vs[i], ((mask >> i) & 1) != 0});
        if (eval_formula(s, premise) && !eval_formula(s, conclusion)) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Setting / Traces

Setting::Setting(Sequence sequence, Context context) : sequence_(std::move(sequence)), context_(std::move(context)) {
    std::map<std::uint64_t, std::vector<EventIndex>> by_rank;
    std::set<EventIndex> seen;
    for (const auto& ranked : sequence_) {
        const auto idx = context_.find_event(ranked.action);
        if (!idx) throw Error(ErrorCode::InvalidSetting, to_string(ranked.action) + " is not an event of the context");
        if (context_.event(*idx).kind != EventClass::Action) {
            throw Error(ErrorCode::InvalidSetting, to_string(ranked.action) + " is not an action");
        }
        if (!seen.insert(*idx).second) {
            throw Error(ErrorCode::InvalidSetting, to_string(ranked.action) + " is ranked more than once");
        }
        by_rank[ranked.rank].push_back(*idx);
    }
    for (auto& [_, group] : by_rank) {
        std::sort(group.begin(), group.end());
        rank_groups_.push_back(std::move(group));
    }
}

Traces::Traces(std::vector<std::vector<EventIndex>> events, std::vector<StateAssign> states)
    : events_(std::move(events)), states_(std::move(states)) {}

const std::vector<EventIndex>& Traces::events_at(Time t) const {
    if (t < -1 || t + 1 >= static_cast<Time>(events_.size())) {
        throw Error(ErrorCode::TargetNotInTrace, "no event set E(" + std::to_string(t) + ")");
    }
    return events_[static_cast<std::size_t>(t + 1)];
}

const StateAssign& Traces::state_at(Time t) const {
    if (t < 0 || t >= static_cast<Time>(states_.size())) {
        throw Error(ErrorCode::TargetNotInTrace, "no state S(" + std::to_string(t) + ")");
    }
    return states_[static_cast<std::size_t>(t)];
}

bool Traces::occurs(EventIndex e, Time t) const {
    if (t < -1 || t + 1 >= static_cast<Time>(events_.size())) return false;
    const auto& set = events_[static_cast<std::size_t>(t + 1)];
    return std::find(set.begin(), set.end(), e) != set.end();
}

// ---------------------------------------------------------------------------
// Semantics

bool eval_formula(const StateAssign& s, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Lit: {
            const Literal l = f.literal();
            if (l.fluent >= s.size()) {
                throw Error(ErrorCode::UnknownFluent, "fluent #" + std::to_string(l.fluent) + " has no value");
            }
            return s.holds(l);
        }
        case Formula::Kind::And:
            return std::all_of(f.operands().begin(), f.operands().end(),
                               [&](const Formula& op) { return eval_formula(s, op); });
        case Formula::Kind::Or:
            return std::any_of(f.operands().begin(), f.operands().end(),
                               [&](const Formula& op) { return eval_formula(s, op); });
    }
    return false;
}

StateAssign apply_effects(const StateAssign& s, std::span<const EventIndex> fired, const Context& ctx) {
    std::map<FluentIndex, std::pair<bool, EventIndex>> asserted;
    for (const EventIndex e : fired) {
        for (const Literal l : ctx.event(e).eff) {
            auto [it, inserted] = asserted.emplace(l.fluent, std::make_pair(l.positive, e));
            if (!inserted && it->second.first != l.positive) {
                throw Error(ErrorCode::ConflictingEffects,
                            to_string(ctx.fluents().at(l.fluent)) + " asserted both ways by " +
                                to_string(ctx.event(it->second.second).id) + " and " + to_string(ctx.event(e).id));
            }
        }
    }
    StateAssign next = s;
    for (const auto& [f, value] : asserted) next.set({f, value.first});
    return next;
}

namespace {

// Kahn sweep over the triggered events under the priority closure. The sweep
// order among incomparable events is irrelevant to the result; `rng`, when
// given, randomizes it to exercise that.
std::vector<EventIndex> resolve_priority(std::vector<EventIndex> candidates, const Context& ctx,
                                         std::mt19937_64* rng) {
    if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
    const std::size_t n = candidates.size();
    std::vector<std::size_t> pending_dominators(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (ctx.has_priority(candidates[j], candidates[i])) ++pending_dominators[i];
        }
    }
    std::vector<bool> fires(n, false);
    std::vector<bool> done(n, false);
    std::vector<EventIndex> result;
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::size_t> ready;
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i] && pending_dominators[i] == 0) ready.push_back(i);
        }
        if (rng) std::shuffle(ready.begin(), ready.end(), *rng);
        const std::size_t i = ready.front();
        done[i] = true;
        bool blocked = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (fires[j] && ctx.has_priority(candidates[j], candidates[i])) blocked = true;
        }
        fires[i] = !blocked;
        if (fires[i]) result.push_back(candidates[i]);
        for (std::size_t k = 0; k < n; ++k) {
            if (ctx.has_priority(candidates[i], candidates[k])) --pending_dominators[k];
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<EventIndex> triggered_candidates(const StateAssign& s, const Context& ctx) {
    std::vector<EventIndex> out;
    for (const EventIndex e : ctx.exogenous()) {
        if (eval_formula(s, ctx.event(e).tri)) out.push_back(e);
    }
    return out;
}

std::vector<EventIndex> triggered_exogenous_impl(const StateAssign& s, const Context& ctx, std::mt19937_64* rng) {
    auto candidates = triggered_candidates(s, ctx);
    if (candidates.empty()) return candidates;
    return resolve_priority(std::move(candidates), ctx, rng);
}

}  // namespace

std::vector<EventIndex> triggered_exogenous(const StateAssign& s, const Context& ctx) {
    return triggered_exogenous_impl(s, ctx, nullptr);
}

bool is_quiescent(const StateAssign& s, const Context& ctx) { return triggered_candidates(s, ctx).empty(); }

Time horizon_cap(const Setting& setting) {
    const Horizon& h = setting.context().horizon();
    if (h.fixed_last) return *h.fixed_last;
    const std::size_t ranks = setting.rank_groups().size();
    return static_cast<Time>((ranks + 1) * h.cascade_bound + 1);
}

Traces run(const Setting& setting, const RunOptions& options) {
    const Context& ctx = setting.context();
    std::optional<std::mt19937_64> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
    std::mt19937_64* rng_ptr = rng ? &*rng : nullptr;

    std::vector<std::vector<EventIndex>> events;
    std::vector<StateAssign> states;

    events.push_back(ctx.ini_events());
    states.push_back(apply_effects(StateAssign(ctx.fluents().size()), ctx.ini_events(), ctx));

    const Time cap = horizon_cap(setting);
    std::size_t next_rank = 0;
    for (Time t = 0;; ++t) {
        const StateAssign& current = states.back();
        std::vector<EventIndex> fired = triggered_exogenous_impl(current, ctx, rng_ptr);
        if (fired.empty()) {
            if (next_rank == setting.rank_groups().size()) break;
            fired = setting.rank_groups()[next_rank++];
            std::vector<EventIndex> order = fired;
            if (rng_ptr) std::shuffle(order.begin(), order.end(), *rng_ptr);
            for (const EventIndex a : order) {
                if (!eval_formula(current, ctx.event(a).pre)) {
                    throw Error(ErrorCode::PreconditionViolated,
                                to_string(ctx.event(a).id) + " at t=" + std::to_string(t));
                }
            }
        }
        if (t > cap) {
            throw Error(ErrorCode::HorizonExceeded, "no termination by t=" + std::to_string(cap));
        }
        states.push_back(apply_effects(current, fired, ctx));
        events.push_back(std::move(fired));
    }
    return Traces(std::move(events), std::move(states));
}

// ---------------------------------------------------------------------------
// Self-audit

std::vector<Violation> validate_execution(const Traces& tr, const Setting& setting) {
    const Context& ctx = setting.context();
    std::vector<Violation> out;
    auto report = [&](Time t, std::string condition, std::string detail) {
        out.push_back({t, std::move(condition), std::move(detail)});
    };

    const auto& events = tr.event_trace();
    const auto& states = tr.state_trace();
    if (states.empty() || events.size() != states.size()) {
        report(-1, "shape", "state and event traces must be nonempty and of equal length");
        return out;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].size() != ctx.fluents().size()) {
            report(static_cast<Time>(i), "1", "state does not value exactly the context fluents");
            return out;
        }
    }

    std::vector<EventIndex> ini(events[0].begin(), events[0].end());
    std::sort(ini.begin(), ini.end());
    std::vector<EventIndex> expected_ini = ctx.ini_events();
    std::sort(expected_ini.begin(), expected_ini.end());
    if (ini != expected_ini) report(-1, "ini", "E(-1) must be exactly the Ini events");
    if (states[0] != ctx.initial_state()) report(0, "ini", "S(0) differs from the context initial state");

    std::map<EventIndex, std::uint64_t> rank_of;
    for (const auto& ranked : setting.sequence()) rank_of[ctx.event_index(ranked.action)] = ranked.rank;
    std::map<EventIndex, std::vector<Time>> action_times;

    for (Time t = 0; t < tr.last_time(); ++t) {
        const auto& e_t = tr.events_at(t);
        const StateAssign& s = tr.state_at(t);

        if (e_t.empty()) report(t, "2.e", "E(t) is empty");

        bool has_action = false;
        for (const EventIndex e : e_t) {
            const EventSpec& spec = ctx.event(e);
            if (spec.kind == EventClass::Initial) report(t, "ini", to_string(spec.id) + " occurs after t=-1");
            if (!eval_formula(s, spec.pre)) report(t, "2.a", to_string(spec.id) + " occurs without its precondition");
            if (spec.kind == EventClass::Action) {
                has_action = true;
                if (rank_of.count(e) == 0) report(t, "chi.1", to_string(spec.id) + " is not in the sequence");
                action_times[e].push_back(t);
            }
        }
        for (const EventIndex e : e_t) {
            for (const EventIndex f : e_t) {
                if (ctx.has_priority(e, f)) {
                    report(t, "2.b", to_string(ctx.event(e).id) + " has priority over co-occurring " +
                                         to_string(ctx.event(f).id));
                }
            }
        }
        bool any_triggered = false;
        for (const EventIndex u : ctx.exogenous()) {
            if (!eval_formula(s, ctx.event(u).tri)) continue;
            any_triggered = true;
            const bool present = std::find(e_t.begin(), e_t.end(), u) != e_t.end();
            const bool preempted =
                std::any_of(e_t.begin(), e_t.end(), [&](EventIndex other) { return ctx.has_priority(other, u); });
            if (!present && !preempted) {
                report(t, "2.c", to_string(ctx.event(u).id) + " is triggered but neither occurs nor is preempted");
            }
        }
        if (has_action && any_triggered) report(t, "2.d", "an action occurs in a non-quiescent state");

        // Condition 3, literally: keep literals no effect contradicts, add all effect literals.
        std::set<Literal> next;
        for (const Literal l : s.literals()) {
            const bool contradicted = std::any_of(e_t.begin(), e_t.end(), [&](EventIndex e) {
                const auto& eff = ctx.event(e).eff;
                return std::find(eff.begin(), eff.end(), l.complement()) != eff.end();
            });
            if (!contradicted) next.insert(l);
        }
        for (const EventIndex e : e_t) {
            for (const Literal l : ctx.event(e).eff) next.insert(l);
        }
        const StateAssign& actual = tr.state_at(t + 1);
        bool frame_ok = next.size() == actual.size();
        for (const Literal l : next) {
            if (next.count(l.complement()) != 0 || !actual.holds(l)) frame_ok = false;
        }
        if (!frame_ok) report(t + 1, "3", "S(t+1) does not follow from S(t) and E(t)");
    }

    if (!is_quiescent(tr.state_at(tr.last_time()), ctx)) {
        report(tr.last_time(), "end", "the trace stops in a non-quiescent state");
    }

    for (const auto& [e, rank] : rank_of) {
        const auto it = action_times.find(e);
        if (it == action_times.end() || it->second.size() != 1) {
            report(-1, "chi.2", to_string(ctx.event(e).id) + " must occur exactly once");
        }
    }
    for (const auto& [e, rank] : rank_of) {
        for (const auto& [f, other_rank] : rank_of) {
            const auto te = action_times.find(e);
            const auto tf = action_times.find(f);
            if (te == action_times.end() || tf == action_times.end()) continue;
            const Time a = te->second.front();
            const Time b = tf->second.front();
            if (rank < other_rank && !(a < b)) {
                report(b, "chi.2", to_string(ctx.event(e).id) + " must precede " + to_string(ctx.event(f).id));
            }
            if (rank == other_rank && a != b) {
                report(b, "chi.3", to_string(ctx.event(e).id) + " and " + to_string(ctx.event(f).id) +
                                       " share a rank but not a time point");
            }
        }
    }
    return out;
}

}  // namespace argtrace
