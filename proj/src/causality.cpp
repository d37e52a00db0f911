#include "argtrace/causality.hpp"

#include "argtrace/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace argtrace {

std::string_view to_string(CausalKind kind) noexcept {
    switch (kind) {
        case CausalKind::DirectNESS: return "direct";
        case CausalKind::NESS: return "ness";
        case CausalKind::Actual: return "actual";
    }
    return "unknown";
}

namespace {

using LiteralSet = std::vector<Literal>;  // sorted, unique

LiteralSet merge(const LiteralSet& a, const LiteralSet& b) {
    LiteralSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Sufficient sets in disjunctive form, restricted to literals true in s.
std::vector<LiteralSet> sufficient_sets(const Formula& f, const StateAssign& s) {
    switch (f.kind()) {
        case Formula::Kind::Lit:
            if (s.holds(f.literal())) return {LiteralSet{f.literal()}};
            return {};
        case Formula::Kind::Or: {
            std::vector<LiteralSet> out;
            for (const auto& op : f.operands()) {
                auto sub = sufficient_sets(op, s);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case Formula::Kind::And: {
            std::vector<LiteralSet> acc{LiteralSet{}};
            for (const auto& op : f.operands()) {
                const auto sub = sufficient_sets(op, s);
                std::vector<LiteralSet> next;
                for (const auto& left : acc) {
                    for (const auto& right : sub) next.push_back(merge(left, right));
                }
                acc = std::move(next);
                if (acc.empty()) break;
            }
            return acc;
        }
    }
    return {};
}

}  // namespace

std::vector<std::vector<Literal>> minimal_sufficient_sets(const Formula& f, const StateAssign& s) {
    auto sets = sufficient_sets(f, s);
    std::sort(sets.begin(), sets.end(), [](const LiteralSet& a, const LiteralSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<LiteralSet> minimal;
    for (const auto& candidate : sets) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const LiteralSet& m) {
            return std::includes(candidate.begin(), candidate.end(), m.begin(), m.end());
        });
        if (!dominated) minimal.push_back(candidate);
    }
    return minimal;
}

namespace {

class Analyzer {
public:
    Analyzer(const Traces& tr, const Context& ctx) : tr_(tr), ctx_(ctx) {}

    void require_true(const TimedFormula& target) const {
        if (target.time < 0 || target.time > tr_.last_time()) {
            throw Error(ErrorCode::TargetNotTrue, "time " + std::to_string(target.time) + " is outside the trace");
        }
        if (!eval_formula(tr_.state_at(target.time), target.formula)) {
            throw Error(ErrorCode::TargetNotTrue, describe(target, ctx_) + " does not hold");
        }
    }

    void require_occurs(const Occurrence& o) const {
        if (!tr_.occurs(o.event, o.time)) {
            throw Error(ErrorCode::TargetNotInTrace, "event #" + std::to_string(o.event) + " does not occur at t=" +
                                                         std::to_string(o.time));
        }
    }

    // Literals belonging to some minimal sufficient set of f at t.
    std::vector<Literal> relevant_literals(const Formula& f, Time t) const {
        std::set<Literal> lits;
        for (const auto& set : minimal_sufficient_sets(f, tr_.state_at(t))) lits.insert(set.begin(), set.end());
        return {lits.begin(), lits.end()};
    }

    // Establishment point of l, true at t: the events of E(t1) asserting l,
    // with t1 + 1 the first time of the run of states S(t1+1..t) satisfying l.
    std::set<Occurrence> direct_literal(Literal l, Time t) const {
        Time t1 = t - 1;
        while (t1 >= 0 && tr_.state_at(t1).holds(l)) --t1;
        std::set<Occurrence> out;
        for (const EventIndex e : tr_.events_at(t1)) {
            const auto& eff = ctx_.event(e).eff;
            if (std::find(eff.begin(), eff.end(), l) != eff.end()) out.insert({e, t1});
        }
        return out;
    }

    std::set<Occurrence> direct_formula(const Formula& f, Time t) const {
        std::set<Occurrence> out;
        for (const Literal l : relevant_literals(f, t)) {
            const auto sub = direct_literal(l, t);
            out.insert(sub.begin(), sub.end());
        }
        return out;
    }

    const std::set<Occurrence>& ness_literal(Literal l, Time t) {
        const auto key = std::make_pair(l, t);
        if (auto it = ness_memo_.find(key); it != ness_memo_.end()) return it->second;
        std::set<Occurrence> out = direct_literal(l, t);
        for (const Occurrence& c : std::set<Occurrence>(out)) {
            const auto& ancestors = actual(c);
            out.insert(ancestors.begin(), ancestors.end());
        }
        return ness_memo_.emplace(key, std::move(out)).first->second;
    }

    std::set<Occurrence> ness_formula(const Formula& f, Time t) {
        std::set<Occurrence> out;
        for (const Literal l : relevant_literals(f, t)) {
            const auto& sub = ness_literal(l, t);
            out.insert(sub.begin(), sub.end());
        }
        return out;
    }

    const std::set<Occurrence>& actual(const Occurrence& o) {
        if (auto it = actual_memo_.find(o); it != actual_memo_.end()) return it->second;
        std::set<Occurrence> out;
        const EventSpec& spec = ctx_.event(o.event);
        if (spec.kind != EventClass::Initial) {
            out = ness_formula(spec.tri, o.time);
            out.erase(o);
        }
        return actual_memo_.emplace(o, std::move(out)).first->second;
    }

    // Occurrences one step back: direct causes of the trigger literals.
    std::map<Literal, std::set<Occurrence>> trigger_support(const Occurrence& o) const {
        std::map<Literal, std::set<Occurrence>> out;
        const EventSpec& spec = ctx_.event(o.event);
        if (spec.kind == EventClass::Initial) return out;
        for (const Literal l : relevant_literals(spec.tri, o.time)) out[l] = direct_literal(l, o.time);
        return out;
    }

private:
    const Traces& tr_;
    const Context& ctx_;
    std::map<std::pair<Literal, Time>, std::set<Occurrence>> ness_memo_;
    std::map<Occurrence, std::set<Occurrence>> actual_memo_;
};

}  // namespace

std::set<Occurrence> direct_ness_causes(const Traces& tr, const Context& ctx, const TimedFormula& target) {
    Analyzer a(tr, ctx);
    a.require_true(target);
    return a.direct_formula(target.formula, target.time);
}

std::set<Occurrence> ness_causes(const Traces& tr, const Context& ctx, const TimedFormula& target) {
    Analyzer a(tr, ctx);
    a.require_true(target);
    return a.ness_formula(target.formula, target.time);
}

std::set<Occurrence> actual_causes(const Traces& tr, const Context& ctx, const Occurrence& target) {
    Analyzer a(tr, ctx);
    a.require_occurs(target);
    return a.actual(target);
}

CausalGraph causal_graph(const Traces& tr, const Context& ctx, const TimedFormula& target) {
    Analyzer a(tr, ctx);
    a.require_true(target);
    CausalGraph g{target, {}};

    const auto direct = a.direct_formula(target.formula, target.time);
    for (const auto& c : direct) g.links.insert({c, target, CausalKind::DirectNESS});

    std::vector<Occurrence> frontier(direct.begin(), direct.end());
    std::set<Occurrence> visited(direct.begin(), direct.end());
    while (!frontier.empty()) {
        const Occurrence o = frontier.back();
        frontier.pop_back();
        for (const auto& [l, causes] : a.trigger_support(o)) {
            for (const auto& c : causes) {
                g.links.insert({c, TimedFormula{Formula::lit(l), o.time}, CausalKind::DirectNESS});
                g.links.insert({c, o, CausalKind::Actual});
                if (visited.insert(c).second) frontier.push_back(c);
            }
        }
    }
    for (const auto& c : a.ness_formula(target.formula, target.time)) {
        if (direct.count(c) == 0) g.links.insert({c, target, CausalKind::NESS});
    }
    return g;
}

std::string describe(const Occurrence& o, const Context& ctx) {
    return to_string(ctx.event(o.event).id) + "@" + std::to_string(o.time);
}

std::string describe(const TimedFormula& f, const Context& ctx) {
    return ctx.describe(f.formula) + "@" + std::to_string(f.time);
}

std::string describe(const CausalEffect& e, const Context& ctx) {
    return std::visit([&](const auto& x) { return describe(x, ctx); }, e);
}

// ---------------------------------------------------------------------------
// Queries

CauseQuery parse_query(std::string_view text) {
    auto fail = [&](const std::string& why) -> CauseQuery {
        throw Error(ErrorCode::QuerySyntax, "'" + std::string(text) + "': " + why);
    };
    CauseQuery q;
    std::string_view rest = text;
    if (rest.starts_with("not-acc(")) {
        q.kind = CauseQuery::Kind::NotAcc;
        rest.remove_prefix(8);
    } else if (rest.starts_with("acc(")) {
        q.kind = CauseQuery::Kind::Acc;
        rest.remove_prefix(4);
    } else if (rest.starts_with("present(")) {
        q.kind = CauseQuery::Kind::Present;
        rest.remove_prefix(8);
    } else {
        return fail("expected acc(ID), not-acc(ID) or present(ID)");
    }
    const auto close = rest.find(")@");
    if (close == std::string_view::npos) return fail("expected ')@' after the argument");
    q.arg = std::string(rest.substr(0, close));
    if (!is_valid_argument_id(q.arg)) return fail("invalid argument name");
    rest.remove_prefix(close + 2);
    if (rest == "final") return q;
    Time t = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size() || t < 0) {
        return fail("time must be a nonnegative integer or 'final'");
    }
    q.time = t;
    return q;
}

TimedFormula resolve_query(const CauseQuery& q, const Context& ctx, const Traces& tr) {
    const Time t = q.time.value_or(tr.last_time());
    if (t > tr.last_time()) {
        throw Error(ErrorCode::TargetNotInTrace,
                    "time " + std::to_string(t) + " is past the final state " + std::to_string(tr.last_time()));
    }
    std::optional<FluentIndex> f;
    if (q.kind == CauseQuery::Kind::Present) {
        f = ctx.find_fluent(Present{q.arg});
    } else {
        f = ctx.find_fluent(Acceptable{q.arg});
    }
    if (!f) throw Error(ErrorCode::UnknownArgument, "argument '" + q.arg + "' is not in the context");
    return {Formula::lit({*f, q.kind != CauseQuery::Kind::NotAcc}), t};
}

}  // namespace argtrace
