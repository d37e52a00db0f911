#include "argtrace/translate.hpp"

#include "argtrace/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace argtrace {

void validate_dialogue(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options) {
    validate_graph(g);
    const auto declared = g.argument_set();
    std::set<ArgumentId> seen;
    for (const auto& entry : d) {
        if (declared.count(entry.arg) == 0) {
            throw Error(ErrorCode::UnknownArgument, "dialogue enunciates undeclared argument '" + entry.arg + "'");
        }
        if (!seen.insert(entry.arg).second) {
            throw Error(ErrorCode::DuplicateArgument,
                        "argument '" + entry.arg + "' is enunciated twice; model a repeat as a distinct argument");
        }
    }
    if (!options.allow_partial && seen.size() != declared.size()) {
        for (const auto& x : declared) {
            if (seen.count(x) == 0) {
                throw Error(ErrorCode::IncompleteDialogue, "argument '" + x + "' is never enunciated");
            }
        }
    }
}

Context build_context(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options) {
    validate_dialogue(d, g, options);

    const std::set<ArgumentId> args = g.argument_set();
    const std::set<Attack> attacks = g.attack_set();
    std::map<ArgumentId, std::vector<ArgumentId>> attackers_of;
    for (const auto& [y, x] : attacks) attackers_of[x].push_back(y);

    ContextBuilder b;
    for (const auto& x : args) {
        b.add_fluent(Present{x});
        b.add_fluent(Acceptable{x});
    }
    for (const auto& [y, x] : attacks) b.add_fluent(CanAttack{y, x});

    for (const auto& x : args) {
        b.set_initial(Present{x}, false);
        b.set_initial(Acceptable{x}, false);
    }
    for (const auto& [y, x] : attacks) b.set_initial(CanAttack{y, x}, true);

    auto lit = [&](const FluentId& f, bool positive = true) { return Formula::lit(b.lit(f, positive)); };

    for (const auto& x : args) {
        // Volition is not modelled as a fluent, so tri coincides with pre.
        const Formula pre = lit(Present{x}, false);
        b.add_event({Enunciate{x}, EventClass::Action, pre, pre,
                     {b.lit(Present{x}), b.lit(Acceptable{x})}});
    }
    for (const auto& [y, x] : attacks) {
        const Formula tri = Formula::all_of({lit(Acceptable{x}), lit(Acceptable{y}), lit(CanAttack{y, x})});
        b.add_event({MakesUnacc{y, x}, EventClass::Exogenous, tri, tri, {b.lit(Acceptable{x}, false)}});
    }
    for (const auto& x : args) {
        std::vector<Formula> conjuncts{lit(Present{x}), lit(Acceptable{x}, false)};
        // Non-attackers contribute a constantly true disjunct and are omitted.
        for (const auto& y : attackers_of[x]) {
            conjuncts.push_back(Formula::any_of({lit(CanAttack{y, x}, false), lit(Acceptable{y}, false)}));
        }
        const Formula tri = Formula::all_of(std::move(conjuncts));
        b.add_event({MakesAcc{x}, EventClass::Exogenous, tri, tri, {b.lit(Acceptable{x})}});
    }
    // makesUnacc(y,x) over makesUnacc(x,z) for consecutive edges y -> x -> z.
    for (const auto& [y, x] : attacks) {
        for (const auto& [x2, z] : attacks) {
            if (x2 == x) b.add_priority(MakesUnacc{y, x}, MakesUnacc{x, z});
        }
    }
    b.set_horizon({args.size() * args.size() + 1, std::nullopt});
    return std::move(b).build();
}

Sequence build_sequence(const Dialogue& d) {
    std::set<ArgumentId> seen;
    Sequence seq;
    seq.reserve(d.size());
    for (const auto& entry : d) {
        if (!seen.insert(entry.arg).second) {
            throw Error(ErrorCode::DuplicateArgument, "argument '" + entry.arg + "' is enunciated twice");
        }
        seq.push_back({Enunciate{entry.arg}, entry.rank});
    }
    return seq;
}

Setting build_setting(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options) {
    return Setting(build_sequence(d), build_context(d, g, options));
}

ArgGraph context_graph(const Context& ctx) {
    ArgGraph g;
    for (const auto& f : ctx.fluents()) {
        if (const auto* p = std::get_if<Present>(&f)) g.arguments.push_back(p->arg);
        if (const auto* c = std::get_if<CanAttack>(&f)) g.attacks.emplace_back(c->attacker, c->target);
    }
    return g;
}

namespace {

struct FluentView {
    const StateAssign& s;
    const Context& ctx;

    bool present(const ArgumentId& x) const { return s.value(ctx.fluent_index(Present{x})); }
    bool acceptable(const ArgumentId& x) const { return s.value(ctx.fluent_index(Acceptable{x})); }
    // Pairs outside the attack relation have no cA fluent; they read as false.
    bool can_attack(const ArgumentId& y, const ArgumentId& x) const {
        const auto idx = ctx.find_fluent(CanAttack{y, x});
        return idx && s.value(*idx);
    }
};

}  // namespace

ArgumentativeStateReport is_argumentative_state(const StateAssign& s, const Context& ctx, std::optional<Time> time) {
    const ArgGraph g = context_graph(ctx);
    const FluentView v{s, ctx};
    ArgumentativeStateReport report;
    report.time = time;
    for (const auto& x : g.arguments) {
        for (const auto& y : g.arguments) {
            if (v.acceptable(x) && v.present(y) && v.can_attack(y, x) && v.acceptable(y)) {
                report.witnesses.push_back({1, x, y});
            }
        }
    }
    for (const auto& x : g.arguments) {
        if (!v.present(x) || v.acceptable(x)) continue;
        const bool unattacked = std::all_of(g.arguments.begin(), g.arguments.end(), [&](const ArgumentId& y) {
            return !v.acceptable(y) || !v.can_attack(y, x);
        });
        if (unattacked) report.witnesses.push_back({2, x, std::nullopt});
    }
    report.is_argumentative = report.witnesses.empty();
    return report;
}

ArgGraph associated_graph(const StateAssign& s, const Context& ctx) {
    const FluentView v{s, ctx};
    const ArgGraph full = context_graph(ctx);
    ArgGraph g;
    for (const auto& x : full.arguments) {
        if (v.present(x)) g.arguments.push_back(x);
    }
    for (const auto& [y, x] : full.attacks) {
        if (v.can_attack(y, x) && v.present(y) && v.present(x)) g.attacks.emplace_back(y, x);
    }
    return g;
}

FinalState final_argumentative_state(const Traces& tr, const Context& ctx, const Dialogue& d) {
    const Time last = tr.last_time();
    const StateAssign& s = tr.state_at(last);
    const auto report = is_argumentative_state(s, ctx, last);
    if (!report.is_argumentative) {
        throw Error(ErrorCode::NotFinal, "S(" + std::to_string(last) + ") is not argumentative");
    }
    const ArgGraph g = context_graph(ctx);
    for (const auto& x : g.arguments) {
        const EventIndex e = ctx.event_index(Enunciate{x});
        bool enunciated = false;
        for (Time t = 0; t < last && !enunciated; ++t) enunciated = tr.occurs(e, t);
        if (!enunciated) throw Error(ErrorCode::NotFinal, "argument '" + x + "' is never enunciated");
    }
    if (d.size() != g.arguments.size()) {
        throw Error(ErrorCode::NotFinal, "the dialogue does not cover every argument");
    }
    return {s, last};
}

}  // namespace argtrace
