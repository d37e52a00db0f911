#pragma once

#include "argtrace/aaf.hpp"
#include "argtrace/action_lang.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace argtrace {

struct DialogueEntry {
    ArgumentId arg;
    std::uint64_t rank = 0;
};

/// Arguments with their order of enunciation. Equal ranks are enunciated
/// at the same time point.
using Dialogue = std::vector<DialogueEntry>;

struct TranslateOptions {
    // Allow dialogues that do not enunciate every argument of the graph.
    bool allow_partial = false;
};

/// Checks the dialogue against the graph: every entry names a declared
/// argument (UnknownArgument), none twice (DuplicateArgument), and unless
/// partial dialogues are allowed, every argument appears (IncompleteDialogue).
void validate_dialogue(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options = {});

/// Argumentative context over the whole graph: fluents p(x), a(x), cA(y,x);
/// one enunciate action per argument; one makesUnacc per attack; one
/// makesAcc per argument; priority along consecutive attack edges.
Context build_context(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options = {});

Sequence build_sequence(const Dialogue& d);

/// Convenience: validated setting for (d, g).
Setting build_setting(const Dialogue& d, const ArgGraph& g, const TranslateOptions& options = {});

struct ClauseWitness {
    int clause = 1;  // 1: an accepted argument has a present accepted attacker; 2: an unattacked one is not accepted
    ArgumentId x;
    std::optional<ArgumentId> y;  // the attacker, for clause 1
};

struct ArgumentativeStateReport {
    std::optional<Time> time;
    bool is_argumentative = true;
    std::vector<ClauseWitness> witnesses;
};

/// Evaluates both argumentative-state clauses directly on the fluents.
ArgumentativeStateReport is_argumentative_state(const StateAssign& s, const Context& ctx,
                                                std::optional<Time> time = std::nullopt);

/// Present arguments and the attacks among them.
ArgGraph associated_graph(const StateAssign& s, const Context& ctx);

/// Arguments and attacks the context was built from.
ArgGraph context_graph(const Context& ctx);

struct FinalState {
    StateAssign state;
    Time time = 0;
};

/// Last state of the trace, checked to be argumentative with every argument
/// of the context enunciated. Throws NotFinal otherwise.
FinalState final_argumentative_state(const Traces& tr, const Context& ctx, const Dialogue& d);

}  // namespace argtrace
