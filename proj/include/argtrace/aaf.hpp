#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argtrace {

// Argument names are tokens of letters, digits and underscores, compared
// case-sensitively.
using ArgumentId = std::string;
using Attack = std::pair<ArgumentId, ArgumentId>;  // (attacker, target)

bool is_valid_argument_id(std::string_view name) noexcept;

/// Abstract argumentation framework over an acyclic attack relation.
///
/// The raw vectors keep declaration order so that validation can report
/// duplicates; all queries treat them as sets.
struct ArgGraph {
    std::vector<ArgumentId> arguments;
    std::vector<Attack> attacks;

    bool contains(const ArgumentId& x) const;

    // Set view used for comparisons between graphs.
    std::set<ArgumentId> argument_set() const;
    std::set<Attack> attack_set() const;
};

bool same_graph(const ArgGraph& lhs, const ArgGraph& rhs);

/// Throws Error{CycleFound | UnknownArgument | DuplicateArgument |
/// InvalidArgumentId} when an invariant does not hold. CycleFound lists one
/// cycle in its message.
void validate_graph(const ArgGraph& g);

/// Direct attackers of x. Throws UnknownArgument if x is not declared.
std::set<ArgumentId> attackers(const ArgGraph& g, const ArgumentId& x);

enum class Label { Accepted, Rejected };

using Labeling = std::map<ArgumentId, Label>;

std::set<ArgumentId> accepted_set(const Labeling& labeling);

/// Topological evaluation of the unique grounded labeling of an acyclic
/// graph: an argument is accepted iff all of its attackers are rejected.
Labeling grounded_labeling(const ArgGraph& g);

bool is_conflict_free(const ArgGraph& g, const std::set<ArgumentId>& s);
bool is_acceptable_by(const ArgGraph& g, const ArgumentId& x, const std::set<ArgumentId>& s);
bool is_admissible(const ArgGraph& g, const std::set<ArgumentId>& s);

inline constexpr std::size_t kDefaultBruteForceBound = 16;

/// Exhaustive subset enumeration. Throws TooLarge past `bound` arguments.
std::set<std::set<ArgumentId>> admissible_sets_bruteforce(const ArgGraph& g,
                                                          std::size_t bound = kDefaultBruteForceBound);

}  // namespace argtrace
