#include "argtrace/aaf.hpp"

#include "argtrace/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace argtrace {

bool is_valid_argument_id(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_';
    });
}

bool ArgGraph::contains(const ArgumentId& x) const {
    return std::find(arguments.begin(), arguments.end(), x) != arguments.end();
}

std::set<ArgumentId> ArgGraph::argument_set() const {
    return {arguments.begin(), arguments.end()};
}

std::set<Attack> ArgGraph::attack_set() const {
    return {attacks.begin(), attacks.end()};
}

bool same_graph(const ArgGraph& lhs, const ArgGraph& rhs) {
    return lhs.argument_set() == rhs.argument_set() && lhs.attack_set() == rhs.attack_set();
}

namespace {

using Adjacency = std::map<ArgumentId, std::vector<ArgumentId>>;

Adjacency successors(const ArgGraph& g) {
    Adjacency adj;
    for (const auto& x : g.arguments) adj[x];
    for (const auto& [from, to] : g.attacks) adj[from].push_back(to);
    for (auto& [_, next] : adj) {
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    return adj;
}

// Returns a cycle as a closed walk (first == last) or an empty vector.
std::vector<ArgumentId> find_cycle(const ArgGraph& g) {
    enum class Mark { White, Grey, Black };
    const Adjacency adj = successors(g);
    std::map<ArgumentId, Mark> mark;
    for (const auto& [x, _] : adj) mark[x] = Mark::White;

    std::vector<ArgumentId> path;
    std::vector<ArgumentId> cycle;

    std::function<bool(const ArgumentId&)> visit = [&](const ArgumentId& x) {
        mark[x] = Mark::Grey;
        path.push_back(x);
        for (const auto& y : adj.at(x)) {
            if (mark[y] == Mark::Grey) {
                auto it = std::find(path.begin(), path.end(), y);
                cycle.assign(it, path.end());
                cycle.push_back(y);
                return true;
            }
            if (mark[y] == Mark::White && visit(y)) return true;
        }
        path.pop_back();
        mark[x] = Mark::Black;
        return false;
    };

    for (const auto& [x, _] : adj) {
        if (mark[x] == Mark::White && visit(x)) return cycle;
    }
    return {};
}

std::vector<ArgumentId> topological_order(const ArgGraph& g) {
    const Adjacency adj = successors(g);
    std::map<ArgumentId, std::size_t> indegree;
    for (const auto& [x, _] : adj) indegree[x];
    for (const auto& [_, next] : adj) {
        for (const auto& y : next) ++indegree[y];
    }
    // std::set keeps the order independent of declaration order.
    std::set<ArgumentId> ready;
    for (const auto& [x, d] : indegree) {
        if (d == 0) ready.insert(x);
    }
    std::vector<ArgumentId> order;
    while (!ready.empty()) {
        ArgumentId x = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(x);
        for (const auto& y : adj.at(x)) {
            if (--indegree[y] == 0) ready.insert(y);
        }
    }
    return order;
}

}  // namespace

void validate_graph(const ArgGraph& g) {
    std::set<ArgumentId> seen;
    for (const auto& x : g.arguments) {
        if (!is_valid_argument_id(x)) {
            throw Error(ErrorCode::InvalidArgumentId, "argument name '" + x + "' is not a token");
        }
        if (!seen.insert(x).second) {
            throw Error(ErrorCode::DuplicateArgument, "argument '" + x + "' declared twice");
        }
    }
    for (const auto& [from, to] : g.attacks) {
        for (const auto& endpoint : {from, to}) {
            if (seen.count(endpoint) == 0) {
                throw Error(ErrorCode::UnknownArgument,
                            "attack (" + from + "," + to + ") uses undeclared argument '" + endpoint + "'");
            }
        }
    }
    const auto cycle = find_cycle(g);
    if (!cycle.empty()) {
        std::ostringstream out;
        out << "attack cycle ";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            out << (i ? " -> " : "") << cycle[i];
        }
        throw Error(ErrorCode::CycleFound, out.str());
    }
}

std::set<ArgumentId> attackers(const ArgGraph& g, const ArgumentId& x) {
    if (!g.contains(x)) throw Error(ErrorCode::UnknownArgument, "argument '" + x + "' is not declared");
    std::set<ArgumentId> result;
    for (const auto& [from, to] : g.attacks) {
        if (to == x) result.insert(from);
    }
    return result;
}

std::set<ArgumentId> accepted_set(const Labeling& labeling) {
    std::set<ArgumentId> result;
    for (const auto& [x, label] : labeling) {
        if (label == Label::Accepted) result.insert(x);
    }
    return result;
}

Labeling grounded_labeling(const ArgGraph& g) {
    validate_graph(g);
    std::map<ArgumentId, std::vector<ArgumentId>> attackers_of;
    for (const auto& [from, to] : g.attacks) attackers_of[to].push_back(from);

    Labeling labeling;
    for (const auto& x : topological_order(g)) {
        bool all_rejected = true;
        for (const auto& y : attackers_of[x]) {
            if (labeling.at(y) == Label::Accepted) {
                all_rejected = false;
                break;
            }
        }
        labeling[x] = all_rejected ? Label::Accepted : Label::Rejected;
    }
    return labeling;
}

bool is_conflict_free(const ArgGraph& g, const std::set<ArgumentId>& s) {
    return std::none_of(g.attacks.begin(), g.attacks.end(), [&](const Attack& att) {
        return s.count(att.first) != 0 && s.count(att.second) != 0;
    });
}

bool is_acceptable_by(const ArgGraph& g, const ArgumentId& x, const std::set<ArgumentId>& s) {
    for (const auto& y : attackers(g, x)) {
        const auto defenders = attackers(g, y);
        const bool defended = std::any_of(defenders.begin(), defenders.end(),
                                          [&](const ArgumentId& z) { return s.count(z) != 0; });
        if (!defended) return false;
    }
    return true;
}

bool is_admissible(const ArgGraph& g, const std::set<ArgumentId>& s) {
    if (!is_conflict_free(g, s)) return false;
    return std::all_of(s.begin(), s.end(), [&](const ArgumentId& x) { return is_acceptable_by(g, x, s); });
}

std::set<std::set<ArgumentId>> admissible_sets_bruteforce(const ArgGraph& g, std::size_t bound) {
    validate_graph(g);
    const std::set<ArgumentId> declared = g.argument_set();
    const std::vector<ArgumentId> args(declared.begin(), declared.end());
    if (args.size() > bound) {
        throw Error(ErrorCode::TooLarge, std::to_string(args.size()) + " arguments exceed the enumeration bound " +
                                             std::to_string(bound));
    }
    std::map<ArgumentId, std::size_t> index;
    for (std::size_t i = 0; i < args.size(); ++i) index[args[i]] = i;

    // Bitmask of attackers per argument.
    std::vector<std::size_t> attacked_by(args.size(), 0);
    for (const auto& [from, to] : g.attack_set()) {
        attacked_by[index.at(to)] |= std::size_t{1} << index.at(from);
    }

    std::set<std::set<ArgumentId>> result;
    const std::size_t subsets = std::size_t{1} << args.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        bool admissible = true;
        for (std::size_t i = 0; i < args.size() && admissible; ++i) {
            if ((mask & (std::size_t{1} << i)) == 0) continue;
            if (attacked_by[i] & mask) {
                admissible = false;
                break;
            }
            for (std::size_t j = 0; j < args.size(); ++j) {
                if ((attacked_by[i] & (std::size_t{1} << j)) && (attacked_by[j] & mask) == 0) {
                    admissible = false;
                    break;
                }
            }
        }
        if (!admissible) continue;
        std::set<ArgumentId> s;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (mask & (std::size_t{1} << i)) s.insert(args[i]);
        }
        result.insert(std::move(s));
    }
    return result;
}

}  // namespace argtrace
