#include "argtrace/aaf.hpp"
#include "argtrace/translate.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace argtrace;

namespace {

std::size_t random_size(std::mt19937_64& rng, std::size_t max) {
    return std::uniform_int_distribution<std::size_t>(0, max)(rng);
}

double random_density(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.0, 0.6)(rng); }

}  // namespace

TEST(Properties, FinalStateReproducesTheGraph) {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 120; ++round) {
        const ArgGraph g = support::random_dag(rng, random_size(rng, 12), random_density(rng));
        const Dialogue d = support::random_dialogue(rng, g);
        const Setting s = build_setting(d, g);
        const Traces tr = run(s);
        ASSERT_TRUE(validate_execution(tr, s).empty());
        const auto final_state = final_argumentative_state(tr, s.context(), d);
        EXPECT_TRUE(same_graph(associated_graph(final_state.state, s.context()), g));
        EXPECT_EQ(support::accepted_in(final_state.state, s.context()), support::oracle_grounded(g));
    }
}

TEST(Properties, FinalStateIgnoresTheOrder) {
    std::mt19937_64 rng(202);
    for (int round = 0; round < 60; ++round) {
        const ArgGraph g = support::random_dag(rng, random_size(rng, 10), random_density(rng));
        const Dialogue d = support::random_dialogue(rng, g);
        const Dialogue other = support::permuted(rng, d);
        const Traces a = run(build_setting(d, g));
        const Traces b = run(build_setting(other, g));
        EXPECT_EQ(a.state_at(a.last_time()), b.state_at(b.last_time()));
    }
}

TEST(Properties, ShuffledIterationGivesTheSameTrace) {
    std::mt19937_64 rng(303);
    for (int round = 0; round < 40; ++round) {
        const ArgGraph g = support::random_dag(rng, random_size(rng, 10), random_density(rng));
        const Setting s = build_setting(support::random_dialogue(rng, g), g);
        const std::string expected = support::trace_text(run(s), s.context());
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            EXPECT_EQ(support::trace_text(run(s, {seed}), s.context()), expected);
        }
    }
}

TEST(Properties, CascadesStayWithinTheBound) {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 60; ++round) {
        const ArgGraph g = support::random_dag(rng, random_size(rng, 12), random_density(rng));
        const Setting s = build_setting(support::random_dialogue(rng, g), g);
        const Traces tr = run(s);
        const std::size_t bound = g.arguments.size() * g.arguments.size() + 1;
        for (const std::size_t n : support::cascade_lengths(tr, s.context())) EXPECT_LE(n, bound);
    }
    const auto sample = support::example1();
    const auto lengths = support::cascade_lengths(sample.traces, sample.ctx());
    EXPECT_EQ(lengths.size(), 13u);
    for (const std::size_t n : lengths) EXPECT_LE(n, 14u * 14u + 1u);
}

TEST(Properties, ArgumentativeIffNothingTriggers) {
    std::mt19937_64 rng(505);
    std::vector<support::Scenario> families{support::example1(), support::example2()};
    for (int i = 0; i < 3; ++i) {
        const ArgGraph g = support::random_dag(rng, 6 + random_size(rng, 4), 0.3);
        DialogueFile file;
        file.graph = g;
        file.dialogue = support::random_dialogue(rng, g);
        families.push_back(support::load_scenario(file));
    }
    for (const auto& f : families) {
        for (Time t = 0; t <= f.traces.last_time(); ++t) {
            const StateAssign& s = f.traces.state_at(t);
            EXPECT_EQ(is_argumentative_state(s, f.ctx()).is_argumentative, is_quiescent(s, f.ctx())) << t;
        }
        for (int i = 0; i < 300; ++i) {
            const StateAssign s = support::random_state(rng, f.ctx(), true);
            EXPECT_EQ(is_argumentative_state(s, f.ctx()).is_argumentative, is_quiescent(s, f.ctx()));
        }
    }
}

TEST(Properties, AcceptanceWithoutPresenceBreaksTheEquivalence) {
    // An absent but accepted attacker triggers makesUnacc, yet clause 1 only
    // looks at present attackers.
    const ArgGraph g{{"x", "y"}, {{"y", "x"}}};
    const Setting s = build_setting({{"x", 0}, {"y", 1}}, g);
    const Context& ctx = s.context();
    StateAssign st = ctx.initial_state();
    st.set(ctx.literal(Present{"x"}));
    st.set(ctx.literal(Acceptable{"x"}));
    st.set(ctx.literal(Acceptable{"y"}));
    EXPECT_FALSE(is_quiescent(st, ctx));
    EXPECT_TRUE(is_argumentative_state(st, ctx).is_argumentative);
}

TEST(Properties, SampledTableStatesAreGrounded) {
    std::mt19937_64 rng(606);
    for (int round = 0; round < 40; ++round) {
        const ArgGraph g = support::random_dag(rng, random_size(rng, 10), random_density(rng));
        const Dialogue d = support::random_dialogue(rng, g);
        const Setting s = build_setting(d, g);
        const Traces tr = run(s);
        std::set<std::uint64_t> ranks;
        for (const auto& e : d) ranks.insert(e.rank);
        std::set<ArgumentId> present;
        std::size_t step = 0;
        for (const auto rank : ranks) {
            for (const auto& e : d) {
                if (e.rank == rank) present.insert(e.arg);
            }
            ArgGraph prefix;
            for (const auto& x : g.arguments) {
                if (present.count(x)) prefix.arguments.push_back(x);
            }
            for (const auto& [y, x] : g.attacks) {
                if (present.count(x) && present.count(y)) prefix.attacks.emplace_back(y, x);
            }
            // The quiescent state after this rank is the step-th argumentative state past 0.
            Time t = 0;
            std::size_t seen = 0;
            for (Time u = 1; u <= tr.last_time(); ++u) {
                if (is_quiescent(tr.state_at(u), s.context()) && ++seen == step + 1) {
                    t = u;
                    break;
                }
            }
            EXPECT_EQ(support::accepted_in(tr.state_at(t), s.context()), support::oracle_grounded(prefix));
            ++step;
        }
    }
}
