#include "argtrace/error.hpp"
#include "argtrace/render.hpp"
#include "dot_check.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace argtrace;

namespace {

class Rendering : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        first_ = new support::Scenario(support::example1());
        second_ = new support::Scenario(support::example2());
    }
    static void TearDownTestSuite() {
        delete first_;
        delete second_;
    }
    static const support::Scenario& first() { return *first_; }
    static const support::Scenario& second() { return *second_; }

private:
    static inline support::Scenario* first_ = nullptr;
    static inline support::Scenario* second_ = nullptr;
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::map<std::string, std::size_t> causal_styles(const support::DotGraph& g) {
    std::map<std::string, std::size_t> out;
    for (const auto& e : g.edges) {
        if (e.attrs.count("constraint") && e.attrs.at("constraint") == "false") ++out[e.attrs.at("style")];
    }
    return out;
}

}  // namespace

TEST_F(Rendering, UnicodeTableMatchesGolden) {
    const auto table = build_table(first().traces, first().ctx(), first().file.dialogue);
    EXPECT_EQ(render_table_text(table, TableFormat::Unicode), support::read_file(support::golden_file("table1.txt")));
}

TEST_F(Rendering, CsvTableMatchesGolden) {
    const auto table = build_table(first().traces, first().ctx(), first().file.dialogue);
    const std::string csv = render_table_text(table, TableFormat::Csv);
    EXPECT_EQ(csv, support::read_file(support::golden_file("table1.csv")));
    EXPECT_EQ(count_lines(csv), 15u);
    EXPECT_EQ(table.columns.size(), 13u);
    EXPECT_EQ(table.columns[7], "h,i");
}

TEST_F(Rendering, RowCOfTheSampleDialogue) {
    const auto table = build_table(first().traces, first().ctx(), first().file.dialogue);
    const std::vector<Cell> expected{Cell::Accepted,    Cell::NotAccepted, Cell::Accepted,    Cell::NotAccepted,
                                     Cell::Accepted,    Cell::NotAccepted, Cell::NotAccepted, Cell::Accepted,
                                     Cell::Accepted,    Cell::Accepted,    Cell::NotAccepted};
    ASSERT_EQ(table.rows[2], "c");
    EXPECT_EQ(std::vector<Cell>(table.cells[2].begin() + 2, table.cells[2].end()), expected);
}

TEST_F(Rendering, RowCOfTheReorderedDialogue) {
    const auto table = build_table(second().traces, second().ctx(), second().file.dialogue);
    ASSERT_EQ(table.rows[2], "c");
    std::string row;
    for (std::size_t c = 2; c < table.cells[2].size(); ++c) row += table.cells[2][c] == Cell::Accepted ? "●" : "○";
    EXPECT_EQ(row + "\n", support::read_file(support::golden_file("table3_row_c.txt")));
}

TEST_F(Rendering, SampledCellsMatchTheOracle) {
    for (const auto* s : {&first(), &second()}) {
        const auto table = build_table(s->traces, s->ctx(), s->file.dialogue);
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            const StateAssign& state = s->traces.state_at(table.sample_times[c]);
            EXPECT_TRUE(is_quiescent(state, s->ctx()));
            const auto expected = support::oracle_grounded(associated_graph(state, s->ctx()));
            for (std::size_t r = 0; r < table.rows.size(); ++r) {
                const Cell cell = table.cells[r][c];
                if (cell == Cell::NotYetEnunciated) {
                    EXPECT_FALSE(state.value(s->ctx().fluent_index(Present{table.rows[r]})));
                } else {
                    EXPECT_EQ(cell == Cell::Accepted, expected.count(table.rows[r]) > 0);
                }
            }
        }
        const auto grounded = support::oracle_grounded(s->file.graph);
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            EXPECT_EQ(table.cells[r].back() == Cell::Accepted, grounded.count(table.rows[r]) > 0);
        }
    }
}

TEST(Table, SingleArgument) {
    const ArgGraph g{{"only"}, {}};
    const Dialogue d{{"only", 0}};
    const Setting s = build_setting(d, g);
    const Traces tr = run(s);
    const auto table = build_table(tr, s.context(), d);
    ASSERT_EQ(table.cells.size(), 1u);
    ASSERT_EQ(table.cells[0].size(), 1u);
    EXPECT_EQ(table.cells[0][0], Cell::Accepted);
    EXPECT_EQ(render_table_text(table, TableFormat::Csv), "argument,only\nonly,1\n");
}

TEST(Table, EmptyTableIsHeaderOnly) {
    EXPECT_EQ(render_table_text({}, TableFormat::Csv), "argument\n");
    EXPECT_EQ(count_lines(render_table_text({}, TableFormat::Unicode)), 1u);
}

TEST_F(Rendering, TimelineWindowSixToNine) {
    const auto g = build_timeline(first().traces, first().ctx(), 6, 9);
    std::vector<std::string> labels;
    for (const auto& e : g.events) labels.push_back(e.label + "@" + std::to_string(e.time));
    EXPECT_EQ(labels, (std::vector<std::string>{"enu_e@6", "una_e,d@7", "acc_c@8", "enu_f@9"}));

    std::map<Time, std::set<std::string>> shown;
    for (const auto& n : g.fluents) shown[n.time].insert(n.negated ? "~" + n.arg : n.arg);
    EXPECT_EQ(shown[6], (std::set<std::string>{"b", "d"}));
    EXPECT_EQ(shown[7], (std::set<std::string>{"b", "d", "e"}));
    EXPECT_EQ(shown[8], (std::set<std::string>{"b", "e", "~d"}));
    EXPECT_EQ(shown[9], (std::set<std::string>{"b", "c", "e", "~d"}));

    const auto dot = support::read_dot(render_dot(g));
    std::size_t boxes = 0, hexagons = 0;
    for (const auto& [id, attrs] : dot.nodes) {
        if (attrs.count("shape") && attrs.at("shape") == "box") ++boxes;
        if (attrs.count("shape") && attrs.at("shape") == "hexagon") ++hexagons;
    }
    EXPECT_EQ(boxes, 4u);
    EXPECT_EQ(hexagons, g.fluents.size());
    EXPECT_TRUE(std::count(dot.subgraphs.begin(), dot.subgraphs.end(), "cluster_legend"));
}

TEST_F(Rendering, TimelineOfAQuiescentState) {
    const Time last = first().traces.last_time();
    const auto g = build_timeline(first().traces, first().ctx(), last, last);
    EXPECT_TRUE(g.events.empty());
    for (const auto& n : g.fluents) EXPECT_EQ(n.time, last);
    const auto dot = support::read_dot(render_dot(g));
    EXPECT_EQ(std::count_if(dot.subgraphs.begin(), dot.subgraphs.end(),
                            [](const std::string& s) { return s.rfind("cluster_s", 0) == 0; }),
              1);
}

TEST_F(Rendering, TimelineRejectsBadWindows) {
    const auto& s = first();
    for (const auto& [from, to] : std::vector<std::pair<Time, Time>>{{-1, 3}, {5, 4}, {0, 32}}) {
        try {
            build_timeline(s.traces, s.ctx(), from, to);
            ADD_FAILURE() << from << "-" << to;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::WindowOutOfRange);
        }
    }
}

TEST_F(Rendering, CausalOverlayUsesThreeStyles) {
    const auto& s = first();
    const TimedFormula root{Formula::lit(s.ctx().literal(Acceptable{"l"})), 31};
    const auto causal = causal_graph(s.traces, s.ctx(), root);
    const auto g = build_timeline(s.traces, s.ctx(), 28, 31, &causal);
    const auto styles = causal_styles(support::read_dot(render_dot(g)));
    EXPECT_GT(styles.count("bold"), 0u);
    EXPECT_GT(styles.count("dashed"), 0u);
    EXPECT_GT(styles.count("dotted"), 0u);

    std::vector<std::string> enu_n;
    for (const auto& e : g.causal) {
        if (e.kind == CausalKind::DirectNESS && g.events[e.from_event].label == "enu_n") enu_n.push_back(e.label);
    }
    EXPECT_EQ(enu_n, (std::vector<std::string>{"29"}));
}

TEST_F(Rendering, DirectLinksCoalesceIntoIntervals) {
    const auto& s = first();
    CausalGraph causal;
    causal.root = {Formula::lit(s.ctx().literal(Acceptable{"n"})), 31};
    const Occurrence enu_n{s.ctx().event_index(Enunciate{"n"}), 28};
    for (Time t : {29, 30, 31}) {
        causal.links.insert({enu_n, TimedFormula{causal.root.formula, t}, CausalKind::DirectNESS});
    }
    const auto g = build_timeline(s.traces, s.ctx(), 28, 31, &causal);
    ASSERT_EQ(g.causal.size(), 1u);
    EXPECT_EQ(g.causal.front().label, "29-31");
    EXPECT_EQ(g.fluents.at(g.causal.front().to).time, 29);
}

TEST_F(Rendering, OverlayEdgeCountsFollowTheCausalGraph) {
    const auto& s = first();
    const TimedFormula root{Formula::lit(s.ctx().literal(Acceptable{"l"})), 31};
    const auto causal = causal_graph(s.traces, s.ctx(), root);
    const auto g = build_timeline(s.traces, s.ctx(), 0, s.traces.last_time(), &causal);

    std::size_t ness = 0, actual = 0;
    std::set<std::pair<Occurrence, Literal>> direct;
    for (const auto& link : causal.links) {
        if (link.cause.time < 0) continue;
        if (link.kind == CausalKind::NESS) ++ness;
        if (link.kind == CausalKind::Actual) ++actual;
        if (link.kind == CausalKind::DirectNESS) {
            const Literal l = std::get<TimedFormula>(link.effect).formula.literal();
            if (std::holds_alternative<Acceptable>(s.ctx().fluents()[l.fluent])) direct.insert({link.cause, l});
        }
    }
    const auto styles = causal_styles(support::read_dot(render_dot(g)));
    EXPECT_EQ(styles.count("dashed") ? styles.at("dashed") : 0, ness);
    EXPECT_EQ(styles.count("dotted") ? styles.at("dotted") : 0, actual);
    EXPECT_EQ(styles.count("bold") ? styles.at("bold") : 0, direct.size());
    EXPECT_EQ(g.causal.size(), ness + actual + direct.size());
}

TEST(Dot, EmptyGraphIsMinimal) {
    const std::string text = render_dot(TimelineGraph{});
    EXPECT_EQ(text, "digraph timeline {\n}\n");
    const auto dot = support::read_dot(text);
    EXPECT_TRUE(dot.nodes.empty());
    EXPECT_TRUE(dot.edges.empty());
}

TEST_F(Rendering, DotOfEveryWindowParses) {
    const auto& s = first();
    for (Time from = 0; from <= s.traces.last_time(); from += 4) {
        const Time to = std::min(from + 5, s.traces.last_time());
        const auto g = build_timeline(s.traces, s.ctx(), from, to);
        const auto dot = support::read_dot(render_dot(g));
        for (const auto& e : dot.edges) {
            EXPECT_TRUE(dot.nodes.count(e.from)) << e.from;
            EXPECT_TRUE(dot.nodes.count(e.to)) << e.to;
        }
    }
}

TEST(Labels, Short) {
    EXPECT_EQ(short_label(Enunciate{"e"}), "enu_e");
    EXPECT_EQ(short_label(MakesUnacc{"e", "d"}), "una_e,d");
    EXPECT_EQ(short_label(MakesAcc{"c"}), "acc_c");
}
