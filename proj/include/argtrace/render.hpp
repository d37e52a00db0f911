#pragma once

#include "argtrace/action_lang.hpp"
#include "argtrace/causality.hpp"
#include "argtrace/translate.hpp"

#include <string>
#include <vector>

namespace argtrace {

// ---------------------------------------------------------------------------
// Acceptability table: one row per argument, one column per rank.

enum class Cell { Accepted, NotAccepted, NotYetEnunciated };

struct AcceptabilityTable {
    std::vector<std::string> columns;  // arguments of the rank, comma-joined
    std::vector<ArgumentId> rows;      // in enunciation order
    std::vector<std::vector<Cell>> cells;  // cells[row][column]
    std::vector<Time> sample_times;    // state sampled for each column
};

/// Samples the quiescent state reached after each rank's actions and their
/// exogenous cascade.
AcceptabilityTable build_table(const Traces& tr, const Context& ctx, const Dialogue& d);

enum class TableFormat { Unicode, Csv };

/// Unicode: ● accepted, ○ not accepted, ░ not yet enunciated.
/// CSV: 1 / 0 / - with an "argument" header cell.
std::string render_table_text(const AcceptabilityTable& t, TableFormat format);

// ---------------------------------------------------------------------------
// Timeline graph

struct FluentNode {
    Time time = 0;
    ArgumentId arg;
    bool negated = false;  // drawn in a light shade
};

struct EventNode {
    Time time = 0;
    EventIndex event = 0;
    std::string label;  // enu_x, una_y,x, acc_x
};

struct CausalEdge {
    CausalKind kind = CausalKind::DirectNESS;
    std::size_t from_event = 0;  // index into events
    bool to_event = false;
    std::size_t to = 0;  // index into events or fluents
    std::string label;   // effect times, coalesced: "29-31"
};

struct TimelineGraph {
    Time from = 0;
    Time to = -1;  // empty when to < from
    std::vector<FluentNode> fluents;
    std::vector<EventNode> events;
    std::vector<CausalEdge> causal;

    bool empty() const noexcept { return to < from; }
};

/// Short event label: enu_x, una_y,x, acc_x, ini.
std::string short_label(const EventId& e);

/// States S(from..to) showing acceptance fluents, with the events E(from..to).
/// A rejected argument is shown, shaded, only when an event inside the window
/// made it unacceptable. Causal links whose endpoints are drawn are overlaid.
/// Throws WindowOutOfRange.
TimelineGraph build_timeline(const Traces& tr, const Context& ctx, Time from, Time to,
                             const CausalGraph* causal = nullptr);

/// Graphviz text: hexagons for fluents, boxes for events; direct causes bold,
/// NESS-causes dashed, actual causes dotted.
std::string render_dot(const TimelineGraph& g);

}  // namespace argtrace
