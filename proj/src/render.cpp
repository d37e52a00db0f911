#include "argtrace/render.hpp"

#include "argtrace/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace argtrace {

AcceptabilityTable build_table(const Traces& tr, const Context& ctx, const Dialogue& d) {
    AcceptabilityTable table;

    std::vector<DialogueEntry> ordered(d.begin(), d.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const DialogueEntry& a, const DialogueEntry& b) { return a.rank < b.rank; });
    std::map<std::uint64_t, std::vector<ArgumentId>> by_rank;
    for (const auto& entry : ordered) {
        table.rows.push_back(entry.arg);
        by_rank[entry.rank].push_back(entry.arg);
    }

    for (const auto& [rank, group] : by_rank) {
        std::string label;
        for (const auto& x : group) label += (label.empty() ? "" : ",") + x;
        table.columns.push_back(label);

        const EventIndex first = ctx.event_index(Enunciate{group.front()});
        Time fired = -1;
        for (Time t = 0; t < tr.last_time() && fired < 0; ++t) {
            if (tr.occurs(first, t)) fired = t;
        }
        if (fired < 0) {
            throw Error(ErrorCode::TargetNotInTrace, "enunciate(" + group.front() + ") does not occur");
        }
        Time sample = fired + 1;
        while (sample < tr.last_time() && !is_quiescent(tr.state_at(sample), ctx)) ++sample;
        table.sample_times.push_back(sample);
    }

    for (const auto& x : table.rows) {
        const FluentIndex p = ctx.fluent_index(Present{x});
        const FluentIndex a = ctx.fluent_index(Acceptable{x});
        std::vector<Cell> row;
        for (const Time t : table.sample_times) {
            const StateAssign& s = tr.state_at(t);
            if (!s.value(p)) {
                row.push_back(Cell::NotYetEnunciated);
            } else {
                row.push_back(s.value(a) ? Cell::Accepted : Cell::NotAccepted);
            }
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string pad(const std::string& s, std::size_t glyphs, std::size_t width) {
    return s + std::string(width > glyphs ? width - glyphs : 0, ' ');
}

void trim_trailing(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

}  // namespace

std::string render_table_text(const AcceptabilityTable& t, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        out << "argument";
        for (const auto& c : t.columns) out << "," << csv_field(c);
        out << "\n";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            out << csv_field(t.rows[r]);
            for (const Cell cell : t.cells[r]) {
                out << "," << (cell == Cell::Accepted ? "1" : cell == Cell::NotAccepted ? "0" : "-");
            }
            out << "\n";
        }
        return out.str();
    }

    std::size_t label_width = 0;
    for (const auto& r : t.rows) label_width = std::max(label_width, r.size());
    std::vector<std::size_t> widths;
    for (const auto& c : t.columns) widths.push_back(std::max<std::size_t>(c.size(), 1));

    std::string header = pad("", 0, label_width);
    for (std::size_t c = 0; c < t.columns.size(); ++c) header += " " + pad(t.columns[c], t.columns[c].size(), widths[c]);
    trim_trailing(header);
    out << header << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::string line = pad(t.rows[r], t.rows[r].size(), label_width);
        for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
            const Cell cell = t.cells[r][c];
            const char* glyph = cell == Cell::Accepted ? "●" : cell == Cell::NotAccepted ? "○" : "░";
            line += " " + pad(glyph, 1, widths[c]);
        }
        trim_trailing(line);
        out << line << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Timeline

std::string short_label(const EventId& e) {
    if (const auto* x = std::get_if<Enunciate>(&e)) return "enu_" + x->arg;
    if (const auto* x = std::get_if<MakesUnacc>(&e)) return "una_" + x->attacker + "," + x->target;
    if (const auto* x = std::get_if<MakesAcc>(&e)) return "acc_" + x->arg;
    return "ini";
}

TimelineGraph build_timeline(const Traces& tr, const Context& ctx, Time from, Time to, const CausalGraph* causal) {
    if (from < 0 || to < from || to > tr.last_time()) {
        throw Error(ErrorCode::WindowOutOfRange, "window " + std::to_string(from) + "-" + std::to_string(to) +
                                                     " is outside 0-" + std::to_string(tr.last_time()));
    }
    TimelineGraph g;
    g.from = from;
    g.to = to;

    for (Time t = from; t <= to && t < tr.last_time(); ++t) {
        for (const EventIndex e : tr.events_at(t)) g.events.push_back({t, e, short_label(ctx.event(e).id)});
    }

    // Acceptance fluents negated by an in-window event before t.
    auto negated_in_window = [&](FluentIndex a, Time t) {
        for (const auto& ev : g.events) {
            if (ev.time >= t) continue;
            const auto& eff = ctx.event(ev.event).eff;
            if (std::find(eff.begin(), eff.end(), Literal{a, false}) != eff.end()) return true;
        }
        return false;
    };

    std::map<std::pair<Time, FluentIndex>, std::size_t> fluent_node;
    for (Time t = from; t <= to; ++t) {
        const StateAssign& s = tr.state_at(t);
        for (FluentIndex f = 0; f < ctx.fluents().size(); ++f) {
            const auto* acc = std::get_if<Acceptable>(&ctx.fluents()[f]);
            if (!acc) continue;
            const bool shown = s.value(f) || negated_in_window(f, t);
            if (!shown) continue;
            fluent_node[{t, f}] = g.fluents.size();
            g.fluents.push_back({t, acc->arg, !s.value(f)});
        }
    }

    if (!causal) return g;

    auto event_node = [&](const Occurrence& o) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < g.events.size(); ++i) {
            if (g.events[i].time == o.time && g.events[i].event == o.event) return i;
        }
        return std::nullopt;
    };
    auto literal_node = [&](const TimedFormula& f, Time at) -> std::optional<std::size_t> {
        if (f.formula.kind() != Formula::Kind::Lit) return std::nullopt;
        const Literal l = f.formula.literal();
        auto it = fluent_node.find({at, l.fluent});
        if (it == fluent_node.end() || g.fluents[it->second].negated == l.positive) return std::nullopt;
        return it->second;
    };

    // Direct links are coalesced per (cause, literal) into an interval that
    // starts where the cause established the literal.
    std::map<std::pair<Occurrence, Literal>, Time> direct_until;
    for (const auto& link : causal->links) {
        if (link.kind != CausalKind::DirectNESS) continue;
        const auto* f = std::get_if<TimedFormula>(&link.effect);
        if (!f || f->formula.kind() != Formula::Kind::Lit) continue;
        auto& until = direct_until[{link.cause, f->formula.literal()}];
        until = std::max(until, f->time);
    }
    for (const auto& [key, until] : direct_until) {
        const auto& [cause, lit] = key;
        const auto from_node = event_node(cause);
        const Time start = cause.time + 1;
        const auto to_node = literal_node(TimedFormula{Formula::lit(lit), start}, start);
        if (!from_node || !to_node) continue;
        const std::string label = start == until ? std::to_string(start)
                                                 : std::to_string(start) + "-" + std::to_string(until);
        g.causal.push_back({CausalKind::DirectNESS, *from_node, false, *to_node, label});
    }
    for (const auto& link : causal->links) {
        if (link.kind == CausalKind::DirectNESS) continue;
        const auto from_node = event_node(link.cause);
        if (!from_node) continue;
        if (const auto* o = std::get_if<Occurrence>(&link.effect)) {
            if (const auto to_node = event_node(*o)) {
                g.causal.push_back({link.kind, *from_node, true, *to_node, std::to_string(o->time)});
            }
        } else {
            const auto& f = std::get<TimedFormula>(link.effect);
            if (const auto to_node = literal_node(f, f.time)) {
                g.causal.push_back({link.kind, *from_node, false, *to_node, std::to_string(f.time)});
            }
        }
    }
    return g;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fluent_id(const FluentNode& n) { return quote("s" + std::to_string(n.time) + "_" + n.arg); }
std::string event_id(std::size_t i) { return quote("e" + std::to_string(i)); }
std::string anchor_id(Time t) { return quote("s" + std::to_string(t)); }

const char* edge_style(CausalKind kind) {
    switch (kind) {
        case CausalKind::DirectNESS: return "bold";
        case CausalKind::NESS: return "dashed";
        case CausalKind::Actual: return "dotted";
    }
    return "solid";
}

}  // namespace

std::string render_dot(const TimelineGraph& g) {
    std::ostringstream out;
    out << "digraph timeline {\n";
    if (g.empty()) {
        out << "}\n";
        return out.str();
    }
    out << "  rankdir=LR;\n  compound=true;\n  node [fontsize=10];\n";
    for (Time t = g.from; t <= g.to; ++t) {
        out << "  subgraph " << quote("cluster_s" + std::to_string(t)) << " {\n";
        out << "    label=" << quote("t=" + std::to_string(t)) << ";\n";
        out << "    " << anchor_id(t) << " [shape=point, style=invis];\n";
        for (const auto& n : g.fluents) {
            if (n.time != t) continue;
            out << "    " << fluent_id(n) << " [label=" << quote(n.arg) << ", shape=hexagon";
            if (n.negated) out << ", color=gray60, fontcolor=gray60";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (std::size_t i = 0; i < g.events.size(); ++i) {
        const auto& ev = g.events[i];
        out << "  " << event_id(i) << " [label=" << quote(ev.label) << ", shape=box];\n";
        out << "  " << anchor_id(ev.time) << " -> " << event_id(i)
            << " [ltail=" << quote("cluster_s" + std::to_string(ev.time)) << "];\n";
        if (ev.time + 1 <= g.to) {
            out << "  " << event_id(i) << " -> " << anchor_id(ev.time + 1)
                << " [lhead=" << quote("cluster_s" + std::to_string(ev.time + 1)) << "];\n";
        }
    }
    for (const auto& edge : g.causal) {
        const std::string target = edge.to_event ? event_id(edge.to) : fluent_id(g.fluents.at(edge.to));
        out << "  " << event_id(edge.from_event) << " -> " << target << " [style=" << edge_style(edge.kind)
            << ", constraint=false, label=" << quote(std::string(to_string(edge.kind)) + " " + edge.label) << "];\n";
    }
    out << "  subgraph cluster_legend {\n"
        << "    label=\"legend\";\n"
        << "    \"legend_from\" [shape=point];\n"
        << "    \"legend_to\" [shape=point];\n"
        << "    \"legend_from\" -> \"legend_to\" [style=bold, label=\"direct NESS-cause\"];\n"
        << "    \"legend_from\" -> \"legend_to\" [style=dashed, label=\"NESS-cause\"];\n"
        << "    \"legend_from\" -> \"legend_to\" [style=dotted, label=\"actual cause\"];\n"
        << "  }\n";
    out << "}\n";
    return out.str();
}

}  // namespace argtrace
