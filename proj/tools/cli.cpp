#include "cli.hpp"

#include "argtrace/aaf.hpp"
#include "argtrace/action_lang.hpp"
#include "argtrace/asp_emit.hpp"
#include "argtrace/causality.hpp"
#include "argtrace/dialogue_file.hpp"
#include "argtrace/error.hpp"
#include "argtrace/render.hpp"
#include "argtrace/translate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace argtrace::cli {

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
            return kInputError;
        case ErrorCode::CycleFound:
        case ErrorCode::UnknownArgument:
        case ErrorCode::DuplicateArgument:
        case ErrorCode::IncompleteDialogue:
        case ErrorCode::InvalidArgumentId:
        case ErrorCode::InvalidSetting:
        case ErrorCode::QuerySyntax:
        case ErrorCode::TargetNotTrue:
        case ErrorCode::TargetNotInTrace:
        case ErrorCode::WindowOutOfRange:
        case ErrorCode::TooLarge:
            return kValidationError;
        case ErrorCode::SolverUnavailable:
        case ErrorCode::SolverParseError:
        case ErrorCode::SolverDisagreement:
            return kSolverError;
        default:
            return kAuditFailure;
    }
}

struct Loaded {
    DialogueFile file;
    Setting setting;
    Traces traces;

    const Context& ctx() const { return setting.context(); }
};

Loaded load(const std::string& path) {
    DialogueFile file = load_dialogue_file(path);
    validate_graph(file.graph);
    Setting setting = build_setting(file.dialogue, file.graph);
    Traces traces = run(setting);
    return {std::move(file), std::move(setting), std::move(traces)};
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
    return out;
}

std::string describe_state(const StateAssign& s, const Context& ctx) {
    std::vector<std::string> present, accepted;
    for (FluentIndex f = 0; f < ctx.fluents().size(); ++f) {
        if (!s.value(f)) continue;
        if (const auto* p = std::get_if<Present>(&ctx.fluents()[f])) present.push_back(p->arg);
        if (const auto* a = std::get_if<Acceptable>(&ctx.fluents()[f])) accepted.push_back(a->arg);
    }
    return "present {" + join(present) + "} accepted {" + join(accepted) + "}";
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
    file << text;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_run(const std::string& path, std::ostream& out) {
    const Loaded l = load(path);
    const Context& ctx = l.ctx();
    if (l.file.title) out << "# " << *l.file.title << "\n";
    out << "arguments " << l.file.graph.arguments.size() << "\n";
    out << "attacks " << l.file.graph.attacks.size() << "\n";
    for (Time t = 0; t <= l.traces.last_time(); ++t) {
        out << "S(" << t << ") " << describe_state(l.traces.state_at(t), ctx) << "\n";
        if (t == l.traces.last_time()) break;
        std::vector<std::string> names;
        for (const EventIndex e : l.traces.events_at(t)) names.push_back(to_string(ctx.event(e).id));
        out << "E(" << t << ") {";
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
        out << "}\n";
    }
    out << "final " << l.traces.last_time() << "\n";
    return kOk;
}

int cmd_table(const std::string& path, const std::string& format, std::ostream& out) {
    const Loaded l = load(path);
    const auto table = build_table(l.traces, l.ctx(), l.file.dialogue);
    out << render_table_text(table, format == "csv" ? TableFormat::Csv : TableFormat::Unicode);
    return kOk;
}

int cmd_timeline(const std::string& path, Time from, Time to, const std::string& query, const std::string& output,
                 std::ostream& out) {
    const Loaded l = load(path);
    std::optional<CausalGraph> causal;
    if (!query.empty()) causal = causal_graph(l.traces, l.ctx(), resolve_query(parse_query(query), l.ctx(), l.traces));
    const auto g = build_timeline(l.traces, l.ctx(), from, to, causal ? &*causal : nullptr);
    write_output(render_dot(g), output, out);
    return kOk;
}

int cmd_causes(const std::string& path, const std::string& query, const std::vector<std::string>& kinds, bool show_ini,
               std::ostream& out) {
    std::set<std::string> wanted(kinds.begin(), kinds.end());
    for (const auto& k : wanted) {
        if (k != "direct" && k != "ness" && k != "actual") {
            throw Error(ErrorCode::QuerySyntax, "unknown cause kind '" + k + "'");
        }
    }
    if (wanted.empty()) wanted = {"direct", "ness", "actual"};

    const Loaded l = load(path);
    const Context& ctx = l.ctx();
    const TimedFormula target = resolve_query(parse_query(query), ctx, l.traces);
    const auto shown = [&](const Occurrence& o) { return show_ini || o.time >= 0; };

    out << "target " << describe(target, ctx) << "\n";
    if (wanted.count("direct")) {
        for (const auto& o : direct_ness_causes(l.traces, ctx, target)) {
            if (shown(o)) out << "direct " << describe(o, ctx) << "\n";
        }
    }
    const auto ness = ness_causes(l.traces, ctx, target);
    if (wanted.count("ness")) {
        for (const auto& o : ness) {
            if (shown(o)) out << "ness " << describe(o, ctx) << "\n";
        }
    }
    if (wanted.count("actual")) {
        for (const auto& o : ness) {
            for (const auto& c : actual_causes(l.traces, ctx, o)) {
                if (shown(c)) out << "actual " << describe(c, ctx) << " -> " << describe(o, ctx) << "\n";
            }
        }
    }
    return kOk;
}

int cmd_emit_asp(const std::string& path, const std::string& output, std::optional<Time> horizon,
                 const std::optional<std::string>& solve, std::ostream& out, std::ostream& err) {
    const Loaded l = load(path);
    if (!horizon && solve) horizon = l.traces.last_time() + 1;
    const auto program = asp::emit_program(l.setting, horizon);
    write_output(program.text(), output, out);
    if (!solve) return kOk;

    std::optional<std::string> command = *solve;
    if (command->empty()) {
        const char* env = std::getenv(asp::kSolverEnvVar);
        command = env && *env ? std::optional<std::string>(env) : std::nullopt;
    }
    const auto result = asp::solver_bridge(program, command);
    if (result.status == asp::SolverStatus::Unavailable) {
        err << "solver: unavailable (no command given and " << asp::kSolverEnvVar << " unset)\n";
        return kOk;
    }
    asp::compare_with_engine(result.answer, l.traces, l.ctx());
    err << "solver: occurrences and final acceptability agree with the engine\n";
    return kOk;
}

// Self-audits over one file; each prints one line.
int cmd_check(const std::string& path, std::ostream& out) {
    const Loaded l = load(path);
    const Context& ctx = l.ctx();
    bool all_ok = true;
    const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
        all_ok = all_ok && ok;
    };

    const auto violations = validate_execution(l.traces, l.setting);
    std::string first_violation;
    if (!violations.empty()) {
        first_violation = "t=" + std::to_string(violations.front().time) + " condition " +
                          violations.front().condition + ": " + violations.front().detail;
    }
    report("valid execution", violations.empty(), first_violation);

    std::string lemma_detail;
    for (Time t = 0; t <= l.traces.last_time() && lemma_detail.empty(); ++t) {
        const StateAssign& s = l.traces.state_at(t);
        if (is_argumentative_state(s, ctx).is_argumentative != is_quiescent(s, ctx)) {
            lemma_detail = "argumentative and quiescent disagree at S(" + std::to_string(t) + ")";
        }
    }
    report("argumentative iff no trigger", lemma_detail.empty(), lemma_detail);

    std::string sample_detail;
    const auto table = build_table(l.traces, ctx, l.file.dialogue);
    for (const Time t : table.sample_times) {
        const StateAssign& s = l.traces.state_at(t);
        const auto expected = accepted_set(grounded_labeling(associated_graph(s, ctx)));
        std::set<ArgumentId> actual;
        for (const auto& x : associated_graph(s, ctx).arguments) {
            if (s.value(ctx.fluent_index(Acceptable{x}))) actual.insert(x);
        }
        if (actual != expected) {
            sample_detail = "S(" + std::to_string(t) + ") differs from the grounded labeling";
            break;
        }
    }
    report("sampled states are grounded", sample_detail.empty(), sample_detail);

    const FinalState final_state = final_argumentative_state(l.traces, ctx, l.file.dialogue);
    const ArgGraph assoc = associated_graph(final_state.state, ctx);
    report("final graph equals input", same_graph(assoc, l.file.graph), "");
    std::set<ArgumentId> final_accepted;
    for (const auto& x : l.file.graph.arguments) {
        if (final_state.state.value(ctx.fluent_index(Acceptable{x}))) final_accepted.insert(x);
    }
    report("final state is grounded", final_accepted == accepted_set(grounded_labeling(l.file.graph)), "");

    Dialogue reversed = l.file.dialogue;
    std::uint64_t top = 0;
    for (const auto& e : reversed) top = std::max(top, e.rank);
    for (auto& e : reversed) e.rank = top - e.rank;
    const Setting other = build_setting(reversed, l.file.graph);
    const Traces other_traces = run(other);
    report("order independence", other_traces.state_at(other_traces.last_time()) == final_state.state, "");

    return all_ok ? kOk : kAuditFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trace, explain and render argumentation dialogues", "argtrace"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "unicode";
    Time from = 0, to = 0, horizon = 0;
    std::string query, output;
    std::vector<std::string> kinds;
    bool show_ini = false;
    std::string solve;

    auto* run_cmd = app.add_subcommand("run", "Print the event and state traces");
    auto* table_cmd = app.add_subcommand("table", "Print the acceptability table");
    auto* timeline_cmd = app.add_subcommand("timeline", "Write a DOT timeline for a window of the trace");
    auto* causes_cmd = app.add_subcommand("causes", "List the causes of a query");
    auto* emit_cmd = app.add_subcommand("emit-asp", "Write the logic program");
    auto* check_cmd = app.add_subcommand("check", "Run the self-audits");
    for (auto* sub : {run_cmd, table_cmd, timeline_cmd, causes_cmd, emit_cmd, check_cmd}) {
        sub->add_option("file", path, "Dialogue file (JSON)")->required();
    }
    table_cmd->add_option("--format", format, "unicode or csv")->check(CLI::IsMember({"unicode", "csv"}));
    timeline_cmd->add_option("--from", from, "First time point")->required();
    timeline_cmd->add_option("--to", to, "Last time point")->required();
    timeline_cmd->add_option("--causes", query, "Overlay the causes of QUERY");
    timeline_cmd->add_option("-o,--output", output, "Output file");
    causes_cmd->add_option("query", query, "acc(ID)@T, not-acc(ID)@T or present(ID)@T; T may be 'final'")->required();
    causes_cmd->add_option("--kinds", kinds, "Subset of direct,ness,actual")->delimiter(',');
    causes_cmd->add_flag("--show-ini", show_ini, "Include initial pseudo-events");
    emit_cmd->add_option("-o,--output", output, "Output file");
    auto* horizon_opt = emit_cmd->add_option("--horizon", horizon, "Value of the horizon constant")->check(CLI::NonNegativeNumber);
    auto* solve_opt = emit_cmd->add_option("--solve", solve, std::string("Solver command; defaults to $") +
                                                                 asp::kSolverEnvVar)
                          ->expected(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*run_cmd) return cmd_run(path, out);
        if (*table_cmd) return cmd_table(path, format, out);
        if (*timeline_cmd) return cmd_timeline(path, from, to, query, output, out);
        if (*causes_cmd) return cmd_causes(path, query, kinds, show_ini, out);
        if (*emit_cmd) {
            return cmd_emit_asp(path, output, horizon_opt->count() ? std::optional<Time>(horizon) : std::nullopt,
                                solve_opt->count() ? std::optional<std::string>(solve) : std::nullopt,
                                out, err);
        }
        return cmd_check(path, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kAuditFailure;
    }
}

}  // namespace argtrace::cli
