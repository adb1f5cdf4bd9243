#include "sulva/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sulva/render.hpp"
#include "sulva/script.hpp"
#include "sulva/units.hpp"

namespace sulva {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConstruction = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: sulva <command> [options]\n"
    "\n"
    "commands:\n"
    "  construct <name> [--<param> <value>]... [--precision N] [--svg FILE] [--trace FILE]\n"
    "  run <script.sulva> [--out-dir DIR] [--precision N]\n"
    "  report [--format text|json|csv] [--precision N] [--out FILE]\n"
    "  units convert <quantity> <from> <to> [--table FILE]\n"
    "  triples [--limit N]\n"
    "  ops\n"
    "  help\n"
    "\n"
    "Values are exact expressions: integers, quotients like 13/15, sqrt(...),\n"
    "and arithmetic on them. SULVA_PRECISION overrides the default of 50.\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write file '" + path + "'");
    out << content;
}

struct Flags {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> options;

    std::optional<std::string> take(const std::string& key) {
        for (auto it = options.begin(); it != options.end(); ++it)
            if (it->first == key) {
                std::string v = it->second;
                options.erase(it);
                return v;
            }
        return std::nullopt;
    }

    void reject_leftovers() const {
        if (!options.empty())
            throw UsageError("unknown option '--" + options.front().first + "'");
    }
};

Flags split_args(const std::vector<std::string>& args, size_t start) {
    Flags flags;
    for (size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            if (i + 1 >= args.size())
                throw UsageError("option '" + a + "' needs a value");
            flags.options.emplace_back(a.substr(2), args[i + 1]);
            ++i;
        } else {
            flags.positional.push_back(a);
        }
    }
    return flags;
}

int parse_precision(Flags& flags, int fallback) {
    auto opt = flags.take("precision");
    if (!opt)
        return fallback;
    try {
        int p = std::stoi(*opt);
        if (p < 1 || p > 100000)
            throw UsageError("precision out of range");
        return p;
    } catch (const UsageError&) {
        throw;
    } catch (...) {
        throw UsageError("bad precision '" + *opt + "'");
    }
}

void print_result(const OpResult& result, const std::string& op_name, int precision,
                  std::ostream& out) {
    if (!op_name.empty())
        out << op_name << "\n";
    for (const auto& [name, value] : result.scalars) {
        out << "  " << name << " = " << value.expression_string();
        out << " ≈ " << to_decimal(value, precision) << "\n";
    }
    for (const auto& [name, point] : result.points) {
        out << "  " << name << " = (" << point.x.expression_string() << ", "
            << point.y.expression_string() << ")";
        out << " ≈ (" << to_decimal(point.x, precision) << ", "
            << to_decimal(point.y, precision) << ")\n";
    }
    for (const auto& note : result.notes)
        out << "  " << note << "\n";
}

int cmd_construct(Flags flags, int precision, std::ostream& out) {
    if (flags.positional.empty())
        throw UsageError("construct needs an operation name (see 'sulva ops')");
    const OpSpec* op = find_operation(flags.positional[0]);
    if (!op)
        throw UsageError("no operation named '" + flags.positional[0] + "'");
    if (flags.positional.size() > 1)
        throw UsageError("unexpected argument '" + flags.positional[1] + "'");

    auto svg_file = flags.take("svg");
    auto trace_file = flags.take("trace");

    Arguments args;
    for (auto& [key, value] : flags.options) {
        const ParamSpec* param = op->find_param(key);
        if (!param)
            throw UsageError("'" + op->name + "' has no parameter '--" + key + "'");
        try {
            bind_argument(args, *param, value, {});
        } catch (const Error& e) {
            throw UsageError(std::string("bad value for --") + key + ": " + e.what());
        }
    }
    flags.options.clear();

    OpResult result = invoke_operation(*op, std::move(args), precision);
    int display = std::min(precision, 8);
    print_result(result, op->name, display, out);

    if (trace_file) {
        if (result.traces.empty())
            fail(Errc::EmptyTraceSet, "operation produced no trace");
        write_file(*trace_file, trace_to_json(result.traces.front(), display));
        out << "  trace written to " << *trace_file << "\n";
    }
    if (svg_file) {
        if (result.traces.empty())
            fail(Errc::EmptyTraceSet, "operation produced no figure");
        write_file(*svg_file, render_svg(result.traces, {}));
        out << "  figure written to " << *svg_file << "\n";
    }
    return kExitOk;
}

int cmd_run(Flags flags, int precision, std::ostream& out) {
    if (flags.positional.size() != 1)
        throw UsageError("run needs exactly one script file");
    auto out_dir = flags.take("out-dir");
    flags.reject_leftovers();

    Script script = parse_script(read_file(flags.positional[0]));
    RunOutcome outcome = run_script(script, precision);

    int display = std::min(precision, 8);
    for (const auto& [name, result] : outcome.bindings) {
        out << "[" << name << "]\n";
        print_result(result, "", display, out);
    }
    for (const auto& [file, content] : outcome.files) {
        std::filesystem::path path(file);
        if (out_dir) {
            std::filesystem::create_directories(*out_dir);
            path = std::filesystem::path(*out_dir) / path;
        }
        write_file(path.string(), content);
        out << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_report(Flags flags, int precision, std::ostream& out) {
    std::string format_name = flags.take("format").value_or("text");
    auto out_file = flags.take("out");
    flags.reject_leftovers();
    if (!flags.positional.empty())
        throw UsageError("report takes no positional arguments");
    auto format = report_format_from_name(format_name);
    if (!format)
        throw UsageError("unknown report format '" + format_name + "'");

    auto records = builtin_catalog();
    records.push_back(babylonian_sqrt2_record());
    std::string table = emit_error_table(records, precision, *format);
    if (out_file) {
        write_file(*out_file, table);
        out << "wrote " << *out_file << "\n";
    } else {
        out << table;
    }
    return kExitOk;
}

int cmd_units(Flags flags, std::ostream& out) {
    auto table_file = flags.take("table");
    flags.reject_leftovers();
    if (flags.positional.size() != 4 || flags.positional[0] != "convert")
        throw UsageError("usage: sulva units convert <quantity> <from> <to>");

    UnitTable table = table_file ? UnitTable::from_json(read_file(*table_file))
                                 : UnitTable::defaults();
    Scalar magnitude = parse_expression(flags.positional[1]);
    LengthQuantity q{magnitude, std::string(flags.positional[2])};
    // Accept aliases on input; convert() canonicalizes the display name.
    q.unit = table.find(q.unit).name;
    LengthQuantity converted = table.convert(q, flags.positional[3]);

    if (auto exact = converted.magnitude.rational_value())
        out << exact->to_string() << " " << converted.unit << "\n";
    else
        out << converted.magnitude.expression_string() << " " << converted.unit << " ≈ "
            << to_decimal(converted.magnitude, 8) << " " << converted.unit << "\n";
    return kExitOk;
}

int cmd_triples(Flags flags, std::ostream& out) {
    int limit = 100;
    if (auto opt = flags.take("limit")) {
        try {
            limit = std::stoi(*opt);
        } catch (...) {
            throw UsageError("bad limit '" + *opt + "'");
        }
    }
    flags.reject_leftovers();
    if (!flags.positional.empty())
        throw UsageError("triples takes no positional arguments");

    auto catalog = triple_catalog();
    for (const auto& t : generate_triples(limit)) {
        out << "(" << t.a << ", " << t.b << ", " << t.c << ")";
        for (const auto& entry : catalog)
            if (entry.triple.a == t.a && entry.triple.b == t.b && entry.triple.c == t.c)
                out << "  " << text_set_display(entry.attested);
        out << "\n";
    }
    return kExitOk;
}

int cmd_ops(std::ostream& out) {
    for (const auto& op : operation_registry()) {
        out << op.name << " - " << op.summary << "\n";
        for (const auto& p : op.params) {
            out << "    --" << p.name;
            if (!p.required)
                out << " (default " << (p.default_text.empty() ? "none" : p.default_text) << ")";
            out << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            int default_precision) {
    if (args.empty()) {
        err << kUsage;
        return kExitUsage;
    }
    const std::string& command = args[0];
    try {
        if (command == "help" || command == "--help" || command == "-h") {
            out << kUsage;
            return kExitOk;
        }
        Flags flags = split_args(args, 1);
        int precision = parse_precision(flags, default_precision);
        if (command == "construct")
            return cmd_construct(std::move(flags), precision, out);
        if (command == "run")
            return cmd_run(std::move(flags), precision, out);
        if (command == "report")
            return cmd_report(std::move(flags), precision, out);
        if (command == "units")
            return cmd_units(std::move(flags), out);
        if (command == "triples")
            return cmd_triples(std::move(flags), out);
        if (command == "ops")
            return cmd_ops(out);
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return kExitUsage;
    } catch (const ScriptError& e) {
        err << "script error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "construction error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

} // namespace sulva
