#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

#include "numerals/numerals.hpp"

namespace numerals::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Common {
    std::string format = "text";
    Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
};

void add_format(CLI::App* cmd, Common& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep = " ") {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

std::string decimal_text(const Rational& r) { return terminating_decimal(r).value_or(r.to_string()); }

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

// ---- convert / interpret ----------------------------------------------------

struct ConvertArgs {
    std::string from, to;
    std::int64_t base = 60;
    std::int64_t max_trailing = 1;
    std::int64_t max_gap_width = 1;
    bool strict = false;
    std::string script;
    std::vector<std::string> numeral;
};

gap::InterpretationBounds bounds_of(std::int64_t width, std::int64_t trailing) {
    return {Integer(width), Integer(trailing)};
}

int run_convert(const ConvertArgs& a, const Common& c, std::ostream& out) {
    NumeralSystem from = parse_system(a.from, a.base);
    NumeralSystem to = parse_system(a.to, a.base);
    ConvertOptions opts;
    opts.gap_bounds = bounds_of(a.max_gap_width, a.max_trailing);
    opts.strict_roman = a.strict;
    if (a.script == "native")
        opts.script = Script::Native;
    else if (a.script == "ascii")
        opts.script = Script::Ascii;

    Integer value = decode(join(a.numeral), from, opts);
    std::string text = encode(value, to, opts);
    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", name(to)}, {"text", text}, {"value", value.to_string()}});
    else
        out << text << '\n';
    return kOk;
}

int run_interpret(const ConvertArgs& a, const Common& c, std::ostream& out) {
    auto numeral = gap::parse(join(a.numeral), a.base);
    auto readings = gap::interpretations(numeral, bounds_of(a.max_gap_width, a.max_trailing));
    std::vector<std::string> shown;
    for (const auto& r : readings)
        shown.push_back(r.to_string());
    if (c.fmt() == Format::Json) {
        emit(out, Json{{"system", name(NumeralSystem::gap_positional(a.base))},
                       {"text", numeral.to_text()},
                       {"interpretations", shown}});
    } else {
        for (const auto& s : shown)
            out << s << '\n';
    }
    return kOk;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string ruleset = "modern";
    bool trace = false;
    std::vector<std::string> expression;
};

int run_eval(const EvalArgs& a, const Common& c, std::ostream& out) {
    RuleSet rules = parse_rule_set(a.ruleset);
    Expression e = parse_expression(join(a.expression));
    Evaluation r = eval_expression(e, rules);
    if (c.fmt() == Format::Json) {
        Json doc{{"system", to_string(rules)}, {"text", e.to_string()}, {"value", display(r.value)}};
        if (a.trace) {
            Json ids = Json::array();
            for (const auto& t : r.trace)
                ids.push_back(t.rule_id);
            doc["trace"] = ids;
        }
        emit(out, doc);
        return kOk;
    }
    out << display(r.value) << '\n';
    if (a.trace)
        for (const auto& t : r.trace)
            out << t.rule_id << '\n';
    return kOk;
}

// ---- demo -------------------------------------------------------------------

struct DemoArgs {
    std::int64_t count = 15;
    std::string mode = "single";
    std::int64_t rooms = 4;
    std::int64_t seconds = 3661;
    std::string ruleset = "bhaskara";
};

int demo_fib(const DemoArgs& a, const Common& c, std::ostream& out) {
    std::vector<std::string> terms;
    for (const auto& t : pedagogy::fibonacci(a.count))
        terms.push_back(t.to_string());
    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", "demo:fib"}, {"rows", terms}});
    else
        out << join(terms) << '\n';
    return kOk;
}

int demo_hilbert(const DemoArgs& a, const Common& c, std::ostream& out) {
    if (a.mode != "single" && a.mode != "infinite")
        throw ParseError("hilbert --mode is 'single' or 'infinite'");
    if (a.rooms < 1)
        throw RangeError("--rooms must be at least 1");
    auto map = a.mode == "single" ? pedagogy::hilbert_single : pedagogy::hilbert_infinite;
    std::vector<std::string> moves;
    Json rows = Json::array();
    for (std::int64_t r = 1; r <= a.rooms; ++r) {
        Integer to = map(r);
        moves.push_back(std::to_string(r) + "→" + to.to_string());
        rows.push_back(Json{{"guest_room", std::to_string(r)}, {"new_room", to.to_string()}});
    }
    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", "demo:hilbert:" + a.mode}, {"rows", rows}});
    else
        out << join(moves) << '\n';
    return kOk;
}

struct TableBlock {
    std::string title;
    std::vector<pedagogy::LimitTableRow> rows;
    Rational limit_numerator;
};

int demo_limits(const DemoArgs& a, const Common& c, std::ostream& out) {
    RuleSet rules = parse_rule_set(a.ruleset);
    const auto denominators = pedagogy::printed_reciprocal_denominators();
    const auto terms = pedagogy::printed_shrinking_terms();
    std::vector<TableBlock> blocks{
        {"1 / d", pedagogy::quotient_rows(denominators, 1), 1},
        {"d / d", pedagogy::self_quotient_rows(terms), 0},
        {"0 / d", pedagogy::quotient_rows(terms, 0), 0},
    };

    auto pad = [](const std::string& s) { return std::string(s.size() < 32 ? 32 - s.size() : 1, ' '); };
    Json tables = Json::array();
    std::ostringstream text;
    text << "rule set: " << to_string(rules) << '\n';
    for (const auto& b : blocks) {
        // The terminal entry is whatever the rule set says about x / 0.
        std::string limit;
        std::string rule;
        try {
            Evaluation e = eval_binary(BinaryOp::Div, Finite{b.limit_numerator}, Finite{Rational{}}, rules);
            limit = display(e.value);
            rule = e.trace.front().rule_id;
        } catch (const EvaluationError& err) {
            limit = "undefined (" + std::string(err.kind()) + ")";
        }

        Json rows = Json::array();
        text << '\n' << b.title << '\n';
        for (const auto& r : b.rows) {
            std::string lhs = decimal_text(r.numerator) + " / " + decimal_text(r.denominator);
            rows.push_back(Json{{"numerator", decimal_text(r.numerator)},
                                {"denominator", decimal_text(r.denominator)},
                                {"value", display(r.output)}});
            text << "  " << lhs << pad(lhs) << "= " << display(r.output) << '\n';
        }
        std::string lhs = decimal_text(b.limit_numerator) + " / 0";
        text << "  " << lhs << pad(lhs) << "= " << limit;
        if (!rule.empty())
            text << "  [" << rule << "]";
        text << '\n';
        Json limit_doc{{"value", limit}};
        if (!rule.empty())
            limit_doc["rule"] = rule;
        tables.push_back(Json{{"title", b.title}, {"rows", rows}, {"limit", limit_doc}});
    }

    Json errata = Json::array();
    text << "\nerrata in the printed 1 / d table\n";
    for (const auto& row : pedagogy::printed_reciprocal_table()) {
        if (!row.erratum())
            continue;
        std::string lhs = decimal_text(row.numerator) + " / " + decimal_text(row.denominator);
        text << "  " << lhs << ": printed " << row.printed.to_string() << ", exact " << row.exact.to_string() << '\n';
        errata.push_back(Json{{"expression", lhs}, {"printed", row.printed.to_string()}, {"exact", row.exact.to_string()}});
    }

    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", "demo:limits"}, {"ruleset", to_string(rules)}, {"rows", tables}, {"errata", errata}});
    else
        out << text.str();
    return kOk;
}

int demo_time(const DemoArgs& a, const Common& c, std::ostream& out) {
    auto t = pedagogy::decompose_time(a.seconds);
    auto two = [](const Integer& n) {
        std::string s = n.to_string();
        return s.size() < 2 ? "0" + s : s;
    };
    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", "demo:time"},
                       {"rows", Json{{"hours", t.hours.to_string()},
                                     {"minutes", t.minutes.to_string()},
                                     {"seconds", t.seconds.to_string()}}}});
    else
        out << t.hours << ':' << two(t.minutes) << ':' << two(t.seconds) << '\n';
    return kOk;
}

int demo_divisors(const Common& c, std::ostream& out) {
    std::vector<std::string> ds;
    for (const auto& d : pedagogy::divisors_of_sixty())
        ds.push_back(d.to_string());
    if (c.fmt() == Format::Json)
        emit(out, Json{{"system", "demo:divisors"}, {"rows", ds}});
    else
        out << join(ds) << '\n';
    return kOk;
}

// ---- table ------------------------------------------------------------------

int run_table(const std::string& which, const Common& c, std::ostream& out) {
    Json rows = Json::array();
    std::vector<std::vector<std::string>> lines;

    if (which == "greek") {
        for (const auto& l : greek::letters()) {
            rows.push_back(Json{{"name", l.name}, {"glyph", l.glyph}, {"value", l.value}});
            lines.push_back({l.name, l.glyph, std::to_string(l.value)});
        }
    } else if (which == "aryabhata") {
        for (const auto& k : aryabhata::consonants()) {
            rows.push_back(Json{{"kind", "consonant"}, {"translit", k.translit}, {"devanagari", k.devanagari},
                                {"value", k.value}});
            lines.push_back({"consonant", k.translit, k.devanagari, std::to_string(k.value)});
        }
        for (const auto& v : aryabhata::vowels()) {
            std::string place = "10^" + std::to_string(v.place_exponent);
            rows.push_back(Json{{"kind", "vowel"}, {"translit", v.translit}, {"devanagari", v.letter}, {"place", place}});
            lines.push_back({"vowel", v.translit, v.letter, place});
        }
    } else if (which == "brahmi") {
        for (int v : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 60, 70, 80, 90}) {
            std::string token = "B" + std::to_string(v);
            rows.push_back(Json{{"token", token}, {"value", v}});
            lines.push_back({token, std::to_string(v)});
        }
    } else if (which == "digits") {
        for (const auto& d : digit_forms()) {
            rows.push_back(Json{{"value", d.value},
                                {"devanagari", d.devanagari},
                                {"arabic", d.arabic_indic},
                                {"western", d.western}});
            lines.push_back({std::string(d.devanagari), std::string(d.arabic_indic), std::string(d.western)});
        }
    } else if (which == "rules") {
        for (const auto& r : catalog::rules()) {
            rows.push_back(Json{{"id", r.id}, {"source", catalog::to_string(r.source)}, {"statement", r.statement}});
            lines.push_back({std::string(r.id), std::string(catalog::to_string(r.source)), std::string(r.statement)});
        }
    } else if (which == "errata") {
        for (const auto& e : catalog::errata()) {
            rows.push_back(Json{{"id", e.id}, {"printed", e.printed}, {"corrected", e.corrected}, {"note", e.note}});
            lines.push_back({std::string(e.id), "printed: " + std::string(e.printed),
                             "implemented: " + std::string(e.corrected)});
        }
    } else {
        throw ParseError("unknown table '" + which + "'");
    }

    if (c.fmt() == Format::Json) {
        emit(out, Json{{"system", "table:" + which}, {"rows", rows}});
        return kOk;
    }
    // Pad columns by byte width; only the ASCII columns line up exactly.
    std::vector<std::size_t> width;
    for (const auto& l : lines)
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], l[i].size());
        }
    for (const auto& l : lines) {
        std::string row;
        for (std::size_t i = 0; i < l.size(); ++i) {
            row += l[i];
            if (i + 1 < l.size())
                row += std::string(width[i] - l[i].size() + 2, ' ');
        }
        out << row << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Historical numeral systems and zero/infinity arithmetic", "numerals"};
    app.require_subcommand(1);
    Common common;

    ConvertArgs conv;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a numeral between systems");
    convert_cmd->add_option("--from", conv.from, "Source system (roman, greek, gap, aryabhata, brahmi, decimal)")->required();
    convert_cmd->add_option("--to", conv.to, "Target system")->required();
    convert_cmd->add_option("--base", conv.base, "Base for gap-positional numerals")->capture_default_str();
    convert_cmd->add_option("--max-trailing", conv.max_trailing, "Gap numerals: missing trailing places considered")
        ->capture_default_str();
    convert_cmd->add_option("--max-gap-width", conv.max_gap_width, "Gap numerals: empty places one gap may stand for")
        ->capture_default_str();
    convert_cmd->add_flag("--strict", conv.strict, "Require canonical Roman input");
    convert_cmd->add_option("--script", conv.script, "Greek/Aryabhata output script")->check(CLI::IsMember({"native", "ascii"}));
    convert_cmd->add_option("numeral", conv.numeral, "Numeral text")->required();
    add_format(convert_cmd, common);

    ConvertArgs interp;
    auto* interpret_cmd = app.add_subcommand("interpret", "List every reading of a gap-positional numeral");
    interpret_cmd->add_option("--base", interp.base, "Positional base")->capture_default_str();
    interpret_cmd->add_option("--max-trailing", interp.max_trailing, "Missing trailing places considered")
        ->capture_default_str();
    interpret_cmd->add_option("--max-gap-width", interp.max_gap_width, "Empty places one gap may stand for")
        ->capture_default_str();
    interpret_cmd->add_option("numeral", interp.numeral, "Digits and '_' gaps, space separated")->required();
    add_format(interpret_cmd, common);

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression under a historical rule set");
    eval_cmd->add_option("--ruleset", ev.ruleset, "brahmagupta, bhaskara or modern")
        ->check(CLI::IsMember({"brahmagupta", "bhaskara", "modern"}))
        ->capture_default_str();
    eval_cmd->add_flag("--trace", ev.trace, "Print fired rule ids");
    eval_cmd->add_option("expression", ev.expression, "Infix expression")->required();
    add_format(eval_cmd, common);

    DemoArgs demo;
    auto* demo_cmd = app.add_subcommand("demo", "Small demonstrations");
    demo_cmd->require_subcommand(1);
    add_format(demo_cmd, common);
    auto* fib_cmd = demo_cmd->add_subcommand("fib", "Fibonacci sequence");
    fib_cmd->add_option("--count", demo.count, "Number of terms")->capture_default_str();
    auto* hilbert_cmd = demo_cmd->add_subcommand("hilbert", "Hilbert hotel room moves");
    hilbert_cmd->add_option("--mode", demo.mode, "single or infinite")->capture_default_str();
    hilbert_cmd->add_option("--rooms", demo.rooms, "Rooms to show")->capture_default_str();
    auto* limits_cmd = demo_cmd->add_subcommand("limits", "Shrinking-denominator tables");
    limits_cmd->add_option("--ruleset", demo.ruleset, "brahmagupta, bhaskara or modern")
        ->check(CLI::IsMember({"brahmagupta", "bhaskara", "modern"}))
        ->capture_default_str();
    auto* time_cmd = demo_cmd->add_subcommand("time", "Split seconds into hours, minutes, seconds");
    time_cmd->add_option("--seconds", demo.seconds, "Total seconds")->capture_default_str();
    auto* divisors_cmd = demo_cmd->add_subcommand("divisors", "Divisors of 60");
    for (auto* sub : {fib_cmd, hilbert_cmd, limits_cmd, time_cmd, divisors_cmd})
        add_format(sub, common);

    std::string table_name;
    auto* table_cmd = app.add_subcommand("table", "Print a value table");
    table_cmd->add_option("name", table_name, "greek, aryabhata, brahmi, digits, rules, errata")
        ->required()
        ->check(CLI::IsMember({"greek", "aryabhata", "brahmi", "digits", "rules", "errata"}));
    add_format(table_cmd, common);

    std::vector<std::string> argv_store{"numerals"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (convert_cmd->parsed())
            return run_convert(conv, common, out);
        if (interpret_cmd->parsed())
            return run_interpret(interp, common, out);
        if (eval_cmd->parsed())
            return run_eval(ev, common, out);
        if (table_cmd->parsed())
            return run_table(table_name, common, out);
        if (fib_cmd->parsed())
            return demo_fib(demo, common, out);
        if (hilbert_cmd->parsed())
            return demo_hilbert(demo, common, out);
        if (limits_cmd->parsed())
            return demo_limits(demo, common, out);
        if (time_cmd->parsed())
            return demo_time(demo, common, out);
        if (divisors_cmd->parsed())
            return demo_divisors(common, out);
    } catch (const AmbiguityError& e) {
        err << e.kind() << ": " << e.what() << " (readings: " << join(e.readings(), ", ") << ")\n";
        return kAmbiguous;
    } catch (const EvaluationError& e) {
        err << e.kind() << ": " << e.what();
        if (e.offset())
            err << " (at offset " << *e.offset() << ")";
        err << '\n';
        return kEvaluation;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace numerals::cli
