#include "ist/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "ist/bloch.hpp"
#include "ist/ensembles.hpp"
#include "ist/error.hpp"
#include "ist/experiments.hpp"
#include "ist/kernels.hpp"
#include "ist/niven.hpp"
#include "ist/padic.hpp"

namespace ist::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(item);
    if (text.back() == ',') throw ParseError("trailing comma in list '" + text + "'");
    return out;
}

std::int64_t parse_int(const std::string& text) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw ParseError("expected an integer, got '" + text + "'");
    return r.num();
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(text)) out.push_back(parse_int(item));
    return out;
}

std::vector<std::uint32_t> parse_digits(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (auto v : parse_int_list(text)) {
        if (v < 0) throw ParseError("digits must be non-negative");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

/// --cos / --angle pair shared by niven, mz and sg.
struct AngleOptions {
    std::string cosine;
    std::string angle;

    void attach(CLI::App* cmd) {
        auto* c = cmd->add_option("--cos", cosine, "Rational cosine of the angle, e.g. 3/5");
        auto* a = cmd->add_option("--angle", angle, "Rational angle in turns, e.g. 1/6");
        c->excludes(a);
        a->excludes(c);
    }

    [[nodiscard]] AngleValue value() const {
        if (!cosine.empty()) return AngleValue::cosine(Rational::parse(cosine));
        if (!angle.empty()) return AngleValue::angle(Rational::parse(angle));
        throw ParseError("one of --cos or --angle is required");
    }

    void record(json& params) const {
        if (!cosine.empty()) params["cos"] = Rational::parse(cosine);
        if (!angle.empty()) params["angle"] = Rational::parse(angle);
    }
};

void add_verdicts(CommandOutput& out, const ExperimentReport& report) {
    out.verdicts = json{{"real", verdict_name(report.real_verdict)},
                        {"counterfactual", verdict_name(report.counterfactual_verdict)}};
    out.summary.emplace_back("real", verdict_name(report.real_verdict));
    out.summary.emplace_back("counterfactual", verdict_name(report.counterfactual_verdict));
    out.result = report;
    out.notes = report.details;
}

struct Options {
    std::string format = "text";
    std::string out_path;

    AngleOptions niven_angle;
    AngleOptions mz_angle;
    int mz_performed = 1;
    AngleOptions sg_angle;
    std::string sg_order = "23";

    std::string chsh_cosines;
    std::string chsh_sizes;
    int chsh_x = 0;
    int chsh_y = 0;

    std::optional<std::int64_t> ens_p;
    std::int64_t ens_n = 0;
    std::int64_t ens_m = 0;
    std::optional<std::int64_t> ens_position;
    std::string ens_outcome = "a";

    std::optional<std::int64_t> padic_p;
    std::string padic_digits;
    std::string padic_other;
    std::optional<std::int64_t> padic_flip;
    bool padic_stay = false;
    std::optional<std::int64_t> padic_value;

    double snap_theta = 0.0;
    double snap_phi = 0.0;
    std::int64_t snap_n = 0;
    bool snap_counterexample = false;

    std::string sweep_kind;
    std::optional<std::string> sweep_values;
    bool sweep_serial = false;
};

CommandOutput cmd_niven(const Options& o) {
    CommandOutput out("niven");
    o.niven_angle.record(out.params);
    const AngleValue v = o.niven_angle.value();
    if (v.is_angle()) {
        const NivenClass cls = classify_rational_angle(v.as_angle());
        out.result = json{{"angle", v.as_angle().turns()}, {"class", cls.str()}};
        out.result["cosine"] = cls.is_rational() ? json(cls.value()) : json(nullptr);
        out.summary = {{"angle", v.as_angle().turns().fraction_str()}, {"class", cls.str()}};
    } else {
        const auto angle = rational_angle_from_cosine(v.as_cosine());
        out.result = json{{"cosine", v.as_cosine()}};
        out.result["angle"] = angle ? json(angle->turns()) : json(nullptr);
        out.result["rational_angle"] = angle.has_value();
        out.summary = {{"cosine", v.as_cosine().fraction_str()},
                       {"angle", angle ? angle->turns().fraction_str() : "irrational"}};
    }
    return out;
}

CommandOutput cmd_mz(const Options& o) {
    CommandOutput out("mz");
    o.mz_angle.record(out.params);
    out.params["performed"] = o.mz_performed;
    const auto report = mach_zehnder_analysis({o.mz_angle.value(), o.mz_performed});
    out.summary.emplace_back("phi", o.mz_angle.value().str());
    out.summary.emplace_back("performed", "X=" + std::to_string(o.mz_performed));
    add_verdicts(out, report);
    return out;
}

CommandOutput cmd_sg(const Options& o) {
    CommandOutput out("sg");
    o.sg_angle.record(out.params);
    out.params["order"] = o.sg_order;
    const SgOrder order = o.sg_order == "23" ? SgOrder::TwoThree : SgOrder::ThreeTwo;
    const auto report = sequential_sg_analysis({o.sg_angle.value(), order});
    out.summary.emplace_back("angle23", o.sg_angle.value().str());
    out.summary.emplace_back("order", o.sg_order);
    add_verdicts(out, report);
    return out;
}

CommandOutput cmd_chsh(const Options& o) {
    CommandOutput out("chsh");
    const auto cos_items = split_list(o.chsh_cosines);
    const auto sizes = parse_int_list(o.chsh_sizes);
    if (cos_items.size() != 4 || sizes.size() != 4)
        throw ParseError("--cosines and --sizes need four values each, ordered (a,b),(a,b'),(a',b),(a',b')");
    CHSHConfig cfg;
    cfg.performed = {o.chsh_x, o.chsh_y};
    json cos_json = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational c = Rational::parse(cos_items[i]);
        cos_json.push_back(c);
        cfg.relative_cosines[kChshPairs[i]] = c;
        cfg.ensemble_sizes[kChshPairs[i]] = sizes[i];
    }
    out.params = json{{"cosines", cos_json}, {"sizes", sizes}, {"x", o.chsh_x}, {"y", o.chsh_y}};
    const auto report = chsh_analysis(cfg);
    const auto& summary = *report.chsh;
    for (const auto& [pair, e] : summary.correlations) out.summary.emplace_back("E" + pair.str(), e.fraction_str());
    out.summary.emplace_back("S", summary.s_value->fraction_str());
    out.summary.emplace_back("S_decimal", decimal12(summary.s_value->to_double()));
    out.summary.emplace_back("disjoint", bool_str(summary.disjoint));
    add_verdicts(out, report);
    return out;
}

CommandOutput cmd_ensemble(const Options& o) {
    CommandOutput out("ensemble");
    const std::int64_t p = o.ens_p.value_or(default_p());
    out.params = json{{"p", p}, {"n", o.ens_n}, {"m", o.ens_m}};
    const DiscreteState state(p, o.ens_n, o.ens_m);
    const BitString bs = ensemble_for_state(state);
    out.result = json{{"state", json{{"p", p}, {"n", o.ens_n}, {"m", o.ens_m}}},
                      {"ensemble", bs.symbols()},
                      {"frequency_a", outcome_frequency(bs, BitString::kA)},
                      {"frequency_b", outcome_frequency(bs, BitString::kB)},
                      {"born_0", born_probability(state, 0)},
                      {"born_1", born_probability(state, 1)}};
    out.summary = {{"ensemble", bs.symbols()},
                   {"frequency_a", outcome_frequency(bs, BitString::kA).fraction_str()},
                   {"frequency_b", outcome_frequency(bs, BitString::kB).fraction_str()},
                   {"born_0", born_probability(state, 0).fraction_str()},
                   {"born_1", born_probability(state, 1).fraction_str()}};
    if (o.ens_position) {
        if (*o.ens_position < 0) throw PreconditionError("--position must be non-negative");
        if (o.ens_outcome.size() != 1) throw ParseError("--outcome must be a or b");
        const OnticLabel label{static_cast<std::size_t>(*o.ens_position), o.ens_outcome[0]};
        out.params["position"] = *o.ens_position;
        out.params["outcome"] = o.ens_outcome;
        const auto overlap = epistemic_overlap(label, canonical_family(static_cast<std::size_t>(p)));
        json ns = json::array();
        for (const auto& member : overlap) ns.push_back(member.count(BitString::kA));
        out.result["overlap"] = json{{"position", label.position}, {"outcome", o.ens_outcome}, {"size", overlap.size()}, {"n", ns}};
        out.summary.emplace_back("overlap_size", std::to_string(overlap.size()));
    }
    return out;
}

CommandOutput cmd_padic(const Options& o) {
    CommandOutput out("padic");
    const std::int64_t p = o.padic_p.value_or(default_p());
    out.params["p"] = p;
    if (o.padic_value) {
        out.params["value"] = *o.padic_value;
        const auto v = padic_valuation(*o.padic_value, p);
        out.result["valuation"] = v ? json(*v) : json("infinite");
        out.summary.emplace_back("valuation", v ? std::to_string(*v) : "infinite");
    }
    if (o.padic_digits.empty()) {
        if (!o.padic_value) throw ParseError("padic needs --digits or --value");
        return out;
    }
    if (p > static_cast<std::int64_t>(UINT32_MAX)) throw PreconditionError("label base too large");
    const TrajectoryLabel label(static_cast<std::uint32_t>(p), parse_digits(o.padic_digits));
    out.params["digits"] = std::vector<std::uint32_t>(label.digits().begin(), label.digits().end());
    out.result["label"] = label;
    out.result["onset"] = onset_membership(label);
    out.summary.emplace_back("label", label.str());
    out.summary.emplace_back("onset", bool_str(onset_membership(label)));
    if (!o.padic_other.empty()) {
        const TrajectoryLabel other(static_cast<std::uint32_t>(p), parse_digits(o.padic_other));
        out.params["other"] = std::vector<std::uint32_t>(other.digits().begin(), other.digits().end());
        const auto d = trajectory_distance(label, other);
        out.result["other"] = other;
        out.result["distance"] = d;
        out.summary.emplace_back("other", other.str());
        out.summary.emplace_back("distance", std::to_string(d));
    }
    if (o.padic_flip) {
        if (*o.padic_flip < 0) throw PreconditionError("--flip index must be non-negative");
        out.params["flip"] = *o.padic_flip;
        out.params["leave_set"] = !o.padic_stay;
        const auto demo = randomiser_digit_demo(label, static_cast<std::size_t>(*o.padic_flip), !o.padic_stay);
        out.result["randomiser"] = demo;
        out.summary.emplace_back("flipped", demo.flipped.str());
        out.summary.emplace_back("onset_after", bool_str(demo.onset_after));
        out.summary.emplace_back("flip_distance", std::to_string(demo.distance));
    }
    return out;
}

json direction_json(const ContinuousDirection& d) {
    return json{{"theta", decimal12(d.theta)}, {"phi", decimal12(d.phi)}};
}

CommandOutput cmd_snap(const Options& o) {
    CommandOutput out("snap");
    out.params["N"] = o.snap_n;
    if (o.snap_counterexample) {
        const auto [a, b] = snap_delta_counterexample(o.snap_n);
        const double da = snap_delta(a, o.snap_n);
        const double db = snap_delta(b, o.snap_n);
        out.params["counterexample"] = true;
        out.result = json{{"first", direction_json(a)},  {"first_delta", decimal12(da)},
                          {"second", direction_json(b)}, {"second_delta", decimal12(db)},
                          {"delta_gap", decimal12(std::abs(da - db))}};
        out.summary = {{"first_theta", decimal12(a.theta)}, {"first_phi", decimal12(a.phi)},
                       {"first_delta", decimal12(da)},      {"second_theta", decimal12(b.theta)},
                       {"second_phi", decimal12(b.phi)},    {"second_delta", decimal12(db)}};
        return out;
    }
    const ContinuousDirection d(o.snap_theta, o.snap_phi);
    out.params["theta"] = decimal12(o.snap_theta);
    out.params["phi"] = decimal12(o.snap_phi);
    const GridDirection g = snap_to_grid(d, o.snap_n);
    const double delta = snap_delta(d, o.snap_n);
    out.result = json{{"j", g.j()}, {"k", g.k()}, {"cos_theta", g.cos_theta()}, {"longitude", g.longitude().turns()},
                      {"delta", decimal12(delta)}};
    out.summary = {{"j", std::to_string(g.j())},
                   {"k", std::to_string(g.k())},
                   {"cos_theta", g.cos_theta().fraction_str()},
                   {"longitude", g.longitude().turns().fraction_str()},
                   {"delta", decimal12(delta)}};
    return out;
}

CommandOutput cmd_sweep(const Options& o) {
    CommandOutput out("sweep");
    static const std::map<std::string, std::string> defaults{
        {"mz", "101,1009,10007"}, {"chsh", "100,1000,10000"}, {"niven", "360"}};
    const std::string values_text = o.sweep_values.value_or(defaults.at(o.sweep_kind));
    const auto values = parse_int_list(values_text);
    out.params = json{{"kind", o.sweep_kind}, {"values", values}, {"serial", o.sweep_serial}};
    Table table;
    if (o.sweep_kind == "mz") {
        table.header = {"p", "admissible", "total", "fraction", "bound", "within_bound"};
        const auto rows = o.sweep_serial ? kernels::serial::mz_exclusion_sweep(values)
                                         : kernels::parallel::mz_exclusion_sweep(values);
        for (const auto& r : rows) {
            const Rational fraction(r.admissible, r.total);
            const Rational bound(5, r.total);
            table.rows.push_back({std::to_string(r.p), std::to_string(r.admissible), std::to_string(r.total),
                                  fraction.fraction_str(), bound.fraction_str(), bool_str(fraction <= bound)});
        }
    } else if (o.sweep_kind == "chsh") {
        table.header = {"p", "cosine", "S", "S_decimal", "abs_error", "bound", "within_bound"};
        const auto rows = o.sweep_serial ? kernels::serial::tsirelson_sweep(values)
                                         : kernels::parallel::tsirelson_sweep(values);
        for (const auto& r : rows) {
            const double bound = 4.0 / static_cast<double>(r.p);
            table.rows.push_back({std::to_string(r.p), r.cosine.fraction_str(), r.s_value.fraction_str(),
                                  decimal12(r.s_value.to_double()), decimal12(r.abs_error), decimal12(bound),
                                  bool_str(r.abs_error <= bound)});
        }
    } else {
        table.header = {"max_den", "angles", "rational_cos"};
        for (auto q : values) {
            if (q < 1) throw PreconditionError("niven sweep needs positive denominators");
            const auto t = o.sweep_serial ? kernels::serial::niven_tally(q) : kernels::parallel::niven_tally(q);
            table.rows.push_back({std::to_string(q), std::to_string(t.angles), std::to_string(t.rational)});
        }
    }
    out.result = json{{"columns", table.header}, {"rows", table.rows}};
    out.table = std::move(table);
    return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_escape(fields[i]);
    return line + "\n";
}

}  // namespace

std::int64_t default_p() {
    const char* env = std::getenv("IST_DEFAULT_P");
    if (env == nullptr || *env == '\0') return 1009;
    const std::int64_t p = parse_int(env);
    if (p < 2) throw ParseError("IST_DEFAULT_P must be >= 2");
    return p;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render(const CommandOutput& output, Format format) {
    if (format == Format::Json) {
        const json doc{{"command", output.command},
                       {"params", output.params},
                       {"result", output.result},
                       {"verdicts", output.verdicts}};
        return doc.dump(2) + "\n";
    }
    if (output.table) {
        std::string text = join_csv(output.table->header);
        for (const auto& row : output.table->rows) text += join_csv(row);
        return text;
    }
    if (format == Format::Csv) {
        std::vector<std::string> keys{"command"};
        std::vector<std::string> values{output.command};
        for (const auto& [k, v] : output.summary) {
            keys.push_back(k);
            values.push_back(v);
        }
        return join_csv(keys) + join_csv(values);
    }
    std::string text = "command: " + output.command + "\n";
    for (const auto& [k, v] : output.summary) text += k + ": " + v + "\n";
    for (const auto& note : output.notes) text += "  " + note + "\n";
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact invariant-set analyses on the discretised Bloch sphere", "ist"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", o.out_path, "Write the report to PATH instead of stdout");
    app.fallthrough();

    auto* niven = app.add_subcommand("niven", "Classify a rational angle or rational cosine");
    o.niven_angle.attach(niven);

    auto* mz = app.add_subcommand("mz", "Mach-Zehnder real vs counterfactual analysis");
    o.mz_angle.attach(mz);
    mz->add_option("--performed", o.mz_performed, "Performed setting X (1 interferometric, 0 which-way)")
        ->check(CLI::IsMember({0, 1}));

    auto* sg = app.add_subcommand("sg", "Sequential Stern-Gerlach swap analysis");
    o.sg_angle.attach(sg);
    sg->add_option("--order", o.sg_order, "Performed order")->check(CLI::IsMember({"23", "32"}));

    auto* chsh = app.add_subcommand("chsh", "CHSH correlations, S value and lambda-set disjointness");
    chsh->add_option("--cosines", o.chsh_cosines, "Four relative cosines: (a,b),(a,b'),(a',b),(a',b')")->required();
    chsh->add_option("--sizes", o.chsh_sizes, "Four ensemble sizes")->required();
    chsh->add_option("--x", o.chsh_x, "Alice's performed setting")->check(CLI::IsMember({0, 1}));
    chsh->add_option("--y", o.chsh_y, "Bob's performed setting")->check(CLI::IsMember({0, 1}));

    auto* ensemble = app.add_subcommand("ensemble", "Bit-string ensemble of a discrete state");
    ensemble->add_option("--p", o.ens_p, "Discretisation parameter (default $IST_DEFAULT_P or 1009)")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 24));
    ensemble->add_option("--n", o.ens_n, "Squared amplitude numerator")->required();
    ensemble->add_option("--m", o.ens_m, "Phase numerator");
    ensemble->add_option("--position", o.ens_position, "Ontic label position for the overlap check");
    ensemble->add_option("--outcome", o.ens_outcome, "Ontic label outcome (a or b)")->check(CLI::IsMember({"a", "b"}));

    auto* padic = app.add_subcommand("padic", "p-adic valuation, trajectory distance, randomiser demo");
    padic->add_option("--p", o.padic_p, "Base (default $IST_DEFAULT_P or 1009)")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{UINT32_MAX}));
    padic->add_option("--digits", o.padic_digits, "Trajectory label digits, most significant first");
    padic->add_option("--other", o.padic_other, "Second label for trajectory_distance");
    padic->add_option("--flip", o.padic_flip, "Randomiser demo: digit index to change");
    padic->add_flag("--stay", o.padic_stay, "Randomiser demo: do not model leaving the invariant set");
    padic->add_option("--value", o.padic_value, "Integer whose p-adic valuation to report");

    auto* snap = app.add_subcommand("snap", "Snap a direction to the N x N Bloch grid");
    snap->add_option("--N", o.snap_n, "Grid resolution")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
    auto* theta = snap->add_option("--theta", o.snap_theta, "Colatitude in radians");
    snap->add_option("--phi", o.snap_phi, "Longitude in radians");
    auto* ce = snap->add_flag("--counterexample", o.snap_counterexample, "Emit two directions with unequal snap deltas");
    ce->excludes(theta);

    auto* sweep = app.add_subcommand("sweep", "Property curves as CSV");
    sweep->add_option("kind", o.sweep_kind, "mz | chsh | niven")->required()->check(CLI::IsMember({"mz", "chsh", "niven"}));
    sweep->add_option("--values", o.sweep_values, "Comma-separated parameter values (empty for none)");
    sweep->add_flag("--serial", o.sweep_serial, "Use the serial reference kernels");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArgs;
    }

    static const std::map<std::string, std::function<CommandOutput(const Options&)>> handlers{
        {"niven", cmd_niven}, {"mz", cmd_mz},       {"sg", cmd_sg},     {"chsh", cmd_chsh},
        {"ensemble", cmd_ensemble}, {"padic", cmd_padic}, {"snap", cmd_snap}, {"sweep", cmd_sweep}};

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const Format format = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Text;
        const std::string rendered = render(handlers.at(name)(o), format);
        if (o.out_path.empty()) {
            out << rendered;
        } else {
            std::ofstream file(o.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open output file '" << o.out_path << "'\n";
                return kExitInvalidArgs;
            }
            file << rendered;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidArgs;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace ist::cli
