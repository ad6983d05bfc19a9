#include "bookx/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bookx/bounds.hpp"
#include "bookx/emax.hpp"
#include "bookx/error.hpp"
#include "bookx/graph_io.hpp"
#include "bookx/optimizer.hpp"
#include "bookx/repro.hpp"
#include "bookx/zk.hpp"

namespace bookx {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

enum class Emit { Text, Json, Csv };

struct Context {
    std::ostream& out;
    std::ostream& err;
    Emit emit = Emit::Text;
    ojson manifest;
};

// Recorded with every artifact. Timing goes to stderr so artifacts stay
// byte-identical across runs.
ojson make_manifest(const CLI::App& sub, std::optional<std::uint64_t> seed) {
    std::map<std::string, std::string> flags;
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        std::string value;
        for (const auto& piece : opt->results()) value += (value.empty() ? "" : ",") + piece;
        flags[opt->get_name()] = value;
    }
    ojson m;
    m["subcommand"] = sub.get_name();
    m["flags"] = flags;
    if (seed) m["seed"] = *seed;
    m["versions"] = {{"bookx", kVersion}, {"boost", BOOST_LIB_VERSION}};
    return m;
}

std::string csv_cell(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Prints a flat result object in the selected format.
void emit(Context& ctx, const ojson& result, const std::string& text) {
    switch (ctx.emit) {
        case Emit::Json: {
            ojson doc = result;
            doc["manifest"] = ctx.manifest;
            ctx.out << doc.dump(2) << '\n';
            break;
        }
        case Emit::Csv: {
            std::string header, row;
            for (const auto& [key, value] : result.items()) {
                header += (header.empty() ? "" : ",") + key;
                row += (row.empty() ? "" : ",") + csv_cell(value);
            }
            ctx.out << header << '\n' << row << '\n';
            break;
        }
        case Emit::Text: ctx.out << text; break;
    }
}

void write_artifact(const Context& ctx, const std::filesystem::path& path, ojson doc) {
    doc["manifest"] = ctx.manifest;
    write_text_file(path, doc.dump(2) + "\n");
}

// Non-JSON artifacts carry their manifest in a sidecar file.
void write_sidecar(const Context& ctx, const std::filesystem::path& path) {
    write_text_file(path.string() + ".manifest.json", ctx.manifest.dump(2) + "\n");
}

std::string method_name(EmaxMethod m) { return std::string(to_string(m)); }

ojson record_json(const EdgeMaxRecord& r) {
    ojson j;
    j["ell"] = r.ell;
    j["n"] = r.n;
    j["value"] = to_string(r.value);
    j["method"] = method_name(r.method);
    j["status"] = r.status == ResultStatus::Exact ? "exact" : "inexact";
    j["nodes"] = r.nodes;
    if (r.certificate) j["certificate"] = graph_to_json(*r.certificate);
    return j;
}

std::string record_text(const EdgeMaxRecord& r, const std::string& symbol) {
    std::ostringstream s;
    s << symbol << "(" << r.n << ") = " << to_string(r.value) << " [" << to_string(r.method) << ", "
      << (r.status == ResultStatus::Exact ? "exact" : "inexact") << "]\n";
    if (r.certificate) s << graph_to_text(*r.certificate);
    return s.str();
}

std::string drawing_text(const BookDrawing& d) {
    std::ostringstream s;
    s << "n " << d.n() << " k " << d.k() << '\n';
    const auto pages = d.pages();
    for (std::size_t p = 0; p < pages.size(); ++p) {
        s << "page " << p << ':';
        for (Edge e : pages[p]) s << ' ' << e.u << '-' << e.v;
        s << '\n';
    }
    return s.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("expected a comma separated integer list, got '" + text + "'");
        }
    }
    return values;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("range must read LO:HI");
    const auto parts = parse_int_list(text.substr(0, colon) + "," + text.substr(colon + 1));
    if (parts.size() != 2 || parts[0] >= parts[1]) throw InputError("range must read LO:HI with LO < HI");
    return {parts[0], parts[1]};
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Book crossing numbers of complete graphs and the local crossing extremal problem", "bookx"};
    app.require_subcommand(1);
    std::string emit_name = "text";
    app.add_option("--emit", emit_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.fallthrough();

    int n = 0, k = 0, ell = 0, which = 0, restarts = 8, criterion = 0;
    std::uint64_t seed = 1, budget = 0;
    std::string order, file, method = "exact", certificate, out_path, scan, from, alert_dir = ".";
    bool all = false;

    auto* zk = app.add_subcommand("zk", "Z_k(n), the conjectured k-page crossing number");
    zk->add_option("--n", n)->required();
    zk->add_option("--k", k)->required();

    auto* construct = app.add_subcommand("construct", "Block construction drawing of K_n in k pages");
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--order", order, "Block sizes per page, e.g. 4,3,4,3");
    construct->add_option("--out", out_path, "Write the drawing JSON here");

    auto* verify = app.add_subcommand("verify", "Count crossings of a drawing and compare to Z_k(n)");
    verify->add_option("--file", file)->required()->check(CLI::ExistingFile);

    auto* emax = app.add_subcommand("emax", "e_l(n): maximum edges with local crossing number <= l");
    emax->add_option("--ell", ell)->required();
    emax->add_option("--n", n)->required();
    emax->add_option("--method", method)->check(CLI::IsMember({"exact", "closed", "compose", "upper"}));
    emax->add_option("--certificate", certificate, "Write the witnessing graph JSON here");
    emax->add_option("--budget", budget, "Node limit per root subproblem (0 = none)");

    auto* estar = app.add_subcommand("estar", "e*(n): maximum edges with an acyclic crossing graph");
    estar->add_option("--n", n)->required();
    estar->add_option("--certificate", certificate);
    estar->add_option("--budget", budget);

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on nu_k(K_n)");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--n", n)->required();

    auto* coeff = app.add_subcommand("coeff", "Best asymptotic coefficient of nu_k(K_n)/C(n,4)");
    coeff->add_option("--k", k)->required();
    coeff->add_option("--scan", scan, "n' interval LO:HI, scanned as (LO, HI]");

    auto* tables = app.add_subcommand("tables", "Emit table 1, 2 or 3 as CSV");
    tables->add_option("--which", which)->required()->check(CLI::IsMember({1, 2, 3}));
    tables->add_option("--out", out_path);

    auto* optimize = app.add_subcommand("optimize", "Simulated annealing for k-page drawings");
    optimize->add_option("--n", n);
    optimize->add_option("--k", k);
    optimize->add_option("--restarts", restarts)->capture_default_str();
    optimize->add_option("--seed", seed)->capture_default_str();
    optimize->add_option("--from", from, "Start from this drawing instead of random restarts")
        ->check(CLI::ExistingFile);
    optimize->add_option("--budget", budget, "Iterations per restart");
    optimize->add_option("--out", out_path);
    optimize->add_option("--alert-dir", alert_dir, "Where drawings beating Z_k(n) are saved")->capture_default_str();

    auto* repro = app.add_subcommand("repro", "Run the acceptance criteria");
    auto* all_flag = repro->add_flag("--all", all);
    repro->add_option("--criterion", criterion)->check(CLI::Range(1, kCriterionCount))->excludes(all_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInvalid;
    }

    Context ctx{out, err, Emit::Text, {}};
    ctx.emit = emit_name == "json" ? Emit::Json : emit_name == "csv" ? Emit::Csv : Emit::Text;
    const CLI::App* sub = app.get_subcommands().front();
    ctx.manifest = make_manifest(*sub, sub == optimize ? std::optional(seed) : std::nullopt);
    const auto t0 = std::chrono::steady_clock::now();

    int status = kExitOk;
    try {
        if (sub == zk) {
            const std::int64_t v = zk_value(n, k);
            emit(ctx, {{"n", n}, {"k", k}, {"zk", v}}, std::to_string(v) + "\n");
        } else if (sub == construct) {
            const BookDrawing d =
                order.empty() ? dps_construction(n, k) : block_permutation_variant(n, k, parse_int_list(order));
            if (!out_path.empty()) write_artifact(ctx, out_path, drawing_to_json(d));
            ojson j = drawing_to_json(d);
            j["crossings"] = count_monochromatic_crossings(d);
            emit(ctx, j, drawing_text(d));
        } else if (sub == verify) {
            const BookDrawing d = read_drawing_file(file);
            const std::int64_t crossings = count_monochromatic_crossings(d);
            const std::int64_t z = zk_value(d.n(), d.k());
            const char* relation = crossings == z ? "equal" : crossings < z ? "below" : "above";
            std::ostringstream s;
            s << "crossings " << crossings << "\nzk " << z << '\n' << relation << '\n';
            emit(ctx, {{"n", d.n()}, {"k", d.k()}, {"crossings", crossings}, {"zk", z}, {"relation", relation}},
                 s.str());
        } else if (sub == emax) {
            SearchBudget b;
            b.max_nodes = budget;
            EdgeMaxRecord r;
            if (method == "exact") {
                r = emax_exact(ell, n, b);
            } else if (method == "closed") {
                r.ell = ell;
                r.n = n;
                r.method = EmaxMethod::ClosedForm;
                r.value = emax_closed_form(ell, n);
            } else if (method == "compose") {
                r = emax_composition_bound(ell, n);
                r.status = ResultStatus::Inexact;
            } else {
                r.ell = ell;
                r.n = n;
                r.method = EmaxMethod::AnalyticUpper;
                r.value = analytic_upper(ell, n);
                r.status = ResultStatus::Inexact;
            }
            if (!certificate.empty()) {
                if (!r.certificate) throw InputError("method '" + method + "' produces no certificate");
                write_artifact(ctx, certificate, graph_to_json(*r.certificate));
            }
            emit(ctx, record_json(r), record_text(r, "e_" + std::to_string(ell)));
            if (r.status == ResultStatus::Inexact) status = kExitInexact;
        } else if (sub == estar) {
            SearchBudget b;
            b.max_nodes = budget;
            const EdgeMaxRecord r = estar_acyclic(n, b);
            if (!certificate.empty()) write_artifact(ctx, certificate, graph_to_json(*r.certificate));
            emit(ctx, record_json(r), record_text(r, "e*"));
            if (r.status == ResultStatus::Inexact) status = kExitInexact;
        } else if (sub == bounds) {
            const BoundReport rep = bound_report(k, n);
            ojson j{{"k", k}, {"n", n}};
            std::ostringstream s;
            for (int m = 0; m <= 5; ++m) {
                j["L" + std::to_string(m)] = to_string(rep.l_values[m]);
                s << "L(" << m << ") = " << to_string(rep.l_values[m]) << '\n';
            }
            j["best_m"] = rep.chosen.m;
            j["cap_active"] = rep.chosen.cap_active;
            j["best_rational"] = to_string(rep.best_rational);
            j["best_bound"] = rep.best_bound.str();
            j["piecewise_vacuous"] = rep.piecewise.vacuous;
            j["piecewise_branch"] = rep.piecewise.branch;
            j["piecewise_value"] = to_string(rep.piecewise.value);
            j["zk"] = zk_value(n, k);
            s << "best m = " << rep.chosen.m << (rep.chosen.cap_active ? " (capped)" : "") << '\n'
              << "nu_k(K_n) >= " << rep.best_bound.str() << '\n';
            if (!rep.piecewise.vacuous)
                s << "piecewise bound = " << to_string(rep.piecewise.value) << " (branch " << rep.piecewise.branch
                  << ")\n";
            s << "Z_k(n) = " << zk_value(n, k) << '\n';
            emit(ctx, j, s.str());
        } else if (sub == coeff) {
            int lo = -1, hi = -1;
            if (!scan.empty()) std::tie(lo, hi) = parse_range(scan);
            const AsymptoticBest b = best_asymptotic_coefficient(k, lo, hi);
            const Rational upper = zk_asymptotic_coefficient(k);
            std::ostringstream s;
            s << to_string(b.coefficient) << " (n' = " << b.nprime << ", m = " << b.m << ")\n";
            emit(ctx,
                 {{"k", k},
                  {"coefficient", to_string(b.coefficient)},
                  {"nprime", b.nprime},
                  {"m", b.m},
                  {"upper", to_string(upper)},
                  {"ratio", to_fixed(b.coefficient / upper, 4, Rounding::HalfEven)}},
                 s.str());
        } else if (sub == tables) {
            const std::string csv = emit_table(which);
            if (out_path.empty()) {
                out << csv;
            } else {
                write_text_file(out_path, csv);
                write_sidecar(ctx, out_path);
            }
        } else if (sub == optimize) {
            AnnealSchedule schedule;
            if (budget != 0) schedule.iterations = budget;
            const AnnealResult res = [&] {
                if (from.empty()) {
                    if (n == 0 || k == 0) throw InputError("--n and --k are required without --from");
                    return anneal(n, k, restarts, seed, schedule);
                }
                const BookDrawing best = improve_from(read_drawing_file(from), seed, schedule);
                AnnealResult r{best, count_monochromatic_crossings(best), 0, zk_value(best.n(), best.k()), false, 0};
                const PiecewiseBound b = theorem24_bound(best.k(), best.n());
                if (!b.vacuous) r.lower_bound = std::max<std::int64_t>(0, ceil(b.value).convert_to<std::int64_t>());
                r.conjecture_alert = r.count < r.zk;
                return r;
            }();
            ojson j;
            j["count"] = res.count;
            j["zk"] = res.zk;
            j["lower_bound"] = res.lower_bound;
            j["conjecture_alert"] = res.conjecture_alert;
            j["drawing"] = drawing_to_json(res.best);
            if (!out_path.empty()) write_artifact(ctx, out_path, j);
            if (res.conjecture_alert) {
                const std::filesystem::path alert = std::filesystem::path(alert_dir) /
                                                    ("conjecture_alert_n" + std::to_string(res.best.n()) + "_k" +
                                                     std::to_string(res.best.k()) + "_seed" + std::to_string(seed) +
                                                     ".json");
                write_artifact(ctx, alert, j);
                err << "conjecture alert: " << res.count << " < Z_k(n) = " << res.zk << ", saved to "
                    << alert.string() << '\n';
            }
            std::ostringstream s;
            s << "count " << res.count << "\nzk " << res.zk << "\nlower_bound " << res.lower_bound << '\n'
              << drawing_to_json(res.best).dump() << '\n';
            if (ctx.emit == Emit::Csv) j.erase("drawing");
            emit(ctx, j, s.str());
        } else if (sub == repro) {
            if (!all && criterion == 0) throw InputError("repro needs --all or --criterion N");
            bool ok = true;
            for (int id = all ? 1 : criterion; id <= (all ? kCriterionCount : criterion); ++id) {
                const CriterionResult r = run_criterion(id);
                out << format_result(r) << std::endl;
                ok = ok && r.passed;
            }
            if (!ok) status = kExitInvalid;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Unsupported& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitInvalid;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << "elapsed " << std::fixed << std::setprecision(3) << seconds << "s\n";
    return status;
}

}  // namespace bookx
