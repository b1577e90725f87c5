#include "cli.hpp"

#include "betticone/betti.hpp"
#include "betticone/errors.hpp"
#include "betticone/report_io.hpp"
#include "verify_suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace betticone::cli {

namespace {

bool needs_graph(Command c) { return c == Command::betti || c == Command::hk; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        out += (k ? sep : "") + parts[k];
    }
    return out;
}

std::string cache_file(const RunConfig& c, const std::string& dir) {
    std::string field = c.field.is_rational() ? "q" : std::to_string(c.field.characteristic());
    std::string name = "enumerate_n" + std::to_string(*c.n) + "_h" +
                       (c.h ? std::to_string(*c.h) : std::string("all")) + "_" + field +
                       (c.dedupe ? "_dedupe" : "") + (c.early_stop ? "_early" : "") + ".json";
    return (std::filesystem::path(dir) / name).string();
}

}  // namespace

void validate(const RunConfig& c) {
    if (c.workers < 1) {
        throw std::invalid_argument("--workers must be at least 1");
    }
    const int sources = (c.graph_text ? 1 : 0) + (c.graph6 ? 1 : 0) + (c.file ? 1 : 0);
    if (needs_graph(c.command) && sources != 1) {
        throw std::invalid_argument("give exactly one of --graph, --g6, --file");
    }
    if (!needs_graph(c.command) && sources != 0) {
        throw std::invalid_argument("graph input only applies to betti and hk");
    }
    if (c.h && c.command != Command::cone_dim) {
        throw std::invalid_argument("--height only applies to cone-dim");
    }
    if (c.command == Command::cone_dim) {
        if (!c.n) {
            throw std::invalid_argument("cone-dim needs -n");
        }
        if (*c.n < 1) {
            throw std::invalid_argument("-n must be at least 1");
        }
        if (c.h && *c.h == 0) {
            throw std::invalid_argument(
                "height 0 is not supported: only the edgeless graph has height 0 and its "
                "diagram is zero, so the cone is {0} although h(n-h-1)+1 evaluates to 1");
        }
        if (c.h && (*c.h < 0 || *c.h >= *c.n)) {
            throw std::invalid_argument("--height must lie in 1..n-1");
        }
    } else if (c.n) {
        throw std::invalid_argument("-n only applies to cone-dim");
    }
    if (c.max_j && *c.max_j < 0) {
        throw std::invalid_argument("--max-j must be non-negative");
    }
    if (c.command == Command::verify && (c.max_n < 2 || c.max_n > 7)) {
        throw std::invalid_argument("--max-n must lie in 2..7");
    }
}

std::optional<std::string> effective_cache_dir(const RunConfig& config) {
    if (const char* env = std::getenv("BETTI_CONE_CACHE"); env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return config.cache_dir;
}

Graph load_graph(const RunConfig& c) {
    if (c.graph_text) {
        std::string text = *c.graph_text;
        std::replace(text.begin(), text.end(), ';', '\n');
        return parse_graph(text, GraphFormat::edge_list);
    }
    if (c.graph6) {
        return parse_graph(*c.graph6, GraphFormat::graph6);
    }
    const std::string text = read_file(*c.file);
    const auto first = std::find_if(text.begin(), text.end(),
                                    [](unsigned char ch) { return !std::isspace(ch); });
    const bool edge_list = first != text.end() && std::isdigit(static_cast<unsigned char>(*first));
    if (edge_list) {
        return parse_graph(text, GraphFormat::edge_list);
    }
    std::string line = text.substr(static_cast<std::size_t>(first - text.begin()));
    line = line.substr(0, line.find_first_of("\r\n"));
    return parse_graph(line, GraphFormat::graph6);
}

void cmd_betti(const RunConfig& c, std::ostream& out) {
    const Graph g = load_graph(c);
    HochsterOptions options;
    options.field = c.field;
    options.workers = c.workers;
    const BettiDiagram b = hochster_diagram(g, options);
    switch (c.out) {
        case OutputFormat::table:
            out << "field: " << c.field.label() << "\n";
            out << render_table(b);
            out << "canonical: " << to_canonical_string(b) << "\n";
            break;
        case OutputFormat::csv:
            out << render_csv(b);
            break;
        case OutputFormat::structured_text: {
            nlohmann::json doc = {{"n", g.vertex_count()},
                                  {"graph", serialize_graph(g, GraphFormat::edge_list)},
                                  {"field", c.field.label()},
                                  {"diagram", to_canonical_string(b)}};
            out << doc.dump(2) << "\n";
            break;
        }
    }
}

void cmd_cone_dim(const RunConfig& c, std::ostream& out) {
    ConeOptions options;
    options.field = c.field;
    options.workers = c.workers;
    DiagramCache diagrams;
    options.cache = &diagrams;

    ConeReport report;
    const auto dir = effective_cache_dir(c);
    const bool cacheable = c.method == ConeMethod::enumeration && dir.has_value();
    bool loaded = false;
    if (cacheable) {
        const std::string path = cache_file(c, *dir);
        if (std::filesystem::exists(path)) {
            report = parse_structured_text(read_file(path));
            loaded = true;
        }
    }
    if (!loaded) {
        report = cone_dim(c.method, *c.n, c.h, c.dedupe, c.early_stop, options);
        if (cacheable) {
            std::filesystem::create_directories(*dir);
            std::ofstream(cache_file(c, *dir)) << to_structured_text(report);
        }
    }

    switch (c.out) {
        case OutputFormat::structured_text:
            out << to_structured_text(report);
            return;
        case OutputFormat::csv:
            out << "n,h,method,dimension,upper_bound,certification,field\n"
                << report.n << ',' << (report.h ? std::to_string(*report.h) : "") << ','
                << to_string(report.method) << ',' << report.dimension << ','
                << (report.upper_bound ? std::to_string(*report.upper_bound) : "") << ','
                << to_string(report.certification) << ',' << report.field << "\n";
            if (!report.witnesses.empty()) {
                out << "i,d,witness,diagram\n";
                for (const auto& w : report.witnesses) {
                    out << w.position.i << ',' << w.position.d << ',' << w.label << ",\""
                        << to_canonical_string(w.diagram) << "\"\n";
                }
            }
            return;
        case OutputFormat::table:
            break;
    }
    out << "cone: C_" << report.n;
    if (report.h) {
        out << "^" << *report.h;
    }
    out << "\n";
    out << "dimension: " << report.dimension << "\n";
    out << "method: " << to_string(report.method) << "\n";
    out << "certification: " << to_string(report.certification);
    if (report.upper_bound) {
        out << " (upper bound " << *report.upper_bound << ")";
    }
    out << "\n";
    if (report.method == ConeMethod::enumeration || report.method == ConeMethod::witnesses) {
        out << "field: " << report.field << "\n";
    }
    if (report.stats) {
        const auto& s = *report.stats;
        out << "graphs visited: " << s.graphs_visited << "\n";
        out << "graphs in cone: " << s.graphs_in_cone << "\n";
        if (s.distinct_diagrams) {
            out << "distinct diagrams: " << *s.distinct_diagrams << "\n";
        }
        if (s.stopped_early) {
            out << "stopped early: yes\n";
        }
        out << "elapsed: " << std::fixed << std::setprecision(3) << s.elapsed_seconds << " s\n";
    }
    if (!report.witnesses.empty()) {
        std::size_t width = 0;
        for (const auto& w : report.witnesses) {
            width = std::max(width, w.label.size());
        }
        out << "witnesses:\n";
        for (const auto& w : report.witnesses) {
            out << "  " << std::left << std::setw(8) << to_string(w.position) << std::setw(static_cast<int>(width) + 2)
                << w.label << to_canonical_string(w.diagram) << "\n";
        }
        out << std::right;
    }
}

bool cmd_verify(const RunConfig& c, std::ostream& out) {
    const auto results = run_verify_suite(c.max_n, c.dedupe, c.workers, c.field);
    std::size_t name_width = 0;
    std::size_t scope_width = 0;
    for (const auto& r : results) {
        name_width = std::max(name_width, r.name.size());
        scope_width = std::max(scope_width, r.scope.size());
    }
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(name_width) + 2)
            << r.name << std::setw(static_cast<int>(scope_width) + 2) << r.scope << std::right
            << std::fixed << std::setprecision(2) << r.seconds << " s\n";
        if (!r.passed) {
            out << "      " << r.detail << "\n";
        }
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all;
}

void cmd_hk(const RunConfig& c, std::ostream& out) {
    const Graph g = load_graph(c);
    HochsterOptions options;
    options.field = c.field;
    options.workers = c.workers;
    const BettiDiagram b = hochster_diagram(g, options);
    const int h = height(g);
    const int max_j = c.max_j.value_or(g.vertex_count());
    const auto hk = hk_vector(b, max_j);
    bool vanish = true;
    for (int j = 1; j < h && j <= max_j; ++j) {
        vanish = vanish && hk[j] == 0;
    }
    std::vector<std::string> values;
    for (const auto& v : hk) {
        values.push_back(v.get_str());
    }
    switch (c.out) {
        case OutputFormat::table:
            out << "height: " << h << "\n";
            out << "HK: [" << join(values, ", ") << "]\n";
            if (h <= 1) {
                out << "vanishing: no constraints at height " << h << "\n";
            } else {
                out << "vanishing HK_1..HK_" << h - 1 << ": " << (vanish ? "yes" : "NO") << "\n";
            }
            break;
        case OutputFormat::csv:
            out << "j,HK\n";
            for (std::size_t j = 0; j < values.size(); ++j) {
                out << j << ',' << values[j] << "\n";
            }
            break;
        case OutputFormat::structured_text: {
            nlohmann::json doc = {{"height", h}, {"hk", values}, {"vanishing", vanish},
                                  {"field", c.field.label()}};
            out << doc.dump(2) << "\n";
            break;
        }
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::betti:
                cmd_betti(config, out);
                return kOk;
            case Command::cone_dim:
                cmd_cone_dim(config, out);
                return kOk;
            case Command::verify:
                return cmd_verify(config, out) ? kOk : kVerification;
            case Command::hk:
                cmd_hk(config, out);
                return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti diagrams of edge ideals and dimensions of their Betti cones", "betti-cone"};
    app.require_subcommand(1);

    RunConfig config;
    std::string graph_text;
    std::string graph6;
    std::string file;
    int n = 0;
    int h = -1;
    int max_j = -1;
    std::string method = "formula";
    std::string field = "q";
    std::string out_format = "table";
    std::string cache_dir;
    config.workers = std::max(1U, std::thread::hardware_concurrency());

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_text, "edge_list text, ';' separates lines");
        cmd->add_option("--g6", graph6, "graph6 string");
        cmd->add_option("--file", file, "file in edge_list or graph6 format");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field, "q or a prime")->capture_default_str();
        cmd->add_option("--workers", config.workers, "worker threads")->capture_default_str();
        cmd->add_option("--out", out_format, "table, csv or st")
            ->check(CLI::IsMember({"table", "csv", "st"}))
            ->capture_default_str();
    };

    auto* betti = app.add_subcommand("betti", "Betti diagram of the edge ideal of a graph");
    add_graph(betti);
    add_common(betti);

    auto* hk = app.add_subcommand("hk", "Herzog-Kuhl functionals of a graph's Betti diagram");
    add_graph(hk);
    add_common(hk);
    hk->add_option("--max-j", max_j, "largest j (default n)");

    auto* cone = app.add_subcommand("cone-dim", "dimension of C_n or C_n^h");
    cone->add_option("-n", n, "vertex count")->required();
    cone->add_option("--height", h, "height h");
    cone->add_option("--method", method, "formula, witnesses, enumerate or hk-subspace")
        ->capture_default_str();
    cone->add_flag("--dedupe", config.dedupe, "collapse equal diagrams before the rank");
    cone->add_flag("--early-stop", config.early_stop, "stop once the upper bound is reached");
    cone->add_option("--cache-dir", cache_dir, "directory for cached enumeration reports");
    add_common(cone);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--max-n", config.max_n, "largest n for exhaustive checks")->capture_default_str();
    verify->add_flag("--dedupe", config.dedupe, "dedupe diagrams during enumeration");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*betti) {
            config.command = Command::betti;
        } else if (*hk) {
            config.command = Command::hk;
        } else if (*cone) {
            config.command = Command::cone_dim;
            config.n = n;
            if (h >= 0 || cone->count("--height") > 0) {
                config.h = h;
            }
            config.method = parse_cone_method(method);
            if (!cache_dir.empty()) {
                config.cache_dir = cache_dir;
            }
        } else {
            config.command = Command::verify;
        }
        for (auto* cmd : {betti, hk}) {
            if (cmd->count("--graph") > 0) {
                config.graph_text = graph_text;
            }
            if (cmd->count("--g6") > 0) {
                config.graph6 = graph6;
            }
            if (cmd->count("--file") > 0) {
                config.file = file;
            }
        }
        if (max_j >= 0 || hk->count("--max-j") > 0) {
            config.max_j = max_j;
        }
        config.field = FieldSpec::parse(field);
        config.out = out_format == "csv"  ? OutputFormat::csv
                     : out_format == "st" ? OutputFormat::structured_text
                                          : OutputFormat::table;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return run(config, out, err);
}

}  // namespace betticone::cli
