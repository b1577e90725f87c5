#include "betticone/report_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace betticone {

using nlohmann::json;

std::string to_structured_text(const ConeReport& report, bool include_timing) {
    json doc;
    doc["n"] = report.n;
    doc["h"] = report.h ? json(*report.h) : json(nullptr);
    doc["method"] = to_string(report.method);
    doc["dimension"] = report.dimension;
    doc["upper_bound"] = report.upper_bound ? json(*report.upper_bound) : json(nullptr);
    doc["certification"] = to_string(report.certification);
    doc["field"] = report.field;
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"i", w.position.i},
                             {"d", w.position.d},
                             {"label", w.label},
                             {"graph", serialize_graph(w.graph, GraphFormat::edge_list)},
                             {"diagram", to_canonical_string(w.diagram)}});
    }
    doc["witnesses"] = std::move(witnesses);
    if (report.stats) {
        const auto& s = *report.stats;
        json stats = {{"graphs_visited", s.graphs_visited},
                      {"graphs_in_cone", s.graphs_in_cone},
                      {"stopped_early", s.stopped_early}};
        stats["distinct_diagrams"] = s.distinct_diagrams ? json(*s.distinct_diagrams) : json(nullptr);
        if (include_timing) {
            stats["elapsed_seconds"] = s.elapsed_seconds;
        }
        doc["stats"] = std::move(stats);
    } else {
        doc["stats"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

ConeReport parse_structured_text(const std::string& text) {
    try {
        const json doc = json::parse(text);
        ConeReport report;
        report.n = doc.at("n").get<int>();
        if (!doc.at("h").is_null()) {
            report.h = doc.at("h").get<int>();
        }
        report.method = parse_cone_method(doc.at("method").get<std::string>());
        report.dimension = doc.at("dimension").get<long long>();
        if (!doc.at("upper_bound").is_null()) {
            report.upper_bound = doc.at("upper_bound").get<long long>();
        }
        const auto cert = doc.at("certification").get<std::string>();
        report.certification = cert == "certified" ? Certification::certified
                               : cert == "partial" ? Certification::partial
                                                   : Certification::not_applicable;
        report.field = doc.at("field").get<std::string>();
        for (const auto& w : doc.at("witnesses")) {
            const auto graph = parse_graph(w.at("graph").get<std::string>(), GraphFormat::edge_list);
            report.witnesses.push_back(
                {IndexPair{w.at("i").get<int>(), w.at("d").get<int>()}, w.at("label").get<std::string>(),
                 graph, parse_canonical(w.at("diagram").get<std::string>(), report.n)});
        }
        if (const auto& s = doc.at("stats"); !s.is_null()) {
            EnumerationStats stats;
            stats.graphs_visited = s.at("graphs_visited").get<std::uint64_t>();
            stats.graphs_in_cone = s.at("graphs_in_cone").get<std::uint64_t>();
            stats.stopped_early = s.at("stopped_early").get<bool>();
            if (!s.at("distinct_diagrams").is_null()) {
                stats.distinct_diagrams = s.at("distinct_diagrams").get<std::uint64_t>();
            }
            stats.elapsed_seconds = s.value("elapsed_seconds", 0.0);
            report.stats = stats;
        }
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace betticone
