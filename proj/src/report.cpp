#include "dsf/report.hpp"

#include "dsf/canon.hpp"
#include "dsf/expr.hpp"

#include <iomanip>
#include <sstream>

namespace dsf {

using nlohmann::json;

json graph_json(const Graph& g) {
    return {{"name", describe(g)}, {"graph6", emit_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

json breaking_pair_json(const BreakingPair& p, const ForbiddenSet& f) {
    return {{"h", graph6_labeled(p.h)},
            {"h_prime", graph6_labeled(p.h_prime)},
            {"h_name", describe(p.h)},
            {"h_prime_name", describe(p.h_prime)},
            {"degrees", degree_sequence(p.h).to_string()},
            {"member", describe(f[p.member])},
            {"switch", {p.witness.a, p.witness.b, p.witness.c, p.witness.d}},
            {"added_vertices", p.added}};
}

json sieve_json(const SieveResult& r) {
    json members = json::array();
    for (const Graph& g : r.members)
        members.push_back(graph_json(g));
    return {{"schema", kReportSchema}, {"n_max", r.n_max}, {"stabilized", r.stabilized},
            {"new_per_order", r.new_per_order}, {"members", members}};
}

std::string triple_name(const std::array<Graph, 3>& t) {
    return "{" + describe(t[0]) + ", " + describe(t[1]) + ", " + describe(t[2]) + "}";
}

namespace {

json triple_json(const std::array<Graph, 3>& t) {
    json out = json::array();
    for (const Graph& g : t)
        out.push_back(graph_json(g));
    return out;
}

}  // namespace

json report_json(const SearchReport& r, bool timings) {
    json candidates = json::array();
    for (std::size_t i = 0; i < r.candidates.size(); ++i) {
        const auto& c = r.candidates[i];
        json entry = {{"graphs", {emit_graph6(c.graphs[0]), emit_graph6(c.graphs[1]), emit_graph6(c.graphs[2])}},
                      {"origin", to_string(c.origin)}};
        if (i < r.verdicts.size()) {
            const Phase2Verdict& v = r.verdicts[i];
            entry["gate"] = to_string(v.gate);
            entry["dsf"] = v.is_dsf;
            if (v.witness)
                entry["witness"] = {graph6_labeled(v.witness->h), graph6_labeled(v.witness->h_prime)};
        }
        candidates.push_back(entry);
    }
    json catalog = json::array();
    for (const auto& e : r.catalog)
        catalog.push_back({{"h", emit_graph6(e.h.graph())}, {"h_prime", emit_graph6(e.h_prime.graph())}, {"uses", e.uses}});
    json triples = json::array();
    for (const auto& t : r.dsf_triples)
        triples.push_back(triple_json(t));
    json out = {{"schema", kReportSchema},
                {"candidate_count", r.candidate_count},
                {"dsf_triples", triples},
                {"distinct_breaking_pairs", r.catalog.size()},
                {"catalog", catalog},
                {"candidates", candidates}};
    if (timings)
        out["timings_s"] = r.timings_s;
    return out;
}

json theorem_json(const TriplesTheorem& t, bool timings) {
    json triples = json::array();
    for (const auto& x : t.triples)
        triples.push_back(triple_json(x));
    json small = json::array();
    for (const auto& s : t.small_cases) {
        json entry = {{"graphs", triple_json(s.triple.graphs)}, {"dsf", s.is_dsf}, {"minimal", s.is_minimal}};
        if (s.criterion)
            entry["unigraph_criterion"] = *s.criterion;
        small.push_back(entry);
    }
    return {{"schema", kReportSchema},
            {"minimal_dsf_triples", triples},
            {"small_cases", small},
            {"search", report_json(t.search, timings)}};
}

std::string render_text(const SearchReport& r) {
    std::ostringstream out;
    std::size_t gated = 0;
    for (const auto& v : r.verdicts)
        gated += v.gate != Gate::none;
    out << "candidates            " << r.candidate_count << "\n";
    out << "rejected at gates     " << gated << "\n";
    out << "distinct breaking pairs " << r.catalog.size() << "\n";
    out << "DSF triples           " << r.dsf_triples.size() << "\n";
    for (const auto& t : r.dsf_triples)
        out << "  " << triple_name(t) << "\n";
    for (const auto& [name, secs] : r.timings_s)
        out << "time " << std::left << std::setw(16) << name << std::fixed << std::setprecision(2) << secs << " s\n";
    return out.str();
}

std::string render_text(const TriplesTheorem& t) {
    std::ostringstream out;
    out << "small cases\n";
    for (const auto& s : t.small_cases) {
        out << "  " << std::left << std::setw(28) << triple_name(s.triple.graphs) << (s.is_dsf ? " DSF" : " not DSF")
            << (s.is_minimal ? ", minimal" : "");
        if (s.criterion)
            out << (*s.criterion ? ", unigraph criterion holds" : ", unigraph criterion fails");
        out << "\n";
    }
    out << "search\n" << render_text(t.search);
    out << "minimal DSF triples   " << t.triples.size() << "\n";
    for (const auto& x : t.triples)
        out << "  " << triple_name(x) << "\n";
    return out.str();
}

std::string catalog_csv(const std::vector<CatalogEntry>& catalog) {
    std::ostringstream out;
    out << "h,h_prime,degrees,uses\n";
    for (const auto& e : catalog)
        out << emit_graph6(e.h.graph()) << ',' << emit_graph6(e.h_prime.graph()) << ",\""
            << degree_sequence(e.h.graph()).to_string() << "\"," << e.uses << "\n";
    return out.str();
}

std::vector<CatalogEntry> parse_catalog_csv(std::string_view text) {
    std::vector<CatalogEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "h,h_prime,degrees,uses")
        throw ParseError("catalog CSV needs the header h,h_prime,degrees,uses");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto fail = [&] { return ParseError("catalog CSV line " + std::to_string(lineno) + " is malformed"); };
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        std::size_t q2 = c2 == std::string::npos ? c2 : line.find('"', c2 + 2);
        if (q2 == std::string::npos || line[c2 + 1] != '"' || q2 + 1 >= line.size() || line[q2 + 1] != ',')
            throw fail();
        CatalogEntry e;
        Graph h = parse_graph6(line.substr(0, c1));
        Graph hp = parse_graph6(line.substr(c1 + 1, c2 - c1 - 1));
        e.h = certificate(h);
        e.h_prime = certificate(hp);
        if (degree_sequence(h).to_string() != line.substr(c2 + 2, q2 - c2 - 2))
            throw fail();
        try {
            std::size_t used = 0;
            std::string count = line.substr(q2 + 2);
            e.uses = std::stoi(count, &used);
            if (used != count.size())
                throw fail();
        } catch (const std::logic_error&) {
            throw fail();
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace dsf
