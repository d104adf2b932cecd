#include "dsf/canon.hpp"
#include "dsf/dsf.hpp"
#include "dsf/expr.hpp"
#include "dsf/report.hpp"
#include "dsf/triples.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

using namespace dsf;

namespace {

std::array<Graph, 3> triple(const char* a, const char* b, const char* c) {
    return canonical_triple({parse_expression(a), parse_expression(b), parse_expression(c)});
}

const std::vector<CandidateTriple>& literal_candidates() {
    static const auto c = phase1(phase1_literal());
    return c;
}

const SearchReport& literal_report() {
    static const SearchReport r = [] {
        Phase2Options o;
        o.workers = 1;
        return phase2(literal_candidates(), o);
    }();
    return r;
}

std::vector<std::array<Graph, 3>> theorem_list() {
    std::vector<std::array<Graph, 3>> out{
        triple("K3", "K1,3", "2K2"),     triple("3K1", "K1+K3", "C4"),   triple("K3", "K1,3", "P3+K1"),
        triple("3K1", "K1+K3", "paw"),   triple("K3", "K2,3", "P3+K1"),  triple("3K1", "K2+K3", "paw"),
        triple("K3", "C4", "P3+K1"),     triple("3K1", "2K2", "paw"),    triple("K3+K1", "C4", "P3+K1"),
        triple("K1,3", "2K2", "paw")};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("phase one candidates are well formed") {
    const auto& c = literal_candidates();
    REQUIRE_FALSE(c.empty());
    for (const auto& t : c) {
        ClassMembership m1 = classify(t.graphs[0]);
        ClassMembership m2 = classify(t.graphs[1]);
        REQUIRE(m1.in(GraphClass::B));
        REQUIRE(m2.in(GraphClass::Bc));
        CHECK((*m1.bipartite)[0] >= 1);
        CHECK((*m2.cliques)[0] >= 1);
        CHECK(covers_all_classes(std::span<const Graph>(t.graphs)));
        std::array<SizeProfile, 3> sizes;
        for (int i = 0; i < 3; ++i) {
            CHECK(t.graphs[i].order() >= 4);
            CHECK(t.graphs[i].order() <= 18);
            sizes[i] = size_profile(t.graphs[i]);
        }
        CHECK(vertex_gap_ok(sizes));
        CHECK(edge_gap_ok(sizes));
    }
}

TEST_CASE("phase one is deterministic and the normalized mode drops repeats") {
    auto again = phase1(phase1_literal());
    REQUIRE(again.size() == literal_candidates().size());
    for (std::size_t i = 0; i < again.size(); ++i)
        CHECK(again[i].graphs == literal_candidates()[i].graphs);

    auto normalized = phase1(phase1_normalized());
    std::set<std::array<Graph, 3>> distinct;
    for (const auto& t : literal_candidates())
        distinct.insert(canonical_triple(t.graphs));
    CHECK(normalized.size() == distinct.size());
    CHECK(normalized.size() <= literal_candidates().size());

    Phase1Stats stats;
    Phase1Options wide = phase1_literal();
    wide.clique_size = CliqueFamilySize::component_count;
    auto by_components = phase1(wide, &stats);
    CHECK(stats.oversized > 0);
    CHECK_FALSE(by_components.empty());
}

TEST_CASE("phase two finds exactly two DSF triples") {
    const SearchReport& r = literal_report();
    std::vector<std::array<Graph, 3>> expected{triple("K3+K1", "C4", "P3+K1"), triple("K1,3", "2K2", "paw")};
    std::sort(expected.begin(), expected.end());
    CHECK(r.dsf_triples == expected);
    CHECK(r.candidate_count == literal_candidates().size());
    CHECK_FALSE(r.catalog.empty());

    // The two survivors are complements of each other.
    std::array<Graph, 3> co;
    for (int i = 0; i < 3; ++i)
        co[i] = complement(expected[0][i]);
    CHECK(canonical_triple(co) == expected[1]);

    PairsList pairs = PairsList::load_default();
    for (const auto& t : r.dsf_triples)
        for (int i = 0; i < 3; ++i) {
            CHECK_FALSE(pairs.verdict(ForbiddenSet({t[i]})));
            for (int j = i + 1; j < 3; ++j)
                CHECK_FALSE(pairs.verdict(ForbiddenSet({t[i], t[j]})));
        }
}

TEST_CASE("phase two witnesses are valid") {
    const SearchReport& r = literal_report();
    int checked = 0;
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
        const Phase2Verdict& v = r.verdicts[i];
        if (v.gate != Gate::none)
            continue;
        if (!v.is_dsf) {
            REQUIRE(v.witness.has_value());
            ForbiddenSet f(std::vector<Graph>(r.candidates[i].graphs.begin(), r.candidates[i].graphs.end()));
            CHECK(is_breaking_pair(*v.witness, f));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("phase two gates") {
    CandidateTriple with_pair{{parse_expression("2K2"), parse_expression("C4"), complete(6)}, Origin::K};
    CHECK(test_candidate(with_pair, SearchMode::paper_literal).gate == Gate::contains_dsf_pair);
    CandidateTriple nested{{parse_expression("K3"), complete(4), parse_expression("C4")}, Origin::K};
    CHECK(test_candidate(nested, SearchMode::paper_literal).gate == Gate::not_antichain);
    CandidateTriple repeated{{cycle(4), cycle(4), complete(4)}, Origin::K};
    CHECK(test_candidate(repeated, SearchMode::paper_literal).gate == Gate::not_antichain);
}

TEST_CASE("phase two is independent of worker count and resumes from a checkpoint") {
    std::vector<CandidateTriple> some(literal_candidates().begin(), literal_candidates().begin() + 400);
    Phase2Options one;
    one.workers = 1;
    Phase2Options three;
    three.workers = 3;
    SearchReport a = phase2(some, one);
    SearchReport b = phase2(some, three);
    CHECK(report_json(a, false) == report_json(b, false));

    auto file = std::filesystem::temp_directory_path() / "dsf_phase2_checkpoint.txt";
    std::filesystem::remove(file);
    Phase2Options saved = one;
    saved.checkpoint = file;
    SearchReport full = phase2(some, saved);
    CHECK(report_json(full, false) == report_json(a, false));

    // Keep the header and about half the verdicts, plus a torn line.
    std::vector<std::string> lines;
    {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line))
            lines.push_back(line);
    }
    REQUIRE(lines.size() == some.size() + 1);
    {
        std::ofstream out(file, std::ios::trunc);
        for (std::size_t i = 0; i < lines.size() / 2; ++i)
            out << lines[i] << "\n";
        out << "17 no";
    }
    std::size_t calls = 0;
    saved.progress = [&](std::size_t, std::size_t) { ++calls; };
    SearchReport resumed = phase2(some, saved);
    CHECK(calls < some.size());
    CHECK(report_json(resumed, false) == report_json(a, false));

    // A checkpoint for other candidates is ignored.
    std::vector<CandidateTriple> fewer(some.begin(), some.begin() + 10);
    calls = 0;
    phase2(fewer, saved);
    CHECK(calls == fewer.size());
    std::filesystem::remove(file);
}

TEST_CASE("small-case triples") {
    UnigraphCriterion crit = UnigraphCriterion::load_default();
    auto results = small_case_triples(&crit);
    REQUIRE(results.size() == 8);
    for (const auto& r : results) {
        CHECK(r.is_dsf);
        CHECK(r.is_minimal);
        REQUIRE(r.criterion.has_value());
        CHECK(*r.criterion);
        CHECK(covers_all_classes(std::span<const Graph>(r.triple.graphs)));
    }
    for (int i = 0; i < 4; ++i) {
        std::array<Graph, 3> co;
        for (int j = 0; j < 3; ++j)
            co[j] = complement(results[i].triple.graphs[j]);
        CHECK(canonical_triple(co) == canonical_triple(results[i + 4].triple.graphs));
    }
    CHECK(canonical_triple(results[0].triple.graphs) == triple("K3", "P3+K1", "K1,3"));
    CHECK(canonical_triple(results[7].triple.graphs) == triple("3K1", "C4", "K1+K3"));
}

TEST_CASE("the complete list of minimal DSF triples") {
    Phase2Options o;
    o.workers = 1;
    TriplesTheorem t = reproduce_triples_theorem(o);
    auto expected = theorem_list();
    CHECK(std::adjacent_find(expected.begin(), expected.end()) == expected.end());
    CHECK(expected.size() == 10);
    CHECK(t.triples == expected);
    for (const auto& x : t.triples)
        CHECK(covers_all_classes(std::span<const Graph>(x)));
}

TEST_CASE("reports") {
    SearchReport empty;
    nlohmann::json j = report_json(empty);
    CHECK(j["schema"] == std::string(kReportSchema));
    CHECK(j["candidate_count"] == 0);
    CHECK(j["dsf_triples"].empty());
    CHECK_FALSE(render_text(empty).empty());

    const SearchReport& r = literal_report();
    std::string csv = catalog_csv(r.catalog);
    auto parsed = parse_catalog_csv(csv);
    REQUIRE(parsed.size() == r.catalog.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].h == r.catalog[i].h);
        CHECK(parsed[i].h_prime == r.catalog[i].h_prime);
        CHECK(parsed[i].uses == r.catalog[i].uses);
    }
    CHECK(catalog_csv(parsed) == csv);
    CHECK_THROWS_AS(parse_catalog_csv("nope\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog_csv("h,h_prime,degrees,uses\nDBg,DBg,\"(1)\",2\n"), ParseError);
}
