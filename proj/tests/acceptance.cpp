// Acceptance gate for the whole pipeline.  Runs nine independent checks and
// prints exactly one PASS/FAIL line per criterion; exits nonzero if any
// fails.  argv[1] must be the path to the gracelab CLI binary (the
// end-to-end criterion shells out to it).

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gracelab/document.hpp"
#include "gracelab/oracle.hpp"
#include "gracelab/shapes.hpp"

using namespace gracelab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// ---------------------------------------------------------------------------
// Shared base inventories.

// The stock atlas sweep: every shape family over its documented range.
std::vector<AlphaLabeledBase> atlas_sweep() {
    std::vector<AlphaLabeledBase> out;
    for (int n = 2; n <= 50; ++n) out.push_back(base_path(n));
    for (int k = 1; k <= 12; ++k) out.push_back(base_cycle(4 * k));
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n) out.push_back(base_complete_bipartite(m, n));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            if (m * n < 2) continue;
            out.push_back(base_grid(m, n));
        }
    return out;
}

// Same sweep capped by base edge count (the construction criteria use this).
std::vector<AlphaLabeledBase> atlas_capped(int q0_max) {
    std::vector<AlphaLabeledBase> out;
    for (auto& b : atlas_sweep())
        if (b.q0() <= q0_max) out.push_back(std::move(b));
    return out;
}

// Corpus instances realized into (spec, base) pairs, with the bases cached.
struct RealizedInstance {
    ConstructionSpec spec;
    std::string base_text;
    const AlphaLabeledBase* base;
};

std::vector<RealizedInstance> realized_corpus() {
    static std::map<std::string, AlphaLabeledBase> cache;
    std::vector<RealizedInstance> out;
    for (const auto& inst : corpus_grid()) {
        auto it = cache.find(inst.base);
        if (it == cache.end())
            it = cache.emplace(inst.base, realize_base(parse_base_descriptor(inst.base))).first;
        out.push_back({inst.spec, inst.base, &it->second});
    }
    return out;
}

std::string spec_text(const ConstructionSpec& spec, const std::string& base) {
    std::string s = family_name(spec.family) + " over " + base;
    if (spec.t) s += " t=" + std::to_string(*spec.t);
    if (spec.n) s += " n=" + std::to_string(*spec.n);
    return s;
}

// ---------------------------------------------------------------------------
// Criteria.

std::string crit_atlas() {
    auto t0 = Clock::now();
    int count = 0;
    for (const auto& b : atlas_sweep()) {
        std::vector<VertexAddress> us, vs;
        for (int i = 1; i <= b.m(); ++i) us.push_back(base_u(i));
        for (int j = 1; j <= b.r(); ++j) vs.push_back(base_v(j));
        auto cert = verify_alpha(LabeledGraph::create(b.graph(), b.f0()), us, vs);
        expect(cert.verdict == Verdict::AlphaGraceful,
               "alpha verification failed for a stock base: " + cert.summary());
        ++count;
    }
    double dt = seconds_since(t0);
    expect(dt < 5.0, "atlas sweep took " + std::to_string(dt) + "s (budget 5s)");
    return std::to_string(count) + " bases alpha-verified";
}

std::string crit_path_union() {
    auto t0 = Clock::now();
    int count = 0;
    for (const auto& b : atlas_capped(30)) {
        for (int n = 1; n <= 10; ++n) {
            auto rep = label_path_union(b, n);
            expect(rep.certificate.ok(), "path-union failed: " + rep.certificate.summary());
            expect(rep.labeled.q() == n * (b.q0() + 1) - 1,
                   "path-union edge count off: q=" + std::to_string(rep.labeled.q()));
            ++count;
        }
    }
    auto figure = label_path_union(base_path(14), 5);
    expect(figure.labeled.q() == 69 && figure.certificate.ok(),
           "P(5*P14) should be graceful with q=69");
    double dt = seconds_since(t0);
    expect(dt < 10.0, "path-union sweep took " + std::to_string(dt) + "s (budget 10s)");
    return std::to_string(count) + " instances incl. P(5*P14) q=69";
}

std::string crit_open_star() {
    int count = 0;
    for (const auto& b : atlas_capped(30)) {
        for (int t = 1; t <= 10; ++t) {
            auto rep = label_open_star(b, t);
            expect(rep.certificate.ok(), "open-star failed: " + rep.certificate.summary());
            expect(rep.labeled.q() == t * (b.q0() + 1),
                   "open-star edge count off: q=" + std::to_string(rep.labeled.q()));
            ++count;
        }
    }
    return std::to_string(count) + " instances";
}

std::string crit_one_point() {
    int count = 0;
    for (const auto& b : atlas_capped(30)) {
        for (int t = 1; t <= 5; ++t) {
            for (int n = 1; n <= 5; ++n) {
                auto rep = label_one_point_union_path(b, t, n);
                expect(rep.certificate.ok(),
                       "one-point-union-path failed: " + rep.certificate.summary());
                expect(rep.labeled.q() == t * n * (b.q0() + 1),
                       "one-point edge count off: q=" + std::to_string(rep.labeled.q()));
                ++count;
            }
        }
    }

    // The r=1 evidence: on the P2 base (t=2, n=1) the spokes must go to the
    // v-side endpoints.  Wiring them to u_{s,1,1} instead induces the edge
    // multiset {1,1,3,3}, which misses 2 and 4 -- so that variant cannot be
    // graceful, while the shipped one is.
    auto rep = label_one_point_union_path(base_path(2), 2, 1);
    expect(rep.certificate.ok(), "one-point P2 t=2 n=1 must pass");
    const auto& f = rep.labeled.labels();
    std::multiset<int> wrong, got;
    for (int s = 1; s <= 2; ++s) {
        wrong.insert(std::abs(f.at(center()) - f.at(branch_u(s, 1, 1))));
        wrong.insert(std::abs(f.at(branch_u(s, 1, 1)) - f.at(branch_v(s, 1, 1))));
    }
    for (int lbl : rep.labeled.edge_labels()) got.insert(lbl);
    expect(wrong == std::multiset<int>({1, 1, 3, 3}),
           "expected the u-side spoke wiring to induce {1,1,3,3}");
    expect(got == std::multiset<int>({1, 2, 3, 4}),
           "expected the shipped spoke wiring to induce {1,2,3,4}");
    return std::to_string(count) + " instances; u-side spokes induce {1,1,3,3} on P2";
}

std::string crit_cycle_of() {
    const std::string& variant = calibrated_cycle_variant();  // throws if none calibrates
    int count = 0;
    for (const auto& b : atlas_capped(30)) {
        for (int t : {2, 4, 6, 8}) {
            auto rep = label_cycle_of(b, t);
            expect(rep.certificate.ok(), "cycle-of failed: " + rep.certificate.summary());
            expect(rep.labeled.q() == t * (b.q0() + 1),
                   "cycle-of edge count off: q=" + std::to_string(rep.labeled.q()));
            expect(rep.formula_variant == variant, "variant drifted between calls");
            ++count;
        }
    }
    return std::to_string(count) + " instances via " + variant;
}

std::string crit_star_of() {
    int count = 0;
    for (const auto& b : atlas_sweep()) {
        if (b.p0() > 12) continue;
        auto rep = label_star_of(b);
        expect(rep.certificate.ok(), "star-of failed: " + rep.certificate.summary());
        int q0 = b.q0(), p0 = b.p0(), q = (p0 + 1) * q0 + p0;
        expect(rep.labeled.q() == q, "star-of edge count off: q=" + std::to_string(rep.labeled.q()));

        // Non-spoke edge labels must be exactly {1..q} minus the multiples
        // k(q0+1), k = 1..p0 (those are reserved for the spokes).
        std::set<std::pair<VertexAddress, VertexAddress>> spokes;
        for (const auto& c : rep.compound.connectors) {
            spokes.insert({c.edge.first, c.edge.second});
            spokes.insert({c.edge.second, c.edge.first});
        }
        std::set<int> nonspoke;
        for (const auto& e : rep.labeled.graph().edges())
            if (!spokes.count({e.first, e.second})) nonspoke.insert(rep.labeled.edge_label(e));
        std::set<int> want;
        for (int x = 1; x <= q; ++x) want.insert(x);
        for (int k = 1; k <= p0; ++k) want.erase(k * (q0 + 1));
        expect(nonspoke == want, "non-spoke labels are not {1..q} minus k(q0+1)");
        ++count;
    }
    return std::to_string(count) + " instances with exact non-spoke label sets";
}

std::string crit_oracle() {
    SearchBudget budget{1'000'000, std::chrono::seconds(30)};
    for (int n : {4, 7, 8, 11, 12}) {
        auto out = find_graceful(make_cycle_graph(n), budget);
        expect(out.status == SearchStatus::Found,
               "C" + std::to_string(n) + ": expected FOUND, got " + search_status_name(out.status) +
                   " after " + std::to_string(out.nodes_expanded) + " nodes");
    }
    for (int n : {5, 6}) {
        auto out = find_graceful(make_cycle_graph(n), budget);
        expect(out.status == SearchStatus::ExhaustedNone,
               "C" + std::to_string(n) + ": expected EXHAUSTED_NONE, got " +
                   search_status_name(out.status));
    }

    // The pruned search and the naive full enumeration must agree on every
    // corpus graph small enough for the latter.
    int checked = 0;
    for (const auto& inst : realized_corpus()) {
        Graph g = build(inst.spec, *inst.base).graph;
        if (g.edge_count() > 8) continue;
        auto fast = find_graceful(g, budget);
        auto naive = cross_check_enumeration(g);
        expect(fast.status == naive.status,
               "oracle disagreement on " + spec_text(inst.spec, inst.base_text) + ": " +
                   search_status_name(fast.status) + " vs " + search_status_name(naive.status));
        expect(fast.status == SearchStatus::Found,
               "corpus graph unexpectedly has no graceful labeling: " +
                   spec_text(inst.spec, inst.base_text));
        ++checked;
    }
    expect(checked > 0, "no corpus graphs with q <= 8");
    return "cycle verdicts exact; enumeration cross-check on " + std::to_string(checked) +
           " corpus graphs";
}

std::string crit_verifier() {
    std::mt19937 rng(0x67726163);  // fixed seed: runs are reproducible
    long rand_checked = 0, corruptions = 0;
    for (const auto& inst : realized_corpus()) {
        auto rep = label(inst.spec, *inst.base);
        const Graph& g = rep.labeled.graph();
        int q = rep.labeled.q();

        // Complement of the real (passing) labeling stays graceful and the
        // complement is an involution.
        auto comp = complement_labeling(rep.labeled);
        expect(verify_graceful(comp).ok(),
               "complement broke gracefulness on " + spec_text(inst.spec, inst.base_text));
        expect(complement_labeling(comp) == rep.labeled, "complement is not an involution");

        // Same two properties over random labelings (almost all failing):
        // involution always, and f and q-f always share a verdict.
        std::uniform_int_distribution<int> dist(0, q);
        for (int it = 0; it < 1000; ++it) {
            Labeling lab;
            for (const auto& v : g.vertices()) lab.set(v, dist(rng));
            auto lg = LabeledGraph::create(g, lab);
            auto c = complement_labeling(lg);
            expect(complement_labeling(c) == lg, "complement is not an involution (random)");
            expect(verify_graceful(lg).ok() == verify_graceful(c).ok(),
                   "complement changed the verdict on a random labeling");
            ++rand_checked;
        }

        // Every single-vertex-label corruption of the passing document must
        // flip the verdict to FAIL: either re-verification fails outright or
        // some stored edge label no longer matches the recomputation
        // (exactly what verify_document folds in as tamper evidence).
        std::map<std::pair<VertexAddress, VertexAddress>, int> stored;
        for (const auto& e : g.edges()) stored[{e.first, e.second}] = rep.labeled.edge_label(e);
        for (const auto& victim : g.vertices()) {
            int orig = rep.labeled.labels().at(victim);
            for (int bad = 0; bad <= q; ++bad) {
                if (bad == orig) continue;
                Labeling mod;
                for (const auto& [v, val] : rep.labeled.labels()) mod.set(v, val);
                mod.set(victim, bad);
                auto lg = LabeledGraph::create(g, mod);
                bool detected = !verify_graceful(lg).ok();
                if (!detected)
                    for (const auto& e : g.edges())
                        if ((e.first == victim || e.second == victim) &&
                            lg.edge_label(e) != stored[{e.first, e.second}]) {
                            detected = true;
                            break;
                        }
                expect(detected, "undetected corruption on " +
                                     spec_text(inst.spec, inst.base_text) + ": " +
                                     victim.to_string() + " " + std::to_string(orig) + " -> " +
                                     std::to_string(bad));
                ++corruptions;
            }
        }

        // Spot-check the same thing through the actual text pipeline.
        LabeledGraphDocument doc{inst.spec, parse_base_descriptor(inst.base_text), rep.labeled,
                                 rep.certificate};
        std::string text = serialize(doc);
        const auto& first = g.vertices().front();
        std::string needle = "vertex " + first.to_string() + " ";
        auto pos = text.find(needle);
        expect(pos != std::string::npos, "vertex line not found in document");
        auto eol = text.find('\n', pos);
        int orig = rep.labeled.labels().at(first);
        std::string corrupted = text.substr(0, pos + needle.size()) +
                                std::to_string((orig + 1) % (q + 1)) + text.substr(eol);
        expect(!verify_document(parse_document(corrupted)).ok(),
               "document-level corruption not detected on " +
                   spec_text(inst.spec, inst.base_text));
    }
    return std::to_string(rand_checked) + " random labelings, " + std::to_string(corruptions) +
           " corruptions all detected";
}

std::string crit_end_to_end(const std::string& cli) {
    fs::path dir = fs::temp_directory_path() / ("gracelab-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path out_dir = dir / "corpus";
    fs::path log = dir / "corpus.log";

    std::string cmd = "\"" + cli + "\" corpus --out \"" + out_dir.string() + "\" > \"" +
                      log.string() + "\" 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) {
        std::ifstream in(log);
        std::stringstream tail;
        tail << in.rdbuf();
        fail("corpus command exited " + std::to_string(rc) + "\n" + tail.str());
    }

    std::size_t expected = corpus_grid().size();
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(out_dir)) {
        if (entry.path().extension() != ".glg") continue;
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        auto parsed = parse_document(text);
        expect(parsed.tamper.empty(), entry.path().filename().string() + ": tamper on fresh output");
        expect(verify_document(parsed).ok(),
               entry.path().filename().string() + ": emitted document does not re-verify");
        expect(serialize(parsed.doc) == text,
               entry.path().filename().string() + ": serialize(parse(text)) != text");
        ++seen;
    }
    expect(seen == expected, "expected " + std::to_string(expected) + " documents, found " +
                                 std::to_string(seen));
    fs::remove_all(dir);
    return std::to_string(seen) + " documents round-trip and re-verify, exit 0";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-gracelab-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    struct Criterion {
        const char* title;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"atlas alpha soundness", crit_atlas},
        {"path-union gracefulness", crit_path_union},
        {"open-star gracefulness", crit_open_star},
        {"one-point-union gracefulness + spoke evidence", crit_one_point},
        {"cycle-of gracefulness (calibrated)", crit_cycle_of},
        {"star-of gracefulness + label partition", crit_star_of},
        {"oracle ground truth + cross-check", crit_oracle},
        {"verifier properties + corruption detection", crit_verifier},
        {"end-to-end corpus", [&] { return crit_end_to_end(cli); }},
    };

    auto t0 = Clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto tc = Clock::now();
        std::string note;
        bool pass = true;
        try {
            note = criteria[i].run();
        } catch (const LabelingError& e) {
            pass = false;
            note = std::string(e.what()) + " | " + e.certificate().summary();
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        std::ostringstream line;
        line << "criterion " << (i + 1) << " [" << (pass ? "PASS" : "FAIL") << "] "
             << criteria[i].title << ": " << note << " (" << std::fixed << std::setprecision(2)
             << seconds_since(tc) << "s)";
        std::cout << line.str() << std::endl;
        if (!pass) ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed in " << std::fixed << std::setprecision(2) << seconds_since(t0)
              << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
