#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>

#include "gracelab/document.hpp"

namespace gracelab {

// The demonstration grid: every family over every stock base shape, with
// small parameter fans.  star-of is skipped where the base is too large for
// its quadratic copy count to stay readable (p0 > 12).
std::vector<CorpusInstance> corpus_grid() {
    const std::vector<std::string> bases = {"path:2",  "path:4",  "path:14", "cycle:4",
                                            "cycle:8", "kmn:2,2", "kmn:4,3", "grid:2,2",
                                            "grid:2,3", "grid:3,3"};
    std::vector<CorpusInstance> out;
    for (const auto& b : bases) {
        for (int n : {1, 2, 3, 5}) out.push_back({{Family::PathUnion, std::nullopt, n}, b});
        for (int t : {1, 2, 3}) out.push_back({{Family::OpenStar, t, std::nullopt}, b});
        for (int t : {1, 2})
            for (int n : {1, 2}) out.push_back({{Family::OnePointUnionPath, t, n}, b});
        for (int t : {2, 4, 6}) out.push_back({{Family::CycleOf, t, std::nullopt}, b});
    }
    for (const auto& b : bases) {
        if (b == "path:14") continue;  // p0 = 14 > 12
        out.push_back({{Family::StarOf, std::nullopt, std::nullopt}, b});
    }
    return out;
}

namespace {

std::string params_text(const ConstructionSpec& spec) {
    std::string out;
    if (spec.t) out += "t=" + std::to_string(*spec.t);
    if (spec.n) out += (out.empty() ? "" : " ") + std::string("n=") + std::to_string(*spec.n);
    return out.empty() ? "-" : out;
}

std::string file_name(const CorpusInstance& inst) {
    std::string base = inst.base;
    for (char& c : base) {
        if (c == ':') c = '-';
        if (c == ',') c = 'x';
    }
    std::string params;
    if (inst.spec.t) params += "__t-" + std::to_string(*inst.spec.t);
    if (inst.spec.n) params += "__n-" + std::to_string(*inst.spec.n);
    return family_name(inst.spec.family) + "__" + base + params + ".glg";
}

}  // namespace

int run_corpus(const std::string& out_dir, std::ostream& out) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    std::map<std::string, AlphaLabeledBase> base_cache;
    auto get_base = [&](const std::string& text) -> const AlphaLabeledBase& {
        auto it = base_cache.find(text);
        if (it == base_cache.end())
            it = base_cache.emplace(text, realize_base(parse_base_descriptor(text))).first;
        return it->second;
    };

    out << std::left << std::setw(22) << "family" << std::setw(11) << "base" << std::setw(10)
        << "params" << std::setw(6) << "q" << "verdict\n";

    int failures = 0, total = 0;
    for (const auto& inst : corpus_grid()) {
        ++total;
        std::string verdict;
        int q = -1;
        try {
            LabelerReport report = label(inst.spec, get_base(inst.base));
            LabeledGraphDocument doc{inst.spec, parse_base_descriptor(inst.base),
                                     report.labeled, report.certificate};
            const fs::path path = fs::path(out_dir) / file_name(inst);
            {
                std::ofstream f(path);
                if (!f) throw ValidationError("cannot write " + path.string());
                f << serialize(doc);
            }
            // Read back and re-verify what actually landed on disk.
            std::ifstream f(path);
            std::string text((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
            ParsedDocument parsed = parse_document(text);
            Certificate cert = verify_document(parsed);
            q = cert.q;
            if (!(parsed.doc == doc)) {
                verdict = "ROUNDTRIP-MISMATCH";
                ++failures;
            } else if (!cert.ok()) {
                verdict = "FAIL";
                ++failures;
            } else {
                verdict = verdict_name(cert.verdict);
            }
        } catch (const std::exception& err) {
            verdict = std::string("ERROR: ") + err.what();
            ++failures;
        }
        out << std::left << std::setw(22) << family_name(inst.spec.family) << std::setw(11)
            << inst.base << std::setw(10) << params_text(inst.spec) << std::setw(6)
            << (q >= 0 ? std::to_string(q) : "-") << verdict << "\n";
    }
    out << "corpus: " << (total - failures) << "/" << total << " verified";
    if (failures) out << ", " << failures << " FAILURES";
    out << "\n";
    return failures;
}

}  // namespace gracelab
