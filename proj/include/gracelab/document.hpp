#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "gracelab/label.hpp"

namespace gracelab {

// ---------------------------------------------------------------------------
// Base descriptors: how a document (or the CLI) names its base graph.

struct AtlasDescriptor {
    enum class Kind { Path, Cycle, CompleteBipartite, Grid } kind = Kind::Path;
    int a = 0;  // n for path/cycle, m for kmn/grid
    int b = 0;  // n for kmn/grid, unused otherwise

    bool operator==(const AtlasDescriptor&) const = default;
};

// A user-supplied base: graph6 structure plus an explicit bipartition and
// labeling, all by graph6 vertex index (0-based).
struct CustomBaseDescriptor {
    std::string graph6;
    std::vector<int> u_side;
    std::vector<int> v_side;
    std::vector<int> labels;  // labels[i] = f0 of graph6 vertex i

    bool operator==(const CustomBaseDescriptor&) const = default;
};

using BaseDescriptor = std::variant<AtlasDescriptor, CustomBaseDescriptor>;

// CLI spelling: "path:14", "cycle:8", "kmn:4,3", "grid:3,3".  Custom bases
// are spelled "custom:<graph6>:u=0,2:v=1,3:f=0,3,1,2".  Throws ParseError.
BaseDescriptor parse_base_descriptor(const std::string& text);
std::string base_descriptor_text(const BaseDescriptor& base);

// Builds the actual alpha-labeled base (atlas call or custom-base
// validation).  Custom bases go through the same verify_alpha gate as the
// atlas; a bad labeling throws LabelingError.
AlphaLabeledBase realize_base(const BaseDescriptor& base);

// ---------------------------------------------------------------------------
// graph6 (undirected, no header).  decode throws ParseError on malformed
// text; encode is the exact inverse and exists mainly so tests and users can
// produce inputs.

Graph decode_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// The on-disk artifact: a constructed, labeled, verified compound graph.

struct LabeledGraphDocument {
    ConstructionSpec spec;
    BaseDescriptor base;
    LabeledGraph labeled;
    Certificate certificate;

    bool operator==(const LabeledGraphDocument&) const;
};

// Line-oriented, versioned text form.  Round-trip: parse(serialize(d)) == d.
std::string serialize(const LabeledGraphDocument& doc);

// Parse result.  Structural problems (bad header, unknown family, malformed
// address, wrong counts, duplicate vertices...) throw ParseError.  Stored
// induced edge labels that disagree with recomputation from the vertex
// labels do NOT throw: they come back as StoredEdgeMismatch violations in
// `tamper`, and verification of a tampered document must fail.
struct ParsedDocument {
    LabeledGraphDocument doc;
    std::vector<Violation> tamper;
};

ParsedDocument parse_document(const std::string& text);

// Re-verifies a parsed document: verify_graceful on the labeled graph with
// any tamper violations folded in (forcing Fail).
Certificate verify_document(const ParsedDocument& parsed);

// Graphviz "graph { ... }" text: vertices in document order with value
// captions, edges with induced labels, hub vertices visually distinguished.
std::string export_dot(const LabeledGraphDocument& doc);

// ---------------------------------------------------------------------------
// Corpus: the fixed demonstration grid (all five families over the stock
// bases).

struct CorpusInstance {
    ConstructionSpec spec;
    std::string base;  // atlas descriptor text, e.g. "path:4"
};

std::vector<CorpusInstance> corpus_grid();

// Writes one document per corpus instance into out_dir plus a summary table
// to `out`.  Returns the number of failures (0 = all verified).
int run_corpus(const std::string& out_dir, std::ostream& out);

}  // namespace gracelab
