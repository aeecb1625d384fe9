#pragma once

#include <string>
#include <vector>

#include "gracelab/errors.hpp"
#include "gracelab/graph.hpp"

namespace gracelab {

enum class Verdict { Graceful, AlphaGraceful, Fail };

std::string verdict_name(Verdict v);

// One concrete reason a labeling is not (alpha-)graceful.  Every violation
// names the vertices/edges/values involved so a failure is actionable.
struct Violation {
    enum class Kind {
        DuplicateVertexLabel,   // addrs = the clashing pair, value = label
        VertexLabelOutOfRange,  // addrs = the vertex, value = label
        DuplicateEdgeLabel,     // edges = the clashing pair, value = label
        MissingEdgeLabel,       // value = the label in 1..q never induced
        NonCrossingEdge,        // edges = the within-side edge (alpha only)
        BoundaryViolation,      // value = max U label, value2 = min V label (alpha only)
        StoredEdgeMismatch,     // edges = the edge, value = stored, value2 = recomputed
    };

    Kind kind;
    int value = 0;
    int value2 = 0;
    std::vector<VertexAddress> addrs;
    std::vector<Edge> edges;

    std::string describe() const;
};

// Result of a verification run.  ok() means the requested property holds.
struct Certificate {
    Verdict verdict = Verdict::Fail;
    int q = 0;
    std::vector<Violation> violations;

    bool ok() const { return verdict != Verdict::Fail; }
    std::string summary() const;
};

// A constructive labeler produced a labeling that failed verification.  This
// is always a bug (in the formulas or their transcription) and carries the
// full certificate for diagnosis.
class LabelingError : public std::runtime_error {
public:
    LabelingError(const std::string& what, Certificate cert);
    const Certificate& certificate() const { return cert_; }

private:
    Certificate cert_;
};

// Exact check that lg is graceful: vertex labels injective within [0,q] and
// induced edge labels exactly {1..q}.  Never throws on content; a bad
// labeling comes back as verdict Fail with all violations listed.
Certificate verify_graceful(const LabeledGraph& lg);

// Exact check that lg is alpha-graceful with respect to the declared
// bipartition (u_side, v_side): graceful, every edge crosses sides, and
// max label on U < min label on V.  Throws ValidationError if the two sides
// do not partition the vertex set.
Certificate verify_alpha(const LabeledGraph& lg,
                         const std::vector<VertexAddress>& u_side,
                         const std::vector<VertexAddress>& v_side);

// The complement labeling f'(v) = q - f(v).  Preserves gracefulness (it is
// an involution on graceful labelings).  Throws ValidationError if some
// label lies outside [0,q].
LabeledGraph complement_labeling(const LabeledGraph& lg);

}  // namespace gracelab
