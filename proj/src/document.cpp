#include "gracelab/document.hpp"

#include <charconv>
#include <sstream>

namespace gracelab {

namespace {

constexpr const char* kHeader = "gracelab labeled-graph v1";

int parse_int(const std::string& tok, const char* what, int line = 0) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok, what));
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Base descriptors

BaseDescriptor parse_base_descriptor(const std::string& text) {
    auto parts = split(text, ':');
    const std::string& kind = parts[0];
    auto two_ints = [&](const std::string& s) {
        auto ab = split(s, ',');
        if (ab.size() != 2) throw ParseError("want two comma-separated numbers in '" + s + "'");
        return std::pair{parse_int(ab[0], "base parameter"), parse_int(ab[1], "base parameter")};
    };
    if (kind == "path" || kind == "cycle") {
        if (parts.size() != 2) throw ParseError("base '" + text + "' wants one parameter");
        AtlasDescriptor d;
        d.kind = kind == "path" ? AtlasDescriptor::Kind::Path : AtlasDescriptor::Kind::Cycle;
        d.a = parse_int(parts[1], "base parameter");
        return d;
    }
    if (kind == "kmn" || kind == "grid") {
        if (parts.size() != 2) throw ParseError("base '" + text + "' wants m,n");
        AtlasDescriptor d;
        d.kind = kind == "kmn" ? AtlasDescriptor::Kind::CompleteBipartite
                               : AtlasDescriptor::Kind::Grid;
        std::tie(d.a, d.b) = two_ints(parts[1]);
        return d;
    }
    if (kind == "custom") {
        // custom:<graph6>:u=...:v=...:f=...
        if (parts.size() != 5)
            throw ParseError("custom base wants custom:<graph6>:u=...:v=...:f=...");
        CustomBaseDescriptor d;
        d.graph6 = parts[1];
        for (int k = 2; k <= 4; ++k) {
            const std::string& p = parts[k];
            if (p.size() < 2 || p[1] != '=')
                throw ParseError("bad custom base field '" + p + "'");
            auto xs = parse_int_list(p.substr(2), "custom base index");
            if (p[0] == 'u') d.u_side = xs;
            else if (p[0] == 'v') d.v_side = xs;
            else if (p[0] == 'f') d.labels = xs;
            else throw ParseError("bad custom base field '" + p + "'");
        }
        return d;
    }
    throw ParseError("unknown base kind '" + kind + "'");
}

std::string base_descriptor_text(const BaseDescriptor& base) {
    if (const auto* a = std::get_if<AtlasDescriptor>(&base)) {
        switch (a->kind) {
            case AtlasDescriptor::Kind::Path: return "path:" + std::to_string(a->a);
            case AtlasDescriptor::Kind::Cycle: return "cycle:" + std::to_string(a->a);
            case AtlasDescriptor::Kind::CompleteBipartite:
                return "kmn:" + std::to_string(a->a) + "," + std::to_string(a->b);
            case AtlasDescriptor::Kind::Grid:
                return "grid:" + std::to_string(a->a) + "," + std::to_string(a->b);
        }
    }
    const auto& c = std::get<CustomBaseDescriptor>(base);
    return "custom:" + c.graph6 + ":u=" + join_ints(c.u_side) + ":v=" + join_ints(c.v_side) +
           ":f=" + join_ints(c.labels);
}

AlphaLabeledBase realize_base(const BaseDescriptor& base) {
    if (const auto* a = std::get_if<AtlasDescriptor>(&base)) {
        switch (a->kind) {
            case AtlasDescriptor::Kind::Path: return base_path(a->a);
            case AtlasDescriptor::Kind::Cycle: return base_cycle(a->a);
            case AtlasDescriptor::Kind::CompleteBipartite:
                return base_complete_bipartite(a->a, a->b);
            case AtlasDescriptor::Kind::Grid: return base_grid(a->a, a->b);
        }
    }
    const auto& c = std::get<CustomBaseDescriptor>(base);
    Graph g = decode_graph6(c.graph6);
    const int p = g.vertex_count();
    if (static_cast<int>(c.labels.size()) != p)
        throw ValidationError("custom base has " + std::to_string(p) + " vertices but " +
                              std::to_string(c.labels.size()) + " labels");
    auto side_addrs = [&](const std::vector<int>& idxs) {
        std::vector<VertexAddress> out;
        for (int i : idxs) {
            if (i < 0 || i >= p)
                throw ValidationError("custom base side index " + std::to_string(i) +
                                      " out of range");
            out.push_back(g.vertices()[i]);
        }
        return out;
    };
    Labeling f0;
    for (int i = 0; i < p; ++i) f0.set(g.vertices()[i], c.labels[i]);
    return AlphaLabeledBase::create(g, side_addrs(c.u_side), side_addrs(c.v_side), f0);
}

// ---------------------------------------------------------------------------
// graph6

namespace {

void append_bits(std::string& out, const std::vector<char>& bits) {
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) {
            value <<= 1;
            if (k + b < bits.size() && bits[k + b]) value |= 1;
        }
        out.push_back(static_cast<char>(value + 63));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 258047) throw ValidationError("graph too large for graph6 encoding");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) {
        int a = g.ordinal(e.first), b = g.ordinal(e.second);
        adj[a][b] = adj[b][a] = 1;
    }
    std::vector<char> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
    append_bits(out, bits);
    return out;
}

Graph decode_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range in '" + text + "'");
    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6 strings beyond 258047 vertices are not supported");
        if (text.size() < 4) throw ParseError("truncated graph6 vertex count");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    const std::size_t need_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need_chars = (need_bits + 5) / 6;
    if (text.size() - pos != need_chars)
        throw ParseError("graph6 string has " + std::to_string(text.size() - pos) +
                         " payload bytes, want " + std::to_string(need_chars));

    std::vector<VertexAddress> verts;
    for (int i = 0; i < n; ++i) verts.push_back(base_u(i + 1));
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int value = text[pos + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.push_back({verts[i], verts[j]});
        }
    // Trailing padding bits must be zero.
    for (std::size_t b = need_bits; b < need_chars * 6; ++b) {
        int value = text[pos + b / 6] - 63;
        if ((value >> (5 - b % 6)) & 1)
            throw ParseError("graph6 padding bits are not zero in '" + text + "'");
    }
    return Graph::create(std::move(verts), std::move(edges));
}

// ---------------------------------------------------------------------------
// documents

bool LabeledGraphDocument::operator==(const LabeledGraphDocument& other) const {
    return spec == other.spec && base == other.base && labeled == other.labeled &&
           certificate.verdict == other.certificate.verdict &&
           certificate.q == other.certificate.q;
}

namespace {

std::string family_params(const ConstructionSpec& spec) {
    std::string out;
    if (spec.t) out += " t=" + std::to_string(*spec.t);
    if (spec.n) out += " n=" + std::to_string(*spec.n);
    return out;
}

}  // namespace

std::string serialize(const LabeledGraphDocument& doc) {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "family " << family_name(doc.spec.family) << family_params(doc.spec) << "\n";
    out << "base " << base_descriptor_text(doc.base) << "\n";
    out << "vertices " << doc.labeled.graph().vertex_count() << "\n";
    out << "edges " << doc.labeled.graph().edge_count() << "\n";
    for (const auto& v : doc.labeled.graph().vertices())
        out << "vertex " << v.to_string() << " " << doc.labeled.labels().at(v) << "\n";
    for (const auto& e : doc.labeled.graph().edges())
        out << "edge " << e.first.to_string() << " " << e.second.to_string() << " "
            << doc.labeled.edge_label(e) << "\n";
    out << "certificate " << verdict_name(doc.certificate.verdict) << " q="
        << doc.certificate.q << "\n";
    out << "end\n";
    return out.str();
}

ParsedDocument parse_document(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.pop_back();

    int lineno = 0;
    auto next = [&]() -> std::vector<std::string> {
        if (lineno >= static_cast<int>(lines.size())) throw ParseError("unexpected end of document");
        const std::string& l = lines[lineno++];
        auto toks = split(l, ' ');
        if (toks.size() == 1 && toks[0].empty())
            throw ParseError("blank line", lineno);
        return toks;
    };
    auto expect = [&](const std::vector<std::string>& toks, const char* keyword,
                      std::size_t ntok) {
        if (toks[0] != keyword || toks.size() != ntok)
            throw ParseError(std::string("expected '") + keyword + "' record", lineno);
    };

    if (lineno >= static_cast<int>(lines.size()) || lines[lineno++] != kHeader)
        throw ParseError("bad header (want '" + std::string(kHeader) + "')", 1);

    auto fam = next();
    if (fam[0] != "family" || fam.size() < 2) throw ParseError("expected 'family' record", lineno);
    ConstructionSpec spec;
    try {
        spec.family = family_from_name(fam[1]);
    } catch (const ValidationError& err) {
        throw ParseError(err.what(), lineno);
    }
    for (std::size_t k = 2; k < fam.size(); ++k) {
        if (fam[k].rfind("t=", 0) == 0) spec.t = parse_int(fam[k].substr(2), "t", lineno);
        else if (fam[k].rfind("n=", 0) == 0) spec.n = parse_int(fam[k].substr(2), "n", lineno);
        else throw ParseError("bad family parameter '" + fam[k] + "'", lineno);
    }

    auto base_line = next();
    expect(base_line, "base", 2);
    BaseDescriptor base = parse_base_descriptor(base_line[1]);

    auto nverts_line = next();
    expect(nverts_line, "vertices", 2);
    int nverts = parse_int(nverts_line[1], "vertex count", lineno);
    auto nedges_line = next();
    expect(nedges_line, "edges", 2);
    int nedges = parse_int(nedges_line[1], "edge count", lineno);
    if (nverts < 0 || nedges < 0) throw ParseError("negative counts", lineno);

    std::vector<VertexAddress> verts;
    Labeling labels;
    for (int k = 0; k < nverts; ++k) {
        auto toks = next();
        expect(toks, "vertex", 3);
        VertexAddress a = VertexAddress::parse(toks[1]);
        labels.set(a, parse_int(toks[2], "vertex label", lineno));
        verts.push_back(a);
    }
    std::vector<Edge> edges;
    std::vector<int> stored;
    for (int k = 0; k < nedges; ++k) {
        auto toks = next();
        expect(toks, "edge", 4);
        edges.push_back({VertexAddress::parse(toks[1]), VertexAddress::parse(toks[2])});
        stored.push_back(parse_int(toks[3], "edge label", lineno));
    }

    auto cert_line = next();
    expect(cert_line, "certificate", 3);
    Certificate cert;
    if (cert_line[1] == "GRACEFUL") cert.verdict = Verdict::Graceful;
    else if (cert_line[1] == "ALPHA-GRACEFUL") cert.verdict = Verdict::AlphaGraceful;
    else if (cert_line[1] == "FAIL") cert.verdict = Verdict::Fail;
    else throw ParseError("unknown verdict '" + cert_line[1] + "'", lineno);
    if (cert_line[2].rfind("q=", 0) != 0) throw ParseError("bad certificate q field", lineno);
    cert.q = parse_int(cert_line[2].substr(2), "certificate q", lineno);

    auto end_line = next();
    if (end_line.size() != 1 || end_line[0] != "end")
        throw ParseError("expected 'end'", lineno);
    if (lineno != static_cast<int>(lines.size()))
        throw ParseError("trailing content after 'end'", lineno + 1);

    ParsedDocument out;
    try {
        Graph g = Graph::create(std::move(verts), std::move(edges));
        out.doc.labeled = LabeledGraph::create(std::move(g), std::move(labels));
    } catch (const ValidationError& err) {
        throw ParseError(err.what());
    }
    out.doc.spec = spec;
    out.doc.base = std::move(base);
    out.doc.certificate = std::move(cert);

    // Tamper check: stored induced labels must match recomputation.
    const auto& g = out.doc.labeled.graph();
    for (int k = 0; k < nedges; ++k) {
        int recomputed = out.doc.labeled.edge_label(g.edges()[k]);
        if (stored[k] != recomputed)
            out.tamper.push_back({Violation::Kind::StoredEdgeMismatch, stored[k], recomputed,
                                  {}, {g.edges()[k]}});
    }
    return out;
}

Certificate verify_document(const ParsedDocument& parsed) {
    Certificate cert = verify_graceful(parsed.doc.labeled);
    for (const auto& v : parsed.tamper) cert.violations.push_back(v);
    if (!cert.violations.empty()) cert.verdict = Verdict::Fail;
    return cert;
}

std::string export_dot(const LabeledGraphDocument& doc) {
    std::ostringstream out;
    out << "graph gracelab {\n";
    out << "  // " << family_name(doc.spec.family) << family_params(doc.spec) << " over "
        << base_descriptor_text(doc.base) << ", q=" << doc.labeled.q() << "\n";
    out << "  node [shape=circle];\n";
    for (const auto& v : doc.labeled.graph().vertices()) {
        out << "  \"" << v.to_string() << "\" [label=\"" << doc.labeled.labels().at(v) << "\"";
        if (v.side == Side::Center) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const auto& e : doc.labeled.graph().edges())
        out << "  \"" << e.first.to_string() << "\" -- \"" << e.second.to_string()
            << "\" [label=\"" << doc.labeled.edge_label(e) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace gracelab
