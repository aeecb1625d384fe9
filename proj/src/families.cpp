// The five compound-family builders and their constructive labelers.  Both
// live here because the cycle-of link skeleton and the star-of spokes are
// chosen by the labeling formulas: a builder that did not know the formulas
// could not place those connector edges.

#include <array>
#include <sstream>

#include "gracelab/label.hpp"

namespace gracelab {

std::string family_name(Family f) {
    switch (f) {
        case Family::PathUnion: return "path-union";
        case Family::OpenStar: return "open-star";
        case Family::OnePointUnionPath: return "one-point-union-path";
        case Family::CycleOf: return "cycle-of";
        case Family::StarOf: return "star-of";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "path-union") return Family::PathUnion;
    if (name == "open-star") return Family::OpenStar;
    if (name == "one-point-union-path") return Family::OnePointUnionPath;
    if (name == "cycle-of") return Family::CycleOf;
    if (name == "star-of") return Family::StarOf;
    throw ValidationError("unknown family '" + name + "'");
}

std::string connector_role_name(ConnectorRole r) {
    switch (r) {
        case ConnectorRole::Chain: return "chain";
        case ConnectorRole::Spoke: return "spoke";
        case ConnectorRole::CycleLink: return "cycle-link";
    }
    return "?";
}

void validate(const ConstructionSpec& spec) {
    auto need = [&](const std::optional<int>& p, const char* name, int lo) {
        if (!p)
            throw ValidationError(family_name(spec.family) + " requires parameter " + name);
        if (*p < lo)
            throw ValidationError(family_name(spec.family) + " requires " + name +
                                  " >= " + std::to_string(lo) + ", got " + std::to_string(*p));
    };
    switch (spec.family) {
        case Family::PathUnion:
            need(spec.n, "n", 1);
            break;
        case Family::OpenStar:
            need(spec.t, "t", 1);
            break;
        case Family::OnePointUnionPath:
            need(spec.t, "t", 1);
            need(spec.n, "n", 1);
            break;
        case Family::CycleOf:
            need(spec.t, "t", 2);
            if (*spec.t % 2 != 0)
                throw ValidationError("cycle-of requires even t, got " + std::to_string(*spec.t));
            break;
        case Family::StarOf:
            break;
    }
}

namespace {

// Per-copy label tables, 1-based: cu[l][i] is the label of u_i in copy l.
using Table = std::vector<std::vector<int>>;

Table make_table(int max_copy, int width) {
    return Table(max_copy + 1, std::vector<int>(width + 1, 0));
}

struct Assembly {
    std::vector<VertexAddress> verts;
    std::vector<Edge> edges;
    std::vector<Connector> connectors;
    Labeling labels;

    // One full copy of the base: vertices u_1..u_m, v_1..v_r plus the base's
    // edges, re-addressed into (branch, copy).
    void add_copy(const AlphaLabeledBase& base, std::optional<int> branch, int copy,
                  const std::vector<int>& ulab, const std::vector<int>& vlab) {
        for (int i = 1; i <= base.m(); ++i) {
            VertexAddress a{branch, copy, Side::U, i};
            verts.push_back(a);
            labels.set(a, ulab[i]);
        }
        for (int j = 1; j <= base.r(); ++j) {
            VertexAddress a{branch, copy, Side::V, j};
            verts.push_back(a);
            labels.set(a, vlab[j]);
        }
        for (const auto& e : base.graph().edges())
            edges.push_back({{branch, copy, e.first.side, e.first.index},
                             {branch, copy, e.second.side, e.second.index}});
    }

    void add_hub(int label) {
        verts.insert(verts.begin(), center());
        labels.set(center(), label);
    }

    void connect(VertexAddress a, VertexAddress b, ConnectorRole role) {
        connectors.push_back({{a, b}, role});
    }

    Compound finish(ConstructionSpec spec, int copy_count) {
        for (const auto& c : connectors) edges.push_back(c.edge);
        return {Graph::create(std::move(verts), std::move(edges)), spec, std::move(connectors),
                copy_count};
    }
};

struct Plan {
    Compound compound;
    Labeling labels;
};

// --- path-union: n copies in a row, consecutive copies joined v_1 -- u_1 ---

Plan plan_path_union(const AlphaLabeledBase& base, int n) {
    const int m = base.m(), r = base.r(), q0 = base.q0();
    const int q = n * (q0 + 1) - 1;

    Table cu = make_table(n, m), cv = make_table(n, r);
    for (int i = 1; i <= m; ++i) cu[1][i] = base.u_label(i);
    for (int j = 1; j <= r; ++j) cv[1][j] = q - q0 + base.v_label(j);
    for (int l = 2; l <= n; ++l) {
        for (int i = 1; i <= m; ++i) cu[l][i] = cu[l - 1][m] + base.u_label(i) + 1;
        for (int j = 1; j <= r; ++j) cv[l][j] = cv[l - 1][1] + base.v_label(j) - q0 - 1;
    }

    Assembly a;
    for (int l = 1; l <= n; ++l) a.add_copy(base, std::nullopt, l, cu[l], cv[l]);
    for (int l = 1; l < n; ++l) a.connect(copy_v(l, 1), copy_u(l + 1, 1), ConnectorRole::Chain);
    ConstructionSpec spec{Family::PathUnion, std::nullopt, n};
    return {a.finish(spec, n), std::move(a.labels)};
}

// --- open-star: hub joined to v_r of each of t copies ---

Plan plan_open_star(const AlphaLabeledBase& base, int t) {
    const int m = base.m(), r = base.r(), q0 = base.q0();
    const int q = t * (q0 + 1);

    Table cu = make_table(t, m), cv = make_table(t, r);
    for (int i = 1; i <= m; ++i) cu[1][i] = base.u_label(i) + 1;
    for (int j = 1; j <= r; ++j) cv[1][j] = q - q0 + base.v_label(j);
    if (t >= 2) {
        for (int i = 1; i <= m; ++i) cu[2][i] = cu[1][i] + (q - q0 - 1);
        for (int j = 1; j <= r; ++j) cv[2][j] = cv[1][j] - (q - q0 - 1);
    }
    for (int l = 3; l <= t; ++l) {
        int sgn = l % 2 == 0 ? 1 : -1;
        for (int i = 1; i <= m; ++i) cu[l][i] = cu[l - 2][i] - sgn * (q0 + 1);
        for (int j = 1; j <= r; ++j) cv[l][j] = cv[l - 2][j] + sgn * (q0 + 1);
    }

    Assembly a;
    a.add_hub(0);
    for (int l = 1; l <= t; ++l) a.add_copy(base, std::nullopt, l, cu[l], cv[l]);
    for (int l = 1; l <= t; ++l) a.connect(center(), copy_v(l, r), ConnectorRole::Spoke);
    ConstructionSpec spec{Family::OpenStar, t, std::nullopt};
    return {a.finish(spec, t), std::move(a.labels)};
}

// --- one-point union for path: t branches of n chained copies, all branches
// --- hanging off one hub ---

Plan plan_one_point(const AlphaLabeledBase& base, int t, int n) {
    const int m = base.m(), r = base.r(), q0 = base.q0();
    const int qf = n * (q0 + 1) - 1;  // edge count of one chained branch
    const int Q = t * n * (q0 + 1);

    // Stage one: label a single branch exactly like a path-union.
    Table fu = make_table(n, m), fv = make_table(n, r);
    for (int i = 1; i <= m; ++i) fu[1][i] = base.u_label(i);
    for (int j = 1; j <= r; ++j) fv[1][j] = qf - q0 + base.v_label(j);
    for (int l = 2; l <= n; ++l) {
        for (int i = 1; i <= m; ++i) fu[l][i] = fu[l - 1][m] + base.u_label(i) + 1;
        for (int j = 1; j <= r; ++j) fv[l][j] = fv[l - 1][1] + base.v_label(j) - q0 - 1;
    }

    // Stage two: shift the branch copies apart around the hub.
    std::vector<Table> gu(t + 1), gv(t + 1);
    for (int s = 1; s <= t; ++s) {
        gu[s] = make_table(n, m);
        gv[s] = make_table(n, r);
    }
    for (int l = 1; l <= n; ++l) {
        for (int i = 1; i <= m; ++i) gu[1][l][i] = fu[l][i] + 1;
        for (int j = 1; j <= r; ++j) gv[1][l][j] = fv[l][j] + (Q - qf);
    }
    if (t >= 2) {
        for (int l = 1; l <= n; ++l) {
            for (int i = 1; i <= m; ++i) gu[2][l][i] = gu[1][l][i] + (Q - qf - 1);
            for (int j = 1; j <= r; ++j) gv[2][l][j] = gv[1][l][j] - (Q - qf - 1);
        }
    }
    for (int s = 3; s <= t; ++s) {
        int sgn = s % 2 == 0 ? 1 : -1;
        for (int l = 1; l <= n; ++l) {
            for (int i = 1; i <= m; ++i) gu[s][l][i] = gu[s - 2][l][i] - sgn * (qf + 1);
            for (int j = 1; j <= r; ++j) gv[s][l][j] = gv[s - 2][l][j] + sgn * (qf + 1);
        }
    }

    Assembly a;
    a.add_hub(0);
    for (int s = 1; s <= t; ++s)
        for (int l = 1; l <= n; ++l) a.add_copy(base, s, l, gu[s][l], gv[s][l]);
    for (int s = 1; s <= t; ++s)
        for (int l = 1; l < n; ++l)
            a.connect(branch_v(s, l, 1), branch_u(s, l + 1, 1), ConnectorRole::Chain);
    // The hub attaches to v_r of the first copy of each branch (attaching to
    // u_1 instead makes edge labels collide already for the smallest base).
    for (int s = 1; s <= t; ++s) a.connect(center(), branch_v(s, 1, r), ConnectorRole::Spoke);
    ConstructionSpec spec{Family::OnePointUnionPath, t, n};
    return {a.finish(spec, t * n), std::move(a.labels)};
}

// --- cycle-of: t copies (t even) joined in a ring ---

// The second half of the scheme admits several a-priori-plausible readings;
// they are enumerated here and settled once per process against the verifier
// (see calibrated variant note in label.hpp).
struct CycleVariant {
    int vref;   // label source for v in copy t/2+1: 0 = u_{t/2,m}, 1 = u_{t/2+1,m}
    int uref2;  // label source for u in copies > t/2+1: 0 = u_{l-1,1}, 1 = u_{l-1,m}
    int vref2;  // label source for v in copies > t/2+1: 0 = v_{l-1,r}, 1 = v_{l-1,1}
    int mid;    // midpoint link endpoints: 0 = v-v, 1 = v-u, 2 = u-v, 3 = u-u
    int close;  // closing link endpoints: 0 = u-u, 1 = v-u, 2 = u-v, 3 = v-v

    std::string name() const {
        static const char* vrefs[] = {"u_half_m", "u_next_m"};
        static const char* urefs[] = {"first", "last"};
        static const char* vrefs2[] = {"last", "first"};
        static const char* mids[] = {"vv", "vu", "uv", "uu"};
        static const char* closes[] = {"uu", "vu", "uv", "vv"};
        return std::string("vref=") + vrefs[vref] + ",u2=" + urefs[uref2] +
               ",v2=" + vrefs2[vref2] + ",mid=" + mids[mid] + ",close=" + closes[close];
    }
};

std::vector<CycleVariant> cycle_variant_pool() {
    std::vector<CycleVariant> pool;
    for (int vref = 0; vref < 2; ++vref)
        for (int uref2 = 0; uref2 < 2; ++uref2)
            for (int vref2 = 0; vref2 < 2; ++vref2)
                for (int mid = 0; mid < 4; ++mid)
                    for (int close = 0; close < 4; ++close)
                        pool.push_back({vref, uref2, vref2, mid, close});
    return pool;
}

Plan plan_cycle_of(const AlphaLabeledBase& base, int t, const CycleVariant& var) {
    const int m = base.m(), r = base.r(), q0 = base.q0();
    const int q = t * (q0 + 1);
    const int h = t / 2;

    Table cu = make_table(t, m), cv = make_table(t, r);
    for (int i = 1; i <= m; ++i) cu[1][i] = base.u_label(i);
    for (int j = 1; j <= r; ++j) cv[1][j] = q - base.v_label(r) + base.v_label(j);
    for (int l = 2; l <= h; ++l) {
        for (int i = 1; i <= m; ++i) cu[l][i] = cu[l - 1][m] + 1 + base.u_label(i);
        for (int j = 1; j <= r; ++j)
            cv[l][j] = cv[l - 1][1] - 1 - base.v_label(r) + base.v_label(j);
    }
    for (int i = 1; i <= m; ++i) cu[h + 1][i] = cv[h][1] - 2 - base.u_label(m) + base.u_label(i);
    int vseed = var.vref == 0 ? cu[h][m] : cu[h + 1][m];
    for (int j = 1; j <= r; ++j)
        cv[h + 1][j] = vseed + 1 - base.v_label(1) + base.v_label(j);
    for (int l = h + 2; l <= t; ++l) {
        int useed = var.uref2 == 0 ? cu[l - 1][1] : cu[l - 1][m];
        for (int i = 1; i <= m; ++i) cu[l][i] = useed - 1 - base.u_label(m) + base.u_label(i);
        int vseed2 = var.vref2 == 0 ? cv[l - 1][r] : cv[l - 1][1];
        for (int j = 1; j <= r; ++j) cv[l][j] = vseed2 + 1 - base.v_label(1) + base.v_label(j);
    }

    Assembly a;
    for (int l = 1; l <= t; ++l) a.add_copy(base, std::nullopt, l, cu[l], cv[l]);
    auto end = [](int copy, bool u_end) { return u_end ? copy_u(copy, 1) : copy_v(copy, 1); };
    // Ring: ascending v-u links up the first half, a calibrated midpoint
    // link, descending u-v links down the second half, a calibrated closer.
    for (int l = 1; l < h; ++l) a.connect(copy_v(l, 1), copy_u(l + 1, 1), ConnectorRole::CycleLink);
    static const std::array<std::pair<bool, bool>, 4> mid_ends = {
        {{false, false}, {false, true}, {true, false}, {true, true}}};
    static const std::array<std::pair<bool, bool>, 4> close_ends = {
        {{true, true}, {false, true}, {true, false}, {false, false}}};
    a.connect(end(h, mid_ends[var.mid].first), end(h + 1, mid_ends[var.mid].second),
              ConnectorRole::CycleLink);
    for (int l = h + 1; l < t; ++l)
        a.connect(copy_u(l, 1), copy_v(l + 1, 1), ConnectorRole::CycleLink);
    a.connect(end(t, close_ends[var.close].first), end(1, close_ends[var.close].second),
              ConnectorRole::CycleLink);
    ConstructionSpec spec{Family::CycleOf, t, std::nullopt};
    return {a.finish(spec, t), std::move(a.labels)};
}

const CycleVariant& calibrated_variant_impl() {
    static const CycleVariant chosen = [] {
        struct Instance {
            AlphaLabeledBase base;
            int t;
            const char* name;
        };
        const std::vector<Instance> calibration = {
            {base_path(2), 2, "P2 t=2"},          {base_path(2), 4, "P2 t=4"},
            {base_path(4), 2, "P4 t=2"},          {base_path(4), 4, "P4 t=4"},
            {base_complete_bipartite(2, 2), 2, "K22 t=2"},
            {base_complete_bipartite(2, 2), 4, "K22 t=4"},
        };
        std::ostringstream misses;
        for (const CycleVariant& var : cycle_variant_pool()) {
            bool all_ok = true;
            for (const auto& inst : calibration) {
                Plan plan = plan_cycle_of(inst.base, inst.t, var);
                auto cert = verify_graceful(
                    LabeledGraph::create(std::move(plan.compound.graph), std::move(plan.labels)));
                if (!cert.ok()) {
                    misses << "  " << var.name() << " fails " << inst.name << ": "
                           << cert.violations.front().describe() << "\n";
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) return var;
        }
        throw LabelingError(
            "cycle-of calibration failed: no candidate variant verifies on all "
            "calibration instances\n" + misses.str(),
            Certificate{});
    }();
    return chosen;
}

// --- star-of: one central copy plus p0 outer copies, one spoke each ---

Plan plan_star_of(const AlphaLabeledBase& base) {
    const int m = base.m(), r = base.r(), q0 = base.q0();
    const int p0 = base.p0();
    const int q = (p0 + 1) * q0 + p0;

    // Copy 0 is the central copy.
    Table cu = make_table(p0, m), cv = make_table(p0, r);
    for (int i = 1; i <= m; ++i) cu[0][i] = base.u_label(i);
    for (int j = 1; j <= r; ++j) cv[0][j] = q - base.v_label(r) + base.v_label(j);
    for (int i = 1; i <= m; ++i) cu[1][i] = cv[0][1] - 1 - base.u_label(m) + base.u_label(i);
    for (int j = 1; j <= r; ++j) cv[1][j] = base.v_label(j);
    for (int l = 2; l <= p0; ++l) {
        int sgn = l % 2 == 0 ? 1 : -1;
        for (int i = 1; i <= m; ++i) cu[l][i] = cu[l - 2][i] + sgn * (q0 + 1);
        for (int j = 1; j <= r; ++j) cv[l][j] = cv[l - 2][j] - sgn * (q0 + 1);
    }

    Assembly a;
    for (int l = 0; l <= p0; ++l) a.add_copy(base, std::nullopt, l, cu[l], cv[l]);

    // Spoke differences alternate largest remaining / smallest remaining
    // multiple of q0+1; the copy labels make each difference realizable by
    // at least one (central vertex, outer vertex) pair.  Non-spoke edges
    // never hit a multiple of q0+1, so the spokes complete {1..q} exactly.
    auto label_of = [&](int copy, Side side, int idx) {
        return side == Side::U ? cu[copy][idx] : cv[copy][idx];
    };
    for (int l = 1; l <= p0; ++l) {
        int d = (l % 2 == 1) ? (p0 - (l - 1) / 2) * (q0 + 1) : (l / 2) * (q0 + 1);
        bool placed = false;
        for (int ci = 1; ci <= m + r && !placed; ++ci) {
            Side cside = ci <= m ? Side::U : Side::V;
            int cidx = ci <= m ? ci : ci - m;
            for (int oi = 1; oi <= m + r && !placed; ++oi) {
                Side oside = oi <= m ? Side::U : Side::V;
                int oidx = oi <= m ? oi : oi - m;
                int diff = label_of(0, cside, cidx) - label_of(l, oside, oidx);
                if (diff < 0) diff = -diff;
                if (diff == d) {
                    a.connect(VertexAddress{std::nullopt, 0, cside, cidx},
                              VertexAddress{std::nullopt, l, oside, oidx}, ConnectorRole::Spoke);
                    placed = true;
                }
            }
        }
        if (!placed)
            throw LabelingError("star-of spoke difference " + std::to_string(d) +
                                    " unrealizable for copy " + std::to_string(l),
                                Certificate{});
    }
    ConstructionSpec spec{Family::StarOf, std::nullopt, std::nullopt};
    return {a.finish(spec, p0 + 1), std::move(a.labels)};
}

// --- shared tails ---

Plan make_plan(const ConstructionSpec& spec, const AlphaLabeledBase& base) {
    validate(spec);
    switch (spec.family) {
        case Family::PathUnion: return plan_path_union(base, *spec.n);
        case Family::OpenStar: return plan_open_star(base, *spec.t);
        case Family::OnePointUnionPath: return plan_one_point(base, *spec.t, *spec.n);
        case Family::CycleOf: return plan_cycle_of(base, *spec.t, calibrated_variant_impl());
        case Family::StarOf: return plan_star_of(base);
    }
    throw ValidationError("unknown family");
}

std::string variant_of(Family family) {
    switch (family) {
        case Family::PathUnion: return "block-shift";
        case Family::OpenStar: return "alternating-hub";
        case Family::OnePointUnionPath: return "two-stage";
        case Family::CycleOf: return calibrated_variant_impl().name();
        case Family::StarOf: return "alternating-diff";
    }
    return "?";
}

LabelerReport finish_report(Plan plan, Family family) {
    auto lg = LabeledGraph::create(plan.compound.graph, std::move(plan.labels));
    Certificate cert = verify_graceful(lg);
    if (!cert.ok())
        throw LabelingError(family_name(family) + " labeler produced a non-graceful labeling",
                            cert);
    return {std::move(plan.compound), std::move(lg), variant_of(family), std::move(cert)};
}

}  // namespace

Compound build_path_union(const AlphaLabeledBase& base, int n) {
    return build({Family::PathUnion, std::nullopt, n}, base);
}
Compound build_open_star(const AlphaLabeledBase& base, int t) {
    return build({Family::OpenStar, t, std::nullopt}, base);
}
Compound build_one_point_union_path(const AlphaLabeledBase& base, int t, int n) {
    return build({Family::OnePointUnionPath, t, n}, base);
}
Compound build_cycle_of(const AlphaLabeledBase& base, int t) {
    return build({Family::CycleOf, t, std::nullopt}, base);
}
Compound build_star_of(const AlphaLabeledBase& base) {
    return build({Family::StarOf, std::nullopt, std::nullopt}, base);
}

Compound build(const ConstructionSpec& spec, const AlphaLabeledBase& base) {
    return make_plan(spec, base).compound;
}

LabelerReport label_path_union(const AlphaLabeledBase& base, int n) {
    return label({Family::PathUnion, std::nullopt, n}, base);
}
LabelerReport label_open_star(const AlphaLabeledBase& base, int t) {
    return label({Family::OpenStar, t, std::nullopt}, base);
}
LabelerReport label_one_point_union_path(const AlphaLabeledBase& base, int t, int n) {
    return label({Family::OnePointUnionPath, t, n}, base);
}
LabelerReport label_cycle_of(const AlphaLabeledBase& base, int t) {
    return label({Family::CycleOf, t, std::nullopt}, base);
}
LabelerReport label_star_of(const AlphaLabeledBase& base) {
    return label({Family::StarOf, std::nullopt, std::nullopt}, base);
}

LabelerReport label(const ConstructionSpec& spec, const AlphaLabeledBase& base) {
    return finish_report(make_plan(spec, base), spec.family);
}

const std::string& calibrated_cycle_variant() {
    static const std::string name = calibrated_variant_impl().name();
    return name;
}

}  // namespace gracelab
