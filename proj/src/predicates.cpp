#include "gauge/predicates.hpp"

#include <algorithm>
#include <map>

namespace gauge {

namespace {

void need_gauge(const Body& C) {
    require(C.full_dim(), errc::degenerate_gauge, "gauge body must be full-dimensional");
}

bool body_subset(const Body& inner, const Body& outer) {
    for (const auto& v : inner.vrep().vertices)
        if (!contains(outer, v)) return false;
    return true;
}

// Keeps 0 in conv{normals} while shrinking the support to an affinely
// independent set; ends with 2 <= m <= n+1 entries.
void caratheodory_reduce(std::vector<Vec>& points, std::vector<Vec>& normals,
                         std::vector<Scalar>& coeffs) {
    const std::size_t n = normals.empty() ? 0 : normals[0].size();
    while (true) {
        const std::size_t m = normals.size();
        Mat A(n + 1, Vec(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t d = 0; d < n; ++d) A[d][i] = normals[i][d];
            A[n][i] = 1;
        }
        auto ns = null_space(A);
        if (ns.empty()) return;
        Vec g = ns[0];
        bool has_pos = false;
        for (const auto& x : g) has_pos |= (x > 0);
        if (!has_pos)
            for (auto& x : g) x = -x;
        std::optional<Scalar> t;
        for (std::size_t i = 0; i < m; ++i)
            if (g[i] > 0) {
                Scalar r = coeffs[i] / g[i];
                if (!t || r < *t) t = r;
            }
        std::vector<Vec> np, nn;
        std::vector<Scalar> nc;
        for (std::size_t i = 0; i < m; ++i) {
            Scalar c = coeffs[i] - *t * g[i];
            if (c == 0) continue;
            np.push_back(std::move(points[i]));
            nn.push_back(std::move(normals[i]));
            nc.push_back(std::move(c));
        }
        points = std::move(np);
        normals = std::move(nn);
        coeffs = std::move(nc);
    }
}

// Dual of the facet-description circumradius LP at an optimum of 1: the
// positive multipliers mark (vertex, facet) touching pairs and their
// normals already balance to zero.
ContainmentCertificate extract_certificate(const Body& K, const Body& C) {
    CircumHrepResult cr = circumradius_hrep(K, C);
    require(cr.radius == 1, errc::internal, "certificate extraction needs R = 1");

    const auto& kv = K.vrep().vertices;
    const auto& fac = C.hrep().halfspaces;
    const Vec& y = *cr.lp.dual;

    ContainmentCertificate cert;
    Vec weights;
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r] == 0) continue;
        Scalar u = -y[r]; // minimize convention: y <= 0 on <=-rows
        require(u > 0, errc::internal, "dual sign in certificate extraction");
        auto [i, j] = cr.row_pairs[r];
        const Vec& p = kv[i];
        const Halfspace& f = fac[j];
        require(dot(f.normal, p) == f.offset, errc::internal, "touch point misses gauge facet");
        require(support_value(K, f.normal) == f.offset, errc::internal,
                "touch normal does not support the inner body");
        cert.points.push_back(p);
        cert.normals.push_back(f.normal);
        weights.push_back(u);
    }
    // Normalize the weights into convex coefficients.
    Scalar total = 0;
    for (const auto& w : weights) total += w;
    require(total > 0, errc::internal, "empty certificate support");
    for (auto& w : weights) w /= total;
    cert.coefficients = std::move(weights);
    caratheodory_reduce(cert.points, cert.normals, cert.coefficients);
    verify_certificate(K, C, cert);
    return cert;
}

} // namespace

HPolytope translated_hrep(const Body& B, const Vec& v) {
    HPolytope h = B.hrep();
    for (auto& hs : h.halfspaces) hs.offset += dot(hs.normal, v);
    return h;
}

void verify_certificate(const Body& K, const Body& C, const ContainmentCertificate& cert) {
    const std::size_t m = cert.size();
    const std::size_t n = K.ambient_dim();
    require(m >= 2 && m <= n + 1, errc::internal, "certificate size out of range");
    require(cert.normals.size() == m && cert.coefficients.size() == m, errc::internal,
            "certificate field sizes");
    Scalar total = 0;
    Vec combo = zero_vec(n);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& p = cert.points[i];
        const Vec& a = cert.normals[i];
        require(contains(K, p) && contains(C, p), errc::internal,
                "certificate point outside a body");
        Scalar h = dot(a, p);
        require(support_value(K, a) == h, errc::internal, "normal does not support K at p");
        require(support_value(C, a) == h, errc::internal, "normal does not support C at p");
        require(cert.coefficients[i] > 0, errc::internal, "certificate coefficient sign");
        total += cert.coefficients[i];
        combo = add(combo, scaled(a, cert.coefficients[i]));
    }
    require(total == 1, errc::internal, "certificate coefficients do not sum to 1");
    require(is_zero_vec(combo), errc::internal, "certificate normals do not balance");
}

OptimalContainment optimal_containment(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "optimal_containment");
    require(K.full_dim() && C.full_dim(), errc::degenerate_body,
            "optimal containment needs full-dimensional bodies");
    require(body_subset(K, C), errc::not_contained, "K is not contained in C");

    CircumResult cr = circumradius(K, C);
    OptimalContainment out;
    if (cr.radius < 1) {
        out.optimal = false;
        out.shrink = cr.radius;
        return out;
    }
    require(cr.radius == 1, errc::internal, "contained body with circumradius > 1");
    out.optimal = true;
    out.certificate = extract_certificate(K, C);
    return out;
}

ConstantWidthReport is_constant_width(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "is_constant_width");
    need_gauge(C);
    Scalar D = diameter(K, C).value;
    Scalar rho = D / 2;
    Body KK = central_symmetral(K);
    Body CC = central_symmetral(C);
    ConstantWidthReport rep;
    if (equal_sets(KK, scale_reflect(CC, rho))) {
        rep.is_cw = true;
        rep.rho = rho;
        return rep;
    }
    rep.is_cw = false;
    std::optional<Vec> dir;
    for (const auto& hs : KK.hrep().halfspaces) {
        if (support_value(KK, hs.normal) < rho * support_value(CC, hs.normal)) {
            if (!dir || lex_less(hs.normal, *dir)) dir = hs.normal;
        }
    }
    require(dir.has_value(), errc::internal, "no breadth-deficient direction found");
    rep.failing_direction = std::move(*dir);
    return rep;
}

CompletenessResult is_complete(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "is_complete");
    need_gauge(C);
    Scalar D = diameter(K, C).value;
    Body ball = scale_reflect(central_symmetral(C), D / 2);
    std::vector<HPolytope> parts;
    parts.reserve(K.vrep().vertices.size());
    for (const auto& v : K.vrep().vertices) parts.push_back(translated_hrep(ball, v));
    auto inter = intersect_many(parts);
    require(inter.has_value(), errc::internal, "spherical intersection came out empty");

    CompletenessResult res;
    for (const auto& v : inter->vrep().vertices) {
        if (membership(K, v) == Location::outside) {
            res.complete = false;
            res.extension_witness = v; // vertices are lex-sorted: first hit is lex-min
            return res;
        }
    }
    res.complete = true;
    return res;
}

bool is_pseudo_complete(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "is_pseudo_complete");
    need_gauge(C);
    Body Cs = half_symmetral(C);
    Scalar D = diameter(K, Cs).value;
    Scalar R = circumradius(K, Cs).radius;
    Scalar r = inradius(K, Cs).radius;
    return D == r + R;
}

SimplexReducedReport is_reduced_simplex(const Body& S, const Body& C) {
    require(S.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "is_reduced_simplex");
    const int n = S.ambient_dim();
    require(S.full_dim() && S.vrep().vertices.size() == static_cast<std::size_t>(n) + 1,
            errc::not_a_simplex, "expected an n-simplex");
    need_gauge(C);

    Body Cp = central_symmetral(C); // reducedness transfers to C - C exactly
    Scalar wp = width(S, Cp).value;
    Body W = scale_reflect(Cp, wp);
    Body SS = central_symmetral(S);

    SimplexReducedReport rep;
    rep.contained = body_subset(W, SS);

    // Facet normals of S-S parallel to outer normals of +-S.
    std::vector<Vec> wanted;
    for (const auto& hs : S.hrep().halfspaces) {
        wanted.push_back(hs.normal);
        wanted.push_back(canonical_halfspace(negated(hs.normal), Scalar(0)).normal);
    }
    std::sort(wanted.begin(), wanted.end(), VecLexLess{});

    bool all_touch = true;
    std::size_t matched = 0;
    for (const auto& hs : SS.hrep().halfspaces) {
        if (!std::binary_search(wanted.begin(), wanted.end(), hs.normal, VecLexLess{})) continue;
        ++matched;
        bool touch = support_value(W, hs.normal) == hs.offset;
        all_touch &= touch;
        rep.facet_touch.emplace_back(hs.normal, touch);
    }
    require(matched == 2 * static_cast<std::size_t>(n) + 2, errc::internal,
            "simplex-parallel facets of S-S miscounted");
    rep.reduced = rep.contained && all_touch;
    return rep;
}

ReducedNecessaryReport reduced_necessary(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "reduced_necessary");
    need_gauge(C);
    Scalar w = width(K, C).value;
    Body KK = central_symmetral(K);
    Body CC = central_symmetral(C);

    // Any width-attaining segment through a vertex yields a width-attaining
    // facet normal of K-K supporting at that vertex, so scanning facet
    // normals is exhaustive.
    std::vector<Vec> width_dirs;
    for (const auto& hs : KK.hrep().halfspaces)
        if (breadth(K, C, hs.normal) == w) width_dirs.push_back(hs.normal);

    ReducedNecessaryReport rep;
    bool all = true;
    for (const auto& x : K.vrep().vertices) {
        bool pass = false;
        for (const auto& a : width_dirs) {
            if (dot(a, x) == support_value(K, a)) {
                pass = true;
                break;
            }
        }
        all &= pass;
        rep.vertex_pass.emplace_back(x, pass);
    }

    Body gauge_scaled = scale_reflect(CC, w / 2);
    bool verts_ok = true;
    for (const auto& v : gauge_scaled.vrep().vertices) {
        bool on_bd = membership(KK, v) == Location::boundary;
        verts_ok &= on_bd;
        rep.gauge_vertex_flags.emplace_back(v, on_bd);
    }
    rep.gauge_vertices_on_boundary = verts_ok;
    rep.passes = all && verts_ok;
    return rep;
}

StructureReport complete_structure_check(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch,
            "complete_structure_check");
    need_gauge(C);
    require(is_complete(K, C).complete, errc::not_complete,
            "structure check needs a complete body");

    Body CC = central_symmetral(C);
    Scalar D = diameter(K, C).value;
    StructureReport rep;

    std::vector<Vec> cc_normals;
    for (const auto& hs : CC.hrep().halfspaces) cc_normals.push_back(hs.normal);
    std::sort(cc_normals.begin(), cc_normals.end(), VecLexLess{});

    rep.normals_subset = true;
    rep.breadths_attained = true;
    for (const auto& hs : K.hrep().halfspaces) {
        rep.normals_subset &=
            std::binary_search(cc_normals.begin(), cc_normals.end(), hs.normal, VecLexLess{});
        rep.breadths_attained &= breadth(K, C, hs.normal) == D;
        rep.attained_directions.push_back(hs.normal);
    }

    // Slab representation: for each +-pair of C-C facet normals, a slab of
    // width (D/2) h(C-C, a) centered at tau_a along a.
    std::vector<Halfspace> slabs;
    for (const auto& hs : CC.hrep().halfspaces) {
        Vec neg = canonical_halfspace(negated(hs.normal), Scalar(0)).normal;
        if (lex_less(neg, hs.normal)) continue; // one slab per pair
        Scalar tau = (support_value(K, hs.normal) - support_value(K, negated(hs.normal))) / 2;
        Scalar half_width = D * hs.offset / 4; // (D/2) * h(C-C, a)/2
        slabs.push_back(canonical_halfspace(hs.normal, tau + half_width));
        slabs.push_back(canonical_halfspace(negated(hs.normal), -tau + half_width));
        rep.anchors.emplace_back(hs.normal, scaled(hs.normal, tau / dot(hs.normal, hs.normal)));
    }
    auto inter = intersect_many({HPolytope{std::move(slabs), K.ambient_dim()}});
    rep.representation_equal = inter.has_value() && equal_sets(*inter, K);
    return rep;
}

namespace {

void need_centered_simplex(const Body& S) {
    const int n = S.ambient_dim();
    require(S.full_dim() && S.vrep().vertices.size() == static_cast<std::size_t>(n) + 1,
            errc::not_a_simplex, "expected an n-simplex");
    AsymmetryReport rep = asymmetry(S);
    require(is_zero_vec(rep.minkowski_center), errc::not_centered,
            "simplex must be Minkowski-centered");
    require(rep.s == n, errc::internal, "simplex asymmetry is not n");
}

} // namespace

TcompleteReport verify_tcomplete(const Body& S, const Body& C) {
    require(S.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "verify_tcomplete");
    need_gauge(C);
    need_centered_simplex(S);
    const int n = S.ambient_dim();

    Body Cs = half_symmetral(C);
    Scalar D = diameter(S, Cs).value;
    Scalar R = circumradius(S, Cs).radius;
    Scalar r = inradius(S, Cs).radius;

    TcompleteReport rep;
    rep.pseudo = (D == r + R);

    Body SS = central_symmetral(S);
    Body DC = scale_reflect(Cs, D);
    auto cap = intersect(S.hrep(), scale_reflect(S, Scalar(-1)).hrep());
    require(cap.has_value(), errc::internal, "S cap -S empty for a centered simplex");
    Body O = scale_reflect(*cap, Scalar(n + 1));
    rep.sandwich = body_subset(SS, DC) && body_subset(DC, O);

    rep.complete = is_complete(S, Cs).complete;
    rep.bohnenblust = (R * Scalar(n + 1) == D * Scalar(n));
    rep.agreement = (rep.pseudo == rep.sandwich && rep.sandwich == rep.complete &&
                     rep.complete == rep.bohnenblust);
    return rep;
}

LeichtweissReport verify_leichtweiss(const Body& S, const Body& C) {
    require(S.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "verify_leichtweiss");
    need_gauge(C);
    need_centered_simplex(S);
    const int n = S.ambient_dim();

    LeichtweissReport rep;
    rep.w = width(S, C).value;
    rep.r = inradius(S, C).radius;
    rep.ratio = (rep.w == Scalar(n + 1) * rep.r);

    Body minusS = scale_reflect(S, Scalar(-1));
    Body A = scale_reflect(conv_union(S, minusS), Scalar(1) + Scalar(1) / Scalar(n));
    Body WC = scale_reflect(C, rep.w);
    Body SS = central_symmetral(S);

    bool chain = body_subset(A, WC) && body_subset(WC, SS);

    // Touching points prescribed by the containment chain certificate of
    // -S in nS; for a simplex the certificate covers all n+1 facets.
    bool touching = chain;
    if (chain) {
        ContainmentCertificate cert = extract_certificate(minusS, scale_reflect(S, Scalar(n)));
        require(cert.size() == static_cast<std::size_t>(n) + 1, errc::internal,
                "simplex chain certificate must use all facets");
        for (std::size_t i = 0; i < cert.size(); ++i) {
            Vec p = negated(cert.points[i]); // vertex of S
            Vec q = scaled(p, Scalar(1) + Scalar(1) / Scalar(n));
            Vec mnormal = negated(cert.normals[i]);
            touching &= (dot(mnormal, q) == support_value(SS, mnormal));
        }
    }
    rep.sandwich = touching;
    rep.agreement = (rep.ratio == rep.sandwich);
    return rep;
}

AsymContReport verify_asymcont(const Body& P) {
    require(P.full_dim(), errc::degenerate_body, "verify_asymcont needs a full-dimensional body");

    AsymmetryReport pre = asymmetry(P);
    AsymContReport rep;
    rep.applied_centering = negated(pre.minkowski_center);
    Body Pc = translate(P, rep.applied_centering);
    rep.s = pre.s;

    Body minusP = scale_reflect(Pc, Scalar(-1));
    Scalar inner_factor = Scalar(1) + Scalar(1) / rep.s;
    rep.inner = scale_reflect(conv_union(Pc, minusP), inner_factor);
    rep.middle = central_symmetral(Pc);
    auto cap = intersect(Pc.hrep(), minusP.hrep());
    require(cap.has_value(), errc::internal, "P cap -P empty after centering");
    rep.outer = scale_reflect(*cap, rep.s + 1);

    rep.chain_ok = body_subset(rep.inner, rep.middle) && body_subset(rep.middle, rep.outer);

    OptimalContainment oc1 = optimal_containment(rep.inner, rep.middle);
    OptimalContainment oc2 = optimal_containment(rep.middle, rep.outer);
    require(oc1.optimal && oc2.optimal, errc::internal, "chain containment is not optimal");
    rep.inner_cert = *oc1.certificate;
    rep.outer_cert = *oc2.certificate;

    // 0-centered position is optimal for -P in s P; its certificate pairs
    // (vertex of -P, facet normal of P) drive the incidence pattern.
    ContainmentCertificate cert = extract_certificate(minusP, scale_reflect(Pc, rep.s));

    auto middle_facets = rep.middle.hrep();
    auto outer_facets = rep.outer.hrep();
    rep.incidences_ok = true;
    for (std::size_t i = 0; i < cert.size(); ++i) {
        AsymContIncidence inc;
        Vec p = negated(cert.points[i]); // vertex of P
        inc.vertex = scaled(p, inner_factor);
        inc.normal = canonical_halfspace(negated(cert.normals[i]), Scalar(0)).normal;

        const auto& iv = rep.inner.vrep().vertices;
        inc.vertex_in_inner = std::binary_search(iv.begin(), iv.end(), inc.vertex, VecLexLess{});

        const Halfspace* fm = nullptr;
        for (const auto& hs : middle_facets.halfspaces)
            if (hs.normal == inc.normal) fm = &hs;
        const Halfspace* fo = nullptr;
        for (const auto& hs : outer_facets.halfspaces)
            if (hs.normal == inc.normal) fo = &hs;
        if (fm && fo) {
            inc.vertex_on_middle_facet = dot(fm->normal, inc.vertex) == fm->offset;
            // Facet of the middle body fully inside the outer facet.
            inc.middle_facet_in_outer_facet = true;
            for (const auto& v : rep.middle.vrep().vertices) {
                if (dot(fm->normal, v) != fm->offset) continue;
                inc.middle_facet_in_outer_facet &=
                    contains(rep.outer, v) && dot(fo->normal, v) == fo->offset;
            }
        }
        rep.incidences_ok &= inc.ok();
        rep.incidences.push_back(std::move(inc));
    }
    return rep;
}

std::vector<std::pair<Vec, bool>> diametrical_endpoint_check(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch,
            "diametrical_endpoint_check");
    need_gauge(C);
    Scalar D = diameter(K, C).value;
    const std::vector<Vec> gens = pairwise_differences(C, C);
    const auto& kv = K.vrep().vertices;

    std::vector<std::pair<Vec, bool>> out(kv.size());
    for_each_index(kv.size(), [&](std::size_t i) {
        // max over y in K of the gauge of x - y is attained at a vertex.
        Scalar best = 0;
        for (const auto& y : kv) {
            auto g = gauge_value_points(gens, sub(kv[i], y));
            require(g.has_value(), errc::internal, "difference gauge infinite");
            if (*g > best) best = *g;
        }
        out[i] = {kv[i], 2 * best == D};
    });
    return out;
}

WidthLinearityReport width_linearity_probe(const Body& K, const Body& Kstar, const Body& C,
                                           const std::vector<Scalar>& lambdas) {
    require(K.ambient_dim() == Kstar.ambient_dim() && K.ambient_dim() == C.ambient_dim(),
            errc::dimension_mismatch, "width_linearity_probe");
    need_gauge(C);
    require(body_subset(K, Kstar), errc::not_a_completion, "K is not inside K*");
    require(diameter(K, C).value == diameter(Kstar, C).value, errc::not_a_completion,
            "K and K* have different diameters");
    require(is_complete(Kstar, C).complete, errc::not_a_completion, "K* is not complete");

    Scalar wK = width(K, C).value;
    Scalar wKstar = width(Kstar, C).value;

    WidthLinearityReport rep;
    rep.entries.resize(lambdas.size());
    for_each_index(lambdas.size(), [&](std::size_t t) {
        const Scalar& lam = lambdas[t];
        require(lam >= 0 && lam <= 1, errc::bad_params, "lambda outside [0,1]");
        Body mix = minkowski_sum(scale_reflect(K, lam), scale_reflect(Kstar, Scalar(1) - lam));
        WidthLinearityEntry e;
        e.lambda = lam;
        e.mixed = width(mix, C).value;
        e.combined = lam * wK + (Scalar(1) - lam) * wKstar;
        require(e.mixed >= e.combined, errc::internal, "width superadditivity violated");
        e.equal = (e.mixed == e.combined);
        rep.entries[t] = std::move(e);
    });
    rep.all_equal = true;
    rep.any_strict = false;
    for (const auto& e : rep.entries) {
        rep.all_equal &= e.equal;
        rep.any_strict |= !e.equal;
    }
    return rep;
}

} // namespace gauge
