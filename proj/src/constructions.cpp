#include "gauge/constructions.hpp"

#include <algorithm>

namespace gauge {

namespace {

void need_gauge(const Body& C) {
    require(C.full_dim(), errc::degenerate_gauge, "gauge body must be full-dimensional");
}

void need_symmetric(const Body& C) {
    require(is_origin_symmetric(C), errc::not_symmetric, "body must be 0-symmetric");
}

Vec barycenter(const std::vector<Vec>& pts) {
    Vec c = zero_vec(pts[0].size());
    for (const auto& p : pts) c = add(c, p);
    return scaled(c, Scalar(1) / Scalar(static_cast<long>(pts.size())));
}

std::vector<Vec> facet_vertices(const Body& C, const Halfspace& f) {
    std::vector<Vec> out;
    for (const auto& v : C.vrep().vertices)
        if (dot(f.normal, v) == f.offset) out.push_back(v);
    return out;
}

} // namespace

CompletionResult completion(const Body& K, const Body& C, int max_iter) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "completion");
    need_gauge(C);
    require(max_iter >= 1, errc::bad_params, "max_iter must be at least 1");

    Scalar D = diameter(K, C).value;
    Body ball = scale_reflect(central_symmetral(C), D / 2);

    CompletionResult res;
    res.completed = K;
    for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
        std::vector<HPolytope> parts;
        for (const auto& v : res.completed.vrep().vertices)
            parts.push_back(translated_hrep(ball, v));
        auto inter = intersect_many(parts);
        require(inter.has_value(), errc::internal, "spherical intersection empty");

        std::optional<Vec> grow;
        for (const auto& v : inter->vrep().vertices) {
            if (membership(res.completed, v) == Location::outside) {
                grow = v; // lex-sorted vertices: first hit is lex-min
                break;
            }
        }
        if (!grow) {
            require(is_complete(res.completed, C).complete, errc::internal,
                    "fixed point is not complete");
            res.converged = true;
            return res;
        }
        std::vector<Vec> pts = res.completed.vrep().vertices;
        pts.push_back(*grow);
        res.completed = Body::from_points(std::move(pts));
        res.added.push_back(std::move(*grow));
        require(diameter(res.completed, C).value == D, errc::internal,
                "completion step changed the diameter");
    }
    res.converged = false;
    return res;
}

ReductionResult reduction_candidate(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "reduction_candidate");
    need_gauge(C);

    ReductionResult res;
    if (!K.full_dim()) {
        res.reduced = K;
        res.degenerate = true;
        res.certificate = reduced_necessary(K, C);
        return res;
    }

    Scalar w0 = width(K, C).value;
    Body body = K;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        const auto& verts = body.vrep().vertices;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::vector<Vec> pts;
            for (std::size_t q = 0; q < verts.size(); ++q)
                if (q != i) pts.push_back(verts[q]);
            if (pts.empty()) continue;
            Body cand = Body::from_points(pts);
            if (!cand.full_dim()) continue; // width would drop to 0
            if (width(cand, C).value != w0) continue;
            body = std::move(cand);
            ++res.removed;
            progressed = true;
            break; // restart at the lexicographically smallest vertex
        }
    }
    res.reduced = std::move(body);
    res.certificate = reduced_necessary(res.reduced, C);
    return res;
}

std::vector<FacetPairEntry> facet_pair_scan(const Body& C) {
    need_symmetric(C);
    need_gauge(C);
    require(C.ambient_dim() >= 3, errc::dimension_too_low, "facet pair scan needs n >= 3");

    const auto& facets = C.hrep().halfspaces;
    std::vector<FacetPairEntry> out;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            std::vector<Vec> common;
            for (const auto& v : C.vrep().vertices)
                if (dot(facets[i].normal, v) == facets[i].offset &&
                    dot(facets[j].normal, v) == facets[j].offset)
                    common.push_back(v);
            if (common.empty()) continue; // disjoint facets
            out.push_back({i, j, affine_hull(common).dim});
        }
    }
    return out;
}

SimplicityResult simplicity_check_3d(const Body& C) {
    require(C.ambient_dim() == 3, errc::dimension_mismatch, "simplicity check is 3D");
    need_symmetric(C);
    need_gauge(C);
    const auto& facets = C.hrep().halfspaces;
    for (const auto& v : C.vrep().vertices) {
        int count = 0;
        for (const auto& f : facets)
            if (dot(f.normal, v) == f.offset) ++count;
        if (count > 3) return {false, v};
    }
    return {true, std::nullopt};
}

EgglestonOutcome eggleston_witness(const Body& C, const Scalar& epsilon) {
    need_symmetric(C);
    need_gauge(C);
    const int n = C.ambient_dim();
    require(n >= 3, errc::dimension_too_low, "witness construction needs n >= 3");
    require(epsilon > 0 && epsilon < 1, errc::bad_params, "epsilon must be in (0,1)");

    auto scan = facet_pair_scan(C);
    const FacetPairEntry* trigger = nullptr;
    for (const auto& e : scan)
        if (e.dim == 0) {
            trigger = &e;
            break;
        }
    if (!trigger) return {};

    const auto& facets = C.hrep().halfspaces;
    const Halfspace& F1 = facets[trigger->i];
    const Halfspace& F2 = facets[trigger->j];
    std::vector<Vec> common;
    for (const auto& v : C.vrep().vertices)
        if (dot(F1.normal, v) == F1.offset && dot(F2.normal, v) == F2.offset) common.push_back(v);
    require(common.size() == 1, errc::internal, "dim-0 facet pair with several vertices");
    const Vec v = common[0];

    require(F1.offset > 0 && F2.offset > 0, errc::internal, "origin not interior");
    Vec a1 = scaled(F1.normal, Scalar(1) / F1.offset); // h(C, a1) = 1
    Vec a2 = scaled(F2.normal, Scalar(1) / F2.offset);

    // A combination of a1, a2 lies in the interior of the normal cone at v
    // for all but finitely many mixing ratios; walk a fixed schedule.
    std::optional<Vec> a;
    for (long k = 0; k <= 32 && !a; ++k) {
        Scalar tau = (k == 0) ? Scalar(0) : scalar(1, k + 2);
        Vec cand = add(scaled(add(a1, a2), (Scalar(1) - tau) / 2), scaled(a1, tau));
        auto [h, argmax] = support(C, cand);
        if (argmax.size() == 1 && argmax[0] == v) {
            require(h == 1, errc::internal, "support normalization lost");
            a = std::move(cand);
        }
    }
    require(a.has_value(), errc::construction_failed,
            "no supporting direction isolating the trigger vertex");

    const std::vector<Vec> f1_verts = facet_vertices(C, F1);
    const std::vector<Vec> f2_verts = facet_vertices(C, F2);
    auto min_level = [&](const std::vector<Vec>& verts) {
        Scalar m = dot(*a, verts[0]);
        for (const auto& p : verts) {
            Scalar val = dot(*a, p);
            if (val < m) m = val;
        }
        return m;
    };
    const Scalar m1 = min_level(f1_verts), m2 = min_level(f2_verts);

    Scalar eps = epsilon;
    for (int attempt = 0; attempt < 60; ++attempt, eps /= 2) {
        Scalar level = 1 - eps;
        if (level <= m1 || level <= m2) continue; // slice misses a facet

        auto slice = [&](const Halfspace& F) -> std::optional<Body> {
            HPolytope h = C.hrep();
            h.halfspaces.push_back(canonical_halfspace(F.normal, F.offset));
            h.halfspaces.push_back(canonical_halfspace(negated(F.normal), -F.offset));
            h.halfspaces.push_back(canonical_halfspace(*a, level));
            h.halfspaces.push_back(canonical_halfspace(negated(*a), -level));
            return intersect_many({h});
        };
        auto s1 = slice(F1), s2 = slice(F2);
        if (!s1 || !s2) continue;
        if (s1->intrinsic_dim() != n - 2 || s2->intrinsic_dim() != n - 2) continue;
        Vec x1 = barycenter(s1->vrep().vertices);
        Vec x2 = barycenter(s2->vrep().vertices);
        Vec d = sub(x2, x1);

        HPolytope cut = C.hrep();
        for (const auto& hs : translated_hrep(C, d).halfspaces) cut.halfspaces.push_back(hs);
        cut.halfspaces.push_back(canonical_halfspace(*a, level));
        cut.halfspaces.push_back(canonical_halfspace(negated(*a), -level));
        auto X = intersect_many({cut});
        if (!X || X->intrinsic_dim() != n - 2) continue;

        std::vector<Vec> ypts = X->vrep().vertices;
        ypts.push_back(zero_vec(n));
        ypts.push_back(d);
        Body Y = Body::from_points(std::move(ypts));
        if (diameter(Y, C).value != 1) continue;

        CompletionResult comp = completion(Y, C);
        if (!comp.converged) continue;
        const Body& Ystar = comp.completed;
        bool inside = true;
        for (const auto& p : Ystar.vrep().vertices)
            inside &= contains(C, p) && contains(C, sub(p, d));
        require(inside, errc::internal, "completion escaped C cap (x2-x1+C)");
        require(diameter(Ystar, C).value == 1, errc::internal, "completion changed diameter");

        ConstantWidthReport cw = is_constant_width(Ystar, C);
        if (cw.is_cw) continue; // cannot happen per the construction; retry smaller eps

        NonPerfectWitness w;
        w.vertex = v;
        w.facet1 = trigger->i;
        w.facet2 = trigger->j;
        w.normal1 = F1.normal;
        w.normal2 = F2.normal;
        w.direction = *a;
        w.epsilon = eps;
        w.x1 = std::move(x1);
        w.x2 = std::move(x2);
        w.X = std::move(*X);
        w.Y = std::move(Y);
        w.Ystar = comp.completed;
        w.cw_failure = std::move(cw);
        w.completion_iterations = comp.iterations;
        return {true, std::move(w)};
    }
    fail(errc::construction_failed, "witness construction exhausted its epsilon retries");
}

PerfectVerdict perfect_probe(const Body& C) {
    need_gauge(C);
    Body Cs = is_origin_symmetric(C) ? C : half_symmetral(C);

    PerfectVerdict verdict;
    if (C.ambient_dim() == 2) {
        verdict.status = PerfectStatus::perfect_2d;
        verdict.notes = "every planar gauge is perfect";
        return verdict;
    }

    auto scan = facet_pair_scan(Cs);
    bool has_dim0 = false;
    for (const auto& e : scan) has_dim0 |= (e.dim == 0);

    if (C.ambient_dim() == 3) {
        // In 3D, a vertex-only facet pair exists iff the polytope is
        // non-simple; the two detectors must agree.
        SimplicityResult simple = simplicity_check_3d(Cs);
        require(simple.simple == !has_dim0, errc::internal,
                "simplicity and facet scan disagree");
    }

    // Difference bodies of simplices always carry a vertex-only facet pair.
    bool simplex_difference = false;
    {
        Body CC = central_symmetral(Cs);
        const int n = C.ambient_dim();
        const auto& facets = CC.hrep().halfspaces;
        std::vector<Vec> simplex_normals;
        for (const auto& f : facets) {
            auto fv = facet_vertices(CC, f);
            if (fv.size() == static_cast<std::size_t>(n) && affinely_independent(fv))
                simplex_normals.push_back(f.normal);
        }
        std::sort(simplex_normals.begin(), simplex_normals.end(), VecLexLess{});
        std::vector<Vec> pairs;
        for (const auto& a : simplex_normals) {
            Vec neg = canonical_halfspace(negated(a), Scalar(0)).normal;
            if (lex_less(a, neg) &&
                std::binary_search(simplex_normals.begin(), simplex_normals.end(), neg,
                                   VecLexLess{}))
                pairs.push_back(a);
        }
        if (pairs.size() == static_cast<std::size_t>(n) + 1) {
            for (std::uint32_t mask = 0; mask < (1u << pairs.size()) && !simplex_difference;
                 ++mask) {
                std::vector<Halfspace> hs;
                for (std::size_t t = 0; t < pairs.size(); ++t) {
                    Vec normal = (mask >> t) & 1 ? negated(pairs[t]) : pairs[t];
                    Scalar off = support_value(CC, normal) / Scalar(n + 1);
                    hs.push_back(canonical_halfspace(std::move(normal), std::move(off)));
                }
                std::optional<Body> cand;
                try {
                    cand = intersect_many({HPolytope{std::move(hs), n}});
                } catch (const gauge_error& e) {
                    if (e.code() != errc::unbounded) throw;
                    continue; // wrong orientation: a cone, not a simplex
                }
                if (!cand || !cand->full_dim()) continue;
                if (cand->vrep().vertices.size() != static_cast<std::size_t>(n) + 1) continue;
                simplex_difference = equal_sets(central_symmetral(*cand), CC);
            }
        }
    }

    if (has_dim0) {
        verdict.status = PerfectStatus::not_perfect;
        EgglestonOutcome out = eggleston_witness(Cs, scalar(1, 2));
        require(out.triggered, errc::internal, "scan trigger vanished during witness build");
        verdict.witness = std::move(out.witness);
        verdict.notes = "vertex-only facet pair";
        if (simplex_difference) verdict.notes += "; gauge is a simplex difference body";
        return verdict;
    }
    require(!simplex_difference, errc::internal,
            "simplex difference body without a vertex-only facet pair");
    verdict.status = PerfectStatus::undecided_necessary_passed;
    verdict.notes = "no vertex-only facet pair; necessary conditions passed";
    return verdict;
}

BodyKind body_kind_from_string(const std::string& name) {
    if (name == "regular_simplex") return BodyKind::regular_simplex;
    if (name == "centered_simplex") return BodyKind::centered_simplex;
    if (name == "cube") return BodyKind::cube;
    if (name == "cross_polytope") return BodyKind::cross_polytope;
    if (name == "double_pyramid") return BodyKind::double_pyramid;
    if (name == "random_polytope") return BodyKind::random_polytope;
    fail(errc::bad_params, "unknown body kind '" + name + "'");
}

namespace {

Body centered_simplex_body(int n) {
    // conv{0, e_1, ..., e_n} shifted so the centroid (its Minkowski center)
    // is the origin.
    std::vector<Vec> pts;
    Vec g(n, scalar(1, n + 1));
    pts.push_back(negated(g));
    for (int i = 0; i < n; ++i) pts.push_back(sub(unit_vec(n, i), g));
    return Body::from_points(std::move(pts));
}

Body cube_body(int n) {
    std::vector<Vec> pts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Vec p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? Scalar(1) : Scalar(-1);
        pts.push_back(std::move(p));
    }
    return Body::from_points(std::move(pts));
}

} // namespace

Body random_polytope_body(int n, int vertex_count, SplitMix64& rng) {
    require(vertex_count >= n + 1, errc::bad_params, "too few points for a full-dimensional body");
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < vertex_count; ++i) {
            Vec p(n);
            for (int d = 0; d < n; ++d) p[d] = rng.rational(8, 4);
            pts.push_back(std::move(p));
        }
        Body b = Body::from_points(std::move(pts));
        if (b.full_dim()) return b;
    }
    fail(errc::construction_failed, "random polytope generation kept collapsing");
}

Body random_symmetric_body(int n, int generator_count, SplitMix64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < generator_count; ++i) {
            Vec p(n);
            for (int d = 0; d < n; ++d) p[d] = rng.rational(8, 4);
            pts.push_back(negated(p));
            pts.push_back(std::move(p));
        }
        Body b = Body::from_points(std::move(pts));
        if (b.full_dim()) return b;
    }
    fail(errc::construction_failed, "random symmetric body generation kept collapsing");
}

Body random_centered_simplex(int n, SplitMix64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i <= n; ++i) {
            Vec p(n);
            for (int d = 0; d < n; ++d) p[d] = rng.rational(8, 2);
            pts.push_back(std::move(p));
        }
        if (!affinely_independent(pts)) continue;
        return center_at_minkowski_center(Body::from_points(std::move(pts)));
    }
    fail(errc::construction_failed, "random simplex generation kept collapsing");
}

Body generate(BodyKind kind, int n, const GenerateParams& params, std::uint64_t seed) {
    require(n >= 1 && n <= 4, errc::bad_params, "dimension must be within 1..4");
    switch (kind) {
        case BodyKind::regular_simplex:
            if (n == 3) {
                // The even cube corners: a genuinely regular tetrahedron
                // with rational coordinates, Minkowski-centered at 0.
                return Body::from_points({{Scalar(1), Scalar(1), Scalar(1)},
                                          {Scalar(1), Scalar(-1), Scalar(-1)},
                                          {Scalar(-1), Scalar(1), Scalar(-1)},
                                          {Scalar(-1), Scalar(-1), Scalar(1)}});
            }
            // No rational regular simplex exists in these dimensions; all
            // gauge functionals are affine-invariant, so the centered
            // standard simplex stands in.
            return centered_simplex_body(n);
        case BodyKind::centered_simplex:
            return centered_simplex_body(n);
        case BodyKind::cube:
            return cube_body(n);
        case BodyKind::cross_polytope: {
            std::vector<Vec> pts;
            for (int i = 0; i < n; ++i) {
                pts.push_back(unit_vec(n, i));
                pts.push_back(negated(unit_vec(n, i)));
            }
            return Body::from_points(std::move(pts));
        }
        case BodyKind::double_pyramid: {
            require(n >= 2, errc::bad_params, "double pyramid needs n >= 2");
            Body base = centered_simplex_body(n - 1);
            std::vector<Vec> pts;
            for (const auto& v : base.vrep().vertices) {
                Vec p = v;
                p.push_back(Scalar(0));
                pts.push_back(std::move(p));
            }
            pts.push_back(unit_vec(n, n - 1));
            pts.push_back(negated(unit_vec(n, n - 1)));
            return Body::from_points(std::move(pts));
        }
        case BodyKind::random_polytope: {
            SplitMix64 rng(seed);
            int count = params.vertex_count > 0 ? params.vertex_count : 2 * n + 2;
            return random_polytope_body(n, count, rng);
        }
    }
    fail(errc::bad_params, "unhandled body kind");
}

} // namespace gauge
