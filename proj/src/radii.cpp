#include "gauge/radii.hpp"

#include <algorithm>

namespace gauge {

namespace {

void need_gauge(const Body& C) {
    require(C.full_dim(), errc::degenerate_gauge, "gauge body must be full-dimensional");
}

// Re-solves with the optimum pinned, minimizing one variable at a time.
// Returns the lex-min optimizer restricted to variables [0, count).
Vec lex_min_prefix(LpProblem lp, const Scalar& opt_value, std::size_t count) {
    Vec pinned;
    lp.add_row(lp.objective, Rel::eq, opt_value);
    for (std::size_t d = 0; d < count; ++d) {
        LpProblem sub = lp;
        sub.sense = Sense::minimize;
        sub.objective = zero_vec(lp.num_vars());
        sub.objective[d] = 1;
        for (std::size_t k = 0; k < pinned.size(); ++k) {
            Vec row = zero_vec(lp.num_vars());
            row[k] = 1;
            sub.add_row(std::move(row), Rel::eq, pinned[k]);
        }
        LpSolution s = lp_solve(sub);
        require(s.status == LpStatus::optimal, errc::internal, "lex refinement failed");
        pinned.push_back(*s.objective_value);
    }
    return pinned;
}

void verify_covering(const Body& K, const Body& C, const Vec& center, const Scalar& lambda) {
    // K subset center + lambda C, checked on the facets of C.
    for (const auto& hs : C.hrep().halfspaces) {
        Scalar bound = lambda * hs.offset + dot(hs.normal, center);
        for (const auto& v : K.vrep().vertices)
            require(dot(hs.normal, v) <= bound, errc::internal,
                    "circumradius certificate violated");
    }
}

} // namespace

CircumResult circumradius(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "circumradius");
    need_gauge(C);
    const std::size_t n = K.ambient_dim();
    const auto& kv = K.vrep().vertices;
    const auto& cv = C.vrep().vertices;
    const std::size_t mk = kv.size(), mc = cv.size();

    // Variables: c_0..c_{n-1} free, lambda >= 0, mu_{ik} >= 0.
    const std::size_t nvars = n + 1 + mk * mc;
    LpProblem lp;
    lp.objective = zero_vec(nvars);
    lp.objective[n] = 1;
    lp.lower_bounds.assign(nvars, std::nullopt);
    lp.lower_bounds[n] = Scalar(0);
    for (std::size_t t = n + 1; t < nvars; ++t) lp.lower_bounds[t] = Scalar(0);
    auto mu = [&](std::size_t i, std::size_t k) { return n + 1 + i * mc + k; };

    for (std::size_t i = 0; i < mk; ++i) {
        for (std::size_t d = 0; d < n; ++d) {
            Vec row = zero_vec(nvars);
            row[d] = 1;
            for (std::size_t k = 0; k < mc; ++k) row[mu(i, k)] = cv[k][d];
            lp.add_row(std::move(row), Rel::eq, kv[i][d]);
        }
        Vec row = zero_vec(nvars);
        row[n] = -1;
        for (std::size_t k = 0; k < mc; ++k) row[mu(i, k)] = 1;
        lp.add_row(std::move(row), Rel::eq, Scalar(0));
    }

    LpSolution s = lp_solve(lp);
    require(s.status == LpStatus::optimal, errc::internal, "circumradius LP not optimal");
    CircumResult res;
    res.radius = *s.objective_value;
    res.center = lex_min_prefix(lp, res.radius, n);
    res.lp = std::move(s);
    verify_covering(K, C, res.center, res.radius);
    return res;
}

CircumHrepResult circumradius_hrep(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "circumradius");
    need_gauge(C);
    const std::size_t n = K.ambient_dim();
    const auto& kv = K.vrep().vertices;
    const auto& fac = C.hrep().halfspaces;

    LpProblem lp;
    lp.objective = zero_vec(n + 1);
    lp.objective[n] = 1;
    lp.lower_bounds.assign(n + 1, std::nullopt);
    lp.lower_bounds[n] = Scalar(0);

    CircumHrepResult res;
    for (std::size_t i = 0; i < kv.size(); ++i) {
        for (std::size_t j = 0; j < fac.size(); ++j) {
            Vec row = zero_vec(n + 1);
            for (std::size_t d = 0; d < n; ++d) row[d] = -fac[j].normal[d];
            row[n] = -fac[j].offset;
            lp.add_row(std::move(row), Rel::le, -dot(fac[j].normal, kv[i]));
            res.row_pairs.emplace_back(i, j);
        }
    }
    LpSolution s = lp_solve(lp);
    require(s.status == LpStatus::optimal, errc::internal, "circumradius LP not optimal");
    res.radius = *s.objective_value;
    res.center = lex_min_prefix(lp, res.radius, n);
    res.lp = std::move(s);
    verify_covering(K, C, res.center, res.radius);
    return res;
}

InradiusResult inradius(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "inradius");
    need_gauge(C);
    const std::size_t n = K.ambient_dim();

    LpProblem lp;
    lp.sense = Sense::maximize;
    lp.objective = zero_vec(n + 1);
    lp.objective[n] = 1;
    lp.lower_bounds.assign(n + 1, std::nullopt);
    lp.lower_bounds[n] = Scalar(0);
    for (const auto& hs : K.hrep().halfspaces) {
        Vec row = zero_vec(n + 1);
        for (std::size_t d = 0; d < n; ++d) row[d] = hs.normal[d];
        row[n] = support_value(C, hs.normal);
        lp.add_row(std::move(row), Rel::le, hs.offset);
    }
    LpSolution s = lp_solve(lp);
    require(s.status == LpStatus::optimal, errc::internal, "inradius LP not optimal");
    InradiusResult res;
    res.radius = *s.objective_value;
    // Lex refinement needs minimize sense; flip the objective.
    LpProblem minlp = lp;
    minlp.sense = Sense::minimize;
    minlp.objective[n] = -1;
    res.center = lex_min_prefix(minlp, -res.radius, n);
    // lambda C + center inside K, on the facets of K.
    for (const auto& hs : K.hrep().halfspaces)
        require(dot(hs.normal, res.center) + res.radius * support_value(C, hs.normal) <= hs.offset,
                errc::internal, "inradius certificate violated");
    return res;
}

Scalar breadth(const Body& K, const Body& C, const Vec& s) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "breadth");
    require(static_cast<int>(s.size()) == K.ambient_dim(), errc::dimension_mismatch, "breadth");
    require(!is_zero_vec(s), errc::zero_direction, "breadth of zero direction");
    Scalar hk = support_value(K, s) + support_value(K, negated(s));
    Scalar hc = support_value(C, s) + support_value(C, negated(s));
    require(hc > 0, errc::degenerate_gauge, "gauge flat in breadth direction");
    return 2 * hk / hc;
}

DiameterResult diameter(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "diameter");
    need_gauge(C);
    const auto& kv = K.vrep().vertices;
    if (kv.size() == 1) return {Scalar(0), {kv[0], kv[0]}};

    const std::vector<Vec> gens = pairwise_differences(C, C); // generates C - C
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < kv.size(); ++i)
        for (std::size_t j = i + 1; j < kv.size(); ++j) pairs.emplace_back(i, j);

    std::vector<Scalar> gamma(pairs.size());
    for_each_index(pairs.size(), [&](std::size_t t) {
        auto g = gauge_value_points(gens, sub(kv[pairs[t].first], kv[pairs[t].second]));
        require(g.has_value(), errc::internal, "difference gauge was infinite");
        gamma[t] = std::move(*g);
    });

    std::size_t best = 0;
    for (std::size_t t = 1; t < pairs.size(); ++t)
        if (gamma[t] > gamma[best]) best = t;
    DiameterResult res;
    res.value = 2 * gamma[best];
    res.attaining = {kv[pairs[best].first], kv[pairs[best].second]};

    // Independent route: the diameter is twice the segment circumradius.
    Body segment = Body::from_vpolytope(
        {{res.attaining.first, res.attaining.second}, K.ambient_dim()});
    require(2 * circumradius(segment, C).radius == res.value, errc::internal,
            "diameter formulas disagree");
    return res;
}

WidthResult width(const Body& K, const Body& C) {
    require(K.ambient_dim() == C.ambient_dim(), errc::dimension_mismatch, "width");
    need_gauge(C);
    if (!K.full_dim()) {
        // Flat body: zero width, witnessed by a normal of its affine hull.
        Mat rows = K.affine().basis;
        if (rows.empty()) rows.push_back(zero_vec(K.ambient_dim()));
        std::vector<Vec> normals;
        for (const auto& g : null_space(rows)) normals.push_back(canonical_halfspace(g, Scalar(0)).normal);
        std::sort(normals.begin(), normals.end(), VecLexLess{});
        return {Scalar(0), normals.front()};
    }
    Body KK = central_symmetral(K);
    Body CC = central_symmetral(C);
    const auto& cverts = CC.vrep().vertices;
    std::vector<Scalar> gamma(cverts.size());
    for_each_index(cverts.size(), [&](std::size_t t) {
        auto g = gauge_value_points(KK.vrep().vertices, cverts[t]);
        require(g.has_value() && *g > 0, errc::internal, "gauge of C-C vertex in K-K");
        gamma[t] = std::move(*g);
    });
    Scalar gmax = gamma[0];
    for (const auto& g : gamma)
        if (g > gmax) gmax = g;
    WidthResult res;
    res.value = 2 / gmax;

    // The minimum breadth is always attained at a facet normal of K-K.
    std::optional<Vec> dir;
    for (const auto& hs : KK.hrep().halfspaces) {
        if (gmax * hs.offset == support_value(CC, hs.normal)) {
            if (!dir || lex_less(hs.normal, *dir)) dir = hs.normal;
        }
    }
    require(dir.has_value(), errc::internal, "no width direction among K-K facets");
    require(breadth(K, C, *dir) == res.value, errc::internal, "width direction mismatch");
    res.direction = std::move(*dir);
    return res;
}

AsymmetryReport asymmetry(const Body& K) {
    require(K.full_dim(), errc::degenerate_body, "asymmetry needs a full-dimensional body");
    Body minusK = scale_reflect(K, Scalar(-1));
    CircumResult cr = circumradius(minusK, K);
    AsymmetryReport rep;
    rep.s = cr.radius;
    rep.translate = cr.center;
    rep.minkowski_center = scaled(cr.center, Scalar(-1) / (Scalar(1) + cr.radius));
    // -(K - c) subset s (K - c), exactly.
    const Vec& c = rep.minkowski_center;
    for (const auto& v : K.vrep().vertices) {
        Vec point = add(scaled(sub(c, v), Scalar(1) / rep.s), c);
        require(contains(K, point), errc::internal, "Minkowski center relation violated");
    }
    return rep;
}

Body center_at_minkowski_center(const Body& K) {
    AsymmetryReport rep = asymmetry(K);
    return translate(K, negated(rep.minkowski_center));
}

Body half_symmetral(const Body& C) {
    return scale_reflect(central_symmetral(C), scalar(1, 2));
}

RadiiReport radii_report(const Body& K, const Body& C) {
    RadiiReport rep;
    CircumResult cr = circumradius(K, C);
    InradiusResult ir = inradius(K, C);
    DiameterResult dr = diameter(K, C);
    WidthResult wr = width(K, C);
    rep.R = cr.radius;
    rep.r = ir.radius;
    rep.D = dr.value;
    rep.w = wr.value;
    rep.circumcenter = cr.center;
    rep.incenter = ir.center;
    rep.diameter_pair = dr.attaining;
    rep.width_direction = wr.direction;
    require(rep.r <= rep.R, errc::internal, "inradius exceeds circumradius");
    require(rep.w <= rep.D, errc::internal, "width exceeds diameter");
    return rep;
}

} // namespace gauge
