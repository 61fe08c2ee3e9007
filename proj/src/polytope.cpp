#include "gauge/polytope.hpp"

#include <algorithm>
#include <mutex>

namespace gauge {

namespace {

void check_ambient(int dim) {
    require(dim >= 1, errc::dimension_too_low, "ambient dimension < 1");
    require(dim <= 4, errc::dimension_unsupported,
            "polytope calculus is capped at ambient dimension 4");
}

void sort_unique(std::vector<Vec>& pts) {
    std::sort(pts.begin(), pts.end(), VecLexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Enumerates k-subsets of [m]; the slot for the first index lets callers
// parallelize over it and merge per-slot results in deterministic order.
template <class Fn>
void subsets_with_first(std::size_t m, std::size_t k, std::size_t first, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    idx[0] = first;
    if (k == 1) {
        fn(idx);
        return;
    }
    std::size_t depth = 1;
    idx[1] = first; // incremented on entry below
    while (depth >= 1) {
        ++idx[depth];
        if (idx[depth] > m - (k - depth)) {
            --depth;
            continue;
        }
        if (depth + 1 == k) {
            fn(idx);
        } else {
            ++depth;
            idx[depth] = idx[depth - 1];
        }
    }
}

} // namespace

Halfspace canonical_halfspace(Vec normal, Scalar offset) {
    require(!is_zero_vec(normal), errc::zero_direction, "halfspace normal must be nonzero");
    Scalar pivot;
    for (const auto& x : normal) {
        if (x != 0) {
            pivot = abs_of(x);
            break;
        }
    }
    if (pivot != 1) {
        Scalar inv = Scalar(1) / pivot;
        for (auto& x : normal) x *= inv;
        offset *= inv;
    }
    return {std::move(normal), std::move(offset)};
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

// ---------------------------------------------------------------------------
// Hull

HullResult hull_vertices_audited(const std::vector<Vec>& points, Exec ex) {
    require(!points.empty(), errc::empty_input, "hull of empty point set");
    const std::size_t n = points[0].size();
    for (const auto& p : points)
        require(p.size() == n, errc::dimension_mismatch, "hull points of mixed dimension");

    std::vector<Vec> pts = points;
    sort_unique(pts);

    const std::size_t m = pts.size();
    HullResult result;
    if (m == 1) {
        result.hull = {pts, static_cast<int>(n)};
        return result;
    }

    // A point is a vertex iff it is not a convex combination of the others.
    // Exact duplicates are already gone, so the per-point tests are
    // independent and all redundant points can be dropped together.
    std::vector<std::optional<std::vector<std::pair<std::size_t, Scalar>>>> combo(m);
    for_each_index(
        m,
        [&](std::size_t i) {
            LpProblem lp;
            lp.objective = zero_vec(m - 1);
            lp.lower_bounds.assign(m - 1, Scalar(0));
            for (std::size_t d = 0; d < n; ++d) {
                Vec row(m - 1);
                std::size_t c = 0;
                for (std::size_t q = 0; q < m; ++q)
                    if (q != i) row[c++] = pts[q][d];
                lp.add_row(std::move(row), Rel::eq, pts[i][d]);
            }
            lp.add_row(Vec(m - 1, Scalar(1)), Rel::eq, Scalar(1));
            LpSolution s = lp_solve(lp);
            if (s.status == LpStatus::optimal) {
                std::vector<std::pair<std::size_t, Scalar>> c;
                std::size_t col = 0;
                for (std::size_t q = 0; q < m; ++q) {
                    if (q == i) continue;
                    if ((*s.primal)[col] != 0) c.emplace_back(q, (*s.primal)[col]);
                    ++col;
                }
                combo[i] = std::move(c);
            }
        },
        ex);

    result.hull.ambient_dim = static_cast<int>(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (combo[i]) {
            result.discarded.push_back({i, std::move(*combo[i])});
        } else {
            result.hull.vertices.push_back(pts[i]);
        }
    }
    require(!result.hull.vertices.empty(), errc::internal, "hull lost all points");
    return result;
}

VPolytope hull_vertices(const std::vector<Vec>& points, Exec ex) {
    return hull_vertices_audited(points, ex).hull;
}

// ---------------------------------------------------------------------------
// Facet enumeration

HPolytope facets_of(const VPolytope& v, Exec ex) {
    const int n = v.ambient_dim;
    check_ambient(n);
    require(!v.vertices.empty(), errc::empty_input, "facets of empty polytope");
    require(affine_hull(v.vertices).dim == n, errc::not_full_dimensional,
            "facet enumeration needs a full-dimensional polytope");

    const std::size_t m = v.vertices.size();
    const auto& P = v.vertices;
    std::vector<std::vector<Halfspace>> slots(m);

    auto consider = [&](const std::vector<std::size_t>& idx, std::vector<Halfspace>& out) {
        Vec normal;
        if (n == 1) {
            normal = {Scalar(1)};
        } else {
            Mat diffs;
            for (std::size_t k = 1; k < idx.size(); ++k)
                diffs.push_back(sub(P[idx[k]], P[idx[0]]));
            auto ns = null_space(diffs);
            if (ns.size() != 1) return; // affinely dependent subset
            normal = std::move(ns[0]);
        }
        Scalar offset = dot(normal, P[idx[0]]);
        bool above = false, below = false;
        for (const auto& p : P) {
            int s = sign_of(dot(normal, p) - offset);
            if (s > 0) above = true;
            else if (s < 0) below = true;
            if (above && below) return; // not supporting
        }
        if (above) {
            normal = negated(normal);
            offset = -offset;
        }
        out.push_back(canonical_halfspace(std::move(normal), std::move(offset)));
    };

    for_each_index(
        m,
        [&](std::size_t first) {
            if (first + n > m) return;
            subsets_with_first(m, static_cast<std::size_t>(n), first,
                               [&](const std::vector<std::size_t>& idx) { consider(idx, slots[first]); });
        },
        ex);

    std::vector<Halfspace> all;
    for (auto& s : slots)
        for (auto& h : s) all.push_back(std::move(h));
    std::sort(all.begin(), all.end(), halfspace_less);
    all.erase(std::unique(all.begin(), all.end(),
                          [](const Halfspace& a, const Halfspace& b) {
                              return a.normal == b.normal && a.offset == b.offset;
                          }),
              all.end());
    require(!all.empty(), errc::internal, "no facets found");
    return {std::move(all), n};
}

// ---------------------------------------------------------------------------
// Vertex enumeration

VPolytope vertices_of(const HPolytope& h, Exec ex) {
    const int n = h.ambient_dim;
    check_ambient(n);
    const std::size_t l = h.halfspaces.size();

    // Feasibility and boundedness via coordinate-support LPs.
    for (int d = 0; d < n; ++d) {
        for (Sense sense : {Sense::maximize, Sense::minimize}) {
            LpProblem lp;
            lp.sense = sense;
            lp.objective = unit_vec(n, d);
            for (const auto& hs : h.halfspaces) lp.add_row(hs.normal, Rel::le, hs.offset);
            LpSolution s = lp_solve(lp);
            if (s.status == LpStatus::infeasible)
                fail(errc::empty_polytope, "H-polytope is empty");
            if (s.status == LpStatus::unbounded)
                fail(errc::unbounded, "H-polytope is unbounded");
        }
    }

    // A point on >= n facet hyperplanes with independent normals, feasible
    // for every halfspace, is a vertex; all vertices arise this way.
    std::vector<std::vector<Vec>> slots(l);
    for_each_index(
        l,
        [&](std::size_t first) {
            if (first + n > l) return;
            subsets_with_first(l, static_cast<std::size_t>(n), first,
                               [&](const std::vector<std::size_t>& idx) {
                                   Mat A;
                                   Vec b;
                                   for (std::size_t k : idx) {
                                       A.push_back(h.halfspaces[k].normal);
                                       b.push_back(h.halfspaces[k].offset);
                                   }
                                   auto x = solve_square(A, b);
                                   if (!x) return;
                                   for (const auto& hs : h.halfspaces)
                                       if (dot(hs.normal, *x) > hs.offset) return;
                                   slots[first].push_back(std::move(*x));
                               });
        },
        ex);

    std::vector<Vec> verts;
    for (auto& s : slots)
        for (auto& p : s) verts.push_back(std::move(p));
    sort_unique(verts);
    require(!verts.empty(), errc::internal, "bounded nonempty polytope without vertices");
    return {std::move(verts), n};
}

// ---------------------------------------------------------------------------
// Body

struct Body::Impl {
    VPolytope v;
    AffineHull hull;
    mutable std::once_flag h_once;
    mutable std::shared_ptr<const HPolytope> h;
};

Body Body::from_points(std::vector<Vec> points) {
    return from_vpolytope(hull_vertices(points));
}

Body Body::from_vpolytope(VPolytope v) {
    require(!v.vertices.empty(), errc::empty_input, "body needs at least one vertex");
    auto impl = std::make_shared<Impl>();
    std::sort(v.vertices.begin(), v.vertices.end(), VecLexLess{});
    impl->hull = affine_hull(v.vertices);
    impl->v = std::move(v);
    Body b;
    b.impl_ = std::move(impl);
    return b;
}

const VPolytope& Body::vrep() const {
    require(impl_ != nullptr, errc::internal, "empty Body handle");
    return impl_->v;
}

const AffineHull& Body::affine() const {
    require(impl_ != nullptr, errc::internal, "empty Body handle");
    return impl_->hull;
}

int Body::ambient_dim() const { return vrep().ambient_dim; }
int Body::intrinsic_dim() const { return affine().dim; }
bool Body::full_dim() const { return intrinsic_dim() == ambient_dim(); }

namespace {

// H-rep of a lower-dimensional body: enumerate facets inside the affine
// hull, lift them back, and pin the hull with equality pairs.
HPolytope embedded_hrep(const VPolytope& v, const AffineHull& hull) {
    const int n = v.ambient_dim;
    const int d = hull.dim;
    std::vector<Halfspace> out;

    Mat basis_rows = hull.basis; // d x n
    if (d > 0) {
        Mat A(n, Vec(d));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < d; ++k) A[i][k] = hull.basis[k][i];
        std::vector<Vec> projected;
        for (const auto& p : v.vertices) {
            auto lam = linear_solve(A, sub(p, hull.base));
            require(lam.has_value() && lam->null_basis.empty(), errc::internal,
                    "vertex outside its own affine hull");
            projected.push_back(lam->particular);
        }
        VPolytope pv{std::move(projected), d};
        std::sort(pv.vertices.begin(), pv.vertices.end(), VecLexLess{});
        HPolytope hd = facets_of(pv);
        for (const auto& f : hd.halfspaces) {
            auto a = linear_solve(basis_rows, f.normal);
            require(a.has_value(), errc::internal, "facet lift failed");
            Vec normal = a->particular;
            Scalar offset = dot(normal, hull.base) + f.offset;
            out.push_back(canonical_halfspace(std::move(normal), std::move(offset)));
        }
    }
    for (const auto& g : null_space(basis_rows.empty() ? Mat{zero_vec(n)} : basis_rows)) {
        Scalar b = dot(g, hull.base);
        out.push_back(canonical_halfspace(g, b));
        out.push_back(canonical_halfspace(negated(g), -b));
    }
    if (d == 0) {
        // A point: the null space above already pins every coordinate.
    }
    std::sort(out.begin(), out.end(), halfspace_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Halfspace& a, const Halfspace& b) {
                              return a.normal == b.normal && a.offset == b.offset;
                          }),
              out.end());
    return {std::move(out), n};
}

} // namespace

const HPolytope& Body::hrep() const {
    require(impl_ != nullptr, errc::internal, "empty Body handle");
    std::call_once(impl_->h_once, [&] {
        if (full_dim()) {
            impl_->h = std::make_shared<const HPolytope>(facets_of(impl_->v));
        } else {
            impl_->h = std::make_shared<const HPolytope>(embedded_hrep(impl_->v, impl_->hull));
        }
    });
    return *impl_->h;
}

// ---------------------------------------------------------------------------
// Basic operations

std::pair<Scalar, std::vector<Vec>> support(const Body& K, const Vec& a) {
    require(static_cast<int>(a.size()) == K.ambient_dim(), errc::dimension_mismatch,
            "support direction dimension");
    require(!is_zero_vec(a), errc::zero_direction, "support of zero direction");
    const auto& verts = K.vrep().vertices;
    Scalar best = dot(a, verts[0]);
    for (const auto& v : verts) {
        Scalar val = dot(a, v);
        if (val > best) best = val;
    }
    std::vector<Vec> argmax;
    for (const auto& v : verts)
        if (dot(a, v) == best) argmax.push_back(v);
    return {best, argmax};
}

Scalar support_value(const Body& K, const Vec& a) {
    require(static_cast<int>(a.size()) == K.ambient_dim(), errc::dimension_mismatch,
            "support direction dimension");
    const auto& verts = K.vrep().vertices;
    Scalar best = dot(a, verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Scalar val = dot(a, verts[i]);
        if (val > best) best = val;
    }
    return best;
}

Location membership(const Body& K, const Vec& x) {
    require(static_cast<int>(x.size()) == K.ambient_dim(), errc::dimension_mismatch,
            "membership point dimension");
    bool tight = false;
    for (const auto& hs : K.hrep().halfspaces) {
        int s = sign_of(dot(hs.normal, x) - hs.offset);
        if (s > 0) return Location::outside;
        if (s == 0) tight = true;
    }
    return tight ? Location::boundary : Location::inside;
}

Body minkowski_sum(const Body& K, const Body& L) {
    require(K.ambient_dim() == L.ambient_dim(), errc::dimension_mismatch,
            "Minkowski sum dimension");
    std::vector<Vec> sums;
    sums.reserve(K.vrep().vertices.size() * L.vrep().vertices.size());
    for (const auto& a : K.vrep().vertices)
        for (const auto& b : L.vrep().vertices) sums.push_back(add(a, b));
    return Body::from_points(std::move(sums));
}

Body translate(const Body& K, const Vec& t) {
    require(static_cast<int>(t.size()) == K.ambient_dim(), errc::dimension_mismatch,
            "translate dimension");
    VPolytope v = K.vrep();
    for (auto& p : v.vertices) p = add(p, t);
    return Body::from_vpolytope(std::move(v));
}

Body scale_reflect(const Body& K, const Scalar& rho) {
    VPolytope v = K.vrep();
    if (rho == 0) {
        return Body::from_vpolytope({{zero_vec(v.ambient_dim)}, v.ambient_dim});
    }
    for (auto& p : v.vertices) p = scaled(p, rho);
    return Body::from_vpolytope(std::move(v));
}

Body central_symmetral(const Body& K) {
    return minkowski_sum(K, scale_reflect(K, Scalar(-1)));
}

Body conv_union(const Body& K, const Body& L) {
    require(K.ambient_dim() == L.ambient_dim(), errc::dimension_mismatch,
            "conv_union dimension");
    std::vector<Vec> pts = K.vrep().vertices;
    pts.insert(pts.end(), L.vrep().vertices.begin(), L.vrep().vertices.end());
    return Body::from_points(std::move(pts));
}

// ---------------------------------------------------------------------------
// Intersection

std::optional<Body> intersect_many(const std::vector<HPolytope>& parts, Exec ex) {
    require(!parts.empty(), errc::empty_input, "intersection of nothing");
    const int n = parts[0].ambient_dim;
    for (const auto& p : parts)
        require(p.ambient_dim == n, errc::dimension_mismatch, "intersection dimension");

    // Same-normal halfspaces collapse to the smallest offset. Intersections
    // of translates of one body stay at that body's facet count this way.
    std::vector<Halfspace> hs;
    for (const auto& p : parts)
        for (const auto& h : p.halfspaces) hs.push_back(canonical_halfspace(h.normal, h.offset));
    std::sort(hs.begin(), hs.end(), halfspace_less);
    std::vector<Halfspace> dedup;
    for (auto& h : hs) {
        if (!dedup.empty() && dedup.back().normal == h.normal) continue; // kept smaller offset
        dedup.push_back(std::move(h));
    }
    hs = std::move(dedup);

    {
        LpProblem lp;
        lp.objective = zero_vec(n);
        for (const auto& h : hs) lp.add_row(h.normal, Rel::le, h.offset);
        if (lp_solve(lp).status == LpStatus::infeasible) return std::nullopt;
    }

    const std::size_t l = hs.size();
    auto max_over_others = [&](std::size_t k, const std::vector<bool>& active) {
        LpProblem lp;
        lp.sense = Sense::maximize;
        lp.objective = hs[k].normal;
        for (std::size_t j = 0; j < l; ++j) {
            if (j == k || !active[j]) continue;
            lp.add_row(hs[j].normal, Rel::le, hs[j].offset);
        }
        return lp_solve(lp);
    };

    std::vector<bool> active(l, true);
    if (l > 1) {
        // First pass in parallel against the full set: anything that still
        // cuts is certainly irredundant. Survivors are re-tested serially,
        // which stays sound when redundancy is mutual.
        std::vector<char> candidate(l, 0);
        for_each_index(
            l,
            [&](std::size_t k) {
                LpSolution s = max_over_others(k, active);
                if (s.status == LpStatus::optimal && *s.objective_value <= hs[k].offset)
                    candidate[k] = 1;
            },
            ex);
        for (std::size_t k = 0; k < l; ++k) {
            if (!candidate[k]) continue;
            LpSolution s = max_over_others(k, active);
            if (s.status == LpStatus::optimal && *s.objective_value <= hs[k].offset)
                active[k] = false;
        }
    }

    std::vector<Halfspace> kept;
    for (std::size_t k = 0; k < l; ++k)
        if (active[k]) kept.push_back(hs[k]);
    HPolytope hp{std::move(kept), n};

    VPolytope v = vertices_of(hp, ex);
    Body body = Body::from_vpolytope(std::move(v));
    body.impl_->h = std::make_shared<const HPolytope>(std::move(hp));
    std::call_once(body.impl_->h_once, [] {});
    return body;
}

std::optional<Body> intersect(const HPolytope& h1, const HPolytope& h2, Exec ex) {
    return intersect_many({h1, h2}, ex);
}

// ---------------------------------------------------------------------------
// Set equality and gauges

bool equal_sets(const Body& K, const Body& L) {
    require(K.ambient_dim() == L.ambient_dim(), errc::dimension_mismatch,
            "equal_sets dimension");
    if (K.vrep().vertices == L.vrep().vertices) return true;
    for (const auto& v : K.vrep().vertices)
        if (!contains(L, v)) return false;
    for (const auto& v : L.vrep().vertices)
        if (!contains(K, v)) return false;
    return true;
}

std::optional<Scalar> gauge_value_points(const std::vector<Vec>& generators, const Vec& x) {
    require(!generators.empty(), errc::empty_input, "gauge over empty generator list");
    const std::size_t n = x.size();
    const std::size_t m = generators.size();
    LpProblem lp;
    lp.objective = Vec(m, Scalar(1));
    lp.lower_bounds.assign(m, Scalar(0));
    for (std::size_t d = 0; d < n; ++d) {
        Vec row(m);
        for (std::size_t k = 0; k < m; ++k) row[k] = generators[k][d];
        lp.add_row(std::move(row), Rel::eq, x[d]);
    }
    LpSolution s = lp_solve(lp);
    if (s.status == LpStatus::infeasible) return std::nullopt;
    require(s.status == LpStatus::optimal, errc::internal, "gauge LP unbounded");
    return *s.objective_value;
}

std::optional<Scalar> gauge_value(const Body& K, const Vec& x) {
    require(static_cast<int>(x.size()) == K.ambient_dim(), errc::dimension_mismatch,
            "gauge point dimension");
    require(membership(K, zero_vec(x.size())) != Location::outside, errc::origin_not_in_body,
            "gauge body must contain the origin");
    return gauge_value_points(K.vrep().vertices, x);
}

bool is_origin_symmetric(const Body& K) {
    std::vector<Vec> neg;
    neg.reserve(K.vrep().vertices.size());
    for (const auto& v : K.vrep().vertices) neg.push_back(negated(v));
    std::sort(neg.begin(), neg.end(), VecLexLess{});
    return neg == K.vrep().vertices;
}

std::vector<Vec> pairwise_differences(const Body& K, const Body& L) {
    require(K.ambient_dim() == L.ambient_dim(), errc::dimension_mismatch,
            "difference dimension");
    std::vector<Vec> diffs;
    diffs.reserve(K.vrep().vertices.size() * L.vrep().vertices.size());
    for (const auto& a : K.vrep().vertices)
        for (const auto& b : L.vrep().vertices) diffs.push_back(sub(a, b));
    sort_unique(diffs);
    return diffs;
}

} // namespace gauge
