#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gauge/linalg.hpp"
#include "gauge/lp.hpp"
#include "gauge/parallel.hpp"

namespace gauge {

// Exact V-/H-representation polytope calculus for ambient dimension <= 4.

struct VPolytope {
    std::vector<Vec> vertices; // irredundant, lex-sorted
    int ambient_dim = 0;
};

struct Halfspace {
    // Canonical scaling: the first nonzero coordinate of normal has |.| = 1.
    Vec normal;
    Scalar offset;
};

struct HPolytope {
    std::vector<Halfspace> halfspaces; // lex-sorted by (normal, offset)
    int ambient_dim = 0;
};

Halfspace canonical_halfspace(Vec normal, Scalar offset);

bool halfspace_less(const Halfspace& a, const Halfspace& b);

// Immutable dual-representation body. The H-rep is computed lazily and
// cached once; copies share the cache.
class Body {
public:
    Body() = default;

    // Hulls the input (redundant points welcome).
    static Body from_points(std::vector<Vec> points);
    // Trusts the vertex list to be irredundant; sorts it.
    static Body from_vpolytope(VPolytope v);

    const VPolytope& vrep() const;
    const HPolytope& hrep() const; // lazy, cached
    const AffineHull& affine() const;

    int ambient_dim() const;
    int intrinsic_dim() const;
    bool full_dim() const;
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    friend std::optional<Body> intersect_many(const std::vector<HPolytope>& parts, Exec ex);
};

enum class Location { inside, boundary, outside };

// h(K,a) with the full argmax vertex set.
std::pair<Scalar, std::vector<Vec>> support(const Body& K, const Vec& a);

Scalar support_value(const Body& K, const Vec& a);

Location membership(const Body& K, const Vec& x);

inline bool contains(const Body& K, const Vec& x) { return membership(K, x) != Location::outside; }

struct HullDiscard {
    std::size_t point_index;
    // convex combination over the retained point list proving redundancy
    std::vector<std::pair<std::size_t, Scalar>> combination;
};

struct HullResult {
    VPolytope hull;
    std::vector<HullDiscard> discarded;
};

HullResult hull_vertices_audited(const std::vector<Vec>& points, Exec ex = default_exec());
VPolytope hull_vertices(const std::vector<Vec>& points, Exec ex = default_exec());

// Facet enumeration of a full-dimensional V-polytope: every supporting
// hyperplane spanned by an affinely independent vertex subset is a facet.
HPolytope facets_of(const VPolytope& v, Exec ex = default_exec());

// Exact vertex enumeration of a bounded nonempty H-polytope.
VPolytope vertices_of(const HPolytope& h, Exec ex = default_exec());

Body minkowski_sum(const Body& K, const Body& L);
Body translate(const Body& K, const Vec& t);
Body scale_reflect(const Body& K, const Scalar& rho);
Body central_symmetral(const Body& K); // K - K

// nullopt on empty intersection (status, not failure).
std::optional<Body> intersect(const HPolytope& h1, const HPolytope& h2, Exec ex = default_exec());
std::optional<Body> intersect_many(const std::vector<HPolytope>& parts, Exec ex = default_exec());

Body conv_union(const Body& K, const Body& L);

bool equal_sets(const Body& K, const Body& L);

// min{lambda >= 0 : x in lambda K}; nullopt means no such lambda exists.
// Requires 0 in K. Redundant generator lists are fine.
std::optional<Scalar> gauge_value(const Body& K, const Vec& x);
std::optional<Scalar> gauge_value_points(const std::vector<Vec>& generators, const Vec& x);

bool is_origin_symmetric(const Body& K);

std::vector<Vec> pairwise_differences(const Body& K, const Body& L);

} // namespace gauge
