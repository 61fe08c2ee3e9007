#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gauge/radii.hpp"

namespace gauge {

// Touching points p^i with normals a^i supporting both bodies at p^i and
// 0 in conv{a^i}: the exact witness that a containment admits no shrink.
struct ContainmentCertificate {
    std::vector<Vec> points;
    std::vector<Vec> normals;       // canonically scaled
    std::vector<Scalar> coefficients; // >= 0, sum 1, sum coeff*normal = 0
    std::size_t size() const { return points.size(); }
};

void verify_certificate(const Body& K, const Body& C, const ContainmentCertificate& cert);

struct OptimalContainment {
    bool optimal = false;
    std::optional<ContainmentCertificate> certificate; // when optimal
    std::optional<Scalar> shrink;                      // rho < 1 otherwise
};

// Requires K inside C (same position); both full-dimensional.
OptimalContainment optimal_containment(const Body& K, const Body& C);

struct ConstantWidthReport {
    bool is_cw = false;
    std::optional<Scalar> rho;           // D(K,C)/2 when constant width
    std::optional<Vec> failing_direction; // breadth-deficient facet normal of K-K
};

ConstantWidthReport is_constant_width(const Body& K, const Body& C);

struct CompletenessResult {
    bool complete = false;
    // A vertex of the spherical intersection outside K: adjoining it
    // preserves the diameter.
    std::optional<Vec> extension_witness;
};

// Spherical intersection property with respect to C - C.
CompletenessResult is_complete(const Body& K, const Body& C);

// D = r + R with respect to the symmetrized gauge (1/2)(C - C).
bool is_pseudo_complete(const Body& K, const Body& C);

struct SimplexReducedReport {
    bool reduced = false;
    bool contained = false; // w'(C-C) inside S-S
    std::vector<std::pair<Vec, bool>> facet_touch; // prescribed facets of S-S
};

SimplexReducedReport is_reduced_simplex(const Body& S, const Body& C);

struct ReducedNecessaryReport {
    bool passes = false;
    std::vector<std::pair<Vec, bool>> vertex_pass; // width segment through each vertex
    bool gauge_vertices_on_boundary = false;       // vertices of (w/2)(C-C) on bd(K-K)
    std::vector<std::pair<Vec, bool>> gauge_vertex_flags;
};

// Necessary conditions for reducedness; a FAIL is conclusive, a PASS is not.
ReducedNecessaryReport reduced_necessary(const Body& K, const Body& C);

struct StructureReport {
    bool normals_subset = false;     // facet normals of K among those of C-C
    bool breadths_attained = false;  // b_a(K,C) = D at every facet normal of K
    bool representation_equal = false; // K equals the intersection of its slabs
    std::vector<std::pair<Vec, Vec>> anchors; // (slab normal, offset point d^j)
    std::vector<Vec> attained_directions;
    bool passed() const { return normals_subset && breadths_attained && representation_equal; }
};

StructureReport complete_structure_check(const Body& K, const Body& C);

struct TcompleteReport {
    bool pseudo = false;      // D = r + R
    bool sandwich = false;    // S-S in D C in (n+1)(S cap -S)
    bool complete = false;
    bool bohnenblust = false; // R/D = n/(n+1)
    bool agreement = false;
};

TcompleteReport verify_tcomplete(const Body& S, const Body& C);

struct LeichtweissReport {
    bool ratio = false;    // w/r = n+1
    bool sandwich = false; // (1+1/n)conv(S,-S) in wC in S-S with prescribed touching
    bool agreement = false;
    Scalar w, r;
};

// C may be any full-dimensional gauge body, symmetric or not.
LeichtweissReport verify_leichtweiss(const Body& S, const Body& C);

struct AsymContIncidence {
    Vec vertex;        // (1+1/s) p^i, vertex of the inner body
    Vec normal;        // -a^i, shared outer normal of the nested facets
    bool vertex_in_inner = false;
    bool vertex_on_middle_facet = false;
    bool middle_facet_in_outer_facet = false;
    bool ok() const { return vertex_in_inner && vertex_on_middle_facet && middle_facet_in_outer_facet; }
};

struct AsymContReport {
    Scalar s;
    Vec applied_centering;
    Body inner, middle, outer; // (1+1/s)conv(P,-P), P-P, (s+1)(P cap -P)
    ContainmentCertificate inner_cert, outer_cert;
    std::vector<AsymContIncidence> incidences;
    bool chain_ok = false;
    bool incidences_ok = false;
    bool passed() const { return chain_ok && incidences_ok; }
};

AsymContReport verify_asymcont(const Body& P);

// Per-vertex: is the vertex the endpoint of a diametrical segment?
std::vector<std::pair<Vec, bool>> diametrical_endpoint_check(const Body& K, const Body& C);

struct WidthLinearityEntry {
    Scalar lambda;
    Scalar mixed;    // w(lambda K + (1-lambda) K*, C)
    Scalar combined; // lambda w(K,C) + (1-lambda) w(K*,C)
    bool equal = false;
};

struct WidthLinearityReport {
    std::vector<WidthLinearityEntry> entries;
    bool all_equal = false;
    bool any_strict = false;
};

WidthLinearityReport width_linearity_probe(const Body& K, const Body& Kstar, const Body& C,
                                           const std::vector<Scalar>& lambdas);

// Shared helper: offsets of B's facets translated to v + B.
HPolytope translated_hrep(const Body& B, const Vec& v);

} // namespace gauge
