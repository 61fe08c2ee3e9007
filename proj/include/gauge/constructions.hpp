#pragma once

#include <cstdint>
#include <string>

#include "gauge/predicates.hpp"

namespace gauge {

// Deterministic, versioned randomness for generators and suites.
inline constexpr const char* generator_version = "splitmix64-v1";

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long uniform(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Scalar rational(long max_abs_num, long den) { return scalar(uniform(-max_abs_num, max_abs_num), den); }
};

struct CompletionResult {
    Body completed;
    int iterations = 0;
    bool converged = false;
    std::vector<Vec> added;
};

// Spherical-hull iteration: adjoin the lex-smallest admissible vertex until
// the fixed point. The diameter is asserted invariant at every step; a
// non-converged result is returned explicitly, never silently.
CompletionResult completion(const Body& K, const Body& C, int max_iter = 10000);

struct ReductionResult {
    Body reduced;
    int removed = 0;
    bool degenerate = false; // flat input returned unchanged
    ReducedNecessaryReport certificate;
};

// Greedy width-preserving vertex pruning; a candidate, not a certified
// reduction.
ReductionResult reduction_candidate(const Body& K, const Body& C);

struct FacetPairEntry {
    std::size_t i, j; // facet indices into C.hrep()
    int dim;          // dimension of the intersection face
};

// Intersection dimension of every non-disjoint facet pair; dim-0 pairs are
// non-perfectness triggers.
std::vector<FacetPairEntry> facet_pair_scan(const Body& C);

struct SimplicityResult {
    bool simple = false;
    std::optional<Vec> offending_vertex; // in more than three facets
};

SimplicityResult simplicity_check_3d(const Body& C);

struct NonPerfectWitness {
    Vec vertex;                    // F1 cap F2 = {vertex}
    std::size_t facet1, facet2;
    Vec normal1, normal2;
    Vec direction;                 // a with h(C,a) = 1, support set {vertex}
    Scalar epsilon;                // slice level actually used
    Vec x1, x2;                    // relint points of F_i cap {a = 1-eps}
    Body X;                        // (n-2)-dimensional slice
    Body Y;                        // conv({0, x2-x1} with X)
    Body Ystar;                    // completion of Y: complete, not constant width
    ConstantWidthReport cw_failure;
    int completion_iterations = 0;
};

struct EgglestonOutcome {
    bool triggered = false; // false: no vertex-only facet pair
    std::optional<NonPerfectWitness> witness;
};

EgglestonOutcome eggleston_witness(const Body& C, const Scalar& epsilon);

enum class PerfectStatus { not_perfect, perfect_2d, undecided_necessary_passed };

struct PerfectVerdict {
    PerfectStatus status = PerfectStatus::undecided_necessary_passed;
    std::optional<NonPerfectWitness> witness; // present on not_perfect
    std::string notes;
};

PerfectVerdict perfect_probe(const Body& C);

enum class BodyKind {
    regular_simplex,
    centered_simplex,
    cube,
    cross_polytope,
    double_pyramid,
    random_polytope,
};

BodyKind body_kind_from_string(const std::string& name);

struct GenerateParams {
    int vertex_count = 0; // random_polytope only; 0 means 2n + 2
};

Body generate(BodyKind kind, int n, const GenerateParams& params = {}, std::uint64_t seed = 0);

// Random full-dimensional bodies used by suites and tests.
Body random_polytope_body(int n, int vertex_count, SplitMix64& rng);
Body random_symmetric_body(int n, int generator_count, SplitMix64& rng);
Body random_centered_simplex(int n, SplitMix64& rng);

} // namespace gauge
