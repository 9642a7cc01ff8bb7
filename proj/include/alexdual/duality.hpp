#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexdual/chain_complex.hpp"
#include "alexdual/face.hpp"
#include "alexdual/io.hpp"
#include "alexdual/matrix.hpp"
#include "alexdual/ring.hpp"
#include "alexdual/simplicial_complex.hpp"
#include "alexdual/smith.hpp"

namespace alexdual {

/**
 * The degree-j chain isomorphism e_s -> p(s) e*_{comp(s)} between the relative
 * complex of (full simplex, X) and the cochain complex of the dual, as a
 * signed permutation matrix over canonical bases.
 */
struct PhiMap {
    int degree = 0;
    std::vector<Face> source_basis;  // faces s not in X with dim s = degree
    std::vector<Face> target_basis;  // faces of X* of dimension n - degree - 2
    IntMatrix matrix;                // entry p(s) at (comp(s), s)

    friend bool operator==(const PhiMap&, const PhiMap&) = default;
};

inline PhiMap build_phi(const SimplicialComplex& x, int degree) {
    const int n = x.ground_set_size();
    const SimplicialComplex full = SimplicialComplex::full_simplex(n);
    const SimplicialComplex dual = x.alexander_dual();

    PhiMap phi;
    phi.degree = degree;
    for (Face f : full.faces_of_dimension(degree))
        if (!x.contains(f)) phi.source_basis.push_back(f);
    phi.target_basis = dual.faces_of_dimension(n - degree - 2);

    phi.matrix = IntMatrix(phi.target_basis.size(), phi.source_basis.size());
    for (std::size_t c = 0; c < phi.source_basis.size(); ++c) {
        const Face s = phi.source_basis[c];
        const Face target = s.complement(n);
        std::size_t r = 0;
        while (r < phi.target_basis.size() && phi.target_basis[r] != target) ++r;
        if (r == phi.target_basis.size())
            throw std::logic_error("build_phi: complement of " + to_string(s) +
                                   " missing from dual basis");
        phi.matrix(r, c) = value(parity(s));
    }
    return phi;
}

/**
 * The commutation square at degree j: with D the relative boundary of
 * (full simplex, X) and del the coboundary of X*, checks the exact matrix
 * identity phi_(j-1) * D_j == del^(n-j-1) * phi_j.
 */
inline bool check_commutation(const SimplicialComplex& x, int degree) {
    const int n = x.ground_set_size();
    const RingSpec ring = RingSpec::integers();
    const GradedChainComplex relative =
        relative_chain_complex(SimplicialComplex::full_simplex(n), x, ring);
    const GradedChainComplex dual_cochain =
        reduced_cochain_complex(x.alexander_dual(), ring);

    const PhiMap phi_here = build_phi(x, degree);
    const PhiMap phi_prev = build_phi(x, degree - 1);
    IntMatrix d = relative.operator_matrix(degree);
    IntMatrix coboundary = dual_cochain.operator_matrix(n - degree - 1);
    return phi_prev.matrix * d == coboundary * phi_here.matrix;
}

/// H~_i(X) vs H~_(i+1)(full simplex, X) over the ring, for all i in -1..n-1.
inline bool check_lemma_adfirst(const SimplicialComplex& x, const RingSpec& ring) {
    const int n = x.ground_set_size();
    const GradedChainComplex chain = reduced_chain_complex(x, ring);
    const GradedChainComplex relative =
        relative_chain_complex(SimplicialComplex::full_simplex(n), x, ring);
    for (int i = -1; i <= n - 1; ++i)
        if (homology_invariants(chain, i) != homology_invariants(relative, i + 1))
            return false;
    return true;
}

struct DegreeComparison {
    int degree = 0;                 // i
    GroupInvariants homology;       // H~_i(X)
    GroupInvariants dual_cohomology;  // H~^(n-i-3)(X*)
    bool matched = false;

    friend bool operator==(const DegreeComparison&, const DegreeComparison&) = default;
};

struct DualityReport {
    std::string complex_id;  // canonical facet serialization
    int ground_set_size = 0;
    std::vector<DegreeComparison> per_degree;  // i = -1 .. n-1
    bool all_matched = false;

    friend bool operator==(const DualityReport&, const DualityReport&) = default;
};

/// Compares H~_i(X) with H~^(n-i-3)(X*) over the ring for all i in -1..n-1.
inline DualityReport verify_duality(const SimplicialComplex& x, const RingSpec& ring) {
    const int n = x.ground_set_size();
    DualityReport report;
    report.complex_id = serialize_complex(x);
    report.ground_set_size = n;
    report.all_matched = true;

    const GradedChainComplex chain = reduced_chain_complex(x, ring);
    const GradedChainComplex dual_cochain =
        reduced_cochain_complex(x.alexander_dual(), ring);
    for (int i = -1; i <= n - 1; ++i) {
        DegreeComparison row;
        row.degree = i;
        row.homology = homology_invariants(chain, i);
        row.dual_cohomology = homology_invariants(dual_cochain, n - i - 3);
        row.matched = row.homology == row.dual_cohomology;
        report.all_matched = report.all_matched && row.matched;
        report.per_degree.push_back(std::move(row));
    }
    return report;
}

/// One verifier summary line: canonical facet form plus the matched flag.
inline std::string verifier_line(const DualityReport& report) {
    return report.complex_id + (report.all_matched ? " ok" : " FAIL");
}

/// Per-degree detail lines of a report, two-space indented.
inline std::string report_details(const DualityReport& report) {
    std::string out;
    for (const DegreeComparison& row : report.per_degree) {
        out += "  i=" + std::to_string(row.degree) + ": left=" + to_string(row.homology) +
               " right=" + to_string(row.dual_cohomology) +
               (row.matched ? " ok" : " MISMATCH") + "\n";
    }
    return out;
}

/// Largest ground set for exhaustive complex enumeration (7581 complexes).
inline constexpr int kMaxExhaustiveGroundSet = 5;

/**
 * Visits every simplicial complex on {1..n} exactly once, as facet
 * antichains: a depth-first walk over the subsets in (size, value) order,
 * admitting a subset only when all its codimension-1 subsets are already in.
 * The void complex comes first and the full simplex last.
 */
inline void enumerate_complexes(int n,
                                const std::function<void(const SimplicialComplex&)>& visit) {
    if (n < 0 || n > kMaxExhaustiveGroundSet)
        throw std::invalid_argument(
            "enumerate_complexes: exhaustive enumeration supports n in 0.." +
            std::to_string(kMaxExhaustiveGroundSet) +
            "; use sample_complexes for larger ground sets");
    const std::uint32_t total = std::uint32_t{1} << n;

    std::vector<std::uint32_t> order(total);
    for (std::uint32_t s = 0; s < total; ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<char> member(total, 0);
    const auto emit = [&] {
        std::vector<Face> facets = detail::facets_of_family(n, member);
        visit(SimplicialComplex::from_facets(n, facets));
    };
    const std::function<void(std::uint32_t)> walk = [&](std::uint32_t index) {
        if (index == total) {
            emit();
            return;
        }
        const std::uint32_t s = order[index];
        walk(index + 1);  // exclude s
        bool admissible = true;
        for (std::uint32_t b = s; b != 0; b &= b - 1)
            if (!member[s & ~(b & (~b + 1))]) { admissible = false; break; }
        if (admissible) {
            member[s] = 1;
            walk(index + 1);
            member[s] = 0;
        }
    };
    walk(0);
}

inline std::vector<SimplicialComplex> enumerate_complexes(int n) {
    std::vector<SimplicialComplex> out;
    enumerate_complexes(n, [&](const SimplicialComplex& x) { out.push_back(x); });
    return out;
}

/**
 * Deterministic pseudorandom complexes: each sample downward-closes a handful
 * of random generator faces. Reproducible from the seed.
 */
inline std::vector<SimplicialComplex> sample_complexes(int n, int count,
                                                       std::uint64_t seed) {
    if (n < 0 || n > kMaxGroundSetSize)
        throw std::invalid_argument("sample_complexes: n must be in 0.." +
                                    std::to_string(kMaxGroundSetSize));
    if (count < 0) throw std::invalid_argument("sample_complexes: count must be >= 0");
    std::mt19937_64 rng(seed);
    const std::uint32_t full = n == 0 ? 0u : (~std::uint32_t{0} >> (32 - n));
    std::vector<SimplicialComplex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const std::uint64_t generators = rng() % static_cast<std::uint64_t>(n + 3);
        std::vector<Face> faces;
        for (std::uint64_t g = 0; g < generators; ++g)
            faces.push_back(Face(static_cast<std::uint32_t>(rng()) & full));
        out.push_back(SimplicialComplex::from_facets(n, faces));
    }
    return out;
}

}  // namespace alexdual
