#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <alexdual/duality.hpp>

#include "support/oracles.hpp"

using namespace alexdual;

namespace {

SimplicialComplex fig_s() {
    return SimplicialComplex::from_facets(
        4, {Face::of({1, 2}), Face::of({1, 3}), Face::of({1, 4}), Face::of({2, 3})});
}

// Minimal 6-vertex triangulation of the projective plane: 10 triangles, every
// edge of K6, vertex links are pentagons.
SimplicialComplex projective_plane_6() {
    return SimplicialComplex::from_facets(
        6, {Face::of({1, 2, 5}), Face::of({1, 2, 6}), Face::of({1, 3, 4}),
            Face::of({1, 3, 6}), Face::of({1, 4, 5}), Face::of({2, 3, 4}),
            Face::of({2, 3, 5}), Face::of({2, 4, 6}), Face::of({3, 5, 6}),
            Face::of({4, 5, 6})});
}

// Seven-vertex torus: two orbits of triangles {i,i+1,i+3} and {i,i+2,i+3}
// modulo 7. Neighborly, so all 21 edges are present.
SimplicialComplex torus_7() {
    std::vector<Face> facets;
    for (int i = 0; i < 7; ++i) {
        const auto v = [i](int offset) { return 1 + (i + offset) % 7; };
        facets.push_back(Face::of({v(0), v(1), v(3)}));
        facets.push_back(Face::of({v(0), v(2), v(3)}));
    }
    return SimplicialComplex::from_facets(7, facets);
}

const std::vector<RingSpec> kAllRings = {RingSpec::integers(), RingSpec::rationals(),
                                         RingSpec::prime_field(2),
                                         RingSpec::prime_field(3)};

}  // namespace

TEST_CASE("phi maps of the running example") {
    const PhiMap phi2 = build_phi(fig_s(), 2);
    CHECK(phi2.source_basis ==
          std::vector<Face>{Face::of({1, 2, 3}), Face::of({1, 2, 4}), Face::of({1, 3, 4}),
                            Face::of({2, 3, 4})});
    CHECK(phi2.target_basis == std::vector<Face>{Face::of({1}), Face::of({2}),
                                                 Face::of({3}), Face::of({4})});
    // phi_2(e_234) = p({2,3,4}) e*_1 = +e*_1.
    CHECK(phi2.matrix == IntMatrix{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0},
                                   {-1, 0, 0, 0}});

    const PhiMap phi1 = build_phi(fig_s(), 1);
    CHECK(phi1.source_basis == std::vector<Face>{Face::of({2, 4}), Face::of({3, 4})});
    CHECK(phi1.target_basis == std::vector<Face>{Face::of({1, 2}), Face::of({1, 3})});
    // phi_1(e_24) = p({2,4}) e*_13 = +e*_13.
    CHECK(phi1.matrix == IntMatrix{{0, -1}, {1, 0}});

    for (int j = -1; j <= 4; ++j)
        CHECK(build_phi(SimplicialComplex::full_simplex(4), j).matrix.cols() == 0);
}

TEST_CASE("phi matrices are signed permutations") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_complexes(n))
            for (int j = -1; j <= n; ++j) {
                const PhiMap phi = build_phi(x, j);
                REQUIRE(phi.matrix.rows() == phi.matrix.cols());
                for (std::size_t r = 0; r < phi.matrix.rows(); ++r) {
                    int nonzero = 0;
                    for (std::size_t c = 0; c < phi.matrix.cols(); ++c) {
                        const Int& entry = phi.matrix(r, c);
                        if (entry == 0) continue;
                        ++nonzero;
                        REQUIRE((entry == 1 || entry == -1));
                        REQUIRE(phi.target_basis[r] ==
                                phi.source_basis[c].complement(n));
                        REQUIRE(entry == value(parity(phi.source_basis[c])));
                    }
                    REQUIRE(nonzero == 1);
                }
            }
}

TEST_CASE("commutation square on the running example and its degenerate cousins") {
    for (int j = -1; j <= 4; ++j) {
        CAPTURE(j);
        CHECK(check_commutation(fig_s(), j));
        CHECK(check_commutation(SimplicialComplex::full_simplex(4), j));
        CHECK(check_commutation(SimplicialComplex::void_complex(4), j));
    }
}

TEST_CASE("commutation square on every small complex") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& x : enumerate_complexes(n))
            for (int j = -1; j <= n; ++j)
                REQUIRE(check_commutation(x, j));
}

TEST_CASE("stripping the parity signs breaks the square") {
    const int n = 4, j = 2;
    const auto x = fig_s();
    const auto pair = relative_chain_complex(SimplicialComplex::full_simplex(n), x,
                                             RingSpec::integers());
    const auto dual_cochain =
        reduced_cochain_complex(x.alexander_dual(), RingSpec::integers());

    const auto unsigned_matrix = [](PhiMap phi) {
        for (std::size_t r = 0; r < phi.matrix.rows(); ++r)
            for (std::size_t c = 0; c < phi.matrix.cols(); ++c)
                phi.matrix(r, c) = abs(phi.matrix(r, c));
        return phi.matrix;
    };
    const IntMatrix lhs = unsigned_matrix(build_phi(x, j - 1)) * pair.operator_matrix(j);
    const IntMatrix rhs =
        dual_cochain.operator_matrix(n - j - 1) * unsigned_matrix(build_phi(x, j));
    CHECK(lhs != rhs);  // e_s -> e*_comp(s) alone is not a chain map
    CHECK(check_commutation(x, j));
}

TEST_CASE("lemma adfirst on fixed cases") {
    CHECK(check_lemma_adfirst(fig_s(), RingSpec::integers()));
    for (int n = 1; n <= 5; ++n)
        CHECK(check_lemma_adfirst(SimplicialComplex::full_simplex(n),
                                  RingSpec::integers()));
    CHECK(check_lemma_adfirst(SimplicialComplex::empty_complex(3), RingSpec::integers()));
    CHECK(check_lemma_adfirst(SimplicialComplex::void_complex(3), RingSpec::integers()));
}

TEST_CASE("lemma adfirst on every complex over a nonempty ground set") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_complexes(n))
            REQUIRE(check_lemma_adfirst(x, RingSpec::integers()));
}

TEST_CASE("duality on the running example") {
    const DualityReport report = verify_duality(fig_s(), RingSpec::integers());
    CHECK(report.all_matched);
    CHECK(report.complex_id == R"({"n":4,"facets":[[1,2],[1,3],[1,4],[2,3]]})");
    REQUIRE(report.per_degree.size() == 5);  // i = -1..3
    const DegreeComparison& row = report.per_degree[2];
    CHECK(row.degree == 1);
    CHECK(row.homology.free_rank == 1);
    CHECK(row.dual_cohomology.free_rank == 1);
    CHECK(row.matched);
    CHECK(verifier_line(report) == R"({"n":4,"facets":[[1,2],[1,3],[1,4],[2,3]]} ok)");
}

TEST_CASE("duality pairs the empty complex with a sphere") {
    // X = {{}} on 4 vertices dualizes to the boundary of the tetrahedron.
    const auto x = SimplicialComplex::empty_complex(4);
    CHECK(x.alexander_dual() == SimplicialComplex::skeleton(4, 2));
    const DualityReport report = verify_duality(x, RingSpec::integers());
    CHECK(report.all_matched);
    CHECK(report.per_degree[0].degree == -1);
    CHECK(report.per_degree[0].homology.free_rank == 1);   // H~_-1(X) = Z
    CHECK(report.per_degree[0].dual_cohomology.free_rank == 1);  // H~^2(sphere) = Z
    CHECK(oracles::reduced_euler_characteristic(x.alexander_dual()) == 1);
}

TEST_CASE("duality with torsion on the projective plane") {
    const auto rp2 = projective_plane_6();
    const auto chain = reduced_chain_complex(rp2, RingSpec::integers());
    const GroupInvariants h1 = homology_invariants(chain, 1);
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion == std::vector<Int>{2});
    CHECK(homology_invariants(chain, 2).is_trivial());

    const auto dual_cochain =
        reduced_cochain_complex(rp2.alexander_dual(), RingSpec::integers());
    const GroupInvariants h2_dual = homology_invariants(dual_cochain, 2);
    CHECK(h2_dual.free_rank == 0);
    CHECK(h2_dual.torsion == std::vector<Int>{2});

    CHECK(verify_duality(rp2, RingSpec::integers()).all_matched);
    // Over a field of characteristic 2 the torsion shows up as rank instead.
    CHECK(verify_duality(rp2, RingSpec::prime_field(2)).all_matched);
    CHECK(homology_invariants(reduced_chain_complex(rp2, RingSpec::prime_field(2)), 1)
              .free_rank == 1);
    CHECK(homology_invariants(reduced_chain_complex(rp2, RingSpec::rationals()), 1)
              .is_trivial());
}

TEST_CASE("duality on the seven-vertex torus") {
    const auto torus = torus_7();
    REQUIRE(torus.facets().size() == 14);
    REQUIRE(torus.faces_of_dimension(1).size() == 21);

    // Closed surface: every edge lies in exactly two triangles. A closed
    // 7-vertex surface with Euler characteristic 0 (reduced: -1) is a torus.
    for (const Face edge : torus.faces_of_dimension(1)) {
        int incident = 0;
        for (const Face triangle : torus.facets())
            if (edge.is_subset_of(triangle)) ++incident;
        REQUIRE(incident == 2);
    }
    REQUIRE(oracles::reduced_euler_characteristic(torus) == -1);

    const auto chain = reduced_chain_complex(torus, RingSpec::integers());
    CHECK(homology_invariants(chain, 0).is_trivial());
    const GroupInvariants h1 = homology_invariants(chain, 1);
    CHECK(h1.free_rank == 2);
    CHECK(h1.torsion.empty());
    const GroupInvariants h2 = homology_invariants(chain, 2);
    CHECK(h2.free_rank == 1);
    CHECK(h2.torsion.empty());

    CHECK(verify_duality(torus, RingSpec::integers()).all_matched);
    CHECK(verify_duality(torus, RingSpec::prime_field(2)).all_matched);
    CHECK(check_lemma_adfirst(torus, RingSpec::integers()));
    for (int j = -1; j <= 7; ++j) REQUIRE(check_commutation(torus, j));
}

TEST_CASE("duality on every small complex over all supported rings") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& x : enumerate_complexes(n))
            for (const RingSpec& ring : kAllRings) {
                const DualityReport report = verify_duality(x, ring);
                CAPTURE(report.complex_id, ring.name());
                REQUIRE(report.all_matched);
            }
}

TEST_CASE("the empty complex on no vertices is the one true counterexample") {
    // Over an empty ground set the full simplex is {{}}, which is not acyclic:
    // its homology is R in degree -1, while its dual (the void complex) has
    // none. Duality and the adfirst identity both genuinely fail here.
    const auto x = SimplicialComplex::empty_complex(0);
    CHECK(x == SimplicialComplex::full_simplex(0));
    const DualityReport report = verify_duality(x, RingSpec::integers());
    CHECK_FALSE(report.all_matched);
    REQUIRE(report.per_degree.size() == 1);
    CHECK(report.per_degree[0].homology.free_rank == 1);
    CHECK(report.per_degree[0].dual_cohomology.is_trivial());
    CHECK_FALSE(check_lemma_adfirst(x, RingSpec::integers()));

    // The sibling void complex is fine, and so is everything on n >= 1.
    CHECK(verify_duality(SimplicialComplex::void_complex(0), RingSpec::integers())
              .all_matched);
}

TEST_CASE("exhaustive enumeration counts and contents") {
    CHECK(enumerate_complexes(0).size() == 2);
    CHECK(enumerate_complexes(1).size() == 3);
    CHECK(enumerate_complexes(2).size() == 6);
    CHECK(enumerate_complexes(3).size() == 20);
    CHECK(enumerate_complexes(4).size() == 168);
    CHECK_THROWS_AS(enumerate_complexes(6), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_complexes(-1), std::invalid_argument);

    const auto on_zero = enumerate_complexes(0);
    CHECK(on_zero.front() == SimplicialComplex::void_complex(0));
    CHECK(on_zero.back() == SimplicialComplex::empty_complex(0));

    const auto on_two = enumerate_complexes(2);
    const std::set<std::string> expected = {
        R"({"n":2,"facets":[]})",        R"({"n":2,"facets":[[]]})",
        R"({"n":2,"facets":[[1]]})",     R"({"n":2,"facets":[[2]]})",
        R"({"n":2,"facets":[[1],[2]]})", R"({"n":2,"facets":[[1,2]]})"};
    std::set<std::string> actual;
    for (const auto& x : on_two) actual.insert(serialize_complex(x));
    CHECK(actual == expected);
}

TEST_CASE("enumeration matches raw power-set filtering") {
    for (int n = 0; n <= 4; ++n) {
        const auto families = oracles::brute_force_families(n);
        std::set<std::uint32_t> expected(families.begin(), families.end());
        std::set<std::uint32_t> actual;
        for (const auto& x : enumerate_complexes(n)) {
            REQUIRE(x.ground_set_size() == n);
            actual.insert(oracles::family_mask_of(x));
        }
        REQUIRE(actual.size() == enumerate_complexes(n).size());  // no duplicates
        REQUIRE(actual == expected);
    }
}

TEST_CASE("sampled complexes are valid and reproducible") {
    CHECK(sample_complexes(6, 0, 1).empty());
    const auto first = sample_complexes(6, 200, 1);
    const auto second = sample_complexes(6, 200, 1);
    CHECK(first.size() == 200);
    REQUIRE(first == second);
    CHECK(first != sample_complexes(6, 200, 2));

    for (const auto& x : first) {
        REQUIRE(x.ground_set_size() == 6);
        // Facets form an antichain of in-range faces.
        for (Face f : x.facets()) {
            REQUIRE((f.bits() >> 6) == 0);
            for (Face g : x.facets())
                if (f != g) REQUIRE_FALSE(f.is_subset_of(g));
        }
    }
}
