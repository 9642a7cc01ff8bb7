#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "alexdual/face.hpp"
#include "alexdual/matrix.hpp"
#include "alexdual/ring.hpp"
#include "alexdual/simplicial_complex.hpp"
#include "alexdual/smith.hpp"

namespace alexdual {

enum class Orientation { homological, cohomological };

/**
 * A graded family of free-module bases (face lists in canonical order) and
 * operator matrices between them.
 *
 * Homological orientation: the operator at index i is the boundary
 * C_i -> C_(i-1), of shape |basis(i-1)| x |basis(i)|. Cohomological
 * orientation: the operator at index i is the coboundary C^(i-1) -> C^i, of
 * shape |basis(i)| x |basis(i-1)|. Degrees outside the stored range carry
 * zero modules; operator_matrix synthesizes zero matrices of the right shape
 * there.
 */
class GradedChainComplex {
public:
    GradedChainComplex(RingSpec ring, Orientation orientation)
        : ring_(ring), orientation_(orientation) {}

    const RingSpec& ring() const { return ring_; }
    Orientation orientation() const { return orientation_; }

    /// Smallest and largest stored degree; min > max means no stored modules.
    int min_degree() const { return bases_.empty() ? 0 : bases_.begin()->first; }
    int max_degree() const { return bases_.empty() ? -1 : bases_.rbegin()->first; }

    const std::vector<Face>& basis(int degree) const {
        static const std::vector<Face> kEmpty;
        const auto it = bases_.find(degree);
        return it == bases_.end() ? kEmpty : it->second;
    }

    IntMatrix operator_matrix(int index) const {
        const auto it = operators_.find(index);
        if (it != operators_.end()) return it->second;
        const std::size_t from = basis(orientation_ == Orientation::homological ? index
                                                                                : index - 1)
                                     .size();
        const std::size_t to = basis(orientation_ == Orientation::homological ? index - 1
                                                                              : index)
                                   .size();
        return IntMatrix(to, from);
    }

    void set_basis(int degree, std::vector<Face> faces) {
        bases_[degree] = std::move(faces);
    }

    void set_operator(int index, IntMatrix m) { operators_[index] = std::move(m); }

    friend bool operator==(const GradedChainComplex&, const GradedChainComplex&) = default;

private:
    RingSpec ring_;
    Orientation orientation_;
    std::map<int, std::vector<Face>> bases_;
    std::map<int, IntMatrix> operators_;
};

namespace detail {

/// Boundary matrix entries: column per face s of the degree-i basis, row
/// sgn(j, s) at s\j whenever s\j appears in the degree-(i-1) basis.
inline IntMatrix boundary_matrix(const std::vector<Face>& domain,
                                 const std::vector<Face>& codomain) {
    std::map<Face, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) row_of[codomain[r]] = r;
    IntMatrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const Face s = domain[c];
        for (Vertex j : s.vertices()) {
            const auto it = row_of.find(s.without(j));
            if (it == row_of.end()) continue;
            m(it->second, c) = value(sign(j, s));
        }
    }
    return m;
}

}  // namespace detail

/**
 * The reduced chain complex of X: bases are the faces per dimension from -1
 * (the empty face) up to dim X, with the boundary d_i(e_s) =
 * sum_{j in s} sgn(j, s) e_{s\j}. The void complex yields an all-empty
 * complex.
 */
inline GradedChainComplex reduced_chain_complex(const SimplicialComplex& x,
                                                const RingSpec& ring) {
    GradedChainComplex c(ring, Orientation::homological);
    if (x.is_void()) return c;
    const int dim = x.dimension();
    for (int i = -1; i <= dim; ++i) c.set_basis(i, x.faces_of_dimension(i));
    for (int i = 0; i <= dim; ++i)
        c.set_operator(i, detail::boundary_matrix(c.basis(i), c.basis(i - 1)));
    return c;
}

/// The reduced cochain complex of X: same bases, coboundary at index i equal
/// to the transpose of the boundary at index i.
inline GradedChainComplex reduced_cochain_complex(const SimplicialComplex& x,
                                                  const RingSpec& ring) {
    GradedChainComplex c(ring, Orientation::cohomological);
    if (x.is_void()) return c;
    const int dim = x.dimension();
    for (int i = -1; i <= dim; ++i) c.set_basis(i, x.faces_of_dimension(i));
    for (int i = 0; i <= dim; ++i)
        c.set_operator(i,
                       detail::boundary_matrix(c.basis(i), c.basis(i - 1)).transpose());
    return c;
}

/**
 * The relative chain complex of the pair (X, A): bases are the faces of X not
 * in A per dimension, and boundary terms whose target lies in A are dropped.
 * Requires A to be a subcomplex of X.
 */
inline GradedChainComplex relative_chain_complex(const SimplicialComplex& x,
                                                 const SimplicialComplex& a,
                                                 const RingSpec& ring) {
    if (!is_subcomplex(a, x))
        throw std::invalid_argument("relative_chain_complex: A is not a subcomplex of X");
    GradedChainComplex c(ring, Orientation::homological);
    if (x.is_void()) return c;
    const int dim = x.dimension();
    for (int i = -1; i <= dim; ++i) {
        std::vector<Face> kept;
        for (Face f : x.faces_of_dimension(i))
            if (!a.contains(f)) kept.push_back(f);
        c.set_basis(i, std::move(kept));
    }
    for (int i = 0; i <= dim; ++i)
        c.set_operator(i, detail::boundary_matrix(c.basis(i), c.basis(i - 1)));
    return c;
}

/**
 * (Co)homology invariants at the given degree: ker/im of the two operators
 * adjacent to it, respecting orientation. Degrees outside the stored range
 * carry the zero group.
 */
inline GroupInvariants homology_invariants(const GradedChainComplex& c, int degree) {
    if (c.orientation() == Orientation::homological)
        return quotient_invariants(c.operator_matrix(degree), c.operator_matrix(degree + 1),
                                   c.ring());
    return quotient_invariants(c.operator_matrix(degree + 1), c.operator_matrix(degree),
                               c.ring());
}

}  // namespace alexdual
