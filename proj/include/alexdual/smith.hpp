#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexdual/matrix.hpp"
#include "alexdual/ring.hpp"

namespace alexdual {

/// Diagonal of a Smith normal form: the nonzero invariant factors
/// d_1 | d_2 | ... | d_r. rank == diagonal.size().
struct SmithForm {
    std::vector<Int> diagonal;
    std::size_t rank = 0;

    friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

/**
 * Isomorphism class of a finitely generated module over the ring: free rank
 * plus the chain of torsion invariant factors (each >= 2, each dividing the
 * next). Over a field the torsion list is always empty.
 */
struct GroupInvariants {
    RingSpec ring = RingSpec::integers();
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Renders invariants as e.g. "Z", "Z^2 (+) Z/2 (+) Z/4", "Q^3", "0".
inline std::string to_string(const GroupInvariants& g) {
    if (g.is_trivial()) return "0";
    std::string out;
    if (g.free_rank > 0) {
        out = g.ring.name();
        if (g.free_rank > 1) out += "^" + std::to_string(g.free_rank);
    }
    for (const Int& d : g.torsion) {
        if (!out.empty()) out += " (+) ";
        out += "Z/" + d.str();
    }
    return out;
}

namespace detail {

/**
 * In-place diagonalization under unimodular row/column operations. Pivot rule:
 * minimal nonzero |entry| of the trailing submatrix, ties broken by row-major
 * position. Divisibility of each pivot into the whole trailing submatrix is
 * enforced before the corner advances, so the diagonal comes out as an
 * invariant-factor chain.
 *
 * If winv is nonnull it must be the identity of size m.cols() on entry; every
 * column operation applied to m is mirrored so that winv stays the inverse of
 * the accumulated column transform. Row operations do not touch winv.
 */
inline std::size_t snf_diagonalize(IntMatrix& m, IntMatrix* winv) {
    const std::size_t rows = m.rows(), cols = m.cols();

    const auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, a), m(r, b));
        if (winv)
            for (std::size_t c = 0; c < winv->cols(); ++c) std::swap((*winv)(a, c), (*winv)(b, c));
    };
    // col_dst += q * col_src  <=>  row_src -= q * row_dst on the inverse.
    const auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) m(r, dst) += q * m(r, src);
        if (winv)
            for (std::size_t c = 0; c < winv->cols(); ++c)
                (*winv)(src, c) -= q * (*winv)(dst, c);
    };
    const auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(a, c), m(b, c));
    };
    const auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) m(dst, c) += q * m(src, c);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Minimal |entry| in the trailing submatrix, row-major tie break.
        std::size_t pr = 0, pc = 0;
        Int best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                const Int& x = m(r, c);
                if (x == 0) continue;
                Int a = abs(x);
                if (best == 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (best == 0) break;  // trailing submatrix is zero
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool dirty = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (m(r, t) == 0) continue;
            Int q = m(r, t) / m(t, t);
            if (q != 0) add_row(r, t, -q);
            if (m(r, t) != 0) dirty = true;  // remainder smaller than pivot
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (m(t, c) == 0) continue;
            Int q = m(t, c) / m(t, t);
            if (q != 0) add_col(c, t, -q);
            if (m(t, c) != 0) dirty = true;
        }
        if (dirty) continue;

        // Row and column are clear; force the pivot to divide the rest.
        bool fixed = false;
        for (std::size_t r = t + 1; r < rows && !fixed; ++r)
            for (std::size_t c = t + 1; c < cols && !fixed; ++c)
                if (m(r, c) % m(t, t) != 0) {
                    add_row(t, r, 1);  // column t is clear, so the corner keeps its value
                    fixed = true;
                }
        if (fixed) continue;

        if (m(t, t) < 0)
            for (std::size_t c = t; c < cols; ++c) m(t, c) = -m(t, c);
        ++t;
    }
    return t;  // number of nonzero diagonal entries
}

}  // namespace detail

/// Smith normal form: the invariant factors of m under unimodular operations.
/// Deterministic for a given input.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix work = m;
    const std::size_t rank = detail::snf_diagonalize(work, nullptr);
    SmithForm out;
    out.rank = rank;
    out.diagonal.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.diagonal.push_back(work(i, i));
    return out;
}

/// Rank of m with entries read in the given ring. Over the rationals (or the
/// integers, same rank) this is fraction-free Gaussian elimination; over F_p
/// the entries are reduced mod p first.
inline std::size_t rank_over(const IntMatrix& m, const RingSpec& ring) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (ring.kind() == RingSpec::Kind::prime_field) {
        const std::int64_t p = ring.prime();
        std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                a[r][c] = static_cast<std::int64_t>(((m(r, c) % p) + p) % p);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows && a[pivot][col] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(a[rank], a[pivot]);
            const std::int64_t piv = a[rank][col];
            for (std::size_t i = rank + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                const std::int64_t f = a[i][col];
                for (std::size_t j = col; j < cols; ++j)
                    a[i][j] = ((a[i][j] * piv - a[rank][j] * f) % p + p) % p;
            }
            ++rank;
        }
        return rank;
    }
    // Bareiss: exact division by the previous pivot keeps entries integral.
    IntMatrix a = m;
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(pivot, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a(i, j) = (a(i, j) * a(rank, col) - a(i, col) * a(rank, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

/**
 * Invariants of ker(boundary_in) / im(boundary_out) over the ring. The two
 * operators must be composable with boundary_in * boundary_out == 0; a
 * violation is a caller bug and raises std::logic_error.
 *
 * Over the integers the torsion is read off a Smith normal form of
 * boundary_out rewritten in a lattice basis of ker(boundary_in); the base
 * change is tracked through the column operations of the first SNF.
 */
inline GroupInvariants quotient_invariants(const IntMatrix& boundary_in,
                                           const IntMatrix& boundary_out,
                                           const RingSpec& ring) {
    if (boundary_in.cols() != boundary_out.rows())
        throw std::logic_error("quotient_invariants: ambient rank mismatch (" +
                               std::to_string(boundary_in.cols()) + " vs " +
                               std::to_string(boundary_out.rows()) + ")");
    if (!(boundary_in * boundary_out).is_zero())
        throw std::logic_error("quotient_invariants: chain condition violated");

    const std::size_t ambient = boundary_in.cols();
    GroupInvariants out;
    out.ring = ring;

    if (ring.is_field()) {
        const std::size_t nullity = ambient - rank_over(boundary_in, ring);
        out.free_rank = nullity - rank_over(boundary_out, ring);
        return out;
    }

    IntMatrix work = boundary_in;
    IntMatrix winv = IntMatrix::identity(ambient);
    const std::size_t rank_in = detail::snf_diagonalize(work, &winv);

    // Coordinates of the image in the kernel-lattice basis: rows of
    // winv * boundary_out past the pivot block. The pivot rows vanish because
    // d_i * row_i = (U * in * out)_i = 0 with d_i != 0.
    const IntMatrix in_kernel_coords = winv * boundary_out;
    for (std::size_t r = 0; r < rank_in; ++r)
        for (std::size_t c = 0; c < in_kernel_coords.cols(); ++c)
            if (in_kernel_coords(r, c) != 0)
                throw std::logic_error("quotient_invariants: image escapes the kernel");

    const SmithForm factors =
        smith_normal_form(in_kernel_coords.row_slice(rank_in, ambient));
    out.free_rank = (ambient - rank_in) - factors.rank;
    for (const Int& d : factors.diagonal)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

}  // namespace alexdual
