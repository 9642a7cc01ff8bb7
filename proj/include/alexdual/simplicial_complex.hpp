#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alexdual/face.hpp"

namespace alexdual {

namespace detail {

/// Membership table of a downward-closed family over {1..n}, indexed by face
/// bitmask. Input faces are treated as generators; the closure is taken.
inline std::vector<char> close_downward(int n, const std::vector<Face>& generators) {
    std::vector<char> table(std::size_t{1} << n, 0);
    for (Face f : generators) table[f.bits()] = 1;
    // Sweep from large masks to small: each member marks its codimension-1 subsets.
    for (std::uint32_t bits = (std::uint32_t{1} << n); bits-- > 0;) {
        if (!table[bits]) continue;
        for (std::uint32_t b = bits; b != 0; b &= b - 1)
            table[bits & ~(b & (~b + 1))] = 1;
    }
    return table;
}

/// Maximal members of a downward-closed family, in lexicographic order.
inline std::vector<Face> facets_of_family(int n, const std::vector<char>& table) {
    std::vector<Face> facets;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        if (!table[bits]) continue;
        bool maximal = true;
        for (int v = 1; v <= n && maximal; ++v)
            if (!(bits >> (v - 1) & 1u) && table[bits | (std::uint32_t{1} << (v - 1))])
                maximal = false;
        if (maximal) facets.push_back(Face(bits));
    }
    std::sort(facets.begin(), facets.end(), lex_less);
    return facets;
}

}  // namespace detail

/**
 * A simplicial complex over the ground set {1..n}, represented by its facet
 * antichain in lexicographic order. The represented face family is the
 * downward closure of the facets.
 *
 * The void complex (no faces at all, facets empty) and the empty complex
 * (exactly the face {}, facets = [{}]) are distinct values.
 */
class SimplicialComplex {
public:
    /// The void complex on an empty ground set.
    SimplicialComplex() = default;

    /// Builds the complex generated by the given faces: facets are the maximal
    /// ones, duplicates and non-maximal entries are dropped.
    static SimplicialComplex from_facets(int n, const std::vector<Face>& faces) {
        check_ground_set(n);
        std::vector<Face> kept;
        for (Face f : faces) {
            if ((f.bits() >> n) != 0)
                throw std::invalid_argument("facet " + to_string(f) +
                                            " has vertices outside 1.." + std::to_string(n));
            bool dominated = false;
            for (Face g : faces)
                if (f != g && f.is_subset_of(g)) { dominated = true; break; }
            // Equal duplicates: keep the first occurrence only.
            if (!dominated) {
                if (std::find(kept.begin(), kept.end(), f) == kept.end())
                    kept.push_back(f);
            }
        }
        std::sort(kept.begin(), kept.end(), lex_less);
        SimplicialComplex x;
        x.n_ = n;
        x.facets_ = std::move(kept);
        return x;
    }

    static SimplicialComplex void_complex(int n) {
        check_ground_set(n);
        SimplicialComplex x;
        x.n_ = n;
        return x;
    }

    /// The complex whose only face is {}.
    static SimplicialComplex empty_complex(int n) {
        return from_facets(n, {Face()});
    }

    static SimplicialComplex full_simplex(int n) {
        check_ground_set(n);
        const std::uint32_t full = n == 0 ? 0u : (~std::uint32_t{0} >> (32 - n));
        return from_facets(n, {Face(full)});
    }

    /// The k-skeleton of the full simplex: all faces of dimension <= k.
    static SimplicialComplex skeleton(int n, int k) {
        check_ground_set(n);
        if (k < -1) return void_complex(n);
        if (k >= n - 1) return full_simplex(n);
        std::vector<Face> facets;
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
            if (std::popcount(bits) == k + 1) facets.push_back(Face(bits));
        return from_facets(n, facets);
    }

    int ground_set_size() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    /// Dimension of the largest face; -1 for the empty complex. The void
    /// complex has no faces and reports -2.
    int dimension() const {
        int d = -2;
        for (Face f : facets_) d = std::max(d, f.dimension());
        return d;
    }

    /// Membership in the downward closure of the facets.
    bool contains(Face f) const {
        if ((f.bits() >> n_) != 0)
            throw std::invalid_argument("face " + to_string(f) +
                                        " has vertices outside 1.." + std::to_string(n_));
        for (Face g : facets_)
            if (f.is_subset_of(g)) return true;
        return false;
    }

    /// All faces of dimension d, in lexicographic order.
    std::vector<Face> faces_of_dimension(int d) const {
        if (d < -1) return {};
        std::set<Face> seen;
        for (Face g : facets_) {
            if (g.dimension() < d) continue;
            collect_subsets_of_size(g, d + 1, seen);
        }
        return std::vector<Face>(seen.begin(), seen.end());
    }

    /// Number of faces, the empty face included. The void complex has 0.
    std::uint64_t face_count() const {
        if (is_void()) return 0;
        const auto table = detail::close_downward(n_, facets_);
        std::uint64_t count = 0;
        for (char c : table) count += static_cast<std::uint64_t>(c);
        return count;
    }

    /// The Alexander dual on the same ground set: s is a face of the dual iff
    /// the complement of s is not a face of this complex.
    SimplicialComplex alexander_dual() const {
        const std::uint32_t total = std::uint32_t{1} << n_;
        const std::uint32_t full = total - 1;
        std::vector<char> table(total, 0);
        const auto own = is_void() ? std::vector<char>(total, 0)
                                   : detail::close_downward(n_, facets_);
        for (std::uint32_t bits = 0; bits < total; ++bits)
            table[bits] = !own[full & ~bits];
        SimplicialComplex dual;
        dual.n_ = n_;
        dual.facets_ = detail::facets_of_family(n_, table);
        return dual;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    static void check_ground_set(int n) {
        if (n < 0 || n > kMaxGroundSetSize)
            throw std::invalid_argument("ground set size must be in 0.." +
                                        std::to_string(kMaxGroundSetSize));
    }

    static void collect_subsets_of_size(Face g, int size, std::set<Face>& out) {
        // Enumerate size-subsets of g by walking submasks of its bits.
        const auto verts = g.vertices();
        std::vector<int> idx(static_cast<std::size_t>(size));
        const int m = static_cast<int>(verts.size());
        if (size > m) return;
        if (size == 0) { out.insert(Face()); return; }
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint32_t bits = 0;
            for (int i : idx) bits |= std::uint32_t{1} << (verts[static_cast<std::size_t>(i)] - 1);
            out.insert(Face(bits));
            int k = size - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == m - size + k) --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (int i = k + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }

    int n_ = 0;
    std::vector<Face> facets_;
};

/// True iff every face of a is a face of x.
inline bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& x) {
    if (a.ground_set_size() != x.ground_set_size()) return false;
    for (Face f : a.facets())
        if (!x.contains(f)) return false;
    return true;
}

}  // namespace alexdual
