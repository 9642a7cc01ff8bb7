#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alexdual {

/// Vertices are 1-based: the ground set is {1, 2, ..., n}.
using Vertex = int;

/// Largest supported ground-set size. Faces are vertex bitmasks and several
/// operations (dualization, face counting) enumerate all 2^n subsets.
inline constexpr int kMaxGroundSetSize = 24;

/// A sign, +1 or -1.
enum class Sign : int { plus = +1, minus = -1 };

inline constexpr int value(Sign s) { return static_cast<int>(s); }

inline constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

/**
 * A face: a finite set of vertices, kept in canonical (strictly increasing)
 * form. Stored as a bitmask, bit v-1 for vertex v. The empty face is a valid
 * value of dimension -1.
 */
class Face {
public:
    constexpr Face() = default;
    explicit constexpr Face(std::uint32_t bits) : bits_(bits) {}

    /// Builds a face from a vertex list; vertices may come in any order and
    /// may repeat. Vertices must lie in 1..kMaxGroundSetSize.
    static Face of(const std::vector<Vertex>& vertices) {
        std::uint32_t bits = 0;
        for (Vertex v : vertices) {
            if (v < 1 || v > kMaxGroundSetSize)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " out of supported range 1.." +
                                            std::to_string(kMaxGroundSetSize));
            bits |= std::uint32_t{1} << (v - 1);
        }
        return Face(bits);
    }

    static Face of(std::initializer_list<Vertex> vertices) {
        return of(std::vector<Vertex>(vertices));
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dimension() const { return size() - 1; }

    constexpr bool contains(Vertex v) const {
        return v >= 1 && v <= 32 && (bits_ >> (v - 1)) & 1u;
    }

    constexpr bool is_subset_of(Face other) const {
        return (bits_ & other.bits_) == bits_;
    }

    constexpr Face with(Vertex v) const {
        return Face(bits_ | (std::uint32_t{1} << (v - 1)));
    }

    constexpr Face without(Vertex v) const {
        return Face(bits_ & ~(std::uint32_t{1} << (v - 1)));
    }

    /// Complement against the ground set {1..n}. All vertices must lie in 1..n.
    Face complement(int ground_set_size) const {
        const std::uint32_t full = ground_set_size == 0
                                       ? 0u
                                       : (~std::uint32_t{0} >> (32 - ground_set_size));
        if ((bits_ & ~full) != 0)
            throw std::invalid_argument("face has vertices outside ground set of size " +
                                        std::to_string(ground_set_size));
        return Face(full & ~bits_);
    }

    Vertex smallest() const {
        if (empty()) throw std::invalid_argument("empty face has no vertices");
        return std::countr_zero(bits_) + 1;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr bool operator==(Face, Face) = default;

private:
    std::uint32_t bits_ = 0;
};

/**
 * Lexicographic order on the increasing vertex sequences, with a shorter
 * prefix sorting first. This is the canonical basis order used by every
 * matrix in the library: {} < {1} < {1,2} < {1,3} < {2}.
 */
inline constexpr bool lex_less(Face a, Face b) {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const std::uint32_t low = diff & (~diff + 1);  // smallest diverging vertex
    const std::uint32_t above = ~(low | (low - 1));
    if (b.bits() & low) return (a.bits() & above) == 0;
    return (b.bits() & above) != 0;
}

inline constexpr bool operator<(Face a, Face b) { return lex_less(a, b); }

inline std::string to_string(Face f) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : f.vertices()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

/// sgn(j, s) = (-1)^(i-1) where j is the i-th smallest element of s.
inline Sign sign(Vertex j, Face s) {
    if (!s.contains(j))
        throw std::invalid_argument("sign: vertex " + std::to_string(j) +
                                    " is not in face " + to_string(s));
    const std::uint32_t below = s.bits() & ((std::uint32_t{1} << (j - 1)) - 1);
    return std::popcount(below) % 2 == 0 ? Sign::plus : Sign::minus;
}

/// p(s) = prod_{i in s} (-1)^(i-1); the empty product is +1.
inline Sign parity(Face s) {
    int exponent = 0;
    for (std::uint32_t b = s.bits(); b != 0; b &= b - 1)
        exponent += std::countr_zero(b);  // (i - 1) for vertex i
    return exponent % 2 == 0 ? Sign::plus : Sign::minus;
}

/**
 * Exhaustively checks sgn(k,s)*p(s\k) = sgn(k, comp(s) u {k})*p(s) for every
 * subset s of {1..n} and every k in s.
 */
inline bool check_sign_lemma(int n) {
    if (n < 1 || n > kMaxGroundSetSize)
        throw std::invalid_argument("check_sign_lemma: n must be in 1.." +
                                    std::to_string(kMaxGroundSetSize));
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
        const Face s(bits);
        const Face comp = s.complement(n);
        for (Vertex k : s.vertices()) {
            const Sign lhs = sign(k, s) * parity(s.without(k));
            const Sign rhs = sign(k, comp.with(k)) * parity(s);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace alexdual
