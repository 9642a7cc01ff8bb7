#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alexdual {

/**
 * Coefficient ring for (co)homology: the integers, the rationals, or a prime
 * field F_p. These are the rings over which finitely generated modules have a
 * decidable invariant-factor description.
 */
class RingSpec {
public:
    enum class Kind { integers, rationals, prime_field };

    static RingSpec integers() { return RingSpec(Kind::integers, 0); }
    static RingSpec rationals() { return RingSpec(Kind::rationals, 0); }

    static RingSpec prime_field(std::int64_t p) {
        if (!is_prime(p))
            throw std::invalid_argument("prime_field: " + std::to_string(p) +
                                        " is not a prime >= 2");
        return RingSpec(Kind::prime_field, p);
    }

    /// Accepts "z", "q", or "fp:<p>".
    static RingSpec parse(const std::string& text) {
        if (text == "z" || text == "Z") return integers();
        if (text == "q" || text == "Q") return rationals();
        if (text.rfind("fp:", 0) == 0) {
            std::size_t used = 0;
            std::int64_t p = 0;
            try {
                p = std::stoll(text.substr(3), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("ring: cannot parse '" + text + "'");
            }
            if (used != text.size() - 3)
                throw std::invalid_argument("ring: cannot parse '" + text + "'");
            return prime_field(p);
        }
        throw std::invalid_argument("ring: expected z, q, or fp:<p>, got '" + text + "'");
    }

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ != Kind::integers; }
    std::int64_t prime() const { return p_; }

    std::string name() const {
        switch (kind_) {
            case Kind::integers: return "Z";
            case Kind::rationals: return "Q";
            case Kind::prime_field: return "F_" + std::to_string(p_);
        }
        return "?";
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    Kind kind_;
    std::int64_t p_;
};

}  // namespace alexdual
