#pragma once

#include <dasep/errors.hpp>

#include <cstdint>
#include <ostream>
#include <string>

namespace dasep {

/// Element of the prime field Z/pZ with p = 2^61 - 1. Used for fast rank
/// probes and for interpolation; never for a final answer on its own.
class ModP {
public:
    static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

    ModP() = default;
    ModP(std::int64_t v) : v_(reduce_signed(v)) {}  // NOLINT(google-explicit-constructor)
    static ModP raw(std::uint64_t v) {
        ModP x;
        x.v_ = v % P;
        return x;
    }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    /// Symmetric lift into (-P/2, P/2].
    std::int64_t symmetric() const {
        return v_ > P / 2 ? -static_cast<std::int64_t>(P - v_) : static_cast<std::int64_t>(v_);
    }

    ModP operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    ModP& operator+=(ModP b) {
        v_ += b.v_;
        if (v_ >= P) v_ -= P;
        return *this;
    }
    ModP& operator-=(ModP b) {
        v_ = v_ >= b.v_ ? v_ - b.v_ : v_ + P - b.v_;
        return *this;
    }
    ModP& operator*=(ModP b) {
        const unsigned __int128 t = static_cast<unsigned __int128>(v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(t & P);
        std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
        v_ = lo + hi;
        if (v_ >= P) v_ -= P;
        return *this;
    }
    ModP& operator/=(ModP b) { return *this *= b.inverse(); }

    friend ModP operator+(ModP a, ModP b) { return a += b; }
    friend ModP operator-(ModP a, ModP b) { return a -= b; }
    friend ModP operator*(ModP a, ModP b) { return a *= b; }
    friend ModP operator/(ModP a, ModP b) { return a /= b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
    friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

    ModP pow(std::uint64_t e) const {
        ModP base = *this, acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    /// Throws DivisionByZero for zero.
    ModP inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of zero modulo p");
        return pow(P - 2);
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    static std::uint64_t reduce_signed(std::int64_t v) {
        if (v >= 0) return static_cast<std::uint64_t>(v) % P;
        const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % P;
        return P - 1 - m;
    }

    std::uint64_t v_ = 0;
};

inline bool is_zero(ModP x) { return x.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, ModP x) { return os << x.value(); }

}  // namespace dasep
