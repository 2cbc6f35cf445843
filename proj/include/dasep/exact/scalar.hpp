#pragma once

// The working scalar types and the one piece of context they need: the value
// (or indeterminate) q. Everything q-dependent in the library is templated on
// S in {RationalFunction, BigRational, ModP, double} and receives a QField<S>.

#include <dasep/errors.hpp>
#include <dasep/exact/big_rational.hpp>
#include <dasep/exact/int_laurent.hpp>
#include <dasep/exact/laurent_poly.hpp>
#include <dasep/exact/modp.hpp>
#include <dasep/exact/rational_function.hpp>

#include <Eigen/Core>

#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<dasep::RationalFunction> : GenericNumTraits<dasep::RationalFunction> {
    using Real = dasep::RationalFunction;
    using NonInteger = dasep::RationalFunction;
    using Literal = dasep::RationalFunction;
    using Nested = dasep::RationalFunction;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 10, AddCost = 200, MulCost = 200 };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<dasep::LaurentPoly> : GenericNumTraits<dasep::LaurentPoly> {
    using Real = dasep::LaurentPoly;
    using NonInteger = dasep::LaurentPoly;
    using Literal = dasep::LaurentPoly;
    using Nested = dasep::LaurentPoly;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 10, AddCost = 50, MulCost = 100 };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<dasep::ModP> : GenericNumTraits<dasep::ModP> {
    using Real = dasep::ModP;
    using NonInteger = dasep::ModP;
    using Literal = dasep::ModP;
    using Nested = dasep::ModP;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 0, ReadCost = 1, AddCost = 2, MulCost = 4 };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace dasep {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

inline bool is_zero(double x) { return x == 0.0; }

/// Reduction of a rational into Z/pZ; throws DivisionByZero when p divides
/// the denominator.
ModP to_modp(const BigRational& x);

template <class S>
S from_integer(std::int64_t c) {
    if constexpr (std::is_same_v<S, RationalFunction>) return RationalFunction(BigRational(c));
    else if constexpr (std::is_same_v<S, double>) return static_cast<double>(c);
    else return S(c);
}

template <class S>
S from_rational(const BigRational& x) {
    if constexpr (std::is_same_v<S, RationalFunction>) return RationalFunction(x);
    else if constexpr (std::is_same_v<S, BigRational>) return x;
    else if constexpr (std::is_same_v<S, double>) return x.convert_to<double>();
    else return to_modp(x);
}

inline std::string scalar_to_string(const RationalFunction& x) { return x.to_string(); }
inline std::string scalar_to_string(const BigRational& x) { return to_string(x); }
inline std::string scalar_to_string(const ModP& x) { return x.to_string(); }
std::string scalar_to_string(double x);

/// True for the scalar types in which equality is exact.
template <class S>
inline constexpr bool is_exact_v = !std::is_same_v<S, double>;

/**
 * q as an element of S, with precomputed powers. Symbolic mode uses the
 * indeterminate; numeric modes use a fixed value q0. Immutable after
 * construction, so one instance can be shared across threads.
 */
template <class S>
class QField {
public:
    static constexpr int kPowerRange = 96;

    explicit QField(S q) : q_(std::move(q)) {
        if (is_zero(q_)) throw InvalidParams("q must be nonzero");
        const S qinv = S(1) / q_;
        powers_.resize(2 * kPowerRange + 1);
        powers_[kPowerRange] = S(1);
        for (int e = 1; e <= kPowerRange; ++e) {
            powers_[kPowerRange + e] = powers_[kPowerRange + e - 1] * q_;
            powers_[kPowerRange - e] = powers_[kPowerRange - e + 1] * qinv;
        }
    }

    /// The indeterminate q (only for S = RationalFunction).
    static QField symbolic() { return QField(RationalFunction::q()); }

    const S& q() const { return q_; }

    S power(int e) const {
        if (e >= -kPowerRange && e <= kPowerRange) return powers_[static_cast<std::size_t>(e + kPowerRange)];
        S base = e > 0 ? q_ : S(1) / q_;
        S acc(1);
        for (int k = 0; k < std::abs(e); ++k) acc = acc * base;
        return acc;
    }

    /// r = q - 1/q.
    S r() const { return power(1) - power(-1); }

    S lift(const IntLaurent& p) const {
        if constexpr (std::is_same_v<S, RationalFunction>) {
            return RationalFunction(p.to_laurent());
        } else {
            S acc(0);
            int e = p.low();
            for (std::int64_t c : p.dense()) {
                if (c != 0) acc = acc + from_integer<S>(c) * power(e);
                ++e;
            }
            return acc;
        }
    }

    S lift(const LaurentPoly& p) const {
        if constexpr (std::is_same_v<S, RationalFunction>) {
            return RationalFunction(p);
        } else {
            S acc(0);
            int e = p.low();
            for (const BigRational& c : p.dense()) {
                if (!c.is_zero()) acc = acc + from_rational<S>(c) * power(e);
                ++e;
            }
            return acc;
        }
    }

    S lift(const RationalFunction& f) const {
        if constexpr (std::is_same_v<S, RationalFunction>) return f;
        else {
            const S d = lift(f.den());
            if (is_zero(d)) throw PoleAtPoint("denominator " + f.den().to_string() + " vanishes at the evaluation point");
            return lift(f.num()) / d;
        }
    }

private:
    S q_;
    std::vector<S> powers_;
};

}  // namespace dasep
