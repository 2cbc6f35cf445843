#include <dasep/exact/scalar.hpp>

#include <cstdio>

namespace dasep {

ModP to_modp(const BigRational& x) {
    const BigInt p(static_cast<unsigned long long>(ModP::P));
    BigInt num = boost::multiprecision::numerator(x) % p;
    if (num < 0) num += p;
    const BigInt den = boost::multiprecision::denominator(x) % p;
    const ModP d = ModP::raw(den.convert_to<unsigned long long>());
    if (d.is_zero()) throw DivisionByZero("denominator divisible by the field prime");
    return ModP::raw(num.convert_to<unsigned long long>()) / d;
}

std::string scalar_to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace dasep
