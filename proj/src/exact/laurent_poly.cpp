#include <dasep/exact/laurent_poly.hpp>

#include <dasep/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace dasep {

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto valid_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string part) {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        return part;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational literal '" + s + "'");
    BigInt p(strip_plus(num));
    BigInt q(den);
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return BigRational(p, q);
}

std::string to_string(const BigRational& x) {
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

BigRational pow(const BigRational& x, int k) {
    if (k < 0) {
        if (x.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return BigRational(1) / pow(x, -k);
    }
    BigRational result(1);
    BigRational base = x;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

LaurentPoly::LaurentPoly(int c) : LaurentPoly(BigRational(c)) {}

LaurentPoly::LaurentPoly(const BigRational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, int exponent) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, BigRational>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    p.low_ = lo;
    p.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), BigRational(0));
    for (const auto& [e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - lo)] += c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<BigRational> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

bool LaurentPoly::is_one() const {
    return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

void LaurentPoly::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1].is_zero()) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<BigRational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                           coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ += static_cast<int>(first);
    }
}

BigRational LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return BigRational(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigRational> LaurentPoly::terms() const {
    std::map<int, BigRational> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) out.emplace(low_ + static_cast<int>(k), coeffs_[k]);
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

BigRational LaurentPoly::evaluate(const BigRational& q0) const {
    if (is_zero()) return BigRational(0);
    // Horner on the dense part, then the q^low factor.
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= q0;
        acc += *it;
    }
    if (low_ != 0) acc *= pow(q0, low_);
    return acc;
}

double LaurentPoly::evaluate(double q0) const {
    if (is_zero()) return 0.0;
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q0 + it->convert_to<double>();
    return acc * std::pow(q0, low_);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const int lo = std::min(low_, rhs.low_);
    const int hi = std::max(high(), rhs.high());
    if (lo < low_ || hi > high()) {
        std::vector<BigRational> grown(static_cast<std::size_t>(hi - lo + 1), BigRational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            grown[static_cast<std::size_t>(low_ - lo) + k] = std::move(coeffs_[k]);
        coeffs_ = std::move(grown);
        low_ = lo;
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + k] += rhs.coeffs_[k];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    return false;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto k = static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; k >= 0; --k) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const int e = low_ + static_cast<int>(k);
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            out << dasep::to_string(mag);
            continue;
        }
        if (mag != 1) out << dasep::to_string(mag) << "*";
        out << "q";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

LaurentPoly pow(const LaurentPoly& p, int k) {
    LaurentPoly result(1);
    LaurentPoly base = p;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

using IntPoly = std::vector<BigInt>;  // index = degree

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        if (c == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly& p) {
    const BigInt g = content(p);
    if (g > 1)
        for (auto& c : p) c /= g;
}

/// Primitive integer polynomial proportional to the polynomial part of a.
IntPoly to_primitive(const LaurentPoly& a) {
    const auto& d = a.dense();
    BigInt l = 1;
    for (const auto& c : d) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    IntPoly p;
    p.reserve(d.size());
    for (const auto& c : d) p.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
    make_primitive(p);
    return p;
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.normalized() * (BigRational(1) / b.leading());
    if (b.is_zero()) return a.normalized() * (BigRational(1) / a.leading());
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
    IntPoly x = to_primitive(a);
    IntPoly y = to_primitive(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return LaurentPoly(1);
        IntPoly r = pseudo_remainder(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<BigRational> coeffs;
    coeffs.reserve(x.size());
    for (const auto& c : x) coeffs.emplace_back(c, x.back());
    return LaurentPoly::from_dense(0, std::move(coeffs));
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    if (a.low() < 0 || b.low() < 0) throw Error("divmod requires polynomials without negative exponents");
    const int db = b.high();
    std::vector<BigRational> rem(static_cast<std::size_t>(a.high() + 1), BigRational(0));
    for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e)] = c;
    const int dq = a.high() - db;
    std::vector<BigRational> quo(dq >= 0 ? static_cast<std::size_t>(dq + 1) : 0, BigRational(0));
    const BigRational inv_lead = BigRational(1) / b.leading();
    const auto bt = b.terms();
    for (int k = a.high(); k >= db; --k) {
        const BigRational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (c.is_zero()) continue;
        quo[static_cast<std::size_t>(k - db)] = c;
        for (const auto& [e, bc] : bt) rem[static_cast<std::size_t>(k - db + e)] -= c * bc;
    }
    return {LaurentPoly::from_dense(0, std::move(quo)), LaurentPoly::from_dense(0, std::move(rem))};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_monomial()) return a.shifted(-b.low()) * (BigRational(1) / b.leading());
    auto [quo, rem] = divmod(a.normalized(), b.normalized());
    if (!rem.is_zero()) return std::nullopt;
    return quo.shifted(a.low() - b.low());
}

}  // namespace dasep
