#include <dasep/exact/json_io.hpp>

#include <dasep/errors.hpp>

#include <map>
#include <string>

namespace dasep {

Json to_json(const BigRational& x) { return to_string(x); }

Json to_json(const LaurentPoly& p) {
    // Keys are exponent strings; insertion order keeps them ascending.
    Json obj = Json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = to_string(c);
    return obj;
}

Json to_json(const RationalFunction& f) {
    Json obj = Json::object();
    obj["num"] = to_json(f.num());
    obj["den"] = to_json(f.den());
    return obj;
}

Json to_json(const ModP& x) { return x.to_string(); }

Json to_json(double x) { return x; }

BigRational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return BigRational(j.get<long long>());
    if (!j.is_string()) throw ParseError("expected a rational string");
    return parse_rational(j.get<std::string>());
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("expected a Laurent polynomial object");
    std::map<int, BigRational> terms;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw ParseError("bad exponent key '" + key + "'");
        }
        if (used != key.size()) throw ParseError("bad exponent key '" + key + "'");
        terms[e] += rational_from_json(value);
    }
    return LaurentPoly::from_terms(terms);
}

RationalFunction ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {num, den}");
    return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

}  // namespace dasep
