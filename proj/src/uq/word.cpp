#include <dasep/uq/word.hpp>

#include <dasep/errors.hpp>

namespace dasep {

std::string Letter::to_string() const {
    switch (kind) {
        case Gen::E: return "E" + std::to_string(index);
        case Gen::F: return "F" + std::to_string(index);
        case Gen::K: break;
    }
    std::string s = "K" + std::to_string(index);
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

Word e_word(const std::vector<int>& indices) {
    Word w;
    for (int i : indices) w.push_back(Letter::E(i));
    return w;
}

Word f_word(const std::vector<int>& indices) {
    Word w;
    for (int i : indices) w.push_back(Letter::F(i));
    return w;
}

Word k_word(const CartanExponents& c) {
    Word w;
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (c(i) != 0) w.push_back(Letter::K(static_cast<int>(i) + 1, c(i)));
    return w;
}

std::vector<int> letter_indices(const Word& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (l.kind == Gen::K) throw InvalidParams("letter_indices: word contains K");
        out.push_back(l.index);
    }
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += ' ';
        s += l.to_string();
    }
    return s;
}

Letter parse_letter(const std::string& s) {
    if (s.size() < 2) throw ParseError("bad letter '" + s + "'");
    Letter l;
    switch (s[0]) {
        case 'E': l.kind = Gen::E; break;
        case 'F': l.kind = Gen::F; break;
        case 'K': l.kind = Gen::K; break;
        default: throw ParseError("bad letter '" + s + "'");
    }
    const auto caret = s.find('^');
    try {
        std::size_t used = 0;
        const std::string idx = s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        l.index = std::stoi(idx, &used);
        if (used != idx.size() || l.index < 1) throw ParseError("bad letter '" + s + "'");
        if (caret != std::string::npos) {
            if (l.kind != Gen::K) throw ParseError("only K letters carry powers: '" + s + "'");
            const std::string pw = s.substr(caret + 1);
            l.power = std::stoi(pw, &used);
            if (used != pw.size() || l.power == 0) throw ParseError("bad letter '" + s + "'");
        }
    } catch (const std::logic_error&) {
        throw ParseError("bad letter '" + s + "'");
    }
    return l;
}

Json word_to_json(const Word& w) {
    Json arr = Json::array();
    for (const Letter& l : w) arr.push_back(l.to_string());
    return arr;
}

Word word_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("word must be an array of letters");
    Word w;
    for (const auto& x : j) w.push_back(parse_letter(x.get<std::string>()));
    return w;
}

}  // namespace dasep
