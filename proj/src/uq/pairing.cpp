#include <dasep/uq/pairing.hpp>

namespace dasep {

NormalWord normal_order(const Word& w, Gen side, int n) {
    NormalWord out;
    out.k = CartanExponents::Zero(n);
    const int sign = side == Gen::E ? 1 : -1;
    for (const Letter& l : w) {
        if (l.index < 1 || l.index > n) throw InvalidParams("generator index out of range: " + l.to_string());
        if (l.kind == Gen::K) {
            out.k(l.index - 1) += l.power;
            continue;
        }
        if (l.kind != side) throw MixedBorelInput("word " + to_string(w) + " mixes E and F letters");
        for (int i = 1; i <= n; ++i)
            if (out.k(i - 1) != 0) out.q_exponent += sign * out.k(i - 1) * cartan_entry(i, l.index, n);
        out.letters.push_back(l.index);
    }
    return out;
}

}  // namespace dasep
