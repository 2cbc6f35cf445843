#pragma once

// Matrices transcribed from printed tables, shared by the unit tests and the
// acceptance binary.

#include <dasep/exact/rational_function.hpp>
#include <dasep/exact/scalar.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace dasep::printed {

using RF = RationalFunction;

inline RF qp(int e) { return RF(LaurentPoly::q_pow(e)); }

inline RF laurent(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p = p + LaurentPoly::monomial(BigRational(c), e);
    return RF(p);
}

// the printed n = 5 big block, U^T + D + U; with corrected = true the
// entries (3,5) and (4,5) read q^2 B2 and q^3 B2 instead of q^2 B3 and q^3 B3
inline Mat<RF> printed_big_block(bool corrected = false) {
    const RF B1 = laurent({{5, -1}, {3, 3}, {1, -3}, {-1, 1}, {-5, -2}, {-7, 4}, {-9, -2}});
    const RF B2 = laurent({{3, -2}, {1, 4}, {-1, -2}, {-5, 1}, {-7, -3}, {-9, 3}, {-11, -1}});
    const RF B3 = laurent({{10, 1}, {8, -2}, {6, 1}, {2, -2}, {0, 4}, {-2, -2}, {-6, 1}, {-8, -2}, {-10, 1}});
    const RF* B[] = {nullptr, &B1, &B2, &B3};
    // (power of q, which B) for the strict upper triangle, row by row
    const std::vector<std::vector<std::pair<int, int>>> upper{
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {0, 3}, {6, 1}, {5, 1}, {4, 1}, {3, 1}},
        {{2, 1}, {3, 1}, {4, 1}, {0, 2}, {0, 3}, {6, 1}, {5, 1}, {4, 1}},
        {{4, 1}, {5, 1}, {1, 2}, {0, 2}, {0, 3}, {6, 1}, {5, 1}},
        {{6, 1}, {2, 3}, {1, 2}, {0, 2}, {0, 3}, {6, 1}},
        {{3, 3}, {2, 2}, {1, 2}, {0, 2}, {0, 3}},
        {{6, 2}, {5, 2}, {4, 2}, {3, 2}},
        {{4, 2}, {3, 2}, {2, 2}},
        {{2, 2}, {1, 2}},
        {{0, 2}},
    };
    const std::vector<RF> diag{
        laurent({{10, -1}, {8, 2}, {6, -1}, {4, -1}, {2, 3}, {0, -3}, {-2, 1}, {-6, -2}, {-8, 3}, {-12, -1}}),
        laurent({{10, -1}, {8, 2}, {6, -2}, {4, 3}, {2, -3}, {0, 1}, {-4, -2}, {-6, 4}, {-8, -3}, {-10, 2}, {-12, -1}}),
        laurent({{10, -1}, {8, 1}, {6, 2}, {4, -3}, {2, 1}, {-2, -2}, {-4, 4}, {-6, -2}, {-8, -1}, {-10, 2}, {-12, -1}}),
        laurent({{10, -2}, {8, 5}, {6, -4}, {4, 1}, {0, -2}, {-2, 4}, {-4, -2}, {-8, -1}, {-10, 2}, {-12, -1}}),
        laurent({{12, -1}, {10, 2}, {8, -1}, {2, -2}, {0, 4}, {-2, -2}, {-8, -1}, {-10, 2}, {-12, -1}}),
        laurent({{12, -1}, {8, 3}, {6, -2}, {2, 1}, {0, -3}, {-2, 3}, {-4, -1}, {-6, -1}, {-8, 2}, {-10, -1}}),
        laurent({{12, -1}, {10, 2}, {8, -3}, {6, 4}, {4, -2}, {0, 1}, {-2, -3}, {-4, 3}, {-6, -2}, {-8, 2}, {-10, -1}}),
        laurent({{12, -1}, {10, 2}, {8, -1}, {6, -2}, {4, 4}, {2, -2}, {-2, 1}, {-4, -3}, {-6, 2}, {-8, 1}, {-10, -1}}),
        laurent({{12, -1}, {10, 2}, {8, -1}, {4, -2}, {2, 4}, {0, -2}, {-4, 1}, {-6, -4}, {-8, 5}, {-10, -2}}),
        laurent({{12, -1}, {10, 2}, {8, -1}, {2, -2}, {0, 4}, {-2, -2}, {-8, -1}, {-10, 2}, {-12, -1}}),
    };
    auto table = upper;
    if (corrected) {
        table[3][1] = {2, 2};
        table[4][0] = {3, 2};
    }
    Mat<RF> m = Mat<RF>::Zero(10, 10);
    for (int i = 0; i < 10; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < static_cast<int>(table[static_cast<std::size_t>(i)].size()); ++k) {
            const auto [e, b] = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            const int j = i + 1 + k;
            m(i, j) = qp(e) * *B[b];
            m(j, i) = m(i, j);
        }
    return m;
}

using Terms = std::vector<std::pair<int, int>>;

// printed n = 5 pruned generators, as (power of q, coefficient) terms, in the
// support order of the ground state
inline const std::vector<std::vector<std::vector<Terms>>> kPrunedTerms{
    // delta = 0
    {
        {{{8, -2}, {6, 1}, {-2, -2}, {-10, -1}}, {{8, 1}, {6, -1}, {-2, 2}}, {{6, 1}, {-2, -2}, {-10, 1}}, {{8, 1}, {6, -1}, {-2, 2}}},
        {{{10, 1}, {8, -1}, {0, 2}}, {{10, -1}, {0, -2}, {-10, -1}}, {{0, 2}, {-8, -1}, {-10, 1}}, {{8, 1}, {0, -2}, {-8, 1}}},
        {{{10, 1}, {2, -2}, {-6, 1}}, {{2, 2}, {-6, -1}, {-8, 1}}, {{10, -1}, {2, -2}, {-6, 1}, {-8, -2}}, {{2, 2}, {-6, -1}, {-8, 1}}},
        {{{10, 1}, {8, -1}, {0, 2}}, {{8, 1}, {0, -2}, {-8, 1}}, {{0, 2}, {-8, -1}, {-10, 1}}, {{10, -1}, {0, -2}, {-10, -1}}},
    },
    // delta = 1
    {
        {{{8, -1}, {6, -1}, {4, 1}, {-4, -2}, {-10, -1}}, {{6, 1}, {4, -1}, {-4, 2}}, {{6, 1}, {-2, -2}, {-10, 1}}, {{8, 1}, {6, -1}, {-2, 2}}},
        {{{8, 1}, {6, -1}, {-2, 2}}, {{8, -2}, {6, 1}, {-2, -2}, {-10, -1}}, {{0, 2}, {-8, -1}, {-10, 1}}, {{8, 1}, {0, -2}, {-8, 1}}},
        {{{10, 1}, {2, -2}, {-6, 1}}, {{2, 2}, {-6, -1}, {-8, 1}}, {{10, -1}, {4, -2}, {-4, 1}, {-6, -1}, {-8, -1}}, {{4, 2}, {-4, -1}, {-6, 1}}},
        {{{10, 1}, {8, -1}, {0, 2}}, {{8, 1}, {0, -2}, {-8, 1}}, {{2, 2}, {-6, -1}, {-8, 1}}, {{10, -1}, {2, -2}, {-6, 1}, {-8, -2}}},
    },
    // delta = 2
    {
        {{{8, -1}, {4, -1}, {2, 1}, {-6, -2}, {-10, -1}}, {{4, 1}, {2, -1}, {-6, 2}}, {{6, 1}, {-2, -2}, {-10, 1}}, {{8, 1}, {6, -1}, {-2, 2}}},
        {{{6, 1}, {4, -1}, {-4, 2}}, {{8, -1}, {6, -1}, {4, 1}, {-4, -2}, {-10, -1}}, {{0, 2}, {-8, -1}, {-10, 1}}, {{8, 1}, {0, -2}, {-8, 1}}},
        {{{10, 1}, {2, -2}, {-6, 1}}, {{2, 2}, {-6, -1}, {-8, 1}}, {{10, -1}, {6, -2}, {-2, 1}, {-4, -1}, {-8, -1}}, {{6, 2}, {-2, -1}, {-4, 1}}},
        {{{10, 1}, {8, -1}, {0, 2}}, {{8, 1}, {0, -2}, {-8, 1}}, {{4, 2}, {-4, -1}, {-6, 1}}, {{10, -1}, {4, -2}, {-4, 1}, {-6, -1}, {-8, -1}}},
    },
    // delta = 3
    {
        {{{8, -1}, {2, -1}, {0, 1}, {-8, -2}, {-10, -1}}, {{2, 1}, {0, -1}, {-8, 2}}, {{6, 1}, {-2, -2}, {-10, 1}}, {{8, 1}, {6, -1}, {-2, 2}}},
        {{{4, 1}, {2, -1}, {-6, 2}}, {{8, -1}, {4, -1}, {2, 1}, {-6, -2}, {-10, -1}}, {{0, 2}, {-8, -1}, {-10, 1}}, {{8, 1}, {0, -2}, {-8, 1}}},
        {{{10, 1}, {2, -2}, {-6, 1}}, {{2, 2}, {-6, -1}, {-8, 1}}, {{10, -1}, {8, -2}, {0, 1}, {-2, -1}, {-8, -1}}, {{8, 2}, {0, -1}, {-2, 1}}},
        {{{10, 1}, {8, -1}, {0, 2}}, {{8, 1}, {0, -2}, {-8, 1}}, {{6, 2}, {-2, -1}, {-4, 1}}, {{10, -1}, {6, -2}, {-2, 1}, {-4, -1}, {-8, -1}}},
    },
};

inline Mat<RF> printed_pruned(int delta) {
    Mat<RF> m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto& terms = kPrunedTerms[static_cast<std::size_t>(delta)][static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)];
            LaurentPoly p;
            for (auto [e, c] : terms) p = p + LaurentPoly::monomial(BigRational(c), e);
            m(i, j) = RF(p);
        }
    return m;
}

// the printed two-site duality matrix; each entry is a product of factors
// D_i^j = 1 - q^j / alpha_i written as the digit pairs "ij", "-" for 1
inline const char* const kPrinted[16] = {
        "1222 22 - 12 12 - 22 - 1222 12 1222 22 - 12 22 1222",
        "22 1422 14 - - 14 22 - 1222 12 22 1422 - 12 22 1222",
        "- 14 1424 24 - 14 - 24 12 1224 22 1422 - 12 22 1222",
        "12 - 24 1224 12 - - 24 12 1224 1222 22 - 12 22 1222",
        "12 - - 12 12 - - - 12 12 12 - - 12 - 12",
        "- 14 14 - - 14 - - 12 12 - 14 - 12 - 12",
        "22 22 - - - - 22 - 22 - 22 22 - - 22 22",
        "- - 24 24 - - - 24 - 24 22 22 - - 22 22",
        "1422 1422 14 14 14 14 22 - 121422 1214 1422 1422 - 1214 22 121422",
        "14 14 1424 1424 14 14 - 24 1214 121424 1422 1422 - 1214 22 121422",
        "1224 24 24 1224 12 - 24 24 1224 1224 122224 2224 - 12 2224 122224",
        "24 1424 1424 24 - 14 24 24 1224 1224 2224 142224 - 12 2224 122224",
        "- - - - - - - - - - - - - - - -",
        "14 14 14 14 14 14 - - 1214 1214 14 14 - 1214 - 1214",
        "24 24 24 24 - - 24 24 24 24 2224 2224 - - 2224 2224",
        "1424 1424 1424 1424 14 14 24 24 121424 121424 142224 142224 - 1214 2224 12142224",
};

template <class S>
inline S printed_entry(const std::string& code, const S& q, const S& a1, const S& a2) {
    S acc(1);
    if (code == "-") return acc;
    const QField<S> field(q);
    for (std::size_t k = 0; k + 1 < code.size(); k += 2) {
        const S& a = code[k] == '1' ? a1 : a2;
        acc = acc * (S(1) - field.power(code[k + 1] - '0') / a);
    }
    return acc;
}

inline std::vector<std::string> printed_row(int i) {
    std::istringstream in(kPrinted[i]);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

}  // namespace dasep::printed
