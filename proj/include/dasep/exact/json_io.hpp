#pragma once

#include <dasep/exact/scalar.hpp>

#include <json.hpp>

namespace dasep {

using Json = nlohmann::ordered_json;

Json to_json(const BigRational& x);
Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const ModP& x);
Json to_json(double x);

BigRational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RationalFunction ratfunc_from_json(const Json& j);

template <class S>
Json matrix_to_json(const Mat<S>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dasep
