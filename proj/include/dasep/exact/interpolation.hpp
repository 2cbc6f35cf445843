#pragma once

#include <dasep/exact/laurent_poly.hpp>
#include <dasep/exact/modp.hpp>

#include <optional>
#include <vector>

namespace dasep {

/// Coefficients c_low..c_high (mod p) of the Laurent polynomial through the
/// points (xs[k], ys[k]). Needs exactly high - low + 1 distinct nonzero xs.
std::vector<ModP> interpolate_laurent_mod_p(int low, int high, const std::vector<ModP>& xs, const std::vector<ModP>& ys);

/// The rational a/b with |a|, b below sqrt(p/2) that reduces to v, if any.
std::optional<BigRational> rational_reconstruct(ModP v);

/// Lifts interpolated coefficients to Q; nullopt if any coefficient fails
/// rational reconstruction.
std::optional<LaurentPoly> reconstruct_laurent(int low, const std::vector<ModP>& coeffs);

}  // namespace dasep
