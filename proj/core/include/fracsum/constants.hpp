#pragma once

namespace fracsum {

/// Named constants, parsed once from literal decimal strings.
///
/// stieltjes_gamma1 carries the standard (negative) sign, -0.0728158...; with this
/// sign the (n!)^{ln n} product value gamma^2/4 + gamma1/2 - ... is reproduced.
struct Constants {
  double euler_gamma;
  double stieltjes_gamma1;
  double catalan_G;
  double zeta_prime_minus1;
};

const Constants& constants();

}  // namespace fracsum
