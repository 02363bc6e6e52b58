#pragma once

#include "fracsum/engine.hpp"
#include "fracsum/types.hpp"

/// Two classical infinite products with closed forms, evaluated three ways:
/// closed form, finite truncation, and as a fractional product.
namespace fracsum::products {

/// prod_{k>=1} (1 + 2x/k)^{-k (-1)^k}, with the (1 + 2x/k) factors paired over 2n terms.
Complex alt_power_closed_form(Complex x);
Complex alt_power_truncated(Complex x, long n);
/// e^{-x} exp(-sum_{nu=1}^{-1/2} 2 nu ln(1 + x/nu)).
SumResult alt_power_engine(Complex x, const EngineConfig& cfg = {});

/// lim_{n->inf} exp(-(1/2 + x + (n + 1/4) L) L) prod_{k=1}^{2n} exp((-1)^k k ln^2(k + x)),
/// L = ln 2n.
Complex log_square_closed_form(Complex x);
Complex log_square_truncated(Complex x, long n);
/// exp(sum_{nu=1}^{-1/2} 2 nu ln^2(2 nu + x)).
SumResult log_square_engine(Complex x, const EngineConfig& cfg = {});

}  // namespace fracsum::products
