#pragma once

namespace stirmode {

// Integer decided by enclosure refinement, with the precision that separated
// the deciding comparison.
struct CertifiedInt {
  long value = 0;
  unsigned decision_precision_bits = 0;
};

// Principal-branch Lambert W for x >= 0: returns w >= 0 with
// |w*e^w - x| <= tolerance * max(1, x). Halley iteration seeded at ln(1+x).
// Throws PrecisionError if the tolerance is finer than a double result can
// carry (around 4e-16 relative).
double lambert_w(double x, double tolerance);

// max{k >= 1 : k*ln k <= n}, which equals floor(e^{w(n)}) since x*e^x is
// strictly increasing. The floating estimate only seeds the search; every
// step is decided by the enclosure test k*ln k <=> n.
CertifiedInt floor_exp_w(long n);

}  // namespace stirmode
