// Coproduct, counit and antipode extended from generators to arbitrary
// elements: Delta and epsilon multiplicatively, gamma anti-multiplicatively,
// all linearly.  Well-definedness on the quotient is not assumed here; it is
// exactly what the axiom suites verify.
#pragma once

#include "ckalg/element.hpp"
#include "ckalg/presentation.hpp"

namespace ckalg {

TensorElement coproduct(const Element& e);
Scalar counit(const Element& e);
Element antipode(const Element& e);

// Slot maps used by the axiom checks.
Tensor3 delta_left(const TensorElement& t);   // (Delta (x) id)
Tensor3 delta_right(const TensorElement& t);  // (id (x) Delta)
Element counit_left(const TensorElement& t);  // (eps (x) id)
Element counit_right(const TensorElement& t); // (id (x) eps)
Element mul_antipode_left(const TensorElement& t);   // m(gamma (x) id)
Element mul_antipode_right(const TensorElement& t);  // m(id (x) gamma)

}  // namespace ckalg
