// Truncation: maps exact-mode elements into a truncated(K) presentation by
// replacing the group-like exponential with its series in the (0,N)
// generator and reducing scalars mod lambda^{K+1}.  Lambda-poles in the
// coefficients must cancel termwise before rewriting, which holds for every
// closed form in the family (the poles only ever multiply exponential words).
#pragma once

#include "ckalg/element.hpp"
#include "ckalg/presentation.hpp"

namespace ckalg {

// The same presentation rebuilt at truncation order K (CK presentations).
PresPtr truncated_sibling(const PresPtr& p, int K);

Element truncate(const Element& e, const PresPtr& target);
TensorElement truncate(const TensorElement& t, const PresPtr& target);

}  // namespace ckalg
