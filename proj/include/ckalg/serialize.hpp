// Canonical serialization of scalars, elements and tensors to JSON (used in
// reports and golden files; bit-exact round trip) and LaTeX rendering of
// tables for side-by-side reading.
#pragma once

#include "ckalg/element.hpp"
#include "ckalg/presentation.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace ckalg {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);                 // [[exp, "num/den"], ...] ascending
Json to_json(const Element& e);                // [{"coeff": ..., "word": [...]}, ...]
Json to_json(const TensorElement& t);          // [{"coeff": ..., "left": [...], "right": [...]}, ...]
Json to_json(const Tensor3& t);

Scalar scalar_from_json(int mode, const Json& j);
Element element_from_json(const PresPtr& p, const Json& j);
TensorElement tensor_from_json(const PresPtr& p, const Json& j);

// LaTeX rendering; the exponential letter prints as e^{-lambda <0N-name>}.
std::string latex(const Presentation& p, const Scalar& s);
std::string latex(const Presentation& p, const Word& w);
std::string latex(const Element& e);
std::string latex(const TensorElement& t);

}  // namespace ckalg
