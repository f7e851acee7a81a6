// Rewriting of words to PBW-style normal form: exhaustive leftmost-innermost
// application of the reorder rules g.h -> h.g + [g,h] (rank g > rank h) and
// the presentation's pair rules.  Termination comes from the strictly
// decreasing (weight, letter multiset, inversion count, lex) measure;
// uniqueness from the confluence check.
#pragma once

#include "ckalg/element.hpp"
#include "ckalg/presentation.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ckalg {

struct RewriteCache {
    std::unordered_map<std::string, Element> memo;  // packed word -> normal form
    std::unordered_map<std::string, TensorElement> memo_delta;
    std::unordered_map<std::string, Element> memo_gamma;
    mutable std::shared_mutex mutex;
};

Element normal_form(const Element& e);
TensorElement normal_form(const TensorElement& e);
Tensor3 normal_form(const Tensor3& e);

// elem_mul / tensor_mul: free product followed by normal form.
Element mul(const Element& a, const Element& b);
TensorElement mul(const TensorElement& a, const TensorElement& b);
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return mul(a, b); }

// nf(a*b - b*a)
Element commutator(const Element& a, const Element& b);

// A single redex: a rule application site inside a word.
struct Redex {
    enum class Kind : uint8_t { Reorder, Pair } kind = Kind::Reorder;
    size_t pos1 = 0;       // position of the first letter
    size_t pos2 = 0;       // position of the second letter (pos1 < pos2)
    size_t rule_index = 0; // for Kind::Pair
};

std::vector<Redex> find_redexes(const Presentation& p, const Word& w);
Element apply_redex(const Presentation& p, const Word& w, const Redex& r);

// Strict decrease certificate for a single rule application (used by tests).
// Compares (total weight, multiset of letters descending, inversions, lex).
bool measure_less(const Presentation& p, const Word& lhs, const Word& rhs);

struct Report;

// Diamond-lemma check: every two- and three-letter word admitting more than
// one rule application is reduced along every branch; all branches must meet.
Report check_confluence(const PresPtr& p, unsigned threads = 0);

}  // namespace ckalg
