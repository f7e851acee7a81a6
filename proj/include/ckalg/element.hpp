// Noncommutative polynomials over a presentation's letters, their tensor
// squares and cubes.  Words are stored as rank sequences, so the map order
// is exactly letter-order lex; all containers are ordered and canonical.
#pragma once

#include "ckalg/letter.hpp"
#include "ckalg/scalar.hpp"

#include <array>
#include <map>
#include <vector>

namespace ckalg {

struct Presentation;

using Word = std::vector<Letter>;

class Element {
public:
    Element() = default;
    explicit Element(const Presentation* p) : pres_(p) {}

    static Element zero(const Presentation* p) { return Element(p); }
    static Element unit(const Presentation* p);
    static Element monomial(const Presentation* p, Word w, Scalar c);
    static Element letter(const Presentation* p, Letter l);

    const Presentation* pres() const { return pres_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element& scale(const Scalar& c);
    Element& scale(const Rat& r);
    friend Element operator*(const Scalar& c, Element e) { return e.scale(c); }

    // Free product: concatenates words, multiplies scalars.  No rewriting.
    Element concat_mul(const Element& o) const;

    // Structural equality (same presentation object, same terms).
    bool operator==(const Element& o) const {
        return pres_ == o.pres_ && terms_ == o.terms_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_compatible(const Element& o) const;

    const Presentation* pres_ = nullptr;
    std::map<Word, Scalar> terms_;  // no zero scalars
};

// True if a and b have identical term structure (ranks and scalars),
// regardless of which presentation object they belong to.
bool structurally_equal(const Element& a, const Element& b);

class TensorElement {
public:
    using Key = std::pair<Word, Word>;

    TensorElement() = default;
    explicit TensorElement(const Presentation* p) : pres_(p) {}

    static TensorElement zero(const Presentation* p) { return TensorElement(p); }
    static TensorElement unit(const Presentation* p);
    // a (x) b, expanding term by term.
    static TensorElement tensor(const Element& a, const Element& b);

    const Presentation* pres() const { return pres_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& l, const Word& r, const Scalar& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement operator-() const;
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    TensorElement& scale(const Scalar& c);
    TensorElement& scale(const Rat& r);

    // Slotwise free product; no cross-slot commutation factors.
    TensorElement concat_mul(const TensorElement& o) const;

    bool operator==(const TensorElement& o) const {
        return pres_ == o.pres_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    const Presentation* pres_ = nullptr;
    std::map<Key, Scalar> terms_;
};

bool structurally_equal(const TensorElement& a, const TensorElement& b);

// Third tensor power, used only by the coassociativity checks.
class Tensor3 {
public:
    using Key = std::array<Word, 3>;

    Tensor3() = default;
    explicit Tensor3(const Presentation* p) : pres_(p) {}

    const Presentation* pres() const { return pres_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

    std::string to_string() const;

private:
    const Presentation* pres_ = nullptr;
    std::map<Key, Scalar> terms_;
};

}  // namespace ckalg
