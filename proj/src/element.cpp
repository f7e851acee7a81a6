#include "ckalg/element.hpp"

#include "ckalg/presentation.hpp"

#include <sstream>

namespace ckalg {

namespace {

std::string word_to_string(const Presentation* p, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += p ? p->info(w[i]).name : std::to_string(w[i]);
    }
    return s;
}

}  // namespace

Element Element::unit(const Presentation* p) {
    Element e(p);
    e.add_term({}, Scalar::one(p->mode));
    return e;
}

Element Element::monomial(const Presentation* p, Word w, Scalar c) {
    Element e(p);
    e.add_term(std::move(w), std::move(c));
    return e;
}

Element Element::letter(const Presentation* p, Letter l) {
    return monomial(p, Word{l}, Scalar::one(p->mode));
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check_compatible(const Element& o) const {
    if (pres_ != o.pres_) throw input_error("element presentation mismatch");
}

Element& Element::operator+=(const Element& o) {
    if (pres_ == nullptr) pres_ = o.pres_;
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (pres_ == nullptr) pres_ = o.pres_;
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::operator-() const {
    Element r(pres_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element& Element::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<Word, Scalar> out;
    for (const auto& [w, old] : terms_) {
        Scalar nc = old * c;
        if (!nc.is_zero()) out.emplace(w, std::move(nc));
    }
    terms_ = std::move(out);
    return *this;
}

Element& Element::scale(const Rat& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c.scale(r);
    return *this;
}

Element Element::concat_mul(const Element& o) const {
    check_compatible(o);
    Element r(pres_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << word_to_string(pres_, w);
    }
    return os.str();
}

bool structurally_equal(const Element& a, const Element& b) {
    return a.terms() == b.terms();
}

TensorElement TensorElement::unit(const Presentation* p) {
    TensorElement t(p);
    t.add_term({}, {}, Scalar::one(p->mode));
    return t;
}

TensorElement TensorElement::tensor(const Element& a, const Element& b) {
    if (a.pres() != b.pres()) throw input_error("tensor slots over different presentations");
    TensorElement t(a.pres());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
    return t;
}

void TensorElement::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{l, r};
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (pres_ == nullptr) pres_ = o.pres_;
    if (pres_ != o.pres_) throw input_error("tensor presentation mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (pres_ == nullptr) pres_ = o.pres_;
    if (pres_ != o.pres_) throw input_error("tensor presentation mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(pres_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElement& TensorElement::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<Key, Scalar> out;
    for (const auto& [k, old] : terms_) {
        Scalar nc = old * c;
        if (!nc.is_zero()) out.emplace(k, std::move(nc));
    }
    terms_ = std::move(out);
    return *this;
}

TensorElement& TensorElement::scale(const Rat& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c.scale(r);
    return *this;
}

TensorElement TensorElement::concat_mul(const TensorElement& o) const {
    if (pres_ != o.pres_) throw input_error("tensor presentation mismatch");
    TensorElement r(pres_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Word l = ka.first;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            Word rt = ka.second;
            rt.insert(rt.end(), kb.second.begin(), kb.second.end());
            r.add_term(l, rt, ca * cb);
        }
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << word_to_string(pres_, k.first) << " (x) "
           << word_to_string(pres_, k.second);
    }
    return os.str();
}

bool structurally_equal(const TensorElement& a, const TensorElement& b) {
    return a.terms() == b.terms();
}

void Tensor3::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (pres_ == nullptr) pres_ = o.pres_;
    if (pres_ != o.pres_) throw input_error("tensor presentation mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

std::string Tensor3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << word_to_string(pres_, k[0]) << " (x) "
           << word_to_string(pres_, k[1]) << " (x) " << word_to_string(pres_, k[2]);
    }
    return os.str();
}

}  // namespace ckalg
