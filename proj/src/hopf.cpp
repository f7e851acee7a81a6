#include "ckalg/hopf.hpp"

#include "ckalg/rewrite.hpp"

namespace ckalg {

namespace {

std::string pack(const Word& w) {
    return std::string(reinterpret_cast<const char*>(w.data()), w.size() * sizeof(Letter));
}

TensorElement delta_word(const Presentation& p, const Word& w) {
    if (w.empty()) return TensorElement::unit(&p);
    const std::string key = pack(w);
    {
        std::shared_lock lock(p.cache->mutex);
        auto it = p.cache->memo_delta.find(key);
        if (it != p.cache->memo_delta.end()) return it->second;
    }
    TensorElement out = TensorElement::unit(&p);
    for (Letter l : w) out = normal_form(out.concat_mul(p.delta.at(l)));
    std::unique_lock lock(p.cache->mutex);
    p.cache->memo_delta.emplace(key, out);
    return out;
}

Element gamma_word(const Presentation& p, const Word& w) {
    if (w.empty()) return Element::unit(&p);
    const std::string key = pack(w);
    {
        std::shared_lock lock(p.cache->mutex);
        auto it = p.cache->memo_gamma.find(key);
        if (it != p.cache->memo_gamma.end()) return it->second;
    }
    Element out = Element::unit(&p);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out = normal_form(out.concat_mul(p.gamma.at(*it)));
    std::unique_lock lock(p.cache->mutex);
    p.cache->memo_gamma.emplace(key, out);
    return out;
}

}  // namespace

TensorElement coproduct(const Element& e) {
    const Presentation& p = *e.pres();
    TensorElement out(&p);
    for (const auto& [w, c] : e.terms()) {
        TensorElement t = delta_word(p, w);
        t.scale(c);
        out += t;
    }
    return out;
}

Scalar counit(const Element& e) {
    const Presentation& p = *e.pres();
    Scalar out(p.mode);
    for (const auto& [w, c] : e.terms()) {
        Scalar s = Scalar::one(p.mode);
        for (Letter l : w) s = s * p.epsilon.at(l);
        out += s * c;
    }
    return out;
}

Element antipode(const Element& e) {
    const Presentation& p = *e.pres();
    if (!p.has_antipode) throw input_error("presentation has no antipode");
    Element out(&p);
    for (const auto& [w, c] : e.terms()) {
        Element t = gamma_word(p, w);
        t.scale(c);
        out += t;
    }
    return out;
}

Tensor3 delta_left(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Tensor3 out(&p);
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = delta_word(p, k.first);
        for (const auto& [dk, dc] : d.terms()) out.add_term({dk.first, dk.second, k.second}, c * dc);
    }
    return normal_form(out);
}

Tensor3 delta_right(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Tensor3 out(&p);
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = delta_word(p, k.second);
        for (const auto& [dk, dc] : d.terms()) out.add_term({k.first, dk.first, dk.second}, c * dc);
    }
    return normal_form(out);
}

Element counit_left(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Element out(&p);
    for (const auto& [k, c] : t.terms()) {
        Scalar s = Scalar::one(p.mode);
        for (Letter l : k.first) s = s * p.epsilon.at(l);
        out.add_term(k.second, s * c);
    }
    return normal_form(out);
}

Element counit_right(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Element out(&p);
    for (const auto& [k, c] : t.terms()) {
        Scalar s = Scalar::one(p.mode);
        for (Letter l : k.second) s = s * p.epsilon.at(l);
        out.add_term(k.first, s * c);
    }
    return normal_form(out);
}

Element mul_antipode_left(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Element out(&p);
    for (const auto& [k, c] : t.terms()) {
        Element g = gamma_word(p, k.first);
        Element prod = g.concat_mul(Element::monomial(&p, k.second, Scalar::one(p.mode)));
        prod.scale(c);
        out += prod;
    }
    return normal_form(out);
}

Element mul_antipode_right(const TensorElement& t) {
    const Presentation& p = *t.pres();
    Element out(&p);
    for (const auto& [k, c] : t.terms()) {
        Element g = gamma_word(p, k.second);
        Element prod = Element::monomial(&p, k.first, Scalar::one(p.mode)).concat_mul(g);
        prod.scale(c);
        out += prod;
    }
    return normal_form(out);
}

}  // namespace ckalg
