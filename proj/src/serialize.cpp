#include "ckalg/serialize.hpp"

#include <sstream>

namespace ckalg {

Json to_json(const Scalar& s) {
    Json j = Json::array();
    for (const auto& [e, c] : s.coeffs()) j.push_back(Json::array({e, rat_to_string(c)}));
    return j;
}

namespace {

Json word_to_json(const Presentation* p, const Word& w) {
    Json j = Json::array();
    for (Letter l : w) j.push_back(p->info(l).name);
    return j;
}

Word word_from_json(const PresPtr& p, const Json& j) {
    Word w;
    for (const auto& s : j) {
        auto it = p->rank_of_name.find(s.get<std::string>());
        if (it == p->rank_of_name.end())
            throw input_error("unknown letter name: " + s.get<std::string>());
        w.push_back(it->second);
    }
    return w;
}

}  // namespace

Json to_json(const Element& e) {
    Json j = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json t;
        t["coeff"] = to_json(c);
        t["word"] = word_to_json(e.pres(), w);
        j.push_back(std::move(t));
    }
    return j;
}

Json to_json(const TensorElement& t) {
    Json j = Json::array();
    for (const auto& [k, c] : t.terms()) {
        Json it;
        it["coeff"] = to_json(c);
        it["left"] = word_to_json(t.pres(), k.first);
        it["right"] = word_to_json(t.pres(), k.second);
        j.push_back(std::move(it));
    }
    return j;
}

Json to_json(const Tensor3& t) {
    Json j = Json::array();
    for (const auto& [k, c] : t.terms()) {
        Json it;
        it["coeff"] = to_json(c);
        it["slots"] = Json::array({word_to_json(t.pres(), k[0]), word_to_json(t.pres(), k[1]),
                                   word_to_json(t.pres(), k[2])});
        j.push_back(std::move(it));
    }
    return j;
}

Scalar scalar_from_json(int mode, const Json& j) {
    Scalar s(mode);
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw input_error("bad scalar json");
        s.set(pair[0].get<int>(), rat_from_string(pair[1].get<std::string>()));
    }
    return s;
}

Element element_from_json(const PresPtr& p, const Json& j) {
    Element e(p.get());
    for (const auto& t : j)
        e.add_term(word_from_json(p, t.at("word")), scalar_from_json(p->mode, t.at("coeff")));
    return e;
}

TensorElement tensor_from_json(const PresPtr& p, const Json& j) {
    TensorElement e(p.get());
    for (const auto& t : j)
        e.add_term(word_from_json(p, t.at("left")), word_from_json(p, t.at("right")),
                   scalar_from_json(p->mode, t.at("coeff")));
    return e;
}

namespace {

std::string latex_rat(const Rat& r) {
    std::ostringstream os;
    Rat a = r < 0 ? Rat(-r) : r;
    if (denominator(a) == 1)
        os << numerator(a).str();
    else
        os << "\\tfrac{" << numerator(a).str() << "}{" << denominator(a).str() << "}";
    return os.str();
}

std::string latex_letter(const Presentation& p, Letter l) {
    const LetterInfo& li = p.info(l);
    std::ostringstream os;
    switch (li.id.fam) {
        case LetterFamily::Gen: {
            char tag = li.sector == Sector::XSector ? 'X' : 'J';
            if (p.kind == PresentationKind::HeisenbergWeyl) return li.name;  // already TeX-ish
            os << tag << "_{" << li.id.a << li.id.b << "}";
            return os.str();
        }
        case LetterFamily::Exp:
        case LetterFamily::ExpInv: {
            const LetterInfo& g = p.info(p.rank(gen_id(0, p.dim)));
            char tag = g.sector == Sector::XSector ? 'X' : 'J';
            std::string base = p.kind == PresentationKind::HeisenbergWeyl
                                   ? "\\Xi"
                                   : std::string(1, tag) + "_{0" + std::to_string(p.dim) + "}";
            os << "e^{" << (li.id.fam == LetterFamily::Exp ? "-" : "") << "\\lambda " << base << "}";
            return os.str();
        }
        case LetterFamily::R: os << "R_{" << li.id.a << li.id.b << "}"; return os.str();
        case LetterFamily::Rinv: os << "R^{-1}_{" << li.id.a << li.id.b << "}"; return os.str();
        case LetterFamily::DualX: os << "x_{" << li.id.a << "}"; return os.str();
        case LetterFamily::DualY: os << "y_{" << li.id.a << "}"; return os.str();
        case LetterFamily::Chi: return "\\chi";
    }
    return li.name;
}

}  // namespace

std::string latex(const Presentation& p, const Scalar& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.coeffs()) {
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        Rat mag = c < 0 ? Rat(-c) : c;
        bool unit_mag = mag == 1;
        if (!unit_mag || e == 0) os << latex_rat(mag);
        if (e == 1)
            os << "\\lambda ";
        else if (e != 0)
            os << "\\lambda^{" << e << "}";
    }
    return os.str();
}

std::string latex(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        os << latex_letter(p, w[i]);
        if (j - i > 1) os << "^{" << (j - i) << "}";
        i = j;
    }
    return os.str();
}

std::string latex(const Element& e) {
    if (e.is_zero()) return "0";
    const Presentation& p = *e.pres();
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        std::string sc = latex(p, c);
        bool multi = c.coeffs().size() > 1;
        if (!first) os << " + ";
        first = false;
        if (sc == "1" && !w.empty())
            ;
        else if (sc == "-1" && !w.empty())
            os << "-";
        else
            os << (multi ? "\\left(" + sc + "\\right)" : sc);
        os << latex(p, w);
    }
    return os.str();
}

std::string latex(const TensorElement& t) {
    if (t.is_zero()) return "0";
    const Presentation& p = *t.pres();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        std::string sc = latex(p, c);
        bool multi = c.coeffs().size() > 1;
        if (!first) os << " + ";
        first = false;
        if (sc == "1")
            ;
        else if (sc == "-1")
            os << "-";
        else
            os << (multi ? "\\left(" + sc + "\\right)" : sc);
        os << latex(p, k.first) << " \\otimes " << latex(p, k.second);
    }
    return os.str();
}

}  // namespace ckalg
