#include "ckalg/truncate.hpp"

#include "ckalg/rewrite.hpp"

namespace ckalg {

PresPtr truncated_sibling(const PresPtr& p, int K) {
    if (K < 0) throw input_error("truncation order must be >= 0");
    if (p->kind != PresentationKind::CayleyKlein)
        throw input_error("truncated_sibling: CK presentation required");
    return build_presentation(p->dim, p->omega, p->basis, p->split, K,
                              {{}, AntipodeVariant{}, false});
}

namespace {

// Raw expansion of one source word into target words with exact scalars.
void expand_word(const Presentation& src, const Presentation& tgt, const Word& w, int order,
                 std::map<Word, Scalar>& out, const Scalar& coeff) {
    std::vector<std::pair<Word, Scalar>> partial{{Word{}, coeff}};
    const Letter x = tgt.rank(gen_id(0, tgt.dim));
    for (Letter l : w) {
        const LetterId id = src.info(l).id;
        if (id.fam == LetterFamily::Gen) {
            Letter tl = tgt.rank(id);
            for (auto& [pw, pc] : partial) pw.push_back(tl);
            continue;
        }
        if (id.fam != LetterFamily::Exp && id.fam != LetterFamily::ExpInv)
            throw input_error("truncate: unexpected letter family");
        const int sign = id.fam == LetterFamily::Exp ? -1 : +1;
        std::vector<std::pair<Word, Scalar>> next;
        Rat fact(1);
        for (int n = 0; n <= order; ++n) {
            if (n > 0) fact *= n;
            Rat c = Rat(1) / fact;
            if (sign < 0 && n % 2 == 1) c = -c;
            Scalar sc = Scalar::lambda_pow(kExact, n, c);
            for (const auto& [pw, pc] : partial) {
                Word nw = pw;
                nw.insert(nw.end(), size_t(n), x);
                next.emplace_back(std::move(nw), pc * sc);
            }
        }
        partial = std::move(next);
    }
    for (auto& [pw, pc] : partial) {
        auto [it, fresh] = out.try_emplace(pw, pc);
        if (!fresh) it->second += pc;
    }
}

}  // namespace

Element truncate(const Element& e, const PresPtr& target) {
    const Presentation& src = *e.pres();
    const Presentation& tgt = *target;
    if (src.mode != kExact) throw input_error("truncate: element already truncated");
    if (tgt.mode < 0) throw input_error("truncate: target must be a truncated presentation");
    const int K = tgt.mode;

    std::map<Word, Scalar> acc;
    for (const auto& [w, c] : e.terms()) {
        int pole = c.min_exp() < 0 ? -c.min_exp() : 0;
        expand_word(src, tgt, w, K + pole, acc, c);
    }
    Element out(&tgt);
    for (const auto& [w, c] : acc) {
        if (c.is_zero()) continue;
        if (c.min_exp() < 0) throw input_error("truncate: element singular at lambda = 0");
        out.add_term(w, c.reduced(K));
    }
    return normal_form(out);
}

TensorElement truncate(const TensorElement& t, const PresPtr& target) {
    const Presentation& src = *t.pres();
    const Presentation& tgt = *target;
    if (src.mode != kExact) throw input_error("truncate: element already truncated");
    if (tgt.mode < 0) throw input_error("truncate: target must be a truncated presentation");
    const int K = tgt.mode;
    std::map<std::pair<Word, Word>, Scalar> acc;
    for (const auto& [k, c] : t.terms()) {
        int pole = c.min_exp() < 0 ? -c.min_exp() : 0;
        std::map<Word, Scalar> left, right;
        expand_word(src, tgt, k.first, K + pole, left, c);
        expand_word(src, tgt, k.second, K + pole, right, Scalar::one(kExact));
        for (const auto& [lw, lc] : left)
            for (const auto& [rw, rc] : right) {
                Scalar sc = lc * rc;
                if (sc.is_zero()) continue;
                auto [it, fresh] = acc.try_emplace({lw, rw}, sc);
                if (!fresh) it->second += sc;
            }
    }
    TensorElement out(&tgt);
    for (const auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        if (c.min_exp() < 0) throw input_error("truncate: singular at lambda = 0");
        out.add_term(k.first, k.second, c.reduced(K));
    }
    return normal_form(out);
}

}  // namespace ckalg
