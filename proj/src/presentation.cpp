#include "ckalg/presentation.hpp"

#include "ckalg/hopf.hpp"
#include "ckalg/report.hpp"
#include "ckalg/rewrite.hpp"
#include "ckalg/serialize.hpp"
#include "ckalg/truncate.hpp"

#include <algorithm>
#include <sstream>

namespace ckalg {

Letter Presentation::rank(const LetterId& id) const {
    auto it = rank_of_id.find(id);
    if (it == rank_of_id.end()) throw input_error("unknown letter");
    return it->second;
}

Element Presentation::bracket(Letter u, Letter v) const {
    if (u == v) return Element::zero(this);
    if (u < v) {
        auto it = comm.find({u, v});
        return it == comm.end() ? Element::zero(this) : it->second;
    }
    auto it = comm.find({v, u});
    return it == comm.end() ? Element::zero(this) : -it->second;
}

int Presentation::word_weight(const Word& w) const {
    int s = 0;
    for (Letter l : w) s += letters[l].weight;
    return s;
}

Rat omega_prod(const Presentation& p, int a, int b) {
    if (a < 0 || b > p.dim || a >= b) throw input_error("omega_prod: index out of range");
    Rat r(1);
    for (int s = a + 1; s <= b; ++s) {
        if (s == 1) return Rat(0);  // omega_1 = 0 (inhomogeneous family)
        r *= p.omega[size_t(s) - 2];
        if (r == 0) return r;
    }
    return r;
}

Sector sector_of(const Presentation& p, const LetterId& id, int split) {
    if (split < 1 || split > p.dim) throw input_error("sector_of: invalid split");
    if (id.fam == LetterFamily::Exp || id.fam == LetterFamily::ExpInv) return Sector::Exponential;
    if (id.fam != LetterFamily::Gen) throw input_error("sector_of: not a CK generator");
    return sector_of_position(id.a, id.b, split);
}

Element Presentation::exp_element(int sign_of_exponent) const {
    if (mode == kExact)
        return gen(sign_of_exponent < 0 ? exp_id() : exp_inv_id());
    // truncated: e^{sign*lambda*x} with x the (0,N) generator, to order K
    Element e(this);
    Letter x = rank(gen_id(0, dim));
    Rat fact(1);
    for (int n = 0; n <= mode; ++n) {
        if (n > 0) fact *= n;
        Rat c = Rat(1) / fact;
        if (sign_of_exponent < 0 && n % 2 == 1) c = -c;
        e.add_term(Word(size_t(n), x), Scalar::lambda_pow(mode, n, c));
    }
    return e;
}

namespace {

int rotation_weight(int mode) { return mode == kExact ? 3 : mode + 3; }

// (1 - e^{-2 lambda x})/(2 lambda) with x the (0,N) generator: kept closed
// form via Z in exact mode, expanded to order K in truncated mode.
Element exp_defect(const Presentation* p) {
    Element e(p);
    if (p->mode == kExact) {
        Letter z = p->rank(exp_id());
        e.add_term({}, Scalar::lambda_pow(kExact, -1, Rat(1, 2)));
        e.add_term({z, z}, Scalar::lambda_pow(kExact, -1, Rat(-1, 2)));
        return e;
    }
    Letter x = p->rank(gen_id(0, p->dim));
    Rat fact(1);
    Rat pow2(1);
    for (int n = 1; n <= p->mode + 1; ++n) {
        fact *= n;
        Rat c = pow2 / fact;  // 2^{n-1}/n!
        if (n % 2 == 0) c = -c;
        e.add_term(Word(size_t(n), x), Scalar::lambda_pow(p->mode, n - 1, c));
        pow2 *= 2;
    }
    return e;
}

// phi = (1 - e^{-2 lambda x0N})/(2 lambda) - (lambda/2) sum_s omega_{sN} g0s^2
Element phi_element(const Presentation* p) {
    Element e = exp_defect(p);
    for (int s = 1; s <= p->dim - 1; ++s) {
        Rat w = omega_prod(*p, s, p->dim);
        if (w == 0) continue;
        Letter g = p->rank(gen_id(0, s));
        e.add_term({g, g}, Scalar::lambda_pow(p->mode, 1, -w / 2));
    }
    return e;
}

// Undeformed CK bracket (structure constants of so_{omega}(N+1), omega_1 = 0).
Element classical_bracket(const Presentation* p, const LetterId& u, const LetterId& v) {
    Element e(p);
    const int pr = u.a, pc = u.b, qr = v.a, qc = v.b;
    auto term = [&](int r, int c, const Rat& coef) {
        if (coef != 0) e.add_term({p->rank(gen_id(r, c))}, p->scalar(coef));
    };
    if (pr == qr && pc == qc) return e;
    if (pr == qr) {  // common row: [J_ab, J_ac] = omega_ab J_bc
        if (pc < qc)
            term(pc, qc, omega_prod(*p, pr, pc));
        else
            term(qc, pc, -omega_prod(*p, pr, qc));
    } else if (pc == qc) {  // common column: [J_ac, J_bc] = omega_bc J_ab
        if (pr < qr)
            term(pr, qr, omega_prod(*p, qr, pc));
        else
            term(qr, pr, -omega_prod(*p, pr, pc));
    } else if (pc == qr) {  // [J_ab, J_bc] = -J_ac
        term(pr, qc, Rat(-1));
    } else if (pr == qc) {  // [J_pq, J_rp] = +J_rq
        term(qr, pc, Rat(1));
    }
    return e;
}

// Deformed bracket of Eqs. (ce): classical except [g_{iN}, g_{0j}] for
// i,j in 1..N-1.
Element old_bracket(const Presentation* p, const LetterId& u, const LetterId& v) {
    const int N = p->dim;
    auto deformed = [&](int i, int j) {  // [g_{iN}, g_{0j}]
        Element e(p);
        if (i == j) e += phi_element(p);
        Rat w = omega_prod(*p, i, N);
        if (w != 0) {
            Word word{p->rank(gen_id(0, i)), p->rank(gen_id(0, j))};
            e.add_term(word, Scalar::lambda_pow(p->mode, 1, w));
        }
        return e;
    };
    if (u.b == N && u.a >= 1 && v.a == 0 && v.b <= N - 1) return deformed(u.a, v.b);
    if (v.b == N && v.a >= 1 && u.a == 0 && u.b <= N - 1) return -deformed(v.a, u.b);
    return classical_bracket(p, u, v);
}

// New-basis bracket at split a: old one except where the boosts g_{iN}
// (i >= a) meet the X sector or the left-triangle row 0.
Element new_bracket(const Presentation* p, const LetterId& u, const LetterId& v) {
    const int N = p->dim, a = p->split;
    auto is_boost = [&](const LetterId& g) { return g.fam == LetterFamily::Gen && g.b == N && g.a >= a; };
    if (is_boost(v) && !is_boost(u)) return -new_bracket(p, v, u);
    if (is_boost(u) && u.fam == LetterFamily::Gen && v.fam == LetterFamily::Gen) {
        const int k = u.a;
        const Rat wk = omega_prod(*p, k, N);
        if (v.a == 0 && v.b < a) return Element::zero(p);  // [J_kN, J_0j] = 0
        if (v.a >= 1 && v.a < a && v.b >= a && v.b <= N - 1) {
            // [J_kN, X_ij] = delta_jk X_iN + lambda omega_kN X_0j X_ik
            Element e(p);
            if (v.b == k) e.add_term({p->rank(gen_id(v.a, N))}, p->scalar_one());
            if (wk != 0)
                e.add_term({p->rank(gen_id(0, v.b)), p->rank(gen_id(v.a, k))},
                           Scalar::lambda_pow(p->mode, 1, wk));
            return e;
        }
        if (v.a >= 1 && v.a < a && v.b == N) {
            // [J_kN, X_iN] = omega_kN (lambda*phi - 1) X_ik
            Element e(p);
            if (wk != 0) {
                Element x = Element::letter(p, p->rank(gen_id(v.a, k)));
                Element f = phi_element(p);
                f.scale(Scalar::lambda_pow(p->mode, 1, wk));
                f.add_term({}, p->scalar(-wk));
                e = f.concat_mul(x);
            }
            return e;
        }
    }
    return old_bracket(p, u, v);
}

void layout_ck_letters(Presentation& p) {
    const int N = p.dim, a = p.split;
    std::vector<LetterId> xs, js;
    for (int r = 0; r <= N - 1; ++r)
        for (int c = r + 1; c <= N; ++c)
            (sector_of_position(r, c, a) == Sector::XSector ? xs : js).push_back(gen_id(r, c));
    auto push = [&](const LetterId& id, Sector sec, int weight, const std::string& name) {
        Letter rank = static_cast<Letter>(p.letters.size());
        p.letters.push_back({id, name, weight, sec, false});
        p.rank_of_id[id] = rank;
        p.rank_of_name[name] = rank;
    };
    auto gen_name = [](char tag, const LetterId& id) {
        std::ostringstream os;
        os << tag << "(" << id.a << "," << id.b << ")";
        return os.str();
    };
    for (const auto& id : xs) push(id, Sector::XSector, 1, gen_name('X', id));
    if (p.mode == kExact) {
        push(exp_id(), Sector::Exponential, 1, "Z");
        push(exp_inv_id(), Sector::Exponential, 1, "Z^-1");
    }
    const int jw = rotation_weight(p.mode);
    for (const auto& id : js)
        push(id, sector_of_position(id.a, id.b, a), jw, gen_name('J', id));
}

void build_ck_table(Presentation& p) {
    const int N = p.dim;
    const bool newb = p.basis == BasisKind::New;
    const size_t n = p.letters.size();
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = u + 1; v < n; ++v) {
            const LetterId gu = p.letters[u].id, gv = p.letters[v].id;
            Element e(&p);
            if (gu.fam == LetterFamily::Gen && gv.fam == LetterFamily::Gen) {
                e = newb ? new_bracket(&p, gu, gv) : old_bracket(&p, gu, gv);
            } else if (gu.fam == LetterFamily::Gen || gv.fam == LetterFamily::Gen) {
                // Z-rules: [g_{iN}, Z] = lambda omega_iN g_{0i} Z (opposite sign for Z^-1)
                const LetterId g = gu.fam == LetterFamily::Gen ? gu : gv;
                const LetterId z = gu.fam == LetterFamily::Gen ? gv : gu;
                if (g.b == N && g.a >= 1) {
                    Rat w = omega_prod(p, g.a, N);
                    if (w != 0) {
                        if (z.fam == LetterFamily::ExpInv) w = -w;
                        Word word{p.rank(gen_id(0, g.a)), p.rank(z)};
                        e.add_term(word, Scalar::lambda_pow(p.mode, 1, w));
                        if (gv == g) e = -e;  // stored entry is [g_u, g_v]
                    }
                }
            }
            // Z with Z^-1 commute; the unit relation is a pair rule.
            p.comm[{static_cast<Letter>(u), static_cast<Letter>(v)}] = std::move(e);
        }
    }
    if (p.mode == kExact) {
        Letter z = p.rank(exp_id()), zi = p.rank(exp_inv_id());
        p.pair_rules.push_back({z, zi, Element::unit(&p), false});
        p.pair_rules.push_back({zi, z, Element::unit(&p), false});
    }
}

void build_ck_hopf(Presentation& p, const AntipodeVariant& variant) {
    const int N = p.dim, a = p.split;
    const bool newb = p.basis == BasisKind::New;
    const Element one = Element::unit(&p);
    const Element E = p.exp_element(-1), Einv = p.exp_element(+1);
    auto lam = [&](const Rat& r) { return Scalar::lambda_pow(p.mode, 1, r); };

    for (Letter l = 0; l < p.letters.size(); ++l) {
        const LetterInfo& li = p.letters[l];
        const Element g = Element::letter(&p, l);
        if (li.id.fam == LetterFamily::Exp || li.id.fam == LetterFamily::ExpInv) {
            p.delta[l] = TensorElement::tensor(g, g);
            p.epsilon[l] = p.scalar_one();
            p.gamma[l] = li.id.fam == LetterFamily::Exp ? Element::letter(&p, p.rank(exp_inv_id()))
                                                        : Element::letter(&p, p.rank(exp_id()));
            continue;
        }
        p.epsilon[l] = Scalar::zero(p.mode);
        const int i = li.id.a, j = li.id.b;
        if (i == 0 && j == N) {  // the primitive generator under the exponential
            p.delta[l] = TensorElement::tensor(one, g) + TensorElement::tensor(g, one);
            p.gamma[l] = -g;
        } else if (i == 0) {
            p.delta[l] = TensorElement::tensor(E, g) + TensorElement::tensor(g, one);
            p.gamma[l] = -Einv.concat_mul(g);
        } else if (j <= N - 1) {
            p.delta[l] = TensorElement::tensor(one, g) + TensorElement::tensor(g, one);
            p.gamma[l] = -g;
        } else {
            // boosts g_{iN}, 1 <= i <= N-1
            const bool new_boost = newb && i >= a;
            TensorElement d = TensorElement::tensor(E, g) + TensorElement::tensor(g, one);
            Element gm = -Einv.concat_mul(g);
            for (int s = 1; s <= i - 1; ++s) {
                Rat w = omega_prod(p, i, N);
                if (w == 0) break;
                Element g0s = p.gen(gen_id(0, s)), gsi = p.gen(gen_id(s, i));
                if (new_boost && s <= a - 1) {
                    // transported first sum: slots swap and pick up the exponential
                    TensorElement t = TensorElement::tensor(E.concat_mul(gsi), g0s);
                    t.scale(lam(-w));
                    d += t;
                    Element m = Einv.concat_mul(gsi).concat_mul(g0s);
                    m.scale(lam(-w));
                    gm += m;
                } else {
                    TensorElement t = TensorElement::tensor(g0s, gsi);
                    t.scale(lam(w));
                    d += t;
                    Element m = Einv.concat_mul(g0s).concat_mul(gsi);
                    m.scale(lam(w));
                    gm += m;
                }
            }
            for (int s = i + 1; s <= N - 1; ++s) {
                Rat w = omega_prod(p, s, N);
                if (w == 0) continue;
                Element g0s = p.gen(gen_id(0, s)), gis = p.gen(gen_id(i, s));
                TensorElement t = TensorElement::tensor(g0s, gis);
                t.scale(lam(-w));
                d += t;
                // antipode variant readings apply to this sum on new-basis boosts
                bool include = true;
                Rat wg = w;
                if (new_boost) {
                    if (variant.x_letters && sector_of_position(i, s, a) != Sector::XSector)
                        include = false;
                    if (!variant.omega_factor) wg = Rat(1);
                }
                if (include) {
                    Element m = Einv.concat_mul(g0s).concat_mul(gis);
                    m.scale(lam(-wg));
                    gm += m;
                }
            }
            p.delta[l] = std::move(d);
            p.gamma[l] = std::move(gm);
        }
    }
    p.has_antipode = true;
}

void certify_exp_rules(const Presentation& p) {
    // Validate the derived Z-rules against the truncated series definition.
    PresPtr sib = build_presentation(p.dim, p.omega, p.basis, p.split, 4,
                                     {{}, AntipodeVariant{}, false});
    const Presentation* q = sib.get();
    Element s = q->exp_element(-1), si = q->exp_element(+1);
    if (!normal_form(s.concat_mul(si) - Element::unit(q)).is_zero())
        throw verification_error("exp series unit relation failed");
    for (int i = 1; i <= p.dim - 1; ++i) {
        Element j = q->gen(gen_id(i, q->dim));
        Rat w = omega_prod(*q, i, q->dim);
        for (int sign : {-1, +1}) {
            const Element& e = sign < 0 ? s : si;
            Element lhs = commutator(j, e);
            Element rhs = q->gen(gen_id(0, i)).concat_mul(e);
            rhs.scale(Scalar::lambda_pow(q->mode, 1, sign < 0 ? w : -w));
            if (!normal_form(lhs - rhs).is_zero())
                throw verification_error("exp commutation rule failed series certification");
        }
    }
}

}  // namespace

void seal_presentation(Presentation& p) {
    p.cache = std::make_shared<RewriteCache>();
    // normalize the table against itself, two-phase to keep rewriting stable
    std::map<std::pair<Letter, Letter>, Element> canon;
    for (const auto& [k, e] : p.comm) canon[k] = normal_form(e);
    p.comm = std::move(canon);
    for (auto& r : p.pair_rules) r.rhs = normal_form(r.rhs);
    p.cache = std::make_shared<RewriteCache>();

    for (auto& [l, d] : p.delta) d = normal_form(d);
    for (auto& [l, g] : p.gamma) g = normal_form(g);

    // weight decrease: termination certificate for the rewriter
    for (const auto& [k, e] : p.comm) {
        int bound = p.letters[k.first].weight + p.letters[k.second].weight;
        for (const auto& [w, c] : e.terms())
            if (p.word_weight(w) >= bound)
                throw verification_error("comm table entry violates weight decrease at pair " +
                                         p.letters[k.first].name + "," + p.letters[k.second].name);
    }
    for (const auto& r : p.pair_rules) {
        int bound = p.letters[r.first].weight + p.letters[r.second].weight;
        for (const auto& [w, c] : r.rhs.terms()) {
            int ww = p.word_weight(w);
            if (ww > bound || (ww == bound && !measure_less(p, {std::max(r.first, r.second)},
                                                            {std::min(r.first, r.second)})))
                if (ww >= bound && !(w.size() == 2 && r.at_distance))
                    throw verification_error("pair rule violates termination measure");
        }
    }

    // central letters commute with the whole alphabet
    for (Letter u = 0; u < p.letters.size(); ++u) {
        bool central = true;
        for (Letter v = 0; v < p.letters.size() && central; ++v)
            if (u != v && !p.bracket(u, v).is_zero()) central = false;
        p.letters[u].central = central;
    }
    for (const auto& r : p.pair_rules)
        if (r.at_distance && (!p.letters[r.first].central || !p.letters[r.second].central))
            throw verification_error("at-distance pair rule on non-central letters");
}

void apply_mutations(Presentation& p, const std::vector<Mutation>& mutations) {
    for (const auto& m : mutations) {
        Letter u = p.rank(m.g), v = p.rank(m.h);
        bool flip = u > v;
        if (flip) std::swap(u, v);
        auto it = p.comm.find({u, v});
        if (it == p.comm.end()) throw input_error("mutation names a missing pair");
        Element mutated(&p);
        int idx = 0;
        for (const auto& [w, c] : it->second.terms()) {
            Scalar nc = c;
            if (m.term_index < 0 || m.term_index == idx) nc.scale(m.factor);
            mutated.add_term(w, nc);
            ++idx;
        }
        if (m.term_index >= idx) throw input_error("mutation term index out of range");
        it->second = std::move(mutated);
    }
    p.cache = std::make_shared<RewriteCache>();
}

PresPtr build_presentation(int N, std::vector<Rat> omega, BasisKind basis, int split, int mode,
                           const BuildOptions& opts) {
    if (N < 2) throw input_error("N must be at least 2");
    if (static_cast<int>(omega.size()) != N - 1)
        throw input_error("omega must have N-1 entries (omega_2..omega_N)");
    if (split < 1 || split > N) throw input_error("split out of range");
    if (mode < kExact) throw input_error("invalid scalar mode");
    if (split > 1 && omega[size_t(split) - 2] != 0)
        throw input_error("split a > 1 requires omega_a = 0");

    auto p = std::make_shared<Presentation>();
    p->kind = PresentationKind::CayleyKlein;
    p->dim = N;
    p->omega = std::move(omega);
    p->basis = basis;
    p->split = split;
    p->mode = mode;
    layout_ck_letters(*p);
    build_ck_table(*p);
    build_ck_hopf(*p, opts.antipode_variant);
    seal_presentation(*p);
    if (!opts.mutations.empty()) apply_mutations(*p, opts.mutations);
    if (opts.certify_exp_rules && mode == kExact && opts.mutations.empty()) certify_exp_rules(*p);
    return p;
}

Element hat_j(const PresPtr& p, int i) {
    const Presentation* q = p.get();
    if (q->kind != PresentationKind::CayleyKlein) throw input_error("hat_j: CK presentation required");
    const int N = q->dim, a = q->split;
    if (i < 1 || i > N - 1) throw input_error("hat_j: index out of range");
    Element e(q);
    Rat w = omega_prod(*q, i, N);
    if (w == 0) return e;  // covers i < a and a = N
    for (int s = 1; s <= a - 1; ++s) {
        Word word{q->rank(gen_id(0, s)), q->rank(gen_id(s, i))};
        e.add_term(word, Scalar::lambda_pow(q->mode, 1, w));
    }
    return normal_form(e);
}

namespace {

// Substitution new -> old: boosts map to g_{iN} - hat-J_{iN}, everything
// else to the identically placed old letter.
class BasisMap {
public:
    BasisMap(const PresPtr& p_old, const PresPtr& p_new) : old_(p_old), new_(p_new) {
        const int a = p_old->split, N = p_old->dim;
        for (Letter l = 0; l < p_new->letters.size(); ++l) {
            const LetterId id = p_new->letters[l].id;
            Element img = p_old->gen(id);
            if (id.fam == LetterFamily::Gen && id.b == N && id.a >= a)
                img -= hat_j(p_old, id.a);
            images_.push_back(normal_form(img));
        }
    }

    Element map(const Element& e) const {
        Element out(old_.get());
        for (const auto& [w, c] : e.terms()) {
            Element prod = Element::unit(old_.get());
            for (Letter l : w) prod = prod.concat_mul(images_[l]);
            Scalar sc(old_->mode);
            for (const auto& [exp, r] : c.coeffs()) sc.set(exp, r);
            prod.scale(sc);
            out += prod;
        }
        return normal_form(out);
    }

    TensorElement map(const TensorElement& t) const {
        TensorElement out(old_.get());
        for (const auto& [k, c] : t.terms()) {
            Element l = map(Element::monomial(new_.get(), k.first, Scalar::one(new_->mode)));
            Element r = map(Element::monomial(new_.get(), k.second, Scalar::one(new_->mode)));
            TensorElement prod = TensorElement::tensor(l, r);
            Scalar sc(old_->mode);
            for (const auto& [exp, rr] : c.coeffs()) sc.set(exp, rr);
            prod.scale(sc);
            out += prod;
        }
        return normal_form(out);
    }

private:
    PresPtr old_, new_;
    std::vector<Element> images_;
};

}  // namespace

PresPtr change_basis(const PresPtr& p_old, Report* out_report) {
    const Presentation* q = p_old.get();
    if (q->kind != PresentationKind::CayleyKlein || q->basis != BasisKind::Old)
        throw input_error("change_basis: old-basis CK presentation required");
    const int N = q->dim, a = q->split;
    PresPtr p_new = build_presentation(N, q->omega, BasisKind::New, a, q->mode,
                                       {{}, AntipodeVariant{}, false});
    BasisMap bm(p_old, p_new);

    Report rep;
    rep.presentation = presentation_descriptor(*q);
    auto record = [&](const std::string& id, const auto& lhs, const auto& rhs) {
        auto diff = lhs - rhs;
        if (diff.is_zero())
            rep.add(CheckResult::ok(id));
        else
            rep.add(CheckResult::fail(id, {to_json(lhs), to_json(rhs), to_json(diff)}));
    };

    const Element E = q->exp_element(-1);
    const Element one = Element::unit(q);
    for (int i = a; i <= N - 1; ++i) {
        Element hj = hat_j(p_old, i);
        const Rat w = omega_prod(*q, i, N);
        // (dem1): the coproduct of hat-J
        TensorElement rhs1 = TensorElement::tensor(E, hj) + TensorElement::tensor(hj, one);
        for (int s = 1; s <= a - 1 && w != 0; ++s) {
            Element g0s = q->gen(gen_id(0, s)), gsi = q->gen(gen_id(s, i));
            TensorElement t = TensorElement::tensor(g0s, gsi);
            t.scale(Scalar::lambda_pow(q->mode, 1, w));
            rhs1 += t;
            TensorElement t2 = TensorElement::tensor(E.concat_mul(gsi), g0s);
            t2.scale(Scalar::lambda_pow(q->mode, 1, w));
            rhs1 += t2;
        }
        record("change_basis/dem1/" + q->info(q->rank(gen_id(i, N))).name, coproduct(hj),
               normal_form(rhs1));
        // (dem2): [hat-J_iN, J_0j] = lambda omega_iN J_0j X_0i
        for (int j = 1; j <= a - 1; ++j) {
            Element rhs2 = q->gen(gen_id(0, j)).concat_mul(q->gen(gen_id(0, i)));
            rhs2.scale(Scalar::lambda_pow(q->mode, 1, w));
            record("change_basis/dem2/" + q->info(q->rank(gen_id(i, N))).name + "|" +
                       q->info(q->rank(gen_id(0, j))).name,
                   commutator(hj, q->gen(gen_id(0, j))), normal_form(rhs2));
        }
    }

    // the substituted table must reproduce the pattern-generated new basis
    for (const auto& [k, e] : p_new->comm) {
        Element gu = Element::letter(p_new.get(), k.first);
        Element gv = Element::letter(p_new.get(), k.second);
        record("change_basis/comm/" + p_new->info(k.first).name + "|" + p_new->info(k.second).name,
               commutator(bm.map(gu), bm.map(gv)), bm.map(e));
    }
    for (Letter l = 0; l < p_new->letters.size(); ++l) {
        const std::string& nm = p_new->info(l).name;
        Element img = bm.map(Element::letter(p_new.get(), l));
        record("change_basis/delta/" + nm, coproduct(img), bm.map(p_new->delta.at(l)));
        record("change_basis/gamma/" + nm, antipode(img), bm.map(p_new->gamma.at(l)));
        Scalar eo = counit(img), en = p_new->epsilon.at(l);
        Scalar ediff = eo;
        Scalar en_old(q->mode);
        for (const auto& [exp, r] : en.coeffs()) en_old.set(exp, r);
        ediff -= en_old;
        if (ediff.is_zero())
            rep.add(CheckResult::ok("change_basis/epsilon/" + nm));
        else
            rep.add(CheckResult::fail("change_basis/epsilon/" + nm,
                                      {Json(eo.to_string()), Json(en.to_string()), Json(ediff.to_string())}));
    }
    rep.sort_checks();
    if (out_report) *out_report = rep;
    if (!rep.all_pass())
        throw verification_error("change_basis verification failed:\n" + rep.summary());
    return p_new;
}

}  // namespace ckalg
