#include "ckalg/bicross.hpp"

#include "ckalg/hopf.hpp"
#include "ckalg/parallel.hpp"
#include "ckalg/rewrite.hpp"
#include "ckalg/serialize.hpp"

#include <functional>

namespace ckalg {

namespace {

using Task = std::function<CheckResult()>;

Report run_tasks(const Presentation& p, std::vector<Task> tasks, unsigned threads) {
    std::vector<CheckResult> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](size_t i) { results[i] = tasks[i](); });
    Report rep;
    rep.presentation = presentation_descriptor(p);
    for (auto& r : results) rep.add(std::move(r));
    rep.sort_checks();
    return rep;
}

template <class T>
CheckResult compare(const std::string& id, const T& lhs, const T& rhs) {
    T diff = lhs - rhs;
    if (diff.is_zero()) return CheckResult::ok(id);
    return CheckResult::fail(id, {to_json(lhs), to_json(rhs), to_json(diff)});
}

CheckResult compare_scalar(const std::string& id, const Scalar& lhs, const Scalar& rhs) {
    Scalar diff = lhs - rhs;
    if (diff.is_zero()) return CheckResult::ok(id);
    return CheckResult::fail(id, {to_json(lhs), to_json(rhs), to_json(diff)});
}

bool is_x_side(const LetterInfo& li) {
    return li.sector == Sector::XSector || li.sector == Sector::Exponential;
}

bool word_in_x(const Presentation& p, const Word& w) {
    for (Letter l : w)
        if (!is_x_side(p.info(l))) return false;
    return true;
}

bool word_in_j(const Presentation& p, const Word& w) {
    for (Letter l : w)
        if (is_x_side(p.info(l))) return false;
    return true;
}

CheckResult element_in_x(const Presentation& p, const std::string& id, const Element& e) {
    for (const auto& [w, c] : e.terms())
        if (!word_in_x(p, w))
            return CheckResult::fail(id, {to_json(e), Json::array(), to_json(e)});
    return CheckResult::ok(id);
}

std::vector<Task> hopf_axiom_tasks(const PresPtr& pp) {
    const Presentation& p = *pp;
    std::vector<Task> tasks;
    const Element one = Element::unit(&p);
    for (Letter l = 0; l < p.letters.size(); ++l) {
        const std::string nm = p.info(l).name;
        tasks.push_back([&p, l, nm] {
            const TensorElement& d = p.delta.at(l);
            return compare("hopf/coassoc/" + nm, delta_left(d), delta_right(d));
        });
        tasks.push_back([&p, l, nm] {
            return compare("hopf/counit_left/" + nm, counit_left(p.delta.at(l)),
                           Element::letter(&p, l));
        });
        tasks.push_back([&p, l, nm] {
            return compare("hopf/counit_right/" + nm, counit_right(p.delta.at(l)),
                           Element::letter(&p, l));
        });
        if (p.has_antipode) {
            tasks.push_back([&p, l, nm] {
                Element target = Element::unit(&p);
                target.scale(p.epsilon.at(l));
                return compare("hopf/antipode_left/" + nm, mul_antipode_left(p.delta.at(l)),
                               target);
            });
            tasks.push_back([&p, l, nm] {
                Element target = Element::unit(&p);
                target.scale(p.epsilon.at(l));
                return compare("hopf/antipode_right/" + nm, mul_antipode_right(p.delta.at(l)),
                               target);
            });
        }
    }
    for (Letter u = 0; u < p.letters.size(); ++u)
        for (Letter v = u + 1; v < p.letters.size(); ++v) {
            const std::string pair = p.info(u).name + "|" + p.info(v).name;
            tasks.push_back([&p, u, v, pair] {
                TensorElement du = p.delta.at(u), dv = p.delta.at(v);
                TensorElement lhs = normal_form(du.concat_mul(dv) - dv.concat_mul(du));
                return compare("hopf/delta_comm/" + pair, lhs, coproduct(p.bracket(u, v)));
            });
            tasks.push_back([&p, u, v, pair] {
                return compare_scalar("hopf/eps_comm/" + pair, counit(p.bracket(u, v)),
                                      Scalar::zero(p.mode));
            });
            if (p.has_antipode)
                tasks.push_back([&p, u, v, pair] {
                    const Element &gu = p.gamma.at(u), &gv = p.gamma.at(v);
                    Element lhs = normal_form(gv.concat_mul(gu) - gu.concat_mul(gv));
                    return compare("hopf/gamma_comm/" + pair, antipode(p.bracket(u, v)), lhs);
                });
        }
    for (size_t r = 0; r < p.pair_rules.size(); ++r) {
        const PairRule& rule = p.pair_rules[r];
        const std::string pair = p.info(rule.first).name + "|" + p.info(rule.second).name;
        tasks.push_back([&p, &rule, pair] {
            TensorElement lhs =
                normal_form(p.delta.at(rule.first).concat_mul(p.delta.at(rule.second)));
            return compare("hopf/delta_unit/" + pair, lhs, coproduct(rule.rhs));
        });
        tasks.push_back([&p, &rule, pair] {
            return compare_scalar("hopf/eps_unit/" + pair,
                                  p.epsilon.at(rule.first) * p.epsilon.at(rule.second),
                                  counit(rule.rhs));
        });
        if (p.has_antipode)
            tasks.push_back([&p, &rule, pair] {
                Element lhs =
                    normal_form(p.gamma.at(rule.second).concat_mul(p.gamma.at(rule.first)));
                return compare("hopf/gamma_unit/" + pair, lhs, antipode(rule.rhs));
            });
    }
    return tasks;
}

}  // namespace

Report check_hopf_axioms(const PresPtr& p, unsigned threads) {
    return run_tasks(*p, hopf_axiom_tasks(p), threads);
}

Report check_action(const PresPtr& pp, unsigned threads) {
    const Presentation& p = *pp;
    std::vector<Letter> xs, zs, js;
    for (Letter l = 0; l < p.letters.size(); ++l) {
        switch (p.info(l).sector) {
            case Sector::XSector: xs.push_back(l); break;
            case Sector::Exponential: zs.push_back(l); break;
            default: js.push_back(l);
        }
    }
    std::vector<Task> tasks;
    // (i) closure: [x, j] stays in the translation-exponential subalgebra
    for (Letter x : xs)
        for (Letter j : js)
            tasks.push_back([&p, x, j] {
                return element_in_x(p, "action/closure/" + p.info(x).name + "|" + p.info(j).name,
                                    p.bracket(x, j));
            });
    for (Letter z : zs)
        for (Letter j : js)
            tasks.push_back([&p, z, j] {
                return element_in_x(p, "action/closure/" + p.info(z).name + "|" + p.info(j).name,
                                    p.bracket(z, j));
            });
    // (ii) action law: (x<|j1)<|j2 - (x<|j2)<|j1 = x <| [j1,j2]
    for (Letter x : xs)
        for (size_t i = 0; i < js.size(); ++i)
            for (size_t k = i + 1; k < js.size(); ++k)
                tasks.push_back([&p, x, j1 = js[i], j2 = js[k]] {
                    Element ex = Element::letter(&p, x);
                    Element e1 = Element::letter(&p, j1), e2 = Element::letter(&p, j2);
                    Element lhs = commutator(commutator(ex, e1), e2) -
                                  commutator(commutator(ex, e2), e1);
                    Element rhs = commutator(ex, p.bracket(j1, j2));
                    return compare("action/law/" + p.info(x).name + "|" + p.info(j1).name + "|" +
                                       p.info(j2).name,
                                   normal_form(lhs), rhs);
                });
    // (iii) module-algebra law on products (rotation generators are primitive
    // in their own factor): (xy)<|j = (x<|j)y + x(y<|j)
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t k = i; k < xs.size(); ++k)
            for (Letter j : js)
                tasks.push_back([&p, x = xs[i], y = xs[k], j] {
                    Element ex = Element::letter(&p, x), ey = Element::letter(&p, y);
                    Element ej = Element::letter(&p, j);
                    Element lhs = commutator(mul(ex, ey), ej);
                    Element rhs = mul(commutator(ex, ej), ey) + mul(ex, commutator(ey, ej));
                    return compare("action/product/" + p.info(x).name + "|" + p.info(y).name +
                                       "|" + p.info(j).name,
                                   lhs, normal_form(rhs));
                });
    return run_tasks(p, std::move(tasks), threads);
}

TensorElement coaction_beta(const PresPtr& pp, Letter j) {
    const Presentation& p = *pp;
    const LetterInfo& li = p.info(j);
    if (li.id.fam != LetterFamily::Gen || is_x_side(li))
        throw input_error("coaction_beta: rotation-sector generator required");
    const int N = p.dim, a = p.split;
    const Element E = p.exp_element(-1);
    const Element g = Element::letter(&p, j);
    const int i = li.id.a, c = li.id.b;
    if (i == 0 && c < a) return normal_form(TensorElement::tensor(E, g));  // beta(J_0i)
    if (c <= N - 1) {
        TensorElement t(&p);
        t.add_term({}, {j}, Scalar::one(p.mode));  // beta(J_ij) = 1 (x) J_ij
        return t;
    }
    // boosts J_iN, i >= a
    TensorElement t = TensorElement::tensor(E, g);
    const Rat w = omega_prod(p, i, N);
    for (int s = 1; s <= a - 1 && w != 0; ++s) {
        TensorElement term =
            TensorElement::tensor(E.concat_mul(p.gen(gen_id(s, i))), p.gen(gen_id(0, s)));
        term.scale(Scalar::lambda_pow(p.mode, 1, -w));
        t += term;
    }
    for (int s = a; s <= i - 1 && w != 0; ++s) {
        TensorElement term = TensorElement::tensor(p.gen(gen_id(0, s)), p.gen(gen_id(s, i)));
        term.scale(Scalar::lambda_pow(p.mode, 1, w));
        t += term;
    }
    for (int s = i + 1; s <= N - 1; ++s) {
        Rat ws = omega_prod(p, s, N);
        if (ws == 0) continue;
        TensorElement term = TensorElement::tensor(p.gen(gen_id(0, s)), p.gen(gen_id(i, s)));
        term.scale(Scalar::lambda_pow(p.mode, 1, -ws));
        t += term;
    }
    return normal_form(t);
}

namespace {

// Multiplicative extension of beta to rotation-sector words.
TensorElement beta_word(const PresPtr& pp, const Word& w) {
    TensorElement out = TensorElement::unit(pp.get());
    for (Letter l : w) out = normal_form(out.concat_mul(coaction_beta(pp, l)));
    return out;
}

}  // namespace

Report check_coaction(const PresPtr& pp, unsigned threads) {
    const Presentation& p = *pp;
    std::vector<Letter> js;
    for (Letter l = 0; l < p.letters.size(); ++l)
        if (p.info(l).id.fam == LetterFamily::Gen && !is_x_side(p.info(l))) js.push_back(l);
    std::vector<Task> tasks;
    for (Letter j : js) {
        const std::string nm = p.info(j).name;
        tasks.push_back([&p, pp, j, nm] {
            TensorElement b = coaction_beta(pp, j);
            const std::string id = "coaction/x_slot/" + nm;
            for (const auto& [k, c] : b.terms())
                if (!word_in_x(p, k.first))
                    return CheckResult::fail(id, {to_json(b), Json::array(), to_json(b)});
            return CheckResult::ok(id);
        });
        tasks.push_back([&p, pp, j, nm] {
            return compare("coaction/counit/" + nm, counit_left(coaction_beta(pp, j)),
                           Element::letter(&p, j));
        });
        tasks.push_back([&p, pp, j, nm] {
            TensorElement b = coaction_beta(pp, j);
            Tensor3 lhs(&p), rhs(&p);
            for (const auto& [k, c] : b.terms()) {
                TensorElement inner = beta_word(pp, k.second);
                for (const auto& [ik, ic] : inner.terms())
                    lhs.add_term({k.first, ik.first, ik.second}, c * ic);
                TensorElement dx = coproduct(
                    Element::monomial(&p, k.first, Scalar::one(p.mode)));
                for (const auto& [dk, dc] : dx.terms())
                    rhs.add_term({dk.first, dk.second, k.second}, c * dc);
            }
            return compare("coaction/law/" + nm, normal_form(lhs), normal_form(rhs));
        });
        tasks.push_back([&p, pp, j, nm] {
            TensorElement rhs = coaction_beta(pp, j);
            rhs += TensorElement::tensor(Element::letter(&p, j), Element::unit(&p));
            return compare("coaction/reconstruction/" + nm, p.delta.at(j), normal_form(rhs));
        });
    }
    return run_tasks(p, std::move(tasks), threads);
}

Report check_bicrossproduct(const PresPtr& pp, unsigned threads) {
    const Presentation& p = *pp;
    std::vector<Letter> xside, js;
    for (Letter l = 0; l < p.letters.size(); ++l)
        (is_x_side(p.info(l)) ? xside : js).push_back(l);
    std::vector<Task> tasks;
    for (size_t i = 0; i < xside.size(); ++i)
        for (size_t k = i + 1; k < xside.size(); ++k)
            tasks.push_back([&p, u = xside[i], v = xside[k]] {
                std::string id =
                    "bicross/x_abelian/" + p.info(u).name + "|" + p.info(v).name;
                Element b = p.bracket(u, v);
                if (b.is_zero()) return CheckResult::ok(id);
                return CheckResult::fail(id, {to_json(b), Json::array(), to_json(b)});
            });
    for (Letter x : xside) {
        tasks.push_back([&p, x] {
            const std::string id = "bicross/x_delta_closed/" + p.info(x).name;
            for (const auto& [k, c] : p.delta.at(x).terms())
                if (!word_in_x(p, k.first) || !word_in_x(p, k.second))
                    return CheckResult::fail(
                        id, {to_json(p.delta.at(x)), Json::array(), to_json(p.delta.at(x))});
            return CheckResult::ok(id);
        });
        if (p.has_antipode)
            tasks.push_back([&p, x] {
                return element_in_x(p, "bicross/x_gamma_closed/" + p.info(x).name,
                                    p.gamma.at(x));
            });
    }
    for (size_t i = 0; i < js.size(); ++i)
        for (size_t k = i + 1; k < js.size(); ++k)
            tasks.push_back([&p, u = js[i], v = js[k]] {
                const std::string id =
                    "bicross/j_closed/" + p.info(u).name + "|" + p.info(v).name;
                Element b = p.bracket(u, v);
                for (const auto& [w, c] : b.terms())
                    if (!word_in_j(p, w))
                        return CheckResult::fail(id, {to_json(b), Json::array(), to_json(b)});
                // the two triangles commute with each other
                if (p.info(u).sector != p.info(v).sector && !b.is_zero())
                    return CheckResult::fail(id + "|mixing",
                                             {to_json(b), Json::array(), to_json(b)});
                return CheckResult::ok(id);
            });
    Report rep = run_tasks(p, std::move(tasks), threads);
    rep.merge(check_action(pp, threads));
    rep.merge(check_coaction(pp, threads));
    rep.merge(check_hopf_axioms(pp, threads));
    rep.sort_checks();
    return rep;
}

namespace {

// Antipode-axiom-only suite, used for the variant experiments.
Report antipode_suite(const PresPtr& pp, const std::string& prefix, unsigned threads) {
    const Presentation& p = *pp;
    std::vector<Task> tasks;
    for (Letter l = 0; l < p.letters.size(); ++l) {
        const std::string nm = p.info(l).name;
        tasks.push_back([&p, l, nm, prefix] {
            Element target = Element::unit(&p);
            target.scale(p.epsilon.at(l));
            return compare(prefix + "/antipode_left/" + nm,
                           mul_antipode_left(p.delta.at(l)), target);
        });
        tasks.push_back([&p, l, nm, prefix] {
            Element target = Element::unit(&p);
            target.scale(p.epsilon.at(l));
            return compare(prefix + "/antipode_right/" + nm,
                           mul_antipode_right(p.delta.at(l)), target);
        });
    }
    for (Letter u = 0; u < p.letters.size(); ++u)
        for (Letter v = u + 1; v < p.letters.size(); ++v)
            tasks.push_back([&p, u, v, prefix] {
                const Element &gu = p.gamma.at(u), &gv = p.gamma.at(v);
                Element lhs = normal_form(gv.concat_mul(gu) - gu.concat_mul(gv));
                return compare(prefix + "/gamma_comm/" + p.info(u).name + "|" + p.info(v).name,
                               antipode(p.bracket(u, v)), lhs);
            });
    return run_tasks(p, std::move(tasks), threads);
}

}  // namespace

Report resolve_variant(int N, const std::vector<Rat>& omega, int split, int mode,
                       unsigned threads) {
    Report rep;
    struct Combo {
        const char* family;
        bool x_letters;
        bool omega_factor;
        const char* label;
    };
    const Combo combos[] = {
        {"J", false, true, "variant/J"},
        {"X", true, true, "variant/X"},
        {"J", false, false, "variant/J/no_omega_factor"},
        {"X", true, false, "variant/X/no_omega_factor"},
    };
    for (const Combo& c : combos) {
        BuildOptions opts;
        opts.antipode_variant = {c.x_letters, c.omega_factor};
        opts.certify_exp_rules = false;
        PresPtr p = build_presentation(N, omega, BasisKind::New, split, mode, opts);
        if (rep.presentation.is_null()) rep.presentation = presentation_descriptor(*p);
        Report sub = antipode_suite(p, c.label, threads);
        rep.add(sub.all_pass() ? CheckResult::ok(c.label)
                               : CheckResult::fail(c.label, {Json(sub.summary()), Json(), Json()}));
        for (auto& chk : sub.checks)
            if (!chk.pass) rep.add(std::move(chk));
    }
    {
        PresPtr old = build_presentation(N, omega, BasisKind::Old, split, mode,
                                         {{}, AntipodeVariant{}, false});
        Report sub = antipode_suite(old, "variant/old_basis", threads);
        rep.add(sub.all_pass()
                    ? CheckResult::ok("variant/old_basis")
                    : CheckResult::fail("variant/old_basis", {Json(sub.summary()), Json(), Json()}));
    }
    rep.sort_checks();
    return rep;
}

std::vector<MutationOutcome> run_mutation_harness(int N, const std::vector<Rat>& omega, int mode,
                                                  const std::vector<Mutation>& mutations,
                                                  unsigned threads) {
    std::vector<MutationOutcome> out;
    for (const auto& m : mutations) {
        BuildOptions opts;
        opts.mutations = {m};
        opts.certify_exp_rules = false;
        PresPtr p = build_presentation(N, omega, BasisKind::Old, 1, mode, opts);
        Report rep = check_confluence(p, threads);
        rep.merge(check_hopf_axioms(p, threads));
        std::string desc = "comm(" + p->info(p->rank(m.g)).name + "," +
                           p->info(p->rank(m.h)).name + ") term " +
                           std::to_string(m.term_index) + " *= " + rat_to_string(m.factor);
        out.push_back({desc, rep.fail_count() > 0, rep.fail_count()});
    }
    return out;
}

}  // namespace ckalg
