#include "ckalg/hw.hpp"

#include "ckalg/hopf.hpp"
#include "ckalg/parallel.hpp"
#include "ckalg/rewrite.hpp"
#include "ckalg/serialize.hpp"

#include <functional>
#include <sstream>

namespace ckalg {

namespace {

std::string num(int i) { return std::to_string(i); }

void push_letter(Presentation& p, const LetterId& id, const std::string& name, int weight,
                 Sector sec) {
    Letter rank = static_cast<Letter>(p.letters.size());
    p.letters.push_back({id, name, weight, sec, false});
    p.rank_of_id[id] = rank;
    p.rank_of_name[name] = rank;
}

// [g_u, g_v] of the deformed HW algebra; deformed=false gives the classical
// algebra with [X_i, Y_j] = 0.
Element hw_bracket(const Presentation* p, const LetterId& u, const LetterId& v, bool deformed) {
    const int N = p->dim;
    auto is_xi = [&](const LetterId& g) { return g.a == 0 && g.b == N; };
    auto is_y = [&](const LetterId& g) { return g.a >= 1 && g.b == N; };
    auto is_x = [&](const LetterId& g) { return g.a == 0 && g.b < N; };
    if (is_xi(u) || is_xi(v)) return Element::zero(p);  // Xi central
    if (is_y(u) && is_y(v)) return Element::zero(p);
    if (is_x(u) && is_x(v)) return Element::zero(p);
    if (is_x(u) && is_y(v)) {  // [X_i, Y_j] = -delta_ij (1-Z^2)/(2 lambda)
        if (!deformed || u.b != v.a) return Element::zero(p);
        return -exp_defect_element(p);
    }
    if (is_y(u) && is_x(v)) return -hw_bracket(p, v, u, deformed);
    auto rot = [&](const LetterId& g) { return g.a >= 1 && g.b < N; };
    if (rot(u) && rot(v)) {
        // classical rotation triple [J_ij, J_ik] = omega_ij J_jk etc.
        Element e(p);
        const int pr = u.a, pc = u.b, qr = v.a, qc = v.b;
        auto term = [&](int r, int c, const Rat& coef) {
            if (coef != 0) e.add_term({p->rank(gen_id(r, c))}, p->scalar(coef));
        };
        if (pr == qr && pc != qc) {
            if (pc < qc)
                term(pc, qc, omega_prod(*p, pr, pc));
            else
                term(qc, pc, -omega_prod(*p, pr, qc));
        } else if (pc == qc && pr != qr) {
            if (pr < qr)
                term(pr, qr, omega_prod(*p, qr, pc));
            else
                term(qr, pr, -omega_prod(*p, pr, pc));
        } else if (pc == qr) {
            term(pr, qc, Rat(-1));
        } else if (pr == qc) {
            term(qr, pc, Rat(1));
        }
        return e;
    }
    if (rot(v)) return -hw_bracket(p, v, u, deformed);
    if (rot(u) && is_x(v)) {  // [J_ij, X_k] = delta_ik X_j - delta_jk omega_ij X_i
        Element e(p);
        if (u.a == v.b) e.add_term({p->rank(gen_id(0, u.b))}, p->scalar_one());
        if (u.b == v.b) e.add_term({p->rank(gen_id(0, u.a))}, p->scalar(-omega_prod(*p, u.a, u.b)));
        return e;
    }
    if (rot(u) && is_y(v)) {  // [J_ij, Y_k] = delta_ik omega_ij Y_j - delta_jk Y_i
        Element e(p);
        if (u.a == v.a) e.add_term({p->rank(gen_id(u.b, N))}, p->scalar(omega_prod(*p, u.a, u.b)));
        if (u.b == v.a) e.add_term({p->rank(gen_id(u.a, N))}, p->scalar(Rat(-1)));
        return e;
    }
    return Element::zero(p);
}

// Shared scaffold for the deformed, classical and cocycle-reconstructed HW
// presentations: same alphabet, bracket source differs.
PresPtr build_hw_like(int N, const std::vector<Rat>& omega, int mode,
                      const std::function<Element(const Presentation*, const LetterId&,
                                                  const LetterId&)>& bracket,
                      bool primitive_hopf) {
    auto p = std::make_shared<Presentation>();
    p->kind = PresentationKind::HeisenbergWeyl;
    p->dim = N;
    p->omega = omega;
    p->basis = BasisKind::New;
    p->split = N;
    p->mode = mode;
    const int jw = mode == kExact ? 3 : mode + 3;
    push_letter(*p, gen_id(0, N), "Xi", 1, Sector::XSector);
    for (int i = 1; i <= N - 1; ++i)
        push_letter(*p, gen_id(i, N), "Y" + num(i), 1, Sector::XSector);
    if (mode == kExact) {
        push_letter(*p, exp_id(), "Z", 1, Sector::Exponential);
        push_letter(*p, exp_inv_id(), "Z^-1", 1, Sector::Exponential);
    }
    for (int i = 1; i <= N - 1; ++i)
        push_letter(*p, gen_id(0, i), "X" + num(i), jw, Sector::JRight);
    for (int i = 1; i <= N - 2; ++i)
        for (int j = i + 1; j <= N - 1; ++j)
            push_letter(*p, gen_id(i, j), "J(" + num(i) + "," + num(j) + ")", jw, Sector::JRight);

    const size_t n = p->letters.size();
    for (size_t u = 0; u < n; ++u)
        for (size_t v = u + 1; v < n; ++v) {
            const LetterId gu = p->letters[u].id, gv = p->letters[v].id;
            Element e(p.get());
            if (gu.fam == LetterFamily::Gen && gv.fam == LetterFamily::Gen)
                e = bracket(p.get(), gu, gv);
            p->comm[{Letter(u), Letter(v)}] = std::move(e);
        }
    if (mode == kExact) {
        Letter z = p->rank(exp_id()), zi = p->rank(exp_inv_id());
        p->pair_rules.push_back({z, zi, Element::unit(p.get()), false});
        p->pair_rules.push_back({zi, z, Element::unit(p.get()), false});
    }

    const Element one = Element::unit(p.get());
    const Element E = p->exp_element(-1), Einv = p->exp_element(+1);
    for (Letter l = 0; l < n; ++l) {
        const LetterId id = p->letters[l].id;
        const Element g = Element::letter(p.get(), l);
        if (id.fam != LetterFamily::Gen) {
            p->delta[l] = TensorElement::tensor(g, g);
            p->epsilon[l] = p->scalar_one();
            p->gamma[l] = id.fam == LetterFamily::Exp ? Element::letter(p.get(), p->rank(exp_inv_id()))
                                                      : Element::letter(p.get(), p->rank(exp_id()));
            continue;
        }
        p->epsilon[l] = Scalar::zero(mode);
        const bool coordinate = id.b == N ? id.a >= 1 : id.a == 0;  // X_i or Y_i
        if (coordinate && !primitive_hopf) {
            p->delta[l] = TensorElement::tensor(E, g) + TensorElement::tensor(g, one);
            p->gamma[l] = -Einv.concat_mul(g);
        } else {
            p->delta[l] = TensorElement::tensor(one, g) + TensorElement::tensor(g, one);
            p->gamma[l] = -g;
        }
    }
    p->has_antipode = true;
    seal_presentation(*p);
    return p;
}

// The antisymmetric two-cocycle: xi(X_i, Y_j) = -(delta_ij/2)(1-Z^2)/(2 lambda).
Element hw_cocycle(const Presentation* p, const LetterId& u, const LetterId& v) {
    const int N = p->dim;
    auto is_y = [&](const LetterId& g) { return g.a >= 1 && g.b == N; };
    auto is_x = [&](const LetterId& g) { return g.a == 0 && g.b < N; };
    if (is_x(u) && is_y(v) && u.b == v.a) {
        Element e = exp_defect_element(p);
        e.scale(Rat(-1, 2));
        return e;
    }
    if (is_y(u) && is_x(v)) return -hw_cocycle(p, v, u);
    return Element::zero(p);
}

}  // namespace

PresPtr build_hw(int N, std::vector<Rat> omega_rot, int mode) {
    if (N < 2) throw input_error("build_hw: N must be at least 2");
    if (omega_rot.empty()) omega_rot.assign(size_t(N) - 2, Rat(1));
    if (static_cast<int>(omega_rot.size()) != N - 2)
        throw input_error("build_hw: omega_rot must have N-2 entries");
    std::vector<Rat> omega = omega_rot;
    omega.push_back(Rat(0));  // omega_N = 0

    PresPtr hw = build_hw_like(N, omega, mode,
                               [](const Presentation* p, const LetterId& u, const LetterId& v) {
                                   return hw_bracket(p, u, v, true);
                               },
                               false);

    // the renamed a = N CK presentation must agree rank for rank
    PresPtr ck = build_presentation(N, omega, BasisKind::New, N, mode,
                                    {{}, AntipodeVariant{}, false});
    if (ck->alphabet_size() != hw->alphabet_size())
        throw verification_error("build_hw: alphabet mismatch against CK a=N");
    for (Letter l = 0; l < hw->alphabet_size(); ++l)
        if (ck->info(l).id != hw->info(l).id)
            throw verification_error("build_hw: letter layout mismatch against CK a=N");
    for (const auto& [k, e] : hw->comm)
        if (!structurally_equal(e, ck->comm.at(k)))
            throw verification_error("build_hw: bracket mismatch against CK a=N at pair " +
                                     hw->info(k.first).name + "," + hw->info(k.second).name);
    for (Letter l = 0; l < hw->alphabet_size(); ++l) {
        if (!structurally_equal(hw->delta.at(l), ck->delta.at(l)))
            throw verification_error("build_hw: coproduct mismatch against CK a=N at " +
                                     hw->info(l).name);
        if (!structurally_equal(hw->gamma.at(l), ck->gamma.at(l)))
            throw verification_error("build_hw: antipode mismatch against CK a=N at " +
                                     hw->info(l).name);
        if (hw->epsilon.at(l) != ck->epsilon.at(l))
            throw verification_error("build_hw: counit mismatch against CK a=N at " +
                                     hw->info(l).name);
    }
    return hw;
}

Report check_cocycle_reconstruction(const PresPtr& hw, unsigned threads) {
    const Presentation& p = *hw;
    if (p.kind != PresentationKind::HeisenbergWeyl)
        throw input_error("check_cocycle_reconstruction: HW presentation required");
    const int N = p.dim;

    // reconstructed product: classical bracket plus xi(u,v) - xi(v,u)
    PresPtr rec = build_hw_like(N, p.omega, p.mode,
                                [](const Presentation* q, const LetterId& u, const LetterId& v) {
                                    Element e = hw_bracket(q, u, v, false);
                                    e += hw_cocycle(q, u, v);
                                    e -= hw_cocycle(q, v, u);
                                    return e;
                                },
                                false);

    Report rep;
    rep.presentation = presentation_descriptor(p);
    for (const auto& [k, e] : p.comm) {
        const std::string id =
            "hw_cocycle/table/" + p.info(k.first).name + "|" + p.info(k.second).name;
        const Element& r = rec->comm.at(k);
        if (structurally_equal(e, r))
            rep.add(CheckResult::ok(id));
        else
            rep.add(CheckResult::fail(id, {to_json(r), to_json(e), Json()}));
    }
    // 2 xi(X_i, Y_i) = [X_i, Y_i]
    for (int i = 1; i <= N - 1; ++i) {
        Element two_xi = hw_cocycle(&p, gen_id(0, i), gen_id(i, N));
        two_xi.scale(Rat(2));
        Element br = p.bracket(p.rank(gen_id(0, i)), p.rank(gen_id(i, N)));
        Element diff = normal_form(two_xi - br);
        const std::string id = "hw_cocycle/two_xi/X" + num(i) + "|Y" + num(i);
        if (diff.is_zero())
            rep.add(CheckResult::ok(id));
        else
            rep.add(CheckResult::fail(id, {to_json(two_xi), to_json(br), to_json(diff)}));
    }
    // coproduct reconstruction Delta(h) = h (x) 1 + beta(h) with the
    // exponential coaction on the coordinates (the Y_i right-slot reading)
    const Element E = p.exp_element(-1), one = Element::unit(&p);
    for (Letter l = 0; l < p.alphabet_size(); ++l) {
        const LetterId id = p.info(l).id;
        if (id.fam != LetterFamily::Gen) continue;
        const Element g = Element::letter(&p, l);
        const bool coordinate = id.b == N ? id.a >= 1 : id.a == 0;
        TensorElement beta = coordinate && !(id.a == 0 && id.b == N)
                                 ? TensorElement::tensor(E, g)
                                 : TensorElement::tensor(one, g);
        TensorElement rhs = normal_form(beta + TensorElement::tensor(g, one));
        TensorElement diff = p.delta.at(l) - rhs;
        const std::string cid = "hw_cocycle/coproduct/" + p.info(l).name;
        if (diff.is_zero())
            rep.add(CheckResult::ok(cid));
        else
            rep.add(CheckResult::fail(cid, {to_json(p.delta.at(l)), to_json(rhs), to_json(diff)}));
    }
    // central extension means trivial action
    Letter xi = p.rank(gen_id(0, N));
    for (Letter l = 0; l < p.alphabet_size(); ++l) {
        if (l == xi) continue;
        Element b = p.bracket(l, xi);
        const std::string cid = "hw_cocycle/trivial_action/" + p.info(l).name;
        if (b.is_zero())
            rep.add(CheckResult::ok(cid));
        else
            rep.add(CheckResult::fail(cid, {to_json(b), Json::array(), to_json(b)}));
    }
    rep.merge(check_confluence(rec, threads));
    rep.sort_checks();
    return rep;
}

PresPtr build_dual_hw(int n, int mode) {
    if (n < 1) throw input_error("build_dual_hw: n must be at least 1");
    auto p = std::make_shared<Presentation>();
    p->kind = PresentationKind::DualHeisenbergWeyl;
    p->dim = n;
    p->basis = BasisKind::New;
    p->split = 1;
    p->mode = mode;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            push_letter(*p, {LetterFamily::R, int16_t(i), int16_t(j)},
                        "R(" + num(i) + "," + num(j) + ")", 1, Sector::JRight);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            push_letter(*p, {LetterFamily::Rinv, int16_t(i), int16_t(j)},
                        "Rinv(" + num(i) + "," + num(j) + ")", 1, Sector::JRight);
    for (int i = 1; i <= n; ++i)
        push_letter(*p, {LetterFamily::DualX, int16_t(i), 0}, "x" + num(i), 1, Sector::XSector);
    for (int i = 1; i <= n; ++i)
        push_letter(*p, {LetterFamily::DualY, int16_t(i), 0}, "y" + num(i), 1, Sector::XSector);
    push_letter(*p, {LetterFamily::Chi, 0, 0}, "chi", 1, Sector::XSector);

    auto R = [&](int i, int j) { return p->rank({LetterFamily::R, int16_t(i), int16_t(j)}); };
    auto S = [&](int i, int j) { return p->rank({LetterFamily::Rinv, int16_t(i), int16_t(j)}); };
    auto X = [&](int i) { return p->rank({LetterFamily::DualX, int16_t(i), 0}); };
    auto Y = [&](int i) { return p->rank({LetterFamily::DualY, int16_t(i), 0}); };
    const Letter chi = p->rank({LetterFamily::Chi, 0, 0});

    const size_t sz = p->letters.size();
    for (size_t u = 0; u < sz; ++u)
        for (size_t v = u + 1; v < sz; ++v) {
            Element e(p.get());
            // everything commutes except [chi, x_i] = -lambda x_i and same for y
            if (v == chi) {
                const LetterId id = p->letters[u].id;
                if (id.fam == LetterFamily::DualX || id.fam == LetterFamily::DualY)
                    e.add_term({Letter(u)}, Scalar::lambda_pow(mode, 1, Rat(1)));
            }
            p->comm[{Letter(u), Letter(v)}] = std::move(e);
        }
    // matrix inverse relations, eliminated through the k = n term
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Element rhs1(p.get()), rhs2(p.get());
            if (i == j) {
                rhs1 += Element::unit(p.get());
                rhs2 += Element::unit(p.get());
            }
            for (int k = 1; k <= n - 1; ++k) {
                rhs1.add_term({R(i, k), S(k, j)}, p->scalar(Rat(-1)));
                rhs2.add_term({S(i, k), R(k, j)}, p->scalar(Rat(-1)));
            }
            p->pair_rules.push_back({R(i, n), S(n, j), std::move(rhs1), true});
            p->pair_rules.push_back({S(i, n), R(n, j), std::move(rhs2), true});
        }

    const Element one = Element::unit(p.get());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            TensorElement dr(p.get()), ds(p.get());
            for (int k = 1; k <= n; ++k) {
                dr.add_term({R(i, k)}, {R(k, j)}, p->scalar_one());
                ds.add_term({S(k, j)}, {S(i, k)}, p->scalar_one());
            }
            p->delta[R(i, j)] = std::move(dr);
            p->delta[S(i, j)] = std::move(ds);
            p->epsilon[R(i, j)] = p->scalar(i == j ? Rat(1) : Rat(0));
            p->epsilon[S(i, j)] = p->scalar(i == j ? Rat(1) : Rat(0));
        }
    for (int i = 1; i <= n; ++i) {
        TensorElement dx(p.get()), dy(p.get());
        dx.add_term({}, {X(i)}, p->scalar_one());
        dy.add_term({}, {Y(i)}, p->scalar_one());
        for (int k = 1; k <= n; ++k) {
            dx.add_term({X(k)}, {R(k, i)}, p->scalar_one());
            dy.add_term({Y(k)}, {S(i, k)}, p->scalar_one());
        }
        p->delta[X(i)] = std::move(dx);
        p->delta[Y(i)] = std::move(dy);
        p->epsilon[X(i)] = Scalar::zero(mode);
        p->epsilon[Y(i)] = Scalar::zero(mode);
    }
    {
        TensorElement dchi(p.get());
        dchi.add_term({}, {chi}, p->scalar_one());
        dchi.add_term({chi}, {}, p->scalar_one());
        // two-cococycle psi(chi) = 1/2 (y_i (x) Rinv_ji x_j - x_i (x) R_ij y_j)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                dchi.add_term({Y(i)}, {S(j, i), X(j)}, p->scalar(Rat(1, 2)));
                dchi.add_term({X(i)}, {R(i, j), Y(j)}, p->scalar(Rat(-1, 2)));
            }
        p->delta[chi] = std::move(dchi);
        p->epsilon[chi] = Scalar::zero(mode);
    }
    p->has_antipode = false;
    seal_presentation(*p);
    return p;
}

Report check_dual_bialgebra(const PresPtr& pp, unsigned threads) {
    const Presentation& p = *pp;
    if (p.kind != PresentationKind::DualHeisenbergWeyl)
        throw input_error("check_dual_bialgebra: dual presentation required");
    std::vector<std::function<CheckResult()>> tasks;
    for (Letter l = 0; l < p.letters.size(); ++l) {
        const std::string nm = p.info(l).name;
        tasks.push_back([&p, l, nm] {
            const TensorElement& d = p.delta.at(l);
            Tensor3 lhs = delta_left(d), rhs = delta_right(d);
            Tensor3 diff = lhs - rhs;
            if (diff.is_zero()) return CheckResult::ok("dual/coassoc/" + nm);
            return CheckResult::fail("dual/coassoc/" + nm,
                                     {to_json(lhs), to_json(rhs), to_json(diff)});
        });
        tasks.push_back([&p, l, nm] {
            Element lhs = counit_left(p.delta.at(l)) - Element::letter(&p, l);
            if (lhs.is_zero()) return CheckResult::ok("dual/counit_left/" + nm);
            return CheckResult::fail("dual/counit_left/" + nm,
                                     {to_json(counit_left(p.delta.at(l))),
                                      to_json(Element::letter(&p, l)), to_json(lhs)});
        });
        tasks.push_back([&p, l, nm] {
            Element lhs = counit_right(p.delta.at(l)) - Element::letter(&p, l);
            if (lhs.is_zero()) return CheckResult::ok("dual/counit_right/" + nm);
            return CheckResult::fail("dual/counit_right/" + nm,
                                     {to_json(counit_right(p.delta.at(l))),
                                      to_json(Element::letter(&p, l)), to_json(lhs)});
        });
    }
    for (Letter u = 0; u < p.letters.size(); ++u)
        for (Letter v = u + 1; v < p.letters.size(); ++v) {
            const std::string pair = p.info(u).name + "|" + p.info(v).name;
            tasks.push_back([&p, u, v, pair] {
                TensorElement du = p.delta.at(u), dv = p.delta.at(v);
                TensorElement lhs = normal_form(du.concat_mul(dv) - dv.concat_mul(du));
                TensorElement rhs = coproduct(p.bracket(u, v));
                TensorElement diff = lhs - rhs;
                if (diff.is_zero()) return CheckResult::ok("dual/delta_comm/" + pair);
                return CheckResult::fail("dual/delta_comm/" + pair,
                                         {to_json(lhs), to_json(rhs), to_json(diff)});
            });
            // commutativity away from chi
            if (p.info(v).id.fam != LetterFamily::Chi)
                tasks.push_back([&p, u, v, pair] {
                    Element b = p.bracket(u, v);
                    if (b.is_zero()) return CheckResult::ok("dual/commutative/" + pair);
                    return CheckResult::fail("dual/commutative/" + pair,
                                             {to_json(b), Json::array(), to_json(b)});
                });
        }
    for (size_t r = 0; r < p.pair_rules.size(); ++r) {
        const PairRule& rule = p.pair_rules[r];
        const std::string pair = p.info(rule.first).name + "|" + p.info(rule.second).name;
        tasks.push_back([&p, &rule, pair] {
            TensorElement lhs =
                normal_form(p.delta.at(rule.first).concat_mul(p.delta.at(rule.second)));
            TensorElement rhs = coproduct(rule.rhs);
            TensorElement diff = lhs - rhs;
            if (diff.is_zero()) return CheckResult::ok("dual/delta_inverse_rel/" + pair);
            return CheckResult::fail("dual/delta_inverse_rel/" + pair,
                                     {to_json(lhs), to_json(rhs), to_json(diff)});
        });
        tasks.push_back([&p, &rule, pair] {
            Scalar lhs = p.epsilon.at(rule.first) * p.epsilon.at(rule.second);
            Scalar rhs = counit(rule.rhs);
            Scalar diff = lhs - rhs;
            if (diff.is_zero()) return CheckResult::ok("dual/eps_inverse_rel/" + pair);
            return CheckResult::fail("dual/eps_inverse_rel/" + pair,
                                     {to_json(lhs), to_json(rhs), to_json(diff)});
        });
    }
    // full matrix-inverse sums reduce to delta
    const int n = p.dim;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            tasks.push_back([&p, i, j, n] {
                Element sum1(&p), sum2(&p);
                for (int k = 1; k <= n; ++k) {
                    sum1.add_term({p.rank({LetterFamily::R, int16_t(i), int16_t(k)}),
                                   p.rank({LetterFamily::Rinv, int16_t(k), int16_t(j)})},
                                  p.scalar_one());
                    sum2.add_term({p.rank({LetterFamily::Rinv, int16_t(i), int16_t(k)}),
                                   p.rank({LetterFamily::R, int16_t(k), int16_t(j)})},
                                  p.scalar_one());
                }
                Element target = i == j ? Element::unit(&p) : Element::zero(&p);
                Element d1 = normal_form(sum1) - target, d2 = normal_form(sum2) - target;
                const std::string id =
                    "dual/inverse_sum/" + num(i) + "|" + num(j);
                if (d1.is_zero() && d2.is_zero()) return CheckResult::ok(id);
                return CheckResult::fail(id, {to_json(normal_form(sum1)),
                                              to_json(normal_form(sum2)),
                                              to_json(d1.is_zero() ? d2 : d1)});
            });
    std::vector<CheckResult> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](size_t i) { results[i] = tasks[i](); });
    Report rep;
    rep.presentation = presentation_descriptor(p);
    for (auto& r : results) rep.add(std::move(r));
    rep.sort_checks();
    return rep;
}

Report check_cocoboundary(const PresPtr& pp) {
    const Presentation& p = *pp;
    if (p.kind != PresentationKind::DualHeisenbergWeyl)
        throw input_error("check_cocoboundary: dual presentation required");
    const int n = p.dim;
    const Letter chi = p.rank({LetterFamily::Chi, 0, 0});
    Report rep;
    rep.presentation = presentation_descriptor(p);
    int passing = 0;
    for (int sgn : {+1, -1}) {
        Element chi_prime = Element::letter(&p, chi);
        for (int i = 1; i <= n; ++i) {
            Word w{p.rank({LetterFamily::DualX, int16_t(i), 0}),
                   p.rank({LetterFamily::DualY, int16_t(i), 0})};
            chi_prime.add_term(w, p.scalar(Rat(sgn, 2)));
        }
        chi_prime = normal_form(chi_prime);
        TensorElement lhs = coproduct(chi_prime);
        TensorElement rhs = TensorElement::tensor(Element::unit(&p), chi_prime) +
                            TensorElement::tensor(chi_prime, Element::unit(&p));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                rhs.add_term({p.rank({LetterFamily::DualY, int16_t(i), 0})},
                             {p.rank({LetterFamily::Rinv, int16_t(j), int16_t(i)}),
                              p.rank({LetterFamily::DualX, int16_t(j), 0})},
                             p.scalar_one());
        rhs = normal_form(rhs);
        TensorElement diff = lhs - rhs;
        const std::string id = std::string("cocoboundary/sign_") + (sgn > 0 ? "+1/2" : "-1/2");
        if (diff.is_zero()) {
            rep.add(CheckResult::ok(id));
            ++passing;
        } else {
            rep.add(CheckResult::fail(id, {to_json(lhs), to_json(rhs), to_json(diff)}));
        }
    }
    if (passing == 1)
        rep.add(CheckResult::ok("cocoboundary/unique_sign"));
    else
        rep.add(CheckResult::fail("cocoboundary/unique_sign",
                                  {Json(passing), Json(1), Json("expected exactly one sign")}));
    rep.sort_checks();
    return rep;
}

}  // namespace ckalg
