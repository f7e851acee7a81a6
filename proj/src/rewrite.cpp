#include "ckalg/rewrite.hpp"

#include "ckalg/parallel.hpp"
#include "ckalg/report.hpp"
#include "ckalg/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

namespace ckalg {

namespace {

std::string pack(const Word& w) {
    return std::string(reinterpret_cast<const char*>(w.data()), w.size() * sizeof(Letter));
}

// Pair rules are matched on exact (first, second) letter order; at-distance
// rules additionally fire on any positions p < q (their letters are central,
// so sliding them together is free).
std::optional<Redex> first_redex(const Presentation& p, const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        for (size_t r = 0; r < p.pair_rules.size(); ++r)
            if (p.pair_rules[r].first == w[i] && p.pair_rules[r].second == w[i + 1])
                return Redex{Redex::Kind::Pair, i, i + 1, r};
        if (w[i] > w[i + 1]) return Redex{Redex::Kind::Reorder, i, i + 1, 0};
    }
    for (size_t i = 0; i + 1 < w.size(); ++i)
        for (size_t j = i + 2; j < w.size(); ++j)
            for (size_t r = 0; r < p.pair_rules.size(); ++r) {
                const PairRule& pr = p.pair_rules[r];
                if (!pr.at_distance) continue;
                if ((pr.first == w[i] && pr.second == w[j]) ||
                    (pr.first == w[j] && pr.second == w[i]))
                    return Redex{Redex::Kind::Pair, i, j, r};
            }
    return std::nullopt;
}

class Rewriter {
public:
    explicit Rewriter(const Presentation& p) : p_(p) {}

    Element nf_word(const Word& w, int depth = 0) {
        if (depth > 4000) throw verification_error("rewriting recursion limit exceeded");
        if (w.size() < 2) return Element::monomial(&p_, w, Scalar::one(p_.mode));
        const std::string key = pack(w);
        {
            std::shared_lock lock(p_.cache->mutex);
            auto it = p_.cache->memo.find(key);
            if (it != p_.cache->memo.end()) return it->second;
        }
        Element out(&p_);
        auto rd = first_redex(p_, w);
        if (!rd) {
            out = Element::monomial(&p_, w, Scalar::one(p_.mode));
        } else {
            Element applied = apply_redex(p_, w, *rd);
            for (const auto& [tw, tc] : applied.terms()) {
                Element sub = nf_word(tw, depth + 1);
                sub.scale(tc);
                out += sub;
            }
        }
        std::unique_lock lock(p_.cache->mutex);
        p_.cache->memo.emplace(key, out);
        return out;
    }

private:
    const Presentation& p_;
};

}  // namespace

std::vector<Redex> find_redexes(const Presentation& p, const Word& w) {
    std::vector<Redex> out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        for (size_t r = 0; r < p.pair_rules.size(); ++r)
            if (p.pair_rules[r].first == w[i] && p.pair_rules[r].second == w[i + 1])
                out.push_back({Redex::Kind::Pair, i, i + 1, r});
        if (w[i] > w[i + 1]) out.push_back({Redex::Kind::Reorder, i, i + 1, 0});
    }
    for (size_t i = 0; i + 1 < w.size(); ++i)
        for (size_t j = i + 2; j < w.size(); ++j)
            for (size_t r = 0; r < p.pair_rules.size(); ++r) {
                const PairRule& pr = p.pair_rules[r];
                if (!pr.at_distance) continue;
                if ((pr.first == w[i] && pr.second == w[j]) ||
                    (pr.first == w[j] && pr.second == w[i]))
                    out.push_back({Redex::Kind::Pair, i, j, r});
            }
    return out;
}

Element apply_redex(const Presentation& p, const Word& w, const Redex& r) {
    Element out(&p);
    if (r.kind == Redex::Kind::Reorder) {
        Word swapped = w;
        std::swap(swapped[r.pos1], swapped[r.pos2]);
        out.add_term(swapped, Scalar::one(p.mode));
        Element br = p.bracket(w[r.pos1], w[r.pos2]);
        for (const auto& [bw, bc] : br.terms()) {
            Word nw(w.begin(), w.begin() + r.pos1);
            nw.insert(nw.end(), bw.begin(), bw.end());
            nw.insert(nw.end(), w.begin() + r.pos2 + 1, w.end());
            out.add_term(nw, bc);
        }
        return out;
    }
    const PairRule& rule = p.pair_rules[r.rule_index];
    for (const auto& [bw, bc] : rule.rhs.terms()) {
        Word nw(w.begin(), w.begin() + r.pos1);
        nw.insert(nw.end(), bw.begin(), bw.end());
        nw.insert(nw.end(), w.begin() + r.pos1 + 1, w.begin() + r.pos2);
        nw.insert(nw.end(), w.begin() + r.pos2 + 1, w.end());
        out.add_term(nw, bc);
    }
    return out;
}

static int inversion_count(const Word& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

bool measure_less(const Presentation& p, const Word& a, const Word& b) {
    int wa = p.word_weight(a), wb = p.word_weight(b);
    if (wa != wb) return wa < wb;
    Word sa = a, sb = b;
    std::sort(sa.rbegin(), sa.rend());
    std::sort(sb.rbegin(), sb.rend());
    if (sa != sb) return sa < sb;
    int ia = inversion_count(a), ib = inversion_count(b);
    if (ia != ib) return ia < ib;
    return a < b;
}

Element normal_form(const Element& e) {
    if (e.is_zero()) return e;
    Rewriter rw(*e.pres());
    Element out(e.pres());
    for (const auto& [w, c] : e.terms()) {
        Element sub = rw.nf_word(w);
        sub.scale(c);
        out += sub;
    }
    return out;
}

TensorElement normal_form(const TensorElement& e) {
    if (e.is_zero()) return e;
    Rewriter rw(*e.pres());
    TensorElement out(e.pres());
    for (const auto& [k, c] : e.terms()) {
        TensorElement t = TensorElement::tensor(rw.nf_word(k.first), rw.nf_word(k.second));
        t.scale(c);
        out += t;
    }
    return out;
}

Tensor3 normal_form(const Tensor3& e) {
    if (e.is_zero()) return e;
    Rewriter rw(*e.pres());
    Tensor3 out(e.pres());
    for (const auto& [k, c] : e.terms()) {
        Element a = rw.nf_word(k[0]), b = rw.nf_word(k[1]), d = rw.nf_word(k[2]);
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                for (const auto& [wd, cd] : d.terms())
                    out.add_term({wa, wb, wd}, c * ca * cb * cd);
    }
    return out;
}

Element mul(const Element& a, const Element& b) { return normal_form(a.concat_mul(b)); }

TensorElement mul(const TensorElement& a, const TensorElement& b) {
    return normal_form(a.concat_mul(b));
}

Element commutator(const Element& a, const Element& b) {
    return normal_form(a.concat_mul(b) - b.concat_mul(a));
}

Report check_confluence(const PresPtr& p, unsigned threads) {
    const Presentation& pr = *p;
    const size_t n = pr.alphabet_size();
    std::vector<Word> words;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = 0; b < n; ++b) {
            words.push_back({a, b});
            for (Letter c = 0; c < n; ++c) words.push_back({a, b, c});
        }

    std::vector<std::optional<CheckResult>> results(words.size());
    parallel_for(words.size(), threads, [&](size_t i) {
        const Word& w = words[i];
        auto redexes = find_redexes(pr, w);
        if (redexes.size() < 2) return;  // no ambiguity
        std::string id = "confluence/";
        for (size_t k = 0; k < w.size(); ++k) id += (k ? "." : "") + pr.info(w[k]).name;
        std::optional<Element> first;
        for (const auto& rd : redexes) {
            Element nf = normal_form(apply_redex(pr, w, rd));
            if (!first) {
                first = nf;
            } else if (*first != nf) {
                results[i] = CheckResult::fail(
                    id, {to_json(*first), to_json(nf), to_json(normal_form(*first - nf))});
                return;
            }
        }
        results[i] = CheckResult::ok(id);
    });

    Report rep;
    rep.presentation = presentation_descriptor(pr);
    for (auto& r : results)
        if (r) rep.add(std::move(*r));
    rep.sort_checks();
    return rep;
}

}  // namespace ckalg
