// Presentations: generator alphabet with a total letter order and weights,
// commutator table, extra pair rules (unit and matrix-inverse relations) and
// generator-level Hopf data.  Builders cover the deformed Cayley-Klein
// family in the old and new basis, plus the change of basis between them.
#pragma once

#include "ckalg/element.hpp"
#include "ckalg/letter.hpp"
#include "ckalg/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ckalg {

enum class BasisKind : uint8_t { Old, New };

enum class PresentationKind : uint8_t { CayleyKlein, HeisenbergWeyl, DualHeisenbergWeyl };

struct LetterInfo {
    LetterId id;
    std::string name;   // canonical display name, e.g. "J(0,3)", "X(1,2)", "Z"
    int weight = 1;
    Sector sector = Sector::XSector;
    bool central = false;  // commutes with every letter (enables at-distance rules)
};

// A non-commutator relation u.v -> rhs on a two-letter window, e.g.
// Z.Z^-1 -> 1 or the matrix-inverse eliminations of the dual algebra.
struct PairRule {
    Letter first = 0;
    Letter second = 0;
    Element rhs;
    bool at_distance = false;  // may fire on non-adjacent positions (central letters)
};

// A single scripted table edit for the mutation-robustness harness.
struct Mutation {
    LetterId g, h;       // generator pair, any order
    int term_index = -1; // index into the canonical term order of comm(g,h); -1 = all terms
    Rat factor = Rat(-1);
};

struct RewriteCache;

struct Presentation {
    PresentationKind kind = PresentationKind::CayleyKlein;
    int dim = 0;             // N for CK/HW; matrix size n for the dual
    std::vector<Rat> omega;  // omega_2..omega_N (CK/HW); empty for the dual
    BasisKind basis = BasisKind::Old;
    int split = 1;           // a
    int mode = kExact;       // kExact or truncation order K

    std::vector<LetterInfo> letters;        // indexed by rank
    std::map<LetterId, Letter> rank_of_id;
    std::map<std::string, Letter> rank_of_name;

    // [g_u, g_v] for rank pairs u < v; every canonical pair is present.
    std::map<std::pair<Letter, Letter>, Element> comm;
    std::vector<PairRule> pair_rules;

    // Hopf data on generators (gamma empty for bialgebra-only presentations).
    std::map<Letter, TensorElement> delta;
    std::map<Letter, Scalar> epsilon;
    std::map<Letter, Element> gamma;
    bool has_antipode = false;

    // Rewrite memoization; mutable shared state guarded inside RewriteCache.
    std::shared_ptr<RewriteCache> cache;

    // -- lookups ---------------------------------------------------------
    Letter rank(const LetterId& id) const;
    bool has_letter(const LetterId& id) const { return rank_of_id.count(id) != 0; }
    const LetterInfo& info(Letter l) const { return letters.at(l); }
    size_t alphabet_size() const { return letters.size(); }

    // Bracket [g_u, g_v] for arbitrary rank pair (antisymmetric lookup).
    Element bracket(Letter u, Letter v) const;

    Scalar scalar(const Rat& r) const { return Scalar(mode, r); }
    Scalar scalar_one() const { return Scalar::one(mode); }
    Element unit_element() const { return Element::unit(this); }
    Element gen(const LetterId& id) const { return Element::letter(this, rank(id)); }

    // The group-like exponential as an element: the Z letter in exact mode,
    // its series to order K in truncated mode.  sign=-1 gives Z, +1 gives Z^-1.
    Element exp_element(int sign_of_exponent) const;

    int word_weight(const Word& w) const;
};

using PresPtr = std::shared_ptr<const Presentation>;

// omega_{ab} = prod_{s=a+1}^{b} omega_s with omega_1 = 0.
Rat omega_prod(const Presentation& p, int a, int b);

// Sector of a generator under split a (independent of the presentation's own split).
Sector sector_of(const Presentation& p, const LetterId& id, int split);

// Variant readings of the antipode of the J-sector boosts in the new basis
// (last sum of the printed J-sector antipode): letters as J-sector vs
// X-sector, with or without the omega_{sN} factor.
struct AntipodeVariant {
    bool x_letters = false;  // restrict the last sum to X-sector letters (drops it)
    bool omega_factor = true;
    bool operator==(const AntipodeVariant&) const = default;
};

struct BuildOptions {
    std::vector<Mutation> mutations;
    AntipodeVariant antipode_variant;  // defaults to the J/with-omega reading
    bool certify_exp_rules = true;     // check Z-rules against the truncated series oracle
};

// The full deformed CK presentation U_lambda(iso_{omega_2..omega_N}(N)).
// basis Old = the paper's original generators; New requires a valid split
// (split > 1 requires omega_split = 0).
PresPtr build_presentation(int N, std::vector<Rat> omega, BasisKind basis, int split,
                           int mode, const BuildOptions& opts = {});

// hat-J_{iN} = lambda * sum_{s=1..a-1} omega_{iN} g_{0s} g_{si}, an element of
// the old-basis presentation; zero whenever omega_{iN} = 0 (in particular for
// i < a and for a = N) and for a = 1.
Element hat_j(const PresPtr& p_old, int i);

struct CheckResult;
struct Report;

// Recomputes the new-basis presentation from p_old through the substitution
// J_iN -> J_iN - hat-J_iN, verifying the two change-of-basis lemmas and that
// the substituted table and Hopf data match the pattern-generated new-basis
// presentation.  Throws verification_error carrying the failed checks on
// mismatch.
PresPtr change_basis(const PresPtr& p_old, Report* lemma_report = nullptr);

struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckalg
