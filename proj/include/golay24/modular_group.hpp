// Exact PSL(2,Z) arithmetic: canonical 2x2 integer matrices modulo sign,
// word decomposition over the generators S and T, the abelianization onto
// Z/6, commutator-subgroup membership, and the two index-6 coset actions.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "golay24/report.hpp"

namespace golay24 {

/// An element of PSL(2,Z): an integer matrix [[a,b],[c,d]] with ad-bc = 1,
/// stored so that the first nonzero entry of (a,b,c) is positive. With that
/// sign rule M and -M collapse to the same representative, so entrywise
/// equality is equality in PSL(2,Z).
///
/// Entries are checked 64-bit integers; any overflow during construction or
/// composition throws std::overflow_error.
class GroupElement {
public:
    /// Identity element.
    GroupElement() : a_(1), b_(0), c_(0), d_(1) {}

    /// Builds a canonical element from raw entries. Throws
    /// std::invalid_argument unless ad-bc = 1.
    static GroupElement from_entries(std::int64_t a, std::int64_t b, std::int64_t c,
                                     std::int64_t d);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    GroupElement inverse() const;

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    std::string to_string() const;  // "[[a,b],[c,d]]"

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;

    // Standard generators of PSL(2,Z) and of its commutator subgroup.
    static GroupElement identity() { return {}; }
    static GroupElement S() { return from_entries(0, 1, -1, 0); }
    static GroupElement T() { return from_entries(1, 1, 0, 1); }
    static GroupElement A() { return from_entries(1, 1, 1, 2); }
    static GroupElement B() { return from_entries(1, -1, -1, 2); }

private:
    GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
        : a_(a), b_(b), c_(c), d_(d) {}

    std::int64_t a_, b_, c_, d_;
};

/// Canonical product g*h.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Letters of words over the generating set {S, T, T^-1}.
enum class Letter : std::uint8_t { S, T, TInv };

using Word = std::vector<Letter>;

/// Left-to-right product of the letter matrices; the empty word evaluates to
/// the identity.
GroupElement evaluate_word(const Word& w);

/// Writes g as a word in S, T, T^-1 by Euclidean reduction on the first
/// column: each round applies T^-q then S, which strictly decreases |c|.
/// Postcondition: evaluate_word(decompose(g)) == g.
Word decompose(const GroupElement& g);

/// Value in the abelianized quotient PSL(2,Z)^ab = Z/6, realized as <T> mod
/// T^6. The letter weights are theta(T)=1, theta(T^-1)=5, theta(S)=3;
/// theta(S) is forced to 3 because S is not a commutator and 2*theta(S)=0.
class AbelianClass {
public:
    AbelianClass() : value_(0) {}
    explicit AbelianClass(int v) : value_(((v % 6) + 6) % 6) {}

    int value() const { return value_; }

    friend AbelianClass operator+(AbelianClass x, AbelianClass y) {
        return AbelianClass(x.value_ + y.value_);
    }
    friend bool operator==(const AbelianClass&, const AbelianClass&) = default;

private:
    int value_;
};

/// theta weight of a single letter: 1, 5, or 3.
int letter_weight(Letter l);

/// Image of g in Z/6 (independent of the word chosen for g).
AbelianClass abelianization(const GroupElement& g);

/// True iff g lies in the commutator subgroup, i.e. abelianization(g) = 0.
bool is_in_commutator(const GroupElement& g);

/// The two index-6 subgroups whose coset actions are supported.
enum class Subgroup : std::uint8_t {
    Commutator,            // commutator subgroup of PSL(2,Z)
    PrincipalCongruence2,  // principal congruence subgroup of level 2
};

/// A bijection of the 6 cosets of one of the supported subgroups.
struct CosetPermutation {
    std::array<int, 6> images{};  // images[i] = image of coset i
    Subgroup subgroup = Subgroup::Commutator;

    friend bool operator==(const CosetPermutation&, const CosetPermutation&) = default;
};

/// The permutation induced by g on the 6 cosets.
///
/// Commutator subgroup: cosets are the abelianization values 0..5 and g acts
/// by adding theta(g) mod 6. Level-2 congruence subgroup: cosets are the 6
/// elements of SL(2,F2) (the subgroup is the kernel of reduction mod 2),
/// enumerated in a fixed order, and g acts by left multiplication mod 2.
CosetPermutation coset_permutation(const GroupElement& g, Subgroup subgroup);

/// Composition p∘q: apply q first, then p, so that
/// coset_permutation(g*h) == compose(coset_permutation(g), coset_permutation(h)).
CosetPermutation compose(const CosetPermutation& p, const CosetPermutation& q);

/// Multiset of cycle lengths, sorted descending; always sums to 6.
std::vector<int> cycle_type(const CosetPermutation& p);

/// Checks the defining relations and the commutator-subgroup identities
/// linking S, T to the generators A, B:
///   S^2 = (ST)^3 = (TS)^3 = I,
///   ST = B(TS) = (TS)A,
///   (ST)^2 = A^-1 (TS)^2 = (TS)^2 B^-1,
///   A and B lie in the commutator subgroup.
Report verify_group_identities();

}  // namespace golay24
