#include "golay24/modular_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace golay24 {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("GroupElement: entry overflow in multiplication");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("GroupElement: entry overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("GroupElement: entry overflow in subtraction");
    return r;
}

// Sign canonicalization: first nonzero of (a,b,c) positive. Since ad-bc = 1,
// a = 0 forces b != 0, so the c case is never reached; it is kept so the rule
// is total on arbitrary integer quadruples.
bool needs_flip(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a != 0) return a < 0;
    if (b != 0) return b < 0;
    return c < 0;
}

// Nearest integer to a/c (ties resolved toward truncation); chosen so that
// |a - q*c| <= |c|/2, which makes the Euclidean reduction in decompose()
// strictly decrease |c|.
std::int64_t nearest_quotient(std::int64_t a, std::int64_t c) {
    std::int64_t q = a / c;
    std::int64_t best = q;
    std::int64_t best_rem = std::llabs(checked_sub(a, checked_mul(q, c)));
    for (std::int64_t cand : {q - 1, q + 1}) {
        std::int64_t rem = std::llabs(checked_sub(a, checked_mul(cand, c)));
        if (rem < best_rem) {
            best = cand;
            best_rem = rem;
        }
    }
    return best;
}

void append_t_power(Word& w, std::int64_t q) {
    Letter l = q > 0 ? Letter::T : Letter::TInv;
    for (std::int64_t i = 0; i < std::llabs(q); ++i) w.push_back(l);
}

}  // namespace

GroupElement GroupElement::from_entries(std::int64_t a, std::int64_t b, std::int64_t c,
                                        std::int64_t d) {
    std::int64_t det = checked_sub(checked_mul(a, d), checked_mul(b, c));
    if (det != 1)
        throw std::invalid_argument("GroupElement: determinant must be 1, got " +
                                    std::to_string(det));
    if (needs_flip(a, b, c)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    return GroupElement(a, b, c, d);
}

GroupElement GroupElement::inverse() const {
    return from_entries(d_, -b_, -c_, a_);
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    std::int64_t a = checked_add(checked_mul(g.a(), h.a()), checked_mul(g.b(), h.c()));
    std::int64_t b = checked_add(checked_mul(g.a(), h.b()), checked_mul(g.b(), h.d()));
    std::int64_t c = checked_add(checked_mul(g.c(), h.a()), checked_mul(g.d(), h.c()));
    std::int64_t d = checked_add(checked_mul(g.c(), h.b()), checked_mul(g.d(), h.d()));
    return GroupElement::from_entries(a, b, c, d);
}

GroupElement evaluate_word(const Word& w) {
    GroupElement acc;
    for (Letter l : w) {
        switch (l) {
            case Letter::S: acc = compose(acc, GroupElement::S()); break;
            case Letter::T: acc = compose(acc, GroupElement::T()); break;
            case Letter::TInv: acc = compose(acc, GroupElement::T().inverse()); break;
        }
    }
    return acc;
}

Word decompose(const GroupElement& g) {
    Word w;
    std::int64_t a = g.a(), b = g.b(), c = g.c(), d = g.d();
    while (c != 0) {
        std::int64_t q = nearest_quotient(a, c);
        // Peel T^q S off the left: g = T^q * S * (S^-1 T^-q g).
        append_t_power(w, q);
        w.push_back(Letter::S);
        std::int64_t a1 = checked_sub(a, checked_mul(q, c));
        std::int64_t b1 = checked_sub(b, checked_mul(q, d));
        // S^-1 * [[a1,b1],[c,d]] = [[c,d],[-a1,-b1]]
        std::int64_t na = c, nb = d, nc = -a1, nd = -b1;
        if (std::llabs(nc) >= std::llabs(c))
            throw std::logic_error("decompose: |c| failed to decrease");
        a = na;
        b = nb;
        c = nc;
        d = nd;
    }
    // Remainder is +-T^k with k = a*b (a = d = +-1).
    append_t_power(w, checked_mul(a, b));
    return w;
}

int letter_weight(Letter l) {
    switch (l) {
        case Letter::S: return 3;
        case Letter::T: return 1;
        case Letter::TInv: return 5;
    }
    throw std::invalid_argument("letter_weight: bad letter");
}

AbelianClass abelianization(const GroupElement& g) {
    int sum = 0;
    for (Letter l : decompose(g)) sum = (sum + letter_weight(l)) % 6;
    return AbelianClass(sum);
}

bool is_in_commutator(const GroupElement& g) {
    return abelianization(g).value() == 0;
}

namespace {

// The 6 elements of SL(2,F2), listed by their 4-bit encoding a<<3|b<<2|c<<1|d
// in increasing order. Index into this table names a coset of the level-2
// congruence subgroup.
constexpr std::array<std::array<int, 4>, 6> kSl2F2 = {{
    {0, 1, 1, 0},  //  6
    {0, 1, 1, 1},  //  7
    {1, 0, 0, 1},  //  9
    {1, 0, 1, 1},  // 11
    {1, 1, 0, 1},  // 13
    {1, 1, 1, 0},  // 14
}};

int sl2f2_index(int a, int b, int c, int d) {
    for (int i = 0; i < 6; ++i) {
        const auto& m = kSl2F2[i];
        if (m[0] == a && m[1] == b && m[2] == c && m[3] == d) return i;
    }
    throw std::logic_error("sl2f2_index: matrix not in SL(2,F2)");
}

int mod2(std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace

CosetPermutation coset_permutation(const GroupElement& g, Subgroup subgroup) {
    CosetPermutation p;
    p.subgroup = subgroup;
    switch (subgroup) {
        case Subgroup::Commutator: {
            int t = abelianization(g).value();
            for (int i = 0; i < 6; ++i) p.images[i] = (i + t) % 6;
            return p;
        }
        case Subgroup::PrincipalCongruence2: {
            int ga = mod2(g.a()), gb = mod2(g.b()), gc = mod2(g.c()), gd = mod2(g.d());
            for (int i = 0; i < 6; ++i) {
                const auto& m = kSl2F2[i];
                int a = (ga * m[0] + gb * m[2]) % 2;
                int b = (ga * m[1] + gb * m[3]) % 2;
                int c = (gc * m[0] + gd * m[2]) % 2;
                int d = (gc * m[1] + gd * m[3]) % 2;
                p.images[i] = sl2f2_index(a, b, c, d);
            }
            return p;
        }
    }
    throw std::invalid_argument("coset_permutation: invalid subgroup tag");
}

CosetPermutation compose(const CosetPermutation& p, const CosetPermutation& q) {
    if (p.subgroup != q.subgroup)
        throw std::invalid_argument("compose: mismatched subgroup tags");
    CosetPermutation r;
    r.subgroup = p.subgroup;
    for (int i = 0; i < 6; ++i) r.images[i] = p.images[q.images[i]];
    return r;
}

std::vector<int> cycle_type(const CosetPermutation& p) {
    std::array<bool, 6> seen{};
    std::vector<int> lengths;
    for (int i = 0; i < 6; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p.images[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

Report verify_group_identities() {
    Report report;
    const auto S = GroupElement::S();
    const auto T = GroupElement::T();
    const auto A = GroupElement::A();
    const auto B = GroupElement::B();
    const auto ST = compose(S, T);
    const auto TS = compose(T, S);
    const auto ST2 = compose(ST, ST);
    const auto TS2 = compose(TS, TS);

    auto check = [&](std::string name, std::string claim, const GroupElement& lhs,
                     const GroupElement& rhs) {
        bool ok = lhs == rhs;
        report.add(std::move(name), std::move(claim), ok,
                   ok ? "" : lhs.to_string() + " != " + rhs.to_string());
    };

    check("order-s", "S^2 = I", compose(S, S), GroupElement::identity());
    check("order-st", "(ST)^3 = I", compose(ST2, ST), GroupElement::identity());
    check("order-ts", "(TS)^3 = I", compose(TS2, TS), GroupElement::identity());
    check("st-bts", "ST = B(TS)", ST, compose(B, TS));
    check("st-tsa", "ST = (TS)A", ST, compose(TS, A));
    check("st2-ainv-ts2", "(ST)^2 = A^-1 (TS)^2", ST2, compose(A.inverse(), TS2));
    check("st2-ts2-binv", "(ST)^2 = (TS)^2 B^-1", ST2, compose(TS2, B.inverse()));

    report.add("a-in-commutator", "A lies in the commutator subgroup", is_in_commutator(A),
               "theta(A) = " + std::to_string(abelianization(A).value()));
    report.add("b-in-commutator", "B lies in the commutator subgroup", is_in_commutator(B),
               "theta(B) = " + std::to_string(abelianization(B).value()));
    return report;
}

}  // namespace golay24
