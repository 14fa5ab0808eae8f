#pragma once

// Biliaison types lambda = (k_1 < ... < k_u): conversion to and from
// h-vectors, s-duality, gap decomposition, the finite families of s-minimal
// types and s-basic h-vectors, and linkage of h-vectors by complete
// intersections.
//
// lambda is the numerical character of Gruson-Peskine in disguise:
// n_j - j = k_{s-j} for j = 0..s-1. Nothing here consumes n_j directly.

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "error.hpp"
#include "hvector.hpp"

namespace acm {

class BiliaisonType {
public:
    BiliaisonType() = default;

    static BiliaisonType from(std::vector<Int> ks) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] < 1) throw Error(ErrorCode::InvalidLambda, "entries must be positive");
            if (i && ks[i] <= ks[i - 1]) throw Error(ErrorCode::InvalidLambda, "entries must increase strictly");
        }
        BiliaisonType l;
        l.ks_ = std::move(ks);
        return l;
    }
    static BiliaisonType from(std::initializer_list<Int> ks) { return from(std::vector<Int>(ks)); }

    const std::vector<Int>& ks() const noexcept { return ks_; }
    Int u() const noexcept { return static_cast<Int>(ks_.size()); }
    bool empty() const noexcept { return ks_.empty(); }
    Int front() const { return ks_.front(); }
    Int back() const { return ks_.back(); }
    Int operator[](std::size_t i) const { return ks_[i]; }

    Int degree() const {
        Checked d = 0;
        for (Int k : ks_) d += k;
        return d.get();
    }

    friend bool operator==(const BiliaisonType&, const BiliaisonType&) = default;

private:
    std::vector<Int> ks_;
};

/// Canonical enumeration order: degree first, then lexicographic.
inline bool canonical_less(const BiliaisonType& a, const BiliaisonType& b) {
    const Int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.ks() < b.ks();
}

inline bool canonical_less(const HVector& a, const HVector& b) {
    const Int da = invariants(a).d, db = invariants(b).d;
    if (da != db) return da < db;
    return a.values() < b.values();
}

/// "a precedes b": every entry of a is below every entry of b.
inline bool precedes(const BiliaisonType& a, const BiliaisonType& b) {
    return a.empty() || b.empty() || a.back() < b.front();
}

inline BiliaisonType concat(const BiliaisonType& a, const BiliaisonType& b) {
    if (!precedes(a, b)) throw Error(ErrorCode::NotOrdered, "max(lambda) must be below min(mu)");
    std::vector<Int> ks = a.ks();
    ks.insert(ks.end(), b.ks().begin(), b.ks().end());
    return BiliaisonType::from(std::move(ks));
}

inline BiliaisonType lambda_from_h(const HVector& h) {
    const Int s = invariants(h).s;
    std::vector<Int> ks;
    for (Int i = 1; i <= s; ++i) {
        Int k = 0;
        for (Int v : h.values())
            if (v >= s + 1 - i) ++k;
        ks.push_back(k);
    }
    return BiliaisonType::from(std::move(ks));
}

/// Row i of the dot diagram is a run of k_i dots at height s+1-i starting
/// at column s-i; h(n) counts the dots in column n.
inline HVector h_from_lambda(const BiliaisonType& lam) {
    const Int s = lam.u();
    Int width = 0;
    for (Int i = 1; i <= s; ++i) width = std::max(width, s - i + lam[static_cast<std::size_t>(i - 1)]);
    std::vector<Int> h(static_cast<std::size_t>(width), 0);
    for (Int i = 1; i <= s; ++i) {
        const Int start = s - i, k = lam[static_cast<std::size_t>(i - 1)];
        for (Int n = start; n < start + k; ++n) ++h[static_cast<std::size_t>(n)];
    }
    return HVector::parse(h);
}

inline CurveInvariants lambda_invariants(const BiliaisonType& lam) {
    if (lam.empty()) throw Error(ErrorCode::EmptyLambda, "lambda_invariants needs a non-empty type");
    const Int s = lam.u();
    Checked d = 0, g = 1;
    for (Int i = 1; i <= s; ++i) {
        const Int k = lam[static_cast<std::size_t>(i - 1)];
        d += k;
        // k(k-3) is always even
        g += Checked{(Checked{k} * (k - 3)).get() / 2} + Checked{s - i} * k;
    }
    CurveInvariants inv;
    inv.d = d.get();
    inv.g = g.get();
    inv.s = s;
    inv.t = lam.front() + s - 1;
    inv.e = Speciality::of(lam.back() - 3);
    return inv;
}

struct GapPiece {
    BiliaisonType lambda;
    CurveInvariants invariants;
};

struct GapDecomposition {
    std::vector<GapPiece> pieces;

    std::size_t r() const noexcept { return pieces.size(); }
};

/// Split wherever consecutive entries differ by 3 or more.
inline GapDecomposition gap_decomposition(const BiliaisonType& lam) {
    if (lam.empty()) throw Error(ErrorCode::EmptyLambda, "gap decomposition of the empty type");
    GapDecomposition out;
    std::vector<Int> cur{lam.front()};
    auto flush = [&] {
        auto piece = BiliaisonType::from(cur);
        out.pieces.push_back({piece, lambda_invariants(piece)});
        cur.clear();
    };
    for (std::size_t i = 1; i < lam.ks().size(); ++i) {
        if (lam[i] - lam[i - 1] >= 3) flush();
        cur.push_back(lam[i]);
    }
    flush();
    return out;
}

inline bool is_s_minimal(const BiliaisonType& lam, Int s) { return lam.empty() || lam.back() < s; }

inline void require_s_minimal(const BiliaisonType& lam, Int s) {
    if (s < 1) throw Error(ErrorCode::OutOfRange, "s must be >= 1");
    if (!is_s_minimal(lam, s))
        throw Error(ErrorCode::NotSMinimal, "max(lambda) = " + std::to_string(lam.back()) +
                                                " is not below s = " + std::to_string(s));
}

inline BiliaisonType dual_lambda(const BiliaisonType& lam, Int s) {
    require_s_minimal(lam, s);
    std::vector<Int> ks;
    for (auto it = lam.ks().rbegin(); it != lam.ks().rend(); ++it) ks.push_back(s - *it);
    return BiliaisonType::from(std::move(ks));
}

/// All subsets of {1..s-1}; there are 2^(s-1) of them.
inline std::vector<BiliaisonType> enumerate_s_minimal(Int s) {
    if (s < 1 || s > 30) throw Error(ErrorCode::OutOfRange, "s must be in [1, 30]");
    std::vector<BiliaisonType> out;
    const Int m = s - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Int> ks;
        for (Int k = 1; k <= m; ++k)
            if (mask & (std::uint64_t{1} << (k - 1))) ks.push_back(k);
        out.push_back(BiliaisonType::from(std::move(ks)));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
    return out;
}

/// Insert s (type A) or the string s, s-1 (type B) after the initial ramp
/// 1..s-1 of an (s-1)-basic h-vector.
inline HVector insert_type_a(const HVector& h, Int s) {
    std::vector<Int> v = h.values();
    v.insert(v.begin() + (s - 1), s);
    return HVector::parse(v);
}

inline HVector insert_type_b(const HVector& h, Int s) {
    std::vector<Int> v = h.values();
    v.insert(v.begin() + (s - 1), {s, s - 1});
    return HVector::parse(v);
}

inline std::vector<HVector> enumerate_s_basic(Int s) {
    if (s < 1 || s > 30) throw Error(ErrorCode::OutOfRange, "s must be in [1, 30]");
    std::vector<HVector> cur{HVector::parse({1})};
    for (Int level = 2; level <= s; ++level) {
        std::vector<HVector> next;
        next.reserve(cur.size() * 2);
        for (const auto& h : cur) {
            next.push_back(insert_type_a(h, level));
            next.push_back(insert_type_b(h, level));
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
    return cur;
}

/// h-vector of a complete intersection of surfaces of degrees a and b.
inline HVector ci_hvector(Int a, Int b) {
    if (a < 1 || b < 1) throw Error(ErrorCode::OutOfRange, "complete intersection degrees must be >= 1");
    std::vector<Int> h(static_cast<std::size_t>(a + b - 1), 0);
    for (Int n = 0; n <= a + b - 2; ++n)
        h[static_cast<std::size_t>(n)] = std::min({n + 1, a, b, a + b - 1 - n});
    return HVector::parse(h);
}

/// h-vector of the curve residual to `h` in a complete intersection (a, b):
/// h_res(n) = h_Y(n) - h(a+b-2-n). The result is validated as an h-vector,
/// which is the arithmetic shadow of "h fits in the complete intersection".
inline HVector link_hvector(const HVector& h, Int a, Int b) {
    const HVector y = ci_hvector(a, b);
    const Int top = a + b - 2;
    if (h.length() - 1 > top)
        throw Error(ErrorCode::NotLinkable, "h is supported beyond a+b-2 = " + std::to_string(top));
    std::vector<Int> out(static_cast<std::size_t>(top + 1));
    for (Int n = 0; n <= top; ++n) out[static_cast<std::size_t>(n)] = y(n) - h(top - n);
    try {
        return HVector::parse(out);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotLinkable, std::string("residual is not an h-vector (") + e.what() + ")");
    }
}

// Text form: "(1,4)", "()" for the empty type.

inline BiliaisonType parse_lambda_text(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw Error(ErrorCode::Syntax, "biliaison type must look like (k1,k2,...)");
    return BiliaisonType::from(parse_int_list(text.substr(1, text.size() - 2)));
}

inline std::string format_lambda(const BiliaisonType& lam) { return "(" + join_ints(lam.ks()) + ")"; }

} // namespace acm
