#pragma once

// The liaison-invariant form phi(D,E) = (D.H)(E.H) - s(D.E) on the Picard
// group of a smooth degree-s surface, evaluated on ACM curves through their
// (d, g) or their biliaison type, together with the lower bounds on
// q(lambda) = phi(Gamma, Gamma) for s-minimal types.

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biliaison.hpp"
#include "checked.hpp"
#include "error.hpp"

namespace acm {

/// phi(D,D) = d^2 + s(s-4)d - 2s(g-1) for a curve D on a degree-s surface.
inline Int phi_from_dg(Int d, Int g, Int s) {
    if (s < 1) throw Error(ErrorCode::OutOfRange, "s must be >= 1");
    return (sq(d) + Checked{s} * (s - 4) * d - Checked{2} * s * (Checked{g} - 1)).get();
}

/// Closed form of q(lambda) in terms of the entries of lambda.
inline Int q_lambda(const BiliaisonType& lam, Int s) {
    require_s_minimal(lam, s);
    const auto& k = lam.ks();
    Checked q = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        q += Checked{k[i]} * (s - 1) * (s - k[i]);
        for (std::size_t j = i + 1; j < k.size(); ++j) q -= Checked{2} * k[i] * (s - k[j]);
    }
    return q.get();
}

/// q(lambda u mu) from the pieces: q(lambda) + q(mu) - 2 d_lambda d_mu'.
inline Int q_recursion(const BiliaisonType& lam, const BiliaisonType& mu, Int s) {
    require_s_minimal(lam, s);
    require_s_minimal(mu, s);
    if (!precedes(lam, mu)) throw Error(ErrorCode::NotOrdered, "lambda must precede mu");
    const Int d_mu_dual = dual_lambda(mu, s).degree();
    return (Checked{q_lambda(lam, s)} + q_lambda(mu, s) - Checked{2} * lam.degree() * d_mu_dual).get();
}

/// phi(D_i, D_j) = -d_{lambda_i} d_{lambda_j'} for components ordered i < j.
inline Int phi_cross(const BiliaisonType& lam_i, const BiliaisonType& lam_j, Int s) {
    require_s_minimal(lam_i, s);
    require_s_minimal(lam_j, s);
    if (!precedes(lam_i, lam_j)) throw Error(ErrorCode::NotOrdered, "lambda_i must precede lambda_j");
    return (-(Checked{lam_i.degree()} * dual_lambda(lam_j, s).degree())).get();
}

/// Self-intersection C^2 = (d^2 - phi(C,C)) / s.
inline Int c_squared(Int d, Int g, Int s) {
    const Checked num = sq(d) - phi_from_dg(d, g, s);
    if (num.get() % s != 0)
        throw Error(ErrorCode::NotIntegral, "(d, g, s) = (" + std::to_string(d) + ", " + std::to_string(g) +
                                                ", " + std::to_string(s) + ") gives a non-integral C^2");
    return num.get() / s;
}

inline Int delta_s(Int d, Int g, Int s) { return (Checked{2} * g - 2 - Checked{d} * s).get(); }

/// Discriminant c_1^2 - 4c_2 of the Lazarsfeld bundle of a degree-k pencil.
inline Int delta_E(Int d, Int g, Int s, Int k) {
    if (s < 1 || k < 1) throw Error(ErrorCode::OutOfRange, "need s >= 1 and k >= 1");
    return (Checked{delta_s(d, g, s)} + Checked{4} * (Checked{d} - k)).get();
}

/// Virtual number of 4-secant lines of a degree-d genus-g space curve.
inline Rational cayley_number(Int d, Int g) {
    if (d < 1) throw Error(ErrorCode::OutOfRange, "d must be >= 1");
    const Checked twelve_c = (Checked{d} - 2) * sq(Checked{d} - 3) * (Checked{d} - 4) -
                             Checked{6} * g * (sq(d) - Checked{7} * d + 13 - g);
    return Rational(twelve_c.get(), 12);
}

inline bool cayley_positive(Int d, Int g) { return cayley_number(d, g).sign() > 0; }

struct MinimumReport {
    Int value = 0;
    std::vector<BiliaisonType> attained_by;

    friend bool operator==(const MinimumReport&, const MinimumReport&) = default;
};

/// m(f,s): minimum of q over two-element s-minimal types with degree
/// congruent to f or s-f mod s, in closed form with its minimizers.
inline MinimumReport m_f_s(Int f, Int s) {
    if (s < 5 || f < 0 || f >= s) throw Error(ErrorCode::OutOfRange, "m(f,s) needs s >= 5 and 0 <= f < s");
    const Checked base = Checked{f} * (s - 1) * (s - f);
    MinimumReport r;
    if ((3 <= f && f <= s - f) || f == s - 2 || f == s - 1) {
        r.value = (base + Checked{2} * s * (f - 2)).get();
        r.attained_by = {BiliaisonType::from({1, f - 1}), BiliaisonType::from({s - f + 1, s - 1})};
    } else {
        r.value = (base + Checked{2} * s * (s - f - 2)).get();
        r.attained_by = {BiliaisonType::from({1, s - f - 1}), BiliaisonType::from({f + 1, s - 1})};
    }
    std::sort(r.attained_by.begin(), r.attained_by.end(), [](auto& a, auto& b) { return canonical_less(a, b); });
    r.attained_by.erase(std::unique(r.attained_by.begin(), r.attained_by.end()), r.attained_by.end());
    return r;
}

/// Exhaustive counterpart of m_f_s over all two-element s-minimal types.
inline MinimumReport m_f_s_brute(Int f, Int s) {
    if (s < 2 || f < 0 || f >= s) throw Error(ErrorCode::OutOfRange, "need s >= 2 and 0 <= f < s");
    MinimumReport r;
    bool found = false;
    for (Int h = 1; h < s; ++h)
        for (Int k = h + 1; k < s; ++k) {
            const Int res = (h + k) % s;
            if (res != f && res != (s - f) % s) continue;
            const auto lam = BiliaisonType::from({h, k});
            const Int q = q_lambda(lam, s);
            if (!found || q < r.value) {
                r.value = q;
                r.attained_by.clear();
                found = true;
            }
            if (q == r.value) r.attained_by.push_back(lam);
        }
    if (!found) throw Error(ErrorCode::OutOfRange, "no two-element type in this residue class");
    std::sort(r.attained_by.begin(), r.attained_by.end(), [](auto& a, auto& b) { return canonical_less(a, b); });
    return r;
}

/// Lower bound for q(lambda) over s-minimal lambda with u >= 2 and d = f mod s.
inline Int cbound(Int f, Int s) {
    if (s < 3 || f < 0 || f >= s) throw Error(ErrorCode::OutOfRange, "cbound needs s >= 3 and 0 <= f < s");
    const Checked S = s;
    if (f == 0) return (Checked{2} * S * (S - 2)).get();
    if (f == 1 || f == s - 1) return (Checked{3} * sq(S) - Checked{8} * S + 1).get();
    return (Checked{2} * sq(S) - Checked{4} * S + 4).get();
}

/// Which closed band of the trichotomy q <= (s-1)^2 < q <= s^2 < q <= (s+1)^2 q falls in.
enum class SmallQBand { UpToSMinus1Sq, UpToSSq, UpToSPlus1Sq };

constexpr std::string_view band_name(SmallQBand b) noexcept {
    switch (b) {
    case SmallQBand::UpToSMinus1Sq: return "le_(s-1)^2";
    case SmallQBand::UpToSSq: return "le_s^2";
    case SmallQBand::UpToSPlus1Sq: return "le_(s+1)^2";
    }
    return "?";
}

struct SmallQEntry {
    BiliaisonType lambda;
    Int q = 0;
    SmallQBand band = SmallQBand::UpToSPlus1Sq;

    friend bool operator==(const SmallQEntry&, const SmallQEntry&) = default;
};

/// Every s-minimal lambda with q(lambda) <= (s+1)^2, in canonical order.
inline std::vector<SmallQEntry> small_q_classification(Int s) {
    if (s < 4) throw Error(ErrorCode::OutOfRange, "small-q classification needs s >= 4");
    std::vector<SmallQEntry> out;
    const Int lo = (s - 1) * (s - 1), mid = s * s, hi = (s + 1) * (s + 1);
    for (const auto& lam : enumerate_s_minimal(s)) {
        const Int q = q_lambda(lam, s);
        if (q > hi) continue;
        const SmallQBand band = q <= lo ? SmallQBand::UpToSMinus1Sq
                                : q <= mid ? SmallQBand::UpToSSq
                                           : SmallQBand::UpToSPlus1Sq;
        out.push_back({lam, q, band});
    }
    return out;
}

/// The catalogue of s-minimal types with q <= (s+1)^2 for s >= 5, written
/// out case by case (empty; (1),(s-1); (2),(s-2) for s <= 7; (3) for s = 6;
/// (1,s-1) for s = 5,6; (1,3),(2,4),(1,2),(3,4) for s = 5).
inline std::vector<BiliaisonType> small_q_catalogue(Int s) {
    if (s < 5) throw Error(ErrorCode::OutOfRange, "the catalogue is stated for s >= 5");
    std::vector<BiliaisonType> out{BiliaisonType{}, BiliaisonType::from({1}), BiliaisonType::from({s - 1})};
    if (s <= 7) {
        out.push_back(BiliaisonType::from({2}));
        out.push_back(BiliaisonType::from({s - 2}));
    }
    if (s == 6) out.push_back(BiliaisonType::from({3}));
    if (s == 5 || s == 6) out.push_back(BiliaisonType::from({1, s - 1}));
    if (s == 5) {
        for (auto l : {BiliaisonType::from({1, 3}), BiliaisonType::from({2, 4}), BiliaisonType::from({1, 2}),
                       BiliaisonType::from({3, 4})})
            out.push_back(l);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return canonical_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace acm
