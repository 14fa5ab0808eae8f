#pragma once

// Gonality of a general ACM curve C on a smooth surface X of minimal degree s.
//
// The Picard lattice of X is modelled as Z[H] + Z[D_1] + ... + Z[D_r] where
// D_i are the components of the minimal link Gamma in |tH - C|, read off the
// gap decomposition of lambda_Gamma. On this lattice we enumerate the divisor
// classes A that can destabilize the Lazarsfeld bundle of a degree-k pencil
// and classify them; the classification decides the gonality.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "biliaison.hpp"
#include "checked.hpp"
#include "error.hpp"
#include "hvector.hpp"
#include "quadform.hpp"

namespace acm {

struct PicardComponent {
    BiliaisonType lambda;
    Int degree = 0; // d_i = D_i . H
    Int q = 0;      // phi(D_i, D_i)
};

class PicardModel {
public:
    Int s = 0, t = 0, d = 0, g = 0;
    HVector linked;             // h-vector of Gamma
    BiliaisonType lambda_gamma; // its biliaison type
    std::vector<PicardComponent> components;

    std::size_t rank() const noexcept { return components.size(); }

    /// phi(D_i, D_j); the diagonal holds q_i.
    Int phi(std::size_t i, std::size_t j) const { return phi_[i][j]; }

    /// b_i = -sum_{j != i} phi(D_i, D_j).
    Int b(std::size_t i) const { return b_[i]; }

    /// q_i - b_i, positive on every model (q_i > 2 b_i).
    Int weight(std::size_t i) const { return components[i].q - b_[i]; }

    /// Class of C as (H-coefficient, D-coefficients) = (t, -1, ..., -1).
    std::pair<Int, std::vector<Int>> c_class() const { return {t, std::vector<Int>(rank(), -1)}; }

    friend PicardModel picard_model(const HVector& h);

private:
    std::vector<std::vector<Int>> phi_;
    std::vector<Int> b_;
};

inline PicardModel picard_model(const HVector& h) {
    const CurveInvariants inv = invariants(h);
    if (inv.s <= 3)
        throw Error(ErrorCode::STooSmall, "s = " + std::to_string(inv.s) + "; curves on quadrics and cubics are not modelled");
    PicardModel m;
    m.s = inv.s;
    m.t = *inv.t;
    m.d = inv.d;
    m.g = inv.g;
    m.linked = link_hvector(h, m.s, m.t);
    m.lambda_gamma = lambda_from_h(m.linked);
    if (!is_s_minimal(m.lambda_gamma, m.s))
        throw Error(ErrorCode::NotSMinimal, "minimal link " + format_lambda(m.lambda_gamma) + " is not s-minimal");

    if (!m.lambda_gamma.empty())
        for (const auto& piece : gap_decomposition(m.lambda_gamma).pieces)
            m.components.push_back({piece.lambda, piece.invariants.d, q_lambda(piece.lambda, m.s)});

    const std::size_t r = m.rank();
    m.phi_.assign(r, std::vector<Int>(r, 0));
    m.b_.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        m.phi_[i][i] = m.components[i].q;
        for (std::size_t j = i + 1; j < r; ++j)
            m.phi_[i][j] = m.phi_[j][i] = phi_cross(m.components[i].lambda, m.components[j].lambda, m.s);
    }
    for (std::size_t i = 0; i < r; ++i) {
        Checked b = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) b -= m.phi_[i][j];
        m.b_[i] = b.get();
    }

    const Int phi_cc = phi_from_dg(m.d, m.g, m.s);
    const Int q_gamma = q_lambda(m.lambda_gamma, m.s);
    if (phi_cc != q_gamma)
        throw Error(ErrorCode::NotLinkable, "phi(C,C) = " + std::to_string(phi_cc) + " but q(lambda_Gamma) = " +
                                                std::to_string(q_gamma));
    return m;
}

/// A = c H + sum a_i D_i together with its degree x = A.H.
struct DivisorClass {
    Int c = 0;
    std::vector<Int> a;
    Int x = 0;

    static DivisorClass make(const PicardModel& m, Int c, std::vector<Int> a) {
        if (a.size() != m.rank()) throw Error(ErrorCode::OutOfRange, "coefficient vector has the wrong length");
        Checked x = Checked{c} * m.s;
        for (std::size_t i = 0; i < a.size(); ++i) x += Checked{a[i]} * m.components[i].degree;
        return {c, std::move(a), x.get()};
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Bilinear phi on coefficient vectors; the H-coefficients never contribute.
inline Int phi_bilinear(const PicardModel& m, const std::vector<Int>& a, const std::vector<Int>& b) {
    Checked v = 0;
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j) v += Checked{a[i]} * b[j] * m.phi(i, j);
    return v.get();
}

/// phi(A,A) = sum a_i^2 (q_i - b_i) - sum_{i<j} (a_i - a_j)^2 phi_ij.
inline Int phi_AA(const PicardModel& m, const std::vector<Int>& a) {
    Checked v = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        v += sq(a[i]) * m.weight(i);
        for (std::size_t j = i + 1; j < m.rank(); ++j) v -= sq(Checked{a[i]} - a[j]) * m.phi(i, j);
    }
    return v.get();
}

/// phi(A,C) = -sum a_i (q_i - b_i).
inline Int phi_AC(const PicardModel& m, const std::vector<Int>& a) {
    Checked v = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) v -= Checked{a[i]} * m.weight(i);
    return v.get();
}

/// phi(A,A+C) = sum (a_i^2 - a_i)(q_i - b_i) - sum_{i<j} (a_i - a_j)^2 phi_ij.
inline Int phi_AAC(const PicardModel& m, const std::vector<Int>& a) {
    Checked v = 0;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        v += (sq(a[i]) - a[i]) * m.weight(i);
        for (std::size_t j = i + 1; j < m.rank(); ++j) v -= sq(Checked{a[i]} - a[j]) * m.phi(i, j);
    }
    return v.get();
}

/// Degree of C . L for the line L forced by case A or B, computed in the lattice.
inline Int secant_degree(const PicardModel& m, const SecantCase& sc) {
    auto c_dot_component = [&](std::size_t i) {
        // phi(C, D_i) = d d_i - s (C.D_i) and phi(C, D_i) = -(q_i - b_i)
        const Checked num = Checked{m.d} * m.components[i].degree + m.weight(i);
        if (num.get() % m.s != 0) throw Error(ErrorCode::NotIntegral, "C.D_i is not an integer");
        return num.get() / m.s;
    };
    if (sc.tag == SecantTag::CaseA) {
        // L = D_1, a line
        if (m.rank() == 0 || m.components.front().lambda != BiliaisonType::from({1}))
            throw Error(ErrorCode::CaseMismatch, "case A but the minimal link has no line component");
        const Int cl = c_dot_component(0);
        if (cl != *sc.l) throw Error(ErrorCode::CaseMismatch, "lattice gives C.L = " + std::to_string(cl));
        return cl;
    }
    if (sc.tag == SecantTag::CaseB) {
        // D_r is a plane curve of degree s-1 and L = H - D_r its residual line
        if (m.rank() == 0 || m.components.back().lambda != BiliaisonType::from({m.s - 1}))
            throw Error(ErrorCode::CaseMismatch, "case B but the minimal link has no plane (s-1)-ic component");
        const Int cl = m.d - c_dot_component(m.rank() - 1);
        if (cl != *sc.l) throw Error(ErrorCode::CaseMismatch, "lattice gives C.L = " + std::to_string(cl));
        return cl;
    }
    throw Error(ErrorCode::CaseMismatch, "no distinguished multisecant line in the generic case");
}

enum class DestabilizerKind { MinusH, LineMinusH, EllipticQuarticPencil, Other };

constexpr std::string_view destabilizer_kind_name(DestabilizerKind k) noexcept {
    switch (k) {
    case DestabilizerKind::MinusH: return "MinusH";
    case DestabilizerKind::LineMinusH: return "LineMinusH";
    case DestabilizerKind::EllipticQuarticPencil: return "EllipticQuarticPencil";
    case DestabilizerKind::Other: return "Other";
    }
    return "?";
}

struct DestabilizerCandidate {
    DivisorClass cls;
    Int phiAA = 0, phiAC = 0, phiAAC = 0;
    DestabilizerKind kind = DestabilizerKind::Other;
    std::optional<std::size_t> component; // the line (or plane curve) for LineMinusH

    friend bool operator==(const DestabilizerCandidate&, const DestabilizerCandidate&) = default;
};

/// A = L - H appears as D_j - H when D_j is a line, and as -D_j when D_j is
/// the plane curve of degree s-1 residual to L.
inline DestabilizerCandidate classify(const PicardModel& m, const DivisorClass& A) {
    DestabilizerCandidate cand{A, phi_AA(m, A.a), phi_AC(m, A.a), phi_AAC(m, A.a), DestabilizerKind::Other, {}};
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < A.a.size(); ++i)
        if (A.a[i] != 0) support.push_back(i);

    if (support.empty()) {
        if (A.x == -m.s) cand.kind = DestabilizerKind::MinusH;
        return cand;
    }
    if (support.size() != 1) return cand;
    const std::size_t j = support.front();
    const auto& lam = m.components[j].lambda;
    if (A.a[j] == 1 && A.c == -1 && lam == BiliaisonType::from({1})) {
        cand.kind = DestabilizerKind::LineMinusH;
        cand.component = j;
    } else if (A.a[j] == -1 && A.c == 0 && lam == BiliaisonType::from({m.s - 1})) {
        cand.kind = DestabilizerKind::LineMinusH;
        cand.component = j;
    } else if (m.s == 4 && m.rank() == 1 && lam == BiliaisonType::from({1, 3}) && A.a[j] == 1 && A.c == -2) {
        cand.kind = DestabilizerKind::EllipticQuarticPencil;
        cand.component = j;
    }
    return cand;
}

/// All classes A with -d/2 < x < 0, x^2 >= phi(A,A) and
/// x^2 + dx + ks >= phi(A,A+C), sorted by (x, c, a).
inline std::vector<DestabilizerCandidate> destabilizer_search(const PicardModel& m, Int k) {
    if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be >= 1");
    const Int delta = delta_E(m.d, m.g, m.s, k);
    if (delta <= 0)
        throw Error(ErrorCode::DeltaNotPositive,
                    "Delta = " + std::to_string(delta) + " <= 0 for k = " + std::to_string(k) + "; Bogomolov does not apply");

    const std::size_t r = m.rank();
    const Int x_max = m.d / 2;
    const Int x_max_sq = (sq(x_max)).get();
    // phi(A,A) >= a_i^2 (q_i - b_i) because every cross term is non-negative.
    std::vector<Int> bound(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Int w = m.weight(i);
        if (w <= 0) throw Error(ErrorCode::OutOfRange, "component weight q_i - b_i must be positive");
        Int a = static_cast<Int>(std::sqrt(static_cast<long double>(x_max_sq / w)));
        while ((Checked{a + 1} * (a + 1)).get() * w <= x_max_sq) ++a;
        while (a > 0 && (Checked{a} * a).get() * w > x_max_sq) --a;
        bound[i] = a;
    }

    std::vector<DestabilizerCandidate> out;
    std::vector<Int> a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = -bound[i];
    const Int d = m.d, s = m.s;
    while (true) {
        Checked base = 0;
        for (std::size_t i = 0; i < r; ++i) base += Checked{a[i]} * m.components[i].degree;
        const Int aa = phi_AA(m, a), aac = phi_AAC(m, a);
        if (aa <= x_max_sq) {
            // smallest c with 2(cs + base) > -d, then walk up while x < 0
            Int c = (-d - 2 * base.get()) / (2 * s) - 1;
            for (; (Checked{c} * s + base).get() < 0; ++c) {
                const Int x = (Checked{c} * s + base).get();
                if (!(2 * x > -d)) continue;
                if (sq(x).get() < aa) continue;
                if ((sq(x) + Checked{d} * x + Checked{k} * s).get() < aac) continue;
                out.push_back(classify(m, DivisorClass{c, a, x}));
            }
        }
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (a[i] < bound[i]) {
                ++a[i];
                break;
            }
            a[i] = -bound[i];
        }
        if (i == r) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        return std::tie(p.cls.x, p.cls.c, p.cls.a) < std::tie(q.cls.x, q.cls.c, q.cls.a);
    });
    return out;
}

struct SDG {
    Int s, d, g;
    friend auto operator<=>(const SDG&, const SDG&) = default;
};

/// (s,d,g) with Delta <= 0 when k = d-5.
inline const std::vector<SDG>& delta_exceptions_k_d_minus_5() {
    static const std::vector<SDG> list{{4, 10, 11}, {5, 15, 26}, {5, 16, 30}, {6, 21, 50}, {6, 22, 55},
                                       {6, 23, 60}, {7, 28, 85}, {7, 29, 91}, {8, 36, 133}};
    return list;
}

/// (s,d,g) with Delta <= 0 when k = d-4; also the cases where finiteness of
/// minimal pencils is left undecided.
inline const std::vector<SDG>& delta_exceptions_k_d_minus_4() {
    static const std::vector<SDG> list{{4, 10, 11}, {4, 11, 14}, {4, 12, 17}, {5, 15, 26}, {5, 16, 30}, {5, 17, 34},
                                       {5, 18, 38}, {6, 21, 50}, {6, 22, 55}, {6, 23, 60}, {6, 24, 65}, {7, 28, 85},
                                       {7, 29, 91}, {7, 30, 97}, {8, 36, 133}, {8, 37, 140}};
    return list;
}

/// (s,d,g) where gon = d - l itself is not established.
inline const std::vector<SDG>& gonality_undecided() {
    static const std::vector<SDG> list{{5, 15, 26}, {5, 16, 30}, {6, 21, 50}, {6, 22, 55},
                                       {6, 23, 60}, {7, 28, 85}, {7, 29, 91}, {8, 36, 133}};
    return list;
}

inline bool contains(const std::vector<SDG>& list, SDG x) {
    return std::find(list.begin(), list.end(), x) != list.end();
}

struct GonalityFlags {
    bool thm1_undecided = false;
    bool thm3_undecided = false;
    bool elliptic_quartic_extra_pencil = false;

    friend bool operator==(const GonalityFlags&, const GonalityFlags&) = default;
};

/// Candidates from a destabilizer search, or nullopt if Delta <= 0 made the
/// search inapplicable.
using CandidateList = std::optional<std::vector<DestabilizerCandidate>>;

struct GonalityReport {
    HVector h;
    CurveInvariants inv;
    SecantCase secant;
    std::optional<Int> gonality;
    std::optional<Int> clifford;
    GonalityFlags flags;
    bool decreasing_type = true;
    std::optional<PicardModel> model;
    CandidateList candidates_at_gon;
    CandidateList candidates_below_gon;
};

inline CandidateList try_destabilizer_search(const PicardModel& m, Int k) {
    if (k < 1 || delta_E(m.d, m.g, m.s, k) <= 0) return std::nullopt;
    return destabilizer_search(m, k);
}

inline GonalityReport predict_gonality(const HVector& h) {
    GonalityReport rep;
    rep.h = h;
    rep.inv = invariants(h);
    rep.decreasing_type = is_decreasing_type(h);
    // Only integral curves (decreasing type) on surfaces of degree >= 4 are covered.
    if (rep.inv.s <= 3 || !rep.decreasing_type) return rep;

    rep.secant = multisecant_case(h);
    const Int gon = rep.inv.d - *rep.secant.l;
    rep.gonality = gon;

    const SDG key{rep.inv.s, rep.inv.d, rep.inv.g};
    rep.flags.thm1_undecided = contains(gonality_undecided(), key);
    rep.flags.thm3_undecided = contains(delta_exceptions_k_d_minus_4(), key);

    rep.model = picard_model(h);
    const auto& m = *rep.model;
    rep.flags.elliptic_quartic_extra_pencil =
        m.s == 4 && m.rank() == 1 && m.components.front().lambda == BiliaisonType::from({1, 3});

    if (!rep.flags.thm3_undecided) rep.clifford = gon - 2;
    rep.candidates_at_gon = try_destabilizer_search(m, gon);
    rep.candidates_below_gon = try_destabilizer_search(m, gon - 1);
    return rep;
}

/// Distinct (s,d,g) of decreasing-type h-vectors with s in [s_min, s_max],
/// d <= d_max and Delta(d, g, s, d - k_offset) <= 0.
inline std::vector<SDG> scan_exceptions(Int s_min, Int s_max, Int d_max, Int k_offset) {
    if (s_min < 4 || s_max < s_min) throw Error(ErrorCode::OutOfRange, "need 4 <= s_min <= s_max");
    if (k_offset != 4 && k_offset != 5) throw Error(ErrorCode::OutOfRange, "k_offset must be 4 or 5");
    if (d_max < s_max * (s_max + 1) / 2) throw Error(ErrorCode::OutOfRange, "d_max is below s_max(s_max+1)/2");
    std::vector<SDG> out;
    for (Int s = s_min; s <= s_max; ++s)
        for (const auto& h : enumerate_decreasing_type(s, d_max)) {
            const auto inv = invariants(h);
            if (inv.d - k_offset < 1) continue;
            if (delta_E(inv.d, inv.g, s, inv.d - k_offset) <= 0) out.push_back({s, inv.d, inv.g});
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace acm
